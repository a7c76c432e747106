#include "weyr/field.hpp"

#include <charconv>

#include "weyr/errors.hpp"

namespace weyr {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Modular inverse by extended Euclid; gcd(a, m) must be 1.
u64 invmod(u64 a, u64 m) {
  std::int64_t t = 0, newt = 1;
  std::int64_t r = (std::int64_t)m, newr = (std::int64_t)(a % m);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("element has no modular inverse");
  if (t < 0) t += (std::int64_t)m;
  return (u64)t;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit integers.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime(u64 p) {
  if (!is_prime_u64(p))
    throw PreconditionError("field modulus " + std::to_string(p) + " is not prime");
  return FieldDescriptor(Kind::Prime, p);
}

std::string FieldDescriptor::str() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(modulus_);
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
  if (text == "rational") return rational();
  constexpr std::string_view kPrefix = "prime:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    std::string_view num = text.substr(kPrefix.size());
    u64 p = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec == std::errc() && ptr == num.data() + num.size()) return prime(p);
  }
  throw ParseError("unrecognized field descriptor '" + std::string(text) + "'");
}

Scalar Scalar::from_integer(long long v, const FieldDescriptor& f) {
  return from_big(BigInt(v), f);
}

Scalar Scalar::from_big(const BigInt& v, const FieldDescriptor& f) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.rat_ = Rational(v);
  } else {
    BigInt r = v % BigInt(f.modulus());
    if (r < 0) r += BigInt(f.modulus());
    s.res_ = r.convert_to<u64>();
  }
  return s;
}

Scalar Scalar::from_rational(Rational v) {
  Scalar s;
  s.field_ = FieldDescriptor::rational();
  s.rat_ = std::move(v);
  return s;
}

Scalar Scalar::parse(std::string_view text, const FieldDescriptor& f) {
  auto bad = [&]() { return ParseError("invalid scalar literal '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw bad();
    std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
    return BigInt(std::string(part));
  };
  BigInt num = parse_int(slash == std::string_view::npos ? text : text.substr(0, slash));
  if (slash == std::string_view::npos) return from_big(num, f);
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw bad();
  if (f.is_rational()) return from_rational(Rational(num, den));  // canonicalizes
  return from_big(num, f) / from_big(den, f);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1 % field_.modulus();
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw std::invalid_argument("field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational())
    r.rat_ = -rat_;
  else
    r.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar r = *this;
  if (field_.is_rational()) {
    r.rat_ = rat_ + o.rat_;
  } else {
    u64 p = field_.modulus();
    u64 s = res_ + o.res_;  // p < 2^63 is not assumed; guard via comparison
    r.res_ = (s < res_ || s >= p) ? s - p : s;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar r = *this;
  if (field_.is_rational())
    r.rat_ = rat_ * o.rat_;
  else
    r.res_ = mulmod(res_, o.res_, field_.modulus());
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r = *this;
  if (field_.is_rational())
    r.rat_ = 1 / rat_;
  else
    r.res_ = invmod(res_, field_.modulus());
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
  return field_.is_rational() ? rat_.str() : std::to_string(res_);
}

}  // namespace weyr
