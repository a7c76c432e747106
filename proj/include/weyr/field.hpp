#ifndef WEYR_FIELD_HPP
#define WEYR_FIELD_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace weyr {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// Identifies the coefficient field: the rationals, or a prime field F_p
/// with p fitting in a machine word.
class FieldDescriptor {
 public:
  enum class Kind { Rational, Prime };

  static FieldDescriptor rational() { return FieldDescriptor(Kind::Rational, 0); }
  /// Throws PreconditionError unless p is prime (and hence >= 2).
  static FieldDescriptor prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  /// Meaningful only for prime fields; 0 otherwise.
  std::uint64_t modulus() const { return modulus_; }

  bool operator==(const FieldDescriptor& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
  }
  bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

  /// "rational" or "prime:<p>"; parse() accepts the same forms.
  std::string str() const;
  static FieldDescriptor parse(std::string_view text);

 private:
  FieldDescriptor(Kind k, std::uint64_t m) : kind_(k), modulus_(m) {}
  Kind kind_;
  std::uint64_t modulus_;
};

/// An exact field element. Rational values are kept in lowest terms with a
/// positive denominator; prime-field values as canonical residues in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldDescriptor::rational()) {}  // 0 over the rationals

  static Scalar zero(const FieldDescriptor& f) { return from_integer(0, f); }
  static Scalar one(const FieldDescriptor& f) { return from_integer(1, f); }
  static Scalar from_integer(long long v, const FieldDescriptor& f);
  static Scalar from_big(const BigInt& v, const FieldDescriptor& f);
  static Scalar from_rational(Rational v);
  /// Accepts "n" and "a/b" in decimal, with optional sign; canonicalizes.
  static Scalar parse(std::string_view text, const FieldDescriptor& f);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// The rational value; only valid over the rationals.
  const Rational& rational_value() const { return rat_; }
  /// The canonical residue; only valid over a prime field.
  std::uint64_t residue() const { return res_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on zero divisor
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const;  // throws on zero

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Decimal form, "a/b" for non-integral rationals.
  std::string str() const;

 private:
  void require_same_field(const Scalar& o) const;
  FieldDescriptor field_;
  Rational rat_;             // used iff rational
  std::uint64_t res_ = 0;    // used iff prime
};

}  // namespace weyr

#endif
