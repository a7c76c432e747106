#include "weyr/structure.hpp"

#include <sstream>

#include "weyr/errors.hpp"

namespace weyr {

SegreStructure::SegreStructure(std::vector<SegrePart> parts) : parts_(std::move(parts)) {
  int prev = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const SegrePart& p = parts_[i];
    if (p.size <= 0) throw PreconditionError("Jordan block size must be positive");
    if (p.multiplicity <= 0) throw PreconditionError("block multiplicity must be positive");
    if (i > 0 && p.size >= prev)
      throw PreconditionError("block sizes must be strictly decreasing");
    prev = p.size;
  }
}

int SegreStructure::dimension() const {
  int n = 0;
  for (const SegrePart& p : parts_) n += p.size * p.multiplicity;
  return n;
}

std::string SegreStructure::str() const {
  std::ostringstream os;
  os << "k=(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i].size;
  os << ") p=(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i].multiplicity;
  os << ")";
  return os.str();
}

int WeyrStructure::dimension() const {
  int n = 0;
  for (int ri : r_) n += ri;
  return n;
}

int WeyrStructure::strip_offset(int alpha) const {
  int off = 0;
  for (int i = 0; i < alpha; ++i) off += r_[i];
  return off;
}

WeyrStructure weyr_characteristic(const SegreStructure& j) {
  int k = j.largest_size();
  std::vector<int> r(k, 0), m(k, 0);
  for (int i = 1; i <= k; ++i) {
    for (const SegrePart& p : j.parts()) {
      if (p.size >= i) {
        r[i - 1] += p.multiplicity;
        m[i - 1] += 1;
      }
    }
  }
  return WeyrStructure(std::move(r), std::move(m), j);
}

SegreStructure segre_from_weyr_sequence(const std::vector<int>& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] <= 0) throw PreconditionError("Weyr sequence entries must be positive");
    if (i > 0 && r[i] > r[i - 1])
      throw PreconditionError("Weyr sequence must be non-increasing");
  }
  // Blocks of size exactly i appear r_i - r_{i+1} times.
  std::vector<SegrePart> parts;
  int k = (int)r.size();
  for (int i = k; i >= 1; --i) {
    int next = i < k ? r[i] : 0;
    if (r[i - 1] > next) parts.push_back({i, r[i - 1] - next});
  }
  return SegreStructure(std::move(parts));
}

Matrix build_weyr_matrix(const WeyrStructure& w, const FieldDescriptor& f) {
  int n = w.dimension();
  Matrix out(n, n, f);
  Scalar one = Scalar::one(f);
  const std::vector<int>& r = w.r();
  for (int alpha = 0; alpha + 1 < w.length(); ++alpha) {
    int row0 = w.strip_offset(alpha);
    int col0 = w.strip_offset(alpha + 1);
    for (int i = 0; i < r[alpha + 1]; ++i) out.set(row0 + i, col0 + i, one);
  }
  return out;
}

Matrix build_jordan_matrix(const SegreStructure& j, const FieldDescriptor& f) {
  int n = j.dimension();
  Matrix out(n, n, f);
  Scalar one = Scalar::one(f);
  int off = 0;
  for (const SegrePart& p : j.parts())
    for (int b = 0; b < p.multiplicity; ++b) {
      for (int i = 0; i + 1 < p.size; ++i) out.set(off + i, off + i + 1, one);
      off += p.size;
    }
  return out;
}

std::vector<int> jordan_to_weyr_permutation(const SegreStructure& j) {
  // Jordan-side index of row `depth` of each block, blocks in layout order.
  struct Block {
    int start;
    int size;
  };
  std::vector<Block> blocks;
  int off = 0;
  for (const SegrePart& p : j.parts())
    for (int b = 0; b < p.multiplicity; ++b) {
      blocks.push_back({off, p.size});
      off += p.size;
    }
  std::vector<int> order;
  order.reserve(off);
  for (int depth = 0; depth < j.largest_size(); ++depth)
    for (const Block& blk : blocks)
      if (depth < blk.size) order.push_back(blk.start + depth);
  return order;
}

Matrix permutation_matrix(const std::vector<int>& order, const FieldDescriptor& f) {
  int n = (int)order.size();
  Matrix p(n, n, f);
  Scalar one = Scalar::one(f);
  for (int i = 0; i < n; ++i) p.set(order[i], i, one);
  return p;
}

WeyrDecomposition weyr_decomposition(const Matrix& m) {
  if (!m.is_square()) throw PreconditionError("Weyr decomposition needs a square matrix");
  int n = m.rows();
  const FieldDescriptor& f = m.field();

  // Powers until zero; a nilpotent n x n matrix dies by power n.
  std::vector<Matrix> powers{Matrix::identity(n, f)};
  while (!powers.back().is_zero() && (int)powers.size() <= n)
    powers.push_back(m * powers.back());
  if (!powers.back().is_zero()) throw PreconditionError("matrix is not nilpotent");
  int k = (int)powers.size() - 1;  // nilpotency index (0 for the 0 x 0 matrix)

  std::vector<int> ranks(k + 1);
  for (int i = 0; i <= k; ++i) ranks[i] = rank(powers[i]);
  std::vector<int> r(k);
  for (int i = 1; i <= k; ++i) r[i - 1] = ranks[i - 1] - ranks[i];

  // Basis adapted to the kernel filtration Ker m c Ker m^2 c ...: strip i
  // (1-based) holds r_i vectors completing Ker m^{i-1} inside Ker m^i, and
  // the image of strip i+1 under m is the leading part of strip i. Strips
  // are built from the top; completion candidates are taken greedily in
  // kernel-basis order.
  std::vector<std::vector<Vector>> strips(k + 2);
  for (int i = k; i >= 1; --i) {
    RowSpace space(n, f);
    for (const Vector& v : kernel_basis(powers[i - 1])) space.add(v);
    std::vector<Vector>& strip = strips[i];
    for (const Vector& above : strips[i + 1]) {
      Vector image(n, Scalar::zero(f));
      for (int row = 0; row < n; ++row) {
        Scalar acc = Scalar::zero(f);
        for (int col = 0; col < n; ++col) acc += m.at(row, col) * above[col];
        image[row] = acc;
      }
      if (!space.add(image))
        throw ReductionInvariantError("kernel filtration image unexpectedly dependent");
      strip.push_back(std::move(image));
    }
    for (const Vector& cand : kernel_basis(powers[i])) {
      if ((int)strip.size() >= r[i - 1]) break;
      Vector copy = cand;
      if (space.add(copy)) strip.push_back(copy);
    }
    if ((int)strip.size() != r[i - 1])
      throw ReductionInvariantError("kernel filtration completion failed");
  }

  Matrix s(n, n, f);
  int col = 0;
  for (int i = 1; i <= k; ++i)
    for (const Vector& v : strips[i]) {
      for (int row = 0; row < n; ++row) s.set(row, col, v[row]);
      ++col;
    }

  WeyrStructure structure = weyr_characteristic(segre_from_weyr_sequence(r));
  Matrix w = build_weyr_matrix(structure, f);
  if (m * s != s * w)
    throw ReductionInvariantError("Weyr witness check failed");
  return WeyrDecomposition{std::move(structure), std::move(w), std::move(s)};
}

GeneralWeyrStructure::GeneralWeyrStructure(std::vector<GeneralWeyrBlock> blocks)
    : blocks_(std::move(blocks)) {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (std::size_t j = i + 1; j < blocks_.size(); ++j)
      if (blocks_[i].eigenvalue == blocks_[j].eigenvalue)
        throw PreconditionError("general Weyr eigenvalues must be pairwise distinct");
}

Matrix build_general_weyr(const GeneralWeyrStructure& g, const FieldDescriptor& f) {
  Matrix out(0, 0, f);
  for (const GeneralWeyrBlock& b : g.blocks()) {
    if (b.eigenvalue.field() != f) throw std::invalid_argument("eigenvalue field mismatch");
    int n = b.structure.dimension();
    Matrix block = build_weyr_matrix(b.structure, f) + Matrix::identity(n, f) * b.eigenvalue;
    out = direct_sum(out, block);
  }
  return out;
}

}  // namespace weyr
