#include "weyr/commutant.hpp"

#include <algorithm>
#include <sstream>

#include "weyr/errors.hpp"

namespace weyr {

KMatrix::KMatrix(const SegreStructure& j) {
  for (const SegrePart& p : j.parts()) sizes_.push_back(p.size);
}

CommutantPattern h_pattern(const SegreStructure& j) {
  CommutantPattern out{j, weyr_characteristic(j), {}, {}, {}};
  KMatrix k(j);
  const std::vector<int>& m = out.weyr.m();
  const std::vector<int>& r = out.weyr.r();
  int t = j.distinct_count();
  int klen = out.weyr.length();

  // Entry row `a` of the expansion belongs to block row `row_block[a]`.
  auto block_of = [&](int count) {
    std::vector<int> map;
    for (int i = 0; i < count; ++i)
      for (int c = 0; c < j.parts()[i].multiplicity; ++c) map.push_back(i);
    return map;
  };
  std::vector<int> row_block = block_of(t);

  for (int beta = 1; beta <= klen; ++beta) {
    Mask h(m[0], m[beta - 1]);
    for (int i = 0; i < m[0]; ++i)
      for (int col = 0; col < m[beta - 1]; ++col) h.set(i, col, k.at(i, col) < beta);
    Mask entry(r[0], r[beta - 1]);
    std::vector<int> col_block = block_of(m[beta - 1]);
    for (int a = 0; a < r[0]; ++a)
      for (int b = 0; b < r[beta - 1]; ++b) entry.set(a, b, h.at(row_block[a], col_block[b]));
    // Stairs: within a column the allowed region is a top-anchored interval,
    // so the stair is its lowest cell.
    std::vector<std::pair<int, int>> stair;
    for (int b = 0; b < r[beta - 1]; ++b) {
      int d = -1;
      for (int a = 0; a < r[0]; ++a)
        if (entry.at(a, b)) d = a;
      stair.emplace_back(d, b);
    }
    out.h_blocks.push_back(std::move(h));
    out.entry_mask.push_back(std::move(entry));
    out.stairs.push_back(std::move(stair));
  }
  return out;
}

SuperblockLayout expand_superblock_layout(const CommutantPattern& p) {
  SuperblockLayout out{p.weyr, {}};
  int k = p.weyr.length();
  const std::vector<int>& r = p.weyr.r();
  for (int alpha = 1; alpha <= k; ++alpha) {
    std::vector<Mask> row;
    for (int beta = alpha; beta <= k; ++beta) {
      const Mask& full = p.entry_mask[beta - alpha];  // gamma = beta - alpha + 1
      Mask sub(r[alpha - 1], r[beta - 1]);
      for (int a = 0; a < sub.rows; ++a)
        for (int b = 0; b < sub.cols; ++b) sub.set(a, b, full.at(a, b));
      row.push_back(std::move(sub));
    }
    out.masks.push_back(std::move(row));
  }
  return out;
}

long long commutant_dimension(const SegreStructure& j) {
  long long dim = 0;
  for (const SegrePart& a : j.parts())
    for (const SegrePart& b : j.parts())
      dim += (long long)a.multiplicity * b.multiplicity * std::min(a.size, b.size);
  return dim;
}

CommutantBasis commutant_basis(const Matrix& w, const CommutantPattern& p) {
  if (w != build_weyr_matrix(p.weyr, w.field()))
    throw PreconditionError("matrix does not match the pattern's Weyr form");
  const FieldDescriptor& f = w.field();
  int n = p.weyr.dimension();
  int k = p.weyr.length();
  const std::vector<int>& r = p.weyr.r();
  Scalar one = Scalar::one(f);

  CommutantBasis out{p, {}};
  for (int beta = 1; beta <= k; ++beta) {
    const Mask& mask = p.entry_mask[beta - 1];
    for (int a = 0; a < mask.rows; ++a)
      for (int b = 0; b < mask.cols; ++b) {
        if (!mask.at(a, b)) continue;
        Matrix e(n, n, f);
        for (int l = 0; beta + l <= k; ++l) {
          if (a >= r[l] || b >= r[beta + l - 1]) break;
          e.set(p.weyr.strip_offset(l) + a, p.weyr.strip_offset(beta + l - 1) + b, one);
        }
        out.elements.push_back(std::move(e));
      }
  }
  return out;
}

bool is_commutant_member(const Matrix& s, const Matrix& w) {
  if (!s.is_square() || !w.is_square() || s.rows() != w.rows())
    throw std::invalid_argument("commutation test size mismatch");
  return w * s == s * w;
}

bool matches_pattern(const Matrix& s, const CommutantPattern& p) {
  int n = p.weyr.dimension();
  if (s.rows() != n || s.cols() != n)
    throw std::invalid_argument("pattern test size mismatch");
  int k = p.weyr.length();
  const std::vector<int>& r = p.weyr.r();
  // Strictly lower superblocks vanish; every upper superblock equals the
  // angular submatrix of its first-row representative, which in turn obeys
  // the staircase mask.
  for (int alpha = 1; alpha <= k; ++alpha)
    for (int beta = 1; beta <= k; ++beta) {
      int row0 = p.weyr.strip_offset(alpha - 1);
      int col0 = p.weyr.strip_offset(beta - 1);
      if (alpha > beta) {
        for (int a = 0; a < r[alpha - 1]; ++a)
          for (int b = 0; b < r[beta - 1]; ++b)
            if (!s.at(row0 + a, col0 + b).is_zero()) return false;
        continue;
      }
      int gamma = beta - alpha + 1;
      const Mask& mask = p.entry_mask[gamma - 1];
      int rep_row0 = p.weyr.strip_offset(0);
      int rep_col0 = p.weyr.strip_offset(gamma - 1);
      for (int a = 0; a < r[alpha - 1]; ++a)
        for (int b = 0; b < r[beta - 1]; ++b) {
          const Scalar& v = s.at(row0 + a, col0 + b);
          if (!mask.at(a, b)) {
            if (!v.is_zero()) return false;
          } else if (alpha > 1 && v != s.at(rep_row0 + a, rep_col0 + b)) {
            return false;
          }
        }
    }
  return true;
}

std::string format_k_matrix(const KMatrix& k) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < k.size(); ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < k.size(); ++j) os << (j ? "," : "") << k.at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string format_h_grid(const CommutantPattern& p) {
  std::ostringstream os;
  int m1 = p.weyr.m().empty() ? 0 : p.weyr.m()[0];
  for (int i = 0; i < m1; ++i) {
    if (i) os << "\n";
    for (std::size_t beta = 0; beta < p.h_blocks.size(); ++beta) {
      if (beta) os << " | ";
      const Mask& h = p.h_blocks[beta];
      for (int col = 0; col < h.cols; ++col) {
        if (col) os << " ";
        os << (h.at(i, col) ? "×" : "0");
      }
    }
  }
  return os.str();
}

}  // namespace weyr
