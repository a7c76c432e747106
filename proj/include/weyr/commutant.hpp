#ifndef WEYR_COMMUTANT_HPP
#define WEYR_COMMUTANT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weyr/structure.hpp"

namespace weyr {

/// The skew-symmetric size-difference matrix K[i][j] = k_j - k_i over the
/// distinct Jordan block sizes.
class KMatrix {
 public:
  explicit KMatrix(const SegreStructure& j);
  int size() const { return (int)sizes_.size(); }
  long long at(int i, int j) const { return sizes_[j] - sizes_[i]; }

 private:
  std::vector<long long> sizes_;
};

/// Rectangular true/false grid; true marks a Free position.
struct Mask {
  int rows = 0, cols = 0;
  std::vector<std::uint8_t> cells;
  Mask() = default;
  Mask(int r, int c) : rows(r), cols(c), cells((std::size_t)r * c, 0) {}
  bool at(int r, int c) const { return cells[(std::size_t)r * cols + c] != 0; }
  void set(int r, int c, bool v) { cells[(std::size_t)r * cols + c] = v ? 1 : 0; }
};

/// Block-level and entry-level description of the matrices commuting with a
/// Weyr matrix: for each column group beta the H_beta flag grid, its
/// expansion by multiplicities, and the stair positions (the lowest allowed
/// cell of every column).
struct CommutantPattern {
  SegreStructure segre;
  WeyrStructure weyr;
  std::vector<Mask> h_blocks;    // index beta-1: m_1 x m_beta flags
  std::vector<Mask> entry_mask;  // index beta-1: r_1 x r_beta flags
  std::vector<std::vector<std::pair<int, int>>> stairs;  // index beta-1: (row, col), 0-based

  /// Lowest allowed row of column `col` in entry_mask[beta-1].
  int stair_row(int beta, int col) const { return stairs[beta - 1][col].first; }
};

CommutantPattern h_pattern(const SegreStructure& j);

/// Entry-level masks of every superblock (alpha, beta), 1 <= alpha <= beta <= k:
/// the upper-left r_alpha x r_beta corner of entry_mask[beta - alpha].
struct SuperblockLayout {
  WeyrStructure weyr;
  std::vector<std::vector<Mask>> masks;  // masks[alpha-1][beta-alpha] for beta >= alpha
  const Mask& at(int alpha, int beta) const { return masks[alpha - 1][beta - alpha]; }
};

SuperblockLayout expand_superblock_layout(const CommutantPattern& p);

/// Number of free scalar positions, equal to sum_{i,j} p_i p_j min(k_i, k_j).
long long commutant_dimension(const SegreStructure& j);

/// Basis of the commutant of W: one matrix per free position of the first
/// block row, with forced copies at every angular repeat.
struct CommutantBasis {
  CommutantPattern pattern;
  std::vector<Matrix> elements;
};

/// Requires W == build_weyr_matrix over the pattern's structure.
CommutantBasis commutant_basis(const Matrix& w, const CommutantPattern& p);

/// Exact test of W S == S W.
bool is_commutant_member(const Matrix& s, const Matrix& w);

/// True iff s vanishes at every forbidden position and every superblock
/// equals the upper-left angular submatrix of its first-row representative.
bool matches_pattern(const Matrix& s, const CommutantPattern& p);

/// "[[0,-3,-5],[3,0,-2],[5,2,0]]"
std::string format_k_matrix(const KMatrix& k);

/// Block-level H grid, one text row per line, cells separated by spaces and
/// column groups by '|'. Free prints as a multiplication sign, Zero as '0'.
std::string format_h_grid(const CommutantPattern& p);

}  // namespace weyr

#endif
