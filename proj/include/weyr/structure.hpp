#ifndef WEYR_STRUCTURE_HPP
#define WEYR_STRUCTURE_HPP

#include <vector>

#include "weyr/matrix.hpp"

namespace weyr {

/// One group of equal-size Jordan blocks: `multiplicity` blocks of size `size`.
struct SegrePart {
  int size;
  int multiplicity;
  bool operator==(const SegrePart&) const = default;
};

/// The Segre characteristic of a nilpotent matrix: block sizes k_1 > ... > k_t > 0
/// with multiplicities p_i >= 1.
class SegreStructure {
 public:
  explicit SegreStructure(std::vector<SegrePart> parts);

  const std::vector<SegrePart>& parts() const { return parts_; }
  int distinct_count() const { return (int)parts_.size(); }     // t
  int largest_size() const { return parts_.empty() ? 0 : parts_[0].size; }
  int dimension() const;                                        // sum k_i * p_i
  bool operator==(const SegreStructure&) const = default;

  std::string str() const;  // "k=(7,4,2) p=(1,2,1)"

 private:
  std::vector<SegrePart> parts_;
};

/// The Weyr characteristic r_1 >= ... >= r_k (r_i = number of Jordan blocks of
/// size >= i) together with the m-sequence (m_i = number of *distinct* block
/// sizes >= i) and the originating Segre data.
class WeyrStructure {
 public:
  const std::vector<int>& r() const { return r_; }
  const std::vector<int>& m() const { return m_; }
  const SegreStructure& segre() const { return segre_; }
  int length() const { return (int)r_.size(); }  // k = k_1
  int dimension() const;
  /// Row/column offset of strip alpha (0-based) inside an n x n Weyr matrix.
  int strip_offset(int alpha) const;
  bool operator==(const WeyrStructure&) const = default;

 private:
  friend WeyrStructure weyr_characteristic(const SegreStructure&);
  WeyrStructure(std::vector<int> r, std::vector<int> m, SegreStructure segre)
      : r_(std::move(r)), m_(std::move(m)), segre_(std::move(segre)) {}
  std::vector<int> r_, m_;
  SegreStructure segre_;
};

/// Conjugate-partition map from Segre to Weyr data.
WeyrStructure weyr_characteristic(const SegreStructure& j);

/// Recovers the Segre structure whose Weyr characteristic is the given
/// non-increasing positive sequence r.
SegreStructure segre_from_weyr_sequence(const std::vector<int>& r);

/// The nilpotent Weyr matrix: zero diagonal blocks 0_{r_i} and superdiagonal
/// blocks [I; 0] of shape r_i x r_{i+1}.
Matrix build_weyr_matrix(const WeyrStructure& w, const FieldDescriptor& f);

/// The nilpotent Jordan matrix with the given Segre structure, blocks laid
/// out largest size first.
Matrix build_jordan_matrix(const SegreStructure& j, const FieldDescriptor& f);

/// Row collection order carrying the Jordan matrix to the Weyr matrix:
/// first rows of all Jordan blocks, then second rows, and so on. Entry i of
/// the result is the Jordan-side index placed at position i. Conjugating the
/// Jordan matrix by the corresponding permutation matrix yields exactly
/// build_weyr_matrix(weyr_characteristic(j)).
std::vector<int> jordan_to_weyr_permutation(const SegreStructure& j);

/// Permutation matrix whose column i is the standard basis vector e_{order[i]}.
Matrix permutation_matrix(const std::vector<int>& order, const FieldDescriptor& f);

struct WeyrDecomposition {
  WeyrStructure structure;
  Matrix w;  // the Weyr canonical form
  Matrix s;  // invertible witness with s^{-1} * m * s == w
};

/// Weyr canonical form of a nilpotent matrix with an exact similarity
/// witness. Throws PreconditionError if the input is not nilpotent.
WeyrDecomposition weyr_decomposition(const Matrix& m);

/// One eigenvalue block of a general (not necessarily nilpotent) Weyr matrix.
struct GeneralWeyrBlock {
  Scalar eigenvalue;
  WeyrStructure structure;
};

/// lambda_1 I + W_1 (+) ... (+) lambda_l I + W_l with distinct eigenvalues.
class GeneralWeyrStructure {
 public:
  explicit GeneralWeyrStructure(std::vector<GeneralWeyrBlock> blocks);
  const std::vector<GeneralWeyrBlock>& blocks() const { return blocks_; }

 private:
  std::vector<GeneralWeyrBlock> blocks_;
};

Matrix build_general_weyr(const GeneralWeyrStructure& g, const FieldDescriptor& f);

}  // namespace weyr

#endif
