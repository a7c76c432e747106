#ifndef WEYR_NORMAL_FORM_HPP
#define WEYR_NORMAL_FORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "weyr/commutant.hpp"
#include "weyr/structure.hpp"

namespace weyr {

/// A pair of commuting nilpotent matrices of the same size over one field.
/// validate() checks the commuting/nilpotency invariants.
struct CommutingPair {
  Matrix m;
  Matrix n;
  void validate() const;  // throws PreconditionError
};

/// dim(Ker M intersect Ker N), computed as the nullity of the stacked matrix.
int common_kernel_dimension(const CommutingPair& p);

/// Outcome of the reduction: W is the Weyr canonical form of M, B the reduced
/// second matrix, S the accumulated invertible witness with
/// S^{-1} M S == W and S^{-1} N S == B, exactly.
struct NormalFormResult {
  WeyrStructure weyr;
  Matrix w;
  Matrix b;
  Matrix s;
};

/// Optional step-by-step trace of the reduction, for invariant tests.
struct ReductionStep {
  std::string stage;  // "weyr", "first-superblock", "sweep-lower", "sweep-upper"
  int beta = 0;       // superdiagonal being processed (stage 3 only)
  int diag = 0;       // lower/upper diagonal index within the superblock
  Matrix b_after;     // full B after applying this factor
};

/// Reduces a commuting nilpotent pair with one-dimensional common null space
/// to its staircase normal form. Preconditions are checked and reported via
/// PreconditionError; a vanishing first-superblock superdiagonal entry (which
/// valid inputs cannot produce) raises ReductionInvariantError.
NormalFormResult reduce_pair(const CommutingPair& p, std::vector<ReductionStep>* trace = nullptr);

struct CheckResult {
  bool pass = false;
  std::string detail;
};

/// The six verifier checks, reported independently.
struct NormalFormReport {
  CheckResult weyr_form;        // (i)   W is a valid Weyr matrix
  CheckResult commutes;         // (ii)  W B == B W
  CheckResult diagonal_blocks;  // (iii) every diagonal superblock of B is J_{r_a}(0)
  CheckResult stair_support;    // (iv)  first-row superblocks vanish off their stairs
  CheckResult angular_repeats;  // (v)   repeated superblocks are angular submatrices
  CheckResult kernel_dimension; // (vi)  common null space of (W, B) is one-dimensional
  bool all_pass() const;
  std::string summary() const;
};

NormalFormReport verify_normal_form(const Matrix& w, const Matrix& b);

/// Stair coordinates and the stored stair values of each first-row superblock
/// of B beyond the first (beta = 2..k).
struct StairProfile {
  std::vector<std::vector<std::pair<int, int>>> stairs;  // per beta, 0-based coords
  std::vector<std::vector<Scalar>> values;               // matching stair values
};

StairProfile extract_stair_profile(const NormalFormResult& res);

/// For a single distinct block size (t = 1) the normal form is determined by
/// the last rows of the repeated blocks B_1, ..., B_{k-1}; returns those rows.
/// Throws PreconditionError when t != 1.
std::vector<std::vector<Scalar>> equal_block_profile(const NormalFormResult& res);

namespace detail {

/// Stage-2 work on the leading superblock: Jordanizes the diagonal blocks of
/// b11, then scales/clears it to J_{r_1}(0) by upper-triangular similarity.
/// Returns the composed local transformation U with U^{-1} b11 U = J.
/// Throws ReductionInvariantError if a superdiagonal entry vanishes after
/// Jordanization.
Matrix reduce_first_superblock(const Matrix& b11, const SegreStructure& segre);

/// Nilpotent Jordanization with deterministic chain selection: returns
/// (sizes, T) with T^{-1} a T the direct sum of J_size(0), sizes decreasing.
std::pair<std::vector<int>, Matrix> jordanize_nilpotent(const Matrix& a);

}  // namespace detail

}  // namespace weyr

#endif
