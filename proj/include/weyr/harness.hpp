#ifndef WEYR_HARNESS_HPP
#define WEYR_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "weyr/normal_form.hpp"

namespace weyr {

/// Generator seed; equal seeds reproduce identical instances.
using Seed = std::uint64_t;

/// Deterministic instance generation: the same seed always reproduces the
/// same draws (bounded values are derived from raw mt19937_64 output, not
/// from distribution objects, so replay does not depend on the toolchain).
class Rng {
 public:
  explicit Rng(Seed seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  /// Uniform-ish integer in [lo, hi].
  long long bounded(long long lo, long long hi);

 private:
  std::mt19937_64 gen_;
};

/// One property-trial outcome, serializable as a single structured text line.
struct TrialReport {
  std::string suite;
  std::string structure;
  Seed seed = 0;
  std::string field;
  bool pass = true;
  std::string detail;        // failure detail, or a recorded finding
  std::int64_t micros = 0;   // wall time of the trial
  std::string to_line() const;
};

/// Random Segre structure with total dimension <= max_dim.
SegreStructure random_segre(int max_dim, Seed seed);

/// Deterministic normal pair for explicit stair values: W over the structure
/// and B with Jordan diagonal superblocks, the given values on the stairs of
/// the first-row superblocks (beta >= 2), and the forced angular repeats.
/// `stair_values[beta-2]` matches the stair list of h_pattern.
std::pair<Matrix, Matrix> build_normal_pair(const SegreStructure& j, const FieldDescriptor& f,
                                            const std::vector<std::vector<Scalar>>& stair_values);

/// Random normal pair; stair values drawn uniformly from a small range
/// (zero allowed). Always passes the verifier and has common kernel
/// dimension one.
std::pair<Matrix, Matrix> random_normal_pair(const SegreStructure& j, const FieldDescriptor& f,
                                             Seed seed);

/// Random invertible matrix: product of unit-triangular factors and a
/// permutation, so over the rationals the entries stay integral.
Matrix random_invertible(int n, const FieldDescriptor& f, Seed seed);

/// Basis of { X : W X == X W } by elimination on the n^2-variable system.
/// Independent of the staircase pattern machinery; this is the oracle the
/// structural commutant basis is tested against.
std::vector<Matrix> brute_force_commutant(const Matrix& w);

enum class SimilarityOutcome { Similar, No, Inconclusive };

struct SimilarityResult {
  SimilarityOutcome outcome;
  std::optional<Matrix> witness;  // present iff Similar; exact conjugation checked
};

/// Decides simultaneous similarity of two pairs by solving the intertwiner
/// system { M X = X M', N X = X N' } and sampling the solution space for an
/// invertible element. A nonzero space with no invertible sample found is
/// reported Inconclusive, never No.
SimilarityResult pairs_similar_oracle(const CommutingPair& p1, const CommutingPair& p2,
                                      int trials, Seed seed);

/// Draws a normal pair, conjugates it by two independent random invertibles,
/// reduces both, and compares the reduced B matrices exactly. Over the
/// rationals with a single distinct block size a mismatch is a failure; in
/// every other case a mismatch is recorded as a finding only.
TrialReport uniqueness_probe(const SegreStructure& j, const FieldDescriptor& f, int trials,
                             Seed seed);

struct SelftestOptions {
  int max_dim = 10;
  int trials = 200;
  Seed seed = 1;
  bool inject_fault = false;  // force one artificial failure (for exit-code tests)
};

/// Runs the property suites (generator invariants, commutant oracle
/// agreement, reduction round trips, uniqueness checks and probes); emits one
/// report line per trial through `sink`. Returns the number of failures.
int run_selftest(const SelftestOptions& opt, const std::function<void(const TrialReport&)>& sink);

}  // namespace weyr

#endif
