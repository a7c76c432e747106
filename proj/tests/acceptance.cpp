// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.
//
// Usage: acceptance <path-to-weyrtool>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "weyr/harness.hpp"
#include "weyr/io.hpp"

using namespace weyr;
using Clock = std::chrono::steady_clock;

namespace {

const FieldDescriptor Q = FieldDescriptor::rational();

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass, double secs,
            const std::string& detail = "") {
  std::cout << "criterion " << criterion << " (" << name << "): " << (pass ? "PASS" : "FAIL")
            << " [" << secs << " s]";
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << "\n";
  if (!pass) ++g_failures;
}

Vector flatten(const Matrix& m) {
  Vector v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

// 1. Exact golden text of the commutant command for the two reference
//    structures, each under 0.1 s.
void criterion_golden(const std::string& tool) {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;

  const std::string golden742 =
      "K = [[0,-3,-5],[3,0,-2],[5,2,0]]\n"
      "H = [H1|H2|H3|H4|H5|H6|H7]\n"
      "× × × | × × × | × × | × × | × | "
      "× | ×\n"
      "0 × × | 0 × × | 0 × | × × | × | × | ×\n"
      "0 0 × | 0 0 × | 0 × | 0 × | 0 | × | ×\n"
      "dim = 29\n";
  const std::string golden4321 =
      "K = [[0,-1,-2,-3],[1,0,-1,-2],[2,1,0,-1],[3,2,1,0]]\n"
      "H = [H1|H2|H3|H4]\n"
      "× × × × | × × × | × × | ×\n"
      "0 × × × | × × × | × × | ×\n"
      "0 0 × × | 0 × × | × × | ×\n"
      "0 0 0 × | 0 0 × | 0 × | ×\n"
      "dim = 30\n";

  auto t1 = Clock::now();
  RunResult r1 = run(tool + " commutant --k 7,4,2");
  double s1 = seconds_since(t1);
  auto t2 = Clock::now();
  RunResult r2 = run(tool + " commutant --k 4,3,2,1");
  double s2 = seconds_since(t2);

  if (r1.exit_code != 0 || r1.out != golden742) {
    pass = false;
    detail = "7,4,2 output differs";
  }
  if (r2.exit_code != 0 || r2.out != golden4321) {
    pass = false;
    detail += std::string(detail.empty() ? "" : "; ") + "4,3,2,1 output differs";
  }
  if (s1 >= 0.1 || s2 >= 0.1) {
    pass = false;
    detail += std::string(detail.empty() ? "" : "; ") + "runtime over 0.1 s";
  }
  report(1, "golden K/H reproduction", pass, seconds_since(t0), detail);
}

// 2. For at least 100 structures of dimension <= 12, over the rationals and
//    over F_5: structural basis and brute-force kernel span the same space,
//    both containments exact, and the dimension matches the multiplicity
//    formula. Budget 60 s.
void criterion_commutant_equivalence() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  int structures = 0;
  for (std::uint64_t seed = 1; seed <= 100 && pass; ++seed) {
    SegreStructure s = random_segre(12, seed);
    ++structures;
    for (const FieldDescriptor& f : {Q, FieldDescriptor::prime(5)}) {
      int n = s.dimension();
      Matrix w = build_weyr_matrix(weyr_characteristic(s), f);
      CommutantBasis basis = commutant_basis(w, h_pattern(s));
      std::vector<Matrix> oracle = brute_force_commutant(w);
      long long dim = commutant_dimension(s);
      if ((long long)basis.elements.size() != dim || (long long)oracle.size() != dim) {
        pass = false;
        detail = "dimension mismatch on " + s.str() + " over " + f.str();
        break;
      }
      RowSpace structural(n * n, f), brute(n * n, f);
      for (const Matrix& e : basis.elements)
        if (!structural.add(flatten(e))) {
          pass = false;
          detail = "dependent structural basis on " + s.str();
        }
      for (const Matrix& x : oracle)
        if (!brute.add(flatten(x))) {
          pass = false;
          detail = "dependent oracle basis on " + s.str();
        }
      for (const Matrix& x : oracle)
        if (!structural.contains(flatten(x))) {
          pass = false;
          detail = "oracle element outside structural span on " + s.str();
        }
      for (const Matrix& e : basis.elements)
        if (!brute.contains(flatten(e))) {
          pass = false;
          detail = "structural element outside oracle span on " + s.str();
        }
      if (!pass) break;
    }
  }
  double secs = seconds_since(t0);
  if (secs >= 60) {
    pass = false;
    detail += std::string(detail.empty() ? "" : "; ") + "over the 60 s budget";
  }
  report(2, "commutant equivalence, " + std::to_string(structures) + " structures x 2 fields",
         pass, secs, detail);
}

// 3. For at least 100 structures of dimension <= 20: the collection
//    permutation carries the Jordan matrix exactly to the Weyr matrix, and
//    decomposition of a random conjugate recovers the same W with a
//    verifying witness. Budget 60 s.
void criterion_weyr_similarity() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  int count = 0;
  for (std::uint64_t seed = 1; seed <= 100 && pass; ++seed) {
    SegreStructure s = random_segre(20, seed * 31 + 7);
    ++count;
    Matrix j = build_jordan_matrix(s, Q);
    Matrix w = build_weyr_matrix(weyr_characteristic(s), Q);
    Matrix perm = permutation_matrix(jordan_to_weyr_permutation(s), Q);
    if (conjugate(j, perm) != w) {
      pass = false;
      detail = "permutation similarity failed on " + s.str();
      break;
    }
    Matrix r = random_invertible(s.dimension(), Q, seed * 13 + 1);
    Matrix m = conjugate(w, r);
    WeyrDecomposition dec = weyr_decomposition(m);
    if (dec.w != w || conjugate(m, dec.s) != dec.w) {
      pass = false;
      detail = "decomposition failed on " + s.str();
      break;
    }
  }
  double secs = seconds_since(t0);
  if (secs >= 60) {
    pass = false;
    detail += std::string(detail.empty() ? "" : "; ") + "over the 60 s budget";
  }
  report(3, "Weyr permutation similarity, " + std::to_string(count) + " structures", pass, secs,
         detail);
}

// 4. For at least 200 conjugated normal pairs of dimension <= 20 over the
//    rationals: the reduction returns (W, B, S) with entry-exact similarity
//    and a fully passing verifier. Budget 120 s total, 10 s per instance.
void criterion_reduction_round_trip() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  double worst = 0;
  int count = 0;
  for (std::uint64_t seed = 1; seed <= 200 && pass; ++seed) {
    auto ti = Clock::now();
    SegreStructure s = random_segre(20, seed * 97 + 3);
    ++count;
    auto [w, b] = random_normal_pair(s, Q, seed * 5 + 11);
    Matrix r = random_invertible(s.dimension(), Q, seed * 7 + 29);
    CommutingPair pair{conjugate(w, r), conjugate(b, r)};
    try {
      NormalFormResult res = reduce_pair(pair);
      if (conjugate(pair.m, res.s) != res.w || conjugate(pair.n, res.s) != res.b) {
        pass = false;
        detail = "witness mismatch on " + s.str();
      }
      if (res.w != w) {
        pass = false;
        detail = "wrong Weyr form on " + s.str();
      }
      NormalFormReport rep = verify_normal_form(res.w, res.b);
      if (!rep.all_pass()) {
        pass = false;
        detail = "verifier failed on " + s.str() + ": " + rep.summary();
      }
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception on ") + s.str() + ": " + e.what();
    }
    worst = std::max(worst, seconds_since(ti));
  }
  double secs = seconds_since(t0);
  if (secs >= 120 || worst >= 10) {
    pass = false;
    detail += std::string(detail.empty() ? "" : "; ") + "over budget (total " +
              std::to_string(secs) + " s, worst " + std::to_string(worst) + " s)";
  }
  report(4, "reduction round trip, " + std::to_string(count) + " instances", pass, secs, detail);
}

// 5. For at least 50 single-block-size structures (k <= 6, r <= 4) over the
//    rationals: two independent conjugations reduce to bit-identical B.
//    Budget 60 s.
void criterion_uniqueness_equal_sizes() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  int count = 0;
  for (int i = 0; i < 50 && pass; ++i) {
    int k = 1 + i % 6;
    int r = 1 + (i / 6) % 4;
    SegreStructure s({{k, r}});
    ++count;
    std::uint64_t seed = 1000 + (std::uint64_t)i * 17;
    auto [w, b] = random_normal_pair(s, Q, seed);
    Matrix r1 = random_invertible(s.dimension(), Q, seed + 1);
    Matrix r2 = random_invertible(s.dimension(), Q, seed + 2);
    NormalFormResult res1 = reduce_pair({conjugate(w, r1), conjugate(b, r1)});
    NormalFormResult res2 = reduce_pair({conjugate(w, r2), conjugate(b, r2)});
    if (res1.b != res2.b) {
      pass = false;
      detail = "normal forms differ for " + s.str() + " seed " + std::to_string(seed);
    }
  }
  double secs = seconds_since(t0);
  if (secs >= 60) {
    pass = false;
    detail += std::string(detail.empty() ? "" : "; ") + "over the 60 s budget";
  }
  report(5, "uniqueness for a single block size, " + std::to_string(count) + " structures", pass,
         secs, detail);
}

// 6. Example fidelity for block sizes 4,3,2,1 with multiplicity one: the
//    reduced B is supported exactly on the Jordan skeleton plus the frozen
//    last-row stair positions of the reference block pattern.
void criterion_example_fidelity() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  SegreStructure s({{4, 1}, {3, 1}, {2, 1}, {1, 1}});

  // Frozen expected support (0-based coordinates in the 10 x 10 matrix):
  // Jordan skeleton of the diagonal superblocks, the stair entries of the
  // three upper column groups, and their angular repeats.
  std::set<std::pair<int, int>> expected = {
      {0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {7, 8},             // diagonal J blocks
      {1, 4}, {2, 5}, {3, 6}, {5, 7}, {6, 8}, {8, 9},             // group 2 + repeats
      {2, 7}, {3, 8}, {6, 9},                                     // group 3 + repeats
      {3, 9},                                                     // group 4
  };

  std::vector<std::vector<Scalar>> stair_values = {
      {Scalar::from_integer(2, Q), Scalar::from_integer(3, Q), Scalar::from_integer(5, Q)},
      {Scalar::from_integer(7, Q), Scalar::from_integer(11, Q)},
      {Scalar::from_integer(13, Q)},
  };
  auto [w, b] = build_normal_pair(s, Q, stair_values);

  auto support = [](const Matrix& m) {
    std::set<std::pair<int, int>> sup;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero()) sup.insert({i, j});
    return sup;
  };
  if (support(b) != expected) {
    pass = false;
    detail = "source pair support differs from the reference pattern";
  }

  Matrix r = random_invertible(10, Q, 424242);
  NormalFormResult res = reduce_pair({conjugate(w, r), conjugate(b, r)});
  if (support(res.b) != expected) {
    pass = false;
    detail += std::string(detail.empty() ? "" : "; ") + "reduced support differs";
  }
  report(6, "example fidelity for sizes 4,3,2,1", pass, seconds_since(t0), detail);
}

// 7. The uniqueness probe completes on at least 50 structures with two or
//    more distinct sizes; mismatches are findings, never failures.
//    Budget 120 s.
void criterion_open_question_probe() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  int probed = 0;
  int findings = 0;
  std::uint64_t seed = 1;
  while (probed < 50 && pass) {
    SegreStructure s = random_segre(10, seed * 101 + 13);
    ++seed;
    if (s.distinct_count() < 2) continue;
    try {
      TrialReport rep = uniqueness_probe(s, Q, 2, seed * 7 + 5);
      if (!rep.pass) {
        pass = false;  // the probe must never assert outside the proven regime
        detail = "probe asserted on " + s.str();
      }
      if (!rep.detail.empty()) {
        ++findings;
        std::cout << "  [probe] " << rep.to_line() << "\n";
      }
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("probe crashed on ") + s.str() + ": " + e.what();
    }
    ++probed;
  }
  double secs = seconds_since(t0);
  if (secs >= 120) {
    pass = false;
    detail += std::string(detail.empty() ? "" : "; ") + "over the 120 s budget";
  }
  report(7,
         "open-question probe, " + std::to_string(probed) + " structures, " +
             std::to_string(findings) + " recorded finding(s)",
         pass, secs, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <weyrtool>\n";
    return 2;
  }
  criterion_golden(argv[1]);
  criterion_commutant_equivalence();
  criterion_weyr_similarity();
  criterion_reduction_round_trip();
  criterion_uniqueness_equal_sizes();
  criterion_example_fidelity();
  criterion_open_question_probe();
  if (g_failures == 0)
    std::cout << "acceptance: all criteria passed\n";
  else
    std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
  return g_failures;
}
