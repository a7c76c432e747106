#include "weyr/normal_form.hpp"

#include <sstream>

#include "weyr/errors.hpp"

namespace weyr {

namespace {

// Places `block` at superblock (1, d+1) of an n x n matrix over the strip
// partition of `w`, with the forced angular copies at (1+l, d+1+l). With
// d = 0 this is the block-diagonal extension of a first-superblock
// transformation to a full commutant element.
Matrix embed_superdiagonal(const Matrix& block, int d, const WeyrStructure& w) {
  const std::vector<int>& r = w.r();
  int k = w.length();
  Matrix out(w.dimension(), w.dimension(), block.field());
  for (int l = 0; d + 1 + l <= k; ++l) {
    int nrows = r[l];             // strip 1+l
    int ncols = r[d + l];         // strip d+1+l
    int row0 = w.strip_offset(l);
    int col0 = w.strip_offset(d + l);
    for (int a = 0; a < nrows && a < block.rows(); ++a)
      for (int b = 0; b < ncols && b < block.cols(); ++b)
        out.set(row0 + a, col0 + b, block.at(a, b));
  }
  return out;
}

void record(std::vector<ReductionStep>* trace, const char* stage, int beta, int diag,
            const Matrix& b) {
  if (trace) trace->push_back(ReductionStep{stage, beta, diag, b});
}

bool is_nilpotent(const Matrix& m) {
  Matrix p = Matrix::identity(m.rows(), m.field());
  for (int i = 0; i < m.rows(); ++i) {
    p = m * p;
    if (p.is_zero()) return true;
  }
  return m.rows() == 0;
}

Matrix jordan_block_matrix(int n, const FieldDescriptor& f) {
  Matrix j(n, n, f);
  Scalar one = Scalar::one(f);
  for (int i = 0; i + 1 < n; ++i) j.set(i, i + 1, one);
  return j;
}

}  // namespace

void CommutingPair::validate() const {
  if (!m.is_square() || !n.is_square() || m.rows() != n.rows())
    throw PreconditionError("pair matrices must be square and of equal size");
  if (m.field() != n.field()) throw PreconditionError("pair matrices must share one field");
  if (m * n != n * m) throw PreconditionError("matrices do not commute");
  if (!is_nilpotent(m)) throw PreconditionError("first matrix is not nilpotent");
  if (!is_nilpotent(n)) throw PreconditionError("second matrix is not nilpotent");
}

int common_kernel_dimension(const CommutingPair& p) {
  return p.m.cols() - rank(vstack(p.m, p.n));
}

namespace detail {

std::pair<std::vector<int>, Matrix> jordanize_nilpotent(const Matrix& a) {
  WeyrDecomposition dec = weyr_decomposition(a);
  const std::vector<int>& r = dec.structure.r();
  int k = dec.structure.length();
  int n = a.rows();
  Matrix t(n, n, a.field());
  std::vector<int> sizes;
  int col = 0;
  // Chain j strings together position j of every strip that has one; its
  // length is the number of strips with r_i > j, so sizes come out decreasing.
  int chains = r.empty() ? 0 : r[0];
  for (int j = 0; j < chains; ++j) {
    int len = 0;
    for (int i = 0; i < k; ++i) {
      if (r[i] <= j) break;
      int src = dec.structure.strip_offset(i) + j;
      for (int row = 0; row < n; ++row) t.set(row, col, dec.s.at(row, src));
      ++col;
      ++len;
    }
    sizes.push_back(len);
  }
  return {std::move(sizes), std::move(t)};
}

Matrix reduce_first_superblock(const Matrix& b11, const SegreStructure& segre) {
  int r1 = b11.rows();
  const FieldDescriptor& f = b11.field();
  Matrix c = b11;
  Matrix u = Matrix::identity(r1, f);

  // Jordanize each diagonal block; the extension stays inside the allowed
  // block-upper-triangular transformations of the first superblock.
  int off = 0;
  for (const SegrePart& part : segre.parts()) {
    int p = part.multiplicity;
    Matrix diag = c.submatrix(off, off, p, p);
    auto [sizes, t] = jordanize_nilpotent(diag);
    u = u.with_block(off, off, t);
    off += p;
  }
  c = invert(u) * c * u;

  for (int i = 0; i < r1; ++i)
    for (int j = 0; j <= i; ++j)
      if (!c.at(i, j).is_zero())
        throw ReductionInvariantError("first superblock not strictly upper triangular");

  // Scale each superdiagonal entry to 1 and clear the rest of its row,
  // left to right; all factors are upper triangular, hence admissible.
  for (int i = 0; i + 1 < r1; ++i) {
    Scalar b = c.at(i, i + 1);
    if (b.is_zero())
      throw ReductionInvariantError("vanishing superdiagonal entry at row " +
                                    std::to_string(i + 1) +
                                    " of the first superblock; the common null space "
                                    "cannot be one-dimensional");
    if (!b.is_one()) {
      Scalar binv = b.inverse();
      for (int j = 0; j < r1; ++j) c.set(i + 1, j, c.at(i + 1, j) * b);
      for (int s = 0; s < r1; ++s) c.set(s, i + 1, c.at(s, i + 1) * binv);
      for (int s = 0; s < r1; ++s) u.set(s, i + 1, u.at(s, i + 1) * binv);
    }
    for (int j = i + 2; j < r1; ++j) {
      Scalar cv = c.at(i, j);
      if (cv.is_zero()) continue;
      for (int s = 0; s < r1; ++s) c.set(s, j, c.at(s, j) - cv * c.at(s, i + 1));
      for (int t = 0; t < r1; ++t) c.set(i + 1, t, c.at(i + 1, t) + cv * c.at(j, t));
      for (int s = 0; s < r1; ++s) u.set(s, j, u.at(s, j) - cv * u.at(s, i + 1));
    }
  }
  if (c != jordan_block_matrix(r1, f))
    throw ReductionInvariantError("first superblock failed to reach Jordan form");
  return u;
}

}  // namespace detail

NormalFormResult reduce_pair(const CommutingPair& p, std::vector<ReductionStep>* trace) {
  p.validate();
  int ck = common_kernel_dimension(p);
  if (ck != 1)
    throw PreconditionError("common kernel dimension " + std::to_string(ck) +
                            " (the reduction requires dimension 1)");

  WeyrDecomposition dec = weyr_decomposition(p.m);
  const WeyrStructure& ws = dec.structure;
  const std::vector<int>& r = ws.r();
  int k = ws.length();
  int r1 = r.empty() ? 0 : r[0];
  Matrix w = dec.w;
  Matrix s = dec.s;
  Matrix b = conjugate(p.n, s);
  record(trace, "weyr", 0, 0, b);

  CommutantPattern pattern = h_pattern(ws.segre());

  // Stage 2: bring the leading superblock to J_{r_1}(0).
  if (r1 > 0) {
    Matrix u = detail::reduce_first_superblock(b.submatrix(0, 0, r1, r1), ws.segre());
    if (!u.is_identity()) {
      Matrix s2 = embed_superdiagonal(u, 0, ws);
      b = conjugate(b, s2);
      s = s * s2;
    }
    record(trace, "first-superblock", 0, 0, b);
  }

  // Stage 3: sweep the upper superdiagonals.
  Scalar zero = Scalar::zero(w.field());
  for (int beta = 1; beta <= k - 1; ++beta) {
    int cw = r[beta];  // width of superblock (1, beta+1)
    const Mask& mask = pattern.entry_mask[beta];
    int row0 = ws.strip_offset(0);
    int col0 = ws.strip_offset(beta);

    // Step 1: lower diagonals bottom-up, then the main diagonal. The g's of
    // diagonal ell+1 are chosen telescopically along each maximal allowed
    // fragment; the swept stretch of diagonal ell becomes (0,...,0) with any
    // remainder accumulated on the stair below its end.
    for (int ell = r1 - 1; ell >= 0; --ell) {
      Matrix g(r1, cw, w.field());
      bool any = false;
      int j = 0;
      while (ell + 1 + j <= r1 - 1 && j <= cw - 1) {
        if (!mask.at(ell + 1 + j, j)) {
          ++j;
          continue;
        }
        Scalar gamma = zero;
        while (ell + 1 + j <= r1 - 1 && j <= cw - 1 && mask.at(ell + 1 + j, j)) {
          gamma += b.at(row0 + ell + j, col0 + j);
          if (!gamma.is_zero()) {
            g.set(ell + 1 + j, j, gamma);
            any = true;
          }
          ++j;
        }
      }
      if (any) {
        Matrix sf = Matrix::identity(b.rows(), w.field()) - embed_superdiagonal(g, beta, ws);
        b = conjugate(b, sf);
        s = s * sf;
        record(trace, "sweep-lower", beta, ell, b);
      }
    }

    // Step 2: clear the upper diagonals, lowest first.
    for (int u = 1; u <= cw - 1; ++u) {
      Matrix g(r1, cw, w.field());
      bool any = false;
      Scalar gamma = zero;
      for (int j = 0; j + u <= cw - 1; ++j) {
        gamma += b.at(row0 + j, col0 + u + j);
        if (!gamma.is_zero()) {
          g.set(j + 1, u + j, gamma);
          any = true;
        }
      }
      if (any) {
        Matrix sf = Matrix::identity(b.rows(), w.field()) - embed_superdiagonal(g, beta, ws);
        b = conjugate(b, sf);
        s = s * sf;
        record(trace, "sweep-upper", beta, u, b);
      }
    }
  }

  NormalFormResult res{ws, std::move(w), std::move(b), std::move(s)};
  NormalFormReport report = verify_normal_form(res.w, res.b);
  if (!report.all_pass())
    throw ReductionInvariantError("reduced pair failed verification: " + report.summary());
  if (conjugate(p.m, res.s) != res.w || conjugate(p.n, res.s) != res.b)
    throw ReductionInvariantError("similarity witness check failed");
  return res;
}

bool NormalFormReport::all_pass() const {
  return weyr_form.pass && commutes.pass && diagonal_blocks.pass && stair_support.pass &&
         angular_repeats.pass && kernel_dimension.pass;
}

std::string NormalFormReport::summary() const {
  auto line = [](const char* name, const CheckResult& c) {
    std::string s = std::string(name) + ": " + (c.pass ? "pass" : "FAIL");
    if (!c.pass && !c.detail.empty()) s += " (" + c.detail + ")";
    return s;
  };
  std::ostringstream os;
  os << line("weyr-form", weyr_form) << "; " << line("commutes", commutes) << "; "
     << line("diagonal-blocks", diagonal_blocks) << "; "
     << line("stair-support", stair_support) << "; "
     << line("angular-repeats", angular_repeats) << "; "
     << line("kernel-dimension", kernel_dimension);
  return os.str();
}

NormalFormReport verify_normal_form(const Matrix& w, const Matrix& b) {
  if (!w.is_square() || !b.is_square() || w.rows() != b.rows() || w.field() != b.field())
    throw std::invalid_argument("verifier inputs must be square, equal size, one field");
  NormalFormReport rep;
  int n = w.rows();
  const FieldDescriptor& f = w.field();

  // (i) W is a nilpotent Weyr matrix; recover its strip sizes from ranks.
  std::optional<WeyrStructure> ws;
  if (!is_nilpotent(w)) {
    rep.weyr_form = {false, "W is not nilpotent"};
  } else {
    std::vector<int> r;
    Matrix power = Matrix::identity(n, f);
    int prev = n;
    while (true) {
      power = w * power;
      int cur = rank(power);
      if (prev == cur) break;  // only when prev == cur == 0 for nilpotents
      r.push_back(prev - cur);
      prev = cur;
      if (cur == 0) break;
    }
    WeyrStructure candidate = weyr_characteristic(segre_from_weyr_sequence(r));
    if (w == build_weyr_matrix(candidate, f)) {
      ws = candidate;
      rep.weyr_form = {true, ""};
    } else {
      rep.weyr_form = {false, "W is nilpotent but not in Weyr form"};
    }
  }

  bool commutes = w * b == b * w;
  rep.commutes = {commutes, commutes ? "" : "W B != B W"};

  if (!ws) {
    rep.diagonal_blocks = {false, "structure unavailable"};
    rep.stair_support = {false, "structure unavailable"};
    rep.angular_repeats = {false, "structure unavailable"};
  } else {
    const std::vector<int>& r = ws->r();
    int k = ws->length();
    CommutantPattern pattern = h_pattern(ws->segre());

    rep.diagonal_blocks = {true, ""};
    for (int alpha = 1; alpha <= k; ++alpha) {
      int off = ws->strip_offset(alpha - 1);
      if (b.submatrix(off, off, r[alpha - 1], r[alpha - 1]) !=
          jordan_block_matrix(r[alpha - 1], f)) {
        rep.diagonal_blocks = {false,
                               "diagonal superblock " + std::to_string(alpha) + " is not J"};
        break;
      }
    }

    rep.stair_support = {true, ""};
    for (int beta = 2; beta <= k && rep.stair_support.pass; ++beta) {
      int col0 = ws->strip_offset(beta - 1);
      for (int a = 0; a < r[0] && rep.stair_support.pass; ++a)
        for (int bb = 0; bb < r[beta - 1]; ++bb) {
          if (b.at(a, col0 + bb).is_zero()) continue;
          if (pattern.stair_row(beta, bb) != a) {
            rep.stair_support = {false, "off-stair entry in superblock (1," +
                                            std::to_string(beta) + ") at (" +
                                            std::to_string(a + 1) + "," +
                                            std::to_string(bb + 1) + ")"};
            break;
          }
        }
    }

    rep.angular_repeats = {true, ""};
    for (int alpha = 2; alpha <= k && rep.angular_repeats.pass; ++alpha)
      for (int beta = alpha; beta <= k; ++beta) {
        int gamma = beta - alpha + 1;
        Matrix rep_block = b.submatrix(ws->strip_offset(0), ws->strip_offset(gamma - 1),
                                       r[alpha - 1], r[beta - 1]);
        Matrix here = b.submatrix(ws->strip_offset(alpha - 1), ws->strip_offset(beta - 1),
                                  r[alpha - 1], r[beta - 1]);
        if (rep_block != here) {
          rep.angular_repeats = {false, "superblock (" + std::to_string(alpha) + "," +
                                            std::to_string(beta) +
                                            ") is not the angular submatrix of its "
                                            "first-row representative"};
          break;
        }
      }
    // Strictly lower superblocks must vanish for B to commute with W; the
    // commutation check covers them, but report a clearer detail if not.
  }

  int nullity = n - rank(vstack(w, b));
  rep.kernel_dimension = {nullity == 1,
                          nullity == 1 ? "" : "common kernel dimension " + std::to_string(nullity)};
  return rep;
}

StairProfile extract_stair_profile(const NormalFormResult& res) {
  CommutantPattern pattern = h_pattern(res.weyr.segre());
  StairProfile prof;
  int k = res.weyr.length();
  for (int beta = 2; beta <= k; ++beta) {
    const auto& stair = pattern.stairs[beta - 1];
    std::vector<Scalar> vals;
    int col0 = res.weyr.strip_offset(beta - 1);
    for (const auto& [row, col] : stair) vals.push_back(res.b.at(row, col0 + col));
    prof.stairs.push_back(stair);
    prof.values.push_back(std::move(vals));
  }
  return prof;
}

std::vector<std::vector<Scalar>> equal_block_profile(const NormalFormResult& res) {
  const SegreStructure& segre = res.weyr.segre();
  if (segre.distinct_count() != 1)
    throw PreconditionError("equal block profile requires a single distinct block size");
  int k = segre.parts()[0].size;
  int rmult = segre.parts()[0].multiplicity;
  std::vector<std::vector<Scalar>> rows;
  for (int v = 1; v <= k - 1; ++v) {
    std::vector<Scalar> row;
    int col0 = res.weyr.strip_offset(v);
    for (int j = 0; j < rmult; ++j) row.push_back(res.b.at(rmult - 1, col0 + j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace weyr
