// Command-line front end: Weyr canonical forms, commutant patterns and bases,
// normal forms of commuting nilpotent pairs, fixture generation, self tests.
//
// Exit codes: 0 success; 1 parse/usage error; 2 violated precondition or
// failed verification; 3 internal reduction assertion; 4 self-test failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weyr/commutant.hpp"
#include "weyr/errors.hpp"
#include "weyr/harness.hpp"
#include "weyr/io.hpp"
#include "weyr/normal_form.hpp"

namespace {

using weyr::FieldDescriptor;
using weyr::Matrix;
using weyr::SegrePart;
using weyr::SegreStructure;
namespace io = weyr::io;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw weyr::ParseError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
  out << text;
}

SegreStructure structure_from_lists(const std::vector<int>& k, std::vector<int> p) {
  if (p.empty()) p.assign(k.size(), 1);
  if (p.size() != k.size())
    throw weyr::PreconditionError("size list and multiplicity list differ in length");
  std::vector<SegrePart> parts;
  for (std::size_t i = 0; i < k.size(); ++i) parts.push_back({k[i], p[i]});
  return SegreStructure(std::move(parts));
}

int cmd_weyr(const std::string& input, const std::string& out) {
  Matrix m = io::parse_matrix_document(io::parse_text(read_input(input)));
  weyr::WeyrDecomposition dec = weyr::weyr_decomposition(m);
  io::json doc;
  doc["structure"] = io::structure_to_json(dec.structure);
  doc["W"] = io::matrix_document(dec.w);
  doc["S"] = io::matrix_document(dec.s);
  write_output(out, io::canonical_dump(doc));
  return 0;
}

int cmd_commutant(const std::vector<int>& k, const std::vector<int>& p, bool with_basis,
                  const std::string& field_spec, const std::string& out) {
  SegreStructure structure = structure_from_lists(k, p);
  weyr::KMatrix km(structure);
  weyr::CommutantPattern pattern = weyr::h_pattern(structure);
  std::ostringstream os;
  os << "K = " << weyr::format_k_matrix(km) << "\n";
  os << "H = [H1";
  for (int beta = 2; beta <= pattern.weyr.length(); ++beta) os << "|H" << beta;
  os << "]\n" << weyr::format_h_grid(pattern) << "\n";
  os << "dim = " << weyr::commutant_dimension(structure) << "\n";
  if (with_basis) {
    FieldDescriptor f = FieldDescriptor::parse(field_spec);
    Matrix w = weyr::build_weyr_matrix(pattern.weyr, f);
    weyr::CommutantBasis basis = weyr::commutant_basis(w, pattern);
    io::json doc;
    doc["field"] = io::field_to_json(f);
    io::json elements = io::json::array();
    for (const Matrix& e : basis.elements) elements.push_back(io::grid_to_json(e));
    doc["basis"] = std::move(elements);
    os << io::canonical_dump(doc);
  }
  write_output(out, os.str());
  return 0;
}

io::json report_to_json(const weyr::NormalFormReport& rep) {
  auto entry = [](const weyr::CheckResult& c) {
    io::json j;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
  };
  io::json j;
  j["weyr_form"] = entry(rep.weyr_form);
  j["commutes"] = entry(rep.commutes);
  j["diagonal_blocks"] = entry(rep.diagonal_blocks);
  j["stair_support"] = entry(rep.stair_support);
  j["angular_repeats"] = entry(rep.angular_repeats);
  j["kernel_dimension"] = entry(rep.kernel_dimension);
  j["all_pass"] = rep.all_pass();
  return j;
}

int cmd_reduce(const std::string& input, const std::string& out) {
  io::PairDocument pd = io::parse_pair_document(io::parse_text(read_input(input)));
  weyr::CommutingPair pair{pd.m, pd.n};
  weyr::NormalFormResult res = weyr::reduce_pair(pair);
  weyr::NormalFormReport rep = weyr::verify_normal_form(res.w, res.b);
  io::json doc;
  doc["structure"] = io::structure_to_json(res.weyr);
  doc["W"] = io::matrix_document(res.w);
  doc["B"] = io::matrix_document(res.b);
  doc["S"] = io::matrix_document(res.s);
  doc["report"] = report_to_json(rep);
  write_output(out, io::canonical_dump(doc));
  return rep.all_pass() ? 0 : 2;
}

int cmd_verify(const std::string& input, const std::string& out) {
  io::PairDocument pd = io::parse_pair_document(io::parse_text(read_input(input)));
  weyr::NormalFormReport rep = weyr::verify_normal_form(pd.m, pd.n);
  write_output(out, io::canonical_dump(report_to_json(rep)));
  return rep.all_pass() ? 0 : 2;
}

int cmd_gen(const std::vector<int>& k, const std::vector<int>& p, const std::string& field_spec,
            std::uint64_t seed, const std::string& out) {
  SegreStructure structure = structure_from_lists(k, p);
  FieldDescriptor f = FieldDescriptor::parse(field_spec);
  auto [w, b] = weyr::random_normal_pair(structure, f, seed);
  Matrix r = weyr::random_invertible(structure.dimension(), f, seed ^ 0x9e3779b97f4a7c15ull);
  io::json doc = io::pair_document(weyr::conjugate(w, r), weyr::conjugate(b, r));
  doc["structure"] = io::structure_to_json(weyr::weyr_characteristic(structure));
  doc["seed"] = seed;
  if (structure.distinct_count() == 1) doc["ground_truth_b"] = io::grid_to_json(b);
  write_output(out, io::canonical_dump(doc));
  return 0;
}

int cmd_selftest(int max_dim, int trials, std::uint64_t seed, bool inject_fault,
                 const std::string& out) {
  weyr::SelftestOptions opt;
  opt.max_dim = max_dim;
  opt.trials = trials;
  opt.seed = seed;
  opt.inject_fault = inject_fault;
  std::ostringstream os;
  int failures = weyr::run_selftest(opt, [&](const weyr::TrialReport& r) {
    os << r.to_line() << "\n";
  });
  write_output(out, os.str());
  if (failures > 0) {
    std::cerr << failures << " property failure(s)\n";
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weyr canonical forms, commutants of Weyr matrices, and normal forms "
               "of commuting nilpotent pairs with one-dimensional common null space"};
  app.require_subcommand(1);

  std::string input = "-", out, field_spec = "rational";
  std::vector<int> klist, plist;
  std::uint64_t seed = 1;
  int max_dim = 10, trials = 200;
  bool with_basis = false, inject_fault = false;

  CLI::App* weyr_cmd = app.add_subcommand("weyr", "Weyr canonical form of a nilpotent matrix");
  weyr_cmd->add_option("input", input, "matrix document path, or - for stdin");
  weyr_cmd->add_option("--out", out, "output path (default stdout)");

  CLI::App* comm_cmd =
      app.add_subcommand("commutant", "K matrix, H staircase pattern and commutant data");
  comm_cmd->add_option("--k", klist, "strictly decreasing Jordan block sizes")
      ->required()
      ->delimiter(',');
  comm_cmd->add_option("--p", plist, "block multiplicities (default all 1)")->delimiter(',');
  comm_cmd->add_flag("--basis", with_basis, "also emit the commutant basis");
  comm_cmd->add_option("--field", field_spec, "rational | prime:<p> (for --basis)");
  comm_cmd->add_option("--out", out, "output path (default stdout)");

  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "normal form of a commuting nilpotent pair");
  reduce_cmd->add_option("input", input, "pair document path, or - for stdin");
  reduce_cmd->add_option("--out", out, "output path (default stdout)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the normal-form checks on a (W, B) pair document");
  verify_cmd->add_option("input", input, "pair document path, or - for stdin");
  verify_cmd->add_option("--out", out, "output path (default stdout)");

  CLI::App* gen_cmd =
      app.add_subcommand("gen", "generate a conjugated normal-pair fixture");
  gen_cmd->add_option("--k", klist, "strictly decreasing Jordan block sizes")
      ->required()
      ->delimiter(',');
  gen_cmd->add_option("--p", plist, "block multiplicities (default all 1)")->delimiter(',');
  gen_cmd->add_option("--field", field_spec, "rational | prime:<p>");
  gen_cmd->add_option("--seed", seed, "generator seed");
  gen_cmd->add_option("--out", out, "output path (default stdout)");

  CLI::App* self_cmd = app.add_subcommand("selftest", "run the property suites");
  self_cmd->add_option("--max-dim", max_dim, "largest total dimension drawn");
  self_cmd->add_option("--trials", trials, "number of trials");
  self_cmd->add_option("--seed", seed, "generator seed");
  self_cmd->add_flag("--inject-fault", inject_fault, "force one failure (for testing)");
  self_cmd->add_option("--out", out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (weyr_cmd->parsed()) return cmd_weyr(input, out);
    if (comm_cmd->parsed()) return cmd_commutant(klist, plist, with_basis, field_spec, out);
    if (reduce_cmd->parsed()) return cmd_reduce(input, out);
    if (verify_cmd->parsed()) return cmd_verify(input, out);
    if (gen_cmd->parsed()) return cmd_gen(klist, plist, field_spec, seed, out);
    if (self_cmd->parsed()) return cmd_selftest(max_dim, trials, seed, inject_fault, out);
  } catch (const weyr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const weyr::ReductionInvariantError& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return 3;
  } catch (const weyr::PreconditionError& e) {
    // Structure arguments are usage errors for the structure-driven commands.
    std::cerr << "error: " << e.what() << "\n";
    return (comm_cmd->parsed() || gen_cmd->parsed()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
