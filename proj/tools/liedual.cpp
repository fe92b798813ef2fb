#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "liedual/acceptance.hpp"
#include "liedual/io.hpp"

namespace {

using namespace liedual;
using nlohmann::json;

// exit codes: 0 = all checks pass, 1 = a mathematical check failed,
// 2 = usage or parse error

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::invalid_argument("cannot open output file: " + out_path);
  os << text;
}

json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

struct TableArgs {
  std::string algebra = "witt";
  std::string family = "witt-n";
  std::int64_t n = 2;
  std::string ell = "1";
  std::string k = "1";
  std::vector<std::int64_t> window = {-3, 3};
  std::string format = "json";
  std::string out;
  std::string mutate = "none";
  bool cross_check = false;
};

BracketFamily make_family(const TableArgs& args) {
  const AlgebraKind kind = kind_from_name(args.algebra);
  if (args.family == "xy") {
    return BracketFamily::xy(
        kind, BialgebraParams(args.n, parse_scalar(args.ell), parse_scalar(args.k)));
  }
  if (args.family != "witt-n") {
    throw std::invalid_argument("dual-table supports --family witt-n or xy");
  }
  return BracketFamily::witt(kind, args.n);
}

int run_cybe(const std::string& algebra, const std::string& family, std::int64_t n,
             const std::string& ell, const std::string& k, const std::string& r_path,
             const std::string& out) {
  Tensor2 r = [&] {
    if (family == "raw") {
      if (r_path.empty()) throw std::invalid_argument("--family raw needs --r FILE");
      return io::tensor2_from_json(read_json_file(r_path));
    }
    const AlgebraKind kind = kind_from_name(algebra);
    if (family == "xy") {
      return xy_family_r(kind, BialgebraParams(n, parse_scalar(ell), parse_scalar(k)))
          .tensor();
    }
    if (family != "witt-n") {
      throw std::invalid_argument("unknown family: " + family);
    }
    return witt_family_r(kind, n).tensor();
  }();
  const Tensor3 residual = cybe_residual(r.kind(), r);
  json report{{"r", io::tensor_to_json(r)},
              {"residual", io::tensor_to_json(residual)},
              {"pass", residual.is_zero()}};
  write_output(report.dump(2), out);
  std::cout << (residual.is_zero() ? "PASS" : "FAIL") << ": CYBE residual "
            << (residual.is_zero() ? "is zero" : "has nonzero terms") << "\n";
  return residual.is_zero() ? 0 : 1;
}

int run_dual_table(const TableArgs& args) {
  const BracketFamily family = make_family(args);
  if (args.window.size() != 2) throw std::invalid_argument("--window needs LO HI");
  const Window window(args.window[0], args.window[1]);
  if (window.empty()) throw std::invalid_argument("--window must be nonempty");
  const Mutation mutation = mutation_from_name(args.mutate);
  const BracketTable table =
      build_table(family, window, Provenance::ClosedForm, mutation);
  std::string text;
  if (args.format == "json") {
    text = io::table_to_json(table).dump(2);
  } else if (args.format == "csv") {
    text = io::table_to_csv(table);
  } else if (args.format == "latex") {
    text = io::table_to_latex(table);
  } else {
    throw std::invalid_argument("unknown format: " + args.format);
  }
  write_output(text, args.out);
  if (!args.cross_check) return 0;
  const BracketTable oracle = build_table(family, window, Provenance::Oracle);
  long long mismatches = 0;
  for (const auto& [key, value] : table.entries) {
    if (!(oracle.entries.at(key) == value)) ++mismatches;
  }
  std::cout << mismatches << " mismatches between closed form and oracle\n";
  return mismatches == 0 ? 0 : 1;
}

int run_verify(const std::string& suite, const std::vector<std::int64_t>& window,
               const std::string& mutate) {
  accept::Options opts;
  if (!window.empty()) {
    if (window.size() != 2) throw std::invalid_argument("--window needs LO HI");
    opts.window = Window(window[0], window[1]);
    if (opts.window->empty()) throw std::invalid_argument("--window must be nonempty");
  }
  opts.mutation = mutation_from_name(mutate);
  std::vector<accept::CriterionResult> results;
  if (suite.empty()) {
    results = accept::run_all(opts);
  } else {
    results.push_back(accept::run_criterion(accept::criterion_from_suite(suite), opts));
  }
  bool all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    std::ostringstream line;
    line << "criterion " << r.index << " (" << r.name << "): "
         << (r.passed ? "PASS" : "FAIL") << "  checks=" << r.checks
         << " failures=" << r.failures << "  time=" << r.seconds << "s  " << r.detail;
    std::cout << line.str() << "\n";
  }
  std::cout << (all_passed ? "all suites passed" : "some suites FAILED") << "\n";
  return all_passed ? 0 : 1;
}

int run_decompose(const std::string& path, const std::string& out) {
  const DualElement f = io::dual_from_json(read_json_file(path));
  const DecomposeResult result = decompose_components(f);
  write_output(io::decompose_result_to_json(result).dump(2), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact dual Lie bialgebras of Witt and Virasoro type"};
  app.require_subcommand(1);

  std::string algebra = "witt", family = "witt-n", ell = "1", k = "1";
  std::string r_path, out, suite, mutate = "none", format = "json", input;
  std::int64_t n = 2;
  std::vector<std::int64_t> window;
  TableArgs table_args;

  CLI::App* cybe = app.add_subcommand("cybe", "check the classical Yang-Baxter equation");
  cybe->add_option("--algebra", algebra, "one-sided-witt|witt|virasoro");
  cybe->add_option("--family", family, "witt-n|xy|raw");
  cybe->add_option("--n", n, "family parameter n (n != 1)");
  cybe->add_option("--ell", ell, "xy family parameter ell (rational)");
  cybe->add_option("--k", k, "xy family parameter k (rational)");
  cybe->add_option("--r", r_path, "tensor JSON file for --family raw");
  cybe->add_option("--out", out, "write the residual report here");

  CLI::App* table = app.add_subcommand("dual-table", "emit a dual bracket table");
  table->add_option("--algebra", table_args.algebra, "one-sided-witt|witt|virasoro");
  table->add_option("--family", table_args.family, "witt-n|xy");
  table->add_option("--n", table_args.n, "family parameter n (n != 1)");
  table->add_option("--ell", table_args.ell, "xy family parameter ell");
  table->add_option("--k", table_args.k, "xy family parameter k");
  table->add_option("--window", table_args.window, "index window LO HI")
      ->expected(2);
  table->add_option("--format", table_args.format, "json|csv|latex");
  table->add_option("--out", table_args.out, "write the table here");
  table->add_option("--mutate", table_args.mutate, "sign-flip one closed-form case");
  table->add_flag("--cross-check", table_args.cross_check,
                  "rebuild the table from the pairing oracle and diff");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite,
                     "cybe|subalgebra|witt-dual|xy-dual|jacobi|cobracket|axioms|"
                     "membership|mutation (default: all)");
  verify->add_option("--window", window, "override the suite's index window")
      ->expected(2);
  verify->add_option("--mutate", mutate, "sign-flip one closed-form case");

  CLI::App* decompose =
      app.add_subcommand("decompose", "split a recursive functional into components");
  decompose->add_option("input", input, "dual element JSON file")->required();
  decompose->add_option("--out", out, "write the decomposition here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cybe->parsed()) return run_cybe(algebra, family, n, ell, k, r_path, out);
    if (table->parsed()) return run_dual_table(table_args);
    if (verify->parsed()) return run_verify(suite, window, mutate);
    if (decompose->parsed()) return run_decompose(input, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
