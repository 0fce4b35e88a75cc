// runsym: classify polynomials by the run lengths their reciprocals count,
// tabulate permutation counts, search cyclotomic products and run the
// verification suites.
//
// Exit codes: 0 ok, 1 usage or malformed input, 2 domain rejection,
// 3 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "runsym/cyclotomic.hpp"
#include "runsym/error.hpp"
#include "runsym/oracles.hpp"
#include "runsym/parallel.hpp"
#include "runsym/serialize.hpp"
#include "runsym/verify.hpp"

namespace {

using namespace runsym;

enum ExitCode { kOk = 0, kUsage = 1, kRejected = 2, kVerificationFailed = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputFlags {
  bool json = false;
  bool tsv = false;
  bool use_tsv() const { return tsv && !json; }
};

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + to_decimal(values[i]);
  return out;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

void print_spec_tsv(const RunClassSpec& spec) {
  std::cout << "m\t" << spec.period << "\nT\t" << join(spec.residues) << "\nN\t" << join(spec.numerator.coeffs())
            << "\na\t" << join(spec.polynomial.coeffs()) << '\n';
}

// --- classify -------------------------------------------------------------

struct ClassifyArgs {
  std::string coefficients;
  std::size_t max_degree = 10000;
  OutputFlags out;
};

int cmd_classify(const ClassifyArgs& args) {
  const IntPolynomial a = parse_coefficient_list(args.coefficients);
  if (!a.is_zero() && a.degree() > args.max_degree) {
    throw UsageError("polynomial degree " + std::to_string(a.degree()) + " above --max-degree");
  }
  const Classification result = classify_reciprocal(a);
  if (const auto* rejection = std::get_if<Rejection>(&result)) {
    if (args.out.use_tsv()) {
      std::cout << "status\trejected\nreason\t" << rejection->describe() << '\n';
    } else {
      std::cout << Json{{"status", "rejected"}, {"rejection", to_json(*rejection)}}.dump() << '\n';
    }
    return kRejected;
  }
  const auto& spec = std::get<RunClassSpec>(result);
  const auto evidence = ogf_inverse(a, 3 * spec.period - 1);
  if (args.out.use_tsv()) {
    std::cout << "status\taccepted\n";
    print_spec_tsv(spec);
    std::cout << "evidence\t" << join(evidence.coeffs()) << '\n';
  } else {
    std::cout << Json{{"status", "accepted"}, {"spec", to_json(spec)}, {"evidence", to_json(evidence)}}.dump() << '\n';
  }
  return kOk;
}

// --- table ----------------------------------------------------------------

inline constexpr std::size_t kMaxTableN = 200;

struct TableArgs {
  std::size_t m = 2, r = 2, b = 1, nmax = 13;
  bool verify = false;
  std::string from_spec;
  std::size_t max_n = 9;
  OutputFlags out;
};

RunClassSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open spec file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, std::string("spec file: ") + e.what());
  }
  // accept both a bare spec and the output of `classify`
  return run_class_spec_from_json(j.contains("spec") ? j.at("spec") : j);
}

int cmd_table(const TableArgs& args) {
  if (args.nmax > kMaxTableN) throw UsageError("--nmax must be at most 200");

  IntPolynomial a;
  RunPredicate pred = RunPredicate::all();
  Json params;
  if (!args.from_spec.empty()) {
    const RunClassSpec spec = load_spec(args.from_spec);
    a = spec.polynomial;
    pred = RunPredicate::from_spec(spec);
    params = Json{{"spec", to_json(spec)}};
  } else {
    if (args.m == 0 || args.r == 0 || args.b == 0) throw UsageError("--m, --r and --b must be positive");
    a = congruence_polynomial(args.m, args.r, args.b);
    std::vector<std::size_t> residues(args.r);
    for (std::size_t i = 0; i < args.r; ++i) residues[i] = i * args.b;
    pred = RunPredicate::residue(args.m * args.r * args.b, residues);
    params = Json{{"m", args.m}, {"r", args.r}, {"b", args.b}};
  }

  const auto u = egf_inverse(TruncatedSeries::from_polynomial(Convention::Egf, a, args.nmax));

  bool verified = true;
  Json mismatches = Json::array();
  const std::size_t verify_upto = std::min(args.nmax, args.max_n);
  if (args.verify) {
    for (std::size_t n = 0; n <= verify_upto; ++n) {
      const BigInt count = count_perms_restricted(n, pred, std::max(args.max_n, kDefaultPermutationCap));
      if (count != u[n]) {
        verified = false;
        mismatches.push_back(Json{{"n", n}, {"egf", to_decimal(u[n])}, {"permutations", to_decimal(count)}});
      }
    }
  }

  if (args.out.use_tsv()) {
    for (std::size_t n = 0; n <= args.nmax; ++n) {
      std::cout << n << '\t' << u[n];
      if (args.verify && n <= verify_upto) std::cout << '\t' << "verified";
      std::cout << '\n';
    }
    if (args.verify) std::cout << "# verify\t" << (verified ? "pass" : "FAIL") << '\n';
  } else {
    Json out = params;
    out["nmax"] = args.nmax;
    out["a"] = to_json(a);
    out["u"] = to_json(u);
    if (args.verify) {
      out["verified"] = verified;
      out["verified_upto"] = verify_upto;
      if (!verified) out["mismatches"] = mismatches;
    }
    std::cout << out.dump() << '\n';
  }
  return verified ? kOk : kVerificationFailed;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  VerifyOptions options;
  bool timing = false;
  OutputFlags out;
};

int cmd_verify(const VerifyArgs& args) {
  const auto suite = parse_suite(args.suite);
  if (!suite) {
    throw UsageError("unknown suite '" + args.suite + "' (paper-examples, run-theorem, oracles, periodicity, all)");
  }
  bool all_passed = true;
  for (const auto& report : run_suite(*suite, args.options)) {
    all_passed = all_passed && report.passed;
    if (args.out.use_tsv()) {
      std::cout << (report.passed ? "PASS" : "FAIL") << '\t' << report.claim << '\t' << report.parameters.dump() << '\t'
                << report.computed;
      if (args.timing) std::cout << '\t' << report.wall_ms;
      std::cout << '\n';
    } else {
      std::cout << to_json(report, args.timing).dump() << '\n';
    }
  }
  return all_passed ? kOk : kVerificationFailed;
}

// --- search ---------------------------------------------------------------

int cmd_search(std::size_t m, const OutputFlags& out) {
  if (m == 0) throw UsageError("m must be positive");
  std::vector<RunClassSpec> specs;
  try {
    specs = search_zero_one_products(m);
  } catch (const Error& e) {
    if (e.code() != Errc::TooManyDivisors) throw;
    std::cout << Json{{"status", "rejected"}, {"reason", e.what()}}.dump() << '\n';
    return kRejected;
  }
  for (const auto& spec : specs) {
    if (out.use_tsv()) {
      std::cout << spec.period << '\t' << join(spec.residues) << '\t' << join(spec.numerator.coeffs()) << '\t'
                << join(spec.polynomial.coeffs()) << '\n';
    } else {
      std::cout << to_json(spec).dump() << '\n';
    }
  }
  return kOk;
}

void add_output_flags(CLI::App* cmd, OutputFlags& out) {
  cmd->add_flag("--json", out.json, "JSON output (default)");
  cmd->add_flag("--tsv", out.tsv, "tab-separated output");
}

}  // namespace

int main(int argc, char** argv) {
  runsym::configure_threads_from_env();

  CLI::App app{"Run-length restricted permutation and word enumeration"};
  app.require_subcommand(1);

  ClassifyArgs classify;
  auto* classify_cmd = app.add_subcommand("classify", "decide whether 1/a(x) has only 0/1 coefficients");
  classify_cmd->add_option("coefficients", classify.coefficients, "a(x), low to high, comma or space separated")
      ->required();
  classify_cmd->add_option("--max-degree", classify.max_degree, "largest accepted input degree");
  add_output_flags(classify_cmd, classify.out);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "u_n from the reciprocal exponential series");
  table_cmd->add_option("--m", table.m, "number of blocks");
  table_cmd->add_option("--r", table.r, "residues per block");
  table_cmd->add_option("--b", table.b, "scale");
  table_cmd->add_option("--nmax", table.nmax, "largest n (at most 200)");
  table_cmd->add_flag("--verify", table.verify, "cross-check small n against permutation enumeration");
  table_cmd->add_option("--from-spec", table.from_spec, "read a(x) from a classify/search JSON spec");
  table_cmd->add_option("--max-n", table.max_n, "largest n checked by --verify");
  add_output_flags(table_cmd, table.out);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", verify.suite, "paper-examples | run-theorem | oracles | periodicity | all")->required();
  verify_cmd->add_option("--max-n", verify.options.max_n, "permutation enumeration size");
  verify_cmd->add_option("--max-degree", verify.options.max_degree, "NSym truncation order");
  verify_cmd->add_flag("--timing", verify.timing, "include wall times");
  add_output_flags(verify_cmd, verify.out);

  std::size_t search_m = 0;
  OutputFlags search_out;
  auto* search_cmd = app.add_subcommand("search", "0/1 products of cyclotomic polynomials for period m");
  search_cmd->add_option("m", search_m, "period")->required();
  add_output_flags(search_cmd, search_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(classify);
    if (*table_cmd) return cmd_table(table);
    if (*verify_cmd) return cmd_verify(verify);
    if (*search_cmd) return cmd_search(search_m, search_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const runsym::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::TooManyDivisors ? kRejected : kUsage;
  }
  return kUsage;
}
