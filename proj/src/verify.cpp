#include "runsym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

#include "runsym/error.hpp"
#include "runsym/known_values.hpp"
#include "runsym/oracles.hpp"

namespace runsym {

namespace {

struct Outcome {
  std::string expected;
  std::string computed;
  bool passed = false;
  Json counterexample;
};

VerificationReport run_claim(std::string claim, Json parameters, std::string provenance,
                             const std::function<Outcome()>& body) {
  VerificationReport report;
  report.claim = std::move(claim);
  report.parameters = std::move(parameters);
  report.provenance = std::move(provenance);
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome outcome = body();
    report.expected = std::move(outcome.expected);
    report.computed = std::move(outcome.computed);
    report.passed = outcome.passed;
    report.counterexample = std::move(outcome.counterexample);
  } catch (const Error& e) {
    report.computed = std::string("error: ") + e.what();
    report.passed = false;
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

template <typename Range>
std::string join(const Range& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os.str();
}

std::vector<BigInt> to_big(std::span<const long long> values) { return {values.begin(), values.end()}; }

Outcome compare_sequences(const std::vector<BigInt>& expected, const std::vector<BigInt>& computed) {
  Outcome out{join(expected), join(computed), expected == computed, nullptr};
  if (!out.passed) {
    for (std::size_t i = 0; i < std::min(expected.size(), computed.size()); ++i) {
      if (expected[i] != computed[i]) {
        out.counterexample = Json{{"n", i}, {"expected", to_decimal(expected[i])}, {"computed", to_decimal(computed[i])}};
        break;
      }
    }
  }
  return out;
}

Json spec_params(const RunClassSpec& spec) { return Json{{"m", spec.period}, {"T", spec.residues}}; }

RunClassSpec accepted_spec(const IntPolynomial& a) {
  auto result = classify_reciprocal(a);
  if (auto* spec = std::get_if<RunClassSpec>(&result)) return *spec;
  throw Error(Errc::CheckFailed, "expected polynomial to classify: " + std::get<Rejection>(result).describe());
}

struct WorkedExample {
  const char* claim;
  IntPolynomial polynomial;
  IntPolynomial numerator;
  std::size_t period;
  std::vector<std::size_t> residues;
};

std::vector<WorkedExample> worked_examples() {
  using namespace known;
  return {
      {"classify-period-12", IntPolynomial::from_ints(kPeriod12Polynomial), IntPolynomial::from_ints(kPeriod12Numerator),
       12, {kPeriod12Residues.begin(), kPeriod12Residues.end()}},
      {"classify-period-18", IntPolynomial::from_ints(kPeriod18Polynomial), IntPolynomial::from_ints(kPeriod18Numerator),
       18, {kPeriod18Residues.begin(), kPeriod18Residues.end()}},
      {"classify-period-30", IntPolynomial::from_ints(kPeriod30Polynomial), IntPolynomial::from_ints(kPeriod30Numerator),
       30, {kPeriod30Residues.begin(), kPeriod30Residues.end()}},
  };
}

void worked_example_suite(std::vector<VerificationReport>& out) {
  out.push_back(run_claim("egf-inverse-alternating-quartic", Json{{"m", 2}, {"r", 2}, {"nmax", 13}},
                          "published u_n table", [] {
                            const auto a = congruence_polynomial(2, 2, 1);
                            const auto u = egf_inverse(TruncatedSeries::from_polynomial(Convention::Egf, a, 13));
                            return compare_sequences(to_big(known::kAlternatingQuarticTable), u.coeffs());
                          }));

  for (const auto& ex : worked_examples()) {
    out.push_back(run_claim(ex.claim, Json{{"a", to_json(ex.polynomial)}}, "published worked example", [&ex] {
      const RunClassSpec spec = accepted_spec(ex.polynomial);
      const RunClassSpec rebuilt = make_run_class_spec(ex.numerator, ex.period);
      Outcome o;
      o.expected = "m=" + std::to_string(ex.period) + " T={" + join(ex.residues) + "} a=" + to_json(ex.polynomial).dump();
      o.computed = "m=" + std::to_string(spec.period) + " T={" + join(spec.residues) + "} a=" +
                   to_json(rebuilt.polynomial).dump();
      o.passed = spec.period == ex.period && spec.residues == ex.residues && spec.numerator == ex.numerator &&
                 rebuilt.polynomial == ex.polynomial;
      return o;
    }));
  }

  out.push_back(run_claim("phi5-phi6-product", Json{{"orders", {5, 6}}}, "published product", [] {
    const auto product = cyclotomic_poly(5) * cyclotomic_poly(6);
    const IntPolynomial expected = IntPolynomial::from_ints(known::kPeriod30Numerator);
    return Outcome{to_json(expected).dump(), to_json(product).dump(), product == expected, nullptr};
  }));

  for (auto [m, residues] : {std::pair<std::size_t, std::vector<std::size_t>>{12, {0, 2, 3, 5}},
                             std::pair<std::size_t, std::vector<std::size_t>>{30, {0, 2, 3, 4, 6}}}) {
    out.push_back(run_claim("search-contains", Json{{"m", m}, {"T", residues}}, "published worked example",
                            [m = m, residues = residues] {
                              const auto specs = search_zero_one_products(m);
                              const bool found = std::any_of(specs.begin(), specs.end(),
                                                             [&](const RunClassSpec& s) { return s.residues == residues; });
                              return Outcome{"T={" + join(residues) + "} present",
                                             std::to_string(specs.size()) + " specs, " + (found ? "present" : "absent"),
                                             found, nullptr};
                            }));
  }
}

std::vector<std::pair<std::string, RunClassSpec>> run_theorem_specs() {
  std::vector<std::pair<std::string, RunClassSpec>> specs;
  for (auto [m, r] : known::kCongruenceFamily) {
    specs.emplace_back("congruence m=" + std::to_string(m) + " r=" + std::to_string(r),
                       accepted_spec(congruence_polynomial(m, r, 1)));
  }
  for (const auto& ex : worked_examples()) specs.emplace_back(ex.claim, accepted_spec(ex.polynomial));
  return specs;
}

void run_theorem_suite(std::vector<VerificationReport>& out, const VerifyOptions& options) {
  for (const auto& [label, spec] : run_theorem_specs()) {
    Json params = spec_params(spec);
    params["label"] = label;
    params["D"] = options.max_degree;
    out.push_back(run_claim("ribbon-support", params, "derived: run theorem at finite order", [&spec = spec, &options] {
      const auto cert = run_theorem_check(spec, options.max_degree, std::max(options.max_degree, kDefaultNSymOrderCap));
      Outcome o;
      o.expected = "all ribbon coefficients 0/1, support = compositions with allowed parts";
      o.computed = cert.passed ? std::to_string(cert.support.size()) + " supported compositions"
                               : "coefficient " + to_decimal(cert.counterexample_coeff) + " off";
      o.passed = cert.passed;
      if (cert.counterexample) {
        o.counterexample = Json{{"composition", to_json(*cert.counterexample)},
                                {"coeff", to_decimal(cert.counterexample_coeff)}};
      }
      return o;
    }));
  }

  const std::size_t d = options.max_word_length;
  for (const auto& [label, spec] :
       {std::pair{std::string("congruence m=2 r=2"), accepted_spec(congruence_polynomial(2, 2, 1))},
        std::pair{std::string("classify-period-12"), accepted_spec(IntPolynomial::from_ints(known::kPeriod12Polynomial))}}) {
    for (std::size_t q = 1; q <= options.max_alphabet; ++q) {
      Json params = spec_params(spec);
      params["label"] = label;
      params["q"] = q;
      params["nmax"] = d;
      out.push_back(run_claim("word-specialization", params, "derived: word oracle", [&spec = spec, q, d] {
        const auto inverse = h_series_inverse(h_series_from_polynomial(spec.polynomial, d), d);
        const auto series = specialize_q(inverse, q);
        std::vector<BigInt> words;
        const auto pred = RunPredicate::from_spec(spec);
        for (std::size_t n = 0; n <= d; ++n) words.push_back(count_words_restricted(n, q, pred));
        return compare_sequences(words, series.coeffs());
      }));
    }
  }
}

void oracle_suite(std::vector<VerificationReport>& out, const VerifyOptions& options) {
  const std::size_t beta_max = std::min<std::size_t>(8, options.max_n);
  for (std::size_t n = 0; n <= beta_max; ++n) {
    out.push_back(run_claim("beta-consistency", Json{{"n", n}}, "derived: enumeration vs inclusion-exclusion", [n] {
      const auto histogram = beta_histogram(n);
      BigInt total = 0;
      Outcome o;
      o.passed = true;
      for (const auto& [l, count] : histogram) {
        total += count;
        const BigInt ie = beta_inclusion_exclusion(l);
        if (ie != count && o.passed) {
          o.passed = false;
          o.counterexample = Json{{"composition", to_json(l)}, {"enumerated", to_decimal(count)}, {"ie", to_decimal(ie)}};
        }
      }
      o.expected = "sum beta = " + to_decimal(factorial(n));
      o.computed = "sum beta = " + to_decimal(total);
      o.passed = o.passed && total == factorial(n);
      return o;
    }));
  }

  for (auto [m, r] : known::kCongruenceFamily) {
    out.push_back(run_claim("congruence-egf-vs-permutations", Json{{"m", m}, {"r", r}, {"nmax", options.max_n}},
                            "derived: permutation oracle", [m = m, r = r, &options] {
                              const auto a = congruence_polynomial(m, r, 1);
                              const auto u = egf_inverse(TruncatedSeries::from_polynomial(Convention::Egf, a, options.max_n));
                              std::vector<std::size_t> residues(r);
                              std::iota(residues.begin(), residues.end(), 0);
                              const auto pred = RunPredicate::residue(m * r, residues);
                              std::vector<BigInt> counts;
                              for (std::size_t n = 0; n <= options.max_n; ++n) counts.push_back(count_perms_restricted(n, pred));
                              return compare_sequences(counts, u.coeffs());
                            }));
  }

  const std::size_t nmax = std::min<std::size_t>(8, options.max_n);
  out.push_back(run_claim("scaled-congruence-psi-vs-permutations", Json{{"m", 2}, {"r", 2}, {"b", 2}, {"nmax", nmax}},
                          "derived: permutation oracle", [nmax] {
                            const auto f = h_series_from_polynomial(congruence_polynomial(2, 2, 2), nmax);
                            const auto u = psi_egf(h_series_inverse(f, nmax));
                            const auto pred = RunPredicate::residue(8, {0, 2});
                            std::vector<BigInt> counts;
                            for (std::size_t n = 0; n <= nmax; ++n) counts.push_back(count_perms_restricted(n, pred));
                            return compare_sequences(counts, u.coeffs());
                          }));
}

void periodicity_suite(std::vector<VerificationReport>& out, const VerifyOptions& options) {
  out.push_back(run_claim("three-way-classification", Json{{"degree", options.corpus_degree}, {"coefficients", "-1,0,1"}},
                          "derived: classifier vs prefix vs period detection", [&options] {
                            std::size_t checked = 0, accepted = 0;
                            Outcome o;
                            o.passed = true;
                            for (const auto& a : signed_unit_corpus(options.corpus_degree)) {
                              if (a.degree() == 0) continue;
                              const auto v = three_way_classification(a);
                              ++checked;
                              accepted += v.classifier;
                              if (!v.agree() && o.passed) {
                                o.passed = false;
                                o.counterexample = Json{{"a", to_json(a)},
                                                        {"classifier", v.classifier},
                                                        {"prefix", v.prefix_zero_one},
                                                        {"periodic", v.periodic_zero_one}};
                              }
                            }
                            o.expected = "no disagreements";
                            o.computed = std::to_string(checked) + " nonconstant polynomials, " +
                                         std::to_string(accepted) + " accepted";
                            return o;
                          }));
}

}  // namespace

Json to_json(const VerificationReport& report, bool include_timing) {
  Json out{{"claim", report.claim},         {"parameters", report.parameters}, {"expected", report.expected},
           {"provenance", report.provenance}, {"computed", report.computed},   {"passed", report.passed}};
  if (!report.counterexample.is_null()) out["counterexample"] = report.counterexample;
  if (include_timing) out["wall_ms"] = report.wall_ms;
  return out;
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "paper-examples") return Suite::WorkedExamples;
  if (name == "run-theorem") return Suite::RunTheorem;
  if (name == "oracles") return Suite::Oracles;
  if (name == "periodicity") return Suite::Periodicity;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

const char* suite_name(Suite suite) noexcept {
  switch (suite) {
    case Suite::WorkedExamples: return "paper-examples";
    case Suite::RunTheorem: return "run-theorem";
    case Suite::Oracles: return "oracles";
    case Suite::Periodicity: return "periodicity";
    case Suite::All: return "all";
  }
  return "unknown";
}

std::vector<VerificationReport> run_suite(Suite suite, const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::WorkedExamples) worked_example_suite(out);
  if (all || suite == Suite::RunTheorem) run_theorem_suite(out, options);
  if (all || suite == Suite::Oracles) oracle_suite(out, options);
  if (all || suite == Suite::Periodicity) periodicity_suite(out, options);
  return out;
}

ThreeWayVerdict three_way_classification(const IntPolynomial& a) {
  ThreeWayVerdict v;
  const auto classification = classify_reciprocal(a);
  if (const auto* spec = std::get_if<RunClassSpec>(&classification)) {
    v.classifier = true;
    v.window = 3 * spec->period;
  } else {
    v.window = 3 * cyclotomic_order_bound(a.degree());
  }

  const auto prefix = ogf_inverse(a, v.window - 1);
  v.prefix_zero_one = std::all_of(prefix.coeffs().begin(), prefix.coeffs().end(),
                                  [](const BigInt& c) { return c == 0 || c == 1; });

  const auto period = detect_period(IntPolynomial{1}, a, 1);
  if (const auto* p = std::get_if<Periodicity>(&period)) {
    auto zero_one = [](const BigInt& c) { return c == 0 || c == 1; };
    v.periodic_zero_one = std::all_of(p->prefix.begin(), p->prefix.end(), zero_one) &&
                          std::all_of(p->cycle.begin(), p->cycle.end(), zero_one);
  }
  return v;
}

std::vector<IntPolynomial> signed_unit_corpus(std::size_t degree) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < degree; ++i) count *= 3;
  std::vector<IntPolynomial> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<BigInt> coeffs{1};
    std::size_t rest = code;
    for (std::size_t i = 0; i < degree; ++i) {
      coeffs.emplace_back(static_cast<long long>(rest % 3) - 1);
      rest /= 3;
    }
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

}  // namespace runsym
