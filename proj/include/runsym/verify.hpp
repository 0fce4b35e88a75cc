#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "runsym/serialize.hpp"

namespace runsym {

struct VerificationReport {
  std::string claim;
  Json parameters = Json::object();
  std::string expected;
  std::string provenance;  // where the expected value comes from
  std::string computed;
  bool passed = false;
  double wall_ms = 0.0;
  Json counterexample;  // null when passed
};

Json to_json(const VerificationReport& report, bool include_timing);

enum class Suite { WorkedExamples, RunTheorem, Oracles, Periodicity, All };

std::optional<Suite> parse_suite(std::string_view name);
const char* suite_name(Suite suite) noexcept;

struct VerifyOptions {
  std::size_t max_n = 9;       // permutation enumeration size
  std::size_t max_degree = 8;  // NSym truncation order
  std::size_t max_word_length = 10;
  std::size_t max_alphabet = 3;
  std::size_t corpus_degree = 6;
};

std::vector<VerificationReport> run_suite(Suite suite, const VerifyOptions& options = {});

/// The three independent verdicts on "1/a has only 0/1 coefficients".
struct ThreeWayVerdict {
  bool classifier = false;     // classify_reciprocal accepted
  bool prefix_zero_one = false;  // the first `window` coefficients of 1/a are 0/1
  bool periodic_zero_one = false;  // detect_period(1, a, 1) succeeded with 0/1 cycle
  std::size_t window = 0;
  bool agree() const noexcept { return classifier == prefix_zero_one && prefix_zero_one == periodic_zero_one; }
};

/// window is 3m for an accepted polynomial and 3 * cyclotomic_order_bound(deg a)
/// otherwise. a must be nonconstant with a(0) = 1.
ThreeWayVerdict three_way_classification(const IntPolynomial& a);

/// Every polynomial 1 + c_1 x + ... + c_d x^d with c_i in {-1, 0, 1}
/// (3^d of them, the constant 1 included).
std::vector<IntPolynomial> signed_unit_corpus(std::size_t degree);

}  // namespace runsym
