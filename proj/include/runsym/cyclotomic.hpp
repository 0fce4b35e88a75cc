#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "runsym/series.hpp"

namespace runsym {

std::vector<std::size_t> divisors(std::size_t n);
std::size_t euler_phi(std::size_t n);

/// Phi_d by exact division of x^d - 1 by Phi_e for every proper divisor e.
IntPolynomial cyclotomic_poly(std::size_t d);

/// Largest cyclotomic order that can divide a polynomial of the given degree.
/// phi(d) >= sqrt(d/2) gives d <= 2 phi(d)^2 <= 2 deg^2.
std::size_t cyclotomic_order_bound(std::size_t degree);

struct CyclotomicFactorization {
  std::vector<std::size_t> orders;  // ascending, repeated per multiplicity
  IntPolynomial remainder;          // cyclotomic-free, positive leading coefficient
  int sign = 1;

  /// sign * remainder * prod Phi_d; equals the factored input.
  IntPolynomial product() const;
  std::size_t multiplicity(std::size_t d) const;
};

CyclotomicFactorization cyclotomic_factorization(const IntPolynomial& p);

/// A polynomial a with 1/a = N/(1 - x^m), N the 0/1 polynomial sum_{t in T} x^t.
///
/// The allowed run lengths are T* = { s >= 1 : s mod m in T }.
struct RunClassSpec {
  std::size_t period = 1;               // m
  std::vector<std::size_t> residues;    // T, ascending, contains 0
  IntPolynomial numerator;              // N
  IntPolynomial polynomial;             // a

  bool allows(std::size_t run_length) const;
  /// Throws Error(CheckFailed) naming the first violated invariant.
  void validate() const;

  friend bool operator==(const RunClassSpec&, const RunClassSpec&) = default;
};

/// Builds the spec for a 0/1 numerator and period; a = (1 - x^m) / N.
RunClassSpec make_run_class_spec(const IntPolynomial& numerator, std::size_t period);

/// Why a polynomial's reciprocal is not a 0/1 series.
struct Rejection {
  enum class Reason { RepeatedFactor, NonCyclotomicFactor, CoefficientOutOfRange };
  Reason reason{};
  std::size_t order = 0;     // RepeatedFactor: the repeated Phi_d
  IntPolynomial cofactor;    // NonCyclotomicFactor: the leftover factor
  std::size_t index = 0;     // CoefficientOutOfRange: first bad x^index of N
  BigInt value;              // CoefficientOutOfRange: its value
  std::size_t period = 0;    // CoefficientOutOfRange: the m that was tried

  std::string describe() const;
};

const char* reason_name(Rejection::Reason reason) noexcept;

using Classification = std::variant<RunClassSpec, Rejection>;

/// Decides whether every coefficient of 1/a is 0 or 1.
///
/// a must satisfy a(0) = 1 (else Error(NonUnitConstantTerm)) and be
/// nonconstant (else Error(ConstantPolynomial)). The procedure factors out
/// cyclotomic polynomials, requires a squarefree product of them, takes m as
/// the lcm of the orders and accepts iff N = (1 - x^m)/a has 0/1
/// coefficients. Any multiple km of m yields N(1 + x^m + ... + x^{(k-1)m}),
/// a disjoint replication of N since deg N < m, so the minimal m decides.
Classification classify_reciprocal(const IntPolynomial& a);

struct Periodicity {
  std::size_t preperiod = 0;
  std::size_t period = 0;
  std::vector<BigInt> prefix;  // the preperiod coefficients
  std::vector<BigInt> cycle;   // one full period
};

struct Unbounded {
  std::size_t index = 0;  // first coefficient whose magnitude exceeds the bound
  BigInt value;
};

using PeriodResult = std::variant<Periodicity, Unbounded>;

/// Expands num/den by long division until a coefficient leaves [-bound, bound]
/// or the division remainder repeats. The remainder determines every later
/// coefficient, so the first repeat gives the minimal preperiod and period.
PeriodResult detect_period(const IntPolynomial& num, const IntPolynomial& den, const BigInt& bound);

/// sum_{k=0}^{m-1} (x^{krb} - x^{(kr+1)b})
IntPolynomial congruence_polynomial(std::size_t m, std::size_t r, std::size_t b);

/// Largest divisor count accepted by search_zero_one_products.
inline constexpr std::size_t kMaxSearchDivisors = 20;

/// Every product N of distinct Phi_d (d | m) with 0/1 coefficients and
/// deg N < m, sorted by residue set. Throws Error(TooManyDivisors).
std::vector<RunClassSpec> search_zero_one_products(std::size_t m);
/// Single-threaded reference for search_zero_one_products.
std::vector<RunClassSpec> search_zero_one_products_serial(std::size_t m);

}  // namespace runsym
