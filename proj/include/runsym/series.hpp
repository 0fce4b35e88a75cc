#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "runsym/bigint.hpp"

namespace runsym {

/// Dense integer polynomial, coefficient of x^i at index i.
///
/// Trailing zeros are stripped on construction, so the zero polynomial is the
/// empty coefficient list and equality is plain vector equality.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial from_ints(std::span<const long long> coeffs);
  /// c * x^k
  static IntPolynomial monomial(std::size_t k, BigInt c = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Throws Error(ZeroPolynomial) for the zero polynomial.
  std::size_t degree() const;
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  BigInt coeff(std::size_t i) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator-(const IntPolynomial& p);

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
inline IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) { return poly_mul(p, q); }

/// Exact quotient p / q. Throws Error(NotDivisible) if q does not divide p
/// over the integers and Error(ZeroPolynomial) if q is zero.
IntPolynomial poly_divexact(const IntPolynomial& p, const IntPolynomial& q);

/// Exact quotient, or nullopt when q does not divide p. q must be nonzero.
std::optional<IntPolynomial> poly_try_divexact(const IntPolynomial& p, const IntPolynomial& q);

/// 1 - x^m
IntPolynomial one_minus_x_pow(std::size_t m);

enum class Convention { Ogf, Egf };

/// Coefficients c_0..c_D of a series truncated at order D.
///
/// Ogf means sum c_n x^n; Egf means sum c_n x^n / n!. Egf series here always
/// carry integer c_n, and all Egf arithmetic is binomial convolution.
class TruncatedSeries {
 public:
  /// coeffs must be nonempty; order is coeffs.size() - 1.
  TruncatedSeries(Convention convention, std::vector<BigInt> coeffs);

  static TruncatedSeries zero(Convention convention, std::size_t order);
  static TruncatedSeries one(Convention convention, std::size_t order);
  /// The polynomial's coefficients padded with zeros (or cut) to order.
  static TruncatedSeries from_polynomial(Convention convention, const IntPolynomial& p, std::size_t order);

  Convention convention() const noexcept { return convention_; }
  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t n) const { return coeffs_.at(n); }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  Convention convention_;
  std::vector<BigInt> coeffs_;
};

/// 1/p to order D through g_n = -sum_{k>=1} p_k g_{n-k}.
/// Throws Error(NonUnitConstantTerm) unless p(0) = 1.
TruncatedSeries ogf_inverse(const IntPolynomial& p, std::size_t order);

/// Binomial-convolution inverse u_n = -sum_{k=1}^{n} C(n,k) c_k u_{n-k}.
TruncatedSeries egf_inverse(const TruncatedSeries& c);

/// (a*b)_n = sum_k C(n,k) a_k b_{n-k}. Throws Error(OrderMismatch).
TruncatedSeries egf_binomial_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product of two Ogf series of equal order. Throws Error(OrderMismatch).
TruncatedSeries ogf_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// p * s truncated to the order of s (Ogf).
TruncatedSeries poly_times_series(const IntPolynomial& p, const TruncatedSeries& s);

/// N(x) / (1 - x^m) to order D: N + x^m N + x^{2m} N + ...
TruncatedSeries rational_expand(const IntPolynomial& numerator, std::size_t m, std::size_t order);

}  // namespace runsym
