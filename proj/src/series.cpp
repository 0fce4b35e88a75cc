#include "runsym/series.hpp"

#include <algorithm>
#include <string>

#include "runsym/error.hpp"

namespace runsym {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::from_ints(std::span<const long long> coeffs) {
  return IntPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

IntPolynomial IntPolynomial::monomial(std::size_t k, BigInt c) {
  std::vector<BigInt> coeffs(k + 1);
  coeffs[k] = std::move(c);
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPolynomial::degree() const {
  if (coeffs_.empty()) throw Error(Errc::ZeroPolynomial, "degree of the zero polynomial");
  return coeffs_.size() - 1;
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<BigInt> out(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(i) + q.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& p) {
  std::vector<BigInt> out = p.coeffs();
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) { return p + (-q); }

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> poly_try_divexact(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  if (p.is_zero()) return IntPolynomial{};
  const std::size_t dq = q.degree();
  const std::size_t dp = p.degree();
  if (dp < dq) return std::nullopt;

  std::vector<BigInt> rem = p.coeffs();
  std::vector<BigInt> quot(dp - dq + 1);
  const BigInt& lead = q.coeffs().back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + dq];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    quot[k] = top / lead;
    for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= quot[k] * q.coeffs()[j];
  }
  for (std::size_t i = 0; i < dq; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial poly_divexact(const IntPolynomial& p, const IntPolynomial& q) {
  auto quotient = poly_try_divexact(p, q);
  if (!quotient) throw Error(Errc::NotDivisible, "divisor leaves a nonzero remainder");
  return *std::move(quotient);
}

IntPolynomial one_minus_x_pow(std::size_t m) {
  std::vector<BigInt> coeffs(m + 1);
  coeffs[0] += 1;
  coeffs[m] -= 1;
  return IntPolynomial(std::move(coeffs));
}

TruncatedSeries::TruncatedSeries(Convention convention, std::vector<BigInt> coeffs)
    : convention_(convention), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::InvalidArgument, "a truncated series needs at least c_0");
}

TruncatedSeries TruncatedSeries::zero(Convention convention, std::size_t order) {
  return TruncatedSeries(convention, std::vector<BigInt>(order + 1));
}

TruncatedSeries TruncatedSeries::one(Convention convention, std::size_t order) {
  std::vector<BigInt> coeffs(order + 1);
  coeffs[0] = 1;
  return TruncatedSeries(convention, std::move(coeffs));
}

TruncatedSeries TruncatedSeries::from_polynomial(Convention convention, const IntPolynomial& p,
                                                 std::size_t order) {
  std::vector<BigInt> coeffs(order + 1);
  for (std::size_t i = 0; i <= order; ++i) coeffs[i] = p.coeff(i);
  return TruncatedSeries(convention, std::move(coeffs));
}

TruncatedSeries ogf_inverse(const IntPolynomial& p, std::size_t order) {
  if (p.coeff(0) != 1) throw Error(Errc::NonUnitConstantTerm, "ogf_inverse needs p(0) = 1");
  const auto& a = p.coeffs();
  std::vector<BigInt> g(order + 1);
  g[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    BigInt acc = 0;
    const std::size_t kmax = std::min(n, a.size() - 1);
    for (std::size_t k = 1; k <= kmax; ++k) acc += a[k] * g[n - k];
    g[n] = -acc;
  }
  return TruncatedSeries(Convention::Ogf, std::move(g));
}

namespace {

void require_convention(const TruncatedSeries& s, Convention c, const char* op) {
  if (s.convention() != c) throw Error(Errc::InvalidArgument, std::string(op) + ": wrong series convention");
}

// Row n of Pascal's triangle, built incrementally by the callers below.
void next_pascal_row(std::vector<BigInt>& row) {
  row.emplace_back(1);
  for (std::size_t k = row.size() - 2; k >= 1; --k) row[k] += row[k - 1];
}

}  // namespace

TruncatedSeries egf_inverse(const TruncatedSeries& c) {
  require_convention(c, Convention::Egf, "egf_inverse");
  if (c[0] != 1) throw Error(Errc::NonUnitConstantTerm, "egf_inverse needs c_0 = 1");
  const std::size_t order = c.order();
  std::vector<BigInt> u(order + 1);
  u[0] = 1;
  std::vector<BigInt> row{1};
  for (std::size_t n = 1; n <= order; ++n) {
    next_pascal_row(row);
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (c[k] == 0) continue;
      acc += row[k] * c[k] * u[n - k];
    }
    u[n] = -acc;
  }
  return TruncatedSeries(Convention::Egf, std::move(u));
}

TruncatedSeries egf_binomial_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_convention(a, Convention::Egf, "egf_binomial_mul");
  require_convention(b, Convention::Egf, "egf_binomial_mul");
  if (a.order() != b.order()) throw Error(Errc::OrderMismatch, "egf_binomial_mul operands differ in order");
  std::vector<BigInt> out(a.order() + 1);
  std::vector<BigInt> row{1};
  for (std::size_t n = 0; n <= a.order(); ++n) {
    if (n > 0) next_pascal_row(row);
    for (std::size_t k = 0; k <= n; ++k) out[n] += row[k] * a[k] * b[n - k];
  }
  return TruncatedSeries(Convention::Egf, std::move(out));
}

TruncatedSeries ogf_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_convention(a, Convention::Ogf, "ogf_mul");
  require_convention(b, Convention::Ogf, "ogf_mul");
  if (a.order() != b.order()) throw Error(Errc::OrderMismatch, "ogf_mul operands differ in order");
  std::vector<BigInt> out(a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) out[n] += a[k] * b[n - k];
  }
  return TruncatedSeries(Convention::Ogf, std::move(out));
}

TruncatedSeries poly_times_series(const IntPolynomial& p, const TruncatedSeries& s) {
  require_convention(s, Convention::Ogf, "poly_times_series");
  return ogf_mul(TruncatedSeries::from_polynomial(Convention::Ogf, p, s.order()), s);
}

TruncatedSeries rational_expand(const IntPolynomial& numerator, std::size_t m, std::size_t order) {
  if (m == 0) throw Error(Errc::InvalidArgument, "rational_expand needs m >= 1");
  std::vector<BigInt> out(order + 1);
  const auto& n = numerator.coeffs();
  for (std::size_t shift = 0; shift <= order; shift += m) {
    for (std::size_t i = 0; i < n.size() && shift + i <= order; ++i) out[shift + i] += n[i];
  }
  return TruncatedSeries(Convention::Ogf, std::move(out));
}

}  // namespace runsym
