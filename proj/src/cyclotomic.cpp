#include "runsym/cyclotomic.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

#include "runsym/error.hpp"

namespace runsym {

std::vector<std::size_t> divisors(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "divisors of 0");
  std::vector<std::size_t> small, large;
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::size_t euler_phi(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "euler_phi(0)");
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Phi_e for every divisor e of n, built bottom-up by exact division.
std::map<std::size_t, IntPolynomial> cyclotomic_table(std::size_t n) {
  std::map<std::size_t, IntPolynomial> table;
  for (std::size_t e : divisors(n)) {
    IntPolynomial acc = IntPolynomial::monomial(e) - IntPolynomial{1};
    for (const auto& [f, phi_f] : table) {
      if (e % f == 0) acc = poly_divexact(acc, phi_f);
    }
    table.emplace(e, std::move(acc));
  }
  return table;
}

bool is_zero_one(const IntPolynomial& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const BigInt& c) { return c == 0 || c == 1; });
}

std::vector<std::size_t> support(const IntPolynomial& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] != 0) out.push_back(i);
  }
  return out;
}

}  // namespace

IntPolynomial cyclotomic_poly(std::size_t d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "cyclotomic_poly(0)");
  return cyclotomic_table(d).at(d);
}

std::size_t cyclotomic_order_bound(std::size_t degree) { return 2 * degree * degree + 2; }

IntPolynomial CyclotomicFactorization::product() const {
  IntPolynomial acc = remainder;
  for (std::size_t d : orders) acc = acc * cyclotomic_poly(d);
  return sign < 0 ? -acc : acc;
}

std::size_t CyclotomicFactorization::multiplicity(std::size_t d) const {
  return static_cast<std::size_t>(std::count(orders.begin(), orders.end(), d));
}

CyclotomicFactorization cyclotomic_factorization(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "cyclotomic_factorization of zero");
  CyclotomicFactorization out;
  IntPolynomial rest = p;
  const std::size_t bound = cyclotomic_order_bound(p.degree());
  for (std::size_t d = 1; d <= bound && rest.degree() > 0; ++d) {
    if (euler_phi(d) > rest.degree()) continue;
    const IntPolynomial phi = cyclotomic_poly(d);
    while (rest.degree() >= phi.degree()) {
      auto quotient = poly_try_divexact(rest, phi);
      if (!quotient) break;
      rest = *std::move(quotient);
      out.orders.push_back(d);
    }
  }
  if (rest.coeffs().back() < 0) {
    rest = -rest;
    out.sign = -1;
  }
  out.remainder = std::move(rest);
  return out;
}

bool RunClassSpec::allows(std::size_t run_length) const {
  if (run_length == 0) return false;
  return std::binary_search(residues.begin(), residues.end(), run_length % period);
}

void RunClassSpec::validate() const {
  if (period == 0) throw Error(Errc::CheckFailed, "period must be positive");
  if (residues.empty() || residues.front() != 0) throw Error(Errc::CheckFailed, "residue set must contain 0");
  if (!std::is_sorted(residues.begin(), residues.end()) ||
      std::adjacent_find(residues.begin(), residues.end()) != residues.end())
    throw Error(Errc::CheckFailed, "residue set must be strictly ascending");
  if (residues.back() >= period) throw Error(Errc::CheckFailed, "residue out of range");
  std::vector<BigInt> expected(residues.back() + 1);
  for (std::size_t t : residues) expected[t] = 1;
  if (numerator != IntPolynomial(std::move(expected))) throw Error(Errc::CheckFailed, "N differs from sum of x^t");
  if (numerator * polynomial != one_minus_x_pow(period)) throw Error(Errc::CheckFailed, "a * N != 1 - x^m");
}

RunClassSpec make_run_class_spec(const IntPolynomial& numerator, std::size_t period) {
  if (period == 0) throw Error(Errc::InvalidArgument, "period must be positive");
  if (numerator.coeff(0) != 1 || !is_zero_one(numerator) || numerator.degree() >= period)
    throw Error(Errc::InvalidArgument, "numerator must be a 0/1 polynomial with N(0) = 1 and deg N < m");
  RunClassSpec spec;
  spec.period = period;
  spec.residues = support(numerator);
  spec.numerator = numerator;
  spec.polynomial = poly_divexact(one_minus_x_pow(period), numerator);
  return spec;
}

const char* reason_name(Rejection::Reason reason) noexcept {
  switch (reason) {
    case Rejection::Reason::RepeatedFactor: return "repeated-cyclotomic-factor";
    case Rejection::Reason::NonCyclotomicFactor: return "non-cyclotomic-factor";
    case Rejection::Reason::CoefficientOutOfRange: return "coefficient-out-of-range";
  }
  return "unknown";
}

std::string Rejection::describe() const {
  std::ostringstream os;
  os << reason_name(reason) << ": ";
  switch (reason) {
    case Reason::RepeatedFactor:
      os << "Phi_" << order << " divides more than once";
      break;
    case Reason::NonCyclotomicFactor:
      os << "cofactor of degree " << cofactor.degree() << " has no cyclotomic factor";
      break;
    case Reason::CoefficientOutOfRange:
      os << "coefficient " << value << " at x^" << index << " of (1 - x^" << period << ")/a";
      break;
  }
  return os.str();
}

Classification classify_reciprocal(const IntPolynomial& a) {
  if (a.coeff(0) != 1) throw Error(Errc::NonUnitConstantTerm, "classify_reciprocal needs a(0) = 1");
  if (a.degree() == 0) throw Error(Errc::ConstantPolynomial, "classify_reciprocal needs a nonconstant polynomial");

  const CyclotomicFactorization factors = cyclotomic_factorization(a);
  if (factors.remainder != IntPolynomial{1}) {
    Rejection r;
    r.reason = Rejection::Reason::NonCyclotomicFactor;
    r.cofactor = factors.remainder;
    return r;
  }
  auto repeat = std::adjacent_find(factors.orders.begin(), factors.orders.end());
  if (repeat != factors.orders.end()) {
    Rejection r;
    r.reason = Rejection::Reason::RepeatedFactor;
    r.order = *repeat;
    return r;
  }

  std::size_t m = 1;
  for (std::size_t d : factors.orders) m = std::lcm(m, d);
  IntPolynomial numerator = poly_divexact(one_minus_x_pow(m), a);
  for (std::size_t i = 0; i < numerator.coeffs().size(); ++i) {
    const BigInt& c = numerator.coeffs()[i];
    if (c != 0 && c != 1) {
      Rejection r;
      r.reason = Rejection::Reason::CoefficientOutOfRange;
      r.index = i;
      r.value = c;
      r.period = m;
      return r;
    }
  }

  RunClassSpec spec;
  spec.period = m;
  spec.residues = support(numerator);
  spec.numerator = std::move(numerator);
  spec.polynomial = a;
  return spec;
}

PeriodResult detect_period(const IntPolynomial& num, const IntPolynomial& den, const BigInt& bound) {
  if (den.coeff(0) != 1) throw Error(Errc::NonUnitConstantTerm, "detect_period needs den(0) = 1");
  if (bound < 1) throw Error(Errc::InvalidArgument, "detect_period needs bound >= 1");

  // state holds (num - den * g_{<n}) / x^n, padded to a fixed width
  const std::size_t width = std::max<std::size_t>({den.degree(), num.coeffs().size(), 1});
  std::vector<BigInt> state(width);
  for (std::size_t i = 0; i < num.coeffs().size(); ++i) state[i] = num.coeffs()[i];

  std::map<std::vector<BigInt>, std::size_t> seen;
  std::vector<BigInt> coeffs;
  for (std::size_t n = 0;; ++n) {
    auto [it, inserted] = seen.emplace(state, n);
    if (!inserted) {
      Periodicity out;
      out.preperiod = it->second;
      out.period = n - it->second;
      out.prefix.assign(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(out.preperiod));
      out.cycle.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(out.preperiod), coeffs.end());
      return out;
    }
    const BigInt g = state[0];
    if (abs(g) > bound) return Unbounded{n, g};
    coeffs.push_back(g);
    for (std::size_t j = 0; j + 1 < width; ++j) state[j] = state[j + 1] - g * den.coeff(j + 1);
    state[width - 1] = -g * den.coeff(width);
  }
}

IntPolynomial congruence_polynomial(std::size_t m, std::size_t r, std::size_t b) {
  if (m == 0 || r == 0 || b == 0) throw Error(Errc::InvalidArgument, "congruence_polynomial needs m, r, b >= 1");
  IntPolynomial acc;
  for (std::size_t k = 0; k < m; ++k) {
    acc = acc + IntPolynomial::monomial(k * r * b) - IntPolynomial::monomial((k * r + 1) * b);
  }
  return acc;
}

namespace {

struct SearchTable {
  std::size_t m;
  std::vector<std::size_t> orders;
  std::vector<IntPolynomial> phis;
};

SearchTable make_search_table(std::size_t m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "search needs m >= 1");
  SearchTable t{m, divisors(m), {}};
  if (t.orders.size() > kMaxSearchDivisors)
    throw Error(Errc::TooManyDivisors, std::to_string(m) + " has " + std::to_string(t.orders.size()) + " divisors");
  auto table = cyclotomic_table(m);
  for (std::size_t d : t.orders) t.phis.push_back(table.at(d));
  return t;
}

std::optional<RunClassSpec> search_candidate(const SearchTable& t, std::uint64_t mask) {
  std::size_t degree = 0;
  for (std::size_t i = 0; i < t.orders.size(); ++i) {
    if (mask >> i & 1U) degree += t.phis[i].degree();
  }
  if (degree >= t.m) return std::nullopt;
  IntPolynomial n{1};
  for (std::size_t i = 0; i < t.orders.size(); ++i) {
    if (mask >> i & 1U) n = n * t.phis[i];
  }
  if (!is_zero_one(n)) return std::nullopt;
  return make_run_class_spec(n, t.m);
}

void sort_specs(std::vector<RunClassSpec>& specs) {
  std::sort(specs.begin(), specs.end(),
            [](const RunClassSpec& x, const RunClassSpec& y) { return x.residues < y.residues; });
}

}  // namespace

std::vector<RunClassSpec> search_zero_one_products_serial(std::size_t m) {
  const SearchTable t = make_search_table(m);
  std::vector<RunClassSpec> out;
  const std::uint64_t count = std::uint64_t{1} << t.orders.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (auto spec = search_candidate(t, mask)) out.push_back(*std::move(spec));
  }
  sort_specs(out);
  return out;
}

std::vector<RunClassSpec> search_zero_one_products(std::size_t m) {
  const SearchTable t = make_search_table(m);
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << t.orders.size());
  std::vector<RunClassSpec> out;
#pragma omp parallel
  {
    std::vector<RunClassSpec> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t mask = 0; mask < count; ++mask) {
      if (auto spec = search_candidate(t, static_cast<std::uint64_t>(mask))) local.push_back(*std::move(spec));
    }
#pragma omp critical(runsym_search_merge)
    out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  sort_specs(out);
  return out;
}

}  // namespace runsym
