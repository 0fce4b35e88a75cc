#include <doctest.h>

#include <algorithm>

#include "brute_force.hpp"
#include "runsym/cyclotomic.hpp"
#include "runsym/error.hpp"
#include "runsym/known_values.hpp"

using namespace runsym;

namespace {

RunClassSpec expect_spec(const Classification& c) {
  REQUIRE(std::holds_alternative<RunClassSpec>(c));
  return std::get<RunClassSpec>(c);
}

Rejection expect_rejection(const Classification& c) {
  REQUIRE(std::holds_alternative<Rejection>(c));
  return std::get<Rejection>(c);
}

std::vector<std::size_t> sizes(std::initializer_list<std::size_t> xs) { return xs; }

}  // namespace

TEST_CASE("divisors and euler_phi") {
  CHECK(divisors(12) == sizes({1, 2, 3, 4, 6, 12}));
  CHECK(divisors(1) == sizes({1}));
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(30) == 8);
  for (std::size_t n = 1; n <= 100; ++n) {
    std::size_t sum = 0;
    for (std::size_t d : divisors(n)) sum += euler_phi(d);
    CHECK(sum == n);
  }
}

TEST_CASE("cyclotomic_poly small cases") {
  CHECK(cyclotomic_poly(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic_poly(2) == IntPolynomial{1, 1});
  CHECK(cyclotomic_poly(5) == IntPolynomial{1, 1, 1, 1, 1});
  CHECK(cyclotomic_poly(6) == IntPolynomial{1, -1, 1});
  CHECK(cyclotomic_poly(12) == IntPolynomial{1, 0, -1, 0, 1});
  CHECK(cyclotomic_poly(18) == IntPolynomial{1, 0, 0, -1, 0, 0, 1});
  // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
  CHECK(cyclotomic_poly(105).coeff(7) == -2);
}

TEST_CASE("cyclotomic_poly matches the Mobius product formula") {
  for (int d = 1; d <= 120; ++d) {
    INFO("d = " << d);
    CHECK(cyclotomic_poly(static_cast<std::size_t>(d)) == IntPolynomial(brute::cyclotomic_by_mobius(d)));
  }
}

TEST_CASE("product of Phi_d over d | m is x^m - 1") {
  for (std::size_t m = 1; m <= 60; ++m) {
    IntPolynomial acc{1};
    for (std::size_t d : divisors(m)) acc = acc * cyclotomic_poly(d);
    CHECK(acc == -one_minus_x_pow(m));
    CHECK(cyclotomic_poly(m).coeffs().back() == 1);
    CHECK(cyclotomic_poly(m).degree() == euler_phi(m));
  }
}

TEST_CASE("cyclotomic_factorization of the worked examples") {
  const auto f12 = cyclotomic_factorization(IntPolynomial::from_ints(known::kPeriod12Polynomial));
  CHECK(f12.orders == sizes({1, 3, 12}));
  CHECK(f12.remainder == IntPolynomial{1});
  CHECK(f12.sign == -1);
  CHECK(f12.product() == IntPolynomial::from_ints(known::kPeriod12Polynomial));

  const auto f18 = cyclotomic_factorization(IntPolynomial::from_ints(known::kPeriod18Polynomial));
  CHECK(f18.orders == sizes({1, 2, 18}));
  CHECK(f18.remainder == IntPolynomial{1});
  CHECK(f18.product() == IntPolynomial::from_ints(known::kPeriod18Polynomial));

  const auto f30 = cyclotomic_factorization(IntPolynomial::from_ints(known::kPeriod30Polynomial));
  CHECK(f30.orders == sizes({1, 2, 3, 10, 15, 30}));
  CHECK(f30.product() == IntPolynomial::from_ints(known::kPeriod30Polynomial));
}

TEST_CASE("cyclotomic_factorization without cyclotomic factors and with repeats") {
  const auto f = cyclotomic_factorization(IntPolynomial{2, 0, 1});
  CHECK(f.orders.empty());
  CHECK(f.remainder == IntPolynomial{2, 0, 1});
  CHECK(f.sign == 1);

  const IntPolynomial squared = cyclotomic_poly(3) * cyclotomic_poly(3) * IntPolynomial{1, 1, 0, 1};
  const auto g = cyclotomic_factorization(squared);
  CHECK(g.multiplicity(3) == 2);
  CHECK(g.remainder == IntPolynomial{1, 1, 0, 1});
  CHECK(g.product() == squared);

  const auto h = cyclotomic_factorization(IntPolynomial{-3, 0, 0});
  CHECK(h.remainder == IntPolynomial{3});
  CHECK(h.sign == -1);
}

TEST_CASE("factorization remainder is cyclotomic-free (random products)") {
  for (std::size_t seed = 1; seed <= 40; ++seed) {
    IntPolynomial p{1, 1, 0, 1};  // x^3 + x + 1 has no root on the unit circle
    for (std::size_t d = 1; d <= 12; ++d) {
      if ((seed >> (d % 6)) & 1U) p = p * cyclotomic_poly(d);
    }
    const auto f = cyclotomic_factorization(p);
    CHECK(f.product() == p);
    for (std::size_t d = 1; d <= cyclotomic_order_bound(f.remainder.degree()); ++d) {
      if (f.remainder.degree() == 0) break;
      CHECK_FALSE(poly_try_divexact(f.remainder, cyclotomic_poly(d)).has_value());
    }
  }
}

TEST_CASE("classify_reciprocal on the worked examples") {
  const auto s12 = expect_spec(classify_reciprocal(IntPolynomial::from_ints(known::kPeriod12Polynomial)));
  CHECK(s12.period == 12);
  CHECK(s12.residues == sizes({0, 2, 3, 5}));
  CHECK(s12.numerator == IntPolynomial::from_ints(known::kPeriod12Numerator));
  CHECK_NOTHROW(s12.validate());

  const auto s18 = expect_spec(classify_reciprocal(IntPolynomial::from_ints(known::kPeriod18Polynomial)));
  CHECK(s18.period == 18);
  CHECK(s18.residues == sizes({0, 2, 3, 4, 5, 6, 7, 8, 10}));

  const auto s30 = expect_spec(classify_reciprocal(IntPolynomial::from_ints(known::kPeriod30Polynomial)));
  CHECK(s30.period == 30);
  CHECK(s30.residues == sizes({0, 2, 3, 4, 6}));
  CHECK(make_run_class_spec(IntPolynomial::from_ints(known::kPeriod30Numerator), 30).polynomial ==
        IntPolynomial::from_ints(known::kPeriod30Polynomial));
}

TEST_CASE("classify_reciprocal rejections and preconditions") {
  const auto r = expect_rejection(classify_reciprocal(IntPolynomial{1, 1}));
  CHECK(r.reason == Rejection::Reason::CoefficientOutOfRange);
  CHECK(r.index == 1);
  CHECK(r.value == -1);

  const auto sq = expect_rejection(classify_reciprocal(IntPolynomial{1, -1} * IntPolynomial{1, -1}));
  CHECK(sq.reason == Rejection::Reason::RepeatedFactor);
  CHECK(sq.order == 1);

  const auto nc = expect_rejection(classify_reciprocal(IntPolynomial{1, -2}));
  CHECK(nc.reason == Rejection::Reason::NonCyclotomicFactor);
  CHECK(nc.cofactor == IntPolynomial{-1, 2});
  CHECK_FALSE(nc.describe().empty());

  try {
    classify_reciprocal(IntPolynomial{1});
    FAIL("expected ConstantPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ConstantPolynomial);
  }
  try {
    classify_reciprocal(IntPolynomial{-1, 1});
    FAIL("expected NonUnitConstantTerm");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonUnitConstantTerm);
  }
}

TEST_CASE("accepted specs expand to ones exactly on the residue classes") {
  for (const auto& a : {IntPolynomial::from_ints(known::kPeriod12Polynomial), IntPolynomial::from_ints(known::kPeriod18Polynomial),
                        IntPolynomial::from_ints(known::kPeriod30Polynomial), congruence_polynomial(3, 2, 1),
                        congruence_polynomial(2, 3, 2)}) {
    const auto spec = expect_spec(classify_reciprocal(a));
    const auto series = rational_expand(spec.numerator, spec.period, 3 * spec.period);
    for (std::size_t s = 0; s <= 3 * spec.period; ++s) {
      const bool in_class = std::binary_search(spec.residues.begin(), spec.residues.end(), s % spec.period);
      CHECK(series[s] == (in_class ? 1 : 0));
    }
    CHECK(ogf_inverse(a, 3 * spec.period) == series);
  }
}

TEST_CASE("RunClassSpec::allows") {
  const auto spec = make_run_class_spec(IntPolynomial{1, 1}, 4);
  CHECK_FALSE(spec.allows(0));
  CHECK(spec.allows(1));
  CHECK_FALSE(spec.allows(2));
  CHECK(spec.allows(4));
  CHECK(spec.allows(5));
  CHECK_FALSE(spec.allows(7));
}

TEST_CASE("detect_period") {
  SUBCASE("1/(1 - x + x^2 - x^3)") {
    const auto r = detect_period(IntPolynomial{1}, IntPolynomial{1, -1, 1, -1}, 1);
    REQUIRE(std::holds_alternative<Periodicity>(r));
    const auto& p = std::get<Periodicity>(r);
    CHECK(p.preperiod == 0);
    CHECK(p.period == 4);
    CHECK(p.cycle == std::vector<BigInt>{1, 1, 0, 0});
    // the cycle reproduces 40 terms of the brute-force expansion
    const auto direct = ogf_inverse(IntPolynomial{1, -1, 1, -1}, 40);
    for (std::size_t n = 0; n <= 40; ++n) CHECK(direct[n] == p.cycle[n % 4]);
  }
  SUBCASE("1/(1 - x)") {
    const auto p = std::get<Periodicity>(detect_period(IntPolynomial{1}, IntPolynomial{1, -1}, 1));
    CHECK(p.preperiod == 0);
    CHECK(p.period == 1);
  }
  SUBCASE("1/(1 - 2x) is unbounded") {
    const auto r = detect_period(IntPolynomial{1}, IntPolynomial{1, -2}, 10);
    REQUIRE(std::holds_alternative<Unbounded>(r));
    CHECK(std::get<Unbounded>(r).index == 4);
    CHECK(std::get<Unbounded>(r).value == 16);
  }
  SUBCASE("eventually periodic numerator") {
    // (1 + 2x + x^2 + x^3) / (1 - x^2): 1, 2, 2, 3, 2, 3, ...
    const auto p = std::get<Periodicity>(detect_period(IntPolynomial{1, 2, 1, 1}, IntPolynomial{1, 0, -1}, 5));
    CHECK(p.preperiod == 2);
    CHECK(p.period == 2);
    CHECK(p.prefix == std::vector<BigInt>{1, 2});
    CHECK(p.cycle == std::vector<BigInt>{2, 3});
  }
  SUBCASE("polynomial quotient settles to zero") {
    const auto p = std::get<Periodicity>(detect_period(IntPolynomial{1}, IntPolynomial{1}, 1));
    CHECK(p.preperiod == 1);
    CHECK(p.cycle == std::vector<BigInt>{0});
  }
  CHECK_THROWS_AS(detect_period(IntPolynomial{1}, IntPolynomial{2, 1}, 1), Error);
  CHECK_THROWS_AS(detect_period(IntPolynomial{1}, IntPolynomial{1, 1}, 0), Error);
}

TEST_CASE("congruence_polynomial") {
  CHECK(congruence_polynomial(2, 2, 1) == IntPolynomial{1, -1, 1, -1});
  CHECK(congruence_polynomial(1, 1, 1) == IntPolynomial{1, -1});
  CHECK(congruence_polynomial(2, 2, 2) == IntPolynomial{1, 0, -1, 0, 1, 0, -1});
  const auto s = expect_spec(classify_reciprocal(congruence_polynomial(2, 2, 2)));
  CHECK(s.period == 8);
  CHECK(s.residues == sizes({0, 2}));

  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t r = 1; r <= 4; ++r) {
      const auto spec = expect_spec(classify_reciprocal(congruence_polynomial(m, r, 1)));
      if (m > 1) {
        CHECK(spec.period == m * r);
        std::vector<std::size_t> expected(r);
        for (std::size_t i = 0; i < r; ++i) expected[i] = i;
        CHECK(spec.residues == expected);
      } else {
        // a = 1 - x: every run length is allowed, and the minimal period is 1
        CHECK(spec.period == 1);
      }
      for (std::size_t s = 1; s <= 3 * m * r; ++s) CHECK(spec.allows(s) == (s % (m * r) < r));
    }
  }
  CHECK_THROWS_AS(congruence_polynomial(0, 1, 1), Error);
}

TEST_CASE("search_zero_one_products") {
  const auto m1 = search_zero_one_products(1);
  REQUIRE(m1.size() == 1);
  CHECK(m1[0].numerator == IntPolynomial{1});
  CHECK(m1[0].polynomial == IntPolynomial{1, -1});
  CHECK(m1[0].residues == sizes({0}));

  const auto m2 = search_zero_one_products(2);
  REQUIRE(m2.size() == 2);
  CHECK(m2[0].numerator == IntPolynomial{1});
  CHECK(m2[1].numerator == IntPolynomial{1, 1});

  const auto m30 = search_zero_one_products(30);
  CHECK(std::any_of(m30.begin(), m30.end(),
                    [](const RunClassSpec& s) { return s.numerator == cyclotomic_poly(5) * cyclotomic_poly(6); }));

  const auto m12 = search_zero_one_products(12);
  CHECK(std::any_of(m12.begin(), m12.end(), [](const RunClassSpec& s) { return s.residues == sizes({0, 2, 3, 5}); }));

  CHECK(std::is_sorted(m30.begin(), m30.end(),
                       [](const RunClassSpec& x, const RunClassSpec& y) { return x.residues < y.residues; }));

  try {
    search_zero_one_products(720720);  // 240 divisors
    FAIL("expected TooManyDivisors");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooManyDivisors);
  }
}

TEST_CASE("search results survive a classify round trip") {
  for (std::size_t m : {6, 12, 18, 20, 30}) {
    for (const auto& spec : search_zero_one_products(m)) {
      CHECK_NOTHROW(spec.validate());
      const auto back = expect_spec(classify_reciprocal(spec.polynomial));
      REQUIRE(m % back.period == 0);
      // same T* once both are read modulo m
      for (std::size_t s = 1; s <= 2 * m; ++s) CHECK(back.allows(s) == spec.allows(s));
    }
  }
}
