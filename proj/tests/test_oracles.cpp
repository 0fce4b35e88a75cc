#include <doctest.h>

#include "brute_force.hpp"
#include "runsym/error.hpp"
#include "runsym/oracles.hpp"

using namespace runsym;

namespace {

const RunPredicate kZeroOneMod4 = RunPredicate::residue(4, {0, 1});

}  // namespace

TEST_CASE("RunPredicate") {
  CHECK(kZeroOneMod4.accepts(1));
  CHECK(kZeroOneMod4.accepts(4));
  CHECK(kZeroOneMod4.accepts(5));
  CHECK_FALSE(kZeroOneMod4.accepts(2));
  CHECK_FALSE(kZeroOneMod4.accepts(0));
  CHECK(RunPredicate::all().accepts(17));
  CHECK(RunPredicate::all().residue_form()->first == 1);

  const auto s = RunPredicate::explicit_set({2, 3, 5}, 8);
  CHECK(s.accepts(3));
  CHECK_FALSE(s.accepts(4));
  CHECK_FALSE(s.residue_form().has_value());
  CHECK_THROWS_AS(s.accepts(9), Error);

  CHECK_THROWS_AS(RunPredicate::residue(0, {0}), Error);
  CHECK_THROWS_AS(RunPredicate::residue(3, {3}), Error);
}

TEST_CASE("run_type") {
  const std::vector<int> p{1, 3, 2, 5, 7, 6};
  CHECK(run_type(p) == Composition{2, 3, 1});
  CHECK(run_type(std::vector<int>{1, 2, 3, 4}) == Composition{4});
  CHECK(run_type(std::vector<int>{4, 3, 2, 1}) == Composition{1, 1, 1, 1});
  CHECK(run_type(std::vector<int>{1}) == Composition{1});
  CHECK(run_type(std::vector<int>{}) == Composition{});
  CHECK_THROWS_AS(run_type(std::vector<int>{1, 1, 2}), Error);
  CHECK_THROWS_AS(run_type(std::vector<int>{3, 2, 3}), Error);
  CHECK(run_type(std::vector<int>{1, 3, 2, 4, 6, 5}) == Composition{2, 3, 1});
  CHECK(word_run_type(std::vector<int>{1, 1, 0, 2, 2, 1}) == Composition{2, 3, 1});
}

TEST_CASE("beta") {
  CHECK(beta(Composition{1, 4}) == 4);
  CHECK(beta(Composition{2, 3, 1}) == 40);
  CHECK(beta(Composition{2, 3, 1}) == brute::count_perms_with_runs({2, 3, 1}));
  for (int n = 0; n <= 7; ++n) CHECK(beta(Composition(std::vector<int>(n == 0 ? 0 : 1, n))) == 1);
  CHECK(beta(Composition{}) == 1);
  CHECK_THROWS_AS(beta(Composition{11}), Error);
  CHECK(beta_enumerate(Composition{11}, 11) == 1);
}

TEST_CASE("beta routes agree and sum to n!") {
  for (std::size_t n = 0; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& [l, count] : beta_histogram(n)) {
      CHECK(count == beta_inclusion_exclusion(l));
      total += count;
    }
    CHECK(total == factorial(n));
  }
  for (const auto& l : compositions_of(6)) CHECK(beta_enumerate(l) == beta_enumerate_serial(l));
}

TEST_CASE("count_perms_restricted") {
  CHECK(count_perms_restricted(4, kZeroOneMod4) == 2);
  CHECK(count_perms_restricted(5, kZeroOneMod4) == 10);
  CHECK(count_perms_restricted(3, RunPredicate::all()) == 6);
  CHECK(count_perms_restricted(0, kZeroOneMod4) == 1);
  CHECK_THROWS_AS(count_perms_restricted(11, kZeroOneMod4), Error);

  for (int n = 0; n <= 8; ++n) {
    CHECK(count_perms_restricted(static_cast<std::size_t>(n), kZeroOneMod4) ==
          brute::count_perms(n, [](int s) { return s % 4 <= 1; }));
    const auto odd = RunPredicate::explicit_set({1, 3, 5, 7}, 8);
    CHECK(count_perms_restricted(static_cast<std::size_t>(n), odd) == brute::count_perms(n, [](int s) { return s % 2 == 1; }));
  }
}

TEST_CASE("count_words_restricted") {
  CHECK(count_words_restricted(2, 2, kZeroOneMod4) == 1);
  CHECK(count_words_restricted(3, 2, kZeroOneMod4) == 0);
  CHECK(count_words_restricted(2, 2, RunPredicate::all()) == 4);
  CHECK(count_words_restricted(0, 3, kZeroOneMod4) == 1);
  CHECK(count_words_restricted(3, 0, kZeroOneMod4) == 0);

  for (int q = 1; q <= 3; ++q) {
    for (int n = 0; n <= 8; ++n) {
      const auto pred = RunPredicate::residue(5, {0, 2, 3});
      const long long expected = brute::count_words(n, q, [](int s) { return s % 5 == 0 || s % 5 == 2 || s % 5 == 3; });
      CHECK(count_words_dp(static_cast<std::size_t>(n), static_cast<std::size_t>(q), pred) == expected);
      CHECK(count_words_exhaustive(static_cast<std::size_t>(n), static_cast<std::size_t>(q), pred) == expected);
    }
  }
}

TEST_CASE("count_words_restricted falls back to DP past the exhaustive cap") {
  // 4^12 > 10^7
  const auto big = count_words_restricted(12, 4, kZeroOneMod4);
  CHECK(big == count_words_dp(12, 4, kZeroOneMod4));
  CHECK_THROWS_AS(count_words_restricted(12, 4, RunPredicate::explicit_set({1}, 12)), Error);
  CHECK_THROWS_AS(count_words_dp(3, 2, RunPredicate::explicit_set({1}, 3)), Error);
  // a single-letter alphabet: one word, a single run of length n
  CHECK(count_words_restricted(200, 1, kZeroOneMod4) == 1);
  CHECK(count_words_restricted(202, 1, kZeroOneMod4) == 0);
}
