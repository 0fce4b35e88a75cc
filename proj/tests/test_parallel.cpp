#include <doctest.h>

#include <cstdlib>
#include <random>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "runsym/nsym.hpp"
#include "runsym/oracles.hpp"
#include "runsym/parallel.hpp"

using namespace runsym;

// Each parallel kernel must match its serial reference for every team size.

namespace {

void set_threads(int n) {
#if defined(_OPENMP)
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

constexpr int kTeamSizes[] = {1, 2, 3, 8};

}  // namespace

TEST_CASE("permutation kernels") {
  const auto pred = RunPredicate::residue(6, {0, 1, 2});
  for (int threads : kTeamSizes) {
    set_threads(threads);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(count_perms_enumerate(n, pred) == count_perms_enumerate_serial(n, pred));
    for (const auto& l : compositions_of(7)) CHECK(beta_enumerate(l) == beta_enumerate_serial(l));
    BigInt total = 0;
    for (const auto& [l, c] : beta_histogram(7)) total += c;
    CHECK(total == 5040);
  }
}

TEST_CASE("word kernel") {
  const auto pred = RunPredicate::residue(4, {0, 1});
  for (int threads : kTeamSizes) {
    set_threads(threads);
    for (std::size_t n = 0; n <= 9; ++n) CHECK(count_words_exhaustive(n, 3, pred) == count_words_exhaustive_serial(n, 3, pred));
  }
}

TEST_CASE("basis change kernels") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(-9, 9);
  NSymElement f(Basis::Complete, 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const auto& l : compositions_of(n)) f.add(l, coeff(rng));
  }
  NSymElement g(Basis::Ribbon, 8);
  for (const auto& [l, c] : f.terms()) g.add(l, c);
  for (int threads : kTeamSizes) {
    set_threads(threads);
    CHECK(h_to_ribbon(f) == h_to_ribbon_serial(f));
    CHECK(ribbon_to_h(g) == ribbon_to_h_serial(g));
  }
}

TEST_CASE("cyclotomic search") {
  for (int threads : kTeamSizes) {
    set_threads(threads);
    for (std::size_t m : {1, 2, 12, 30, 36, 60}) CHECK(search_zero_one_products(m) == search_zero_one_products_serial(m));
  }
}

TEST_CASE("RUNSYM_THREADS") {
  ::setenv(kThreadsEnvVar, "3", 1);
  const int n = configure_threads_from_env();
  CHECK(n == (openmp_enabled() ? 3 : 1));
  ::setenv(kThreadsEnvVar, "garbage", 1);
  CHECK(configure_threads_from_env() == n);
  ::unsetenv(kThreadsEnvVar);
}
