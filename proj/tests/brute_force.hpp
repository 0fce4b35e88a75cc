#pragma once

// Test-only reference computations. Deliberately naive and written without
// calling into the library's kernels, so they can serve as oracles.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "runsym/bigint.hpp"
#include "runsym/series.hpp"

namespace brute {

using runsym::BigInt;
using runsym::IntPolynomial;

inline std::vector<int> runs(const std::vector<int>& seq) {
  std::vector<int> out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i == 0 || seq[i] < seq[i - 1]) {
      out.push_back(1);
    } else {
      ++out.back();
    }
  }
  return out;
}

/// Permutations of [n] (as 1..n) whose run lengths all satisfy ok.
inline long long count_perms(int n, const std::function<bool(int)>& ok) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  long long count = 0;
  do {
    const auto r = runs(p);
    count += std::all_of(r.begin(), r.end(), ok);
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline long long count_perms_with_runs(const std::vector<int>& target) {
  const int n = std::accumulate(target.begin(), target.end(), 0);
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  long long count = 0;
  do {
    count += runs(p) == target;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Words of length n over {0..q-1}, generated recursively.
inline long long count_words(int n, int q, const std::function<bool(int)>& ok) {
  long long count = 0;
  std::vector<int> w;
  std::function<void()> rec = [&] {
    if (static_cast<int>(w.size()) == n) {
      const auto r = runs(w);
      count += std::all_of(r.begin(), r.end(), ok);
      return;
    }
    for (int c = 0; c < q; ++c) {
      w.push_back(c);
      rec();
      w.pop_back();
    }
  };
  rec();
  return count;
}

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

/// Phi_d = prod_{e | d} (x^e - 1)^{mu(d/e)}, as an Ogf power series in
/// (1 - x^e) factors: multiply the mu = +1 factors and divide the mu = -1 ones
/// by series inversion, then cut at degree phi(d).
inline std::vector<BigInt> cyclotomic_by_mobius(int d) {
  const std::size_t cut = static_cast<std::size_t>(d) + 1;
  std::vector<BigInt> acc(cut);
  acc[0] = 1;
  int sign_flips = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = mobius(d / e);
    if (mu == 0) continue;
    ++sign_flips;  // x^e - 1 = -(1 - x^e)
    std::vector<BigInt> next(cut);
    if (mu == 1) {
      for (std::size_t i = 0; i < cut; ++i) {
        next[i] += acc[i];
        if (i + static_cast<std::size_t>(e) < cut) next[i + static_cast<std::size_t>(e)] -= acc[i];
      }
    } else {
      // divide by (1 - x^e): running sum with stride e
      for (std::size_t i = 0; i < cut; ++i) {
        next[i] = acc[i] + (i >= static_cast<std::size_t>(e) ? next[i - static_cast<std::size_t>(e)] : BigInt(0));
      }
    }
    acc = std::move(next);
  }
  // mu sums to 0 for d > 1, so the count of -1 and +1 factors match and the
  // overall sign is (-1)^{#factors}; for d = 1 it is x - 1 = -(1 - x).
  if (sign_flips % 2 != 0) {
    for (auto& c : acc) c = -c;
  }
  while (!acc.empty() && acc.back() == 0) acc.pop_back();
  return acc;
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace brute
