#include "runsym/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>

#include "runsym/error.hpp"

namespace runsym {

namespace {

// 20! still fits in 64 bits; the per-thread tallies below rely on that.
constexpr std::size_t kHardPermutationCap = 20;

void check_cap(std::size_t n, std::size_t cap) {
  if (cap > kHardPermutationCap) throw Error(Errc::InvalidArgument, "permutation cap above 20");
  if (n > cap) {
    throw Error(Errc::CapExceeded, "n = " + std::to_string(n) + " above enumeration cap " + std::to_string(cap));
  }
}

// Calls visit(perm) for every permutation of {0..n-1} whose first entry is
// `first`, perm being a span of length n.
template <typename Visit>
void for_each_perm_starting_with(std::size_t n, std::size_t first, Visit&& visit) {
  std::array<int, kHardPermutationCap> perm{};
  perm[0] = static_cast<int>(first);
  for (std::size_t i = 1, v = 0; i < n; ++i, ++v) {
    if (v == first) ++v;
    perm[i] = static_cast<int>(v);
  }
  const std::span<const int> view(perm.data(), n);
  do {
    visit(view);
  } while (std::next_permutation(perm.begin() + 1, perm.begin() + static_cast<std::ptrdiff_t>(n)));
}

// Descent positions i (perm[i-1] > perm[i]) as a bitmask with bit i-1.
std::uint64_t perm_descent_mask(std::span<const int> perm) {
  std::uint64_t mask = 0;
  for (std::size_t i = 1; i < perm.size(); ++i) {
    if (perm[i - 1] > perm[i]) mask |= std::uint64_t{1} << (i - 1);
  }
  return mask;
}

// Both permutations (increasing runs) and words (weakly increasing runs)
// break a run exactly where the next entry is strictly smaller.
// allowed[s] answers pred.accepts(s) for s <= n; built before entering a
// parallel region so predicate errors surface on the calling thread.
using LengthTable = std::vector<char>;

LengthTable length_table(const RunPredicate& pred, std::size_t n) {
  LengthTable allowed(n + 1, 0);
  for (std::size_t s = 1; s <= n; ++s) allowed[s] = pred.accepts(s);
  return allowed;
}

bool runs_allowed(std::span<const int> seq, const LengthTable& allowed) {
  std::size_t run = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] < seq[i - 1]) {
      if (!allowed[run]) return false;
      run = 1;
    } else {
      ++run;
    }
  }
  return seq.empty() || allowed[run];
}

Composition runs_of(std::span<const int> seq) {
  if (seq.empty()) return {};
  std::vector<int> parts{1};
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] < seq[i - 1]) {
      parts.push_back(1);
    } else {
      ++parts.back();
    }
  }
  return Composition(std::move(parts));
}

std::uint64_t checked_power(std::size_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) return limit + 1;
    acc *= base;
  }
  return acc;
}

}  // namespace

RunPredicate RunPredicate::residue(std::size_t m, std::vector<std::size_t> residues) {
  if (m == 0) throw Error(Errc::InvalidArgument, "residue predicate needs m >= 1");
  for (std::size_t t : residues) {
    if (t >= m) throw Error(Errc::InvalidArgument, "residue " + std::to_string(t) + " not below m");
  }
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  RunPredicate p;
  p.kind_ = Kind::Residue;
  p.modulus_ = m;
  p.values_ = std::move(residues);
  return p;
}

RunPredicate RunPredicate::from_spec(const RunClassSpec& spec) { return residue(spec.period, spec.residues); }

RunPredicate RunPredicate::explicit_set(std::vector<std::size_t> lengths, std::size_t cap) {
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  RunPredicate p;
  p.kind_ = Kind::ExplicitSet;
  p.values_ = std::move(lengths);
  p.cap_ = cap;
  return p;
}

RunPredicate RunPredicate::all() { return RunPredicate{}; }

bool RunPredicate::accepts(std::size_t length) const {
  if (length == 0) return false;
  switch (kind_) {
    case Kind::All:
      return true;
    case Kind::Residue:
      return std::binary_search(values_.begin(), values_.end(), length % modulus_);
    case Kind::ExplicitSet:
      if (length > cap_) {
        throw Error(Errc::CapExceeded, "run length " + std::to_string(length) + " above explicit set cap");
      }
      return std::binary_search(values_.begin(), values_.end(), length);
  }
  return false;
}

std::optional<std::pair<std::size_t, std::vector<std::size_t>>> RunPredicate::residue_form() const {
  switch (kind_) {
    case Kind::All: return std::pair{std::size_t{1}, std::vector<std::size_t>{0}};
    case Kind::Residue: return std::pair{modulus_, values_};
    case Kind::ExplicitSet: return std::nullopt;
  }
  return std::nullopt;
}

Composition run_type(std::span<const int> perm) {
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
    throw Error(Errc::NotAPermutation, "entry " + std::to_string(*dup) + " repeats");
  return runs_of(perm);
}

Composition word_run_type(std::span<const int> word) { return runs_of(word); }

BigInt beta_enumerate_serial(const Composition& l, std::size_t cap) {
  const std::size_t n = l.size();
  check_cap(n, cap);
  if (n == 0) return 1;
  const std::uint64_t target = l.descent_mask();
  std::uint64_t count = 0;
  for (std::size_t first = 0; first < n; ++first) {
    for_each_perm_starting_with(n, first, [&](std::span<const int> p) { count += perm_descent_mask(p) == target; });
  }
  return count;
}

BigInt beta_enumerate(const Composition& l, std::size_t cap) {
  const std::size_t n = l.size();
  check_cap(n, cap);
  if (n == 0) return 1;
  const std::uint64_t target = l.descent_mask();
  std::uint64_t count = 0;
  const auto firsts = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : count)
  for (std::ptrdiff_t first = 0; first < firsts; ++first) {
    for_each_perm_starting_with(n, static_cast<std::size_t>(first),
                                [&](std::span<const int> p) { count += perm_descent_mask(p) == target; });
  }
  return count;
}

BigInt beta_inclusion_exclusion(const Composition& l) {
  const std::uint64_t mask = l.descent_mask();
  const int full = std::popcount(mask);
  BigInt total = 0;
  std::uint64_t sub = mask;
  while (true) {
    const BigInt term = multinomial(Composition::from_descents(l.size(), sub).parts());
    if ((full - std::popcount(sub)) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
  return total;
}

BigInt beta(const Composition& l, std::size_t cap) {
  BigInt by_enumeration = beta_enumerate(l, cap);
  const BigInt by_inclusion_exclusion = beta_inclusion_exclusion(l);
  if (by_enumeration != by_inclusion_exclusion) {
    throw Error(Errc::CheckFailed, "beta routes disagree: " + to_decimal(by_enumeration) + " vs " +
                                       to_decimal(by_inclusion_exclusion));
  }
  return by_enumeration;
}

std::vector<std::pair<Composition, BigInt>> beta_histogram(std::size_t n, std::size_t cap) {
  check_cap(n, cap);
  if (n == 0) return {{Composition{}, BigInt(1)}};
  const std::size_t bins = std::size_t{1} << (n - 1);
  std::vector<std::uint64_t> counts(bins, 0);
  const auto firsts = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::ptrdiff_t first = 0; first < firsts; ++first) {
      for_each_perm_starting_with(n, static_cast<std::size_t>(first),
                                  [&](std::span<const int> p) { ++local[perm_descent_mask(p)]; });
    }
#pragma omp critical(runsym_beta_merge)
    for (std::size_t i = 0; i < bins; ++i) counts[i] += local[i];
  }
  std::vector<std::pair<Composition, BigInt>> out;
  out.reserve(bins);
  for (std::size_t mask = 0; mask < bins; ++mask) out.emplace_back(Composition::from_descents(n, mask), counts[mask]);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

BigInt count_perms_enumerate_serial(std::size_t n, const RunPredicate& pred, std::size_t cap) {
  check_cap(n, cap);
  if (n == 0) return 1;
  const LengthTable allowed = length_table(pred, n);
  std::uint64_t count = 0;
  for (std::size_t first = 0; first < n; ++first) {
    for_each_perm_starting_with(n, first, [&](std::span<const int> p) { count += runs_allowed(p, allowed); });
  }
  return count;
}

BigInt count_perms_enumerate(std::size_t n, const RunPredicate& pred, std::size_t cap) {
  check_cap(n, cap);
  if (n == 0) return 1;
  const LengthTable allowed = length_table(pred, n);
  std::uint64_t count = 0;
  const auto firsts = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : count)
  for (std::ptrdiff_t first = 0; first < firsts; ++first) {
    for_each_perm_starting_with(n, static_cast<std::size_t>(first),
                                [&](std::span<const int> p) { count += runs_allowed(p, allowed); });
  }
  return count;
}

BigInt count_perms_by_beta(std::size_t n, const RunPredicate& pred) {
  BigInt total = 0;
  for (const Composition& l : compositions_of(n)) {
    const bool allowed = std::all_of(l.parts().begin(), l.parts().end(),
                                     [&](int part) { return pred.accepts(static_cast<std::size_t>(part)); });
    if (allowed) total += beta_inclusion_exclusion(l);
  }
  return total;
}

BigInt count_perms_restricted(std::size_t n, const RunPredicate& pred, std::size_t cap) {
  BigInt by_enumeration = count_perms_enumerate(n, pred, cap);
  const BigInt by_beta = count_perms_by_beta(n, pred);
  if (by_enumeration != by_beta) {
    throw Error(Errc::CheckFailed, "permutation count routes disagree at n = " + std::to_string(n) + ": " +
                                       to_decimal(by_enumeration) + " vs " + to_decimal(by_beta));
  }
  return by_enumeration;
}

namespace {

constexpr std::size_t kMaxWordLength = 64;

std::uint64_t word_space(std::size_t n, std::size_t q) {
  if (n > kMaxWordLength) throw Error(Errc::CapExceeded, "word length above 64 for exhaustive words");
  const std::uint64_t total = checked_power(q, n, kMaxExhaustiveWords);
  if (total > kMaxExhaustiveWords) {
    throw Error(Errc::CapExceeded, "q^n above " + std::to_string(kMaxExhaustiveWords) + " for exhaustive words");
  }
  return total;
}

bool word_allowed(std::uint64_t index, std::size_t n, std::size_t q, const LengthTable& allowed) {
  std::array<int, kMaxWordLength> word{};
  for (std::size_t i = n; i-- > 0;) {
    word[i] = static_cast<int>(index % q);
    index /= q;
  }
  return runs_allowed(std::span<const int>(word.data(), n), allowed);
}

}  // namespace

BigInt count_words_exhaustive_serial(std::size_t n, std::size_t q, const RunPredicate& pred) {
  if (n == 0) return 1;
  if (q == 0) return 0;
  const std::uint64_t total = word_space(n, q);
  const LengthTable allowed = length_table(pred, n);
  std::uint64_t count = 0;
  for (std::uint64_t index = 0; index < total; ++index) count += word_allowed(index, n, q, allowed);
  return count;
}

BigInt count_words_exhaustive(std::size_t n, std::size_t q, const RunPredicate& pred) {
  if (n == 0) return 1;
  if (q == 0) return 0;
  const auto total = static_cast<std::int64_t>(word_space(n, q));
  const LengthTable allowed = length_table(pred, n);
  std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (std::int64_t index = 0; index < total; ++index) {
    count += word_allowed(static_cast<std::uint64_t>(index), n, q, allowed);
  }
  return count;
}

BigInt count_words_dp(std::size_t n, std::size_t q, const RunPredicate& pred) {
  const auto form = pred.residue_form();
  if (!form) throw Error(Errc::InvalidArgument, "word DP needs a residue-form predicate");
  if (n == 0) return 1;
  if (q == 0) return 0;
  const auto& [m, residues] = *form;
  std::vector<bool> closes(m, false);  // a run of this length residue may end
  for (std::size_t t : residues) closes[t] = true;

  // ways[letter * m + residue]: words so far ending in `letter`, current run
  // length congruent to `residue`.
  std::vector<BigInt> ways(q * m);
  for (std::size_t c = 0; c < q; ++c) ways[c * m + 1 % m] = 1;
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<BigInt> next(q * m);
    for (std::size_t c = 0; c < q; ++c) {
      for (std::size_t r = 0; r < m; ++r) {
        const BigInt& w = ways[c * m + r];
        if (w == 0) continue;
        for (std::size_t d = c; d < q; ++d) next[d * m + (r + 1) % m] += w;
        if (closes[r]) {
          for (std::size_t d = 0; d < c; ++d) next[d * m + 1 % m] += w;
        }
      }
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (std::size_t c = 0; c < q; ++c) {
    for (std::size_t r = 0; r < m; ++r) {
      if (closes[r]) total += ways[c * m + r];
    }
  }
  return total;
}

BigInt count_words_restricted(std::size_t n, std::size_t q, const RunPredicate& pred) {
  const bool exhaustive_ok = n <= kMaxWordLength && checked_power(q, n, kMaxExhaustiveWords) <= kMaxExhaustiveWords;
  const bool dp_ok = pred.residue_form().has_value();
  if (!exhaustive_ok && !dp_ok) {
    throw Error(Errc::CapExceeded, "q^n too large for exhaustive words and predicate is not residue-form");
  }
  if (!exhaustive_ok) return count_words_dp(n, q, pred);
  BigInt by_enumeration = count_words_exhaustive(n, q, pred);
  if (dp_ok) {
    const BigInt by_dp = count_words_dp(n, q, pred);
    if (by_dp != by_enumeration) {
      throw Error(Errc::CheckFailed, "word count routes disagree: " + to_decimal(by_enumeration) + " vs " +
                                         to_decimal(by_dp));
    }
  }
  return by_enumeration;
}

}  // namespace runsym
