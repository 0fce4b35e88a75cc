#pragma once

// Brute-force ground truth for run statistics of permutations and words.
// Nothing here goes through generating functions; these counts are what the
// series and NSym computations are checked against.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "runsym/bigint.hpp"
#include "runsym/cyclotomic.hpp"
#include "runsym/nsym.hpp"

namespace runsym {

/// Which run lengths are allowed.
class RunPredicate {
 public:
  enum class Kind { Residue, ExplicitSet, All };

  /// Lengths s >= 1 with s mod m in residues.
  static RunPredicate residue(std::size_t m, std::vector<std::size_t> residues);
  static RunPredicate from_spec(const RunClassSpec& spec);
  /// Lengths in `lengths`; authoritative only up to `cap`, queries above it
  /// throw Error(CapExceeded).
  static RunPredicate explicit_set(std::vector<std::size_t> lengths, std::size_t cap);
  static RunPredicate all();

  Kind kind() const noexcept { return kind_; }
  bool accepts(std::size_t length) const;

  /// (m, T) when the predicate is periodic (Residue, or All as (1, {0})).
  std::optional<std::pair<std::size_t, std::vector<std::size_t>>> residue_form() const;

 private:
  Kind kind_ = Kind::All;
  std::size_t modulus_ = 1;
  std::vector<std::size_t> values_;  // sorted residues or lengths
  std::size_t cap_ = 0;
};

inline constexpr std::size_t kDefaultPermutationCap = 10;
inline constexpr std::uint64_t kMaxExhaustiveWords = 10'000'000;

/// Lengths of the maximal increasing runs of a sequence of distinct integers
/// (only the relative order matters, so 132576 reads as a permutation).
/// Throws Error(NotAPermutation) on a repeated entry.
Composition run_type(std::span<const int> perm);

/// Lengths of the maximal weakly increasing runs of a word.
Composition word_run_type(std::span<const int> word);

/// Permutations of [n] with run type L, by enumerating all n!.
BigInt beta_enumerate(const Composition& l, std::size_t cap = kDefaultPermutationCap);
BigInt beta_enumerate_serial(const Composition& l, std::size_t cap = kDefaultPermutationCap);
/// Same count via sum over D(K) in D(L) of (-1)^{|D(L)|-|D(K)|} multinomial(n; K).
BigInt beta_inclusion_exclusion(const Composition& l);
/// Both routes; throws Error(CheckFailed) if they disagree.
BigInt beta(const Composition& l, std::size_t cap = kDefaultPermutationCap);

/// beta(L) for every composition L of n in one pass over S_n.
std::vector<std::pair<Composition, BigInt>> beta_histogram(std::size_t n, std::size_t cap = kDefaultPermutationCap);

/// Permutations of [n] all of whose runs are allowed, by enumeration.
BigInt count_perms_enumerate(std::size_t n, const RunPredicate& pred, std::size_t cap = kDefaultPermutationCap);
BigInt count_perms_enumerate_serial(std::size_t n, const RunPredicate& pred,
                                    std::size_t cap = kDefaultPermutationCap);
/// Same count as sum of beta(L) (inclusion-exclusion) over allowed L.
BigInt count_perms_by_beta(std::size_t n, const RunPredicate& pred);
/// Both routes; throws Error(CheckFailed) if they disagree.
BigInt count_perms_restricted(std::size_t n, const RunPredicate& pred, std::size_t cap = kDefaultPermutationCap);

/// Words of length n over {1..q} whose weakly increasing runs are all allowed.
BigInt count_words_exhaustive(std::size_t n, std::size_t q, const RunPredicate& pred);
BigInt count_words_exhaustive_serial(std::size_t n, std::size_t q, const RunPredicate& pred);
/// Transfer-matrix count over (last letter, run length mod m); needs a
/// residue-form predicate (Error(InvalidArgument) otherwise).
BigInt count_words_dp(std::size_t n, std::size_t q, const RunPredicate& pred);
/// Runs every applicable mode and requires agreement (Error(CheckFailed)).
/// Error(CapExceeded) when q^n exceeds the exhaustive limit and no DP applies.
BigInt count_words_restricted(std::size_t n, std::size_t q, const RunPredicate& pred);

}  // namespace runsym
