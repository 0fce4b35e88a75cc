#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

#include "runsym/bigint.hpp"
#include "runsym/cyclotomic.hpp"
#include "runsym/series.hpp"

namespace runsym {

/// A finite sequence of positive integers.
///
/// Ordered by size first, then lexicographically by parts; this is the
/// canonical order for serialization and for NSymElement iteration.
class Composition {
 public:
  Composition() = default;
  /// Throws Error(InvalidArgument) on a non-positive part.
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  /// The composition of n whose descent set is the bitmask (bit i-1 <-> i).
  static Composition from_descents(std::size_t n, std::uint64_t mask);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::size_t size() const noexcept { return size_; }
  /// Partial sums L_1, L_1+L_2, ... below n, as a bitmask.
  std::uint64_t descent_mask() const noexcept;

  Composition concat(const Composition& other) const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  std::size_t size_ = 0;
};

/// All 2^{n-1} compositions of n (one, the empty composition, for n = 0),
/// in canonical order.
std::vector<Composition> compositions_of(std::size_t n);

enum class Basis { Complete, Ribbon };

/// A truncated element of NSym: sum of coefficient * B_L over compositions
/// L with |L| <= order, B the complete (H) or ribbon (R) basis.
class NSymElement {
 public:
  using Terms = std::map<Composition, BigInt>;

  NSymElement(Basis basis, std::size_t order) : basis_(basis), order_(order) {}

  static NSymElement one(Basis basis, std::size_t order);
  /// coeff * B_L (zero if |L| > order).
  static NSymElement term(Basis basis, std::size_t order, const Composition& index, BigInt coeff = 1);

  Basis basis() const noexcept { return basis_; }
  std::size_t order() const noexcept { return order_; }
  const Terms& terms() const noexcept { return terms_; }
  BigInt coeff(const Composition& index) const;

  /// Adds coeff * B_L; drops terms above the order and cancelled terms.
  void add(const Composition& index, const BigInt& coeff);
  /// Terms of size exactly n.
  std::vector<std::pair<Composition, BigInt>> grade(std::size_t n) const;

  friend bool operator==(const NSymElement&, const NSymElement&) = default;

 private:
  Basis basis_;
  std::size_t order_;
  Terms terms_;
};

NSymElement operator+(const NSymElement& f, const NSymElement& g);
NSymElement operator-(const NSymElement& f, const NSymElement& g);

/// sum_n a_n h_n truncated to the order.
NSymElement h_series_from_polynomial(const IntPolynomial& a, std::size_t order);

/// Concatenation product in the complete basis. Throws Error(OrderMismatch).
NSymElement h_mul(const NSymElement& f, const NSymElement& g);

/// Right inverse g of f (f g = 1 mod grades > order) by graded recursion;
/// with unit constant term it is also the left inverse. order must not exceed
/// f.order() (Error(OrderMismatch)); f(empty) must be 1.
NSymElement h_series_inverse(const NSymElement& f, std::size_t order);

/// H_K = sum over L with D(L) contained in D(K) of R_L.
NSymElement h_to_ribbon(const NSymElement& f);
NSymElement h_to_ribbon_serial(const NSymElement& f);

/// R_L = sum over K with D(K) in D(L) of (-1)^{|D(L)|-|D(K)|} H_K.
NSymElement ribbon_to_h(const NSymElement& f);
NSymElement ribbon_to_h_serial(const NSymElement& f);

/// Image under h_n -> x^n/n!, as an integer Egf of the element's order.
TruncatedSeries psi_egf(const NSymElement& f);

/// Image under X_1 = ... = X_q = 1, X_{q+1} = ... = 0, as an Ogf.
TruncatedSeries specialize_q(const NSymElement& f, std::size_t q);

inline constexpr std::size_t kDefaultNSymOrderCap = 10;

struct RunTheoremCertificate {
  bool passed = false;
  std::size_t order = 0;
  std::vector<Composition> support;               // compositions with coefficient 1
  std::optional<Composition> counterexample;      // first failure
  BigInt counterexample_coeff;
};

/// Inverts sum a_n h_n for the spec's a, moves to the ribbon basis and checks
/// that the coefficient of R_L is 1 when every part of L is an allowed run
/// length and 0 otherwise, for every composition of size <= order.
/// Throws Error(CapExceeded) if order > cap.
RunTheoremCertificate run_theorem_check(const RunClassSpec& spec, std::size_t order,
                                        std::size_t cap = kDefaultNSymOrderCap);

}  // namespace runsym
