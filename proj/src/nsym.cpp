#include "runsym/nsym.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "runsym/error.hpp"

namespace runsym {

namespace {

constexpr std::size_t kMaxCompositionSize = 63;

// Visits every submask of mask, including 0 and mask itself.
template <typename Visit>
void for_each_submask(std::uint64_t mask, Visit&& visit) {
  std::uint64_t sub = mask;
  while (true) {
    visit(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

void require_basis(const NSymElement& f, Basis basis, const char* op) {
  if (f.basis() != basis) throw Error(Errc::InvalidArgument, std::string(op) + ": wrong basis");
}

std::vector<std::pair<Composition, BigInt>> term_list(const NSymElement& f) {
  return {f.terms().begin(), f.terms().end()};
}

// Expands every term of f through `expand(index, coeff, sink)` into an element
// of the target basis. Term-parallel with per-thread accumulators; BigInt
// addition is exact so the merge order does not matter.
template <typename Expand>
NSymElement expand_terms_parallel(const NSymElement& f, Basis target, Expand expand) {
  const auto terms = term_list(f);
  NSymElement out(target, f.order());
  const auto count = static_cast<std::ptrdiff_t>(terms.size());
#pragma omp parallel
  {
    NSymElement local(target, f.order());
#pragma omp for schedule(dynamic, 16) nowait
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto& [index, coeff] = terms[static_cast<std::size_t>(i)];
      expand(index, coeff, local);
    }
#pragma omp critical(runsym_nsym_merge)
    for (const auto& [index, coeff] : local.terms()) out.add(index, coeff);
  }
  return out;
}

template <typename Expand>
NSymElement expand_terms_serial(const NSymElement& f, Basis target, Expand expand) {
  NSymElement out(target, f.order());
  for (const auto& [index, coeff] : f.terms()) expand(index, coeff, out);
  return out;
}

void h_to_ribbon_term(const Composition& k, const BigInt& coeff, NSymElement& sink) {
  for_each_submask(k.descent_mask(), [&](std::uint64_t sub) { sink.add(Composition::from_descents(k.size(), sub), coeff); });
}

void ribbon_to_h_term(const Composition& l, const BigInt& coeff, NSymElement& sink) {
  const std::uint64_t mask = l.descent_mask();
  const int full = std::popcount(mask);
  for_each_submask(mask, [&](std::uint64_t sub) {
    const bool negative = (full - std::popcount(sub)) % 2 != 0;
    sink.add(Composition::from_descents(l.size(), sub), negative ? BigInt(-coeff) : coeff);
  });
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw Error(Errc::InvalidArgument, "composition parts must be positive");
    size_ += static_cast<std::size_t>(p);
  }
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition Composition::from_descents(std::size_t n, std::uint64_t mask) {
  if (n > kMaxCompositionSize) throw Error(Errc::CapExceeded, "composition size above 63");
  if (n == 0) return {};
  std::vector<int> parts;
  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (mask >> (i - 1) & 1U) {
      parts.push_back(static_cast<int>(i - start));
      start = i;
    }
  }
  parts.push_back(static_cast<int>(n - start));
  return Composition(std::move(parts));
}

std::uint64_t Composition::descent_mask() const noexcept {
  std::uint64_t mask = 0;
  std::size_t partial = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    partial += static_cast<std::size_t>(parts_[i]);
    mask |= std::uint64_t{1} << (partial - 1);
  }
  return mask;
}

Composition Composition::concat(const Composition& other) const {
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  return Composition(std::move(parts));
}

std::vector<Composition> compositions_of(std::size_t n) {
  if (n == 0) return {Composition{}};
  if (n > kMaxCompositionSize) throw Error(Errc::CapExceeded, "composition size above 63");
  std::vector<Composition> out;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(Composition::from_descents(n, mask));
  std::sort(out.begin(), out.end());
  return out;
}

NSymElement NSymElement::one(Basis basis, std::size_t order) { return term(basis, order, Composition{}); }

NSymElement NSymElement::term(Basis basis, std::size_t order, const Composition& index, BigInt coeff) {
  NSymElement out(basis, order);
  out.add(index, coeff);
  return out;
}

BigInt NSymElement::coeff(const Composition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void NSymElement::add(const Composition& index, const BigInt& coeff) {
  if (index.size() > order_ || coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

std::vector<std::pair<Composition, BigInt>> NSymElement::grade(std::size_t n) const {
  std::vector<std::pair<Composition, BigInt>> out;
  for (const auto& [index, coeff] : terms_) {
    if (index.size() == n) out.emplace_back(index, coeff);
  }
  return out;
}

NSymElement operator+(const NSymElement& f, const NSymElement& g) {
  if (f.basis() != g.basis()) throw Error(Errc::InvalidArgument, "adding elements in different bases");
  if (f.order() != g.order()) throw Error(Errc::OrderMismatch, "adding elements of different order");
  NSymElement out = f;
  for (const auto& [index, coeff] : g.terms()) out.add(index, coeff);
  return out;
}

NSymElement operator-(const NSymElement& f, const NSymElement& g) {
  NSymElement negated(g.basis(), g.order());
  for (const auto& [index, coeff] : g.terms()) negated.add(index, -coeff);
  return f + negated;
}

NSymElement h_series_from_polynomial(const IntPolynomial& a, std::size_t order) {
  NSymElement out(Basis::Complete, order);
  for (std::size_t n = 0; n < a.coeffs().size() && n <= order; ++n) {
    out.add(n == 0 ? Composition{} : Composition{static_cast<int>(n)}, a.coeffs()[n]);
  }
  return out;
}

NSymElement h_mul(const NSymElement& f, const NSymElement& g) {
  require_basis(f, Basis::Complete, "h_mul");
  require_basis(g, Basis::Complete, "h_mul");
  if (f.order() != g.order()) throw Error(Errc::OrderMismatch, "h_mul operands differ in order");
  NSymElement out(Basis::Complete, f.order());
  for (const auto& [k, c] : f.terms()) {
    for (const auto& [m, d] : g.terms()) {
      if (k.size() + m.size() <= f.order()) out.add(k.concat(m), c * d);
    }
  }
  return out;
}

NSymElement h_series_inverse(const NSymElement& f, std::size_t order) {
  require_basis(f, Basis::Complete, "h_series_inverse");
  if (order > f.order()) throw Error(Errc::OrderMismatch, "inverse order exceeds the series order");
  if (f.coeff(Composition{}) != 1) throw Error(Errc::NonUnitConstantTerm, "h_series_inverse needs f(1) = 1");

  std::vector<std::vector<std::pair<Composition, BigInt>>> f_grades(order + 1);
  for (std::size_t k = 1; k <= order; ++k) f_grades[k] = f.grade(k);

  std::vector<std::vector<std::pair<Composition, BigInt>>> g_grades(order + 1);
  g_grades[0].emplace_back(Composition{}, BigInt(1));
  for (std::size_t n = 1; n <= order; ++n) {
    NSymElement acc(Basis::Complete, n);
    for (std::size_t k = 1; k <= n; ++k) {
      for (const auto& [fk, c] : f_grades[k]) {
        for (const auto& [gm, d] : g_grades[n - k]) acc.add(fk.concat(gm), -(c * d));
      }
    }
    g_grades[n].assign(acc.terms().begin(), acc.terms().end());
  }

  NSymElement out(Basis::Complete, order);
  for (const auto& grade : g_grades) {
    for (const auto& [index, coeff] : grade) out.add(index, coeff);
  }
  return out;
}

NSymElement h_to_ribbon(const NSymElement& f) {
  require_basis(f, Basis::Complete, "h_to_ribbon");
  return expand_terms_parallel(f, Basis::Ribbon, h_to_ribbon_term);
}

NSymElement h_to_ribbon_serial(const NSymElement& f) {
  require_basis(f, Basis::Complete, "h_to_ribbon");
  return expand_terms_serial(f, Basis::Ribbon, h_to_ribbon_term);
}

NSymElement ribbon_to_h(const NSymElement& f) {
  require_basis(f, Basis::Ribbon, "ribbon_to_h");
  return expand_terms_parallel(f, Basis::Complete, ribbon_to_h_term);
}

NSymElement ribbon_to_h_serial(const NSymElement& f) {
  require_basis(f, Basis::Ribbon, "ribbon_to_h");
  return expand_terms_serial(f, Basis::Complete, ribbon_to_h_term);
}

TruncatedSeries psi_egf(const NSymElement& f) {
  const NSymElement h = f.basis() == Basis::Complete ? f : ribbon_to_h(f);
  std::vector<BigInt> out(h.order() + 1);
  for (const auto& [index, coeff] : h.terms()) out[index.size()] += coeff * multinomial(index.parts());
  return TruncatedSeries(Convention::Egf, std::move(out));
}

TruncatedSeries specialize_q(const NSymElement& f, std::size_t q) {
  const NSymElement h = f.basis() == Basis::Complete ? f : ribbon_to_h(f);
  std::vector<BigInt> out(h.order() + 1);
  for (const auto& [index, coeff] : h.terms()) {
    BigInt weight = coeff;
    for (int part : index.parts()) {
      const auto k = static_cast<std::size_t>(part);
      weight *= binomial(k + q - 1, k);  // multisets of size k from q letters
    }
    out[index.size()] += weight;
  }
  return TruncatedSeries(Convention::Ogf, std::move(out));
}

RunTheoremCertificate run_theorem_check(const RunClassSpec& spec, std::size_t order, std::size_t cap) {
  if (order > cap) {
    throw Error(Errc::CapExceeded, "run theorem check at order " + std::to_string(order) + " above cap " +
                                       std::to_string(cap));
  }
  spec.validate();
  const NSymElement inverse = h_series_inverse(h_series_from_polynomial(spec.polynomial, order), order);
  const NSymElement ribbons = h_to_ribbon(inverse);

  RunTheoremCertificate cert;
  cert.order = order;
  for (std::size_t n = 0; n <= order; ++n) {
    for (const Composition& l : compositions_of(n)) {
      const bool allowed = std::all_of(l.parts().begin(), l.parts().end(),
                                       [&](int part) { return spec.allows(static_cast<std::size_t>(part)); });
      const BigInt c = ribbons.coeff(l);
      if (c != (allowed ? 1 : 0)) {
        cert.counterexample = l;
        cert.counterexample_coeff = c;
        return cert;
      }
      if (allowed) cert.support.push_back(l);
    }
  }
  cert.passed = true;
  return cert;
}

}  // namespace runsym
