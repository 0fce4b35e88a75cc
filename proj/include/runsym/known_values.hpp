#pragma once

// Published values the verification suites reproduce.

#include <array>
#include <cstddef>

namespace runsym::known {

/// 1 / (1 - x + x^2/2! - x^3/3!) = sum u_n x^n/n!, n = 0..13.
inline constexpr std::array<long long, 14> kAlternatingQuarticTable = {
    1, 1, 1, 1, 2, 10, 50, 210, 840, 4200, 29400, 231000, 1755600, 13213200};

/// (1 - x)(1 + x + x^2)(1 - x^2 + x^4); reciprocal (1+x^2)(1+x^3)/(1-x^12).
inline constexpr std::array<long long, 8> kPeriod12Polynomial = {1, 0, -1, -1, 1, 1, 0, -1};
inline constexpr std::array<long long, 6> kPeriod12Numerator = {1, 0, 1, 1, 0, 1};
inline constexpr std::array<std::size_t, 4> kPeriod12Residues = {0, 2, 3, 5};

/// (1 - x)(1 + x)(1 - x^3 + x^6); reciprocal (1+x^2+x^4)(1+x^3+x^6)/(1-x^18).
inline constexpr std::array<long long, 9> kPeriod18Polynomial = {1, 0, -1, -1, 0, 1, 1, 0, -1};
inline constexpr std::array<long long, 11> kPeriod18Numerator = {1, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1};
inline constexpr std::array<std::size_t, 9> kPeriod18Residues = {0, 2, 3, 4, 5, 6, 7, 8, 10};

/// (1 - x^30) / (Phi_5 Phi_6), Phi_5 Phi_6 = 1 + x^2 + x^3 + x^4 + x^6.
inline constexpr std::array<long long, 25> kPeriod30Polynomial = {
    1, 0, -1, -1, 0, 2, 1, -1, -2, -1, 2, 2, 0, -2, -2, 1, 2, 1, -1, -2, 0, 1, 1, 0, -1};
inline constexpr std::array<long long, 7> kPeriod30Numerator = {1, 0, 1, 1, 1, 0, 1};
inline constexpr std::array<std::size_t, 5> kPeriod30Residues = {0, 2, 3, 4, 6};

/// (m, r) pairs for the single-block congruence family checked by the oracles.
inline constexpr std::array<std::array<std::size_t, 2>, 5> kCongruenceFamily = {
    {{1, 1}, {2, 2}, {3, 2}, {2, 3}, {4, 1}}};

}  // namespace runsym::known
