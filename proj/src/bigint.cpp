#include "runsym/bigint.hpp"

#include <cctype>

#include "runsym/error.hpp"

namespace runsym {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::TooManyDivisors: return "TooManyDivisors";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::CheckFailed: return "CheckFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

BigInt factorial(std::size_t n) {
  BigInt result = 1;
  for (std::size_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: result is C(n, i+1) after this step
  }
  return result;
}

BigInt multinomial(std::span<const int> parts) {
  BigInt result = 1;
  std::size_t total = 0;
  for (int part : parts) {
    total += static_cast<std::size_t>(part);
    result *= binomial(total, static_cast<std::size_t>(part));
  }
  return result;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw Error(Errc::ParseError, "empty integer '" + std::string(text) + "'");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (!std::isdigit(c)) throw Error(Errc::ParseError, "not an integer: '" + std::string(text) + "'");
    value *= 10;
    value += c - '0';
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace runsym
