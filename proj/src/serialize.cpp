#include "runsym/serialize.hpp"

#include <string>

#include "runsym/error.hpp"

namespace runsym {

namespace {

Json decimal_array(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

BigInt integer_from_json(const Json& j) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  throw Error(Errc::ParseError, "expected an integer or decimal string, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_from_json(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw Error(Errc::ParseError, "expected a nonnegative integer, got " + j.dump());
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const IntPolynomial& p) { return decimal_array(p.coeffs()); }

Json to_json(const TruncatedSeries& s) { return decimal_array(s.coeffs()); }

Json to_json(const RunClassSpec& spec) {
  Json out = Json::object();
  out["m"] = spec.period;
  out["T"] = spec.residues;
  out["N"] = to_json(spec.numerator);
  out["a"] = to_json(spec.polynomial);
  return out;
}

Json to_json(const Composition& c) { return Json(c.parts()); }

Json to_json(const NSymElement& f) {
  Json terms = Json::array();
  for (const auto& [index, coeff] : f.terms()) {
    terms.push_back(Json{{"composition", to_json(index)}, {"coeff", to_decimal(coeff)}});
  }
  return Json{{"basis", f.basis() == Basis::Complete ? "H" : "R"}, {"order", f.order()}, {"terms", terms}};
}

Json to_json(const Rejection& rejection) {
  Json witness = Json::object();
  switch (rejection.reason) {
    case Rejection::Reason::RepeatedFactor:
      witness["order"] = rejection.order;
      break;
    case Rejection::Reason::NonCyclotomicFactor:
      witness["cofactor"] = to_json(rejection.cofactor);
      break;
    case Rejection::Reason::CoefficientOutOfRange:
      witness["index"] = rejection.index;
      witness["value"] = to_decimal(rejection.value);
      witness["m"] = rejection.period;
      break;
  }
  return Json{{"reason", reason_name(rejection.reason)}, {"witness", witness}};
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be a JSON array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return IntPolynomial(std::move(coeffs));
}

RunClassSpec run_class_spec_from_json(const Json& j) {
  RunClassSpec spec;
  spec.period = size_from_json(field(j, "m"));
  const Json& residues = field(j, "T");
  if (!residues.is_array()) throw Error(Errc::ParseError, "T must be an array");
  for (const auto& t : residues) spec.residues.push_back(size_from_json(t));
  spec.numerator = polynomial_from_json(field(j, "N"));
  spec.polynomial = polynomial_from_json(field(j, "a"));
  try {
    spec.validate();
  } catch (const Error& e) {
    throw Error(Errc::ParseError, std::string("inconsistent run class spec: ") + e.what());
  }
  return spec;
}

NSymElement nsym_from_json(const Json& j) {
  const std::string basis = field(j, "basis").get<std::string>();
  if (basis != "H" && basis != "R") throw Error(Errc::ParseError, "basis must be \"H\" or \"R\"");
  NSymElement out(basis == "H" ? Basis::Complete : Basis::Ribbon, size_from_json(field(j, "order")));
  for (const auto& term : field(j, "terms")) {
    std::vector<int> parts;
    for (const auto& p : field(term, "composition")) parts.push_back(p.get<int>());
    out.add(Composition(std::move(parts)), integer_from_json(field(term, "coeff")));
  }
  return out;
}

IntPolynomial parse_coefficient_list(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && !is_sep(text[pos])) ++pos;
    if (pos > start) coeffs.push_back(parse_decimal(text.substr(start, pos - start)));
  }
  if (coeffs.empty()) throw Error(Errc::ParseError, "empty coefficient list");
  return IntPolynomial(std::move(coeffs));
}

}  // namespace runsym
