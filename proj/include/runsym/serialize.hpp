#pragma once

// JSON forms of the library values. Integers that can grow without bound are
// written as decimal strings, lowest degree first; objects use sorted keys so
// equal values always produce identical bytes.

#include <json.hpp>

#include "runsym/cyclotomic.hpp"
#include "runsym/nsym.hpp"
#include "runsym/series.hpp"

namespace runsym {

using Json = nlohmann::json;

Json to_json(const IntPolynomial& p);
Json to_json(const TruncatedSeries& s);
Json to_json(const RunClassSpec& spec);
Json to_json(const NSymElement& f);
Json to_json(const Rejection& rejection);
Json to_json(const Composition& c);

/// The parsers throw Error(ParseError) on malformed input.
IntPolynomial polynomial_from_json(const Json& j);
RunClassSpec run_class_spec_from_json(const Json& j);
NSymElement nsym_from_json(const Json& j);

/// Comma- and/or whitespace-separated integers, lowest degree first.
IntPolynomial parse_coefficient_list(std::string_view text);

}  // namespace runsym
