#include <doctest.h>

#include "runsym/error.hpp"
#include "runsym/known_values.hpp"
#include "runsym/serialize.hpp"

using namespace runsym;

TEST_CASE("polynomials and series serialize as decimal strings, lowest degree first") {
  CHECK(to_json(IntPolynomial{1, 0, -1}).dump() == R"(["1","0","-1"])");
  CHECK(to_json(IntPolynomial{}).dump() == "[]");
  const BigInt huge = factorial(30);
  CHECK(to_json(TruncatedSeries(Convention::Egf, {1, huge})).dump() == "[\"1\",\"" + to_decimal(huge) + "\"]");
}

TEST_CASE("RunClassSpec JSON has sorted keys and round-trips") {
  const auto spec = make_run_class_spec(IntPolynomial::from_ints(known::kPeriod12Numerator), 12);
  const std::string text = to_json(spec).dump();
  CHECK(text == R"({"N":["1","0","1","1","0","1"],"T":[0,2,3,5],"a":["1","0","-1","-1","1","1","0","-1"],"m":12})");
  CHECK(run_class_spec_from_json(Json::parse(text)) == spec);
}

TEST_CASE("RunClassSpec parsing rejects inconsistent input") {
  auto j = to_json(make_run_class_spec(IntPolynomial{1, 1}, 4));
  j["m"] = 5;
  CHECK_THROWS_AS(run_class_spec_from_json(j), Error);
  CHECK_THROWS_AS(run_class_spec_from_json(Json::parse(R"({"m":4})")), Error);
  CHECK_THROWS_AS(run_class_spec_from_json(Json::parse(R"({"m":-4,"T":[0],"N":["1"],"a":["1"]})")), Error);
}

TEST_CASE("NSymElement JSON") {
  NSymElement f(Basis::Ribbon, 4);
  f.add(Composition{2, 1}, 3);
  f.add(Composition{1}, -1);
  f.add(Composition{1, 2}, 5);
  const std::string text = to_json(f).dump();
  CHECK(text ==
        R"({"basis":"R","order":4,"terms":[{"coeff":"-1","composition":[1]},{"coeff":"5","composition":[1,2]},{"coeff":"3","composition":[2,1]}]})");
  CHECK(nsym_from_json(Json::parse(text)) == f);
  CHECK_THROWS_AS(nsym_from_json(Json::parse(R"({"basis":"E","order":1,"terms":[]})")), Error);
}

TEST_CASE("rejection JSON carries the witness") {
  const auto r = std::get<Rejection>(classify_reciprocal(IntPolynomial{1, 1}));
  CHECK(to_json(r).dump() == R"({"reason":"coefficient-out-of-range","witness":{"index":1,"m":2,"value":"-1"}})");
}

TEST_CASE("parse_coefficient_list") {
  CHECK(parse_coefficient_list("1,0,-1") == IntPolynomial{1, 0, -1});
  CHECK(parse_coefficient_list("1 0 -1 -1 0 1 1 0 -1") == IntPolynomial{1, 0, -1, -1, 0, 1, 1, 0, -1});
  CHECK(parse_coefficient_list(" 1, -1 ") == IntPolynomial{1, -1});
  CHECK(parse_coefficient_list("123456789012345678901234567890").coeff(0) == parse_decimal("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_coefficient_list(""), Error);
  CHECK_THROWS_AS(parse_coefficient_list("1,x"), Error);
  CHECK_THROWS_AS(parse_coefficient_list("1,-"), Error);
}
