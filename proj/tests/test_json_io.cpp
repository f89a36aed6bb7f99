#include "brstack/error.hpp"
#include "brstack/json_io.hpp"

#include <doctest.h>

using namespace brstack;

namespace {
std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }
}  // namespace

TEST_CASE("group and element JSON") {
  const FiniteAbelianGroup g(ints({2, 4}));
  CHECK(to_json(g).dump() == "[2,4]");
  CHECK(group_from_json(Json::parse("[2,4]")) == g);
  CHECK(to_json(FiniteAbelianGroup()).dump() == "[]");

  const GroupElement x(g, ints({1, 3}));
  CHECK(to_json(x).dump() == R"({"group":[2,4],"coords":[1,3]})");
  CHECK(element_from_json(to_json(x)) == x);

  CHECK_THROWS_AS(group_from_json(Json::parse("[4,2]")), ParseError);
  CHECK_THROWS_AS(group_from_json(Json::parse("{}")), ParseError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"group":[2],"coords":[1,1]})")), ParseError);
}

TEST_CASE("integers beyond long are strings") {
  const Integer big("340282366920938463463374607431768211456");
  CHECK(to_json(big).is_string());
  CHECK(integer_from_json(to_json(big)) == big);
  CHECK(integer_from_json(Json(-5)) == -5);
  CHECK_THROWS_AS(integer_from_json(Json("12x")), ParseError);
  CHECK_THROWS_AS(integer_from_json(Json(1.5)), ParseError);
}

TEST_CASE("datum JSON") {
  const AdmissibleDatum a(0, 4, {1, 2, 1});
  CHECK(to_json(a).dump() == R"({"gq":0,"N":4,"d":[1,2,1]})");
  CHECK(datum_from_json(to_json(a)) == a);
  CHECK_THROWS_AS(datum_from_json(Json::parse(R"({"gq":0,"N":4,"d":[1]})")), ParseError);
  CHECK_THROWS_AS(datum_from_json(Json::parse(R"({"gq":0,"d":[1]})")), ParseError);
}

TEST_CASE("sector reports round-trip") {
  for (std::int64_t g = 2; g <= 6; ++g)
    for (std::int64_t n = 2; n <= 6; ++n)
      for (const auto& r : decompose_inertia(g, n)) {
        const Json j = to_json(r);
        const Json again = to_json(sector_report_from_json(j));
        CHECK(j == again);
      }
  const auto bad = classify(AdmissibleDatum(0, 2, {5}));
  const Json j = to_json(bad);
  CHECK(j["g"] == "3/2");
  CHECK(j["brauer"].is_null());
  CHECK(to_json(sector_report_from_json(j)) == j);
}

TEST_CASE("Brauer report schema") {
  const auto r = brauer_report(AdmissibleDatum(0, 2, {6}));
  CHECK(to_json(r).dump() == R"({"h2":[2],"class_nontrivial":true,"d_over_N":3,"all_di_even":true})");
  CHECK_THROWS_AS(brauer_report_from_json(
                      Json::parse(R"({"h2":[],"class_nontrivial":true,"d_over_N":3,"all_di_even":true})")),
                  ParseError);
}

TEST_CASE("semisimple group spec JSON") {
  const auto tokenized = semisimple_spec_from_json(Json::parse(R"({"factors":["A","3"],"central_generators":[[2]]})"));
  CHECK(tokenized.factors() == std::vector{SimpleType(Family::A, 3)});
  CHECK(brauer_group_of_BG(tokenized) == FiniteAbelianGroup(ints({2})));

  const auto numeric = semisimple_spec_from_json(Json::parse(R"({"factors":["A",3]})"));
  CHECK(numeric.central_subgroup().is_trivial());

  const auto named = semisimple_spec_from_json(Json::parse(R"({"factors":["A1","D4"],"central_generators":[[1,0,0],[0,1,1]]})"));
  CHECK(named.factors().size() == 2);
  CHECK(brauer_group_of_BG(named) == FiniteAbelianGroup(ints({2, 2})));

  const auto again = semisimple_spec_from_json(to_json(named));
  CHECK(again.central_subgroup() == named.central_subgroup());

  CHECK_THROWS_AS(semisimple_spec_from_json(Json::parse(R"({"factors":[]})")), ParseError);
  CHECK_THROWS_AS(semisimple_spec_from_json(Json::parse(R"({"factors":["A"]})")), ParseError);
  CHECK_THROWS_AS(semisimple_spec_from_json(Json::parse(R"({"factors":["B1"]})")), ParseError);
  CHECK_THROWS_AS(semisimple_spec_from_json(Json::parse(R"({"factors":["A3"],"central_generators":[[5]]})")), Error);
}
