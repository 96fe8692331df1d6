#include <doctest.h>

#include "semimod/error.hpp"
#include "semimod/json_io.hpp"

using namespace semimod;
using nlohmann::json;

TEST_CASE("semimodule round trip") {
  SemigroupPair const S(5, 7);
  std::vector<Int> const xs{16, 14, 13, 15};
  Semimodule const M(S, xs);
  auto const j = to_json(M);
  CHECK(j.dump() == R"({"alpha":5,"beta":7,"generators":[13,14,15,16]})");
  CHECK(semimodule_from_json(j) == M);
  CHECK_THROWS_AS(semimodule_from_json(json::parse(R"({"alpha":5})")), InvalidInput);
  CHECK_THROWS_AS(semimodule_from_json(json::parse(R"({"alpha":4,"beta":6,"generators":[0]})")),
                  InvalidInput);
  CHECK_THROWS_AS(semimodule_from_json(json::parse(R"({"alpha":5,"beta":7,"generators":"x"})")),
                  InvalidInput);
}

TEST_CASE("couple round trip") {
  FundamentalCouple const c{{0, 8, 6, 9}, {15, 13, 16, 14}};
  auto const j = to_json(c);
  CHECK(j.dump() == R"({"I":[0,8,6,9],"J":[15,13,16,14]})");
  CHECK(couple_from_json(j) == c);
  CHECK_THROWS_AS(couple_from_json(json::parse("[1,2]")), InvalidInput);
}

TEST_CASE("count table round trip") {
  auto const t = orbit_count_table(SemigroupPair(15, 16), 12);
  auto const j = to_json(t);
  CHECK(j["n"] == 12);
  CHECK(j["rows"].size() == 6);
  CHECK(j["rows"][5]["A"] == 41405);
  CHECK(j["rows"][5]["orbits"] == 3360);
  CHECK(count_table_from_json(j) == t);
  CHECK_THROWS_AS(count_table_from_json(json::parse(R"({"n":1,"rows":[{"ell":1}]})")),
                  InvalidInput);
}
