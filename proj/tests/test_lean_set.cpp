#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "semimod/counting.hpp"
#include "semimod/error.hpp"
#include "semimod/lean_set.hpp"

using namespace semimod;

namespace {

  std::vector<std::vector<Int>> all_members(SemigroupPair const& S) {
    std::vector<std::vector<Int>> out;
    for (auto const& L : enumerate_lean_sets(S)) out.push_back(L.members());
    return out;
  }

}  // namespace

TEST_CASE("is_lean examples") {
  SemigroupPair const S(5, 7);
  std::vector<Int> const example{0, 9, 6, 8};
  CHECK(is_lean(S, example));
  CHECK(is_lean_pairwise(S, example));
  std::vector<Int> const with_member{0, 5, 8};
  CHECK_FALSE(is_lean(S, with_member));
  std::vector<Int> const close{0, 1, 13};  // 13 - 1 = 12 is a member
  CHECK_FALSE(is_lean(S, close));
  std::vector<Int> const zero{0};
  CHECK(is_lean(S, zero));
  std::vector<Int> const no_zero{1, 2};
  CHECK_THROWS_AS(is_lean(S, no_zero), InvalidInput);
}

TEST_CASE("from_members validates and sorts") {
  SemigroupPair const S(5, 7);
  std::vector<Int> const xs{0, 9, 6, 8};
  auto const L = LeanSet::from_members(S, xs);
  CHECK(L.members() == std::vector<Int>{0, 6, 8, 9});
  REQUIRE(L.points().size() == 3);
  CHECK(L.points()[0] == GapPoint{9, 1, 3});
  CHECK(L.points()[1] == GapPoint{6, 3, 2});
  CHECK(L.points()[2] == GapPoint{8, 4, 1});
  std::vector<Int> const bad{0, 5};
  CHECK_THROWS_AS(LeanSet::from_members(S, bad), InvalidInput);
  std::vector<Int> const dup{0, 6, 6};
  CHECK(LeanSet::from_members(S, dup).members() == std::vector<Int>{0, 6});
  CHECK(LeanSet::from_points(S, L.points()) == L);
}

TEST_CASE("enumeration matches the subset oracle") {
  for (auto [alpha, beta] : {std::pair{2, 3}, {3, 5}, {4, 7}, {5, 7}, {3, 10}}) {
    SemigroupPair const S(alpha, beta);
    auto got = all_members(S);
    std::set<std::vector<Int>> const unique(got.begin(), got.end());
    CHECK(unique.size() == got.size());
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::lean_sets(alpha, beta));
  }
  CHECK(count_enumerated_lean_sets(SemigroupPair(5, 7)) == 66);
  CHECK(count_enumerated_lean_sets(SemigroupPair(5, 7), 3) == 20);
  CHECK(count_enumerated_lean_sets(SemigroupPair(2, 3)) == 2);
}

TEST_CASE("enumeration order is lexicographic in the gap points") {
  SemigroupPair const S(5, 7);
  std::vector<std::vector<std::pair<Int, Int>>> keys;
  for (auto const& L : enumerate_lean_sets(S)) {
    std::vector<std::pair<Int, Int>> k;
    for (auto const& p : L.points()) k.emplace_back(p.a, p.b);
    keys.push_back(k);
  }
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(keys.front().empty());
}

TEST_CASE("filtered enumeration is a subsequence of the full one") {
  SemigroupPair const S(6, 11);
  auto const all = enumerate_lean_sets(S);
  for (Int r = 0; r < 6; ++r) {
    std::vector<LeanSet> want;
    for (auto const& L : all) {
      if (static_cast<Int>(L.gap_count()) == r) want.push_back(L);
    }
    CHECK(enumerate_lean_sets(S, r) == want);
    CHECK(static_cast<Int>(want.size()) == count_lean_sets(S, r));
  }
  CHECK_THROWS_AS(enumerate_lean_sets(S, 6), InvalidInput);
}

TEST_CASE("partitions cover the enumeration exactly once") {
  SemigroupPair const S(7, 9);
  std::vector<LeanSet> merged;
  for (std::size_t p = 0; p < lean_set_partition_count(S); ++p) {
    for_each_lean_set_in_partition(S, p, std::nullopt,
                                   [&](LeanSet const& L) { merged.push_back(L); });
  }
  CHECK(merged == enumerate_lean_sets(S));
}

TEST_CASE("monotone criterion agrees with the pairwise definition") {
  std::mt19937_64 rng(7);
  for (auto [alpha, beta] : {std::pair{5, 7}, {8, 13}, {11, 14}}) {
    SemigroupPair const S(alpha, beta);
    auto const g = oracle::gaps(alpha, beta);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    std::uniform_int_distribution<int> size(0, 5);
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<Int> xs{0};
      for (int i = size(rng); i > 0; --i) xs.push_back(g[pick(rng)]);
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      bool const want = oracle::is_lean(alpha, beta, xs);
      CHECK(is_lean(S, xs) == want);
      CHECK(is_lean_pairwise(S, xs) == want);
    }
  }
}
