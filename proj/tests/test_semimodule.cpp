#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "semimod/error.hpp"
#include "semimod/semimodule.hpp"

using namespace semimod;

namespace {

  std::vector<Int> v(std::initializer_list<Int> xs) {
    return xs;
  }

}  // namespace

TEST_CASE("minimal generators") {
  SemigroupPair const S(5, 7);
  CHECK(minimal_generators(S, v({0, 8, 6, 9})) == v({0, 6, 8, 9}));
  CHECK(minimal_generators(S, v({0, 5, 8})) == v({0, 8}));
  CHECK(minimal_generators(S, v({15, 13, 16, 14, 20, 28})) == v({13, 14, 15, 16}));
  CHECK(minimal_generators(S, v({7, 7, 3})) == v({3, 7}));
  CHECK_THROWS_AS(minimal_generators(S, v({})), InvalidInput);
  CHECK_THROWS_AS(minimal_generators(S, v({-1, 3})), InvalidInput);
}

TEST_CASE("minimal generators agree with the naive filter") {
  std::mt19937_64 rng(3);
  for (auto [alpha, beta] : {std::pair{3, 5}, {5, 7}, {8, 13}}) {
    SemigroupPair const S(alpha, beta);
    std::uniform_int_distribution<Int> val(0, 3 * alpha * beta);
    std::uniform_int_distribution<int> size(1, 8);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<Int> xs;
      for (int i = size(rng); i > 0; --i) xs.push_back(val(rng));
      auto const got = minimal_generators(S, xs);
      CHECK(got == oracle::minimal(alpha, beta, xs));
      for (Int x : got) {
        for (Int y : got) {
          if (x > y) CHECK(is_gap(S, x - y));
        }
      }
    }
  }
}

TEST_CASE("normalization and isomorphism") {
  SemigroupPair const S(5, 7);
  auto const N = normalize(S, v({15, 13, 16, 14}));
  CHECK(N.generators() == v({0, 1, 2, 3}));
  CHECK(N.is_normalized());
  Semimodule const A(S, v({13, 14, 15, 16}));
  CHECK(A.min() == 13);
  CHECK_FALSE(A.is_normalized());
  CHECK(is_isomorphic(A, N));
  CHECK(A.shifted(-13) == N);
  CHECK(N.shifted(13) == A);
  CHECK_THROWS_AS(N.shifted(-1), InvalidInput);
  CHECK_FALSE(is_isomorphic(N, Semimodule(S, v({0, 1, 2}))));
  CHECK(Semimodule(S, v({0, 8, 6, 9})).lean_set().members() == v({0, 6, 8, 9}));
}

TEST_CASE("windowed elements") {
  SemigroupPair const S(5, 7);
  CHECK(elements_up_to(Semimodule(S, v({0})), 10) == v({0, 5, 7, 10}));
  Semimodule const D(S, v({0, 6, 8, 9}));
  CHECK(elements_up_to(D, 6) == v({0, 5, 6}));
  auto const got = elements_up_to(D, 80);
  auto const want = oracle::elements(5, 7, {0, 6, 8, 9}, 80);
  CHECK(got == std::vector<Int>(want.begin(), want.end()));
  for (Int n = 0; n <= 80; ++n) CHECK(D.contains(n) == want.contains(n));
}

TEST_CASE("lean sets give pairwise non-isomorphic semimodules") {
  SemigroupPair const S(5, 7);
  auto const sets = oracle::lean_sets(5, 7);
  CHECK(sets.size() == 66);
  std::set<std::vector<Int>> seen;
  for (auto const& xs : sets) {
    Semimodule const M(S, xs);
    CHECK(M.generators() == xs);
    seen.insert(normalize(M).generators());
    CHECK(normalize(M.shifted(17)) == M);
  }
  CHECK(seen.size() == 66);
}
