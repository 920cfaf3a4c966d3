// Copyright 2026 The rainbowkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "fixtures.hpp"
#include "rainbowkit/errors.hpp"
#include "rainbowkit/json_io.hpp"
#include "rainbowkit/oracle.hpp"

using namespace rainbowkit;
using namespace fixtures;

TEST_CASE("brute_rainbow") {
  CHECK_FALSE(oracle::brute_rainbow({e3(), e3(), o3(), o3()}, 3).has_value());

  const auto one = oracle::brute_rainbow({validate_matching({{1, 1}})}, 1);
  REQUIRE(one);
  CHECK(one->assignment ==
        std::vector<ColoredEdge>{{0, Edge{1, 1}}});

  const MatchingFamily five{e3(), e3(), e3(), o3(), o3()};
  const auto found = oracle::brute_rainbow(five, 3);
  REQUIRE(found);
  CHECK(is_valid_rainbow(five, *found));
  // Lexicographically first: colors 0, 1, 2 take a1b1, a2b2, a3b3.
  CHECK(found->assignment == std::vector<ColoredEdge>{
                                 {0, Edge{1, 1}}, {1, Edge{2, 2}}, {2, Edge{3, 3}}});

  CHECK_THROWS_AS(oracle::brute_rainbow(five, 3, 2), BudgetExceeded);
}

TEST_CASE("brute_mc_path") {
  const auto empty = oracle::brute_mc_path(build_family({}));
  CHECK(empty.size() == 1);
  CHECK(empty.count(s()) == 1);

  const auto both =
      oracle::brute_mc_path(build_family({{{s(), v(1), t()}}, {{s(), v(1), t()}}}));
  CHECK(both.size() == 3);
  CHECK(both.count(t()) == 1);

  const auto single = oracle::brute_mc_path(build_family({{{s(), v(1), t()}}}));
  CHECK(single.size() == 2);
  CHECK(single.count(v(1)) == 1);
  CHECK(single.count(t()) == 0);
}

TEST_CASE("brute_zero_sum") {
  CHECK_FALSE(oracle::brute_zero_sum(make_multiset(3, {0, 0, 1, 1})).has_value());
  CHECK(oracle::brute_zero_sum(make_multiset(3, {0, 0, 1, 1, 2})) ==
        std::vector<int>{0, 1, 2});
  CHECK(oracle::brute_zero_sum(make_multiset(2, {0, 0, 1})) ==
        std::vector<int>{0, 0});
}

TEST_CASE("generators are pinned") {
  using json_io::to_json;
  CHECK(to_json(oracle::generate_family(oracle::FamilyUniform{2, 3, 3}, 42))
            .dump() == "[[[1,2],[2,0]],[[0,0],[1,2]],[[0,2],[2,0]]]");
  CHECK(to_json(oracle::generate_multiset(oracle::MultisetSpec{3, 5}, 1)) ==
        to_json(make_multiset(3, {0, 0, 0, 0, 2})));
  CHECK(to_json(oracle::generate_network(oracle::NetworkSpec{4, 2, 2}, 3))
            .dump() ==
        R"([[["s",3,1,2,0,"t"],["s","t"]],[["s",0,2,3,"t"],["s",1,"t"]]])");
  CHECK(to_json(oracle::generate_matrix(oracle::MatrixSpec{3, 2, 3}, 4))
            .dump() == R"({"cells":[[1,2],[1,2],[1,0]],"cols":2,"rows":3})");
}

TEST_CASE("generate dispatches and rejects infeasible specs") {
  const oracle::Instance inst =
      oracle::generate({oracle::FamilyUniform{2, 3, 3}, 42});
  REQUIRE(std::holds_alternative<MatchingFamily>(inst));
  CHECK(std::get<MatchingFamily>(inst) ==
        oracle::generate_family(oracle::FamilyUniform{2, 3, 3}, 42));

  CHECK_THROWS_AS(oracle::generate({oracle::FamilyUniform{4, 1, 3}, 0}),
                  InfeasibleSpec);
  CHECK_THROWS_AS(oracle::generate({oracle::MultisetSpec{0, 3}, 0}),
                  InfeasibleSpec);
  CHECK_THROWS_AS(oracle::generate({oracle::MatrixSpec{2, 3, 2}, 0}),
                  InfeasibleSpec);
}

TEST_CASE("generated instances respect their invariants") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const MatchingFamily f =
        oracle::generate_family(oracle::FamilyMixed{{1, 2, 3, 4}, 4}, seed);
    REQUIRE(f.size() == 4);
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(f[i].size() == i + 1);
      for (const Edge& e : f[i].edges()) {
        CHECK(e.left < 4);
        CHECK(e.right < 4);
      }
    }

    const auto groups = oracle::generate_network(oracle::NetworkSpec{5, 3, 2}, seed);
    CHECK_NOTHROW(build_family(groups));
    for (const auto& g : groups) {
      CHECK(g.size() <= 2);
      for (const NetPath& p : g) {
        for (NetNode node : inner_nodes(p)) CHECK(node.index < 5);
      }
    }

    const SymbolMatrix a = oracle::generate_matrix(oracle::MatrixSpec{5, 3, 4}, seed);
    CHECK_NOTHROW(check_row_distinct(a));

    CHECK(oracle::generate_family(oracle::FamilyUniform{3, 5, 4}, seed) ==
          oracle::generate_family(oracle::FamilyUniform{3, 5, 4}, seed));
  }
}

TEST_CASE("Rng is portable") {
  oracle::Rng rng(0);
  // mt19937_64 with seed 0; its first raw output is 2947667278772165694.
  std::mt19937_64 reference(0);
  CHECK(reference() == 2947667278772165694ULL);
  for (int i = 0; i < 1000; ++i) {
    const auto x = rng.uniform(3, 9);
    CHECK(x >= 3);
    CHECK(x <= 9);
  }
  CHECK(oracle::derive_seed(1, 2) == oracle::derive_seed(1, 2));
  CHECK(oracle::derive_seed(1, 2) != oracle::derive_seed(2, 1));
}

TEST_CASE("enumerate_multisets") {
  const auto two = oracle::enumerate_multisets(2, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].elements == std::vector<int>{0, 0});
  CHECK(two[1].elements == std::vector<int>{0, 1});
  CHECK(two[2].elements == std::vector<int>{1, 1});

  CHECK(oracle::enumerate_multisets(3, 4).size() == 15);
  CHECK(oracle::enumerate_multisets(4, 7).size() == 120);
  CHECK(oracle::enumerate_multisets(6, 11).size() == 4368);

  const auto ones = oracle::enumerate_multisets(1, 4);
  REQUIRE(ones.size() == 1);
  CHECK(ones[0].elements == std::vector<int>{0, 0, 0, 0});

  CHECK(oracle::multichoose(16, 5) == 15504);
  CHECK_THROWS_AS(oracle::enumerate_multisets(6, 11, 100), BudgetExceeded);
}

TEST_CASE("all_matchings and all_st_paths") {
  // Size-2 matchings of K_{3,3}: C(3,2) * 3 * 2.
  CHECK(oracle::all_matchings(2, 3).size() == 18);
  CHECK(oracle::all_matchings(3, 3).size() == 6);
  // s-t paths through k labelled inner nodes: sum of k! / (k - j)!.
  CHECK(oracle::all_st_paths(0).size() == 1);
  CHECK(oracle::all_st_paths(2).size() == 5);
  CHECK(oracle::all_st_paths(3).size() == 16);
}

TEST_CASE("canonical_c2n") {
  const MatchingFamily f = oracle::canonical_c2n(3);
  REQUIRE(f.size() == 4);
  CHECK(f[0] == oracle::cycle_even_matching(3));
  CHECK(f[1] == oracle::cycle_even_matching(3));
  CHECK(f[2] == oracle::cycle_odd_matching(3));
  CHECK(f[3] == oracle::cycle_odd_matching(3));
  const auto cs = symmetric_difference_components(f[0], f[2]);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].kind == ComponentKind::Cycle);
  CHECK_THROWS_AS(oracle::canonical_c2n(1), PreconditionError);
}

TEST_CASE("budget_from_env") {
  ::unsetenv("RAINBOWKIT_BUDGET");
  CHECK(oracle::budget_from_env() == oracle::kDefaultBudget);
  ::setenv("RAINBOWKIT_BUDGET", "1234", 1);
  CHECK(oracle::budget_from_env() == 1234);
  ::unsetenv("RAINBOWKIT_BUDGET");
}
