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

#include "fixtures.hpp"
#include "rainbowkit/errors.hpp"
#include "rainbowkit/oracle.hpp"
#include "rainbowkit/rainbow_solver.hpp"

using namespace rainbowkit;
using namespace fixtures;

namespace {

std::set<std::size_t> colors_of(const RainbowMatching& r) {
  std::set<std::size_t> out;
  for (const ColoredEdge& ce : r.assignment) out.insert(ce.color);
  return out;
}

}  // namespace

TEST_CASE("build_contracted_network") {
  SUBCASE("empty rainbow matching") {
    RepresentationState state{{validate_matching({{1, 1}})}, {}};
    const ContractedNetwork net = build_contracted_network(state);
    CHECK(net.inner_count == 0);
    REQUIRE(net.family.groups().size() == 1);
    CHECK(net.family.groups()[0].paths ==
          std::vector<NetPath>{{s(), t()}});
    CHECK(net.translation.at({s(), t(), 0}) == Edge{1, 1});
  }
  SUBCASE("one matched edge") {
    const MatchingFamily family{validate_matching({{1, 2}, {2, 1}}),
                                validate_matching({{1, 1}}),
                                validate_matching({{3, 3}})};
    RepresentationState state{family, {{{1, Edge{1, 1}}}}};
    CHECK(state.unrepresented() == std::set<std::size_t>{0, 2});
    const ContractedNetwork net = build_contracted_network(state);
    CHECK(net.inner_count == 1);
    const PathGroup* g0 = net.family.find_group(0);
    REQUIRE(g0 != nullptr);
    CHECK(g0->paths == std::vector<NetPath>{{s(), v(0), t()}});
    CHECK(net.translation.at({s(), v(0), 0}) == Edge{2, 1});
    CHECK(net.translation.at({v(0), t(), 0}) == Edge{1, 2});
    const PathGroup* g2 = net.family.find_group(2);
    REQUIRE(g2 != nullptr);
    CHECK(g2->paths == std::vector<NetPath>{{s(), t()}});
  }
  SUBCASE("a cycle contributes nothing") {
    const MatchingFamily fam{e3(), e3(), e3(), o3()};
    RepresentationState cyc{fam, {{{0, Edge{1, 1}}, {1, Edge{2, 2}}, {2, Edge{3, 3}}}}};
    const ContractedNetwork net = build_contracted_network(cyc);
    CHECK(net.inner_count == 3);
    CHECK(net.family.groups().empty());
    CHECK(net.family.dropped_empty_groups());
  }
  SUBCASE("nothing unrepresented") {
    RepresentationState state{{validate_matching({{1, 1}})}, {{{0, Edge{1, 1}}}}};
    CHECK_THROWS_AS(build_contracted_network(state), NoUnrepresentedColors);
  }
}

TEST_CASE("find_rainbow_matching") {
  CHECK_FALSE(find_rainbow_matching({e3(), e3(), o3(), o3()}, 3).has_value());

  const MatchingFamily five{e3(), e3(), e3(), o3(), o3()};
  const auto r = find_rainbow_matching(five, 3);
  REQUIRE(r);
  CHECK(r->size() == 3);
  CHECK(is_valid_rainbow(five, *r));

  const MatchingFamily single{validate_matching({{1, 1}})};
  const auto one = find_rainbow_matching(single, 1);
  REQUIRE(one);
  REQUIRE(one->assignment.size() == 1);
  CHECK(one->assignment[0].color == 0);
  CHECK(one->assignment[0].edge == Edge{1, 1});

  CHECK(find_rainbow_matching(single, 0).has_value());
  CHECK_FALSE(find_rainbow_matching(single, 2).has_value());
}

TEST_CASE("is_valid_rainbow rejects bad assignments") {
  const MatchingFamily f{e2(), o2()};
  CHECK(is_valid_rainbow(f, {{{0, Edge{1, 1}}, {1, Edge{1, 2}}}}) == false);
  CHECK(is_valid_rainbow(f, {{{0, Edge{1, 1}}, {0, Edge{2, 2}}}}) == false);
  CHECK(is_valid_rainbow(f, {{{0, Edge{2, 1}}}}) == false);
  CHECK(is_valid_rainbow(f, {{{0, Edge{1, 1}}}}));
}

TEST_CASE("drisko_condition") {
  const std::vector<std::size_t> five(5, 3);
  CHECK(drisko_condition(five, 3));
  const std::vector<std::size_t> four(4, 3);
  CHECK_FALSE(drisko_condition(four, 3));
  CHECK(drisko_condition(std::vector<std::size_t>{}, 0));
  CHECK(drisko_condition(std::vector<std::size_t>{5, 5, 5}, 3));
  // Negative summands count against the total: -1 + 3 < 3.
  CHECK_FALSE(drisko_condition(std::vector<std::size_t>{1, 5, 5, 5}, 3));
  CHECK_THROWS_AS(drisko_condition(std::vector<std::size_t>{3}, 2),
                  PreconditionError);
}

TEST_CASE("near_rainbow") {
  const NearRainbow small = near_rainbow({e2(), o2()});
  CHECK(small.matching.size() == 2);
  CHECK(colors_of(small.colors).size() >= 1);

  const MatchingFamily c6{e3(), e3(), o3(), o3()};
  const NearRainbow big = near_rainbow(c6);
  CHECK(big.matching.size() == 3);
  CHECK(colors_of(big.colors).size() >= 2);
  CHECK(is_valid_rainbow(c6, big.colors));
  for (const ColoredEdge& ce : big.colors.assignment) {
    CHECK(big.matching.contains(ce.edge));
  }

  CHECK_THROWS_AS(near_rainbow({}), PreconditionError);
}

TEST_CASE("classify_family") {
  const FamilyClassification c6 = classify_family({e3(), e3(), o3(), o3()});
  REQUIRE(std::holds_alternative<ExtremalCycle>(c6));
  const ExtremalCycle& cyc = std::get<ExtremalCycle>(c6);
  CHECK(cyc.cycle == std::vector<Vertex>{left(1), right(1), left(2), right(2),
                                         left(3), right(3)});
  CHECK(cyc.even_colors == std::vector<std::size_t>{0, 1});
  CHECK(cyc.odd_colors == std::vector<std::size_t>{2, 3});

  const FamilyClassification c4 = classify_family({e2(), o2()});
  REQUIRE(std::holds_alternative<ExtremalCycle>(c4));
  CHECK(std::get<ExtremalCycle>(c4).cycle.size() == 4);

  const MatchingFamily mixed{e3(), e3(), e3(), o3()};
  const FamilyClassification r = classify_family(mixed);
  REQUIRE(std::holds_alternative<RainbowMatching>(r));
  CHECK(is_valid_rainbow(mixed, std::get<RainbowMatching>(r)));

  const MatchingFamily swapped{o3(), e3(), o3(), e3()};
  const auto sc = std::get<ExtremalCycle>(classify_family(swapped));
  CHECK(sc.even_colors == std::vector<std::size_t>{1, 3});
  CHECK(sc.odd_colors == std::vector<std::size_t>{0, 2});
}

TEST_CASE("check_near_extremal_shape") {
  CHECK(check_near_extremal_shape({e3(), e3(), o3(), o3()}) == 3);
  CHECK_THROWS_AS(check_near_extremal_shape({}), PreconditionError);
  CHECK_THROWS_AS(check_near_extremal_shape({e3(), o3()}), PreconditionError);
  CHECK_THROWS_AS(check_near_extremal_shape({e2(), validate_matching({{1, 1}})}),
                  PreconditionError);
}

TEST_CASE("canonical cycle families have no rainbow matching") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const MatchingFamily f = oracle::canonical_c2n(n);
    CHECK(f.size() == 2 * n - 2);
    CHECK_FALSE(find_rainbow_matching(f, n).has_value());
    CHECK(std::holds_alternative<ExtremalCycle>(classify_family(f)));
  }
}

TEST_CASE("solver agrees with brute force on random mixed families") {
  for (std::uint64_t i = 0; i < 1500; ++i) {
    oracle::Rng rng(oracle::derive_seed(31, i));
    const std::size_t side = rng.uniform(2, 5);
    std::vector<std::size_t> sizes(rng.uniform(1, 7));
    for (auto& sz : sizes) sz = rng.uniform(1, side);
    const MatchingFamily f = oracle::generate_family(
        oracle::FamilyMixed{sizes, side}, oracle::derive_seed(32, i));
    const std::size_t target = rng.uniform(1, side);

    const RainbowSearch search = solve_rainbow(f, target);
    const auto brute = oracle::brute_rainbow(f, target);
    CHECK(search.witness.has_value() == brute.has_value());
    CHECK(search.augmentations <= target);
    if (search.witness) {
      CHECK(search.witness->size() == target);
      CHECK(is_valid_rainbow(f, *search.witness));
    }
    if (target <= f.size() && drisko_condition(member_sizes(f), target)) {
      CHECK(search.witness.has_value());
      CHECK_FALSE(search.exhaustive_fallback);
    }
  }
}

TEST_CASE("2n - 1 matchings of size n augment all the way") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t i = 0; i < 300; ++i) {
      const MatchingFamily f = oracle::generate_family(
          oracle::FamilyUniform{n, 2 * n - 1, n + 1}, oracle::derive_seed(n, i));
      const RainbowSearch search = solve_rainbow(f, n);
      REQUIRE(search.witness);
      CHECK(search.augmentations == n);
      CHECK_FALSE(search.exhaustive_fallback);
      CHECK(is_valid_rainbow(f, *search.witness));
    }
  }
}
