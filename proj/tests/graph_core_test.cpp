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

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "rainbowkit/errors.hpp"
#include "rainbowkit/oracle.hpp"

using namespace rainbowkit;
using namespace fixtures;

namespace {

std::vector<Vertex> reversed(std::vector<Vertex> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// b2 a1 b1 a2, read in either direction.
bool is_b2_a1_b1_a2(const std::vector<Vertex>& vs) {
  const std::vector<Vertex> want{right(2), left(1), right(1), left(2)};
  return vs == want || vs == reversed(want);
}

std::set<Vertex> vertex_set(const Component& c) {
  return {c.vertices.begin(), c.vertices.end()};
}

}  // namespace

TEST_CASE("validate_matching") {
  CHECK(validate_matching({}).size() == 0);
  CHECK(validate_matching({{1, 1}, {2, 2}}).size() == 2);

  try {
    validate_matching({{1, 1}, {1, 2}});
    FAIL("expected OverlapError");
  } catch (const OverlapError& e) {
    CHECK(std::string(e.what()).find("a1") != std::string::npos);
  }
  CHECK_THROWS_AS(validate_matching({{-1, 0}}), PreconditionError);
  CHECK_THROWS_AS(validate_matching({{0, 3}, {1, 3}}), OverlapError);
}

TEST_CASE("matching queries") {
  const Matching m = validate_matching({{2, 0}, {0, 1}});
  CHECK(m.contains({0, 1}));
  CHECK_FALSE(m.contains({0, 0}));
  CHECK(m.covers(left(2)));
  CHECK(m.covers(right(1)));
  CHECK_FALSE(m.covers(right(2)));
  CHECK(m.edge_at(right(0)) == Edge{2, 0});
  CHECK(m == validate_matching({{0, 1}, {2, 0}}));
  CHECK(to_string(left(3)) == "a3");
  CHECK(to_string(right(0)) == "b0");
}

TEST_CASE("symmetric_difference_components") {
  SUBCASE("identical single edge") {
    const Matching g = validate_matching({{1, 1}});
    const auto cs = symmetric_difference_components(g, g);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].kind == ComponentKind::Path);
    CHECK(cs[0].edges == std::vector<Edge>{{1, 1}});
  }
  SUBCASE("the 6-cycle") {
    const auto cs = symmetric_difference_components(e3(), o3());
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].kind == ComponentKind::Cycle);
    CHECK(cs[0].vertices.size() == 6);
    CHECK(cs[0].edges.size() == 6);
  }
  SUBCASE("three-edge path") {
    const auto cs = symmetric_difference_components(
        validate_matching({{1, 1}}), validate_matching({{1, 2}, {2, 1}}));
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].kind == ComponentKind::Path);
    CHECK(is_b2_a1_b1_a2(cs[0].vertices));
  }
}

TEST_CASE("augmenting_paths") {
  SUBCASE("empty base") {
    const auto ps = augmenting_paths(Matching{}, validate_matching({{1, 1}}));
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].edges == std::vector<Edge>{{1, 1}});
  }
  SUBCASE("one alternating path") {
    const auto ps = augmenting_paths(validate_matching({{1, 1}}),
                                     validate_matching({{1, 2}, {2, 1}}));
    REQUIRE(ps.size() == 1);
    CHECK(is_b2_a1_b1_a2(ps[0].vertices));
  }
  SUBCASE("a cycle has none") {
    CHECK(augmenting_paths(e3(), o3()).empty());
  }
}

TEST_CASE("apply_augmentation") {
  CHECK(apply_augmentation(Matching{}, path_through({left(1), right(1)})) ==
        validate_matching({{1, 1}}));

  const Matching f = validate_matching({{1, 1}});
  const Matching g = apply_augmentation(
      f, path_through({right(2), left(1), right(1), left(2)}));
  CHECK(g == validate_matching({{1, 2}, {2, 1}}));

  CHECK_THROWS_AS(apply_augmentation(f, path_through({left(1), right(1)})),
                  NotAugmentingError);
  CHECK_THROWS_AS(path_through({left(1), left(2)}), PreconditionError);
}

TEST_CASE("random pairs: partition, augmenting count, symmetry") {
  oracle::Rng rng(20261018);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t side = rng.uniform(1, 6);
    const Matching g = oracle::generate_family(
        oracle::FamilyUniform{rng.uniform(1, side), 1, side},
        oracle::derive_seed(1, trial))[0];
    const Matching h = oracle::generate_family(
        oracle::FamilyUniform{rng.uniform(1, side), 1, side},
        oracle::derive_seed(2, trial))[0];

    const auto cs = symmetric_difference_components(g, h);
    std::multiset<Edge> covered;
    for (const Component& c : cs) covered.insert(c.edges.begin(), c.edges.end());
    std::set<Edge> expected(g.edges().begin(), g.edges().end());
    expected.insert(h.edges().begin(), h.edges().end());
    CHECK(covered == std::multiset<Edge>(expected.begin(), expected.end()));

    const auto ps = augmenting_paths(g, h);
    if (h.size() > g.size()) CHECK(ps.size() >= h.size() - g.size());
    for (const AlternatingPath& p : ps) {
      CHECK(is_augmenting(g, p));
      const Matching bigger = apply_augmentation(g, p);
      CHECK(bigger.size() == g.size() + 1);
    }

    const auto back = symmetric_difference_components(h, g);
    REQUIRE(back.size() == cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      CHECK(vertex_set(cs[i]) == vertex_set(back[i]));
    }
  }
}
