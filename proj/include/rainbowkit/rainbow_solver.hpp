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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <variant>
#include <vector>

#include "rainbowkit/graph_core.hpp"
#include "rainbowkit/network_paths.hpp"

namespace rainbowkit {

struct ColoredEdge {
  std::size_t color = 0;
  Edge edge;

  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

/// An injective partial choice of one edge per color, sorted by color.
struct RainbowMatching {
  std::vector<ColoredEdge> assignment;

  std::size_t size() const { return assignment.size(); }
  Matching matching() const;

  friend bool operator==(const RainbowMatching&,
                         const RainbowMatching&) = default;
};

/// Distinct colors inside the family, each edge taken from its color's
/// matching, and the edges pairwise disjoint.
bool is_valid_rainbow(const MatchingFamily& family, const RainbowMatching& r);

struct RepresentationState {
  MatchingFamily family;
  RainbowMatching current;

  std::set<std::size_t> unrepresented() const;
};

/// The auxiliary network for one augmentation step. Inner node v(k) stands
/// for the k-th edge of `current`; the unmatched left vertices collapse to s
/// and the unmatched right vertices to t.
struct ContractedNetwork {
  PathGroupFamily family;  // group origin = color
  std::size_t inner_count = 0;
  std::vector<ColoredEdge> inner_edges;  // v(k) -> current edge k
  /// (from, to, color) -> the edge of that color's matching it came from.
  std::map<std::tuple<NetNode, NetNode, std::size_t>, Edge> translation;
};

/// Throws NoUnrepresentedColors when every color is used.
ContractedNetwork build_contracted_network(const RepresentationState& state);

struct RainbowSearch {
  std::optional<RainbowMatching> witness;
  std::size_t augmentations = 0;
  /// True when augmentation stalled and the exhaustive completion decided.
  bool exhaustive_fallback = false;
};

/// Grows a rainbow matching one multicolored augmenting path at a time. When
/// the paths stall below the guarantee threshold an exhaustive search
/// settles feasibility, so the answer is exact.
RainbowSearch solve_rainbow(const MatchingFamily& family, std::size_t target);

std::optional<RainbowMatching> find_rainbow_matching(
    const MatchingFamily& family, std::size_t target);

/// Sorts the sizes ascending and tests sum_{i <= m-a+1} (size_i - a + 1) >= a
/// literally, with no clamping of negative terms. Throws PreconditionError
/// when a > m.
bool drisko_condition(std::span<const std::size_t> sizes, std::size_t target);

std::vector<std::size_t> member_sizes(const MatchingFamily& family);

/// A size-n matching whose injective coloring covers at least n - 1 of the
/// 2n - 2 input colors.
struct NearRainbow {
  Matching matching;
  RainbowMatching colors;
};

NearRainbow near_rainbow(const MatchingFamily& family);

/// The 2n-cycle obstruction: `cycle` in canonical order, `even_colors` are
/// the members equal to the edges at even positions along it.
struct ExtremalCycle {
  std::vector<Vertex> cycle;
  std::vector<std::size_t> even_colors;
  std::vector<std::size_t> odd_colors;

  friend bool operator==(const ExtremalCycle&, const ExtremalCycle&) = default;
};

using FamilyClassification = std::variant<RainbowMatching, ExtremalCycle>;

/// Checks the cycle structure directly; nullopt if the family is not of
/// that form.
std::optional<ExtremalCycle> extremal_cycle_structure(
    const MatchingFamily& family);

/// 2n - 2 matchings of size n, n >= 2. Either a rainbow matching of size n or
/// the even/odd split of a 2n-cycle; TheoremViolation if neither.
FamilyClassification classify_family(const MatchingFamily& family);

/// Uniform size of the members, checking the 2n - 2 shape. Returns n.
std::size_t check_near_extremal_shape(const MatchingFamily& family);

}  // namespace rainbowkit
