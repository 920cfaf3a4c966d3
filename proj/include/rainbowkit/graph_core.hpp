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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbowkit/errors.hpp"

namespace rainbowkit {

enum class Side : std::uint8_t { Left, Right };

/// A vertex of a bipartite graph. Left vertices order before right ones.
struct Vertex {
  Side side = Side::Left;
  int index = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex left(int index) { return {Side::Left, index}; }
inline Vertex right(int index) { return {Side::Right, index}; }

std::string to_string(const Vertex& v);

/// An edge between left vertex `left` and right vertex `right`.
struct Edge {
  int left = 0;
  int right = 0;

  Vertex left_vertex() const { return {Side::Left, left}; }
  Vertex right_vertex() const { return {Side::Right, right}; }
  bool touches(const Vertex& v) const {
    return v == left_vertex() || v == right_vertex();
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The edge joining `u` and `v`; they must lie on opposite sides.
Edge edge_between(const Vertex& u, const Vertex& v);

/// A set of pairwise vertex-disjoint edges, kept sorted.
class Matching {
 public:
  Matching() = default;

  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool contains(const Edge& e) const;
  bool covers(const Vertex& v) const { return edge_at(v).has_value(); }
  /// The edge of this matching incident to `v`, if any.
  std::optional<Edge> edge_at(const Vertex& v) const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  friend Matching validate_matching(std::span<const Edge> edges);
  std::vector<Edge> edges_;
};

/// Builds a Matching, throwing OverlapError naming the first vertex that two
/// edges share (scanning in input order). Duplicate edges count as overlap.
Matching validate_matching(std::span<const Edge> edges);
inline Matching validate_matching(std::initializer_list<Edge> edges) {
  return validate_matching(std::span<const Edge>(edges.begin(), edges.size()));
}

/// Ordered list of matchings; position is the color.
using MatchingFamily = std::vector<Matching>;

enum class ComponentKind : std::uint8_t { Path, Cycle };

/// A connected component of a union of two matchings. For a path,
/// edges[i] joins vertices[i] and vertices[i + 1]; for a cycle the last edge
/// closes back to vertices[0].
struct Component {
  ComponentKind kind = ComponentKind::Path;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  friend bool operator==(const Component&, const Component&) = default;
};

/// Components of G ∪ H in canonical form: paths start at their smaller
/// endpoint, cycles start at their smallest vertex and continue toward the
/// smaller neighbour. Components are ordered by smallest vertex. An edge
/// shared by G and H forms a length-1 path on its own.
std::vector<Component> symmetric_difference_components(const Matching& g,
                                                       const Matching& h);

/// A path given by its vertex sequence; edges[i] joins vertices[i] and
/// vertices[i + 1].
struct AlternatingPath {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  friend bool operator==(const AlternatingPath&,
                         const AlternatingPath&) = default;
};

/// Throws PreconditionError if consecutive vertices are on the same side.
AlternatingPath path_through(std::vector<Vertex> vertices);

/// True iff `path` is a simple F-alternating path whose end vertices are
/// both uncovered by `base` (so its first and last edges lie outside it).
bool is_augmenting(const Matching& base, const AlternatingPath& path);

/// Every augmenting F-alternating path among the components of F ∪ M,
/// oriented from its left endpoint. They are pairwise vertex-disjoint.
std::vector<AlternatingPath> augmenting_paths(const Matching& base,
                                              const Matching& other);

/// F Δ E(P). Throws NotAugmentingError unless `path` augments `base`.
Matching apply_augmentation(const Matching& base, const AlternatingPath& path);

}  // namespace rainbowkit
