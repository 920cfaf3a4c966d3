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
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rainbowkit/errors.hpp"

namespace rainbowkit {

/// A node of an s-t network. Orders as Source < Inner(0) < Inner(1) ... < Sink.
struct NetNode {
  enum class Kind : std::uint8_t { Source, Inner, Sink };

  Kind kind = Kind::Source;
  int index = 0;  // meaningful for Inner only

  static constexpr NetNode source() { return {Kind::Source, 0}; }
  static constexpr NetNode sink() { return {Kind::Sink, 0}; }
  static constexpr NetNode inner(int i) { return {Kind::Inner, i}; }

  bool is_source() const { return kind == Kind::Source; }
  bool is_sink() const { return kind == Kind::Sink; }
  bool is_inner() const { return kind == Kind::Inner; }

  friend auto operator<=>(const NetNode&, const NetNode&) = default;
};

std::string to_string(const NetNode& node);

/// Node sequence of a path. s-t paths start at Source, end at Sink, and visit
/// only distinct inner nodes in between.
using NetPath = std::vector<NetNode>;

/// Throws MalformedPathError unless `path` is a simple s-t path.
void check_st_path(const NetPath& path);

/// Inner nodes of an s-t path.
std::span<const NetNode> inner_nodes(const NetPath& path);

bool innerly_disjoint(const NetPath& p, const NetPath& q);

/// Pairwise innerly disjoint s-t paths. `origin` is the group's position in
/// the list handed to build_family, and is the color reported in witnesses.
struct PathGroup {
  std::size_t origin = 0;
  std::vector<NetPath> paths;
};

class PathGroupFamily {
 public:
  std::span<const PathGroup> groups() const { return groups_; }
  std::size_t total_paths() const { return total_paths_; }
  /// Set when build_family discarded at least one empty group.
  bool dropped_empty_groups() const { return dropped_empty_; }
  /// Distinct inner nodes appearing on any path.
  std::size_t inner_node_count() const;
  /// The group with the given origin, or nullptr.
  const PathGroup* find_group(std::size_t origin) const;

 private:
  friend PathGroupFamily build_family(std::vector<std::vector<NetPath>> groups);
  std::vector<PathGroup> groups_;
  std::size_t total_paths_ = 0;
  bool dropped_empty_ = false;
};

/// Validates every path and the inner disjointness inside each group. Empty
/// groups are dropped; the others keep their input position as origin.
PathGroupFamily build_family(std::vector<std::vector<NetPath>> groups);

/// A path from Source whose k-th edge lies on a path of group colors[k]; the
/// colors are pairwise distinct. The witness for Source itself is {[s], []}.
struct ColoredPath {
  std::vector<NetNode> nodes;
  std::vector<std::size_t> colors;

  friend bool operator==(const ColoredPath&, const ColoredPath&) = default;
};

/// Checks a witness against the family: simple, starts at Source, distinct
/// colors that exist in the family, and each edge present in its group.
bool is_valid_witness(const PathGroupFamily& family, const ColoredPath& path);

/// Nodes reached by repeatedly contracting the source with the successors
/// along the first non-empty group, each with a multicolored witness.
/// Whenever the sink is not reached the set is larger than total_paths().
std::map<NetNode, ColoredPath> reachable_witness_set(
    const PathGroupFamily& family);

/// A multicolored s-t path. Above the threshold total_paths > inner_count the
/// contraction always produces one (GuaranteeViolation otherwise); at or
/// below it an exact search over (node, used colors) decides.
std::optional<ColoredPath> find_multicolored_st_path(
    const PathGroupFamily& family, std::size_t inner_count);

/// Exact search only. Uses at most 64 groups.
std::optional<ColoredPath> search_multicolored_path(
    const PathGroupFamily& family, NetNode target);

struct RegimentClass {
  NetPath representative;
  std::size_t count = 0;

  friend bool operator==(const RegimentClass&, const RegimentClass&) = default;
};

struct Regimentation {
  std::vector<RegimentClass> classes;  // sorted by representative

  friend bool operator==(const Regimentation&, const Regimentation&) = default;
};

/// The regimentation of a multiset of s-t paths if one exists: classes of
/// identical paths, each of size |E(P)| - 1, with innerly disjoint
/// representatives.
std::optional<Regimentation> is_regimented(std::span<const NetPath> paths);

using Dichotomy = std::variant<Regimentation, ColoredPath>;

/// For |paths| equal to the number of inner nodes they use: either the
/// multiset is regimented or, with each path its own color, a multicolored
/// s-t path exists. Throws PreconditionError if the counts differ and
/// DichotomyViolation if both or neither branch holds.
Dichotomy verify_regimented_dichotomy(std::span<const NetPath> paths);

/// Each path in its own group, in input order.
PathGroupFamily singleton_family(std::span<const NetPath> paths);

}  // namespace rainbowkit
