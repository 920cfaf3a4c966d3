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

#include "rainbowkit/network_paths.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

namespace rainbowkit {

std::string to_string(const NetNode& node) {
  switch (node.kind) {
    case NetNode::Kind::Source:
      return "s";
    case NetNode::Kind::Sink:
      return "t";
    case NetNode::Kind::Inner:
      break;
  }
  return "v" + std::to_string(node.index);
}

void check_st_path(const NetPath& path) {
  if (path.size() < 2) {
    throw MalformedPathError("an s-t path needs at least two nodes");
  }
  if (!path.front().is_source() || !path.back().is_sink()) {
    throw MalformedPathError("path must start at s and end at t");
  }
  std::set<NetNode> seen;
  for (const NetNode& v : inner_nodes(path)) {
    if (!v.is_inner() || v.index < 0) {
      throw MalformedPathError("s or t inside a path, or negative node id");
    }
    if (!seen.insert(v).second) {
      throw MalformedPathError("path revisits " + to_string(v));
    }
  }
}

std::span<const NetNode> inner_nodes(const NetPath& path) {
  if (path.size() < 2) return {};
  return std::span<const NetNode>(path).subspan(1, path.size() - 2);
}

bool innerly_disjoint(const NetPath& p, const NetPath& q) {
  for (const NetNode& v : inner_nodes(p)) {
    auto in_q = inner_nodes(q);
    if (std::find(in_q.begin(), in_q.end(), v) != in_q.end()) return false;
  }
  return true;
}

std::size_t PathGroupFamily::inner_node_count() const {
  std::set<NetNode> inner;
  for (const PathGroup& g : groups_) {
    for (const NetPath& p : g.paths) {
      auto in = inner_nodes(p);
      inner.insert(in.begin(), in.end());
    }
  }
  return inner.size();
}

const PathGroup* PathGroupFamily::find_group(std::size_t origin) const {
  auto it = std::lower_bound(
      groups_.begin(), groups_.end(), origin,
      [](const PathGroup& g, std::size_t o) { return g.origin < o; });
  return it != groups_.end() && it->origin == origin ? &*it : nullptr;
}

PathGroupFamily build_family(std::vector<std::vector<NetPath>> groups) {
  PathGroupFamily family;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].empty()) {
      family.dropped_empty_ = true;
      continue;
    }
    std::set<NetNode> used;
    for (const NetPath& p : groups[i]) {
      check_st_path(p);
      for (const NetNode& v : inner_nodes(p)) {
        if (!used.insert(v).second) {
          throw InnerOverlapError("group " + std::to_string(i) +
                                  " has two paths through " + to_string(v));
        }
      }
    }
    family.total_paths_ += groups[i].size();
    family.groups_.push_back({i, std::move(groups[i])});
  }
  return family;
}

namespace {

bool group_has_edge(const PathGroup& group, const NetNode& from,
                    const NetNode& to) {
  for (const NetPath& p : group.paths) {
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      if (p[k] == from && p[k + 1] == to) return true;
    }
  }
  return false;
}

}  // namespace

bool is_valid_witness(const PathGroupFamily& family, const ColoredPath& path) {
  if (path.nodes.empty() || !path.nodes.front().is_source()) return false;
  if (path.colors.size() + 1 != path.nodes.size()) return false;
  std::set<NetNode> nodes(path.nodes.begin(), path.nodes.end());
  if (nodes.size() != path.nodes.size()) return false;
  std::set<std::size_t> colors(path.colors.begin(), path.colors.end());
  if (colors.size() != path.colors.size()) return false;
  for (std::size_t k = 0; k < path.colors.size(); ++k) {
    const PathGroup* group = family.find_group(path.colors[k]);
    if (group == nullptr ||
        !group_has_edge(*group, path.nodes[k], path.nodes[k + 1])) {
      return false;
    }
  }
  return true;
}

namespace {

// One level of the source contraction. Every path here starts at the
// (possibly contracted) source and carries its original color.
struct WorkGroup {
  std::size_t color = 0;
  std::vector<NetPath> paths;
};

using WitnessMap = std::map<NetNode, ColoredPath>;

WitnessMap contract_source(const std::vector<WorkGroup>& groups,
                           bool stop_at_sink) {
  const NetNode s = NetNode::source();
  WitnessMap reached{{s, ColoredPath{{s}, {}}}};

  auto chosen = std::find_if(groups.begin(), groups.end(), [](const auto& g) {
    return std::any_of(g.paths.begin(), g.paths.end(),
                       [](const NetPath& p) { return p.size() >= 2; });
  });
  if (chosen == groups.end()) return reached;

  // X: successors of s along the chosen group. Each is reached directly.
  const std::size_t color = chosen->color;
  std::set<NetNode> merged;
  for (const NetPath& p : chosen->paths) {
    if (p.size() < 2) continue;
    merged.insert(p[1]);
    reached.emplace(p[1], ColoredPath{{s, p[1]}, {color}});
  }
  if (stop_at_sink && merged.contains(NetNode::sink())) return reached;

  // Contract {s} ∪ X to a fresh source: each remaining path keeps the part
  // after its last node in {s} ∪ X. `anchor` remembers which original node
  // the new first edge leaves from, keyed by (color, first node after it).
  std::vector<WorkGroup> rest;
  std::map<std::pair<std::size_t, NetNode>, NetNode> anchor;
  for (auto g = chosen + 1; g != groups.end(); ++g) {
    WorkGroup next{g->color, {}};
    for (const NetPath& p : g->paths) {
      std::size_t cut = 0;
      for (std::size_t k = 1; k < p.size(); ++k) {
        if (merged.contains(p[k])) cut = k;
      }
      if (cut + 1 >= p.size()) continue;  // collapsed into the source
      NetPath trimmed{s};
      trimmed.insert(trimmed.end(), p.begin() + static_cast<long>(cut) + 1,
                     p.end());
      anchor.emplace(std::pair{g->color, trimmed[1]}, p[cut]);
      next.paths.push_back(std::move(trimmed));
    }
    rest.push_back(std::move(next));
  }

  for (auto& [node, witness] : contract_source(rest, stop_at_sink)) {
    if (node.is_source()) continue;
    const NetNode from = anchor.at({witness.colors.front(), witness.nodes[1]});
    if (from.is_source()) {
      reached.emplace(node, std::move(witness));
      continue;
    }
    ColoredPath full{{s, from}, {color}};
    full.nodes.insert(full.nodes.end(), witness.nodes.begin() + 1,
                      witness.nodes.end());
    full.colors.insert(full.colors.end(), witness.colors.begin(),
                       witness.colors.end());
    reached.emplace(node, std::move(full));
  }
  return reached;
}

std::vector<WorkGroup> work_groups(const PathGroupFamily& family) {
  std::vector<WorkGroup> out;
  for (const PathGroup& g : family.groups()) out.push_back({g.origin, g.paths});
  return out;
}

}  // namespace

std::map<NetNode, ColoredPath> reachable_witness_set(
    const PathGroupFamily& family) {
  return contract_source(work_groups(family), /*stop_at_sink=*/false);
}

namespace {

class ColoredSearch {
 public:
  explicit ColoredSearch(const PathGroupFamily& family) {
    auto groups = family.groups();
    if (groups.size() > 64) {
      throw PreconditionError("exact multicolored search supports 64 groups");
    }
    for (std::size_t i = 0; i < groups.size(); ++i) {
      origin_.push_back(groups[i].origin);
      for (const NetPath& p : groups[i].paths) {
        for (std::size_t k = 0; k + 1 < p.size(); ++k) {
          edges_[p[k]][p[k + 1]] |= std::uint64_t{1} << i;
        }
      }
    }
  }

  std::optional<ColoredPath> run(const NetNode& target) {
    target_ = target;
    walk_ = ColoredPath{{NetNode::source()}, {}};
    if (!dfs(NetNode::source(), 0)) return std::nullopt;
    return erase_loops(walk_);
  }

 private:
  bool dfs(const NetNode& at, std::uint64_t used) {
    if (at == target_) return true;
    if (failed_.contains({at, used})) return false;
    auto out = edges_.find(at);
    if (out != edges_.end()) {
      for (const auto& [to, mask] : out->second) {
        for (std::uint64_t free = mask & ~used; free != 0; free &= free - 1) {
          const int bit = std::countr_zero(free);
          walk_.nodes.push_back(to);
          walk_.colors.push_back(origin_[static_cast<std::size_t>(bit)]);
          if (dfs(to, used | (std::uint64_t{1} << bit))) return true;
          walk_.nodes.pop_back();
          walk_.colors.pop_back();
        }
      }
    }
    failed_.insert({at, used});
    return false;
  }

  // A multicolored walk shortcuts to a multicolored path.
  static ColoredPath erase_loops(const ColoredPath& walk) {
    ColoredPath path{{walk.nodes.front()}, {}};
    for (std::size_t k = 1; k < walk.nodes.size(); ++k) {
      auto seen = std::find(path.nodes.begin(), path.nodes.end(), walk.nodes[k]);
      if (seen != path.nodes.end()) {
        const auto keep = seen - path.nodes.begin();
        path.nodes.resize(static_cast<std::size_t>(keep) + 1);
        path.colors.resize(static_cast<std::size_t>(keep));
        continue;
      }
      path.nodes.push_back(walk.nodes[k]);
      path.colors.push_back(walk.colors[k - 1]);
    }
    return path;
  }

  std::vector<std::size_t> origin_;
  std::map<NetNode, std::map<NetNode, std::uint64_t>> edges_;
  std::set<std::pair<NetNode, std::uint64_t>> failed_;
  NetNode target_;
  ColoredPath walk_;
};

}  // namespace

std::optional<ColoredPath> search_multicolored_path(
    const PathGroupFamily& family, NetNode target) {
  return ColoredSearch(family).run(target);
}

std::optional<ColoredPath> find_multicolored_st_path(
    const PathGroupFamily& family, std::size_t inner_count) {
  WitnessMap reached =
      contract_source(work_groups(family), /*stop_at_sink=*/true);
  if (auto it = reached.find(NetNode::sink()); it != reached.end()) {
    return std::move(it->second);
  }
  if (family.total_paths() > inner_count) {
    throw GuaranteeViolation(
        "source contraction missed the sink although paths outnumber inner "
        "nodes");
  }
  return search_multicolored_path(family, NetNode::sink());
}

std::optional<Regimentation> is_regimented(std::span<const NetPath> paths) {
  std::map<NetPath, std::size_t> classes;
  for (const NetPath& p : paths) {
    check_st_path(p);
    ++classes[p];
  }
  Regimentation out;
  for (const auto& [path, count] : classes) {
    if (count != path.size() - 2) return std::nullopt;
    for (const RegimentClass& other : out.classes) {
      if (!innerly_disjoint(path, other.representative)) return std::nullopt;
    }
    out.classes.push_back({path, count});
  }
  return out;
}

PathGroupFamily singleton_family(std::span<const NetPath> paths) {
  std::vector<std::vector<NetPath>> groups;
  for (const NetPath& p : paths) groups.push_back({p});
  return build_family(std::move(groups));
}

Dichotomy verify_regimented_dichotomy(std::span<const NetPath> paths) {
  std::set<NetNode> inner;
  for (const NetPath& p : paths) {
    check_st_path(p);
    auto in = inner_nodes(p);
    inner.insert(in.begin(), in.end());
  }
  if (paths.size() != inner.size()) {
    throw PreconditionError("need exactly as many paths as inner nodes (" +
                            std::to_string(paths.size()) + " vs " +
                            std::to_string(inner.size()) + ")");
  }
  std::optional<Regimentation> regimented = is_regimented(paths);
  std::optional<ColoredPath> colored =
      find_multicolored_st_path(singleton_family(paths), inner.size());
  if (regimented.has_value() == colored.has_value()) {
    throw DichotomyViolation(regimented ? "regimented family has a "
                                          "multicolored s-t path"
                                        : "neither regimented nor a "
                                          "multicolored s-t path");
  }
  if (regimented) return *std::move(regimented);
  return *std::move(colored);
}

}  // namespace rainbowkit
