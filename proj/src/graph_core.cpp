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

#include "rainbowkit/graph_core.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rainbowkit {

std::string to_string(const Vertex& v) {
  return (v.side == Side::Left ? "a" : "b") + std::to_string(v.index);
}

Edge edge_between(const Vertex& u, const Vertex& v) {
  if (u.side == v.side) {
    throw PreconditionError("no edge between same-side vertices " +
                            to_string(u) + " and " + to_string(v));
  }
  return u.side == Side::Left ? Edge{u.index, v.index}
                              : Edge{v.index, u.index};
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<Edge> Matching::edge_at(const Vertex& v) const {
  for (const Edge& e : edges_) {
    if (e.touches(v)) return e;
  }
  return std::nullopt;
}

Matching validate_matching(std::span<const Edge> edges) {
  std::set<int> lefts;
  std::set<int> rights;
  for (const Edge& e : edges) {
    if (e.left < 0 || e.right < 0) {
      throw PreconditionError("negative vertex index in edge");
    }
    if (!lefts.insert(e.left).second) {
      throw OverlapError("edges overlap at " + to_string(e.left_vertex()));
    }
    if (!rights.insert(e.right).second) {
      throw OverlapError("edges overlap at " + to_string(e.right_vertex()));
    }
  }
  Matching m;
  m.edges_.assign(edges.begin(), edges.end());
  std::sort(m.edges_.begin(), m.edges_.end());
  return m;
}

namespace {

Vertex other_end(const Edge& e, const Vertex& v) {
  return v == e.left_vertex() ? e.right_vertex() : e.left_vertex();
}

}  // namespace

std::vector<Component> symmetric_difference_components(const Matching& g,
                                                       const Matching& h) {
  std::set<Edge> all(g.edges().begin(), g.edges().end());
  all.insert(h.edges().begin(), h.edges().end());

  // Every vertex has degree at most two in the union.
  std::map<Vertex, std::vector<Edge>> incident;
  for (const Edge& e : all) {
    incident[e.left_vertex()].push_back(e);
    incident[e.right_vertex()].push_back(e);
  }

  std::vector<Component> out;
  std::set<Vertex> seen;
  for (const auto& [start, _] : incident) {
    if (seen.contains(start)) continue;

    // Collect the component to learn whether it has endpoints.
    std::vector<Vertex> stack{start};
    std::set<Vertex> members;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      if (!members.insert(v).second) continue;
      for (const Edge& e : incident[v]) stack.push_back(other_end(e, v));
    }
    seen.insert(members.begin(), members.end());

    Component comp;
    Vertex first = *members.begin();
    comp.kind = ComponentKind::Cycle;
    for (const Vertex& v : members) {
      if (incident[v].size() == 1) {
        comp.kind = ComponentKind::Path;
        first = v;  // members is sorted, so this is the smaller endpoint
        break;
      }
    }

    std::optional<Edge> previous;
    Vertex v = first;
    for (;;) {
      comp.vertices.push_back(v);
      const auto& inc = incident[v];
      std::optional<Edge> next;
      if (!previous) {
        next = inc.front();
        if (comp.kind == ComponentKind::Cycle &&
            other_end(inc.back(), v) < other_end(inc.front(), v)) {
          next = inc.back();
        }
      } else {
        for (const Edge& e : inc) {
          if (e != *previous) next = e;
        }
      }
      if (!next) break;
      Vertex w = other_end(*next, v);
      comp.edges.push_back(*next);
      if (w == first) break;  // closed the cycle
      previous = next;
      v = w;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

AlternatingPath path_through(std::vector<Vertex> vertices) {
  AlternatingPath path;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    path.edges.push_back(edge_between(vertices[i], vertices[i + 1]));
  }
  path.vertices = std::move(vertices);
  return path;
}

bool is_augmenting(const Matching& base, const AlternatingPath& path) {
  if (path.edges.empty() || path.vertices.size() != path.edges.size() + 1) {
    return false;
  }
  std::set<Vertex> distinct(path.vertices.begin(), path.vertices.end());
  if (distinct.size() != path.vertices.size()) return false;
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const Edge& e = path.edges[i];
    if (!e.touches(path.vertices[i]) || !e.touches(path.vertices[i + 1])) {
      return false;
    }
    // Odd positions are matched edges, even positions are not.
    if (base.contains(e) != (i % 2 == 1)) return false;
  }
  return !base.covers(path.vertices.front()) &&
         !base.covers(path.vertices.back());
}

std::vector<AlternatingPath> augmenting_paths(const Matching& base,
                                              const Matching& other) {
  std::vector<AlternatingPath> out;
  for (Component& c : symmetric_difference_components(base, other)) {
    if (c.kind != ComponentKind::Path) continue;
    if (base.covers(c.vertices.front()) || base.covers(c.vertices.back())) {
      continue;
    }
    out.push_back({std::move(c.vertices), std::move(c.edges)});
  }
  return out;
}

Matching apply_augmentation(const Matching& base, const AlternatingPath& path) {
  if (!is_augmenting(base, path)) {
    throw NotAugmentingError("path does not augment the matching");
  }
  std::set<Edge> result(base.edges().begin(), base.edges().end());
  for (const Edge& e : path.edges) {
    if (!result.erase(e)) result.insert(e);
  }
  std::vector<Edge> edges(result.begin(), result.end());
  return validate_matching(edges);
}

}  // namespace rainbowkit
