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

#include "rainbowkit/rainbow_solver.hpp"

#include <algorithm>

namespace rainbowkit {

Matching RainbowMatching::matching() const {
  std::vector<Edge> edges;
  for (const ColoredEdge& ce : assignment) edges.push_back(ce.edge);
  return validate_matching(edges);
}

bool is_valid_rainbow(const MatchingFamily& family, const RainbowMatching& r) {
  for (std::size_t i = 0; i < r.assignment.size(); ++i) {
    const ColoredEdge& ce = r.assignment[i];
    if (ce.color >= family.size() || !family[ce.color].contains(ce.edge)) {
      return false;
    }
    if (i > 0 && r.assignment[i - 1].color >= ce.color) return false;
  }
  try {
    (void)r.matching();
  } catch (const OverlapError&) {
    return false;
  }
  return true;
}

std::set<std::size_t> RepresentationState::unrepresented() const {
  std::set<std::size_t> out;
  for (std::size_t c = 0; c < family.size(); ++c) out.insert(c);
  for (const ColoredEdge& ce : current.assignment) out.erase(ce.color);
  return out;
}

ContractedNetwork build_contracted_network(const RepresentationState& state) {
  const std::set<std::size_t> unrepresented = state.unrepresented();
  if (unrepresented.empty()) {
    throw NoUnrepresentedColors("every color is already represented");
  }

  ContractedNetwork net;
  net.inner_edges = state.current.assignment;
  net.inner_count = net.inner_edges.size();
  std::map<int, int> inner_of_right;
  for (std::size_t k = 0; k < net.inner_edges.size(); ++k) {
    inner_of_right[net.inner_edges[k].edge.right] = static_cast<int>(k);
  }
  const Matching current = state.current.matching();

  std::vector<std::vector<NetPath>> groups(state.family.size());
  for (std::size_t color : unrepresented) {
    for (const AlternatingPath& t :
         augmenting_paths(current, state.family[color])) {
      // Unmatched edges sit at even positions and run left to right; each
      // lands on v(f) for the current edge f covering its right end, or on t.
      NetPath path{NetNode::source()};
      for (std::size_t i = 0; i < t.edges.size(); i += 2) {
        const Edge& e = t.edges[i];
        auto it = inner_of_right.find(e.right);
        NetNode to = it == inner_of_right.end() ? NetNode::sink()
                                                : NetNode::inner(it->second);
        net.translation.emplace(std::tuple{path.back(), to, color}, e);
        path.push_back(to);
      }
      groups[color].push_back(std::move(path));
    }
  }
  net.family = build_family(std::move(groups));
  return net;
}

std::vector<std::size_t> member_sizes(const MatchingFamily& family) {
  std::vector<std::size_t> sizes;
  for (const Matching& m : family) sizes.push_back(m.size());
  return sizes;
}

bool drisko_condition(std::span<const std::size_t> sizes, std::size_t target) {
  if (target > sizes.size()) {
    throw PreconditionError("target exceeds the number of matchings");
  }
  std::vector<std::size_t> sorted(sizes.begin(), sizes.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t terms = std::min(sorted.size() - target + 1, sorted.size());
  const auto a = static_cast<long long>(target);
  long long sum = 0;
  for (std::size_t i = 0; i < terms; ++i) {
    sum += static_cast<long long>(sorted[i]) - a + 1;
  }
  return sum >= a;
}

namespace {

// Replaces the current edges visited by the network path with the
// translated edges, each colored by the group that colored its network edge.
RainbowMatching augment_along(const ContractedNetwork& net,
                              const RainbowMatching& current,
                              const ColoredPath& path) {
  std::set<std::size_t> dropped;
  for (const NetNode& v : path.nodes) {
    if (v.is_inner()) dropped.insert(static_cast<std::size_t>(v.index));
  }
  RainbowMatching next;
  for (std::size_t k = 0; k < current.assignment.size(); ++k) {
    if (!dropped.contains(k)) next.assignment.push_back(current.assignment[k]);
  }
  for (std::size_t k = 0; k < path.colors.size(); ++k) {
    const std::size_t color = path.colors[k];
    next.assignment.push_back(
        {color, net.translation.at({path.nodes[k], path.nodes[k + 1], color})});
  }
  std::sort(next.assignment.begin(), next.assignment.end());
  return next;
}

// Exhaustive completion. Members that are equal matchings are
// interchangeable: within such a class the used colors form a prefix and
// take edges in increasing order.
class ExhaustiveRainbow {
 public:
  ExhaustiveRainbow(const MatchingFamily& family, std::size_t target)
      : family_(family), target_(target), klass_(family.size()) {
    for (std::size_t c = 0; c < family.size(); ++c) {
      klass_[c] = c;
      for (std::size_t d = 0; d < c; ++d) {
        if (family[d] == family[c]) {
          klass_[c] = klass_[d];
          break;
        }
      }
    }
    closed_.assign(family.size(), false);
    last_edge_.assign(family.size(), -1);
  }

  std::optional<RainbowMatching> run() {
    if (!dfs(0)) return std::nullopt;
    RainbowMatching out;
    out.assignment = chosen_;
    return out;
  }

 private:
  bool dfs(std::size_t color) {
    if (chosen_.size() == target_) return true;
    if (chosen_.size() + (family_.size() - color) < target_) return false;
    const std::size_t k = klass_[color];
    if (!closed_[k]) {
      auto edges = family_[color].edges();
      const int previous = last_edge_[k];
      for (int i = previous + 1; i < static_cast<int>(edges.size()); ++i) {
        const Edge& e = edges[static_cast<std::size_t>(i)];
        if (left_.contains(e.left) || right_.contains(e.right)) continue;
        left_.insert(e.left);
        right_.insert(e.right);
        chosen_.push_back({color, e});
        last_edge_[k] = i;
        if (dfs(color + 1)) return true;
        last_edge_[k] = previous;
        chosen_.pop_back();
        left_.erase(e.left);
        right_.erase(e.right);
      }
    }
    const bool was_closed = closed_[k];
    closed_[k] = true;
    if (dfs(color + 1)) return true;
    closed_[k] = was_closed;
    return false;
  }

  const MatchingFamily& family_;
  std::size_t target_;
  std::vector<std::size_t> klass_;
  std::vector<bool> closed_;
  std::vector<int> last_edge_;
  std::set<int> left_;
  std::set<int> right_;
  std::vector<ColoredEdge> chosen_;
};

}  // namespace

RainbowSearch solve_rainbow(const MatchingFamily& family, std::size_t target) {
  RainbowSearch result;
  if (target > family.size()) return result;
  const bool guaranteed = drisko_condition(member_sizes(family), target);

  RepresentationState state{family, {}};
  while (state.current.size() < target) {
    ContractedNetwork net = build_contracted_network(state);
    std::optional<ColoredPath> path =
        find_multicolored_st_path(net.family, net.inner_count);
    if (!path) break;
    RainbowMatching next = augment_along(net, state.current, *path);
    if (next.size() != state.current.size() + 1 ||
        !is_valid_rainbow(family, next)) {
      throw GuaranteeViolation("augmentation produced an invalid matching");
    }
    state.current = std::move(next);
    ++result.augmentations;
  }
  if (state.current.size() == target) {
    result.witness = std::move(state.current);
    return result;
  }
  if (guaranteed) {
    throw GuaranteeViolation("augmentation stalled at size " +
                             std::to_string(state.current.size()) +
                             " although the size condition holds");
  }
  result.exhaustive_fallback = true;
  result.witness = ExhaustiveRainbow(family, target).run();
  return result;
}

std::optional<RainbowMatching> find_rainbow_matching(
    const MatchingFamily& family, std::size_t target) {
  return solve_rainbow(family, target).witness;
}

std::size_t check_near_extremal_shape(const MatchingFamily& family) {
  if (family.empty() || family.size() % 2 != 0) {
    throw PreconditionError("expected 2n - 2 matchings with n >= 2");
  }
  const std::size_t n = family.size() / 2 + 1;
  for (const Matching& m : family) {
    if (m.size() != n) {
      throw PreconditionError("every member must have size " +
                              std::to_string(n));
    }
  }
  return n;
}

NearRainbow near_rainbow(const MatchingFamily& family) {
  const std::size_t n = check_near_extremal_shape(family);
  MatchingFamily extended = family;
  extended.push_back(family.front());
  const std::size_t duplicate = extended.size() - 1;

  std::optional<RainbowMatching> found = find_rainbow_matching(extended, n);
  if (!found) {
    throw GuaranteeViolation("2n - 1 matchings of size n without a rainbow "
                             "matching of size n");
  }
  NearRainbow out{found->matching(), {}};
  const bool first_used = std::any_of(
      found->assignment.begin(), found->assignment.end(),
      [](const ColoredEdge& ce) { return ce.color == 0; });
  for (const ColoredEdge& ce : found->assignment) {
    if (ce.color != duplicate) {
      out.colors.assignment.push_back(ce);
    } else if (!first_used) {
      out.colors.assignment.push_back({0, ce.edge});
    }
  }
  std::sort(out.colors.assignment.begin(), out.colors.assignment.end());
  return out;
}

std::optional<ExtremalCycle> extremal_cycle_structure(
    const MatchingFamily& family) {
  const std::size_t n = check_near_extremal_shape(family);
  const Matching& first = family.front();
  auto other = std::find_if(family.begin(), family.end(),
                            [&](const Matching& m) { return m != first; });
  if (other == family.end()) return std::nullopt;
  const Matching& second = *other;

  std::vector<std::size_t> first_colors;
  std::vector<std::size_t> second_colors;
  for (std::size_t c = 0; c < family.size(); ++c) {
    if (family[c] == first) {
      first_colors.push_back(c);
    } else if (family[c] == second) {
      second_colors.push_back(c);
    } else {
      return std::nullopt;  // a third distinct member
    }
  }
  if (first_colors.size() != n - 1 || second_colors.size() != n - 1) {
    return std::nullopt;
  }

  auto components = symmetric_difference_components(first, second);
  if (components.size() != 1 ||
      components.front().kind != ComponentKind::Cycle ||
      components.front().vertices.size() != 2 * n) {
    return std::nullopt;
  }
  const Component& cycle = components.front();
  std::vector<Edge> even;
  for (std::size_t i = 0; i < cycle.edges.size(); i += 2) {
    even.push_back(cycle.edges[i]);
  }
  const Matching even_edges = validate_matching(even);

  ExtremalCycle out{cycle.vertices, {}, {}};
  if (even_edges == first) {
    out.even_colors = first_colors;
    out.odd_colors = second_colors;
  } else {
    out.even_colors = second_colors;
    out.odd_colors = first_colors;
  }
  return out;
}

FamilyClassification classify_family(const MatchingFamily& family) {
  const std::size_t n = check_near_extremal_shape(family);
  if (std::optional<RainbowMatching> r = find_rainbow_matching(family, n)) {
    return *std::move(r);
  }
  if (std::optional<ExtremalCycle> cycle = extremal_cycle_structure(family)) {
    return *std::move(cycle);
  }
  throw TheoremViolation(
      "no rainbow matching of size n, yet the family is not the even/odd "
      "split of a 2n-cycle");
}

}  // namespace rainbowkit
