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

#include "rainbowkit/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <string>

namespace rainbowkit::oracle {

std::uint64_t budget_from_env() {
  if (const char* raw = std::getenv("RAINBOWKIT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

void StepBudget::charge(std::uint64_t steps) {
  used_ += steps;
  if (used_ > limit_) {
    throw BudgetExceeded("oracle budget of " + std::to_string(limit_) +
                         " steps exceeded");
  }
}

// ---------------------------------------------------------------------------
// Exhaustive references

namespace {

struct RainbowEnumeration {
  const MatchingFamily& family;
  std::size_t target;
  StepBudget budget;
  std::vector<ColoredEdge> chosen;

  bool disjoint_from_chosen(const Edge& e) const {
    return std::none_of(chosen.begin(), chosen.end(), [&](const auto& ce) {
      return ce.edge.left == e.left || ce.edge.right == e.right;
    });
  }

  bool extend(std::size_t first_color) {
    budget.charge();
    if (chosen.size() == target) return true;
    for (std::size_t c = first_color; c < family.size(); ++c) {
      for (const Edge& e : family[c].edges()) {
        budget.charge();
        if (!disjoint_from_chosen(e)) continue;
        chosen.push_back({c, e});
        if (extend(c + 1)) return true;
        chosen.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

std::optional<RainbowMatching> brute_rainbow(const MatchingFamily& family,
                                             std::size_t target,
                                             std::uint64_t budget) {
  RainbowEnumeration search{family, target, StepBudget(budget), {}};
  if (!search.extend(0)) return std::nullopt;
  return RainbowMatching{search.chosen};
}

namespace {

struct PathEnumeration {
  const PathGroupFamily& family;
  StepBudget budget;
  std::vector<bool> used;
  ColoredPath current;
  std::map<NetNode, ColoredPath> found;

  bool on_current(const NetNode& v) const {
    return std::find(current.nodes.begin(), current.nodes.end(), v) !=
           current.nodes.end();
  }

  void explore() {
    budget.charge();
    found.emplace(current.nodes.back(), current);
    const NetNode at = current.nodes.back();
    auto groups = family.groups();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (used[g]) continue;
      for (const NetPath& p : groups[g].paths) {
        for (std::size_t k = 0; k + 1 < p.size(); ++k) {
          budget.charge();
          if (p[k] != at || on_current(p[k + 1])) continue;
          used[g] = true;
          current.nodes.push_back(p[k + 1]);
          current.colors.push_back(groups[g].origin);
          explore();
          current.nodes.pop_back();
          current.colors.pop_back();
          used[g] = false;
        }
      }
    }
  }
};

}  // namespace

std::map<NetNode, ColoredPath> brute_mc_path(const PathGroupFamily& family,
                                             std::uint64_t budget) {
  PathEnumeration search{family,
                         StepBudget(budget),
                         std::vector<bool>(family.groups().size(), false),
                         ColoredPath{{NetNode::source()}, {}},
                         {}};
  search.explore();
  return std::move(search.found);
}

std::optional<std::vector<int>> brute_zero_sum(const ResidueMultiset& a,
                                               std::uint64_t budget) {
  const int n = a.modulus;
  std::map<int, int> available;
  for (int x : a.elements) ++available[x];
  StepBudget steps(budget);
  std::vector<int> chosen;

  // Nondecreasing choices visit sub-multisets in lexicographic order.
  auto dfs = [&](auto&& self, int min_value, long long sum) -> bool {
    steps.charge();
    if (chosen.size() == static_cast<std::size_t>(n)) return sum % n == 0;
    for (auto it = available.lower_bound(min_value); it != available.end();
         ++it) {
      if (it->second == 0) continue;
      --it->second;
      chosen.push_back(it->first);
      if (self(self, it->first, sum + it->first)) return true;
      chosen.pop_back();
      ++it->second;
    }
    return false;
  };
  if (!dfs(dfs, 0, 0)) return std::nullopt;
  return chosen;
}

// ---------------------------------------------------------------------------
// Generators

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t range = span + 1;
  // Largest multiple of range representable; reject draws above it.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + draw % range;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

Matching random_matching(Rng& rng, std::size_t size, std::size_t side) {
  std::vector<int> lefts(side);
  std::vector<int> rights(side);
  std::iota(lefts.begin(), lefts.end(), 0);
  std::iota(rights.begin(), rights.end(), 0);
  rng.shuffle(lefts);
  rng.shuffle(rights);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < size; ++i) edges.push_back({lefts[i], rights[i]});
  return validate_matching(edges);
}

void require(bool ok, const char* what) {
  if (!ok) throw InfeasibleSpec(what);
}

}  // namespace

MatchingFamily generate_family(const FamilyUniform& spec, std::uint64_t seed) {
  require(spec.n > 0 && spec.m > 0 && spec.side > 0, "counts must be positive");
  require(spec.n <= spec.side, "matching size exceeds side size");
  Rng rng(seed);
  MatchingFamily family;
  for (std::size_t i = 0; i < spec.m; ++i) {
    family.push_back(random_matching(rng, spec.n, spec.side));
  }
  return family;
}

MatchingFamily generate_family(const FamilyMixed& spec, std::uint64_t seed) {
  require(!spec.sizes.empty() && spec.side > 0, "counts must be positive");
  Rng rng(seed);
  MatchingFamily family;
  for (std::size_t size : spec.sizes) {
    require(size > 0, "counts must be positive");
    require(size <= spec.side, "matching size exceeds side size");
    family.push_back(random_matching(rng, size, spec.side));
  }
  return family;
}

NetworkGroups generate_network(const NetworkSpec& spec, std::uint64_t seed) {
  require(spec.inner_nodes > 0 && spec.groups > 0 && spec.paths_per_group > 0,
          "counts must be positive");
  Rng rng(seed);
  NetworkGroups groups;
  for (std::size_t g = 0; g < spec.groups; ++g) {
    std::vector<int> free(spec.inner_nodes);
    std::iota(free.begin(), free.end(), 0);
    rng.shuffle(free);
    bool direct_used = false;
    std::vector<NetPath> paths;
    for (std::size_t p = 0; p < spec.paths_per_group; ++p) {
      std::size_t length = std::min<std::size_t>(
          free.size(), rng.uniform(0, spec.inner_nodes));
      if (length == 0 && direct_used) {
        if (free.empty()) break;  // a group is a set: one s->t at most
        length = 1;
      }
      direct_used = direct_used || length == 0;
      NetPath path{NetNode::source()};
      for (std::size_t i = 0; i < length; ++i) {
        path.push_back(NetNode::inner(free.back()));
        free.pop_back();
      }
      path.push_back(NetNode::sink());
      paths.push_back(std::move(path));
    }
    groups.push_back(std::move(paths));
  }
  return groups;
}

ResidueMultiset generate_multiset(const MultisetSpec& spec,
                                  std::uint64_t seed) {
  require(spec.n > 0 && spec.size > 0, "counts must be positive");
  Rng rng(seed);
  std::vector<int> elements;
  for (std::size_t i = 0; i < spec.size; ++i) {
    elements.push_back(static_cast<int>(rng.uniform(0, spec.n - 1)));
  }
  return make_multiset(static_cast<int>(spec.n), std::move(elements));
}

SymbolMatrix generate_matrix(const MatrixSpec& spec, std::uint64_t seed) {
  require(spec.m > 0 && spec.n > 0 && spec.symbol_count > 0,
          "counts must be positive");
  require(spec.n <= spec.symbol_count, "rows need n distinct symbols");
  Rng rng(seed);
  SymbolMatrix a{spec.m, spec.n, {}};
  for (std::size_t i = 0; i < spec.m; ++i) {
    std::vector<Symbol> symbols(spec.symbol_count);
    std::iota(symbols.begin(), symbols.end(), Symbol{0});
    rng.shuffle(symbols);
    symbols.resize(spec.n);
    a.cells.push_back(std::move(symbols));
  }
  return a;
}

Instance generate(const GenSpec& spec) {
  return std::visit(
      [&](const auto& kind) -> Instance {
        using Kind = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<Kind, FamilyUniform> ||
                      std::is_same_v<Kind, FamilyMixed>) {
          return generate_family(kind, spec.seed);
        } else if constexpr (std::is_same_v<Kind, NetworkSpec>) {
          return generate_network(kind, spec.seed);
        } else if constexpr (std::is_same_v<Kind, MultisetSpec>) {
          return generate_multiset(kind, spec.seed);
        } else {
          return generate_matrix(kind, spec.seed);
        }
      },
      spec.kind);
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t multichoose(std::uint64_t n, std::uint64_t k) {
  if (n == 0) return k == 0 ? 1 : 0;
  // C(n + k - 1, k) built up as a running product of exact binomials.
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - 1 + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * factor / i;
  }
  return result;
}

MultichooseEnumerator::MultichooseEnumerator(std::size_t n, std::size_t k)
    : n_(n), current_(k, 0), done_(n == 0 && k > 0) {}

const std::vector<std::size_t>* MultichooseEnumerator::next() {
  if (done_) return nullptr;
  if (!started_) {
    started_ = true;
    return &current_;
  }
  // Bump the rightmost position that can grow and flatten the tail.
  std::size_t i = current_.size();
  while (i > 0 && current_[i - 1] + 1 == n_) --i;
  if (i == 0) {
    done_ = true;
    return nullptr;
  }
  const std::size_t value = current_[i - 1] + 1;
  std::fill(current_.begin() + static_cast<long>(i) - 1, current_.end(), value);
  return &current_;
}

MultisetEnumerator::MultisetEnumerator(int n, std::size_t size,
                                       std::uint64_t budget)
    : n_(n),
      count_(multichoose(static_cast<std::uint64_t>(n), size)),
      inner_(static_cast<std::size_t>(n), size) {
  if (n < 1) throw PreconditionError("modulus must be at least 1");
  if (count_ > budget) {
    throw BudgetExceeded(std::to_string(count_) + " multisets exceed budget " +
                         std::to_string(budget));
  }
}

std::optional<ResidueMultiset> MultisetEnumerator::next() {
  const std::vector<std::size_t>* indices = inner_.next();
  if (indices == nullptr) return std::nullopt;
  return ResidueMultiset{n_, std::vector<int>(indices->begin(), indices->end())};
}

std::vector<ResidueMultiset> enumerate_multisets(int n, std::size_t size,
                                                 std::uint64_t budget) {
  MultisetEnumerator it(n, size, budget);
  std::vector<ResidueMultiset> out;
  while (auto next = it.next()) out.push_back(std::move(*next));
  return out;
}

std::vector<Matching> all_matchings(std::size_t n, std::size_t side) {
  std::vector<Matching> out;
  std::vector<Edge> edges;
  std::vector<bool> right_used(side, false);
  // Left ends increase along the edge list, so each matching appears once.
  auto dfs = [&](auto&& self, std::size_t next_left) -> void {
    if (edges.size() == n) {
      out.push_back(validate_matching(edges));
      return;
    }
    for (std::size_t a = next_left; a < side; ++a) {
      for (std::size_t b = 0; b < side; ++b) {
        if (right_used[b]) continue;
        right_used[b] = true;
        edges.push_back({static_cast<int>(a), static_cast<int>(b)});
        self(self, a + 1);
        edges.pop_back();
        right_used[b] = false;
      }
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NetPath> all_st_paths(std::size_t k) {
  std::vector<NetPath> out;
  NetPath path{NetNode::source()};
  std::vector<bool> used(k, false);
  auto dfs = [&](auto&& self) -> void {
    NetPath done = path;
    done.push_back(NetNode::sink());
    out.push_back(std::move(done));
    for (std::size_t v = 0; v < k; ++v) {
      if (used[v]) continue;
      used[v] = true;
      path.push_back(NetNode::inner(static_cast<int>(v)));
      self(self);
      path.pop_back();
      used[v] = false;
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end());
  return out;
}

Matching cycle_even_matching(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<int>(i), static_cast<int>(i)});
  }
  return validate_matching(edges);
}

Matching cycle_odd_matching(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<int>((i + 1) % n), static_cast<int>(i)});
  }
  return validate_matching(edges);
}

MatchingFamily canonical_c2n(std::size_t n) {
  if (n < 2) throw PreconditionError("the 2n-cycle family needs n >= 2");
  MatchingFamily family(n - 1, cycle_even_matching(n));
  family.insert(family.end(), n - 1, cycle_odd_matching(n));
  return family;
}

}  // namespace rainbowkit::oracle
