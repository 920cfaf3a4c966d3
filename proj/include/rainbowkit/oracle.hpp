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
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "rainbowkit/network_paths.hpp"
#include "rainbowkit/rainbow_solver.hpp"
#include "rainbowkit/reductions.hpp"

// Exhaustive references and instance generators. Nothing here shares code
// paths with the solvers it is used to check.
namespace rainbowkit::oracle {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// kDefaultBudget unless RAINBOWKIT_BUDGET holds a positive integer.
std::uint64_t budget_from_env();

/// Counts elementary steps and throws BudgetExceeded past the limit.
class StepBudget {
 public:
  explicit StepBudget(std::uint64_t limit) : limit_(limit) {}
  void charge(std::uint64_t steps = 1);
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// First rainbow matching of size `target` in the order (c1, e1, c2, e2, ...)
/// with c1 < c2 < ... and edges in sorted order, or nullopt.
std::optional<RainbowMatching> brute_rainbow(
    const MatchingFamily& family, std::size_t target,
    std::uint64_t budget = kDefaultBudget);

/// The exact reachable set R(L), by enumerating every multicolored simple
/// path from the source. One witness per node (the first found).
std::map<NetNode, ColoredPath> brute_mc_path(
    const PathGroupFamily& family, std::uint64_t budget = kDefaultBudget);

/// Lexicographically first size-n sub-multiset summing to 0 mod n.
std::optional<std::vector<int>> brute_zero_sum(
    const ResidueMultiset& a, std::uint64_t budget = kDefaultBudget);

/// Portable generator: std::mt19937_64 (fully specified by the standard)
/// with rejection sampling for bounded draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, i - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Seed of the index-th instance of a campaign (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct FamilyUniform {
  std::size_t n = 0;  // matching size
  std::size_t m = 0;  // members
  std::size_t side = 0;
};
struct FamilyMixed {
  std::vector<std::size_t> sizes;
  std::size_t side = 0;
};
struct NetworkSpec {
  std::size_t inner_nodes = 0;
  std::size_t groups = 0;
  std::size_t paths_per_group = 0;
};
struct MultisetSpec {
  std::size_t n = 0;
  std::size_t size = 0;
};
struct MatrixSpec {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t symbol_count = 0;
};

struct GenSpec {
  std::variant<FamilyUniform, FamilyMixed, NetworkSpec, MultisetSpec,
               MatrixSpec>
      kind;
  std::uint64_t seed = 0;
};

using NetworkGroups = std::vector<std::vector<NetPath>>;
using Instance =
    std::variant<MatchingFamily, NetworkGroups, ResidueMultiset, SymbolMatrix>;

/// Deterministic in (spec, seed). Throws InfeasibleSpec for impossible or
/// non-positive parameters.
Instance generate(const GenSpec& spec);

MatchingFamily generate_family(const FamilyUniform& spec, std::uint64_t seed);
MatchingFamily generate_family(const FamilyMixed& spec, std::uint64_t seed);
NetworkGroups generate_network(const NetworkSpec& spec, std::uint64_t seed);
ResidueMultiset generate_multiset(const MultisetSpec& spec, std::uint64_t seed);
SymbolMatrix generate_matrix(const MatrixSpec& spec, std::uint64_t seed);

/// C(n + k - 1, k), saturating at UINT64_MAX.
std::uint64_t multichoose(std::uint64_t n, std::uint64_t k);

/// Every size-k multiset of indices in [0, n) as a nondecreasing sequence,
/// in lexicographic order.
class MultichooseEnumerator {
 public:
  MultichooseEnumerator(std::size_t n, std::size_t k);
  /// The next sequence, or nullptr when exhausted.
  const std::vector<std::size_t>* next();

 private:
  std::size_t n_;
  std::vector<std::size_t> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Every multiset of the given size over Z_n exactly once, lexicographically.
/// Throws BudgetExceeded if there are more than `budget` of them.
class MultisetEnumerator {
 public:
  MultisetEnumerator(int n, std::size_t size,
                     std::uint64_t budget = kDefaultBudget);
  std::optional<ResidueMultiset> next();
  std::uint64_t count() const { return count_; }

 private:
  int n_;
  std::uint64_t count_;
  MultichooseEnumerator inner_;
};

std::vector<ResidueMultiset> enumerate_multisets(
    int n, std::size_t size, std::uint64_t budget = kDefaultBudget);

/// All matchings of size n in K_{side,side}, sorted.
std::vector<Matching> all_matchings(std::size_t n, std::size_t side);

/// All simple s-t paths through the complete digraph on inner nodes
/// 0..k-1, including s->t.
std::vector<NetPath> all_st_paths(std::size_t k);

/// The even and odd edge matchings of the 2n-cycle a0 b0 a1 b1 ... and the
/// family of n - 1 copies of each (even first).
Matching cycle_even_matching(std::size_t n);
Matching cycle_odd_matching(std::size_t n);
MatchingFamily canonical_c2n(std::size_t n);

}  // namespace rainbowkit::oracle
