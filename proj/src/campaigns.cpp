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

#include "rainbowkit/campaigns.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <set>

namespace rainbowkit::campaigns {

using nlohmann::json;
using Problem = std::optional<std::string>;

void CampaignReport::record_violation(std::uint64_t instance,
                                      const std::string& what) {
  ++violations;
  if (examples.size() < 5) {
    examples.push_back("instance " + std::to_string(instance) + ": " + what);
  }
}

json CampaignReport::to_json() const {
  return {{"theorem", theorem},
          {"instances_checked", instances_checked},
          {"violations", violations},
          {"elapsed", elapsed},
          {"seed", seed},
          {"parameters", parameters},
          {"counters", counters},
          {"violation_examples", examples}};
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CampaignReport start_report(const std::string& theorem,
                            const CampaignOptions& options) {
  CampaignReport report;
  report.theorem = theorem;
  report.seed = options.seed;
  return report;
}

void bump(CampaignReport& report, const std::string& counter,
          std::uint64_t by = 1) {
  auto& slot = report.counters[counter];
  slot = (slot.is_null() ? 0 : slot.get<std::uint64_t>()) + by;
}

// Runs one instance. A returned problem or any library error other than an
// exhausted budget counts as a violation.
template <typename Body>
void check_instance(CampaignReport& report, std::uint64_t index, Body&& body) {
  ++report.instances_checked;
  try {
    if (Problem problem = body()) report.record_violation(index, *problem);
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const Error& e) {
    report.record_violation(index, e.what());
  }
}

void require_budget(std::uint64_t count, std::uint64_t budget,
                    const std::string& what) {
  if (count > budget) {
    throw BudgetExceeded(what + ": " + std::to_string(count) +
                         " instances exceed budget " + std::to_string(budget));
  }
}

std::uint64_t saturating_power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

// Size-`target` rainbow matching found by augmentation alone.
Problem constructive_rainbow(const MatchingFamily& family, std::size_t target) {
  RainbowSearch search = solve_rainbow(family, target);
  if (!search.witness) return "no rainbow matching of size " +
                              std::to_string(target);
  if (search.exhaustive_fallback) return "augmentation stalled";
  if (search.witness->size() != target ||
      !is_valid_rainbow(family, *search.witness)) {
    return "witness fails validation";
  }
  return std::nullopt;
}

}  // namespace

CampaignReport verify_drisko(const CampaignOptions& options) {
  Stopwatch clock;
  CampaignReport report = start_report("drisko", options);
  const std::size_t n = options.n;
  if (n < 1) throw PreconditionError("drisko needs n >= 1");
  const std::size_t side = options.side ? options.side : n + 1;
  const std::size_t members = 2 * n - 1;
  report.parameters = {{"n", n}, {"side", side}, {"members", members},
                       {"exhaustive", options.exhaustive}};

  auto check = [&](std::uint64_t index, const MatchingFamily& family) {
    check_instance(report, index, [&] { return constructive_rainbow(family, n); });
  };

  if (options.exhaustive) {
    const std::vector<Matching> pool = oracle::all_matchings(n, side);
    require_budget(oracle::multichoose(pool.size(), members), options.budget,
                   "drisko");
    oracle::MultichooseEnumerator pick(pool.size(), members);
    std::uint64_t index = 0;
    while (const auto* chosen = pick.next()) {
      MatchingFamily family;
      for (std::size_t i : *chosen) family.push_back(pool[i]);
      check(index++, family);
    }
  } else {
    report.parameters["samples"] = options.samples;
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      check(i, oracle::generate_family(oracle::FamilyUniform{n, members, side},
                                       oracle::derive_seed(options.seed, i)));
    }
  }
  report.elapsed = clock.seconds();
  return report;
}

CampaignReport verify_general(const CampaignOptions& options) {
  Stopwatch clock;
  CampaignReport report = start_report("general", options);
  const std::size_t side = options.side ? options.side : options.max_size;
  if (options.max_m < 1 || options.max_size < 1 || side < options.max_size) {
    throw PreconditionError("general needs max_m, max_size >= 1 and "
                            "side >= max_size");
  }
  report.parameters = {{"samples", options.samples},
                       {"max_m", options.max_m},
                       {"max_size", options.max_size},
                       {"side", side}};
  // Families failing the condition are interleaved with the holding ones;
  // stop once enough holding families have been seen.
  const std::uint64_t cap = 100 * std::max<std::uint64_t>(options.samples, 1);
  std::uint64_t holding = 0;
  for (std::uint64_t i = 0; holding < options.samples && i < cap; ++i) {
    const std::uint64_t seed = oracle::derive_seed(options.seed, i);
    oracle::Rng rng(seed);
    const std::size_t m = rng.uniform(1, options.max_m);
    std::vector<std::size_t> sizes(m);
    for (auto& s : sizes) s = rng.uniform(1, options.max_size);
    const std::size_t target = rng.uniform(1, std::min(m, side));
    const MatchingFamily family = oracle::generate_family(
        oracle::FamilyMixed{sizes, side}, oracle::derive_seed(seed, 0));
    const bool condition = drisko_condition(sizes, target);
    holding += condition ? 1 : 0;
    bump(report, condition ? "condition_holds" : "condition_fails");

    check_instance(report, i, [&]() -> Problem {
      RainbowSearch search = solve_rainbow(family, target);
      std::optional<RainbowMatching> brute =
          oracle::brute_rainbow(family, target, options.budget);
      bump(report, brute ? "feasible" : "infeasible");
      if (search.exhaustive_fallback) bump(report, "exhaustive_fallback");
      if (condition && (!search.witness || search.exhaustive_fallback)) {
        return "size condition holds but augmentation did not reach the target";
      }
      if (search.witness.has_value() != brute.has_value()) {
        return std::string("solver says ") +
               (search.witness ? "feasible" : "infeasible") +
               ", brute force disagrees";
      }
      if (search.witness && (search.witness->size() != target ||
                             !is_valid_rainbow(family, *search.witness))) {
        return "witness fails validation";
      }
      return std::nullopt;
    });
  }
  if (holding < options.samples) {
    report.record_violation(report.instances_checked,
                            "sampling cap reached before enough families "
                            "satisfied the size condition");
  }
  report.elapsed = clock.seconds();
  return report;
}

CampaignReport verify_bgs(const CampaignOptions& options) {
  Stopwatch clock;
  CampaignReport report = start_report("bgs", options);
  report.parameters = {{"samples_per_case", options.samples},
                       {"max_n", options.max_n}};
  std::uint64_t index = 0;
  for (std::size_t k = 1; k <= 2; ++k) {
    for (std::size_t n = 1; n <= options.max_n; ++n) {
      const auto members = static_cast<long long>((k + 2) * n / (k + 1)) -
                           static_cast<long long>(k + 1);
      if (members < 1 || n <= k) continue;
      const auto m = static_cast<std::size_t>(members);
      const std::size_t target = n - k;
      const std::size_t side = options.side ? options.side : n + 1;
      bump(report, "cases");
      for (std::uint64_t i = 0; i < options.samples; ++i, ++index) {
        const MatchingFamily family = oracle::generate_family(
            oracle::FamilyUniform{n, m, side},
            oracle::derive_seed(options.seed, index));
        check_instance(report, index, [&]() -> Problem {
          if (!drisko_condition(member_sizes(family), target)) {
            return "size condition fails for k=" + std::to_string(k) +
                   ", n=" + std::to_string(n);
          }
          return constructive_rainbow(family, target);
        });
      }
    }
  }
  report.elapsed = clock.seconds();
  return report;
}

namespace {

// All unordered pairs of size-n matchings whose union is one 2n-cycle.
std::vector<std::pair<Matching, Matching>> cycle_splits(
    const std::vector<Matching>& pool, std::size_t n) {
  std::vector<std::pair<Matching, Matching>> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      auto comps = symmetric_difference_components(pool[i], pool[j]);
      if (comps.size() == 1 && comps[0].kind == ComponentKind::Cycle &&
          comps[0].edges.size() == 2 * n) {
        out.emplace_back(pool[i], pool[j]);
      }
    }
  }
  return out;
}

}  // namespace

CampaignReport verify_extremal(const CampaignOptions& options) {
  Stopwatch clock;
  CampaignReport report = start_report("extremal", options);
  const std::size_t n = options.n;
  if (n < 2) throw PreconditionError("extremal needs n >= 2");
  const std::size_t side = options.side ? options.side : n + 1;
  const std::size_t members = 2 * n - 2;
  report.parameters = {{"n", n}, {"side", side}, {"members", members},
                       {"exhaustive", options.exhaustive}};

  auto check = [&](std::uint64_t index, const MatchingFamily& family) {
    check_instance(report, index, [&]() -> Problem {
      const FamilyClassification verdict = classify_family(family);
      const bool brute_feasible =
          oracle::brute_rainbow(family, n, options.budget).has_value();
      if (const auto* r = std::get_if<RainbowMatching>(&verdict)) {
        bump(report, "has_rainbow");
        if (!brute_feasible) return "rainbow reported, brute force finds none";
        if (r->size() != n || !is_valid_rainbow(family, *r)) {
          return "witness fails validation";
        }
        return std::nullopt;
      }
      bump(report, "extremal_cycle");
      if (brute_feasible) return "classified extremal, but a rainbow exists";
      const auto& cycle = std::get<ExtremalCycle>(verdict);
      if (cycle.cycle.size() != 2 * n || cycle.even_colors.size() != n - 1 ||
          cycle.odd_colors.size() != n - 1) {
        return "malformed extremal cycle";
      }
      return std::nullopt;
    });
  };

  const std::vector<Matching> pool = oracle::all_matchings(n, side);
  std::uint64_t index = 0;
  if (options.exhaustive) {
    const std::uint64_t count = saturating_power(pool.size(), members);
    require_budget(count, options.budget, "extremal");
    std::vector<std::size_t> digits(members, 0);
    for (std::uint64_t k = 0; k < count; ++k) {
      MatchingFamily family;
      for (std::size_t d : digits) family.push_back(pool[d]);
      check(index++, family);
      for (std::size_t pos = members; pos-- > 0;) {
        if (++digits[pos] < pool.size()) break;
        digits[pos] = 0;
      }
    }
  } else {
    report.parameters["samples"] = options.samples;
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      check(index++, oracle::generate_family(
                         oracle::FamilyUniform{n, members, side},
                         oracle::derive_seed(options.seed, i)));
    }
  }

  const auto splits = cycle_splits(pool, n);
  const std::uint64_t patterns = saturating_power(2, members);
  require_budget(splits.size() * patterns, options.budget, "extremal cycles");
  report.parameters["cycle_families"] = splits.size() * patterns;
  for (const auto& [even, odd] : splits) {
    for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
      MatchingFamily family;
      for (std::size_t bit = 0; bit < members; ++bit) {
        family.push_back((pattern >> bit) & 1 ? odd : even);
      }
      check(index++, family);
    }
  }
  report.elapsed = clock.seconds();
  return report;
}

CampaignReport verify_counting(const CampaignOptions& options) {
  Stopwatch clock;
  CampaignReport report = start_report("counting", options);
  if (options.max_inner < 1 || options.max_paths < 1) {
    throw PreconditionError("counting needs max_inner, max_paths >= 1");
  }
  report.parameters = {{"samples", options.samples},
                       {"max_inner", options.max_inner},
                       {"max_paths", options.max_paths}};
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const std::uint64_t seed = oracle::derive_seed(options.seed, i);
    oracle::Rng rng(seed);
    const oracle::NetworkSpec spec{rng.uniform(1, options.max_inner),
                                   rng.uniform(1, options.max_paths),
                                   rng.uniform(1, options.max_paths)};
    oracle::NetworkGroups groups =
        oracle::generate_network(spec, oracle::derive_seed(seed, 0));
    std::size_t kept = 0;
    for (auto& g : groups) {
      const std::size_t room = options.max_paths - kept;
      if (g.size() > room) g.resize(room);
      kept += g.size();
    }

    check_instance(report, i, [&]() -> Problem {
      const PathGroupFamily family = build_family(groups);
      const std::size_t paths = family.total_paths();
      const auto witnesses = reachable_witness_set(family);
      const auto exact = oracle::brute_mc_path(family, options.budget);
      const bool sink_reached = witnesses.contains(NetNode::sink());
      bump(report, sink_reached ? "sink_reached" : "sink_not_reached");

      for (const auto& [node, witness] : witnesses) {
        if (witness.nodes.back() != node || !is_valid_witness(family, witness)) {
          return "invalid witness for " + to_string(node);
        }
        if (!exact.contains(node)) {
          return to_string(node) + " is not reachable per brute force";
        }
      }

      const std::size_t inner = family.inner_node_count();
      std::optional<ColoredPath> st = find_multicolored_st_path(family, inner);
      if (paths > inner) bump(report, "above_threshold");
      if (st.has_value() != exact.contains(NetNode::sink())) {
        return "s-t search disagrees with brute force";
      }
      if (st && (st->nodes.back() != NetNode::sink() ||
                 !is_valid_witness(family, *st))) {
        return "invalid s-t witness";
      }

      if (exact.size() <= paths) bump(report, "exact_reachable_not_above_paths");
      if (!sink_reached && witnesses.size() <= paths) {
        return "sink unreached and only " + std::to_string(witnesses.size()) +
               " witnesses for " + std::to_string(paths) + " paths";
      }
      if (witnesses.size() <= paths) {
        bump(report, "bound_fails_with_sink_reached");
        return "|W| = " + std::to_string(witnesses.size()) + " not above " +
               std::to_string(paths) + " paths (exact |R| = " +
               std::to_string(exact.size()) + ", sink reached)";
      }
      return std::nullopt;
    });
  }
  report.elapsed = clock.seconds();
  return report;
}

CampaignReport verify_dichotomy(const CampaignOptions& options) {
  Stopwatch clock;
  CampaignReport report = start_report("dichotomy", options);
  report.parameters = {{"max_inner", options.max_inner}, {"exhaustive", true}};
  std::uint64_t index = 0;
  for (std::size_t k = 1; k <= options.max_inner; ++k) {
    const std::vector<NetPath> pool = oracle::all_st_paths(k);
    require_budget(oracle::multichoose(pool.size(), k), options.budget,
                   "dichotomy");
    oracle::MultichooseEnumerator pick(pool.size(), k);
    while (const auto* chosen = pick.next()) {
      std::vector<NetPath> paths;
      std::set<NetNode> inner;
      for (std::size_t i : *chosen) {
        paths.push_back(pool[i]);
        auto in = inner_nodes(pool[i]);
        inner.insert(in.begin(), in.end());
      }
      if (inner.size() != k) continue;  // counted at a smaller k

      check_instance(report, index++, [&]() -> Problem {
        const bool regimented = is_regimented(paths).has_value();
        const PathGroupFamily family = singleton_family(paths);
        const auto exact = oracle::brute_mc_path(family, options.budget);
        const bool colored = exact.contains(NetNode::sink());
        bump(report, regimented ? "regimented" : "multicolored");
        if (regimented == colored) {
          return regimented ? "regimented yet a multicolored s-t path exists"
                            : "neither regimented nor a multicolored s-t path";
        }
        const Dichotomy verdict = verify_regimented_dichotomy(paths);
        if (regimented != std::holds_alternative<Regimentation>(verdict)) {
          return "dichotomy branch disagrees with brute force";
        }
        if (const auto* path = std::get_if<ColoredPath>(&verdict)) {
          if (path->nodes.back() != NetNode::sink() ||
              !is_valid_witness(family, *path)) {
            return "invalid s-t witness";
          }
        }
        return std::nullopt;
      });
    }
  }
  report.elapsed = clock.seconds();
  return report;
}

CampaignReport verify_egz(const CampaignOptions& options) {
  Stopwatch clock;
  CampaignReport report = start_report("egz", options);
  const int n = static_cast<int>(options.n);
  if (n < 1) throw PreconditionError("egz needs n >= 1");
  const std::size_t size = 2 * options.n - 1;
  report.parameters = {{"n", n}, {"size", size}, {"exhaustive", true}};

  oracle::MultisetEnumerator all(n, size, options.budget);
  std::uint64_t index = 0;
  while (std::optional<ResidueMultiset> a = all.next()) {
    check_instance(report, index++, [&]() -> Problem {
      // The rainbow perfect matching itself: right ends i + b(i) cover Z_n.
      std::optional<RainbowMatching> r =
          find_rainbow_matching(egz_family(*a), options.n);
      if (!r) return "no rainbow perfect matching";
      long long left_sum = 0;
      long long right_sum = 0;
      long long shift_sum = 0;
      for (const ColoredEdge& ce : r->assignment) {
        left_sum += ce.edge.left;
        right_sum += ce.edge.right;
        shift_sum += a->elements[ce.color];
      }
      if ((left_sum + shift_sum - right_sum) % n != 0 ||
          (right_sum - left_sum) % n != 0) {
        return "telescoping identity fails";
      }

      std::optional<std::vector<int>> witness = find_zero_sum_subset(*a);
      if (!witness || !is_zero_sum_witness(*a, *witness)) {
        return "missing or invalid zero-sum witness";
      }
      if (!oracle::brute_zero_sum(*a, options.budget)) {
        return "brute force finds no zero-sum subset";
      }
      return std::nullopt;
    });
  }
  report.elapsed = clock.seconds();
  return report;
}

CampaignReport verify_egz_extremal(const CampaignOptions& options) {
  Stopwatch clock;
  CampaignReport report = start_report("egz-extremal", options);
  const int n = static_cast<int>(options.n);
  if (n < 2) throw PreconditionError("egz-extremal needs n >= 2");
  const std::size_t size = 2 * options.n - 2;
  report.parameters = {{"n", n}, {"size", size}, {"exhaustive", true}};

  oracle::MultisetEnumerator all(n, size, options.budget);
  std::uint64_t index = 0;
  while (std::optional<ResidueMultiset> a = all.next()) {
    check_instance(report, index++, [&]() -> Problem {
      const MultisetClassification verdict = classify_multiset(*a);
      const bool brute = oracle::brute_zero_sum(*a, options.budget).has_value();
      if (const auto* w = std::get_if<std::vector<int>>(&verdict)) {
        bump(report, "has_zero_sum");
        if (!brute) return "zero sum reported, brute force finds none";
        if (!is_zero_sum_witness(*a, *w)) return "invalid zero-sum witness";
        return std::nullopt;
      }
      bump(report, "extremal_pair");
      if (brute) return "classified extremal, but a zero-sum subset exists";
      const auto& pair = std::get<ExtremalPair>(verdict);
      std::vector<int> expected(size / 2, pair.a);
      expected.insert(expected.end(), size / 2, pair.b);
      if (pair.a >= pair.b || expected != a->elements ||
          std::gcd(pair.b - pair.a, n) != 1) {
        return "extremal pair has the wrong form";
      }
      return std::nullopt;
    });
  }
  report.elapsed = clock.seconds();
  return report;
}

CampaignReport verify_transversal(const CampaignOptions& options) {
  Stopwatch clock;
  CampaignReport report = start_report("transversal", options);
  if (options.max_n < 1) throw PreconditionError("transversal needs max_n >= 1");
  report.parameters = {{"samples", options.samples}, {"max_n", options.max_n}};
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const std::uint64_t seed = oracle::derive_seed(options.seed, i);
    oracle::Rng rng(seed);
    const std::size_t n = rng.uniform(1, options.max_n);
    const std::size_t symbols = n + rng.uniform(0, n);
    const SymbolMatrix a = oracle::generate_matrix({2 * n - 1, n, symbols},
                                                   oracle::derive_seed(seed, 0));
    check_instance(report, i, [&]() -> Problem {
      std::optional<Transversal> t = find_transversal(a);
      if (!t) return "no transversal";
      if (!is_full_transversal(a, *t)) return "transversal fails validation";
      return std::nullopt;
    });
  }
  report.elapsed = clock.seconds();
  return report;
}

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{
      "drisko",   "general",   "bgs", "extremal",     "counting",
      "dichotomy", "egz",      "egz-extremal", "transversal"};
  return names;
}

CampaignReport run_campaign(const std::string& theorem,
                            const CampaignOptions& options) {
  if (theorem == "drisko") return verify_drisko(options);
  if (theorem == "general") return verify_general(options);
  if (theorem == "bgs") return verify_bgs(options);
  if (theorem == "extremal") return verify_extremal(options);
  if (theorem == "counting") return verify_counting(options);
  if (theorem == "dichotomy") return verify_dichotomy(options);
  if (theorem == "egz") return verify_egz(options);
  if (theorem == "egz-extremal") return verify_egz_extremal(options);
  if (theorem == "transversal") return verify_transversal(options);
  throw PreconditionError("unknown campaign: " + theorem);
}

}  // namespace rainbowkit::campaigns
