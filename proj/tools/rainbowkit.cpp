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

// rainbowkit: solve, classify, verify and generate rainbow-matching instances.
//
// Exit codes: 0 success, 1 infeasible instance or campaign violations,
// 2 bad input, 3 oracle budget exceeded, 4 a proven guarantee failed.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rainbowkit/campaigns.hpp"
#include "rainbowkit/json_io.hpp"
#include "rainbowkit/oracle.hpp"

namespace {

using namespace rainbowkit;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;
constexpr int kGuarantee = 4;

struct InputError : Error {
  using Error::Error;
};

std::vector<long long> parse_list(const std::string& text,
                                  const std::string& flag) {
  std::vector<long long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(flag + ": \"" + item + "\" is not an integer");
    }
  }
  return out;
}

std::vector<std::size_t> parse_counts(const std::string& text,
                                      const std::string& flag,
                                      std::size_t expected) {
  std::vector<std::size_t> out;
  for (long long v : parse_list(text, flag)) {
    if (v < 0) throw InputError(flag + ": counts must be non-negative");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (expected != 0 && out.size() != expected) {
    throw InputError(flag + ": expected " + std::to_string(expected) +
                     " comma-separated values");
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

int infeasible() {
  std::cout << "infeasible\n";
  return kInfeasible;
}

struct SolveArgs {
  std::string input;
  std::optional<std::size_t> target;
  std::optional<std::size_t> inner_count;
  std::optional<int> n;
  std::string elements;
};

ResidueMultiset multiset_from(const SolveArgs& args) {
  if (!args.input.empty()) {
    return json_io::parse_multiset(json_io::read_file(args.input));
  }
  if (!args.n) throw InputError("give --input or --n with --elements");
  std::vector<int> values;
  for (long long v : parse_list(args.elements, "--elements")) {
    if (v < 0 || v >= *args.n) {
      throw InputError("--elements: " + std::to_string(v) + " outside [0, " +
                       std::to_string(*args.n) + ")");
    }
    values.push_back(static_cast<int>(v));
  }
  return make_multiset(*args.n, std::move(values));
}

void require_input(const SolveArgs& args) {
  if (args.input.empty()) throw InputError("--input is required");
}

int solve_rainbow_cmd(const SolveArgs& args) {
  require_input(args);
  const json doc = json_io::read_file(args.input);
  // Either a bare family or {"family": [...], "target": a}.
  const json& family_json = doc.is_object() && doc.contains("family")
                                ? doc.at("family")
                                : doc;
  const MatchingFamily family = json_io::parse_family(family_json);
  std::optional<std::size_t> target = args.target;
  if (!target && doc.is_object() && doc.contains("target") &&
      doc.at("target").is_number_unsigned()) {
    target = doc.at("target").get<std::size_t>();
  }
  if (!target) throw InputError("--target is required");
  const RainbowSearch search = solve_rainbow(family, *target);
  if (!search.witness) return infeasible();
  emit({{"kind", "rainbow"},
        {"target", *target},
        {"witness", json_io::to_json(*search.witness)},
        {"augmentations", search.augmentations},
        {"exhaustive_fallback", search.exhaustive_fallback}});
  return kOk;
}

int solve_transversal_cmd(const SolveArgs& args) {
  require_input(args);
  const SymbolMatrix a = json_io::parse_matrix(json_io::read_file(args.input));
  check_row_distinct(a);
  const std::optional<Transversal> t = find_transversal(a);
  if (!t) return infeasible();
  emit({{"kind", "transversal"}, {"witness", json_io::to_json(*t)}});
  return kOk;
}

int solve_egz_cmd(const SolveArgs& args) {
  const ResidueMultiset a = multiset_from(args);
  const std::optional<std::vector<int>> w = find_zero_sum_subset(a);
  if (!w) return infeasible();
  emit({{"kind", "egz"}, {"n", a.modulus}, {"witness", *w}});
  return kOk;
}

int solve_mcpath_cmd(const SolveArgs& args) {
  require_input(args);
  const PathGroupFamily family =
      build_family(json_io::parse_network(json_io::read_file(args.input)));
  const std::size_t inner = args.inner_count.value_or(family.inner_node_count());
  const std::optional<ColoredPath> path =
      find_multicolored_st_path(family, inner);
  if (!path) return infeasible();
  emit({{"kind", "mcpath"},
        {"inner_count", inner},
        {"total_paths", family.total_paths()},
        {"witness", json_io::to_json(*path)}});
  return kOk;
}

int classify_family_cmd(const SolveArgs& args) {
  require_input(args);
  const MatchingFamily family =
      json_io::parse_family(json_io::read_file(args.input));
  check_near_extremal_shape(family);
  emit(json_io::to_json(classify_family(family)));
  return kOk;
}

int classify_multiset_cmd(const SolveArgs& args) {
  const ResidueMultiset a = multiset_from(args);
  emit(json_io::to_json(classify_multiset(a)));
  return kOk;
}

struct GenerateArgs {
  std::string family_uniform;
  std::string family_mixed;
  std::size_t side = 0;
  std::string network;
  std::string multiset;
  std::string matrix;
  std::string canonical;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int generate_cmd(const GenerateArgs& args) {
  json doc;
  int chosen = 0;
  if (!args.canonical.empty()) {
    ++chosen;
    if (args.canonical != "c2n") {
      throw InputError("--canonical: only \"c2n\" is known");
    }
    if (args.n < 2) throw InputError("--canonical c2n needs --n >= 2");
    doc = json_io::to_json(oracle::canonical_c2n(args.n));
  }
  if (!args.family_uniform.empty()) {
    ++chosen;
    auto v = parse_counts(args.family_uniform, "--family-uniform", 3);
    doc = json_io::to_json(
        oracle::generate_family(oracle::FamilyUniform{v[0], v[1], v[2]}, args.seed));
  }
  if (!args.family_mixed.empty()) {
    ++chosen;
    auto sizes = parse_counts(args.family_mixed, "--family-mixed", 0);
    std::size_t side = args.side;
    if (side == 0 && !sizes.empty()) {
      side = *std::max_element(sizes.begin(), sizes.end());
    }
    doc = json_io::to_json(
        oracle::generate_family(oracle::FamilyMixed{sizes, side}, args.seed));
  }
  if (!args.network.empty()) {
    ++chosen;
    auto v = parse_counts(args.network, "--network", 3);
    doc = json_io::to_json(
        oracle::generate_network(oracle::NetworkSpec{v[0], v[1], v[2]}, args.seed));
  }
  if (!args.multiset.empty()) {
    ++chosen;
    auto v = parse_counts(args.multiset, "--multiset", 2);
    doc = json_io::to_json(
        oracle::generate_multiset(oracle::MultisetSpec{v[0], v[1]}, args.seed));
  }
  if (!args.matrix.empty()) {
    ++chosen;
    auto v = parse_counts(args.matrix, "--matrix", 3);
    doc = json_io::to_json(
        oracle::generate_matrix(oracle::MatrixSpec{v[0], v[1], v[2]}, args.seed));
  }
  if (chosen != 1) throw InputError("choose exactly one instance kind");

  if (args.out.empty()) {
    emit(doc);
  } else {
    std::ofstream file(args.out);
    if (!file) throw InputError(args.out + ": cannot write");
    file << doc.dump() << '\n';
  }
  return kOk;
}

int verify_cmd(const std::string& theorem, campaigns::CampaignOptions options) {
  const campaigns::CampaignReport report =
      campaigns::run_campaign(theorem, options);
  emit(report.to_json());
  return report.violations == 0 ? kOk : kInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow matchings, transversals and zero-sum subsets"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve one instance");
  solve->require_subcommand(1);
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", solve_args.input, "Instance file (JSON)");
  };
  auto add_multiset = [&](CLI::App* cmd) {
    cmd->add_option("--n", solve_args.n, "Modulus");
    cmd->add_option("--elements", solve_args.elements,
                    "Comma-separated residues");
  };
  auto* solve_rainbow = solve->add_subcommand("rainbow", "Rainbow matching");
  add_input(solve_rainbow);
  solve_rainbow->add_option("--target", solve_args.target, "Target size");
  auto* solve_transversal =
      solve->add_subcommand("transversal", "Full transversal of a matrix");
  add_input(solve_transversal);
  auto* solve_egz = solve->add_subcommand("egz", "Zero-sum subset of size n");
  add_input(solve_egz);
  add_multiset(solve_egz);
  auto* solve_mcpath =
      solve->add_subcommand("mcpath", "Multicolored s-t path in a network");
  add_input(solve_mcpath);
  solve_mcpath->add_option("--inner-count", solve_args.inner_count,
                           "Inner node count (default: nodes on the paths)");

  auto* classify = app.add_subcommand("classify", "Classify an extremal case");
  classify->require_subcommand(1);
  auto* classify_family = classify->add_subcommand(
      "family", "2n - 2 matchings of size n");
  add_input(classify_family);
  auto* classify_multiset =
      classify->add_subcommand("multiset", "2n - 2 residues mod n");
  add_input(classify_multiset);
  add_multiset(classify_multiset);

  std::string theorem;
  campaigns::CampaignOptions options;
  options.budget = oracle::budget_from_env();
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("theorem", theorem, "Campaign name")
      ->required()
      ->check(CLI::IsMember(campaigns::campaign_names()));
  verify->add_option("--n", options.n, "Matching size or modulus");
  verify->add_option("--samples", options.samples, "Random instances");
  verify->add_option("--seed", options.seed, "Campaign seed")
      ->default_val(0);
  verify->add_flag("--exhaustive", options.exhaustive,
                   "Enumerate instead of sampling");
  verify->add_option("--side", options.side, "Side size of K_{side,side}");
  verify->add_option("--max-m", options.max_m, "general: most members");
  verify->add_option("--max-size", options.max_size, "general: largest member");
  verify->add_option("--max-inner", options.max_inner,
                     "counting/dichotomy: most inner nodes");
  verify->add_option("--max-paths", options.max_paths,
                     "counting: most paths");
  verify->add_option("--max-n", options.max_n, "bgs/transversal: largest n");
  verify->add_option("--budget", options.budget,
                     "Oracle step budget (default RAINBOWKIT_BUDGET or 1e7)");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate an instance");
  generate->add_option("--family-uniform", gen.family_uniform, "n,m,side");
  generate->add_option("--family-mixed", gen.family_mixed,
                       "size,size,... (with --side)");
  generate->add_option("--side", gen.side, "Side size for --family-mixed");
  generate->add_option("--network", gen.network,
                       "inner_nodes,groups,paths_per_group");
  generate->add_option("--multiset", gen.multiset, "n,size");
  generate->add_option("--matrix", gen.matrix, "m,n,symbol_count");
  generate->add_option("--canonical", gen.canonical, "c2n");
  generate->add_option("--n", gen.n, "n for --canonical");
  generate->add_option("--seed", gen.seed, "Seed")->default_val(0);
  generate->add_option("--out", gen.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_rainbow) return solve_rainbow_cmd(solve_args);
    if (*solve_transversal) return solve_transversal_cmd(solve_args);
    if (*solve_egz) return solve_egz_cmd(solve_args);
    if (*solve_mcpath) return solve_mcpath_cmd(solve_args);
    if (*classify_family) return classify_family_cmd(solve_args);
    if (*classify_multiset) return classify_multiset_cmd(solve_args);
    if (*verify) return verify_cmd(theorem, options);
    if (*generate) return generate_cmd(gen);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const GuaranteeViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kGuarantee;
  } catch (const TheoremViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kGuarantee;
  } catch (const DichotomyViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kGuarantee;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
