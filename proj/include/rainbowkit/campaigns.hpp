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

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rainbowkit/oracle.hpp"

// Verification campaigns. Each runs one invariant suite over
// generated or enumerated instances and tallies violations; the same
// (options, seed) always produce the same report apart from `elapsed`.
namespace rainbowkit::campaigns {

struct CampaignReport {
  std::string theorem;
  std::uint64_t instances_checked = 0;
  std::uint64_t violations = 0;
  double elapsed = 0.0;  // seconds
  std::uint64_t seed = 0;
  nlohmann::json parameters = nlohmann::json::object();
  /// Per-campaign tallies (feasible/infeasible counts and the like).
  nlohmann::json counters = nlohmann::json::object();
  /// Descriptions of the first few violations.
  std::vector<std::string> examples;

  void record_violation(std::uint64_t instance, const std::string& what);
  nlohmann::json to_json() const;
};

struct CampaignOptions {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  bool exhaustive = false;
  std::size_t n = 0;
  std::size_t side = 0;  // 0 picks the campaign default
  std::size_t max_m = 9;
  std::size_t max_size = 5;
  std::size_t max_inner = 6;
  std::size_t max_paths = 6;
  std::size_t max_n = 5;
  std::uint64_t budget = oracle::kDefaultBudget;
};

/// 2n - 1 matchings of size n always have a size-n rainbow
/// matching, found by augmentation alone. Exhaustive mode takes every
/// multiset of members from the size-n matchings of K_{side,side}.
CampaignReport verify_drisko(const CampaignOptions& options);

/// Mixed sizes: the augmentation succeeds whenever the size condition holds,
/// and feasibility always equals the brute-force answer. Runs until
/// `samples` families satisfying the condition have been checked.
CampaignReport verify_general(const CampaignOptions& options);

/// floor((k+2)n/(k+1)) - (k+1) matchings of size n, k in {1, 2}, n up to
/// max_n: the size condition holds and a rainbow matching of size n - k is
/// found. `samples` families per (k, n).
CampaignReport verify_bgs(const CampaignOptions& options);

/// 2n - 2 matchings of size n: classification never fails and a family has
/// no rainbow matching exactly when it is the 2n-cycle split. Adds every
/// two-class family built from 2n-cycles of K_{n+1,n+1}.
CampaignReport verify_extremal(const CampaignOptions& options);

/// Source contraction on random path-group families: witnesses are valid
/// and really reachable, the witness set beats the path count, and a
/// multicolored s-t path is found whenever paths outnumber inner nodes.
CampaignReport verify_counting(const CampaignOptions& options);

/// Every multiset of k s-t paths over k inner nodes (k <= max_inner) that
/// uses all of them: regimented exactly when no multicolored s-t path
/// exists.
CampaignReport verify_dichotomy(const CampaignOptions& options);

/// Every multiset of 2n - 1 residues mod n has a zero-sum subset of size n.
CampaignReport verify_egz(const CampaignOptions& options);

/// Every multiset of 2n - 2 residues mod n: no zero-sum subset exactly for
/// n - 1 copies of a and b with gcd(b - a, n) = 1.
CampaignReport verify_egz_extremal(const CampaignOptions& options);

/// Random row-distinct (2n - 1) x n matrices have a full transversal.
CampaignReport verify_transversal(const CampaignOptions& options);

/// Names accepted by run_campaign.
const std::vector<std::string>& campaign_names();

/// Dispatches by name; throws PreconditionError for an unknown name.
CampaignReport run_campaign(const std::string& theorem,
                            const CampaignOptions& options);

}  // namespace rainbowkit::campaigns
