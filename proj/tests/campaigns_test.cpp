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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rainbowkit/campaigns.hpp"
#include "rainbowkit/errors.hpp"

using namespace rainbowkit;
using campaigns::CampaignOptions;
using campaigns::run_campaign;

namespace {

std::string stable_dump(const campaigns::CampaignReport& r) {
  nlohmann::json j = r.to_json();
  j.erase("elapsed");
  return j.dump();
}

}  // namespace

TEST_CASE("egz exhaustive count") {
  CampaignOptions o;
  o.n = 4;
  o.exhaustive = true;
  const auto r = run_campaign("egz", o);
  CHECK(r.instances_checked == 120);
  CHECK(r.violations == 0);
}

TEST_CASE("small campaigns pass") {
  for (const char* name : {"drisko", "general", "bgs", "extremal", "dichotomy",
                           "egz", "egz-extremal", "transversal"}) {
    CAPTURE(name);
    CampaignOptions o;
    o.n = 3;
    o.samples = 50;
    o.max_inner = 3;
    o.max_n = 4;
    const auto r = run_campaign(name, o);
    CHECK(r.theorem == name);
    CHECK(r.instances_checked > 0);
    CHECK(r.violations == 0);
  }
}

TEST_CASE("drisko exhaustive at n = 2") {
  CampaignOptions o;
  o.n = 2;
  o.exhaustive = true;
  const auto r = run_campaign("drisko", o);
  CHECK(r.instances_checked == 1140);
  CHECK(r.violations == 0);
}

TEST_CASE("same seed, same report") {
  for (const auto& name : campaigns::campaign_names()) {
    CAPTURE(name);
    CampaignOptions o;
    o.n = 3;
    o.samples = 40;
    o.max_inner = 3;
    o.max_n = 3;
    o.seed = 11;
    CHECK(stable_dump(run_campaign(name, o)) == stable_dump(run_campaign(name, o)));
  }
}

TEST_CASE("report fields") {
  CampaignOptions o;
  o.n = 3;
  o.samples = 10;
  o.seed = 5;
  const nlohmann::json j = run_campaign("drisko", o).to_json();
  for (const char* key : {"theorem", "instances_checked", "violations",
                          "elapsed", "seed", "parameters"}) {
    CHECK(j.contains(key));
  }
  CHECK(j.at("seed") == 5);
  CHECK_THROWS_AS(run_campaign("nonsense", o), PreconditionError);
}

TEST_CASE("budget exhaustion propagates") {
  CampaignOptions o;
  o.samples = 20;
  o.budget = 3;
  CHECK_THROWS_AS(run_campaign("general", o), BudgetExceeded);
}
