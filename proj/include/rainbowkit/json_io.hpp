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

#include <string>
#include <vector>

#include "rainbowkit/errors.hpp"
#include "rainbowkit/network_paths.hpp"
#include "rainbowkit/rainbow_solver.hpp"
#include "rainbowkit/reductions.hpp"

// JSON formats:
//   edge       [left, right]
//   matching   [edge, ...]
//   family     [matching, ...]
//   node       "s" | "t" | non-negative integer
//   path       [node, ...]
//   network    [[path, ...], ...]          one inner array per group
//   matrix     {"rows": m, "cols": n, "cells": [[symbol, ...], ...]}
//   multiset   {"n": modulus, "elements": [residue, ...]}
namespace rainbowkit::json_io {

using nlohmann::json;

/// Malformed input. The message starts with the offending field path.
class SchemaError : public Error {
 public:
  using Error::Error;
};

json parse_text(const std::string& text, const std::string& origin);
json read_file(const std::string& path);

Edge parse_edge(const json& j, const std::string& where = "edge");
Matching parse_matching(const json& j, const std::string& where = "matching");
MatchingFamily parse_family(const json& j, const std::string& where = "family");
NetNode parse_node(const json& j, const std::string& where = "node");
NetPath parse_path(const json& j, const std::string& where = "path");
std::vector<std::vector<NetPath>> parse_network(
    const json& j, const std::string& where = "network");
SymbolMatrix parse_matrix(const json& j);
ResidueMultiset parse_multiset(const json& j);

json to_json(const Edge& e);
json to_json(const Matching& m);
json to_json(const MatchingFamily& f);
json to_json(const NetNode& v);
json to_json(const NetPath& p);
json to_json(const std::vector<std::vector<NetPath>>& groups);
json to_json(const ColoredPath& p);
json to_json(const RainbowMatching& r);
json to_json(const Regimentation& r);
json to_json(const SymbolMatrix& a);
json to_json(const Transversal& t);
json to_json(const ResidueMultiset& a);
json to_json(const FamilyClassification& c);
json to_json(const MultisetClassification& c);

}  // namespace rainbowkit::json_io
