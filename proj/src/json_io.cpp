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

#include "rainbowkit/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace rainbowkit::json_io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const json& require_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

long long require_integer(const json& j, const std::string& where,
                          long long min_value = 0) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const long long v = j.get<long long>();
  if (v < min_value) {
    fail(where, "must be at least " + std::to_string(min_value));
  }
  return v;
}

int require_index(const json& j, const std::string& where) {
  const long long v = require_integer(j, where);
  if (v > std::numeric_limits<int>::max()) fail(where, "index too large");
  return static_cast<int>(v);
}

const json& require_field(const json& j, const char* key,
                          const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

}  // namespace

json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(origin + ": invalid JSON (" + e.what() + ")");
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str(), path);
}

Edge parse_edge(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [left, right]");
  return {require_index(j[0], where + "[0]"), require_index(j[1], where + "[1]")};
}

Matching parse_matching(const json& j, const std::string& where) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < require_array(j, where).size(); ++i) {
    edges.push_back(parse_edge(j[i], at(where, i)));
  }
  try {
    return validate_matching(edges);
  } catch (const OverlapError& e) {
    fail(where, e.what());
  }
}

MatchingFamily parse_family(const json& j, const std::string& where) {
  MatchingFamily family;
  for (std::size_t i = 0; i < require_array(j, where).size(); ++i) {
    family.push_back(parse_matching(j[i], at(where, i)));
  }
  return family;
}

NetNode parse_node(const json& j, const std::string& where) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "s") return NetNode::source();
    if (s == "t") return NetNode::sink();
    fail(where, "expected \"s\", \"t\" or an integer");
  }
  return NetNode::inner(require_index(j, where));
}

NetPath parse_path(const json& j, const std::string& where) {
  NetPath path;
  for (std::size_t i = 0; i < require_array(j, where).size(); ++i) {
    path.push_back(parse_node(j[i], at(where, i)));
  }
  try {
    check_st_path(path);
  } catch (const MalformedPathError& e) {
    fail(where, e.what());
  }
  return path;
}

std::vector<std::vector<NetPath>> parse_network(const json& j,
                                                const std::string& where) {
  std::vector<std::vector<NetPath>> groups;
  for (std::size_t g = 0; g < require_array(j, where).size(); ++g) {
    const std::string group_where = at(where, g);
    std::vector<NetPath> paths;
    for (std::size_t p = 0; p < require_array(j[g], group_where).size(); ++p) {
      paths.push_back(parse_path(j[g][p], at(group_where, p)));
    }
    groups.push_back(std::move(paths));
  }
  return groups;
}

SymbolMatrix parse_matrix(const json& j) {
  SymbolMatrix a;
  a.rows = static_cast<std::size_t>(
      require_integer(require_field(j, "rows", "matrix"), "matrix.rows"));
  a.cols = static_cast<std::size_t>(
      require_integer(require_field(j, "cols", "matrix"), "matrix.cols"));
  const json& cells = require_field(j, "cells", "matrix");
  require_array(cells, "matrix.cells");
  if (cells.size() != a.rows) {
    fail("matrix.cells", "has " + std::to_string(cells.size()) +
                             " rows, expected " + std::to_string(a.rows));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string where = at("matrix.cells", i);
    require_array(cells[i], where);
    if (cells[i].size() != a.cols) {
      fail(where, "has " + std::to_string(cells[i].size()) +
                      " entries, expected " + std::to_string(a.cols));
    }
    std::vector<Symbol> row;
    for (std::size_t k = 0; k < cells[i].size(); ++k) {
      row.push_back(require_integer(cells[i][k], at(where, k),
                                    std::numeric_limits<long long>::min()));
    }
    a.cells.push_back(std::move(row));
  }
  return a;
}

ResidueMultiset parse_multiset(const json& j) {
  const long long n =
      require_integer(require_field(j, "n", "multiset"), "multiset.n", 1);
  if (n > std::numeric_limits<int>::max()) fail("multiset.n", "too large");
  const json& elements = require_field(j, "elements", "multiset");
  std::vector<int> values;
  for (std::size_t i = 0;
       i < require_array(elements, "multiset.elements").size(); ++i) {
    const int v = require_index(elements[i], at("multiset.elements", i));
    if (v >= n) fail(at("multiset.elements", i), "must be below n");
    values.push_back(v);
  }
  return make_multiset(static_cast<int>(n), std::move(values));
}

json to_json(const Edge& e) { return json::array({e.left, e.right}); }

json to_json(const Matching& m) {
  json out = json::array();
  for (const Edge& e : m.edges()) out.push_back(to_json(e));
  return out;
}

json to_json(const MatchingFamily& f) {
  json out = json::array();
  for (const Matching& m : f) out.push_back(to_json(m));
  return out;
}

json to_json(const NetNode& v) {
  if (v.is_source()) return "s";
  if (v.is_sink()) return "t";
  return v.index;
}

json to_json(const NetPath& p) {
  json out = json::array();
  for (const NetNode& v : p) out.push_back(to_json(v));
  return out;
}

json to_json(const std::vector<std::vector<NetPath>>& groups) {
  json out = json::array();
  for (const auto& g : groups) {
    json paths = json::array();
    for (const NetPath& p : g) paths.push_back(to_json(p));
    out.push_back(std::move(paths));
  }
  return out;
}

json to_json(const ColoredPath& p) {
  return {{"nodes", to_json(p.nodes)}, {"colors", p.colors}};
}

json to_json(const RainbowMatching& r) {
  json assignment = json::array();
  for (const ColoredEdge& ce : r.assignment) {
    assignment.push_back({{"color", ce.color}, {"edge", to_json(ce.edge)}});
  }
  return {{"size", r.size()}, {"assignment", std::move(assignment)}};
}

json to_json(const Regimentation& r) {
  json classes = json::array();
  for (const RegimentClass& c : r.classes) {
    classes.push_back(
        {{"path", to_json(c.representative)}, {"count", c.count}});
  }
  return {{"classes", std::move(classes)}};
}

json to_json(const SymbolMatrix& a) {
  return {{"rows", a.rows}, {"cols", a.cols}, {"cells", a.cells}};
}

json to_json(const Transversal& t) {
  json entries = json::array();
  for (const TransversalEntry& e : t.entries) {
    entries.push_back({{"row", e.row}, {"col", e.col}, {"symbol", e.symbol}});
  }
  return {{"size", t.entries.size()}, {"entries", std::move(entries)}};
}

json to_json(const ResidueMultiset& a) {
  return {{"n", a.modulus}, {"elements", a.elements}};
}

json to_json(const FamilyClassification& c) {
  if (const auto* r = std::get_if<RainbowMatching>(&c)) {
    return {{"verdict", "HasRainbow"}, {"rainbow", to_json(*r)}};
  }
  const auto& cycle = std::get<ExtremalCycle>(c);
  json vertices = json::array();
  for (const Vertex& v : cycle.cycle) vertices.push_back(to_string(v));
  return {{"verdict", "ExtremalCycle"},
          {"cycle", std::move(vertices)},
          {"even_colors", cycle.even_colors},
          {"odd_colors", cycle.odd_colors}};
}

json to_json(const MultisetClassification& c) {
  if (const auto* w = std::get_if<std::vector<int>>(&c)) {
    return {{"verdict", "HasZeroSum"}, {"witness", *w}};
  }
  const auto& pair = std::get<ExtremalPair>(c);
  return {{"verdict", "ExtremalPair"}, {"a", pair.a}, {"b", pair.b}};
}

}  // namespace rainbowkit::json_io
