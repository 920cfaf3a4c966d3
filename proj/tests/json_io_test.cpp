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

#include "fixtures.hpp"
#include "rainbowkit/json_io.hpp"

using namespace rainbowkit;
using namespace fixtures;
using json_io::json;
using json_io::SchemaError;

namespace {

std::string schema_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("family round trip") {
  const MatchingFamily f{e3(), o3()};
  CHECK(json_io::parse_family(json_io::to_json(f)) == f);
  CHECK(json_io::to_json(e2()).dump() == "[[1,1],[2,2]]");
}

TEST_CASE("family schema errors name the field") {
  CHECK(schema_message([] { json_io::parse_family(json::parse("[[[0,0],[0,1]]]")); })
            .find("family[0]") == 0);
  CHECK(schema_message([] { json_io::parse_family(json::parse("[[[0]]]")); })
            .find("family[0][0]") == 0);
  CHECK(schema_message([] { json_io::parse_family(json::parse("[[[0,-1]]]")); })
            .find("family[0][0][1]") == 0);
  CHECK(schema_message([] { json_io::parse_family(json::parse("{}")); })
            .find("family") == 0);
  CHECK_THROWS_AS(json_io::parse_text("[1,", "input"), SchemaError);
  CHECK_THROWS_AS(json_io::read_file("/nonexistent/x.json"), SchemaError);
}

TEST_CASE("network round trip") {
  const std::vector<std::vector<NetPath>> groups{
      {{s(), v(0), t()}, {s(), t()}}, {{s(), v(2), v(1), t()}}};
  const json j = json_io::to_json(groups);
  CHECK(j.dump() == R"([[["s",0,"t"],["s","t"]],[["s",2,1,"t"]]])");
  CHECK(json_io::parse_network(j) == groups);
  CHECK(schema_message([] {
          json_io::parse_network(json::parse(R"([[["s","x","t"]]])"));
        }).find("network[0][0][1]") == 0);
  CHECK(schema_message([] {
          json_io::parse_network(json::parse(R"([[[0,"t"]]])"));
        }).find("network[0][0]") == 0);
}

TEST_CASE("matrix and multiset") {
  const SymbolMatrix a =
      json_io::parse_matrix(json::parse(R"({"rows":2,"cols":2,"cells":[[1,2],[3,-4]]})"));
  CHECK(a.cells[1][1] == -4);
  CHECK(json_io::to_json(a).dump() == R"({"cells":[[1,2],[3,-4]],"cols":2,"rows":2})");
  CHECK(schema_message([] {
          json_io::parse_matrix(json::parse(R"({"rows":2,"cols":2,"cells":[[1,2]]})"));
        }).find("matrix.cells") == 0);
  CHECK(schema_message([] {
          json_io::parse_matrix(json::parse(R"({"rows":1,"cols":2,"cells":[[1]]})"));
        }).find("matrix.cells[0]") == 0);

  const ResidueMultiset m =
      json_io::parse_multiset(json::parse(R"({"n":3,"elements":[2,0,1]})"));
  CHECK(m.elements == std::vector<int>{0, 1, 2});
  CHECK(schema_message([] {
          json_io::parse_multiset(json::parse(R"({"n":3,"elements":[3]})"));
        }).find("multiset.elements[0]") == 0);
  CHECK(schema_message([] {
          json_io::parse_multiset(json::parse(R"({"elements":[]})"));
        }).find("multiset") == 0);
}

TEST_CASE("verdicts serialize") {
  const FamilyClassification c = classify_family({e2(), o2()});
  const json j = json_io::to_json(c);
  CHECK(j.at("verdict") == "ExtremalCycle");
  CHECK(j.at("cycle") == json::array({"a1", "b1", "a2", "b2"}));
  CHECK(j.at("even_colors") == json::array({0}));
  CHECK(j.at("odd_colors") == json::array({1}));

  const json zs = json_io::to_json(classify_multiset(make_multiset(3, {0, 0, 0, 0})));
  CHECK(zs.dump() == R"({"verdict":"HasZeroSum","witness":[0,0,0]})");
  const json ep = json_io::to_json(classify_multiset(make_multiset(3, {0, 0, 1, 1})));
  CHECK(ep.dump() == R"({"a":0,"b":1,"verdict":"ExtremalPair"})");
}
