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

#include "rainbowkit/graph_core.hpp"
#include "rainbowkit/network_paths.hpp"

namespace fixtures {

using rainbowkit::Edge;
using rainbowkit::Matching;
using rainbowkit::NetNode;
using rainbowkit::NetPath;

// Even and odd edges of the 6-cycle a1 b1 a2 b2 a3 b3.
inline Matching e3() { return rainbowkit::validate_matching({{1, 1}, {2, 2}, {3, 3}}); }
inline Matching o3() { return rainbowkit::validate_matching({{2, 1}, {3, 2}, {1, 3}}); }
inline Matching e2() { return rainbowkit::validate_matching({{1, 1}, {2, 2}}); }
inline Matching o2() { return rainbowkit::validate_matching({{2, 1}, {1, 2}}); }

inline NetNode s() { return NetNode::source(); }
inline NetNode t() { return NetNode::sink(); }
inline NetNode v(int i) { return NetNode::inner(i); }

}  // namespace fixtures
