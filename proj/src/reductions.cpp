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

#include "rainbowkit/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace rainbowkit {

void check_row_distinct(const SymbolMatrix& a) {
  if (a.cells.size() != a.rows) {
    throw PreconditionError("matrix has " + std::to_string(a.cells.size()) +
                            " rows, expected " + std::to_string(a.rows));
  }
  for (std::size_t i = 0; i < a.rows; ++i) {
    if (a.cells[i].size() != a.cols) {
      throw PreconditionError("row " + std::to_string(i) + " has " +
                              std::to_string(a.cells[i].size()) +
                              " cells, expected " + std::to_string(a.cols));
    }
    std::set<Symbol> seen;
    for (Symbol x : a.cells[i]) {
      if (!seen.insert(x).second) {
        throw RowDuplicateError("row " + std::to_string(i) +
                                " repeats symbol " + std::to_string(x));
      }
    }
  }
}

bool is_partial_transversal(const SymbolMatrix& a, const Transversal& t) {
  std::set<std::size_t> rows;
  std::set<std::size_t> cols;
  std::set<Symbol> symbols;
  for (const TransversalEntry& e : t.entries) {
    if (e.row >= a.rows || e.col >= a.cols) return false;
    if (a.cells[e.row][e.col] != e.symbol) return false;
    if (!rows.insert(e.row).second || !cols.insert(e.col).second ||
        !symbols.insert(e.symbol).second) {
      return false;
    }
  }
  return true;
}

bool is_full_transversal(const SymbolMatrix& a, const Transversal& t) {
  return t.entries.size() == std::min(a.rows, a.cols) &&
         is_partial_transversal(a, t);
}

MatrixFamily matrix_to_family(const SymbolMatrix& a) {
  check_row_distinct(a);
  MatrixFamily out;
  std::set<Symbol> distinct;
  for (const auto& row : a.cells) distinct.insert(row.begin(), row.end());
  out.symbols.assign(distinct.begin(), distinct.end());

  for (const auto& row : a.cells) {
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < row.size(); ++j) {
      auto at = std::lower_bound(out.symbols.begin(), out.symbols.end(), row[j]);
      edges.push_back({static_cast<int>(j),
                       static_cast<int>(at - out.symbols.begin())});
    }
    out.family.push_back(validate_matching(edges));
  }
  return out;
}

std::optional<Transversal> find_transversal(const SymbolMatrix& a) {
  const MatrixFamily reduced = matrix_to_family(a);
  const std::size_t target = std::min(a.rows, a.cols);
  std::optional<RainbowMatching> r =
      find_rainbow_matching(reduced.family, target);
  if (!r) {
    if (a.cols > 0 && a.rows >= 2 * a.cols - 1) {
      throw GuaranteeViolation("no full transversal with m >= 2n - 1");
    }
    return std::nullopt;
  }
  Transversal t;
  for (const ColoredEdge& ce : r->assignment) {
    t.entries.push_back({ce.color, static_cast<std::size_t>(ce.edge.left),
                         reduced.symbols[static_cast<std::size_t>(ce.edge.right)]});
  }
  if (!is_full_transversal(a, t)) {
    throw GuaranteeViolation("rainbow matching pulled back to an invalid "
                             "transversal");
  }
  return t;
}

ResidueMultiset make_multiset(int modulus, std::vector<int> elements) {
  if (modulus < 1) throw PreconditionError("modulus must be at least 1");
  for (int x : elements) {
    if (x < 0 || x >= modulus) {
      throw PreconditionError("element " + std::to_string(x) +
                              " outside [0, " + std::to_string(modulus) + ")");
    }
  }
  std::sort(elements.begin(), elements.end());
  return {modulus, std::move(elements)};
}

MatchingFamily egz_family(const ResidueMultiset& a) {
  MatchingFamily family;
  for (int shift : a.elements) {
    std::vector<Edge> edges;
    for (int i = 0; i < a.modulus; ++i) {
      edges.push_back({i, (i + shift) % a.modulus});
    }
    family.push_back(validate_matching(edges));
  }
  return family;
}

bool is_zero_sum_witness(const ResidueMultiset& whole,
                         const std::vector<int>& witness) {
  const int n = whole.modulus;
  if (witness.size() != static_cast<std::size_t>(n)) return false;
  long long sum = 0;
  for (int x : witness) sum += x;
  if (sum % n != 0) return false;
  std::vector<int> sorted = witness;
  std::sort(sorted.begin(), sorted.end());
  return std::includes(whole.elements.begin(), whole.elements.end(),
                       sorted.begin(), sorted.end());
}

std::optional<std::vector<int>> find_zero_sum_subset(const ResidueMultiset& a) {
  const auto n = static_cast<std::size_t>(a.modulus);
  std::optional<RainbowMatching> r = find_rainbow_matching(egz_family(a), n);
  if (!r) {
    if (a.elements.size() >= 2 * n - 1) {
      throw GuaranteeViolation("2n - 1 residues without a zero-sum subset");
    }
    return std::nullopt;
  }
  // The rainbow matching is perfect: left vertex i takes the shift of its
  // color, and the right ends i + b(i) run over Z_n once, so the shifts sum
  // to zero.
  std::vector<int> witness;
  long long shifted = 0;
  for (const ColoredEdge& ce : r->assignment) {
    witness.push_back(a.elements[ce.color]);
    shifted += ce.edge.right - ce.edge.left;
  }
  std::sort(witness.begin(), witness.end());
  if (shifted % a.modulus != 0 || !is_zero_sum_witness(a, witness)) {
    throw GuaranteeViolation("rainbow matching pulled back to a non-zero sum");
  }
  return witness;
}

std::optional<ExtremalPair> extremal_pair_structure(const ResidueMultiset& a) {
  const int n = a.modulus;
  if (a.elements.size() != 2 * static_cast<std::size_t>(n) - 2 ||
      a.elements.empty()) {
    return std::nullopt;
  }
  const int lo = a.elements.front();
  const int hi = a.elements.back();
  const auto copies = static_cast<long>(n - 1);
  if (lo == hi ||
      std::count(a.elements.begin(), a.elements.end(), lo) != copies ||
      std::count(a.elements.begin(), a.elements.end(), hi) != copies) {
    return std::nullopt;
  }
  if (std::gcd(hi - lo, n) != 1) return std::nullopt;
  return ExtremalPair{lo, hi};
}

MultisetClassification classify_multiset(const ResidueMultiset& a) {
  const int n = a.modulus;
  if (n < 2 || a.elements.size() != 2 * static_cast<std::size_t>(n) - 2) {
    throw PreconditionError("expected 2n - 2 residues with n >= 2");
  }
  if (std::optional<std::vector<int>> w = find_zero_sum_subset(a)) {
    return *std::move(w);
  }
  if (std::optional<ExtremalPair> pair = extremal_pair_structure(a)) {
    return *pair;
  }
  throw TheoremViolation("no zero-sum subset, yet the multiset is not two "
                         "residues with n - 1 copies each");
}

}  // namespace rainbowkit
