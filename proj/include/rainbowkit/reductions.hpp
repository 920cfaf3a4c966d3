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
#include <optional>
#include <variant>
#include <vector>

#include "rainbowkit/rainbow_solver.hpp"

namespace rainbowkit {

using Symbol = std::int64_t;

/// An m x n matrix of symbols. Rows must not repeat a symbol.
struct SymbolMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Symbol>> cells;
};

/// Throws PreconditionError on ragged shape, RowDuplicateError when a row
/// repeats a symbol.
void check_row_distinct(const SymbolMatrix& a);

struct TransversalEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Symbol symbol = 0;

  friend auto operator<=>(const TransversalEntry&,
                          const TransversalEntry&) = default;
};

struct Transversal {
  std::vector<TransversalEntry> entries;  // sorted by row
};

/// No shared row, column or symbol, and every symbol matches the matrix.
bool is_partial_transversal(const SymbolMatrix& a, const Transversal& t);
bool is_full_transversal(const SymbolMatrix& a, const Transversal& t);

/// One matching per row between columns (left) and symbols (right). Right
/// vertex ids index `symbols`, the sorted distinct symbols of the matrix.
struct MatrixFamily {
  MatchingFamily family;
  std::vector<Symbol> symbols;
};

MatrixFamily matrix_to_family(const SymbolMatrix& a);

/// A transversal of size min(m, n) if one exists. Guaranteed for m >= 2n - 1.
std::optional<Transversal> find_transversal(const SymbolMatrix& a);

/// A multiset over Z_n, kept sorted.
struct ResidueMultiset {
  int modulus = 1;
  std::vector<int> elements;

  friend bool operator==(const ResidueMultiset&,
                         const ResidueMultiset&) = default;
};

/// Sorts the elements; throws PreconditionError if n < 1 or an element lies
/// outside [0, n).
ResidueMultiset make_multiset(int modulus, std::vector<int> elements);

/// Matchings {(i, i + a mod n)} for each element a, in sorted element order;
/// color c corresponds to elements[c].
MatchingFamily egz_family(const ResidueMultiset& a);

/// Size n, sum divisible by n, and contained in `whole`.
bool is_zero_sum_witness(const ResidueMultiset& whole,
                         const std::vector<int>& witness);

/// A size-n sub-multiset with sum ≡ 0 (mod n), read off a perfect rainbow
/// matching of egz_family. Guaranteed when |A| >= 2n - 1.
std::optional<std::vector<int>> find_zero_sum_subset(const ResidueMultiset& a);

struct ExtremalPair {
  int a = 0;
  int b = 0;  // a < b

  friend bool operator==(const ExtremalPair&, const ExtremalPair&) = default;
};

using MultisetClassification = std::variant<std::vector<int>, ExtremalPair>;

/// n - 1 copies each of a and b with gcd(b - a, n) = 1, or nullopt.
std::optional<ExtremalPair> extremal_pair_structure(const ResidueMultiset& a);

/// |A| = 2n - 2, n >= 2: a zero-sum witness or the extremal pair.
MultisetClassification classify_multiset(const ResidueMultiset& a);

}  // namespace rainbowkit
