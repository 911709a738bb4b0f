// Copyright 2026 The Authors.
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

#ifndef QMAT_SUBSPACE_HPP_
#define QMAT_SUBSPACE_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qmat {

// A coordinate vector over F_q, length n, entries in [0, q).
using Vec = std::vector<std::uint32_t>;

// A subspace of F_q^n held in canonical form: the rows are a basis in
// reduced row echelon form (pivots strictly increasing, pivot entries 1,
// pivot columns zero elsewhere). Canonical form makes equality of rows
// equivalent to equality of subspaces, so Subspace works as a value type
// everywhere: as A, B, I, J, K, x, X, L of the surrounding algebra.
class Subspace {
 public:
  static Subspace zero(std::uint32_t q, std::uint32_t n);
  static Subspace full(std::uint32_t q, std::uint32_t n);
  // Canonical subspace spanned by arbitrary generators. Validates entry
  // ranges and vector lengths; zero/duplicate generators are fine.
  static Subspace span(std::uint32_t q, std::uint32_t n,
                       const std::vector<Vec>& generators);

  std::uint32_t q() const { return q_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t dim() const { return static_cast<std::uint32_t>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }

  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return dim() == n_; }

  bool contains_vector(const Vec& v) const;
  // Whether other is a subspace of *this. Ambient spaces must match.
  bool contains(const Subspace& other) const;

  // Orthogonal complement for the standard dot product sum_i u_i v_i.
  Subspace perp() const;

  // Every vector of the subspace (q^dim of them), in code order.
  std::vector<Vec> vectors() const;

  // Textual literal: "0" for the zero subspace, otherwise the canonical
  // generator rows as digit strings (coordinate 1 leftmost) joined by
  // single spaces.
  std::string to_literal() const;
  static Subspace parse_literal(std::uint32_t q, std::uint32_t n,
                                std::string_view text);

  // Base-q integer code of a vector, with coordinate 1 in the lowest
  // digit. Defines the deterministic order of vectors and, row by row,
  // of subspaces.
  static std::uint64_t code_of(const Vec& v, std::uint32_t q);
  static Vec vec_of(std::uint64_t code, std::uint32_t q, std::uint32_t n);

  friend bool operator==(const Subspace&, const Subspace&) = default;
  // Total order: ambient (q, n), then dimension, then row codes
  // lexicographically. Lattice enumeration follows this order.
  std::strong_ordering operator<=>(const Subspace& other) const;

 private:
  Subspace(std::uint32_t q, std::uint32_t n, std::vector<Vec> rref_rows)
      : q_(q), n_(n), rows_(std::move(rref_rows)) {}

  std::uint32_t q_ = 2;
  std::uint32_t n_ = 0;
  std::vector<Vec> rows_;
};

// Join and meet in the subspace lattice.
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace qmat

#endif  // QMAT_SUBSPACE_HPP_
