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

#ifndef QMAT_LATTICE_HPP_
#define QMAT_LATTICE_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qmat/subspace.hpp"

namespace qmat {

class SubspaceLattice;
using LatticePtr = std::shared_ptr<const SubspaceLattice>;

// Index of a subspace within its lattice's deterministic enumeration
// (ascending dimension, then lexicographic row codes).
using Id = std::uint32_t;

// Raised when an enumeration or search would exceed a configured cap.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Number of k-dimensional subspaces of F_q^n. Throws on overflow past
// 2^63, which is far beyond any enumerable lattice anyway.
std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t k,
                                std::uint32_t q);

// Total number of subspaces of F_q^n.
std::uint64_t count_subspaces(std::uint32_t q, std::uint32_t n);

struct Interval {
  Subspace lower;
  Subspace upper;
  std::vector<Subspace> members;  // all X with lower <= X <= upper, in order
};

// Coordinate change [0, X] -> L(F_q^{dim X}) through the RREF basis of X.
// Because the basis is in RREF, child coordinates of v are just the
// entries of v at the pivot columns of X.
struct RestrictionMap {
  LatticePtr parent;
  LatticePtr child;
  Subspace space;                      // X
  std::vector<std::uint32_t> pivots;   // pivot columns of X's rows

  Subspace to_child(const Subspace& s) const;    // requires s <= X
  Subspace from_child(const Subspace& t) const;  // lift back into X
};

// Deterministic linear surjection F_q^n -> F_q^{n - dim X} with kernel X.
// The RREF basis of X is completed with the lowest-index standard unit
// vectors; push_forward/pre_image give the order isomorphism between
// [X, E] and the full child lattice.
struct QuotientMap {
  LatticePtr parent;
  LatticePtr child;
  Subspace kernel;               // X
  std::vector<Vec> complement;   // chosen unit vectors, in index order

  Vec push_vector(const Vec& v) const;
  Subspace push_forward(const Subspace& s) const;
  Subspace pre_image(const Subspace& t) const;
};

inline constexpr std::uint64_t kDefaultEnumerationGuard = 1000000;

// The full lattice L(E) for E = F_q^n: every subspace materialized once,
// in a fixed order, with id-based lookups. Immutable after construction
// and safe to share across threads.
class SubspaceLattice
    : public std::enable_shared_from_this<SubspaceLattice> {
 public:
  static LatticePtr make(std::uint32_t q, std::uint32_t n,
                         std::uint64_t guard = kDefaultEnumerationGuard);

  std::uint32_t q() const { return q_; }
  std::uint32_t n() const { return n_; }
  std::size_t size() const { return all_.size(); }

  const std::vector<Subspace>& all() const { return all_; }
  const Subspace& at(Id id) const { return all_.at(id); }
  std::uint32_t dim_of(Id id) const { return all_[id].dim(); }
  Id id_of(const Subspace& s) const;
  bool knows(const Subspace& s) const;

  Id zero_id() const { return 0; }
  Id full_id() const { return static_cast<Id>(all_.size() - 1); }
  const Subspace& zero_space() const { return all_.front(); }
  const Subspace& ground() const { return all_.back(); }

  // Ids of dimension k occupy the contiguous range [dim_begin(k), dim_end(k)).
  Id dim_begin(std::uint32_t k) const { return dim_offset_[k]; }
  Id dim_end(std::uint32_t k) const { return dim_offset_[k + 1]; }
  std::span<const Subspace> of_dim(std::uint32_t k) const;

  std::vector<Subspace> hyperplanes() const;  // dimension n-1 (zero if n==0)

  Interval interval(const Subspace& lower, const Subspace& upper) const;

  RestrictionMap restriction_map(const Subspace& x) const;
  QuotientMap quotient_map(const Subspace& x) const;

  // Every lattice automorphism as a permutation of ids. For n <= 1 this
  // is the identity; for n == 2 all atom permutations (each extends to a
  // lattice automorphism in a height-2 lattice); for n == 3 with q in
  // {2, 3} the maps induced by invertible matrices, which by the
  // fundamental theorem of projective geometry is all of them over a
  // prime field. Larger cases throw GuardExceeded.
  const std::vector<std::vector<Id>>& automorphisms() const;

 private:
  SubspaceLattice(std::uint32_t q, std::uint32_t n);

  std::uint32_t q_;
  std::uint32_t n_;
  std::vector<Subspace> all_;
  std::vector<Id> dim_offset_;  // size n+2
  std::unordered_map<std::string, Id> index_;  // literal -> id

  mutable std::once_flag autos_once_;
  mutable std::vector<std::vector<Id>> autos_;
};

// All subspaces of F_q^n, optionally of one dimension, in lattice order.
std::vector<Subspace> enumerate_subspaces(std::uint32_t q, std::uint32_t n,
                                          std::uint64_t guard =
                                              kDefaultEnumerationGuard);
std::vector<Subspace> enumerate_subspaces(std::uint32_t q, std::uint32_t n,
                                          std::uint32_t k,
                                          std::uint64_t guard =
                                              kDefaultEnumerationGuard);

}  // namespace qmat

#endif  // QMAT_LATTICE_HPP_
