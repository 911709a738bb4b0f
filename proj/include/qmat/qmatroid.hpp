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

#ifndef QMAT_QMATROID_HPP_
#define QMAT_QMATROID_HPP_

#include "qmat/axioms.hpp"
#include "qmat/family.hpp"
#include "qmat/rank.hpp"

namespace qmat {

// A rank function validated against boundedness (R1), monotonicity (R2)
// and submodularity (R3). Immutable once built.
class QMatroid {
 public:
  // Throws AxiomViolation carrying the failing report and witness pair.
  static QMatroid make(RankFunction rank);
  // First failing rank-axiom report, or nullopt when valid.
  static std::optional<AxiomReport> validate(const RankFunction& rank);

  const RankFunction& rank() const { return rank_; }
  const LatticePtr& lattice() const { return rank_.lattice(); }
  int rank_of(const Subspace& s) const { return rank_.at(s); }
  int rank_of(Id id) const { return rank_.at(id); }

  friend bool operator==(const QMatroid& a, const QMatroid& b) {
    return a.rank_ == b.rank_;
  }

 private:
  struct validated_t {};
  QMatroid(RankFunction rank, validated_t) : rank_(std::move(rank)) {}
  RankFunction rank_;
};

// Rank min(k, dim A) on F_q^n.
QMatroid uniform(std::uint32_t k, std::uint32_t n, std::uint32_t q);

// Subspaces A with r(A) = dim A.
SubspaceFamily independent_spaces(const QMatroid& m);
// Subspaces S with r(S) = r(E).
SubspaceFamily spanning_spaces(const QMatroid& m);
// Inclusion-maximal independent spaces.
SubspaceFamily bases(const QMatroid& m);
// 1-dimensional subspaces of rank zero.
SubspaceFamily loops(const QMatroid& m);
// The subspace whose 1-dimensional subspaces are exactly the loops.
// A validated q-matroid cannot fail this; a logic error is raised if the
// cross-check ever does.
Subspace loop_space(const QMatroid& m);

// Rank r*(A) = dim A - r(E) + r(A^perp), revalidated.
QMatroid dual(const QMatroid& m);
// The q-matroid on F_q^{dim X} inheriting ranks through the RREF basis
// of X.
QMatroid restriction(const QMatroid& m, const Subspace& x);
// The q-matroid on F_q^{n - dim X} with rank of T equal to
// r(pre-image of T) - r(X).
QMatroid contraction(const QMatroid& m, const Subspace& x);

// Whether some lattice automorphism carries one rank function to the
// other. Guarded like SubspaceLattice::automorphisms.
bool are_isomorphic(const QMatroid& m1, const QMatroid& m2);

}  // namespace qmat

#endif  // QMAT_QMATROID_HPP_
