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

#ifndef QMAT_SRC_ENGINE_HPP_
#define QMAT_SRC_ENGINE_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <vector>

#include "qmat/axioms.hpp"
#include "qmat/lattice.hpp"
#include "qmat/verify.hpp"

// Fast mass-checking core behind the verify module. Families become
// fixed-width bitsets over lattice ids and every axiom scan reduces to
// table lookups and word operations. Kept internal: the public checkers
// in axioms.hpp are the reference implementation this engine is tested
// against.
namespace qmat::verify_detail {

inline constexpr std::size_t kEngineMaxIds = 256;

// Bitset over lattice ids, capacity kEngineMaxIds.
struct IdSet {
  std::array<std::uint64_t, 4> w{};

  void set(unsigned i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(unsigned i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(unsigned i) const {
    return (w[i >> 6] >> (i & 63)) & 1;
  }
  bool any() const { return w[0] | w[1] | w[2] | w[3]; }
  bool none() const { return !any(); }
  unsigned count() const {
    return static_cast<unsigned>(std::popcount(w[0]) + std::popcount(w[1]) +
                                 std::popcount(w[2]) + std::popcount(w[3]));
  }
  bool subset_of(const IdSet& o) const {
    return !((w[0] & ~o.w[0]) | (w[1] & ~o.w[1]) | (w[2] & ~o.w[2]) |
             (w[3] & ~o.w[3]));
  }
  bool intersects(const IdSet& o) const {
    return (w[0] & o.w[0]) | (w[1] & o.w[1]) | (w[2] & o.w[2]) |
           (w[3] & o.w[3]);
  }
  // Highest set bit, or -1.
  int top() const {
    for (int i = 3; i >= 0; --i) {
      if (w[i]) return (i << 6) + 63 - std::countl_zero(w[i]);
    }
    return -1;
  }
  // Lowest set bit, or -1.
  int bottom() const {
    for (int i = 0; i < 4; ++i) {
      if (w[i]) return (i << 6) + std::countr_zero(w[i]);
    }
    return -1;
  }
  template <typename F>
  void for_each(F&& fn) const {  // ascending id order
    for (int i = 0; i < 4; ++i) {
      std::uint64_t word = w[i];
      while (word) {
        const int b = std::countr_zero(word);
        fn(static_cast<unsigned>((i << 6) + b));
        word &= word - 1;
      }
    }
  }

  friend IdSet operator&(IdSet a, const IdSet& b) {
    for (int i = 0; i < 4; ++i) a.w[i] &= b.w[i];
    return a;
  }
  friend IdSet operator|(IdSet a, const IdSet& b) {
    for (int i = 0; i < 4; ++i) a.w[i] |= b.w[i];
    return a;
  }
  IdSet& operator|=(const IdSet& b) {
    for (int i = 0; i < 4; ++i) w[i] |= b.w[i];
    return *this;
  }
  IdSet& operator&=(const IdSet& b) {
    for (int i = 0; i < 4; ++i) w[i] &= b.w[i];
    return *this;
  }
  friend IdSet andnot(IdSet a, const IdSet& b) {  // a & ~b
    for (int i = 0; i < 4; ++i) a.w[i] &= ~b.w[i];
    return a;
  }
  friend bool operator==(const IdSet&, const IdSet&) = default;

  std::vector<Id> ids() const {
    std::vector<Id> out;
    for_each([&](unsigned i) { out.push_back(i); });
    return out;
  }
  static IdSet of(const std::vector<Id>& ids) {
    IdSet s;
    for (Id i : ids) s.set(i);
    return s;
  }
};

// Per-thread scratch for checks that build per-family tables.
struct Scratch {
  std::vector<std::int8_t> rank;       // derived rank by id
  std::vector<IdSet> intersections;    // {b ^ a : b in f} per a
  std::vector<IdSet> max_intersections;
};

class Engine {
 public:
  // with_children enables restriction_hereditary (one extra table layer).
  explicit Engine(LatticePtr lattice, bool with_children = false);

  const LatticePtr& lattice() const { return lat_; }
  unsigned size() const { return num_ids_; }

  bool holds(AxiomId id, const IdSet& f, MaximalityMode mode,
             Scratch& scratch) const;

  void derived_rank(const IdSet& f, Scratch& scratch) const;
  bool rank_axiom_holds(AxiomId id, const Scratch& scratch) const;
  bool loops_fill_span(const IdSet& f, Scratch& scratch) const;
  bool restriction_hereditary(const IdSet& f, Scratch& scratch) const;

  Id join(Id a, Id b) const { return join_[a * num_ids_ + b]; }
  Id meet(Id a, Id b) const { return meet_[a * num_ids_ + b]; }
  bool leq(Id a, Id b) const { return sub_[b].test(a); }  // a <= b
  std::uint32_t dim(Id a) const { return dim_[a]; }
  const IdSet& subspaces_of(Id a) const { return sub_[a]; }
  const IdSet& superspaces_of(Id a) const { return sup_[a]; }

  IdSet downclose(const IdSet& s) const;
  IdSet upclose(const IdSet& s) const;
  IdSet inclusion_maximal(const IdSet& s) const;
  IdSet inclusion_minimal(const IdSet& s) const;
  // Dimension-extremal subsets (ids are dimension-sorted).
  IdSet dim_maximal(const IdSet& s) const;
  IdSet dim_minimal(const IdSet& s) const;

  // Exhaustive streams under a constraint, deterministic order.
  std::vector<IdSet> enumerate(verify::FamilyConstraint constraint,
                               std::uint64_t cap) const;
  // The index-th sampled family for a seed; reproducible regardless of
  // thread count.
  IdSet sample(verify::FamilyConstraint constraint, std::uint64_t seed,
               std::uint64_t index) const;

 private:
  bool holds_i(AxiomId id, const IdSet& f, MaximalityMode mode) const;
  bool holds_b(AxiomId id, const IdSet& f, MaximalityMode mode,
               Scratch& scratch) const;
  bool holds_s(AxiomId id, const IdSet& f, MaximalityMode mode) const;
  IdSet extremal_members(const IdSet& s, MaximalityMode mode,
                         bool maximal) const;
  void compute_max_intersections(const IdSet& f, MaximalityMode mode,
                                 Scratch& scratch) const;

  LatticePtr lat_;
  unsigned num_ids_ = 0;
  unsigned num_atoms_ = 0;
  unsigned num_hyps_ = 0;
  std::vector<std::uint8_t> dim_;
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> meet_;
  std::vector<IdSet> sub_;               // per id: all ids below (incl. self)
  std::vector<IdSet> sup_;               // per id: all ids above (incl. self)
  std::vector<IdSet> dim_mask_;          // per dimension
  std::vector<Id> atoms_;
  std::vector<Id> hyps_;
  std::vector<IdSet> add_atom_outside_;  // [a*H + h]: {a+x : atom x not<= X_h}
  std::vector<IdSet> meet_hyp_outside_;  // [s*A + xi]: {s^X : hyp X not>= x_i}

  struct ChildMap {
    std::shared_ptr<Engine> engine;       // engine of L(q, dim f)
    std::vector<std::uint16_t> to_child;  // parent id (<= f) -> child id
  };
  std::vector<ChildMap> children_;  // per id, when with_children
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qmat::verify_detail

#endif  // QMAT_SRC_ENGINE_HPP_
