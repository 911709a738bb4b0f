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

#ifndef QMAT_RANK_HPP_
#define QMAT_RANK_HPP_

#include <functional>
#include <utility>
#include <vector>

#include "qmat/lattice.hpp"

namespace qmat {

// A total integer map on L(E), stored densely by lattice id. Totality is
// enforced at construction; no validation of rank axioms happens here.
class RankFunction {
 public:
  RankFunction(LatticePtr lattice, std::vector<int> values_by_id);
  static RankFunction from_function(
      LatticePtr lattice, const std::function<int(const Subspace&)>& fn);
  // Builds from explicit (subspace, value) pairs; every subspace of the
  // lattice must appear exactly once.
  static RankFunction from_pairs(
      LatticePtr lattice,
      const std::vector<std::pair<Subspace, int>>& pairs);

  const LatticePtr& lattice() const { return lattice_; }
  int at(Id id) const { return values_[id]; }
  int at(const Subspace& s) const { return values_[lattice_->id_of(s)]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const RankFunction& a, const RankFunction& b) {
    return a.lattice_->q() == b.lattice_->q() &&
           a.lattice_->n() == b.lattice_->n() && a.values_ == b.values_;
  }

 private:
  LatticePtr lattice_;
  std::vector<int> values_;
};

}  // namespace qmat

#endif  // QMAT_RANK_HPP_
