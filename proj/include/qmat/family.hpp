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

#ifndef QMAT_FAMILY_HPP_
#define QMAT_FAMILY_HPP_

#include <vector>

#include "qmat/lattice.hpp"

namespace qmat {

// An immutable finite set of subspaces of one lattice, deduplicated and
// kept in lattice id order.
class SubspaceFamily {
 public:
  SubspaceFamily(LatticePtr lattice, std::vector<Id> ids);
  static SubspaceFamily of(LatticePtr lattice,
                           const std::vector<Subspace>& members);
  static SubspaceFamily empty(LatticePtr lattice) {
    return SubspaceFamily(std::move(lattice), {});
  }

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<Id>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool is_empty() const { return ids_.empty(); }
  bool contains(Id id) const;
  bool contains(const Subspace& s) const;
  const Subspace& member(std::size_t i) const {
    return lattice_->at(ids_[i]);
  }
  std::vector<Subspace> members() const;

  friend bool operator==(const SubspaceFamily& a, const SubspaceFamily& b) {
    return a.ids_ == b.ids_ && a.lattice_->q() == b.lattice_->q() &&
           a.lattice_->n() == b.lattice_->n();
  }

 private:
  LatticePtr lattice_;
  std::vector<Id> ids_;
};

// Members not strictly contained in another member.
SubspaceFamily max_incl(const SubspaceFamily& f);
// Members containing no other member.
SubspaceFamily min_incl(const SubspaceFamily& f);
// Members contained in x whose dimension is maximal among those; empty
// when no member lies inside x.
SubspaceFamily max_dim_in(const Subspace& x, const SubspaceFamily& f);
// Members contained in x.
SubspaceFamily restrict_to(const Subspace& x, const SubspaceFamily& f);

}  // namespace qmat

#endif  // QMAT_FAMILY_HPP_
