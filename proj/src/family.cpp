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

#include "qmat/family.hpp"

#include <algorithm>

namespace qmat {

SubspaceFamily::SubspaceFamily(LatticePtr lattice, std::vector<Id> ids)
    : lattice_(std::move(lattice)), ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  if (!ids_.empty() && ids_.back() >= lattice_->size()) {
    throw std::invalid_argument("family member id outside lattice");
  }
}

SubspaceFamily SubspaceFamily::of(LatticePtr lattice,
                                  const std::vector<Subspace>& members) {
  std::vector<Id> ids;
  ids.reserve(members.size());
  for (const Subspace& s : members) ids.push_back(lattice->id_of(s));
  return SubspaceFamily(std::move(lattice), std::move(ids));
}

bool SubspaceFamily::contains(Id id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool SubspaceFamily::contains(const Subspace& s) const {
  return lattice_->knows(s) && contains(lattice_->id_of(s));
}

std::vector<Subspace> SubspaceFamily::members() const {
  std::vector<Subspace> out;
  out.reserve(ids_.size());
  for (Id id : ids_) out.push_back(lattice_->at(id));
  return out;
}

SubspaceFamily max_incl(const SubspaceFamily& f) {
  std::vector<Id> keep;
  for (Id a : f.ids()) {
    bool maximal = true;
    for (Id b : f.ids()) {
      if (a != b && f.lattice()->at(b).contains(f.lattice()->at(a))) {
        maximal = false;
        break;
      }
    }
    if (maximal) keep.push_back(a);
  }
  return SubspaceFamily(f.lattice(), std::move(keep));
}

SubspaceFamily min_incl(const SubspaceFamily& f) {
  std::vector<Id> keep;
  for (Id a : f.ids()) {
    bool minimal = true;
    for (Id b : f.ids()) {
      if (a != b && f.lattice()->at(a).contains(f.lattice()->at(b))) {
        minimal = false;
        break;
      }
    }
    if (minimal) keep.push_back(a);
  }
  return SubspaceFamily(f.lattice(), std::move(keep));
}

SubspaceFamily restrict_to(const Subspace& x, const SubspaceFamily& f) {
  std::vector<Id> keep;
  for (Id a : f.ids()) {
    if (x.contains(f.lattice()->at(a))) keep.push_back(a);
  }
  return SubspaceFamily(f.lattice(), std::move(keep));
}

SubspaceFamily max_dim_in(const Subspace& x, const SubspaceFamily& f) {
  std::int64_t best = -1;
  for (Id a : f.ids()) {
    const Subspace& s = f.lattice()->at(a);
    if (x.contains(s)) best = std::max<std::int64_t>(best, s.dim());
  }
  std::vector<Id> keep;
  if (best >= 0) {
    for (Id a : f.ids()) {
      const Subspace& s = f.lattice()->at(a);
      if (s.dim() == static_cast<std::uint32_t>(best) && x.contains(s)) {
        keep.push_back(a);
      }
    }
  }
  return SubspaceFamily(f.lattice(), std::move(keep));
}

}  // namespace qmat
