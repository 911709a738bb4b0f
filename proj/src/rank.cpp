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

#include "qmat/rank.hpp"

#include <stdexcept>

namespace qmat {

RankFunction::RankFunction(LatticePtr lattice, std::vector<int> values_by_id)
    : lattice_(std::move(lattice)), values_(std::move(values_by_id)) {
  if (values_.size() != lattice_->size()) {
    throw std::invalid_argument(
        "rank function must be total: got " + std::to_string(values_.size()) +
        " values for " + std::to_string(lattice_->size()) + " subspaces");
  }
}

RankFunction RankFunction::from_function(
    LatticePtr lattice, const std::function<int(const Subspace&)>& fn) {
  std::vector<int> values;
  values.reserve(lattice->size());
  for (const Subspace& s : lattice->all()) values.push_back(fn(s));
  return RankFunction(std::move(lattice), std::move(values));
}

RankFunction RankFunction::from_pairs(
    LatticePtr lattice, const std::vector<std::pair<Subspace, int>>& pairs) {
  std::vector<int> values(lattice->size(), 0);
  std::vector<bool> seen(lattice->size(), false);
  for (const auto& [s, v] : pairs) {
    const Id id = lattice->id_of(s);
    if (seen[id]) {
      throw std::invalid_argument("duplicate rank entry for subspace " +
                                  s.to_literal());
    }
    seen[id] = true;
    values[id] = v;
  }
  for (Id id = 0; id < lattice->size(); ++id) {
    if (!seen[id]) {
      throw std::invalid_argument("rank function missing subspace " +
                                  lattice->at(id).to_literal());
    }
  }
  return RankFunction(std::move(lattice), std::move(values));
}

}  // namespace qmat
