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

#include "qmat/qmatroid.hpp"

#include <algorithm>

namespace qmat {

std::optional<AxiomReport> QMatroid::validate(const RankFunction& rank) {
  for (AxiomId id : {AxiomId::R1, AxiomId::R2, AxiomId::R3}) {
    AxiomReport report = check_rank_axiom(id, rank);
    if (!report.pass) return report;
  }
  return std::nullopt;
}

QMatroid QMatroid::make(RankFunction rank) {
  if (auto report = validate(rank)) throw AxiomViolation(*report);
  return QMatroid(std::move(rank), validated_t{});
}

QMatroid uniform(std::uint32_t k, std::uint32_t n, std::uint32_t q) {
  if (k > n) throw std::invalid_argument("uniform: k exceeds n");
  auto lat = SubspaceLattice::make(q, n);
  return QMatroid::make(RankFunction::from_function(
      lat, [k](const Subspace& s) {
        return static_cast<int>(std::min(k, s.dim()));
      }));
}

SubspaceFamily independent_spaces(const QMatroid& m) {
  std::vector<Id> ids;
  const auto& lat = *m.lattice();
  for (Id id = 0; id < lat.size(); ++id) {
    if (m.rank_of(id) == static_cast<int>(lat.dim_of(id))) ids.push_back(id);
  }
  return SubspaceFamily(m.lattice(), std::move(ids));
}

SubspaceFamily spanning_spaces(const QMatroid& m) {
  std::vector<Id> ids;
  const auto& lat = *m.lattice();
  const int full_rank = m.rank_of(lat.full_id());
  for (Id id = 0; id < lat.size(); ++id) {
    if (m.rank_of(id) == full_rank) ids.push_back(id);
  }
  return SubspaceFamily(m.lattice(), std::move(ids));
}

SubspaceFamily bases(const QMatroid& m) {
  return max_incl(independent_spaces(m));
}

SubspaceFamily loops(const QMatroid& m) {
  std::vector<Id> ids;
  const auto& lat = *m.lattice();
  if (lat.n() == 0) return SubspaceFamily(m.lattice(), {});
  for (Id id = lat.dim_begin(1); id < lat.dim_end(1); ++id) {
    if (m.rank_of(id) == 0) ids.push_back(id);
  }
  return SubspaceFamily(m.lattice(), std::move(ids));
}

Subspace loop_space(const QMatroid& m) {
  const auto& lat = *m.lattice();
  Subspace total = lat.zero_space();
  for (Id id : loops(m).ids()) total = sum(total, lat.at(id));
  // Cross-check the defining property: every line inside the sum is a loop.
  if (lat.n() > 0) {
    for (Id id = lat.dim_begin(1); id < lat.dim_end(1); ++id) {
      if (total.contains(lat.at(id)) && m.rank_of(id) != 0) {
        throw std::logic_error("loops of a validated q-matroid failed to "
                               "fill their span");
      }
    }
  }
  return total;
}

QMatroid dual(const QMatroid& m) {
  const auto& lat = *m.lattice();
  const int full_rank = m.rank_of(lat.full_id());
  return QMatroid::make(RankFunction::from_function(
      m.lattice(), [&](const Subspace& s) {
        return static_cast<int>(s.dim()) - full_rank + m.rank_of(s.perp());
      }));
}

QMatroid restriction(const QMatroid& m, const Subspace& x) {
  const RestrictionMap map = m.lattice()->restriction_map(x);
  return QMatroid::make(RankFunction::from_function(
      map.child, [&](const Subspace& t) {
        return m.rank_of(map.from_child(t));
      }));
}

QMatroid contraction(const QMatroid& m, const Subspace& x) {
  const QuotientMap map = m.lattice()->quotient_map(x);
  const int rank_x = m.rank_of(x);
  return QMatroid::make(RankFunction::from_function(
      map.child, [&](const Subspace& t) {
        return m.rank_of(map.pre_image(t)) - rank_x;
      }));
}

bool are_isomorphic(const QMatroid& m1, const QMatroid& m2) {
  const auto& lat = *m1.lattice();
  if (lat.q() != m2.lattice()->q() || lat.n() != m2.lattice()->n()) {
    throw std::invalid_argument("isomorphism test needs matching (q, n)");
  }
  for (const std::vector<Id>& phi : lat.automorphisms()) {
    bool match = true;
    for (Id id = 0; id < lat.size(); ++id) {
      if (m1.rank_of(id) != m2.rank_of(phi[id])) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

}  // namespace qmat
