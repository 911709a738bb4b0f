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

#include "qmat/crypto.hpp"

#include <algorithm>

namespace qmat::crypto {

namespace {

void require(const SubspaceFamily& f, std::initializer_list<AxiomId> axioms) {
  for (AxiomId id : axioms) {
    AxiomReport report = check_axiom(id, f);
    if (!report.pass) throw AxiomViolation(std::move(report));
  }
}

void require_rank(const RankFunction& r) {
  for (AxiomId id : {AxiomId::R1, AxiomId::R2, AxiomId::R3}) {
    AxiomReport report = check_rank_axiom(id, r);
    if (!report.pass) throw AxiomViolation(std::move(report));
  }
}

}  // namespace

RankFunction rank_from_independent(const SubspaceFamily& f, unchecked_t) {
  const auto& lat = *f.lattice();
  std::vector<int> values(lat.size(), 0);
  for (Id a = 0; a < lat.size(); ++a) {
    int best = 0;
    for (Id m : f.ids()) {
      if (lat.at(a).contains(lat.at(m))) {
        best = std::max(best, static_cast<int>(lat.dim_of(m)));
      }
    }
    values[a] = best;
  }
  return RankFunction(f.lattice(), std::move(values));
}

RankFunction rank_from_independent(const SubspaceFamily& f) {
  require(f, {AxiomId::I1, AxiomId::I2});
  return rank_from_independent(f, unchecked);
}

SubspaceFamily independent_from_rank(const RankFunction& r, unchecked_t) {
  std::vector<Id> ids;
  for (Id a = 0; a < r.lattice()->size(); ++a) {
    if (r.at(a) == static_cast<int>(r.lattice()->dim_of(a))) ids.push_back(a);
  }
  return SubspaceFamily(r.lattice(), std::move(ids));
}

SubspaceFamily independent_from_rank(const RankFunction& r) {
  require_rank(r);
  return independent_from_rank(r, unchecked);
}

SubspaceFamily bases_from_independent(const SubspaceFamily& f, unchecked_t) {
  return max_incl(f);
}

SubspaceFamily bases_from_independent(const SubspaceFamily& f) {
  require(f, {AxiomId::I1, AxiomId::I2, AxiomId::nI3});
  return bases_from_independent(f, unchecked);
}

SubspaceFamily independent_from_bases(const SubspaceFamily& f, unchecked_t) {
  const auto& lat = *f.lattice();
  std::vector<Id> ids;
  for (Id a = 0; a < lat.size(); ++a) {
    for (Id b : f.ids()) {
      if (lat.at(b).contains(lat.at(a))) {
        ids.push_back(a);
        break;
      }
    }
  }
  return SubspaceFamily(f.lattice(), std::move(ids));
}

SubspaceFamily independent_from_bases(const SubspaceFamily& f) {
  require(f, {AxiomId::B1, AxiomId::B2, AxiomId::nB3});
  return independent_from_bases(f, unchecked);
}

SubspaceFamily spanning_from_bases(const SubspaceFamily& f, unchecked_t) {
  const auto& lat = *f.lattice();
  std::vector<Id> ids;
  for (Id a = 0; a < lat.size(); ++a) {
    for (Id b : f.ids()) {
      if (lat.at(a).contains(lat.at(b))) {
        ids.push_back(a);
        break;
      }
    }
  }
  return SubspaceFamily(f.lattice(), std::move(ids));
}

SubspaceFamily spanning_from_bases(const SubspaceFamily& f) {
  require(f, {AxiomId::B1, AxiomId::B2, AxiomId::nB3});
  return spanning_from_bases(f, unchecked);
}

SubspaceFamily bases_from_spanning(const SubspaceFamily& f, unchecked_t) {
  return min_incl(f);
}

SubspaceFamily bases_from_spanning(const SubspaceFamily& f) {
  require(f, {AxiomId::S1, AxiomId::S2, AxiomId::nS3});
  return bases_from_spanning(f, unchecked);
}

std::string_view to_string(PresentationKind kind) {
  switch (kind) {
    case PresentationKind::Rank: return "rank";
    case PresentationKind::Independent: return "independent";
    case PresentationKind::Bases: return "bases";
    case PresentationKind::Spanning: return "spanning";
  }
  return "?";
}

std::optional<PresentationKind> parse_presentation(std::string_view text) {
  if (text == "rank") return PresentationKind::Rank;
  if (text == "independent") return PresentationKind::Independent;
  if (text == "bases") return PresentationKind::Bases;
  if (text == "spanning") return PresentationKind::Spanning;
  return std::nullopt;
}

Presentation Presentation::of_rank(RankFunction r) {
  return Presentation{PresentationKind::Rank, std::move(r), std::nullopt};
}

Presentation Presentation::of_family(PresentationKind kind,
                                     SubspaceFamily f) {
  if (kind == PresentationKind::Rank) {
    throw std::invalid_argument("rank presentation needs a rank function");
  }
  return Presentation{kind, std::nullopt, std::move(f)};
}

Presentation convert(const Presentation& from, PresentationKind to) {
  // Normalize to independent spaces, then walk outward. Validation
  // happens in the first conversion step touching the payload.
  if (from.kind == to) return from;

  SubspaceFamily indep = [&]() -> SubspaceFamily {
    switch (from.kind) {
      case PresentationKind::Rank:
        return independent_from_rank(*from.rank);
      case PresentationKind::Independent:
        require(*from.family, {AxiomId::I1, AxiomId::I2, AxiomId::nI3});
        return *from.family;
      case PresentationKind::Bases:
        return independent_from_bases(*from.family);
      case PresentationKind::Spanning:
        return independent_from_bases(
            bases_from_spanning(*from.family), unchecked);
    }
    throw std::logic_error("unreachable presentation kind");
  }();

  switch (to) {
    case PresentationKind::Rank:
      return Presentation::of_rank(rank_from_independent(indep, unchecked));
    case PresentationKind::Independent:
      return Presentation::of_family(to, std::move(indep));
    case PresentationKind::Bases:
      return Presentation::of_family(
          to, bases_from_independent(indep, unchecked));
    case PresentationKind::Spanning:
      return Presentation::of_family(
          to, spanning_from_bases(bases_from_independent(indep, unchecked),
                                  unchecked));
  }
  throw std::logic_error("unreachable presentation kind");
}

}  // namespace qmat::crypto
