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

#include "qmat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "engine.hpp"
#include "qmat/crypto.hpp"

namespace qmat::verify {

using verify_detail::Engine;
using verify_detail::IdSet;
using verify_detail::Scratch;
using verify_detail::splitmix64;

namespace {

constexpr std::uint64_t kAllCapBits = 20;        // 2^20 families at most
constexpr std::uint64_t kPrunedCap = 1000000;

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::vector<Id> ids_of_mask(std::uint64_t mask) {
  std::vector<Id> ids;
  while (mask) {
    ids.push_back(static_cast<Id>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return ids;
}

// Shared sampling protocol: k in [0, L] then k id draws. Both the
// reference closure below and Engine::sample consume the generator
// identically, so the two executions see the same stream.
std::vector<Id> sample_base_ids(std::mt19937_64& rng, std::size_t num_ids) {
  const std::uint64_t k = rng() % (num_ids + 1);
  std::vector<bool> in(num_ids, false);
  for (std::uint64_t i = 0; i < k; ++i) in[rng() % num_ids] = true;
  std::vector<Id> ids;
  for (Id i = 0; i < num_ids; ++i) {
    if (in[i]) ids.push_back(i);
  }
  return ids;
}

std::vector<Id> reference_sample(const SubspaceLattice& lat,
                                 FamilyConstraint constraint,
                                 std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  std::vector<Id> base = sample_base_ids(rng, lat.size());
  std::vector<Id> out;
  switch (constraint) {
    case FamilyConstraint::All:
      return base;
    case FamilyConstraint::DownwardClosed:
      for (Id i = 0; i < lat.size(); ++i) {
        for (Id m : base) {
          if (lat.at(m).contains(lat.at(i))) {
            out.push_back(i);
            break;
          }
        }
      }
      return out;
    case FamilyConstraint::UpwardClosed:
      for (Id i = 0; i < lat.size(); ++i) {
        for (Id m : base) {
          if (lat.at(i).contains(lat.at(m))) {
            out.push_back(i);
            break;
          }
        }
      }
      return out;
    case FamilyConstraint::Antichain:
      for (Id i : base) {
        bool maximal = true;
        for (Id m : base) {
          if (m != i && lat.at(m).contains(lat.at(i))) {
            maximal = false;
            break;
          }
        }
        if (maximal) out.push_back(i);
      }
      return out;
  }
  return out;
}

// Evaluates the spec's conclusions on one hypothesis-satisfying family
// with the reference checkers; a populated Violation means failure. The
// engine path funnels its hits through this, so every reported witness
// is independently recomputed.
std::optional<Violation> reference_violation(const TheoremSpec& spec,
                                             const SubspaceFamily& f,
                                             MaximalityMode mode,
                                             std::uint64_t index) {
  Violation v;
  v.family_index = index;
  v.family = f.ids();
  switch (spec.check) {
    case CheckKind::Implication: {
      for (AxiomId c : spec.conclusions) {
        if (kind_of(c) == AxiomKind::Rank) {
          const RankFunction derived =
              crypto::rank_from_independent(f, crypto::unchecked);
          AxiomReport rep = check_rank_axiom(c, derived);
          if (!rep.pass) v.reports.push_back(std::move(rep));
        } else {
          AxiomReport rep = check_axiom(c, f, mode);
          if (!rep.pass) v.reports.push_back(std::move(rep));
        }
      }
      if (v.reports.empty()) return std::nullopt;
      return v;
    }
    case CheckKind::B4VariantsAgree: {
      AxiomReport r4 = check_basis_axiom(AxiomId::B4, f, mode);
      AxiomReport r4p = check_basis_axiom(AxiomId::B4p, f, mode);
      AxiomReport r4pp = check_basis_axiom(AxiomId::B4pp, f, mode);
      if (r4.pass == r4p.pass && r4p.pass == r4pp.pass) return std::nullopt;
      v.note = "B4/B4p/B4pp truth values differ";
      v.reports.push_back(std::move(r4));
      v.reports.push_back(std::move(r4p));
      v.reports.push_back(std::move(r4pp));
      return v;
    }
    case CheckKind::RestrictionHereditary: {
      const auto& lat = *f.lattice();
      for (const Subspace& g : lat.all()) {
        const RestrictionMap rmap = lat.restriction_map(g);
        std::vector<Subspace> restricted;
        for (Id m : f.ids()) {
          if (g.contains(lat.at(m))) {
            restricted.push_back(rmap.to_child(lat.at(m)));
          }
        }
        const SubspaceFamily child =
            SubspaceFamily::of(rmap.child, restricted);
        for (AxiomId ax : {AxiomId::I1, AxiomId::I2, AxiomId::nI3}) {
          AxiomReport rep = check_independence_axiom(ax, child);
          if (!rep.pass) {
            v.note = "restriction to " + g.to_literal() + " fails";
            v.reports.push_back(std::move(rep));
            return v;
          }
        }
      }
      return std::nullopt;
    }
    case CheckKind::LoopsFormSubspace: {
      const RankFunction derived =
          crypto::rank_from_independent(f, crypto::unchecked);
      const auto& lat = *f.lattice();
      Subspace span = lat.zero_space();
      if (lat.n() == 0) return std::nullopt;
      for (Id a = lat.dim_begin(1); a < lat.dim_end(1); ++a) {
        if (derived.at(a) == 0) span = sum(span, lat.at(a));
      }
      for (Id a = lat.dim_begin(1); a < lat.dim_end(1); ++a) {
        if (span.contains(lat.at(a)) && derived.at(a) != 0) {
          v.note = "line " + lat.at(a).to_literal() +
                   " lies in the loop span but has derived rank " +
                   std::to_string(derived.at(a));
          return v;
        }
      }
      return std::nullopt;
    }
    case CheckKind::StrongThirdImpliesThird:
      throw std::logic_error("paired check handled at run level");
  }
  return std::nullopt;
}

bool reference_hypotheses_hold(const TheoremSpec& spec,
                               const SubspaceFamily& f,
                               MaximalityMode mode) {
  for (AxiomId h : spec.hypotheses) {
    if (!check_axiom(h, f, mode).pass) return false;
  }
  return true;
}

RunResult run_reference(const TheoremSpec& spec, const LatticePtr& lattice,
                        const SearchPlan& plan, MaximalityMode mode) {
  RunResult res;
  res.name = spec.name;
  const FamilyConstraint constraint = constraint_for(spec.kind);

  const auto handle = [&](std::uint64_t index, const std::vector<Id>& ids) {
    ++res.families_considered;
    const SubspaceFamily f(lattice, ids);
    if (!reference_hypotheses_hold(spec, f, mode)) return;
    ++res.families_satisfying_hypotheses;
    if (auto v = reference_violation(spec, f, mode, index)) {
      res.violations.push_back(std::move(*v));
    }
  };

  switch (plan.kind) {
    case SearchKind::ExhaustiveAll: {
      if (lattice->size() > kAllCapBits) {
        throw GuardExceeded("exhaustive-all search needs at most " +
                            std::to_string(kAllCapBits) + " subspaces");
      }
      const std::uint64_t total = std::uint64_t{1} << lattice->size();
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        handle(mask, ids_of_mask(mask));
      }
      break;
    }
    case SearchKind::ExhaustivePruned: {
      const auto fams = enumerate_families(lattice, constraint, kPrunedCap);
      for (std::uint64_t i = 0; i < fams.size(); ++i) handle(i, fams[i]);
      break;
    }
    case SearchKind::Sampled: {
      res.seed = plan.seed;
      for (std::uint64_t i = 0; i < plan.samples; ++i) {
        handle(i, reference_sample(*lattice, constraint, plan.seed, i));
      }
      break;
    }
  }
  return res;
}

bool engine_conclusions_hold(const Engine& eng, const TheoremSpec& spec,
                             const IdSet& f, MaximalityMode mode,
                             Scratch& scratch) {
  switch (spec.check) {
    case CheckKind::Implication:
      for (AxiomId c : spec.conclusions) {
        if (!eng.holds(c, f, mode, scratch)) return false;
      }
      return true;
    case CheckKind::B4VariantsAgree: {
      const bool v4 = eng.holds(AxiomId::B4, f, mode, scratch);
      const bool v4p = eng.holds(AxiomId::B4p, f, mode, scratch);
      const bool v4pp = eng.holds(AxiomId::B4pp, f, mode, scratch);
      return v4 == v4p && v4p == v4pp;
    }
    case CheckKind::RestrictionHereditary:
      return eng.restriction_hereditary(f, scratch);
    case CheckKind::LoopsFormSubspace:
      return eng.loops_fill_span(f, scratch);
    case CheckKind::StrongThirdImpliesThird:
      throw std::logic_error("paired check handled at run level");
  }
  return true;
}

RunResult run_engine(const TheoremSpec& spec, const LatticePtr& lattice,
                     const SearchPlan& plan, MaximalityMode mode) {
  RunResult res;
  res.name = spec.name;
  const FamilyConstraint constraint = constraint_for(spec.kind);
  const Engine eng(lattice,
                   spec.check == CheckKind::RestrictionHereditary);

  std::vector<IdSet> materialized;
  std::uint64_t total = 0;
  switch (plan.kind) {
    case SearchKind::ExhaustiveAll:
      if (lattice->size() > kAllCapBits) {
        throw GuardExceeded("exhaustive-all search needs at most " +
                            std::to_string(kAllCapBits) + " subspaces");
      }
      total = std::uint64_t{1} << lattice->size();
      break;
    case SearchKind::ExhaustivePruned:
      materialized = eng.enumerate(constraint, kPrunedCap);
      total = materialized.size();
      break;
    case SearchKind::Sampled:
      res.seed = plan.seed;
      total = plan.samples;
      break;
  }

  const auto fetch = [&](std::uint64_t index) -> IdSet {
    switch (plan.kind) {
      case SearchKind::ExhaustiveAll: {
        IdSet s;
        s.w[0] = index;
        return s;
      }
      case SearchKind::ExhaustivePruned:
        return materialized[index];
      case SearchKind::Sampled:
        return eng.sample(constraint, plan.seed, index);
    }
    return {};
  };

  std::uint64_t hyp_count = 0;
  std::vector<std::vector<std::pair<std::uint64_t, IdSet>>> hits;
#ifdef _OPENMP
  hits.resize(omp_get_max_threads());
#else
  hits.resize(1);
#endif

#ifdef _OPENMP
#pragma omp parallel reduction(+ : hyp_count)
#endif
  {
#ifdef _OPENMP
    const int tid = omp_get_thread_num();
#else
    const int tid = 0;
#endif
    Scratch scratch;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64)
#endif
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total);
         ++idx) {
      const IdSet f = fetch(idx);
      bool hyp_ok = true;
      for (AxiomId h : spec.hypotheses) {
        if (!eng.holds(h, f, mode, scratch)) {
          hyp_ok = false;
          break;
        }
      }
      if (!hyp_ok) continue;
      ++hyp_count;
      if (!engine_conclusions_hold(eng, spec, f, mode, scratch)) {
        hits[tid].emplace_back(static_cast<std::uint64_t>(idx), f);
      }
    }
  }

  res.families_considered = total;
  res.families_satisfying_hypotheses = hyp_count;

  std::vector<std::pair<std::uint64_t, IdSet>> all_hits;
  for (auto& h : hits) {
    all_hits.insert(all_hits.end(), h.begin(), h.end());
  }
  std::sort(all_hits.begin(), all_hits.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [index, f] : all_hits) {
    const SubspaceFamily fam(lattice, f.ids());
    auto v = reference_violation(spec, fam, mode, index);
    if (!v) {
      throw std::logic_error(
          "engine flagged a family the reference checkers accept (" +
          spec.name + ")");
    }
    res.violations.push_back(std::move(*v));
  }
  return res;
}

RunResult run_single(const TheoremSpec& spec, const LatticePtr& lattice,
                     const SearchPlan& plan, ExecPolicy policy,
                     MaximalityMode mode) {
  return policy == ExecPolicy::Reference
             ? run_reference(spec, lattice, plan, mode)
             : run_engine(spec, lattice, plan, mode);
}

}  // namespace

FamilyConstraint constraint_for(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Independent:
      return FamilyConstraint::DownwardClosed;
    case FamilyKind::Bases:
      return FamilyConstraint::Antichain;
    case FamilyKind::Spanning:
      return FamilyConstraint::UpwardClosed;
  }
  return FamilyConstraint::All;
}

SearchPlan default_plan(const SubspaceLattice& lattice) {
  if (lattice.n() <= 2 && lattice.size() <= kAllCapBits) {
    return {SearchKind::ExhaustiveAll, 0, 0};
  }
  if (lattice.size() <= 16) {
    return {SearchKind::ExhaustivePruned, 0, 0};
  }
  return {SearchKind::Sampled, kDefaultSampleCount, kDefaultSeed};
}

const std::vector<TheoremSpec>& theorem_registry() {
  static const std::vector<TheoremSpec> registry = {
      {"T1", "I1,I2,I4 => I3", FamilyKind::Independent,
       CheckKind::Implication,
       {AxiomId::I1, AxiomId::I2, AxiomId::I4},
       {AxiomId::I3}},
      {"T2", "B1,B2,B4 => B3", FamilyKind::Bases, CheckKind::Implication,
       {AxiomId::B1, AxiomId::B2, AxiomId::B4},
       {AxiomId::B3}},
      {"T3", "S1,S2,S4 => S3", FamilyKind::Spanning, CheckKind::Implication,
       {AxiomId::S1, AxiomId::S2, AxiomId::S4},
       {AxiomId::S3}},
      {"T4", "I1,I2,I4 => nI3", FamilyKind::Independent,
       CheckKind::Implication,
       {AxiomId::I1, AxiomId::I2, AxiomId::I4},
       {AxiomId::nI3}},
      {"T5", "I1,I2,nI3 => I4 and a valid derived rank",
       FamilyKind::Independent, CheckKind::Implication,
       {AxiomId::I1, AxiomId::I2, AxiomId::nI3},
       {AxiomId::I4, AxiomId::R1, AxiomId::R2, AxiomId::R3}},
      {"T6", "B1,B2,B4 => nB3", FamilyKind::Bases, CheckKind::Implication,
       {AxiomId::B1, AxiomId::B2, AxiomId::B4},
       {AxiomId::nB3}},
      {"T7", "B1,B2,nB3 => B4", FamilyKind::Bases, CheckKind::Implication,
       {AxiomId::B1, AxiomId::B2, AxiomId::nB3},
       {AxiomId::B4}},
      {"T8", "under B1,B2,B3: B4 <=> B4p <=> B4pp", FamilyKind::Bases,
       CheckKind::B4VariantsAgree,
       {AxiomId::B1, AxiomId::B2, AxiomId::B3},
       {AxiomId::B4, AxiomId::B4p, AxiomId::B4pp}},
      {"T9", "S1,S2,nS3 => S3,S4", FamilyKind::Spanning,
       CheckKind::Implication,
       {AxiomId::S1, AxiomId::S2, AxiomId::nS3},
       {AxiomId::S3, AxiomId::S4}},
      {"T10", "I1,I2,nI3 hold in every restriction",
       FamilyKind::Independent, CheckKind::RestrictionHereditary,
       {AxiomId::I1, AxiomId::I2, AxiomId::nI3},
       {}},
      {"T11", "derived loops fill their span", FamilyKind::Independent,
       CheckKind::LoopsFormSubspace,
       {AxiomId::I1, AxiomId::I2, AxiomId::nI3},
       {}},
      {"T12", "nI3 => I3 and nB3 => B3", FamilyKind::Independent,
       CheckKind::StrongThirdImpliesThird,
       {},
       {}},
  };
  return registry;
}

const TheoremSpec* find_theorem(std::string_view name) {
  for (const TheoremSpec& spec : theorem_registry()) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

std::string RunResult::result_line() const {
  return "RESULT " + name + " checked=" + std::to_string(families_considered) +
         " violations=" + std::to_string(violations.size()) + " seed=" +
         (seed ? std::to_string(*seed) : std::string("-"));
}

RunResult run_theorem(const TheoremSpec& spec, const LatticePtr& lattice,
                      const SearchPlan& plan, ExecPolicy policy) {
  const auto start = std::chrono::steady_clock::now();
  const MaximalityMode mode = MaximalityMode::Dimension;
  RunResult res;
  if (spec.check == CheckKind::StrongThirdImpliesThird) {
    TheoremSpec part_i{spec.name, "nI3 => I3", FamilyKind::Independent,
                       CheckKind::Implication,
                       {AxiomId::nI3},
                       {AxiomId::I3}};
    TheoremSpec part_b{spec.name, "nB3 => B3", FamilyKind::Bases,
                       CheckKind::Implication,
                       {AxiomId::nB3},
                       {AxiomId::B3}};
    RunResult ri = run_single(part_i, lattice, plan, policy, mode);
    RunResult rb = run_single(part_b, lattice, plan, policy, mode);
    res.name = spec.name;
    res.families_considered =
        ri.families_considered + rb.families_considered;
    res.families_satisfying_hypotheses =
        ri.families_satisfying_hypotheses + rb.families_satisfying_hypotheses;
    res.violations = std::move(ri.violations);
    for (Violation& v : rb.violations) {
      v.family_index += ri.families_considered;
      res.violations.push_back(std::move(v));
    }
    res.seed = ri.seed;
  } else {
    res = run_single(spec, lattice, plan, policy, mode);
  }
  res.elapsed_seconds = seconds_since(start);
  return res;
}

RunResult run_theorem(const TheoremSpec& spec, const LatticePtr& lattice) {
  return run_theorem(spec, lattice, default_plan(*lattice));
}

std::vector<std::vector<Id>> enumerate_families(const LatticePtr& lattice,
                                                FamilyConstraint constraint,
                                                std::uint64_t cap) {
  const std::size_t num_ids = lattice->size();
  std::vector<std::vector<Id>> out;

  if (constraint == FamilyConstraint::All) {
    if (num_ids > kAllCapBits ||
        (std::uint64_t{1} << num_ids) > cap) {
      throw GuardExceeded("2^" + std::to_string(num_ids) +
                          " families exceed the enumeration cap");
    }
    const std::uint64_t total = std::uint64_t{1} << num_ids;
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      out.push_back(ids_of_mask(mask));
    }
    return out;
  }

  // Antichain DFS in ascending id order; closures are taken per emitted
  // antichain. Matches the engine's stream element for element.
  const auto comparable = [&](Id a, Id b) {
    return lattice->at(a).contains(lattice->at(b)) ||
           lattice->at(b).contains(lattice->at(a));
  };
  std::vector<Id> chain;
  const auto emit = [&]() {
    std::vector<Id> ids;
    switch (constraint) {
      case FamilyConstraint::Antichain:
        ids = chain;
        break;
      case FamilyConstraint::DownwardClosed:
        for (Id i = 0; i < num_ids; ++i) {
          for (Id m : chain) {
            if (lattice->at(m).contains(lattice->at(i))) {
              ids.push_back(i);
              break;
            }
          }
        }
        break;
      case FamilyConstraint::UpwardClosed:
        for (Id i = 0; i < num_ids; ++i) {
          for (Id m : chain) {
            if (lattice->at(i).contains(lattice->at(m))) {
              ids.push_back(i);
              break;
            }
          }
        }
        break;
      default:
        break;
    }
    if (out.size() >= cap) {
      throw GuardExceeded("family enumeration exceeds cap " +
                          std::to_string(cap));
    }
    out.push_back(std::move(ids));
  };
  const auto dfs = [&](auto&& self, Id next) -> void {
    emit();
    for (Id i = next; i < num_ids; ++i) {
      bool ok = true;
      for (Id m : chain) {
        if (comparable(i, m)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chain.push_back(i);
      self(self, i + 1);
      chain.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

namespace {

FamilyConstraint infer_constraint(const std::vector<AxiomId>& satisfy) {
  for (AxiomId id : satisfy) {
    if (id == AxiomId::I2) return FamilyConstraint::DownwardClosed;
  }
  for (AxiomId id : satisfy) {
    if (id == AxiomId::S2) return FamilyConstraint::UpwardClosed;
  }
  for (AxiomId id : satisfy) {
    if (id == AxiomId::B2) return FamilyConstraint::Antichain;
  }
  return FamilyConstraint::All;
}

// Lexicographically smallest image of the member list under the lattice
// automorphism group; canonical key of the isomorphism class.
std::vector<Id> orbit_min(const std::vector<Id>& ids,
                          const std::vector<std::vector<Id>>& autos) {
  if (autos.empty()) return ids;
  std::vector<Id> best;
  std::vector<Id> image(ids.size());
  bool first = true;
  for (const auto& perm : autos) {
    for (std::size_t i = 0; i < ids.size(); ++i) image[i] = perm[ids[i]];
    std::sort(image.begin(), image.end());
    if (first || image < best) {
      best = image;
      first = false;
    }
  }
  return best;
}

template <typename Fn>
void scan_families(const LatticePtr& lattice, FamilyConstraint constraint,
                   const SearchPlan& plan, const Engine& eng, Fn&& fn) {
  switch (plan.kind) {
    case SearchKind::ExhaustiveAll: {
      if (lattice->size() > kAllCapBits) {
        throw GuardExceeded("exhaustive-all search needs at most " +
                            std::to_string(kAllCapBits) + " subspaces");
      }
      const std::uint64_t total = std::uint64_t{1} << lattice->size();
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        IdSet s;
        s.w[0] = mask;
        if (!fn(s)) return;
      }
      return;
    }
    case SearchKind::ExhaustivePruned: {
      for (const IdSet& s : eng.enumerate(constraint, kPrunedCap)) {
        if (!fn(s)) return;
      }
      return;
    }
    case SearchKind::Sampled: {
      for (std::uint64_t i = 0; i < plan.samples; ++i) {
        if (!fn(eng.sample(constraint, plan.seed, i))) return;
      }
      return;
    }
  }
}

}  // namespace

std::vector<SubspaceFamily> mine(const LatticePtr& lattice,
                                 const MineQuery& query,
                                 const SearchPlan* plan) {
  const Engine eng(lattice, false);
  const FamilyConstraint constraint = infer_constraint(query.satisfy);
  SearchPlan effective = plan ? *plan : default_plan(*lattice);
  if (!plan && constraint != FamilyConstraint::All &&
      effective.kind == SearchKind::ExhaustiveAll) {
    // The inferred closure lets the pruned stream stand in for the full
    // power set without losing any qualifying family.
    effective.kind = SearchKind::ExhaustivePruned;
  }

  const std::vector<std::vector<Id>>* autos = nullptr;
  if (query.up_to_iso) autos = &lattice->automorphisms();

  std::vector<SubspaceFamily> found;
  std::set<std::vector<Id>> seen_classes;
  Scratch scratch;
  scan_families(lattice, constraint, effective, eng, [&](const IdSet& f) {
    for (AxiomId id : query.satisfy) {
      if (!eng.holds(id, f, query.mode, scratch)) return true;
    }
    for (AxiomId id : query.violate) {
      if (eng.holds(id, f, query.mode, scratch)) return true;
    }
    std::vector<Id> ids = f.ids();
    if (autos) {
      std::vector<Id> key = orbit_min(ids, *autos);
      if (!seen_classes.insert(std::move(key)).second) return true;
    }
    found.emplace_back(lattice, std::move(ids));
    return found.size() < query.limit;
  });
  return found;
}

std::uint64_t census(const LatticePtr& lattice,
                     const std::vector<AxiomId>& axioms, bool up_to_iso,
                     MaximalityMode mode) {
  const Engine eng(lattice, false);
  const FamilyConstraint constraint = infer_constraint(axioms);
  SearchPlan plan = default_plan(*lattice);
  if (plan.kind == SearchKind::Sampled) {
    throw GuardExceeded("census needs an exhaustive search space");
  }
  if (constraint != FamilyConstraint::All &&
      plan.kind == SearchKind::ExhaustiveAll) {
    plan.kind = SearchKind::ExhaustivePruned;
  }

  const std::vector<std::vector<Id>>* autos = nullptr;
  if (up_to_iso) autos = &lattice->automorphisms();

  std::uint64_t count = 0;
  std::set<std::vector<Id>> seen_classes;
  Scratch scratch;
  scan_families(lattice, constraint, plan, eng, [&](const IdSet& f) {
    for (AxiomId id : axioms) {
      if (!eng.holds(id, f, mode, scratch)) return true;
    }
    if (autos) {
      seen_classes.insert(orbit_min(f.ids(), *autos));
    } else {
      ++count;
    }
    return true;
  });
  return up_to_iso ? seen_classes.size() : count;
}

}  // namespace qmat::verify
