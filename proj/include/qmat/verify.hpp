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

#ifndef QMAT_VERIFY_HPP_
#define QMAT_VERIFY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmat/axioms.hpp"
#include "qmat/family.hpp"

// The theorem harness: stream families over a small lattice, filter by
// hypothesis axioms, and confirm conclusions on every survivor. Two
// interchangeable executions exist: a plain serial scan over the
// reference checkers, and a bitset engine whose family loop is an
// OpenMP-parallel kernel. They produce identical results; the reference
// stays as the test oracle for the engine.
namespace qmat::verify {

enum class FamilyKind { Independent, Bases, Spanning };

enum class FamilyConstraint { All, DownwardClosed, UpwardClosed, Antichain };

// The structural constraint the kind's closure axiom imposes; streaming
// only such families prunes the search space without losing violations.
FamilyConstraint constraint_for(FamilyKind kind);

enum class SearchKind { ExhaustiveAll, ExhaustivePruned, Sampled };

inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr std::uint64_t kDefaultSampleCount = 100000;

struct SearchPlan {
  SearchKind kind = SearchKind::ExhaustiveAll;
  std::uint64_t samples = kDefaultSampleCount;  // Sampled only
  std::uint64_t seed = kDefaultSeed;            // Sampled only
};

// All families for lattices up to 20 subspaces with n <= 2, pruned
// enumeration up to 16 subspaces, sampling beyond.
SearchPlan default_plan(const SubspaceLattice& lattice);

enum class ExecPolicy { Reference, Engine };

enum class CheckKind {
  // Every hypothesis-satisfying family satisfies every conclusion axiom;
  // rank-axiom conclusions apply to the rank derived from the family.
  Implication,
  // B4, B4p, B4pp have one truth value per family.
  B4VariantsAgree,
  // The restriction of the family to each subspace, re-coordinatized,
  // satisfies I1, I2, nI3.
  RestrictionHereditary,
  // Lines of rank zero under the derived rank are exactly the lines of
  // their joint span.
  LoopsFormSubspace,
  // nI3 implies I3 on the independent stream and nB3 implies B3 on the
  // basis stream.
  StrongThirdImpliesThird,
};

struct TheoremSpec {
  std::string name;
  std::string summary;
  FamilyKind kind = FamilyKind::Independent;
  CheckKind check = CheckKind::Implication;
  std::vector<AxiomId> hypotheses;
  std::vector<AxiomId> conclusions;
};

// T1..T12.
const std::vector<TheoremSpec>& theorem_registry();
const TheoremSpec* find_theorem(std::string_view name);

struct Violation {
  std::uint64_t family_index = 0;  // position in the searched stream
  std::vector<Id> family;
  std::vector<AxiomReport> reports;  // failed conclusion reports
  std::string note;                  // non-axiom detail, when applicable
};

struct RunResult {
  std::string name;
  std::uint64_t families_considered = 0;
  std::uint64_t families_satisfying_hypotheses = 0;
  std::vector<Violation> violations;
  double elapsed_seconds = 0.0;
  std::optional<std::uint64_t> seed;  // engaged for sampled searches

  bool held() const { return violations.empty(); }
  // "RESULT T1 checked=32 violations=0 seed=-"
  std::string result_line() const;
};

RunResult run_theorem(const TheoremSpec& spec, const LatticePtr& lattice,
                      const SearchPlan& plan,
                      ExecPolicy policy = ExecPolicy::Engine);
RunResult run_theorem(const TheoremSpec& spec, const LatticePtr& lattice);

// Materialized exhaustive stream of id sets under a constraint, in the
// deterministic stream order (mask order for All, generation order for
// the pruned constraints). Throws GuardExceeded past the cap.
std::vector<std::vector<Id>> enumerate_families(
    const LatticePtr& lattice, FamilyConstraint constraint,
    std::uint64_t cap = 1000000);

struct MineQuery {
  std::vector<AxiomId> satisfy;
  std::vector<AxiomId> violate;
  MaximalityMode mode = MaximalityMode::Dimension;
  std::uint64_t limit = 10;
  bool up_to_iso = false;
};

// Families satisfying every `satisfy` axiom and violating every
// `violate` axiom, in stream order, up to `limit`. The stream constraint
// is inferred from the closure axioms present in `satisfy`; an explicit
// plan overrides the default search plan.
std::vector<SubspaceFamily> mine(const LatticePtr& lattice,
                                 const MineQuery& query,
                                 const SearchPlan* plan = nullptr);

// Number of families satisfying every axiom of the system, optionally
// counted up to lattice automorphism.
std::uint64_t census(const LatticePtr& lattice,
                     const std::vector<AxiomId>& axioms,
                     bool up_to_iso = false,
                     MaximalityMode mode = MaximalityMode::Dimension);

}  // namespace qmat::verify

#endif  // QMAT_VERIFY_HPP_
