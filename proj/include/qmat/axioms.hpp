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

#ifndef QMAT_AXIOMS_HPP_
#define QMAT_AXIOMS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmat/family.hpp"
#include "qmat/rank.hpp"

namespace qmat {

// Every axiom the checkers know. I4pp, B4p, B4pp stand for the primed
// variants I4'', B4', B4''.
enum class AxiomId {
  R1, R2, R3,
  I1, I2, I3, I4, I4pp, nI3,
  B1, B2, B3, B4, B4p, B4pp, nB3,
  S1, S2, S3, S4, nS3,
};

enum class AxiomKind { Rank, Independence, Basis, Spanning };

AxiomKind kind_of(AxiomId id);
std::string_view to_string(AxiomId id);
// Accepts the canonical spelling, the primed form (I4'', B4', B4''), and
// any ASCII case for the letter part.
std::optional<AxiomId> parse_axiom(std::string_view text);

// Where an axiom quantifies over "maximal members" / "maximal
// intersections" / "minimal members", the dimension mode reads these as
// extremal in dimension; the inclusion mode as extremal in the
// containment order.
enum class MaximalityMode { Dimension, Inclusion };

// A concrete violating tuple: role name -> subspace, in quantifier order.
struct Witness {
  std::vector<std::pair<std::string, Subspace>> parts;
};

struct AxiomReport {
  AxiomId axiom;
  bool pass = false;
  std::optional<Witness> witness;  // engaged exactly when pass == false
  MaximalityMode mode = MaximalityMode::Dimension;

  // "I4 PASS" or "I4 FAIL A=01 B=11 I=0 J=0"
  std::string to_line() const;
};

class AxiomViolation : public std::runtime_error {
 public:
  explicit AxiomViolation(AxiomReport report);
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

// Exhaustive literal scans of the definitions, in deterministic lattice
// order; the first violating tuple becomes the witness.
AxiomReport check_rank_axiom(AxiomId id, const RankFunction& r);
AxiomReport check_independence_axiom(
    AxiomId id, const SubspaceFamily& f,
    MaximalityMode mode = MaximalityMode::Dimension);
AxiomReport check_basis_axiom(AxiomId id, const SubspaceFamily& f,
                              MaximalityMode mode = MaximalityMode::Dimension);
AxiomReport check_spanning_axiom(
    AxiomId id, const SubspaceFamily& f,
    MaximalityMode mode = MaximalityMode::Dimension);

// Dispatches on kind_of(id); id must not be a rank axiom.
AxiomReport check_axiom(AxiomId id, const SubspaceFamily& f,
                        MaximalityMode mode = MaximalityMode::Dimension);

// Re-evaluates the axiom's defining condition on the witness tuple of a
// failed report. Returns the truth value of the instantiated statement,
// so a genuine witness yields false.
bool replay_witness(const AxiomReport& report, const SubspaceFamily& f);
bool replay_witness(const AxiomReport& report, const RankFunction& r);

}  // namespace qmat

#endif  // QMAT_AXIOMS_HPP_
