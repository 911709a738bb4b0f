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

#ifndef QMAT_CRYPTO_HPP_
#define QMAT_CRYPTO_HPP_

#include <optional>
#include <string_view>

#include "qmat/axioms.hpp"
#include "qmat/qmatroid.hpp"

// Conversions between the four equivalent presentations of a q-matroid:
// rank function, independent spaces, bases, spanning spaces. Each
// conversion validates its precondition axioms and throws AxiomViolation
// with the offending report; the Unchecked overloads skip validation for
// callers that deliberately feed families outside the axioms.
namespace qmat::crypto {

struct unchecked_t {};
inline constexpr unchecked_t unchecked{};

// r(A) = max dimension of a family member inside A. Requires (I1), (I2).
RankFunction rank_from_independent(const SubspaceFamily& f);
RankFunction rank_from_independent(const SubspaceFamily& f, unchecked_t);

// {A : r(A) = dim A}. Requires (R1)-(R3).
SubspaceFamily independent_from_rank(const RankFunction& r);
SubspaceFamily independent_from_rank(const RankFunction& r, unchecked_t);

// Inclusion-maximal members. Requires (I1), (I2), (nI3).
SubspaceFamily bases_from_independent(const SubspaceFamily& f);
SubspaceFamily bases_from_independent(const SubspaceFamily& f, unchecked_t);

// Downward closure. Requires (B1), (B2), (nB3).
SubspaceFamily independent_from_bases(const SubspaceFamily& f);
SubspaceFamily independent_from_bases(const SubspaceFamily& f, unchecked_t);

// Upward closure. Requires (B1), (B2), (nB3).
SubspaceFamily spanning_from_bases(const SubspaceFamily& f);
SubspaceFamily spanning_from_bases(const SubspaceFamily& f, unchecked_t);

// Inclusion-minimal members. Requires (S1), (S2), (nS3).
SubspaceFamily bases_from_spanning(const SubspaceFamily& f);
SubspaceFamily bases_from_spanning(const SubspaceFamily& f, unchecked_t);

enum class PresentationKind { Rank, Independent, Bases, Spanning };

std::string_view to_string(PresentationKind kind);
std::optional<PresentationKind> parse_presentation(std::string_view text);

// One validated presentation of a q-matroid, payload per kind.
struct Presentation {
  PresentationKind kind;
  std::optional<RankFunction> rank;     // engaged iff kind == Rank
  std::optional<SubspaceFamily> family; // engaged otherwise

  static Presentation of_rank(RankFunction r);
  static Presentation of_family(PresentationKind kind, SubspaceFamily f);
};

// Routes through the conversion chain rank <-> independent <-> bases
// <-> spanning, validating the source presentation.
Presentation convert(const Presentation& from, PresentationKind to);

}  // namespace qmat::crypto

#endif  // QMAT_CRYPTO_HPP_
