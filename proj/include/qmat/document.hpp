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

#ifndef QMAT_DOCUMENT_HPP_
#define QMAT_DOCUMENT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmat/family.hpp"
#include "qmat/rank.hpp"

namespace qmat {

// The .qm text format:
//
//   # comment
//   ground q=2 n=2
//
//   [family I]
//   0
//   10
//
//   [rank]
//   0 = 0
//   10 = 1
//   ...
//
// One header, any number of named family sections, at most one rank
// section (which must cover every subspace of the lattice). Lines hold
// subspace literals: "0" or whitespace-separated generator vectors of
// exactly n digits below q, coordinate 1 leftmost.
struct Document {
  LatticePtr lattice;

  struct FamilySection {
    std::string name;
    SubspaceFamily family;
  };
  std::vector<FamilySection> families;
  std::optional<RankFunction> rank;

  std::uint32_t q() const { return lattice->q(); }
  std::uint32_t n() const { return lattice->n(); }
  const SubspaceFamily* find_family(std::string_view name) const;

  friend bool operator==(const Document& a, const Document& b) {
    if (a.q() != b.q() || a.n() != b.n()) return false;
    if (a.families.size() != b.families.size()) return false;
    for (std::size_t i = 0; i < a.families.size(); ++i) {
      if (a.families[i].name != b.families[i].name ||
          !(a.families[i].family == b.families[i].family)) {
        return false;
      }
    }
    if (a.rank.has_value() != b.rank.has_value()) return false;
    return !a.rank || *a.rank == *b.rank;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Document parse_document(std::string_view text);

// Canonical text: literals in lattice order, sections in document order.
// parse_document(render_document(d)) == d.
std::string render_document(const Document& doc);

}  // namespace qmat

#endif  // QMAT_DOCUMENT_HPP_
