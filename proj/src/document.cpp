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

#include "qmat/document.hpp"

#include <algorithm>
#include <cctype>

#include "qmat/gf.hpp"

namespace qmat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool valid_family_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

struct LineCursor {
  std::string_view text;
  int number = 0;

  std::optional<std::pair<int, std::string_view>> next() {
    while (!text.empty()) {
      const std::size_t eol = text.find('\n');
      std::string_view raw = text.substr(0, eol);
      text = eol == std::string_view::npos ? std::string_view{}
                                           : text.substr(eol + 1);
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (const std::size_t hash = raw.find('#');
          hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      raw = trim(raw);
      if (!raw.empty()) return std::make_pair(number, raw);
    }
    return std::nullopt;
  }
};

}  // namespace

const SubspaceFamily* Document::find_family(std::string_view name) const {
  for (const FamilySection& section : families) {
    if (section.name == name) return &section.family;
  }
  return nullptr;
}

Document parse_document(std::string_view text) {
  LineCursor cursor{text};

  auto header = cursor.next();
  if (!header) throw ParseError(cursor.number, "missing ground header");
  {
    std::string_view line = header->second;
    if (!line.starts_with("ground")) {
      throw ParseError(header->first, "expected 'ground q=<prime> n=<int>'");
    }
    line = trim(line.substr(6));
    const std::size_t space = line.find_first_of(" \t");
    if (!line.starts_with("q=") || space == std::string_view::npos) {
      throw ParseError(header->first, "expected 'ground q=<prime> n=<int>'");
    }
    const auto qv = parse_uint(trim(line.substr(2, space - 2)));
    std::string_view rest = trim(line.substr(space));
    if (!qv || !rest.starts_with("n=")) {
      throw ParseError(header->first, "expected 'ground q=<prime> n=<int>'");
    }
    const auto nv = parse_uint(trim(rest.substr(2)));
    if (!nv || *nv == 0) {
      throw ParseError(header->first, "n must be a positive integer");
    }
    if (!gf::is_prime(static_cast<std::uint32_t>(*qv))) {
      throw ParseError(header->first,
                       "q must be prime, got " + std::to_string(*qv));
    }
    Document doc;
    doc.lattice = SubspaceLattice::make(static_cast<std::uint32_t>(*qv),
                                        static_cast<std::uint32_t>(*nv));

    enum class Section { None, Family, Rank };
    Section current = Section::None;
    std::vector<Id> family_ids;
    std::string family_name;
    std::vector<int> family_lines;  // line numbers, for duplicate reports
    bool seen_rank = false;
    std::vector<int> rank_values(doc.lattice->size(), -1);

    const auto flush_family = [&]() {
      if (current != Section::Family) return;
      doc.families.push_back(
          {family_name, SubspaceFamily(doc.lattice, family_ids)});
      family_ids.clear();
    };

    while (auto entry = cursor.next()) {
      const auto [line_no, line] = *entry;
      if (line.front() == '[') {
        if (line.back() != ']') {
          throw ParseError(line_no, "unterminated section header");
        }
        const std::string_view inner = trim(line.substr(1, line.size() - 2));
        flush_family();
        if (inner == "rank") {
          if (seen_rank) throw ParseError(line_no, "duplicate rank section");
          seen_rank = true;
          current = Section::Rank;
          continue;
        }
        if (inner.starts_with("family")) {
          const std::string_view name = trim(inner.substr(6));
          if (!valid_family_name(name)) {
            throw ParseError(line_no,
                             "invalid family name '" + std::string(name) +
                                 "'");
          }
          if (doc.find_family(name) != nullptr) {
            throw ParseError(line_no,
                             "duplicate family '" + std::string(name) + "'");
          }
          current = Section::Family;
          family_name = std::string(name);
          continue;
        }
        throw ParseError(line_no, "unknown section '" + std::string(inner) +
                                      "'");
      }

      switch (current) {
        case Section::None:
          throw ParseError(line_no, "content before any section");
        case Section::Family: {
          Subspace s = [&] {
            try {
              return Subspace::parse_literal(doc.q(), doc.n(), line);
            } catch (const std::invalid_argument& e) {
              throw ParseError(line_no, e.what());
            }
          }();
          const Id id = doc.lattice->id_of(s);
          if (std::find(family_ids.begin(), family_ids.end(), id) !=
              family_ids.end()) {
            throw ParseError(line_no, "duplicate subspace " + s.to_literal() +
                                          " in family " + family_name);
          }
          family_ids.push_back(id);
          break;
        }
        case Section::Rank: {
          const std::size_t eq = line.find('=');
          if (eq == std::string_view::npos) {
            throw ParseError(line_no, "expected '<subspace> = <rank>'");
          }
          const std::string_view lhs = trim(line.substr(0, eq));
          const std::string_view rhs = trim(line.substr(eq + 1));
          Subspace s = [&] {
            try {
              return Subspace::parse_literal(doc.q(), doc.n(), lhs);
            } catch (const std::invalid_argument& e) {
              throw ParseError(line_no, e.what());
            }
          }();
          const auto value = parse_uint(rhs);
          if (!value) {
            throw ParseError(line_no, "rank value must be a non-negative "
                                      "integer, got '" +
                                          std::string(rhs) + "'");
          }
          const Id id = doc.lattice->id_of(s);
          if (rank_values[id] >= 0) {
            throw ParseError(line_no,
                             "duplicate rank entry for " + s.to_literal());
          }
          rank_values[id] = static_cast<int>(*value);
          break;
        }
      }
    }
    flush_family();

    if (seen_rank) {
      for (Id id = 0; id < doc.lattice->size(); ++id) {
        if (rank_values[id] < 0) {
          throw ParseError(cursor.number,
                           "rank section is not total: missing " +
                               doc.lattice->at(id).to_literal());
        }
      }
      doc.rank = RankFunction(doc.lattice, std::move(rank_values));
    }
    return doc;
  }
}

std::string render_document(const Document& doc) {
  std::string out = "ground q=" + std::to_string(doc.q()) +
                    " n=" + std::to_string(doc.n()) + "\n";
  for (const auto& section : doc.families) {
    out += "\n[family " + section.name + "]\n";
    for (Id id : section.family.ids()) {
      out += doc.lattice->at(id).to_literal();
      out += '\n';
    }
  }
  if (doc.rank) {
    out += "\n[rank]\n";
    for (Id id = 0; id < doc.lattice->size(); ++id) {
      out += doc.lattice->at(id).to_literal();
      out += " = " + std::to_string(doc.rank->at(id)) + "\n";
    }
  }
  return out;
}

}  // namespace qmat
