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

#include "qmat/axioms.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

namespace qmat {

namespace {

struct AxiomName {
  AxiomId id;
  std::string_view canonical;
  std::string_view primed;  // empty when there is no primed spelling
};

constexpr std::array<AxiomName, 21> kNames{{
    {AxiomId::R1, "R1", ""},     {AxiomId::R2, "R2", ""},
    {AxiomId::R3, "R3", ""},     {AxiomId::I1, "I1", ""},
    {AxiomId::I2, "I2", ""},     {AxiomId::I3, "I3", ""},
    {AxiomId::I4, "I4", ""},     {AxiomId::I4pp, "I4pp", "I4''"},
    {AxiomId::nI3, "nI3", ""},   {AxiomId::B1, "B1", ""},
    {AxiomId::B2, "B2", ""},     {AxiomId::B3, "B3", ""},
    {AxiomId::B4, "B4", ""},     {AxiomId::B4p, "B4p", "B4'"},
    {AxiomId::B4pp, "B4pp", "B4''"}, {AxiomId::nB3, "nB3", ""},
    {AxiomId::S1, "S1", ""},     {AxiomId::S2, "S2", ""},
    {AxiomId::S3, "S3", ""},     {AxiomId::S4, "S4", ""},
    {AxiomId::nS3, "nS3", ""},
}};

AxiomReport passed(AxiomId id, MaximalityMode mode) {
  return AxiomReport{id, true, std::nullopt, mode};
}

AxiomReport failed(AxiomId id, MaximalityMode mode, Witness w) {
  return AxiomReport{id, false, std::move(w), mode};
}

Witness wit(std::initializer_list<std::pair<std::string, Subspace>> parts) {
  Witness w;
  w.parts.assign(parts.begin(), parts.end());
  return w;
}

const Subspace& role(const Witness& w, std::string_view name) {
  for (const auto& [r, s] : w.parts) {
    if (r == name) return s;
  }
  throw std::logic_error("witness lacks role " + std::string(name));
}

std::span<const Subspace> atoms(const SubspaceLattice& lat) {
  return lat.n() == 0 ? std::span<const Subspace>{} : lat.of_dim(1);
}

std::vector<Subspace> hyperplanes(const SubspaceLattice& lat) {
  return lat.hyperplanes();
}

// Members of f inside a, extremal per mode.
std::vector<Subspace> max_members_in(const Subspace& a,
                                     const SubspaceFamily& f,
                                     MaximalityMode mode) {
  if (mode == MaximalityMode::Dimension) return max_dim_in(a, f).members();
  return max_incl(restrict_to(a, f)).members();
}

// Members of f containing a, extremal per mode.
std::vector<Subspace> min_members_over(const Subspace& a,
                                       const SubspaceFamily& f,
                                       MaximalityMode mode) {
  std::vector<Id> over;
  for (Id id : f.ids()) {
    if (f.lattice()->at(id).contains(a)) over.push_back(id);
  }
  SubspaceFamily subset(f.lattice(), std::move(over));
  if (subset.is_empty()) return {};
  if (mode == MaximalityMode::Inclusion) return min_incl(subset).members();
  std::uint32_t best = UINT32_MAX;
  for (Id id : subset.ids()) best = std::min(best, f.lattice()->dim_of(id));
  std::vector<Subspace> out;
  for (Id id : subset.ids()) {
    if (f.lattice()->dim_of(id) == best) out.push_back(f.lattice()->at(id));
  }
  return out;
}

// The set {b cap a : b in f}, extremal per mode. "Maximal intersection of
// a member of the family with a" is never formalized in terms of which
// member realizes it, so the set of intersection values is what gets
// ranked.
std::vector<Subspace> max_intersections(const Subspace& a,
                                        const SubspaceFamily& f,
                                        MaximalityMode mode) {
  std::set<Subspace> values;
  for (Id id : f.ids()) values.insert(intersect(f.lattice()->at(id), a));
  if (values.empty()) return {};
  std::vector<Subspace> all(values.begin(), values.end());
  std::vector<Subspace> out;
  if (mode == MaximalityMode::Dimension) {
    std::uint32_t best = 0;
    for (const Subspace& s : all) best = std::max(best, s.dim());
    for (const Subspace& s : all) {
      if (s.dim() == best) out.push_back(s);
    }
  } else {
    for (const Subspace& s : all) {
      bool maximal = true;
      for (const Subspace& t : all) {
        if (!(t == s) && t.contains(s)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

// ---- axiom bodies: the existential part, shared by scan and replay ----

bool i3_body(const SubspaceFamily& f, const Subspace& i, const Subspace& j) {
  for (const Subspace& x : atoms(*f.lattice())) {
    if (j.contains(x) && !i.contains(x) && f.contains(sum(i, x))) return true;
  }
  return false;
}

bool i4_body(const SubspaceFamily& f, const Subspace& a, const Subspace& b,
             const Subspace& i, const Subspace& j, MaximalityMode mode) {
  const Subspace ij = sum(i, j);
  for (const Subspace& k : max_members_in(sum(a, b), f, mode)) {
    if (ij.contains(k)) return true;
  }
  return false;
}

bool i4pp_body(const SubspaceFamily& f, const Subspace& a, const Subspace& i,
               const Subspace& x, MaximalityMode mode) {
  const Subspace xi = sum(x, i);
  for (const Subspace& j : max_members_in(sum(a, x), f, mode)) {
    if (xi.contains(j)) return true;
  }
  return false;
}

bool ni3_body(const SubspaceFamily& f, const Subspace& i, const Subspace& j) {
  for (const Subspace& xspace : hyperplanes(*f.lattice())) {
    if (!xspace.contains(i) || xspace.contains(j)) continue;
    bool all_in = true;
    for (const Subspace& v : atoms(*f.lattice())) {
      if (xspace.contains(v)) continue;
      if (!f.contains(sum(i, v))) {
        all_in = false;
        break;
      }
    }
    if (all_in) return true;
  }
  return false;
}

bool b3_body(const SubspaceFamily& f, const Subspace& b2, const Subspace& a) {
  for (const Subspace& y : atoms(*f.lattice())) {
    if (b2.contains(y) && f.contains(sum(a, y))) return true;
  }
  return false;
}

bool b4_body(const SubspaceFamily& f, const Subspace& a, const Subspace& b,
             const Subspace& i, const Subspace& j, MaximalityMode mode) {
  const Subspace ij = sum(i, j);
  for (const Subspace& k : max_intersections(sum(a, b), f, mode)) {
    if (ij.contains(k)) return true;
  }
  return false;
}

bool b4p_body(const SubspaceFamily& f, const Subspace& a, const Subspace& b,
              const Subspace& i, MaximalityMode mode) {
  const Subspace ib = sum(i, b);
  for (const Subspace& j : max_intersections(sum(a, b), f, mode)) {
    if (ib.contains(j)) return true;
  }
  return false;
}

bool b4pp_body(const SubspaceFamily& f, const Subspace& a, const Subspace& i,
               const Subspace& x, MaximalityMode mode) {
  const Subspace xi = sum(x, i);
  for (const Subspace& j : max_intersections(sum(a, x), f, mode)) {
    if (xi.contains(j)) return true;
  }
  return false;
}

bool nb3_body(const SubspaceFamily& f, const Subspace& b2, const Subspace& a) {
  for (const Subspace& xspace : hyperplanes(*f.lattice())) {
    if (!xspace.contains(a) || xspace.contains(b2)) continue;
    bool all_in = true;
    for (const Subspace& v : atoms(*f.lattice())) {
      if (xspace.contains(v)) continue;
      if (!f.contains(sum(a, v))) {
        all_in = false;
        break;
      }
    }
    if (all_in) return true;
  }
  return false;
}

bool s3_body(const SubspaceFamily& f, const Subspace& i, const Subspace& j) {
  for (const Subspace& xspace : hyperplanes(*f.lattice())) {
    if (xspace.contains(j) && !xspace.contains(i) &&
        f.contains(intersect(i, xspace))) {
      return true;
    }
  }
  return false;
}

bool s4_body(const SubspaceFamily& f, const Subspace& a, const Subspace& b,
             const Subspace& i, const Subspace& j, MaximalityMode mode) {
  const Subspace ij = intersect(i, j);
  for (const Subspace& k : min_members_over(intersect(a, b), f, mode)) {
    if (k.contains(ij)) return true;
  }
  return false;
}

bool ns3_body(const SubspaceFamily& f, const Subspace& s1,
              const Subspace& s2) {
  for (const Subspace& x : atoms(*f.lattice())) {
    if (!s1.contains(x) || s2.contains(x)) continue;
    bool all_in = true;
    for (const Subspace& xspace : hyperplanes(*f.lattice())) {
      if (xspace.contains(x)) continue;
      if (!f.contains(intersect(xspace, s1))) {
        all_in = false;
        break;
      }
    }
    if (all_in) return true;
  }
  return false;
}

// Codimension-1 subspaces of b1 containing b1 cap b2, the shared
// hypothesis shape of B3 and nB3.
std::vector<Subspace> b3_candidates(const SubspaceLattice& lat,
                                    const Subspace& b1, const Subspace& b2) {
  std::vector<Subspace> out;
  if (b1.dim() == 0) return out;
  const Subspace both = intersect(b1, b2);
  for (const Subspace& a : lat.of_dim(b1.dim() - 1)) {
    if (b1.contains(a) && a.contains(both)) out.push_back(a);
  }
  return out;
}

}  // namespace

AxiomKind kind_of(AxiomId id) {
  switch (id) {
    case AxiomId::R1:
    case AxiomId::R2:
    case AxiomId::R3:
      return AxiomKind::Rank;
    case AxiomId::I1:
    case AxiomId::I2:
    case AxiomId::I3:
    case AxiomId::I4:
    case AxiomId::I4pp:
    case AxiomId::nI3:
      return AxiomKind::Independence;
    case AxiomId::B1:
    case AxiomId::B2:
    case AxiomId::B3:
    case AxiomId::B4:
    case AxiomId::B4p:
    case AxiomId::B4pp:
    case AxiomId::nB3:
      return AxiomKind::Basis;
    default:
      return AxiomKind::Spanning;
  }
}

std::string_view to_string(AxiomId id) {
  for (const auto& entry : kNames) {
    if (entry.id == id) return entry.canonical;
  }
  return "?";
}

std::optional<AxiomId> parse_axiom(std::string_view text) {
  auto eq_icase = [](std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(a[i])) !=
          std::tolower(static_cast<unsigned char>(b[i]))) {
        return false;
      }
    }
    return true;
  };
  for (const auto& entry : kNames) {
    if (eq_icase(text, entry.canonical) ||
        (!entry.primed.empty() && eq_icase(text, entry.primed))) {
      return entry.id;
    }
  }
  return std::nullopt;
}

std::string AxiomReport::to_line() const {
  std::string line(to_string(axiom));
  if (pass) {
    line += " PASS";
  } else {
    line += " FAIL";
    if (witness) {
      for (const auto& [r, s] : witness->parts) {
        line += ' ';
        line += r;
        line += '=';
        line += s.to_literal();
      }
    }
  }
  return line;
}

AxiomViolation::AxiomViolation(AxiomReport report)
    : std::runtime_error(report.to_line()), report_(std::move(report)) {}

AxiomReport check_rank_axiom(AxiomId id, const RankFunction& r) {
  const auto& lat = *r.lattice();
  const MaximalityMode mode = MaximalityMode::Dimension;
  switch (id) {
    case AxiomId::R1:
      for (const Subspace& a : lat.all()) {
        const int v = r.at(a);
        if (v < 0 || v > static_cast<int>(a.dim())) {
          return failed(id, mode, wit({{"A", a}}));
        }
      }
      return passed(id, mode);
    case AxiomId::R2:
      for (const Subspace& a : lat.all()) {
        for (const Subspace& b : lat.all()) {
          if (b.contains(a) && r.at(a) > r.at(b)) {
            return failed(id, mode, wit({{"A", a}, {"B", b}}));
          }
        }
      }
      return passed(id, mode);
    case AxiomId::R3:
      for (const Subspace& a : lat.all()) {
        for (const Subspace& b : lat.all()) {
          if (r.at(sum(a, b)) + r.at(intersect(a, b)) > r.at(a) + r.at(b)) {
            return failed(id, mode, wit({{"A", a}, {"B", b}}));
          }
        }
      }
      return passed(id, mode);
    default:
      throw std::invalid_argument("not a rank axiom: " +
                                  std::string(to_string(id)));
  }
}

AxiomReport check_independence_axiom(AxiomId id, const SubspaceFamily& f,
                                     MaximalityMode mode) {
  const auto& lat = *f.lattice();
  switch (id) {
    case AxiomId::I1:
      return f.is_empty() ? failed(id, mode, Witness{}) : passed(id, mode);
    case AxiomId::I2:
      for (const Subspace& i : lat.all()) {
        for (Id jd : f.ids()) {
          const Subspace& j = lat.at(jd);
          if (j.contains(i) && !f.contains(i)) {
            return failed(id, mode, wit({{"I", i}, {"J", j}}));
          }
        }
      }
      return passed(id, mode);
    case AxiomId::I3:
      for (Id idi : f.ids()) {
        for (Id idj : f.ids()) {
          const Subspace& i = lat.at(idi);
          const Subspace& j = lat.at(idj);
          if (i.dim() < j.dim() && !i3_body(f, i, j)) {
            return failed(id, mode, wit({{"I", i}, {"J", j}}));
          }
        }
      }
      return passed(id, mode);
    case AxiomId::I4:
      for (const Subspace& a : lat.all()) {
        const auto max_a = max_members_in(a, f, mode);
        for (const Subspace& b : lat.all()) {
          const auto max_b = max_members_in(b, f, mode);
          for (const Subspace& i : max_a) {
            for (const Subspace& j : max_b) {
              if (!i4_body(f, a, b, i, j, mode)) {
                return failed(
                    id, mode,
                    wit({{"A", a}, {"B", b}, {"I", i}, {"J", j}}));
              }
            }
          }
        }
      }
      return passed(id, mode);
    case AxiomId::I4pp:
      for (const Subspace& a : lat.all()) {
        for (const Subspace& i : max_members_in(a, f, mode)) {
          for (const Subspace& x : atoms(lat)) {
            if (!i4pp_body(f, a, i, x, mode)) {
              return failed(id, mode, wit({{"A", a}, {"I", i}, {"x", x}}));
            }
          }
        }
      }
      return passed(id, mode);
    case AxiomId::nI3:
      for (Id idi : f.ids()) {
        for (Id idj : f.ids()) {
          const Subspace& i = lat.at(idi);
          const Subspace& j = lat.at(idj);
          if (i.dim() < j.dim() && !ni3_body(f, i, j)) {
            return failed(id, mode, wit({{"I", i}, {"J", j}}));
          }
        }
      }
      return passed(id, mode);
    default:
      throw std::invalid_argument("not an independence axiom: " +
                                  std::string(to_string(id)));
  }
}

AxiomReport check_basis_axiom(AxiomId id, const SubspaceFamily& f,
                              MaximalityMode mode) {
  const auto& lat = *f.lattice();
  switch (id) {
    case AxiomId::B1:
      return f.is_empty() ? failed(id, mode, Witness{}) : passed(id, mode);
    case AxiomId::B2:
      for (Id id1 : f.ids()) {
        for (Id id2 : f.ids()) {
          if (id1 == id2) continue;
          const Subspace& b1 = lat.at(id1);
          const Subspace& b2 = lat.at(id2);
          if (b2.contains(b1)) {
            return failed(id, mode, wit({{"B1", b1}, {"B2", b2}}));
          }
        }
      }
      return passed(id, mode);
    case AxiomId::B3:
      for (Id id1 : f.ids()) {
        for (Id id2 : f.ids()) {
          const Subspace& b1 = lat.at(id1);
          const Subspace& b2 = lat.at(id2);
          for (const Subspace& a : b3_candidates(lat, b1, b2)) {
            if (!b3_body(f, b2, a)) {
              return failed(id, mode, wit({{"B1", b1}, {"B2", b2}, {"A", a}}));
            }
          }
        }
      }
      return passed(id, mode);
    case AxiomId::B4:
      for (const Subspace& a : lat.all()) {
        const auto max_a = max_intersections(a, f, mode);
        for (const Subspace& b : lat.all()) {
          const auto max_b = max_intersections(b, f, mode);
          for (const Subspace& i : max_a) {
            for (const Subspace& j : max_b) {
              if (!b4_body(f, a, b, i, j, mode)) {
                return failed(
                    id, mode,
                    wit({{"A", a}, {"B", b}, {"I", i}, {"J", j}}));
              }
            }
          }
        }
      }
      return passed(id, mode);
    case AxiomId::B4p:
      for (const Subspace& a : lat.all()) {
        const auto max_a = max_intersections(a, f, mode);
        for (const Subspace& b : lat.all()) {
          for (const Subspace& i : max_a) {
            if (!b4p_body(f, a, b, i, mode)) {
              return failed(id, mode, wit({{"A", a}, {"B", b}, {"I", i}}));
            }
          }
        }
      }
      return passed(id, mode);
    case AxiomId::B4pp:
      for (const Subspace& a : lat.all()) {
        for (const Subspace& i : max_intersections(a, f, mode)) {
          for (const Subspace& x : atoms(lat)) {
            if (!b4pp_body(f, a, i, x, mode)) {
              return failed(id, mode, wit({{"A", a}, {"I", i}, {"x", x}}));
            }
          }
        }
      }
      return passed(id, mode);
    case AxiomId::nB3:
      for (Id id1 : f.ids()) {
        for (Id id2 : f.ids()) {
          const Subspace& b1 = lat.at(id1);
          const Subspace& b2 = lat.at(id2);
          for (const Subspace& a : b3_candidates(lat, b1, b2)) {
            if (!nb3_body(f, b2, a)) {
              return failed(id, mode, wit({{"B1", b1}, {"B2", b2}, {"A", a}}));
            }
          }
        }
      }
      return passed(id, mode);
    default:
      throw std::invalid_argument("not a basis axiom: " +
                                  std::string(to_string(id)));
  }
}

AxiomReport check_spanning_axiom(AxiomId id, const SubspaceFamily& f,
                                 MaximalityMode mode) {
  const auto& lat = *f.lattice();
  switch (id) {
    case AxiomId::S1:
      return f.contains(lat.full_id()) ? passed(id, mode)
                                       : failed(id, mode, Witness{});
    case AxiomId::S2:
      for (const Subspace& i : lat.all()) {
        for (Id jd : f.ids()) {
          const Subspace& j = lat.at(jd);
          if (i.contains(j) && !f.contains(i)) {
            return failed(id, mode, wit({{"I", i}, {"J", j}}));
          }
        }
      }
      return passed(id, mode);
    case AxiomId::S3:
      for (Id idi : f.ids()) {
        for (Id idj : f.ids()) {
          const Subspace& i = lat.at(idi);
          const Subspace& j = lat.at(idj);
          if (j.dim() < i.dim() && !s3_body(f, i, j)) {
            return failed(id, mode, wit({{"I", i}, {"J", j}}));
          }
        }
      }
      return passed(id, mode);
    case AxiomId::S4:
      for (const Subspace& a : lat.all()) {
        const auto min_a = min_members_over(a, f, mode);
        for (const Subspace& b : lat.all()) {
          const auto min_b = min_members_over(b, f, mode);
          for (const Subspace& i : min_a) {
            for (const Subspace& j : min_b) {
              if (!s4_body(f, a, b, i, j, mode)) {
                return failed(
                    id, mode,
                    wit({{"A", a}, {"B", b}, {"I", i}, {"J", j}}));
              }
            }
          }
        }
      }
      return passed(id, mode);
    case AxiomId::nS3:
      for (Id id1 : f.ids()) {
        for (Id id2 : f.ids()) {
          const Subspace& s1 = lat.at(id1);
          const Subspace& s2 = lat.at(id2);
          if (s2.dim() < s1.dim() && !ns3_body(f, s1, s2)) {
            return failed(id, mode, wit({{"S1", s1}, {"S2", s2}}));
          }
        }
      }
      return passed(id, mode);
    default:
      throw std::invalid_argument("not a spanning axiom: " +
                                  std::string(to_string(id)));
  }
}

AxiomReport check_axiom(AxiomId id, const SubspaceFamily& f,
                        MaximalityMode mode) {
  switch (kind_of(id)) {
    case AxiomKind::Independence:
      return check_independence_axiom(id, f, mode);
    case AxiomKind::Basis:
      return check_basis_axiom(id, f, mode);
    case AxiomKind::Spanning:
      return check_spanning_axiom(id, f, mode);
    case AxiomKind::Rank:
      break;
  }
  throw std::invalid_argument("rank axioms need a rank function");
}

bool replay_witness(const AxiomReport& report, const SubspaceFamily& f) {
  if (report.pass || !report.witness) {
    throw std::invalid_argument("replay needs a failed report with witness");
  }
  const Witness& w = *report.witness;
  const MaximalityMode mode = report.mode;
  const auto member_of = [&](const Subspace& s, const auto& seq) {
    return std::find(seq.begin(), seq.end(), s) != seq.end();
  };
  switch (report.axiom) {
    case AxiomId::I1:
    case AxiomId::B1:
      return !f.is_empty();
    case AxiomId::S1:
      return f.contains(f.lattice()->full_id());
    case AxiomId::I2: {
      const Subspace &i = role(w, "I"), &j = role(w, "J");
      return !(f.contains(j) && j.contains(i)) || f.contains(i);
    }
    case AxiomId::S2: {
      const Subspace &i = role(w, "I"), &j = role(w, "J");
      return !(f.contains(j) && i.contains(j)) || f.contains(i);
    }
    case AxiomId::I3: {
      const Subspace &i = role(w, "I"), &j = role(w, "J");
      const bool hyp = f.contains(i) && f.contains(j) && i.dim() < j.dim();
      return !hyp || i3_body(f, i, j);
    }
    case AxiomId::nI3: {
      const Subspace &i = role(w, "I"), &j = role(w, "J");
      const bool hyp = f.contains(i) && f.contains(j) && i.dim() < j.dim();
      return !hyp || ni3_body(f, i, j);
    }
    case AxiomId::I4: {
      const Subspace &a = role(w, "A"), &b = role(w, "B");
      const Subspace &i = role(w, "I"), &j = role(w, "J");
      const bool hyp = member_of(i, max_members_in(a, f, mode)) &&
                       member_of(j, max_members_in(b, f, mode));
      return !hyp || i4_body(f, a, b, i, j, mode);
    }
    case AxiomId::I4pp: {
      const Subspace &a = role(w, "A"), &i = role(w, "I"), &x = role(w, "x");
      const bool hyp =
          member_of(i, max_members_in(a, f, mode)) && x.dim() == 1;
      return !hyp || i4pp_body(f, a, i, x, mode);
    }
    case AxiomId::B2: {
      const Subspace &b1 = role(w, "B1"), &b2 = role(w, "B2");
      return !(f.contains(b1) && f.contains(b2) && b2.contains(b1)) ||
             b1 == b2;
    }
    case AxiomId::B3: {
      const Subspace &b1 = role(w, "B1"), &b2 = role(w, "B2");
      const Subspace& a = role(w, "A");
      const bool hyp = f.contains(b1) && f.contains(b2) &&
                       a.dim() + 1 == b1.dim() && b1.contains(a) &&
                       a.contains(intersect(b1, b2));
      return !hyp || b3_body(f, b2, a);
    }
    case AxiomId::nB3: {
      const Subspace &b1 = role(w, "B1"), &b2 = role(w, "B2");
      const Subspace& a = role(w, "A");
      const bool hyp = f.contains(b1) && f.contains(b2) &&
                       a.dim() + 1 == b1.dim() && b1.contains(a) &&
                       a.contains(intersect(b1, b2));
      return !hyp || nb3_body(f, b2, a);
    }
    case AxiomId::B4: {
      const Subspace &a = role(w, "A"), &b = role(w, "B");
      const Subspace &i = role(w, "I"), &j = role(w, "J");
      const bool hyp = member_of(i, max_intersections(a, f, mode)) &&
                       member_of(j, max_intersections(b, f, mode));
      return !hyp || b4_body(f, a, b, i, j, mode);
    }
    case AxiomId::B4p: {
      const Subspace &a = role(w, "A"), &b = role(w, "B");
      const Subspace& i = role(w, "I");
      const bool hyp = member_of(i, max_intersections(a, f, mode));
      return !hyp || b4p_body(f, a, b, i, mode);
    }
    case AxiomId::B4pp: {
      const Subspace &a = role(w, "A"), &i = role(w, "I"), &x = role(w, "x");
      const bool hyp =
          member_of(i, max_intersections(a, f, mode)) && x.dim() == 1;
      return !hyp || b4pp_body(f, a, i, x, mode);
    }
    case AxiomId::S3: {
      const Subspace &i = role(w, "I"), &j = role(w, "J");
      const bool hyp = f.contains(i) && f.contains(j) && j.dim() < i.dim();
      return !hyp || s3_body(f, i, j);
    }
    case AxiomId::nS3: {
      const Subspace &s1 = role(w, "S1"), &s2 = role(w, "S2");
      const bool hyp = f.contains(s1) && f.contains(s2) && s2.dim() < s1.dim();
      return !hyp || ns3_body(f, s1, s2);
    }
    case AxiomId::S4: {
      const Subspace &a = role(w, "A"), &b = role(w, "B");
      const Subspace &i = role(w, "I"), &j = role(w, "J");
      const bool hyp = member_of(i, min_members_over(a, f, mode)) &&
                       member_of(j, min_members_over(b, f, mode));
      return !hyp || s4_body(f, a, b, i, j, mode);
    }
    default:
      throw std::invalid_argument("family replay of a rank axiom");
  }
}

bool replay_witness(const AxiomReport& report, const RankFunction& r) {
  if (report.pass || !report.witness) {
    throw std::invalid_argument("replay needs a failed report with witness");
  }
  const Witness& w = *report.witness;
  switch (report.axiom) {
    case AxiomId::R1: {
      const Subspace& a = role(w, "A");
      return r.at(a) >= 0 && r.at(a) <= static_cast<int>(a.dim());
    }
    case AxiomId::R2: {
      const Subspace &a = role(w, "A"), &b = role(w, "B");
      return !b.contains(a) || r.at(a) <= r.at(b);
    }
    case AxiomId::R3: {
      const Subspace &a = role(w, "A"), &b = role(w, "B");
      return r.at(sum(a, b)) + r.at(intersect(a, b)) <= r.at(a) + r.at(b);
    }
    default:
      throw std::invalid_argument("rank replay of a family axiom");
  }
}

}  // namespace qmat
