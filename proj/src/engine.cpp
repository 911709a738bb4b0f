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

#include "engine.hpp"

#include <random>
#include <string>

namespace qmat::verify_detail {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Engine::Engine(LatticePtr lattice, bool with_children)
    : lat_(std::move(lattice)) {
  const std::size_t n_ids = lat_->size();
  if (n_ids > kEngineMaxIds) {
    throw GuardExceeded("family search engine supports up to " +
                        std::to_string(kEngineMaxIds) +
                        " subspaces, lattice has " + std::to_string(n_ids));
  }
  num_ids_ = static_cast<unsigned>(n_ids);
  const std::uint32_t n = lat_->n();

  dim_.resize(num_ids_);
  for (Id i = 0; i < num_ids_; ++i) {
    dim_[i] = static_cast<std::uint8_t>(lat_->dim_of(i));
  }

  dim_mask_.assign(n + 1, IdSet{});
  for (std::uint32_t k = 0; k <= n; ++k) {
    for (Id i = lat_->dim_begin(k); i < lat_->dim_end(k); ++i) {
      dim_mask_[k].set(i);
    }
  }

  sub_.assign(num_ids_, IdSet{});
  sup_.assign(num_ids_, IdSet{});
  for (Id a = 0; a < num_ids_; ++a) {
    for (Id b = 0; b < num_ids_; ++b) {
      if (lat_->at(a).contains(lat_->at(b))) {
        sub_[a].set(b);  // b <= a
        sup_[b].set(a);
      }
    }
  }

  join_.resize(static_cast<std::size_t>(num_ids_) * num_ids_);
  meet_.resize(static_cast<std::size_t>(num_ids_) * num_ids_);
  for (Id a = 0; a < num_ids_; ++a) {
    for (Id b = a; b < num_ids_; ++b) {
      const Id j = lat_->id_of(sum(lat_->at(a), lat_->at(b)));
      const Id m = lat_->id_of(intersect(lat_->at(a), lat_->at(b)));
      join_[a * num_ids_ + b] = static_cast<std::uint16_t>(j);
      join_[b * num_ids_ + a] = static_cast<std::uint16_t>(j);
      meet_[a * num_ids_ + b] = static_cast<std::uint16_t>(m);
      meet_[b * num_ids_ + a] = static_cast<std::uint16_t>(m);
    }
  }

  const std::uint32_t hyp_dim = n == 0 ? 0 : n - 1;
  if (n > 0) {
    for (Id i = lat_->dim_begin(1); i < lat_->dim_end(1); ++i) {
      atoms_.push_back(i);
    }
  }
  for (Id i = lat_->dim_begin(hyp_dim); i < lat_->dim_end(hyp_dim); ++i) {
    hyps_.push_back(i);
  }
  num_atoms_ = static_cast<unsigned>(atoms_.size());
  num_hyps_ = static_cast<unsigned>(hyps_.size());

  add_atom_outside_.assign(
      static_cast<std::size_t>(num_ids_) * num_hyps_, IdSet{});
  for (Id a = 0; a < num_ids_; ++a) {
    for (unsigned h = 0; h < num_hyps_; ++h) {
      IdSet& out = add_atom_outside_[a * num_hyps_ + h];
      for (Id x : atoms_) {
        if (!leq(x, hyps_[h])) out.set(join(a, x));
      }
    }
  }
  meet_hyp_outside_.assign(
      static_cast<std::size_t>(num_ids_) * num_atoms_, IdSet{});
  for (Id s = 0; s < num_ids_; ++s) {
    for (unsigned xi = 0; xi < num_atoms_; ++xi) {
      IdSet& out = meet_hyp_outside_[s * num_atoms_ + xi];
      for (Id x : hyps_) {
        if (!leq(atoms_[xi], x)) out.set(meet(s, x));
      }
    }
  }

  if (with_children) {
    // One child engine per dimension, shared by all subspaces of that
    // dimension; plus the pivot-coordinate remap per subspace.
    std::vector<std::shared_ptr<Engine>> by_dim(n + 1);
    for (std::uint32_t k = 0; k <= n; ++k) {
      by_dim[k] = std::make_shared<Engine>(
          SubspaceLattice::make(lat_->q(), k), false);
    }
    children_.resize(num_ids_);
    for (Id f = 0; f < num_ids_; ++f) {
      ChildMap& cm = children_[f];
      cm.engine = by_dim[dim_[f]];
      cm.to_child.assign(num_ids_, 0);
      std::vector<std::uint32_t> pivots;
      for (const Vec& row : lat_->at(f).rows()) {
        std::uint32_t p = 0;
        while (p < lat_->n() && row[p] == 0) ++p;
        pivots.push_back(p);
      }
      sub_[f].for_each([&](unsigned j) {
        std::vector<Vec> gens;
        for (const Vec& row : lat_->at(j).rows()) {
          Vec c(pivots.size(), 0);
          for (std::size_t i = 0; i < pivots.size(); ++i) {
            c[i] = row[pivots[i]];
          }
          gens.push_back(std::move(c));
        }
        cm.to_child[j] = static_cast<std::uint16_t>(cm.engine->lattice()->id_of(
            Subspace::span(lat_->q(), dim_[f], gens)));
      });
    }
  }
}

IdSet Engine::downclose(const IdSet& s) const {
  IdSet out;
  s.for_each([&](unsigned i) { out |= sub_[i]; });
  return out;
}

IdSet Engine::upclose(const IdSet& s) const {
  IdSet out;
  s.for_each([&](unsigned i) { out |= sup_[i]; });
  return out;
}

IdSet Engine::inclusion_maximal(const IdSet& s) const {
  IdSet out;
  s.for_each([&](unsigned i) {
    if ((s & sup_[i]).count() == 1) out.set(i);
  });
  return out;
}

IdSet Engine::inclusion_minimal(const IdSet& s) const {
  IdSet out;
  s.for_each([&](unsigned i) {
    if ((s & sub_[i]).count() == 1) out.set(i);
  });
  return out;
}

IdSet Engine::dim_maximal(const IdSet& s) const {
  const int t = s.top();
  if (t < 0) return {};
  return s & dim_mask_[dim_[t]];
}

IdSet Engine::dim_minimal(const IdSet& s) const {
  const int b = s.bottom();
  if (b < 0) return {};
  return s & dim_mask_[dim_[b]];
}

IdSet Engine::extremal_members(const IdSet& s, MaximalityMode mode,
                               bool maximal) const {
  if (mode == MaximalityMode::Dimension) {
    return maximal ? dim_maximal(s) : dim_minimal(s);
  }
  return maximal ? inclusion_maximal(s) : inclusion_minimal(s);
}

bool Engine::holds_i(AxiomId id, const IdSet& f, MaximalityMode mode) const {
  switch (id) {
    case AxiomId::I1:
      return f.any();
    case AxiomId::I2: {
      bool ok = true;
      f.for_each([&](unsigned j) { ok = ok && sub_[j].subset_of(f); });
      return ok;
    }
    case AxiomId::I3: {
      const auto i3_pair = [&](unsigned i, unsigned j) {
        for (Id x : atoms_) {
          if (sub_[j].test(x) && !sub_[i].test(x) && f.test(join(i, x))) {
            return true;
          }
        }
        return false;
      };
      bool ok = true;
      f.for_each([&](unsigned i) {
        if (!ok) return;
        f.for_each([&](unsigned j) {
          if (!ok || dim_[i] >= dim_[j]) return;
          if (!i3_pair(i, j)) ok = false;
        });
      });
      return ok;
    }
    case AxiomId::I4: {
      for (Id a = 0; a < num_ids_; ++a) {
        const IdSet max_a = extremal_members(f & sub_[a], mode, true);
        if (max_a.none()) continue;
        for (Id b = 0; b < num_ids_; ++b) {
          const IdSet max_b = extremal_members(f & sub_[b], mode, true);
          if (max_b.none()) continue;
          const IdSet max_ab =
              extremal_members(f & sub_[join(a, b)], mode, true);
          bool ok = true;
          max_a.for_each([&](unsigned i) {
            if (!ok) return;
            max_b.for_each([&](unsigned j) {
              if (!ok) return;
              if (!max_ab.intersects(sub_[join(i, j)])) ok = false;
            });
          });
          if (!ok) return false;
        }
      }
      return true;
    }
    case AxiomId::I4pp: {
      for (Id a = 0; a < num_ids_; ++a) {
        const IdSet max_a = extremal_members(f & sub_[a], mode, true);
        if (max_a.none()) continue;
        for (Id x : atoms_) {
          const IdSet max_ax =
              extremal_members(f & sub_[join(a, x)], mode, true);
          bool ok = true;
          max_a.for_each([&](unsigned i) {
            if (ok && !max_ax.intersects(sub_[join(x, i)])) ok = false;
          });
          if (!ok) return false;
        }
      }
      return true;
    }
    case AxiomId::nI3: {
      const auto ni3_pair = [&](unsigned i, unsigned j) {
        for (unsigned h = 0; h < num_hyps_; ++h) {
          if (!sub_[hyps_[h]].test(i) || sub_[hyps_[h]].test(j)) continue;
          if (add_atom_outside_[i * num_hyps_ + h].subset_of(f)) return true;
        }
        return false;
      };
      bool ok = true;
      f.for_each([&](unsigned i) {
        if (!ok) return;
        f.for_each([&](unsigned j) {
          if (!ok || dim_[i] >= dim_[j]) return;
          if (!ni3_pair(i, j)) ok = false;
        });
      });
      return ok;
    }
    default:
      throw std::invalid_argument("engine: not an independence axiom");
  }
}

void Engine::compute_max_intersections(const IdSet& f, MaximalityMode mode,
                                       Scratch& scratch) const {
  scratch.intersections.assign(num_ids_, IdSet{});
  scratch.max_intersections.assign(num_ids_, IdSet{});
  for (Id a = 0; a < num_ids_; ++a) {
    IdSet& vals = scratch.intersections[a];
    f.for_each([&](unsigned b) { vals.set(meet(b, a)); });
    scratch.max_intersections[a] = extremal_members(vals, mode, true);
  }
}

bool Engine::holds_b(AxiomId id, const IdSet& f, MaximalityMode mode,
                     Scratch& scratch) const {
  switch (id) {
    case AxiomId::B1:
      return f.any();
    case AxiomId::B2: {
      bool ok = true;
      f.for_each([&](unsigned b) {
        if (ok && (f & sub_[b]).count() != 1) ok = false;
      });
      return ok;
    }
    case AxiomId::B3:
    case AxiomId::nB3: {
      bool ok = true;
      f.for_each([&](unsigned b1) {
        if (!ok || dim_[b1] == 0) return;
        f.for_each([&](unsigned b2) {
          if (!ok) return;
          const Id both = meet(b1, b2);
          const IdSet candidates =
              sub_[b1] & sup_[both] & dim_mask_[dim_[b1] - 1];
          candidates.for_each([&](unsigned a) {
            if (!ok) return;
            if (id == AxiomId::B3) {
              bool found = false;
              for (Id y : atoms_) {
                if (sub_[b2].test(y) && f.test(join(a, y))) {
                  found = true;
                  break;
                }
              }
              if (!found) ok = false;
            } else {
              bool found = false;
              for (unsigned h = 0; h < num_hyps_ && !found; ++h) {
                if (!sub_[hyps_[h]].test(a) || sub_[hyps_[h]].test(b2)) {
                  continue;
                }
                if (add_atom_outside_[a * num_hyps_ + h].subset_of(f)) {
                  found = true;
                }
              }
              if (!found) ok = false;
            }
          });
        });
      });
      return ok;
    }
    case AxiomId::B4: {
      compute_max_intersections(f, mode, scratch);
      const auto& mx = scratch.max_intersections;
      for (Id a = 0; a < num_ids_; ++a) {
        if (mx[a].none()) continue;
        for (Id b = 0; b < num_ids_; ++b) {
          if (mx[b].none()) continue;
          const IdSet& mx_ab = mx[join(a, b)];
          bool ok = true;
          mx[a].for_each([&](unsigned i) {
            if (!ok) return;
            mx[b].for_each([&](unsigned j) {
              if (ok && !mx_ab.intersects(sub_[join(i, j)])) ok = false;
            });
          });
          if (!ok) return false;
        }
      }
      return true;
    }
    case AxiomId::B4p: {
      compute_max_intersections(f, mode, scratch);
      const auto& mx = scratch.max_intersections;
      for (Id a = 0; a < num_ids_; ++a) {
        if (mx[a].none()) continue;
        for (Id b = 0; b < num_ids_; ++b) {
          const IdSet& mx_ab = mx[join(a, b)];
          bool ok = true;
          mx[a].for_each([&](unsigned i) {
            if (ok && !mx_ab.intersects(sub_[join(i, b)])) ok = false;
          });
          if (!ok) return false;
        }
      }
      return true;
    }
    case AxiomId::B4pp: {
      compute_max_intersections(f, mode, scratch);
      const auto& mx = scratch.max_intersections;
      for (Id a = 0; a < num_ids_; ++a) {
        if (mx[a].none()) continue;
        for (Id x : atoms_) {
          const IdSet& mx_ax = mx[join(a, x)];
          bool ok = true;
          mx[a].for_each([&](unsigned i) {
            if (ok && !mx_ax.intersects(sub_[join(x, i)])) ok = false;
          });
          if (!ok) return false;
        }
      }
      return true;
    }
    default:
      throw std::invalid_argument("engine: not a basis axiom");
  }
}

bool Engine::holds_s(AxiomId id, const IdSet& f, MaximalityMode mode) const {
  switch (id) {
    case AxiomId::S1:
      return f.test(static_cast<unsigned>(num_ids_ - 1));
    case AxiomId::S2: {
      bool ok = true;
      f.for_each([&](unsigned j) { ok = ok && sup_[j].subset_of(f); });
      return ok;
    }
    case AxiomId::S3: {
      const auto s3_pair = [&](unsigned i, unsigned j) {
        for (Id x : hyps_) {
          if (sub_[x].test(j) && !sub_[x].test(i) && f.test(meet(i, x))) {
            return true;
          }
        }
        return false;
      };
      bool ok = true;
      f.for_each([&](unsigned i) {
        if (!ok) return;
        f.for_each([&](unsigned j) {
          if (!ok || dim_[j] >= dim_[i]) return;
          if (!s3_pair(i, j)) ok = false;
        });
      });
      return ok;
    }
    case AxiomId::S4: {
      for (Id a = 0; a < num_ids_; ++a) {
        const IdSet min_a = extremal_members(f & sup_[a], mode, false);
        if (min_a.none()) continue;
        for (Id b = 0; b < num_ids_; ++b) {
          const IdSet min_b = extremal_members(f & sup_[b], mode, false);
          if (min_b.none()) continue;
          const IdSet min_ab =
              extremal_members(f & sup_[meet(a, b)], mode, false);
          bool ok = true;
          min_a.for_each([&](unsigned i) {
            if (!ok) return;
            min_b.for_each([&](unsigned j) {
              if (ok && !min_ab.intersects(sup_[meet(i, j)])) ok = false;
            });
          });
          if (!ok) return false;
        }
      }
      return true;
    }
    case AxiomId::nS3: {
      const auto ns3_pair = [&](unsigned s1, unsigned s2) {
        for (unsigned xi = 0; xi < num_atoms_; ++xi) {
          if (!sub_[s1].test(atoms_[xi]) || sub_[s2].test(atoms_[xi])) {
            continue;
          }
          if (meet_hyp_outside_[s1 * num_atoms_ + xi].subset_of(f)) {
            return true;
          }
        }
        return false;
      };
      bool ok = true;
      f.for_each([&](unsigned s1) {
        if (!ok) return;
        f.for_each([&](unsigned s2) {
          if (!ok || dim_[s2] >= dim_[s1]) return;
          if (!ns3_pair(s1, s2)) ok = false;
        });
      });
      return ok;
    }
    default:
      throw std::invalid_argument("engine: not a spanning axiom");
  }
}

bool Engine::holds(AxiomId id, const IdSet& f, MaximalityMode mode,
                   Scratch& scratch) const {
  switch (kind_of(id)) {
    case AxiomKind::Independence:
      return holds_i(id, f, mode);
    case AxiomKind::Basis:
      return holds_b(id, f, mode, scratch);
    case AxiomKind::Spanning:
      return holds_s(id, f, mode);
    case AxiomKind::Rank:
      derived_rank(f, scratch);
      return rank_axiom_holds(id, scratch);
  }
  return false;
}

void Engine::derived_rank(const IdSet& f, Scratch& scratch) const {
  scratch.rank.resize(num_ids_);
  for (Id a = 0; a < num_ids_; ++a) {
    const int t = (f & sub_[a]).top();
    scratch.rank[a] = t < 0 ? 0 : static_cast<std::int8_t>(dim_[t]);
  }
}

bool Engine::rank_axiom_holds(AxiomId id, const Scratch& scratch) const {
  const auto& r = scratch.rank;
  switch (id) {
    case AxiomId::R1:
      for (Id a = 0; a < num_ids_; ++a) {
        if (r[a] < 0 || r[a] > static_cast<int>(dim_[a])) return false;
      }
      return true;
    case AxiomId::R2:
      for (Id b = 0; b < num_ids_; ++b) {
        bool ok = true;
        sub_[b].for_each([&](unsigned a) {
          if (r[a] > r[b]) ok = false;
        });
        if (!ok) return false;
      }
      return true;
    case AxiomId::R3:
      for (Id a = 0; a < num_ids_; ++a) {
        for (Id b = a; b < num_ids_; ++b) {
          if (r[join(a, b)] + r[meet(a, b)] > r[a] + r[b]) return false;
        }
      }
      return true;
    default:
      throw std::invalid_argument("engine: not a rank axiom");
  }
}

bool Engine::loops_fill_span(const IdSet& f, Scratch& scratch) const {
  derived_rank(f, scratch);
  Id span = 0;  // zero subspace
  for (Id x : atoms_) {
    if (scratch.rank[x] == 0) span = join(span, x);
  }
  for (Id x : atoms_) {
    if (leq(x, span) && scratch.rank[x] != 0) return false;
  }
  return true;
}

bool Engine::restriction_hereditary(const IdSet& f, Scratch& scratch) const {
  if (children_.empty()) {
    throw std::logic_error("engine built without restriction tables");
  }
  for (Id g = 0; g < num_ids_; ++g) {
    const ChildMap& cm = children_[g];
    IdSet cf;
    (f & sub_[g]).for_each([&](unsigned j) { cf.set(cm.to_child[j]); });
    Scratch& child_scratch = scratch;  // child needs no scratch for I axioms
    if (!cm.engine->holds(AxiomId::I1, cf, MaximalityMode::Dimension,
                          child_scratch) ||
        !cm.engine->holds(AxiomId::I2, cf, MaximalityMode::Dimension,
                          child_scratch) ||
        !cm.engine->holds(AxiomId::nI3, cf, MaximalityMode::Dimension,
                          child_scratch)) {
      return false;
    }
  }
  return true;
}

std::vector<IdSet> Engine::enumerate(verify::FamilyConstraint constraint,
                                     std::uint64_t cap) const {
  std::vector<IdSet> out;
  if (constraint == verify::FamilyConstraint::All) {
    if (num_ids_ >= 63 || (std::uint64_t{1} << num_ids_) > cap) {
      throw GuardExceeded("2^" + std::to_string(num_ids_) +
                          " families exceed the enumeration cap");
    }
    const std::uint64_t total = std::uint64_t{1} << num_ids_;
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      IdSet s;
      s.w[0] = mask;
      out.push_back(s);
    }
    return out;
  }

  // Antichains generated by DFS over ids in ascending order; downward or
  // upward closures are images of the antichain stream, which hits every
  // closed family exactly once (a closed family's extremal members are
  // an antichain).
  std::vector<Id> chain;
  const auto emit = [&](const std::vector<Id>& anti) {
    IdSet s;
    switch (constraint) {
      case verify::FamilyConstraint::Antichain:
        for (Id i : anti) s.set(i);
        break;
      case verify::FamilyConstraint::DownwardClosed:
        for (Id i : anti) s |= sub_[i];
        break;
      case verify::FamilyConstraint::UpwardClosed:
        for (Id i : anti) s |= sup_[i];
        break;
      default:
        break;
    }
    if (out.size() >= cap) {
      throw GuardExceeded("family enumeration exceeds cap " +
                          std::to_string(cap));
    }
    out.push_back(s);
  };

  IdSet all;
  for (Id i = 0; i < num_ids_; ++i) all.set(i);
  const auto dfs = [&](auto&& self, Id next, const IdSet& allowed) -> void {
    emit(chain);
    for (Id i = next; i < num_ids_; ++i) {
      if (!allowed.test(i)) continue;
      chain.push_back(i);
      self(self, i + 1, andnot(allowed, sub_[i] | sup_[i]));
      chain.pop_back();
    }
  };
  dfs(dfs, 0, all);
  return out;
}

IdSet Engine::sample(verify::FamilyConstraint constraint, std::uint64_t seed,
                     std::uint64_t index) const {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  const std::uint64_t k = rng() % (num_ids_ + 1);
  IdSet base;
  for (std::uint64_t i = 0; i < k; ++i) {
    base.set(static_cast<unsigned>(rng() % num_ids_));
  }
  switch (constraint) {
    case verify::FamilyConstraint::All:
      return base;
    case verify::FamilyConstraint::DownwardClosed:
      return downclose(base);
    case verify::FamilyConstraint::UpwardClosed:
      return upclose(base);
    case verify::FamilyConstraint::Antichain:
      return inclusion_maximal(base);
  }
  return base;
}

}  // namespace qmat::verify_detail
