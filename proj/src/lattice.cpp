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

#include "qmat/lattice.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qmat/gf.hpp"

namespace qmat {

namespace {

std::uint64_t checked_mul_div(std::uint64_t acc, std::uint64_t num,
                              std::uint64_t den) {
  // acc * num is exact before division in the Gaussian binomial product
  // only if taken in the right order; use 128-bit intermediates instead.
  const unsigned __int128 wide = static_cast<unsigned __int128>(acc) * num;
  const unsigned __int128 out = wide / den;
  if (out > static_cast<unsigned __int128>(UINT64_MAX >> 1)) {
    throw std::overflow_error("gaussian binomial exceeds 2^63");
  }
  return static_cast<std::uint64_t>(out);
}

std::uint64_t pow_u64(std::uint32_t q, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t k,
                                std::uint32_t q) {
  if (k > n) return 0;
  std::uint64_t acc = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    // (q^(n-i) - 1) / (q^(i+1) - 1), multiplied in an order that keeps
    // every intermediate an integer.
    acc = checked_mul_div(acc, pow_u64(q, n - i) - 1, pow_u64(q, i + 1) - 1);
  }
  return acc;
}

std::uint64_t count_subspaces(std::uint32_t q, std::uint32_t n) {
  std::uint64_t total = 0;
  for (std::uint32_t k = 0; k <= n; ++k) {
    const std::uint64_t g = gaussian_binomial(n, k, q);
    if (total > UINT64_MAX - g) {
      throw std::overflow_error("subspace count overflow");
    }
    total += g;
  }
  return total;
}

std::vector<Subspace> enumerate_subspaces(std::uint32_t q, std::uint32_t n,
                                          std::uint32_t k,
                                          std::uint64_t guard) {
  gf::FieldOrder check(q);
  if (k > n) throw std::invalid_argument("dimension k exceeds n");
  const std::uint64_t expected = gaussian_binomial(n, k, q);
  if (expected > guard) {
    throw GuardExceeded("enumeration of " + std::to_string(expected) +
                        " subspaces exceeds guard " + std::to_string(guard));
  }

  std::vector<Subspace> out;
  out.reserve(expected);

  // Walk RREF shapes directly: a choice of pivot columns plus free
  // entries determines exactly one canonical matrix, so nothing needs
  // deduplication.
  std::vector<std::uint32_t> pivots(k);
  for (std::uint32_t i = 0; i < k; ++i) pivots[i] = i;
  const auto advance_pivots = [&]() -> bool {
    if (k == 0) return false;
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && pivots[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pivots[i];
    for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    return true;
  };

  do {
    // Free positions: row i, columns right of pivots[i] that are not
    // pivot columns themselves.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
    std::vector<bool> is_pivot(n, false);
    for (std::uint32_t p : pivots) is_pivot[p] = true;
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t c = pivots[i] + 1; c < n; ++c) {
        if (!is_pivot[c]) free_pos.emplace_back(i, c);
      }
    }
    const std::uint64_t combos = pow_u64(q, static_cast<std::uint32_t>(free_pos.size()));
    for (std::uint64_t it = 0; it < combos; ++it) {
      std::vector<Vec> rows(k, Vec(n, 0));
      for (std::uint32_t i = 0; i < k; ++i) rows[i][pivots[i]] = 1;
      std::uint64_t rem = it;
      for (const auto& [r, c] : free_pos) {
        rows[r][c] = static_cast<std::uint32_t>(rem % q);
        rem /= q;
      }
      out.push_back(Subspace::span(q, n, rows));
    }
  } while (advance_pivots());

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> enumerate_subspaces(std::uint32_t q, std::uint32_t n,
                                          std::uint64_t guard) {
  const std::uint64_t expected = count_subspaces(q, n);
  if (expected > guard) {
    throw GuardExceeded("enumeration of " + std::to_string(expected) +
                        " subspaces exceeds guard " + std::to_string(guard));
  }
  std::vector<Subspace> out;
  out.reserve(expected);
  for (std::uint32_t k = 0; k <= n; ++k) {
    auto level = enumerate_subspaces(q, n, k, guard);
    std::move(level.begin(), level.end(), std::back_inserter(out));
  }
  return out;
}

SubspaceLattice::SubspaceLattice(std::uint32_t q, std::uint32_t n)
    : q_(q), n_(n) {}

LatticePtr SubspaceLattice::make(std::uint32_t q, std::uint32_t n,
                                 std::uint64_t guard) {
  auto lat = std::shared_ptr<SubspaceLattice>(new SubspaceLattice(q, n));
  lat->all_ = enumerate_subspaces(q, n, guard);
  lat->dim_offset_.assign(n + 2, 0);
  for (std::uint32_t k = 0; k <= n; ++k) {
    lat->dim_offset_[k + 1] =
        lat->dim_offset_[k] +
        static_cast<Id>(gaussian_binomial(n, k, q));
  }
  lat->index_.reserve(lat->all_.size());
  for (Id i = 0; i < lat->all_.size(); ++i) {
    lat->index_.emplace(lat->all_[i].to_literal(), i);
  }
  return lat;
}

Id SubspaceLattice::id_of(const Subspace& s) const {
  if (s.q() != q_ || s.n() != n_) {
    throw std::invalid_argument("subspace belongs to a different lattice");
  }
  return index_.at(s.to_literal());
}

bool SubspaceLattice::knows(const Subspace& s) const {
  return s.q() == q_ && s.n() == n_ && index_.count(s.to_literal()) > 0;
}

std::span<const Subspace> SubspaceLattice::of_dim(std::uint32_t k) const {
  return {all_.data() + dim_begin(k), all_.data() + dim_end(k)};
}

std::vector<Subspace> SubspaceLattice::hyperplanes() const {
  const std::uint32_t k = n_ == 0 ? 0 : n_ - 1;
  auto view = of_dim(k);
  return {view.begin(), view.end()};
}

Interval SubspaceLattice::interval(const Subspace& lower,
                                   const Subspace& upper) const {
  if (!upper.contains(lower)) {
    throw std::invalid_argument("interval endpoints are not nested");
  }
  Interval out{lower, upper, {}};
  for (const Subspace& s : all_) {
    if (s.contains(lower) && upper.contains(s)) out.members.push_back(s);
  }
  return out;
}

RestrictionMap SubspaceLattice::restriction_map(const Subspace& x) const {
  const Id check = id_of(x);
  (void)check;
  std::vector<std::uint32_t> pivots;
  for (const Vec& row : x.rows()) {
    std::uint32_t p = 0;
    while (p < n_ && row[p] == 0) ++p;
    pivots.push_back(p);
  }
  RestrictionMap map;
  map.parent = shared_from_this();
  map.child = SubspaceLattice::make(q_, x.dim());
  map.space = x;
  map.pivots = std::move(pivots);
  return map;
}

Subspace RestrictionMap::to_child(const Subspace& s) const {
  if (!space.contains(s)) {
    throw std::invalid_argument("restriction: subspace not inside X");
  }
  std::vector<Vec> gens;
  for (const Vec& row : s.rows()) {
    Vec c(pivots.size(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) c[i] = row[pivots[i]];
    gens.push_back(std::move(c));
  }
  return Subspace::span(space.q(), space.dim(), gens);
}

Subspace RestrictionMap::from_child(const Subspace& t) const {
  const std::uint32_t q = space.q();
  const std::uint32_t n = space.n();
  std::vector<Vec> gens;
  for (const Vec& c : t.rows()) {
    Vec v(n, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        v[j] = gf::add(v[j], gf::mul(c[i], space.rows()[i][j], q), q);
      }
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(q, n, gens);
}

QuotientMap SubspaceLattice::quotient_map(const Subspace& x) const {
  const Id check = id_of(x);
  (void)check;
  QuotientMap map;
  map.parent = shared_from_this();
  map.kernel = x;
  Subspace current = x;
  for (std::uint32_t i = 0; i < n_ && map.complement.size() < n_ - x.dim();
       ++i) {
    Vec unit(n_, 0);
    unit[i] = 1;
    if (current.contains_vector(unit)) continue;
    std::vector<Vec> gens = current.rows();
    gens.push_back(unit);
    current = Subspace::span(q_, n_, gens);
    map.complement.push_back(std::move(unit));
  }
  map.child = SubspaceLattice::make(q_, n_ - x.dim());
  return map;
}

Vec QuotientMap::push_vector(const Vec& v) const {
  // Solve v = sum a_i * kernel_row_i + sum b_j * complement_j and return
  // the b coefficients: eliminate the augmented system [basis^T | v].
  const std::uint32_t q = kernel.q();
  const std::uint32_t n = kernel.n();
  const std::size_t kdim = kernel.dim();
  const std::size_t m = complement.size();
  const std::size_t b = kdim + m;  // basis size, equals n

  std::vector<Vec> aug(n, Vec(b + 1, 0));
  for (std::size_t j = 0; j < kdim; ++j) {
    for (std::uint32_t i = 0; i < n; ++i) aug[i][j] = kernel.rows()[j][i];
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::uint32_t i = 0; i < n; ++i) aug[i][kdim + j] = complement[j][i];
  }
  for (std::uint32_t i = 0; i < n; ++i) aug[i][b] = v[i];

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col_of_row;
  for (std::size_t col = 0; col < b && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(aug[rank], aug[pivot]);
    const std::uint32_t scale = gf::inv(aug[rank][col], q);
    for (std::size_t j = 0; j <= b; ++j) {
      aug[rank][j] = gf::mul(aug[rank][j], scale, q);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rank || aug[i][col] == 0) continue;
      const std::uint32_t factor = aug[i][col];
      for (std::size_t j = 0; j <= b; ++j) {
        aug[i][j] = gf::sub(aug[i][j], gf::mul(factor, aug[rank][j], q), q);
      }
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < n; ++i) {
    if (aug[i][b] != 0) {
      throw std::logic_error("quotient map: inconsistent system");
    }
  }
  Vec coeff(b, 0);
  for (std::size_t i = 0; i < rank; ++i) {
    coeff[pivot_col_of_row[i]] = aug[i][b];
  }
  Vec out(m, 0);
  for (std::size_t j = 0; j < m; ++j) out[j] = coeff[kdim + j];
  return out;
}

Subspace QuotientMap::push_forward(const Subspace& s) const {
  const std::uint32_t m = static_cast<std::uint32_t>(complement.size());
  std::vector<Vec> gens;
  for (const Vec& row : s.rows()) gens.push_back(push_vector(row));
  return Subspace::span(kernel.q(), m, gens);
}

Subspace QuotientMap::pre_image(const Subspace& t) const {
  const std::uint32_t q = kernel.q();
  const std::uint32_t n = kernel.n();
  std::vector<Vec> gens = kernel.rows();
  for (const Vec& c : t.rows()) {
    Vec v(n, 0);
    for (std::size_t j = 0; j < complement.size(); ++j) {
      if (c[j] == 0) continue;
      for (std::uint32_t i = 0; i < n; ++i) {
        v[i] = gf::add(v[i], gf::mul(c[j], complement[j][i], q), q);
      }
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(q, n, gens);
}

const std::vector<std::vector<Id>>& SubspaceLattice::automorphisms() const {
  std::call_once(autos_once_, [this]() {
    if (n_ <= 1) {
      std::vector<Id> identity(all_.size());
      for (Id i = 0; i < all_.size(); ++i) identity[i] = i;
      autos_.push_back(std::move(identity));
      return;
    }
    if (n_ == 2) {
      // Height-2 lattice: any permutation of the atoms extends.
      std::vector<Id> atoms;
      for (Id i = dim_begin(1); i < dim_end(1); ++i) atoms.push_back(i);
      std::vector<Id> image = atoms;
      std::sort(image.begin(), image.end());
      do {
        std::vector<Id> perm(all_.size());
        perm[zero_id()] = zero_id();
        perm[full_id()] = full_id();
        for (std::size_t i = 0; i < atoms.size(); ++i) perm[atoms[i]] = image[i];
        autos_.push_back(std::move(perm));
      } while (std::next_permutation(image.begin(), image.end()));
      std::sort(autos_.begin(), autos_.end());
      return;
    }
    if (n_ == 3 && (q_ == 2 || q_ == 3)) {
      // Enumerate GL(3, q) and record the induced subspace permutations,
      // deduplicated (scalar matrices collapse).
      std::set<std::vector<Id>> seen;
      const std::uint64_t total = pow_u64(q_, n_ * n_);
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Vec> mat(n_, Vec(n_, 0));
        std::uint64_t rem = code;
        for (std::uint32_t i = 0; i < n_; ++i) {
          for (std::uint32_t j = 0; j < n_; ++j) {
            mat[i][j] = static_cast<std::uint32_t>(rem % q_);
            rem /= q_;
          }
        }
        if (Subspace::span(q_, n_, mat).dim() != n_) continue;  // singular
        std::vector<Id> perm(all_.size());
        for (Id s = 0; s < all_.size(); ++s) {
          std::vector<Vec> gens;
          for (const Vec& row : all_[s].rows()) {
            Vec img(n_, 0);
            for (std::uint32_t i = 0; i < n_; ++i) {
              for (std::uint32_t j = 0; j < n_; ++j) {
                img[i] = gf::add(img[i], gf::mul(mat[i][j], row[j], q_), q_);
              }
            }
            gens.push_back(std::move(img));
          }
          perm[s] = id_of(Subspace::span(q_, n_, gens));
        }
        seen.insert(std::move(perm));
      }
      autos_.assign(seen.begin(), seen.end());
      return;
    }
    throw GuardExceeded(
        "lattice automorphisms available only for n <= 2, or n == 3 with "
        "q in {2, 3}");
  });
  return autos_;
}

}  // namespace qmat
