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

#include "qmat/subspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qmat/gf.hpp"

namespace qmat {

namespace {

void check_same_ambient(const Subspace& a, const Subspace& b,
                        const char* what) {
  if (a.q() != b.q() || a.n() != b.n()) {
    throw std::invalid_argument(std::string(what) +
                                ": ambient spaces differ");
  }
}

// In-place reduced row echelon form over F_q. Returns the pivot column of
// each surviving row; zero rows are dropped.
std::vector<Vec> rref(std::uint32_t q, std::uint32_t n,
                      std::vector<Vec> rows) {
  std::size_t rank = 0;
  for (std::uint32_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint32_t scale = gf::inv(rows[rank][col], q);
    for (std::uint32_t j = 0; j < n; ++j) {
      rows[rank][j] = gf::mul(rows[rank][j], scale, q);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const std::uint32_t factor = rows[i][col];
      for (std::uint32_t j = 0; j < n; ++j) {
        rows[i][j] = gf::sub(rows[i][j], gf::mul(factor, rows[rank][j], q), q);
      }
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace

Subspace Subspace::zero(std::uint32_t q, std::uint32_t n) {
  gf::FieldOrder check(q);
  return Subspace(q, n, {});
}

Subspace Subspace::full(std::uint32_t q, std::uint32_t n) {
  gf::FieldOrder check(q);
  std::vector<Vec> rows(n, Vec(n, 0));
  for (std::uint32_t i = 0; i < n; ++i) rows[i][i] = 1;
  return Subspace(q, n, std::move(rows));
}

Subspace Subspace::span(std::uint32_t q, std::uint32_t n,
                        const std::vector<Vec>& generators) {
  gf::FieldOrder check(q);
  for (const Vec& g : generators) {
    if (g.size() != n) {
      throw std::invalid_argument("generator has length " +
                                  std::to_string(g.size()) + ", expected " +
                                  std::to_string(n));
    }
    for (std::uint32_t e : g) {
      if (e >= q) {
        throw std::invalid_argument("generator entry " + std::to_string(e) +
                                    " out of range for q=" + std::to_string(q));
      }
    }
  }
  return Subspace(q, n, rref(q, n, generators));
}

bool Subspace::contains_vector(const Vec& v) const {
  if (v.size() != n_) {
    throw std::invalid_argument("vector length mismatch in containment test");
  }
  Vec r = v;
  for (const Vec& row : rows_) {
    std::uint32_t pivot = 0;
    while (pivot < n_ && row[pivot] == 0) ++pivot;
    if (pivot == n_ || r[pivot] == 0) continue;
    const std::uint32_t factor = r[pivot];
    for (std::uint32_t j = 0; j < n_; ++j) {
      r[j] = gf::sub(r[j], gf::mul(factor, row[j], q_), q_);
    }
  }
  return std::all_of(r.begin(), r.end(),
                     [](std::uint32_t e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  check_same_ambient(*this, other, "contains");
  if (other.dim() > dim()) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vec& r) { return contains_vector(r); });
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b, "sum");
  std::vector<Vec> gens = a.rows();
  gens.insert(gens.end(), b.rows().begin(), b.rows().end());
  return Subspace::span(a.q(), a.n(), gens);
}

Subspace Subspace::perp() const {
  // Kernel basis of the row matrix, read off the RREF: one generator per
  // non-pivot column.
  std::vector<bool> is_pivot(n_, false);
  std::vector<std::uint32_t> pivot_of_row(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint32_t p = 0;
    while (p < n_ && rows_[i][p] == 0) ++p;
    pivot_of_row[i] = p;
    is_pivot[p] = true;
  }
  std::vector<Vec> gens;
  for (std::uint32_t f = 0; f < n_; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n_, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      v[pivot_of_row[i]] = gf::neg(rows_[i][f], q_);
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(q_, n_, gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b, "intersect");
  // A cap B = (A^perp + B^perp)^perp; exact over F_q and avoids walking
  // vector sets.
  return sum(a.perp(), b.perp()).perp();
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  const std::uint32_t d = dim();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < d; ++i) total *= q_;
  out.reserve(total);
  Vec coeff(d, 0);
  for (std::uint64_t it = 0; it < total; ++it) {
    std::uint64_t c = it;
    for (std::uint32_t i = 0; i < d; ++i) {
      coeff[i] = static_cast<std::uint32_t>(c % q_);
      c /= q_;
    }
    Vec v(n_, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
      if (coeff[i] == 0) continue;
      for (std::uint32_t j = 0; j < n_; ++j) {
        v[j] = gf::add(v[j], gf::mul(coeff[i], rows_[i][j], q_), q_);
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::uint64_t Subspace::code_of(const Vec& v, std::uint32_t q) {
  std::uint64_t code = 0;
  std::uint64_t place = 1;
  for (std::uint32_t e : v) {
    code += e * place;
    place *= q;
  }
  return code;
}

Vec Subspace::vec_of(std::uint64_t code, std::uint32_t q, std::uint32_t n) {
  Vec v(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    v[i] = static_cast<std::uint32_t>(code % q);
    code /= q;
  }
  return v;
}

std::strong_ordering Subspace::operator<=>(const Subspace& other) const {
  if (auto c = q_ <=> other.q_; c != 0) return c;
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (auto c = rows_.size() <=> other.rows_.size(); c != 0) return c;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint64_t a = code_of(rows_[i], q_);
    const std::uint64_t b = code_of(other.rows_[i], q_);
    if (auto c = a <=> b; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Subspace::to_literal() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += ' ';
    for (std::uint32_t e : rows_[i]) out += static_cast<char>('0' + e);
  }
  return out;
}

Subspace Subspace::parse_literal(std::uint32_t q, std::uint32_t n,
                                 std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) {
    throw std::invalid_argument("empty subspace literal");
  }
  if (tokens.size() == 1 && tokens[0] == "0") return zero(q, n);
  std::vector<Vec> gens;
  for (const std::string& tok : tokens) {
    if (tok.size() != n) {
      throw std::invalid_argument("vector '" + tok + "' has " +
                                  std::to_string(tok.size()) +
                                  " coordinates, expected " +
                                  std::to_string(n));
    }
    Vec v(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      const char c = tok[i];
      if (c < '0' || c >= static_cast<char>('0' + q)) {
        throw std::invalid_argument("digit '" + std::string(1, c) +
                                    "' out of range for q=" +
                                    std::to_string(q) + " in '" + tok + "'");
      }
      v[i] = static_cast<std::uint32_t>(c - '0');
    }
    gens.push_back(std::move(v));
  }
  return span(q, n, gens);
}

}  // namespace qmat
