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

#ifndef QMAT_GF_HPP_
#define QMAT_GF_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

// Arithmetic in the prime field F_q. Scalars are plain machine integers
// kept reduced into [0, q).
namespace qmat::gf {

using Scalar = std::uint32_t;

constexpr bool is_prime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

// Validated field order. q must be prime.
struct FieldOrder {
  std::uint32_t q;

  explicit FieldOrder(std::uint32_t order) : q(order) {
    if (!is_prime(q)) {
      throw std::invalid_argument("field order must be prime, got " +
                                  std::to_string(q));
    }
  }
};

constexpr Scalar add(Scalar a, Scalar b, std::uint32_t q) {
  Scalar s = a + b;
  return s >= q ? s - q : s;
}

constexpr Scalar neg(Scalar a, std::uint32_t q) { return a == 0 ? 0 : q - a; }

constexpr Scalar sub(Scalar a, Scalar b, std::uint32_t q) {
  return add(a, neg(b, q), q);
}

constexpr Scalar mul(Scalar a, Scalar b, std::uint32_t q) {
  return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % q);
}

// Multiplicative inverse. Zero has none.
inline Scalar inv(Scalar a, std::uint32_t q) {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  // Fermat: a^(q-2) mod q. q is small, so this beats extended gcd bookkeeping.
  Scalar result = 1;
  Scalar base = a % q;
  std::uint32_t e = q - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base, q);
    base = mul(base, base, q);
    e >>= 1;
  }
  return result;
}

}  // namespace qmat::gf

#endif  // QMAT_GF_HPP_
