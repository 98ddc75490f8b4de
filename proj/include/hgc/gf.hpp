// Copyright 2026 The hgc Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hgc/error.hpp"

namespace hgc {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// One element of F_q, stored as the canonical residue in [0, q). The modulus
// lives in PrimeField, not in the element.
struct Fe {
  u64 v = 0;
  friend bool operator==(Fe a, Fe b) { return a.v == b.v; }
  friend bool operator!=(Fe a, Fe b) { return a.v != b.v; }
  friend bool operator<(Fe a, Fe b) { return a.v < b.v; }
};

bool is_prime_u64(u64 n);

/// Arithmetic context for a prime field F_q, 2 <= q < 2^63. All operations
/// are pure; a single instance can be shared across threads.
class PrimeField {
 public:
  explicit PrimeField(u64 modulus);

  u64 modulus() const { return q_; }
  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  bool contains(Fe a) const { return a.v < q_; }

  Fe from_uint(u64 v) const { return Fe{v % q_}; }
  // Signed ingestion, so points like -1 map to q-1 directly.
  Fe from_int(i64 v) const {
    i64 r = v % static_cast<i64>(q_);
    if (r < 0) r += static_cast<i64>(q_);
    return Fe{static_cast<u64>(r)};
  }

  Fe add(Fe a, Fe b) const {
    u64 s = a.v + b.v;
    if (s >= q_) s -= q_;
    return Fe{s};
  }
  Fe sub(Fe a, Fe b) const { return Fe{a.v >= b.v ? a.v - b.v : a.v + (q_ - b.v)}; }
  Fe neg(Fe a) const { return Fe{a.v == 0 ? 0 : q_ - a.v}; }
  Fe mul(Fe a, Fe b) const {
    return Fe{static_cast<u64>(static_cast<unsigned __int128>(a.v) * b.v % q_)};
  }

  Fe pow(Fe base, u64 exponent) const;

  // Multiplicative inverse via a^(q-2); rejects zero.
  Fe inv(Fe a) const {
    if (a.v == 0) fail(Errc::division_by_zero, "inverse of zero");
    return pow(a, q_ - 2);
  }

  // num/den as a field element; transcribes rational coefficients.
  Fe ratio(i64 num, i64 den) const { return mul(from_int(num), inv(from_int(den))); }

 private:
  u64 q_;
};

// y += c * x, elementwise. Spans must have equal length.
void add_scaled(const PrimeField& f, std::span<Fe> y, std::span<const Fe> x, Fe c);

Fe dot(const PrimeField& f, std::span<const Fe> a, std::span<const Fe> b);

}  // namespace hgc
