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

#include "hgc/gf.hpp"

namespace hgc {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod_u64(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; the witness set below covers all 64-bit inputs.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(u64 modulus) : q_(modulus) {
  if (modulus >= (1ULL << 63))
    fail(Errc::invalid_config, "field modulus must be below 2^63");
  if (!is_prime_u64(modulus))
    fail(Errc::invalid_config, "field modulus " + std::to_string(modulus) + " is not prime");
}

Fe PrimeField::pow(Fe base, u64 exponent) const { return Fe{powmod_u64(base.v, exponent, q_)}; }

void add_scaled(const PrimeField& f, std::span<Fe> y, std::span<const Fe> x, Fe c) {
  if (y.size() != x.size()) fail(Errc::invalid_input, "add_scaled: length mismatch");
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.add(y[i], f.mul(c, x[i]));
}

Fe dot(const PrimeField& f, std::span<const Fe> a, std::span<const Fe> b) {
  if (a.size() != b.size()) fail(Errc::invalid_input, "dot: length mismatch");
  Fe acc = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

}  // namespace hgc
