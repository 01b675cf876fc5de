// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Slow, independent reference computations used only by the tests. None of
// these call into the code paths they are used to check.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

namespace frey::oracle {

// Largest k with p^k | m, by repeated division.
inline unsigned long valuation(mpz_class m, unsigned long p) {
  if (m < 0) m = -m;
  unsigned long k = 0;
  while (m != 0 && m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

// Trial division by every integer d >= 2.
inline std::vector<std::pair<std::uint64_t, unsigned long>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned long>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned long e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Δ(E) = 16·disc(h) where (2y + a1x + a3)² = 4h(x) and h is monic:
// h = x³ + (b2/4)x² + (b4/2)x + b6/4. Uses only b2, b4, b6.
inline mpz_class discriminant_via_cubic(const mpz_class& a1, const mpz_class& a2,
                                        const mpz_class& a3, const mpz_class& a4,
                                        const mpz_class& a6) {
  const mpq_class b2 = a1 * a1 + 4 * a2;
  const mpq_class b4 = 2 * a4 + a1 * a3;
  const mpq_class b6 = a3 * a3 + 4 * a6;
  const mpq_class p = b2 / 4, q = b4 / 2, r = b6 / 4;
  mpq_class disc = p * p * q * q - 4 * q * q * q - 4 * p * p * p * r - 27 * r * r + 18 * p * q * r;
  disc *= 16;
  disc.canonicalize();
  return disc.get_num();  // denominator is 1 for integral models
}

// #E(F_p) by enumerating every (x, y) pair, plus infinity.
inline long point_count(const mpz_class& a1, const mpz_class& a2, const mpz_class& a3,
                        const mpz_class& a4, const mpz_class& a6, long p) {
  auto red = [p](const mpz_class& v) {
    mpz_class r = v % p;
    if (r < 0) r += p;
    return r.get_si();
  };
  const long A1 = red(a1), A2 = red(a2), A3 = red(a3), A4 = red(a4), A6 = red(a6);
  long count = 1;
  for (long x = 0; x < p; ++x) {
    for (long y = 0; y < p; ++y) {
      long lhs = (y * y + A1 * x % p * y + A3 * y) % p;
      long rhs = (x * x % p * x + A2 * x % p * x + A4 * x + A6) % p;
      if (lhs == rhs) ++count;
    }
  }
  return count;
}

// Index of Γ0(N): |P¹(Z/N)| = #{(c,d) mod N : gcd(c,d,N) = 1} / φ(N).
inline std::uint64_t gamma0_index(std::uint64_t N) {
  auto g = [](std::uint64_t a, std::uint64_t b) {
    while (b != 0) std::tie(a, b) = std::make_pair(b, a % b);
    return a;
  };
  std::uint64_t pairs = 0, units = 0;
  for (std::uint64_t c = 0; c < N; ++c) {
    if (g(c, N) == 1 || N == 1) ++units;
    for (std::uint64_t d = 0; d < N; ++d) {
      if (g(g(c, d), N) == 1) ++pairs;
    }
  }
  return pairs / units;
}

// ν₂ = #{x mod N : x² + 1 ≡ 0}, ν₃ = #{x mod N : x² + x + 1 ≡ 0}.
inline std::uint64_t elliptic_points_2(std::uint64_t N) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < N; ++x) {
    if ((x * x + 1) % N == 0) ++count;
  }
  return count;
}

inline std::uint64_t elliptic_points_3(std::uint64_t N) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < N; ++x) {
    if ((x * x + x + 1) % N == 0) ++count;
  }
  return count;
}

}  // namespace frey::oracle
