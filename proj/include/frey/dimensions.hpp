// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Genus of X0(N) and dimensions of weight-2 cusp forms and their new part.
//
//   g = 1 + μ/12 − ν₂/4 − ν₃/3 − ν∞/2,   dim S₂(Γ0(N)) = g
//   dim S₂(N) = Σ_{M|N} σ₀(N/M)·dim S₂new(M)
//
// The new part is recovered two ways: by peeling off old forms recursively
// (memoised), and by inverting the divisor sum with λ = μ*μ, which is
// multiplicative with λ(p) = −2, λ(p²) = 1, λ(p^k) = 0 for k ≥ 3.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "frey/arith.hpp"

namespace frey {

struct DimensionRecord {
  std::uint64_t level = 1;
  std::uint64_t mu = 1;
  std::uint64_t nu2 = 0;
  std::uint64_t nu3 = 0;
  std::uint64_t nu_inf = 1;
  std::uint64_t genus = 0;
  std::uint64_t dim_s2 = 0;
  std::uint64_t dim_s2_new = 0;
};

namespace detail {

struct SmallFactor {
  std::uint64_t prime;
  unsigned long exponent;
};

inline std::vector<SmallFactor> small_factors(std::uint64_t n) {
  if (n == 0) throw PreconditionError("level must be positive");
  std::vector<SmallFactor> out;
  for (const auto& f : factorize(from_u64(n)).factors) {
    out.push_back({to_u64(f.prime), f.exponent});
  }
  return out;
}

inline std::vector<std::uint64_t> small_divisors(const std::vector<SmallFactor>& fac) {
  std::vector<std::uint64_t> out{1};
  for (const auto& f : fac) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned long e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t small_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

inline std::uint64_t small_phi(std::uint64_t m) {
  std::uint64_t phi = m;
  for (const auto& f : small_factors(m)) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

inline std::uint64_t sigma0(std::uint64_t m) {
  std::uint64_t count = 1;
  for (const auto& f : small_factors(m)) count *= f.exponent + 1;
  return count;
}

}  // namespace detail

// Genus data for X0(N); dim_s2_new is left at 0 (see DimensionTable).
inline DimensionRecord genus_X0(std::uint64_t N) {
  const auto fac = detail::small_factors(N);
  DimensionRecord r;
  r.level = N;

  r.mu = N;
  for (const auto& f : fac) r.mu = r.mu / f.prime * (f.prime + 1);

  // Elliptic points of order 2: none if 4 | N, otherwise each odd p | N
  // contributes 2 (p ≡ 1 mod 4) or 0 (p ≡ 3 mod 4); p = 2 contributes 1.
  r.nu2 = 1;
  for (const auto& f : fac) {
    if (f.prime == 2) {
      if (f.exponent >= 2) r.nu2 = 0;
    } else {
      r.nu2 *= (f.prime % 4 == 1) ? 2 : 0;
    }
  }

  // Order 3: none if 9 | N; p = 3 contributes 1, other p give 2 or 0 by p mod 3.
  r.nu3 = 1;
  for (const auto& f : fac) {
    if (f.prime == 3) {
      if (f.exponent >= 2) r.nu3 = 0;
    } else {
      r.nu3 *= (f.prime % 3 == 1) ? 2 : 0;
    }
  }

  r.nu_inf = 0;
  for (auto d : detail::small_divisors(fac)) {
    r.nu_inf += detail::small_phi(detail::small_gcd(d, N / d));
  }

  // 12g = 12 + μ − 3ν₂ − 4ν₃ − 6ν∞
  const auto twelve_g = static_cast<std::int64_t>(12 + r.mu) -
                        static_cast<std::int64_t>(3 * r.nu2 + 4 * r.nu3 + 6 * r.nu_inf);
  if (twelve_g < 0 || twelve_g % 12 != 0) {
    throw ComputationError("genus formula did not clear denominators at level " +
                           std::to_string(N));
  }
  r.genus = static_cast<std::uint64_t>(twelve_g / 12);
  r.dim_s2 = r.genus;
  return r;
}

// λ-inversion of dim S₂(N) = Σ σ₀(N/M) dim S₂new(M).
inline std::int64_t dim_s2_new_by_inversion(std::uint64_t N) {
  const auto fac = detail::small_factors(N);
  std::int64_t total = 0;
  for (auto d : detail::small_divisors(fac)) {
    std::int64_t lambda = 1;
    for (const auto& f : fac) {
      std::uint64_t rest = d;
      unsigned long e = 0;
      while (rest % f.prime == 0) {
        rest /= f.prime;
        ++e;
      }
      if (e == 1) lambda *= -2;
      if (e >= 3) lambda = 0;
    }
    if (lambda != 0) total += lambda * static_cast<std::int64_t>(genus_X0(N / d).genus);
  }
  return total;
}

// Memoised new-subspace dimensions. Lookups and inserts are guarded so the
// table behaves as one map under concurrent callers; two threads may both
// compute a level, and the first insert wins (values are identical).
class DimensionTable {
 public:
  std::uint64_t dim_s2_new(std::uint64_t N) {
    if (N == 0) throw PreconditionError("level must be positive");
    {
      std::shared_lock lock(mutex_);
      if (auto it = new_dims_.find(N); it != new_dims_.end()) return it->second;
    }
    const auto fac = detail::small_factors(N);
    std::int64_t value = static_cast<std::int64_t>(genus_X0(N).genus);
    for (auto M : detail::small_divisors(fac)) {
      if (M == N) continue;
      value -= static_cast<std::int64_t>(detail::sigma0(N / M) * dim_s2_new(M));
    }
    if (value < 0) {
      throw ComputationError("negative new-subspace dimension at level " + std::to_string(N));
    }
    std::unique_lock lock(mutex_);
    return new_dims_.try_emplace(N, static_cast<std::uint64_t>(value)).first->second;
  }

  DimensionRecord record(std::uint64_t N) {
    auto r = genus_X0(N);
    r.dim_s2_new = dim_s2_new(N);
    return r;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return new_dims_.size();
  }

  // Process-wide table.
  static DimensionTable& shared() {
    static DimensionTable table;
    return table;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, std::uint64_t> new_dims_;
};

inline std::uint64_t dim_s2_new(std::uint64_t N) { return DimensionTable::shared().dim_s2_new(N); }

// Σ_{M|N} σ₀(N/M)·dim S₂new(M); equals genus_X0(N).genus when the table is right.
inline std::uint64_t old_plus_new_dimension(std::uint64_t N, DimensionTable& table) {
  std::uint64_t total = 0;
  for (auto M : detail::small_divisors(detail::small_factors(N))) {
    total += detail::sigma0(N / M) * table.dim_s2_new(M);
  }
  return total;
}

// Levels carrying no weight-2 newforms on Γ0(N).
inline constexpr std::array<std::uint64_t, 17> kNewformFreeLevels{
    1, 2, 3, 4, 5, 7, 8, 9, 10, 12, 13, 16, 18, 22, 25, 28, 60};

struct LevelCheck {
  DimensionRecord record;
  std::int64_t by_inversion = 0;
};

struct NoNewformReport {
  std::vector<LevelCheck> levels;
  std::vector<std::uint64_t> nonzero;       // levels with a newform
  std::vector<std::uint64_t> disagreement;  // recursion vs inversion mismatch

  bool ok() const { return nonzero.empty() && disagreement.empty(); }

  void require() const {
    if (ok()) return;
    std::string msg = "newform-free level check failed:";
    for (auto N : nonzero) msg += " dim S2new(" + std::to_string(N) + ") != 0;";
    for (auto N : disagreement) msg += " methods disagree at " + std::to_string(N) + ";";
    throw ComputationError(msg);
  }
};

template <class Levels = decltype(kNewformFreeLevels)>
NoNewformReport verify_no_newform_levels(const Levels& levels = kNewformFreeLevels,
                                         DimensionTable& table = DimensionTable::shared()) {
  NoNewformReport report;
  for (std::uint64_t N : levels) {
    LevelCheck check{table.record(N), dim_s2_new_by_inversion(N)};
    if (check.record.dim_s2_new != 0) report.nonzero.push_back(N);
    if (check.by_inversion != static_cast<std::int64_t>(check.record.dim_s2_new)) {
      report.disagreement.push_back(N);
    }
    report.levels.push_back(check);
  }
  return report;
}

}  // namespace frey
