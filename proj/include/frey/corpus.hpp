// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Random valid (n,n,2) instances, stratified over the five cases, plus the
// per-instance cross-checks between the closed forms and direct Weierstrass
// computations.

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "frey/arith.hpp"
#include "frey/classifier.hpp"
#include "frey/weierstrass.hpp"

namespace frey {

struct CorpusEntry {
  TernaryInstance instance;
  FreyAnalysis analysis;
};

namespace detail {

// Writes t = C·c² with C squarefree (sign carried by C) and c > 0.
inline void split_square(const Integer& t, Integer& C, Integer& c) {
  C = sgn(t);
  c = 1;
  for (const auto& f : factorize(t).factors) {
    if (f.exponent % 2 == 1) C *= f.prime;
    c *= ipow(f.prime, f.exponent / 2);
  }
}

inline Integer random_odd(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    long v = dist(rng);
    if (v % 2 != 0) return v;
  }
}

inline Integer random_nonzero(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    long v = dist(rng);
    if (v != 0) return v;
  }
}

}  // namespace detail

// `per_case` instances of each case I..V (so 5·per_case in total), drawn from a
// seeded generator. Throws if the attempt budget runs out first.
inline std::vector<CorpusEntry> generate_corpus(std::size_t per_case, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  static constexpr std::array<unsigned long, 3> kExponents{7, 11, 13};
  std::array<std::size_t, 5> counts{};
  std::vector<CorpusEntry> out;
  out.reserve(per_case * 5);

  const std::size_t max_attempts = 400 * per_case + 10'000;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < per_case * 5; ++attempt) {
    const int target = static_cast<int>(attempt % 5);
    TernaryInstance t;
    t.n = kExponents[std::uniform_int_distribution<std::size_t>(0, 2)(rng)];
    t.A = detail::random_odd(rng, 45);
    t.a = detail::random_odd(rng, 7);
    t.b = detail::random_odd(rng, 7);
    Integer odd_part = detail::random_odd(rng, 15);
    unsigned long twos = 0;
    switch (target) {
      case 0:
        break;
      case 1:
        twos = 1;
        break;
      case 2:
        twos = 2;
        break;
      case 3:
        twos = std::uniform_int_distribution<unsigned long>(3, 5)(rng);
        break;
      default:
        if (rng() % 2 == 0) {
          twos = 6;
        } else {
          t.b = 2 * detail::random_nonzero(rng, 3);
        }
        break;
    }
    t.B = odd_part << twos;
    if (gcd(t.A * t.a, t.B * t.b) != 1) continue;
    const Integer rhs = t.lhs();
    if (rhs == 0) continue;
    try {
      detail::split_square(rhs, t.C, t.c);
      if (rng() % 2 == 0) t.c = -t.c;
      if (!validate(t).empty()) continue;
      auto fa = analyze(t);
      auto& slot = counts[static_cast<std::size_t>(fa.label)];
      if (slot >= per_case) continue;
      ++slot;
      out.push_back({t, std::move(fa)});
    } catch (const BudgetExceeded&) {
      continue;
    }
  }
  if (out.size() < per_case * 5) {
    throw ComputationError("corpus generation ran out of attempts");
  }
  return out;
}

// Results of the direct cross-checks on one analysed instance.
struct CrossCheck {
  bool discriminant = true;  // Weierstrass Δ equals the closed form
  bool odd_conductor = true;  // multiplicative at odd s | abAB, s ∤ C; additive (2) at s | C, s ≥ 5
  bool two_adic = true;       // case V only: reduction at 2 reproduces the 2-exponent
  bool two_torsion = true;    // (0,0) is a 2-torsion point
  std::vector<std::string> problems;

  bool ok() const { return discriminant && odd_conductor && two_adic && two_torsion; }
};

inline CrossCheck cross_check(const FreyAnalysis& fa) {
  CrossCheck cc;
  const auto& t = fa.normalized;
  const auto inv = compute_invariants(fa.curve);

  if (inv.disc != fa.disc_closed_form) {
    cc.discriminant = false;
    cc.problems.push_back("disc " + to_string(inv.disc) + " != closed form " +
                          to_string(fa.disc_closed_form));
  }

  for (const auto& s : odd_prime_support({t.a, t.b, t.A, t.B})) {
    if (mpz_divisible_p(t.C.get_mpz_t(), s.get_mpz_t())) continue;
    auto r = reduction_type(inv, s);
    if (r.kind != ReductionKind::Multiplicative || r.conductor_exponent != 1u) {
      cc.odd_conductor = false;
      cc.problems.push_back("expected multiplicative reduction at " + to_string(s));
    }
  }
  for (const auto& s : odd_prime_support({t.C})) {
    auto r = reduction_type(inv, s);
    if (s == 3) {
      if (r.kind != ReductionKind::Additive) {
        cc.odd_conductor = false;
        cc.problems.push_back("expected additive reduction at 3");
      }
      continue;
    }
    if (r.kind != ReductionKind::Additive || r.conductor_exponent != 2u) {
      cc.odd_conductor = false;
      cc.problems.push_back("expected additive reduction with exponent 2 at " + to_string(s));
    }
  }

  if (fa.label == CaseLabel::V) {
    auto r = reduction_type_at_2(inv);
    if (!r.conductor_exponent ||
        static_cast<int>(*r.conductor_exponent) != fa.conductor_2_exponent) {
      cc.two_adic = false;
      cc.problems.push_back("2-adic reduction does not reproduce exponent " +
                            std::to_string(fa.conductor_2_exponent));
    }
  }

  if (!fa.curve.is_two_torsion(0, 0)) {
    cc.two_torsion = false;
    cc.problems.push_back("(0,0) is not a 2-torsion point");
  }
  return cc;
}

}  // namespace frey
