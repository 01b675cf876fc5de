// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

/* Integral long Weierstrass models

   Y² + a₁XY + a₃Y = X³ + a₂X² + a₄X + a₆
   b₂ = a₁² + 4a₂
   b₄ = 2a₄ + a₁a₃
   b₆ = a₃² + 4a₆
   b₈ = a₁²a₆ + 4a₂a₆ - a₁a₃a₄ + a₂a₃² - a₄²
   c₄ = b₂² - 24b₄
   c₆ = -b₂³ + 36b₂b₄ - 216b₆
   Δ  = -b₂²b₈ - 8b₄³ - 27b₆² + 9b₂b₄b₆
   j  = c₄³/Δ

   Local reduction is decided by the cheap criterion on a model already known
   to be minimal: good iff s ∤ Δ, multiplicative iff s | Δ and s ∤ c₄,
   additive otherwise. No Tate's algorithm, no minimisation.
 */

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "frey/arith.hpp"

namespace frey {

struct WeierstrassCurve {
  Integer a1, a2, a3, a4, a6;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

  bool contains(const Integer& x, const Integer& y) const {
    return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6;
  }

  // (x, y) is on the curve and equals its own negative.
  bool is_two_torsion(const Integer& x, const Integer& y) const {
    return contains(x, y) && 2 * y + a1 * x + a3 == 0;
  }

  std::string to_string() const {
    return "[" + frey::to_string(a1) + "," + frey::to_string(a2) + "," + frey::to_string(a3) +
           "," + frey::to_string(a4) + "," + frey::to_string(a6) + "]";
  }
};

struct JInvariant {
  Integer num, den;  // lowest terms, den > 0
};

struct CurveInvariants {
  Integer b2, b4, b6, b8, c4, c6, disc;
  std::optional<JInvariant> j;

  bool singular() const { return disc == 0; }

  const JInvariant& j_invariant() const {
    if (!j) throw SingularModel("singular model: discriminant is 0, j undefined");
    return *j;
  }
};

inline CurveInvariants compute_invariants(const WeierstrassCurve& e) {
  CurveInvariants inv;
  inv.b2 = e.a1 * e.a1 + 4 * e.a2;
  inv.b4 = 2 * e.a4 + e.a1 * e.a3;
  inv.b6 = e.a3 * e.a3 + 4 * e.a6;
  inv.b8 = e.a1 * e.a1 * e.a6 + 4 * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 -
           e.a4 * e.a4;
  inv.c4 = inv.b2 * inv.b2 - 24 * inv.b4;
  inv.c6 = -inv.b2 * inv.b2 * inv.b2 + 36 * inv.b2 * inv.b4 - 216 * inv.b6;
  inv.disc = -inv.b2 * inv.b2 * inv.b8 - 8 * inv.b4 * inv.b4 * inv.b4 - 27 * inv.b6 * inv.b6 +
             9 * inv.b2 * inv.b4 * inv.b6;
  if (inv.disc != 0) {
    Integer num = inv.c4 * inv.c4 * inv.c4;
    Integer den = inv.disc;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Integer g = gcd(num, den);
    inv.j = JInvariant{num / g, den / g};
  }
  return inv;
}

enum class ReductionKind { Good, Multiplicative, Additive };

inline const char* to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::Good:
      return "good";
    case ReductionKind::Multiplicative:
      return "multiplicative";
    case ReductionKind::Additive:
      return "additive";
  }
  return "?";
}

struct LocalReduction {
  Integer prime;
  ReductionKind kind = ReductionKind::Good;
  std::optional<unsigned> conductor_exponent;  // empty means "unknown"
  bool minimal_model_checked = false;
};

namespace detail {

// Valuation with v(0) = infinity, represented as nullopt.
inline std::optional<unsigned long> valuation_or_inf(const Integer& m, const Integer& p) {
  if (m == 0) return std::nullopt;
  return padic_valuation(m, p);
}

inline bool below(const std::optional<unsigned long>& v, unsigned long bound) {
  return v.has_value() && *v < bound;
}

inline void require_odd_prime(const Integer& s) {
  require_prime(s, "reduction prime");
  if (s == 2) throw PreconditionError("expected an odd prime, got 2");
}

}  // namespace detail

inline bool is_minimal_at(const CurveInvariants& inv, const Integer& s) {
  detail::require_odd_prime(s);
  if (inv.singular()) throw SingularModel("minimality is undefined for a singular model");
  return detail::below(detail::valuation_or_inf(inv.c4, s), 4) ||
         detail::below(detail::valuation_or_inf(inv.disc, s), 12);
}

inline bool is_minimal_at(const WeierstrassCurve& e, const Integer& s) {
  return is_minimal_at(compute_invariants(e), s);
}

inline LocalReduction reduction_type(const CurveInvariants& inv, const Integer& s) {
  if (!is_minimal_at(inv, s)) {
    throw NonMinimalModel("model is not known to be minimal at " + to_string(s) +
                          "; minimise it before asking for the reduction type");
  }
  LocalReduction r{s, ReductionKind::Good, 0u, true};
  if (padic_valuation(inv.disc, s) == 0) return r;
  if (inv.c4 != 0 && padic_valuation(inv.c4, s) == 0) {
    r.kind = ReductionKind::Multiplicative;
    r.conductor_exponent = 1;
    return r;
  }
  r.kind = ReductionKind::Additive;
  if (s >= 5) {
    r.conductor_exponent = 2;
  } else {
    r.conductor_exponent.reset();  // wild at 3
  }
  return r;
}

inline LocalReduction reduction_type(const WeierstrassCurve& e, const Integer& s) {
  return reduction_type(compute_invariants(e), s);
}

inline LocalReduction reduction_type_at_2(const CurveInvariants& inv) {
  if (inv.singular()) throw SingularModel("reduction type of a singular model");
  LocalReduction r{2, ReductionKind::Good, 0u, true};
  if (padic_valuation(inv.disc, 2) == 0) return r;
  if (inv.c4 != 0 && padic_valuation(inv.c4, 2) == 0) {
    r.kind = ReductionKind::Multiplicative;
    r.conductor_exponent = 1;
    return r;
  }
  r.kind = ReductionKind::Additive;
  r.conductor_exponent.reset();
  r.minimal_model_checked = false;
  return r;
}

inline LocalReduction reduction_type_at_2(const WeierstrassCurve& e) {
  return reduction_type_at_2(compute_invariants(e));
}

inline constexpr unsigned long kMaxTracePrime = 10'000;

// a_p = p + 1 - #E(F_p). For odd p the y-count per x comes from the
// discriminant of y² + (a₁x + a₃)y - f(x) and a table of square residues.
inline long ap_trace(const WeierstrassCurve& e, unsigned long p) {
  if (p > kMaxTracePrime) throw PreconditionError("ap_trace prime above enumeration budget");
  require_prime(Integer(p), "trace prime");
  const auto inv = compute_invariants(e);
  if (inv.singular() || mpz_divisible_ui_p(inv.disc.get_mpz_t(), p)) {
    throw PreconditionError("ap_trace: " + std::to_string(p) + " is a bad prime");
  }
  const unsigned long a1 = residue(e.a1, p), a2 = residue(e.a2, p), a3 = residue(e.a3, p),
                      a4 = residue(e.a4, p), a6 = residue(e.a6, p);
  unsigned long points = 1;  // infinity
  if (p == 2) {
    for (unsigned long x = 0; x < 2; ++x) {
      for (unsigned long y = 0; y < 2; ++y) {
        unsigned long lhs = (y * y + a1 * x * y + a3 * y) % 2;
        unsigned long rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2;
        if (lhs == rhs) ++points;
      }
    }
  } else {
    std::vector<unsigned> roots(p, 0);
    for (unsigned long y = 0; y < p; ++y) ++roots[y * y % p];
    for (unsigned long x = 0; x < p; ++x) {
      unsigned long u = (a1 * x + a3) % p;
      unsigned long f = ((x * x % p) * x + a2 * (x * x % p) + a4 * x + a6) % p;
      points += roots[(u * u + 4 * f) % p];
    }
  }
  return static_cast<long>(p + 1) - static_cast<long>(points);
}

}  // namespace frey
