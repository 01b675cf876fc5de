// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Signature (n,n,2): A·aⁿ + B·bⁿ = C·c².
//
// Instances are normalised into one of the five Bennett–Skinner cases, the
// attached Frey curve is built, and the closed forms for its discriminant,
// conductor and the level predicted by level lowering are evaluated.
//
//   case  curve  Frey model
//   I,II  E1     Y² = X³ + 2cC·X² + BCbⁿ·X
//   III,IV E2    Y² = X³ + cC·X² + (BCbⁿ/4)·X
//   V     E3     Y² + XY = X³ + ((cC−1)/4)·X² + (BCbⁿ/64)·X
//
// Discriminant: 2^δ·C³B²A(ab²)ⁿ with δ = 6, 0, −12 for E1, E2, E3.
// Conductor:    2^e·C²·∏ s over odd s | abAB.
// Level:        2^f·C²·∏ t over odd t | AB.
//
// The tabulated 2-exponents for case V (α ∈ {−1, 0}, β ∈ {−1, 0, 1}) assume
// the radical absorbs the prime 2. Since the radicals here run over odd
// primes only, case V adds 1 to α always and to β whenever 2 | AB; this
// matches the reduction type of E3 at 2 computed directly.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frey/arith.hpp"
#include "frey/weierstrass.hpp"

namespace frey {

struct TernaryInstance {
  Integer A, B, C, a, b, c;
  unsigned long n = 7;

  friend bool operator==(const TernaryInstance&, const TernaryInstance&) = default;

  Integer lhs() const { return A * ipow(a, n) + B * ipow(b, n); }
  Integer rhs() const { return C * c * c; }

  std::string to_string() const {
    return "(" + frey::to_string(A) + "," + frey::to_string(B) + "," + frey::to_string(C) + "," +
           frey::to_string(a) + "," + frey::to_string(b) + "," + frey::to_string(c) + "," +
           std::to_string(n) + ")";
  }
};

enum class CaseLabel { I, II, III, IV, V };

inline const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::I:
      return "I";
    case CaseLabel::II:
      return "II";
    case CaseLabel::III:
      return "III";
    case CaseLabel::IV:
      return "IV";
    case CaseLabel::V:
      return "V";
  }
  return "?";
}

inline int curve_index(CaseLabel c) {
  switch (c) {
    case CaseLabel::I:
    case CaseLabel::II:
      return 1;
    case CaseLabel::III:
    case CaseLabel::IV:
      return 2;
    case CaseLabel::V:
      return 3;
  }
  return 0;
}

inline int delta_exponent(int curve) {
  switch (curve) {
    case 1:
      return 6;
    case 2:
      return 0;
    default:
      return -12;
  }
}

// Every violated hypothesis, in a fixed order. Empty means valid.
inline std::vector<std::string> validate(const TernaryInstance& t) {
  std::vector<std::string> violations;
  if (t.n < 7 || !is_prime_u64(t.n)) violations.push_back("n is not a prime >= 7");

  const std::pair<const char*, const Integer*> entries[] = {
      {"A", &t.A}, {"B", &t.B}, {"C", &t.C}, {"a", &t.a}, {"b", &t.b}, {"c", &t.c}};
  bool any_zero = false;
  for (const auto& [name, v] : entries) {
    if (*v == 0) {
      violations.push_back(std::string(name) + " is zero");
      any_zero = true;
    }
  }
  if (any_zero) return violations;

  if (t.lhs() != t.rhs()) violations.push_back("equation A*a^n + B*b^n = C*c^2 does not hold");

  const Integer Aa = t.A * t.a, Bb = t.B * t.b, Cc = t.C * t.c;
  if (gcd(Aa, Bb) != 1) violations.push_back("Aa and Bb are not coprime");
  if (gcd(Aa, Cc) != 1) violations.push_back("Aa and Cc are not coprime");
  if (gcd(Bb, Cc) != 1) violations.push_back("Bb and Cc are not coprime");

  for (const auto& [name, v] : {std::pair{"A", &t.A}, std::pair{"B", &t.B}}) {
    for (const auto& f : factorize(*v).factors) {
      if (f.exponent >= t.n) {
        violations.push_back(std::string("ord_") + frey::to_string(f.prime) + "(" + name +
                             ") >= n");
      }
    }
  }
  if (!is_squarefree(t.C)) violations.push_back("C is not squarefree");
  return violations;
}

namespace detail {

inline unsigned long ord2(const Integer& m) { return m == 0 ? 0 : mpz_scan1(m.get_mpz_t(), 0); }

inline bool odd(const Integer& m) { return mpz_odd_p(m.get_mpz_t()) != 0; }

inline bool congruent_mod4(const Integer& x, const Integer& y) {
  return residue(x - y, 4) == 0;
}

}  // namespace detail

// First case, in the order I..V, whose defining congruences hold for this
// exact presentation.
inline std::optional<CaseLabel> match_case(const TernaryInstance& t) {
  using detail::congruent_mod4;
  using detail::odd;
  using detail::ord2;
  const bool ab_odd = odd(t.a) && odd(t.b);
  const unsigned long vB = ord2(t.B);

  if (ab_odd && odd(t.A) && odd(t.B) && odd(t.C) && congruent_mod4(t.b, -t.B * t.C)) {
    return CaseLabel::I;
  }
  if (ab_odd && (vB == 1 || ord2(t.C) == 1)) return CaseLabel::II;
  // Read as c ≡ −bB/4 (mod 4); with an upper-case C the two conductor rows
  // of case III could not both occur.
  if (ab_odd && vB == 2 && congruent_mod4(t.c, -t.b * (t.B / 4))) return CaseLabel::III;
  if (ab_odd && vB >= 3 && vB <= 5 && congruent_mod4(t.c, t.C)) return CaseLabel::IV;
  if (ord2(t.B * ipow(t.b, t.n)) >= 6 && congruent_mod4(t.c, t.C)) return CaseLabel::V;
  return std::nullopt;
}

enum class Move { Identity, NegateC, Swap, SwapNegateC };

inline const char* to_string(Move m) {
  switch (m) {
    case Move::Identity:
      return "identity";
    case Move::NegateC:
      return "negate c";
    case Move::Swap:
      return "swap (A,a)<->(B,b)";
    case Move::SwapNegateC:
      return "swap (A,a)<->(B,b), negate c";
  }
  return "?";
}

inline TernaryInstance apply(Move m, TernaryInstance t) {
  if (m == Move::Swap || m == Move::SwapNegateC) {
    std::swap(t.A, t.B);
    std::swap(t.a, t.b);
  }
  if (m == Move::NegateC || m == Move::SwapNegateC) t.c = -t.c;
  return t;
}

struct Normalization {
  TernaryInstance instance;
  Move move = Move::Identity;
  CaseLabel label = CaseLabel::I;
};

inline void require_valid(const TernaryInstance& t) {
  auto violations = validate(t);
  if (violations.empty()) return;
  std::string msg = "invalid instance " + t.to_string() + ":";
  for (const auto& v : violations) msg += " " + v + ";";
  throw PreconditionError(msg);
}

// Tries identity, c-negation, swap, swap + c-negation and keeps the first
// presentation that lands in some case.
inline Normalization normalize(const TernaryInstance& t) {
  require_valid(t);
  for (Move m : {Move::Identity, Move::NegateC, Move::Swap, Move::SwapNegateC}) {
    auto candidate = apply(m, t);
    if (auto label = match_case(candidate)) return {std::move(candidate), m, *label};
  }
  throw Unclassifiable("no presentation of " + t.to_string() + " matches cases I-V");
}

inline CaseLabel classify(const TernaryInstance& normalized) {
  if (auto label = match_case(normalized)) return *label;
  throw Unclassifiable("instance " + normalized.to_string() +
                       " is not normalized into any of cases I-V");
}

inline WeierstrassCurve build_frey(const TernaryInstance& t, CaseLabel label) {
  const Integer cC = t.c * t.C;
  const Integer BCbn = t.B * t.C * ipow(t.b, t.n);
  auto exact_div = [](const Integer& num, unsigned long d, const char* what) {
    if (!mpz_divisible_ui_p(num.get_mpz_t(), d)) {
      throw ComputationError(std::string("internal: ") + what + " is not integral");
    }
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), d);
    return q;
  };
  switch (curve_index(label)) {
    case 1:
      return {0, 2 * cC, 0, BCbn, 0};
    case 2:
      return {0, cC, 0, exact_div(BCbn, 4, "BCb^n/4"), 0};
    default:
      return {1, exact_div(cC - 1, 4, "(cC-1)/4"), 0, exact_div(BCbn, 64, "BCb^n/64"), 0};
  }
}

// Tabulated 2-exponent α of the conductor.
inline int conductor_alpha(const TernaryInstance& t, CaseLabel label) {
  const unsigned long vB = detail::ord2(t.B);
  switch (label) {
    case CaseLabel::I:
      return 5;
    case CaseLabel::II:
      return 6;
    case CaseLabel::III: {
      // b ≡ −BC/4 gives 1, b ≡ BC/4 gives 2.
      const Integer quarter = t.B * t.C / 4;
      return detail::congruent_mod4(t.b, -quarter) ? 1 : 2;
    }
    case CaseLabel::IV:
      return vB == 3 ? 4 : 2;
    case CaseLabel::V:
      return detail::ord2(t.B * ipow(t.b, t.n)) == 6 ? -1 : 0;
  }
  return 0;
}

// Tabulated 2-exponent β of the level.
inline int level_beta(CaseLabel label, int alpha, unsigned long ord2_B) {
  if (label != CaseLabel::V) return alpha;
  if (ord2_B == 0) return 1;
  if (ord2_B == 6) return -1;
  return 0;
}

inline int conductor_two_exponent(CaseLabel label, int alpha) {
  return label == CaseLabel::V ? alpha + 1 : alpha;
}

inline int level_two_exponent(CaseLabel label, int beta, bool two_divides_AB) {
  return label == CaseLabel::V && two_divides_AB ? beta + 1 : beta;
}

inline Integer assemble_level(int two_exponent, const Integer& C,
                              const std::vector<Integer>& odd_primes) {
  if (two_exponent < 0) throw ComputationError("internal: negative 2-exponent");
  Integer out = ipow(2, static_cast<unsigned long>(two_exponent)) * C * C;
  for (const auto& p : odd_primes) out *= p;
  return out;
}

struct FreyAnalysis {
  TernaryInstance normalized;
  Move move = Move::Identity;
  CaseLabel label = CaseLabel::I;
  int curve_index = 1;
  WeierstrassCurve curve;
  int delta_exp = 0;
  Integer disc_closed_form;
  int table_alpha = 0;
  int table_beta = 0;
  int conductor_2_exponent = 0;
  Integer conductor;
  int level_2_exponent = 0;
  Integer level;
  // |ab| = 1 may give a CM curve, where level lowering says nothing.
  bool level_lowering_applicable = true;
};

inline Integer closed_form_discriminant(const TernaryInstance& t, int delta) {
  Integer v = t.C * t.C * t.C * t.B * t.B * t.A * ipow(t.a, t.n) * ipow(t.b, 2 * t.n);
  if (delta >= 0) return v << static_cast<unsigned long>(delta);
  const auto shift = static_cast<unsigned long>(-delta);
  if (v == 0 || detail::ord2(v) < shift) {
    throw ComputationError("internal: closed-form discriminant is not integral");
  }
  return v >> shift;  // exact: shift <= ord2(v)
}

inline FreyAnalysis analyze(const TernaryInstance& input) {
  auto norm = normalize(input);
  const auto& t = norm.instance;

  FreyAnalysis fa;
  fa.normalized = t;
  fa.move = norm.move;
  fa.label = classify(t);
  fa.curve_index = curve_index(fa.label);
  fa.curve = build_frey(t, fa.label);
  fa.delta_exp = delta_exponent(fa.curve_index);
  fa.disc_closed_form = closed_form_discriminant(t, fa.delta_exp);

  const unsigned long vB = detail::ord2(t.B);
  fa.table_alpha = conductor_alpha(t, fa.label);
  fa.table_beta = level_beta(fa.label, fa.table_alpha, vB);
  fa.conductor_2_exponent = conductor_two_exponent(fa.label, fa.table_alpha);
  fa.level_2_exponent =
      level_two_exponent(fa.label, fa.table_beta, detail::ord2(t.A * t.B) > 0);
  fa.conductor = assemble_level(fa.conductor_2_exponent, t.C,
                                odd_prime_support({t.a, t.b, t.A, t.B}));
  fa.level = assemble_level(fa.level_2_exponent, t.C, odd_prime_support({t.A, t.B}));
  fa.level_lowering_applicable = abs(t.a * t.b) != 1;
  return fa;
}

}  // namespace frey
