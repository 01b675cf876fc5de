// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Non-existence certificates for the families
//
//   x² + q^α·pⁿ = yⁿ   (sign +)      x² − q^α·pⁿ = yⁿ   (sign −)
//
// with x odd, gcd(x, y) = 1, n ≥ 7 prime, p ∉ {2, q} prime. A hypothetical
// solution is rewritten as the (n,n,2) equation ∓q^α'·aⁿ + 1·yⁿ = 1·(±x)²,
// parity forces case V, and the level predicted by level lowering is read off
// the classifier's tables. When that level carries no newforms the family
// has no solutions, modulo the cited theorems.
//
// The work is symbolic in p, n and α. α is split into the generic subcase
// (α mod n ≠ 0, odd level primes {q}) and the degenerate one (α ≡ 0 mod n,
// A = ±1, empty radical) whenever both can occur.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frey/arith.hpp"
#include "frey/classifier.hpp"
#include "frey/dimensions.hpp"

namespace frey {

enum class Sign { Plus, Minus };

inline const char* to_string(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

struct AlphaSpec {
  enum class Kind { Exact, Any, Odd, Even };
  Kind kind = Kind::Any;
  unsigned long value = 0;  // used when kind == Exact

  static AlphaSpec exact(unsigned long v) { return {Kind::Exact, v}; }
  static AlphaSpec any() { return {Kind::Any, 0}; }
  static AlphaSpec odd() { return {Kind::Odd, 0}; }
  static AlphaSpec even() { return {Kind::Even, 0}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::Exact:
        return std::to_string(value);
      case Kind::Any:
        return "any";
      case Kind::Odd:
        return "odd";
      case Kind::Even:
        return "even";
    }
    return "?";
  }
};

struct Hypotheses {
  bool x_odd = true;
  bool coprime = true;
  bool positive = true;
};

struct FamilySpec {
  Sign sign = Sign::Plus;
  Integer q = 5;
  AlphaSpec alpha;
  std::optional<Integer> p;       // empty: any admissible prime
  std::optional<unsigned long> n;  // empty: any prime >= 7
  Hypotheses hypotheses;
};

// Rejects malformed families; q = 2 is well-formed but not certifiable.
inline void validate_family(const FamilySpec& f) {
  require_prime(f.q, "q");
  if (f.alpha.kind == AlphaSpec::Kind::Exact && f.alpha.value == 0) {
    throw PreconditionError("alpha must be >= 1");
  }
  if (f.p) {
    require_prime(*f.p, "p");
    if (*f.p == 2 || *f.p == f.q) throw PreconditionError("p must avoid {2, q}");
  }
  if (f.n && (*f.n < 7 || !is_prime_u64(*f.n))) {
    throw PreconditionError("n must be a prime >= 7");
  }
}

struct TernaryTemplate {
  std::string A, B, C, a, b, c, n;
};

struct ParityFact {
  std::string fact;
  std::string justification;
};

enum class Conclusion { NoSolutions, Inconclusive };

inline const char* to_string(Conclusion c) {
  return c == Conclusion::NoSolutions ? "NoSolutions" : "Inconclusive";
}

struct Certificate {
  FamilySpec family;
  std::vector<std::string> hypotheses;
  TernaryTemplate ternary_template;
  std::vector<ParityFact> parity_facts;
  std::optional<CaseLabel> case_label;
  std::optional<Integer> level;
  std::optional<std::uint64_t> dim_new_at_level;
  Conclusion conclusion = Conclusion::Inconclusive;
  std::vector<std::string> assumed_theorems;
  std::vector<std::string> footnotes;
};

namespace detail {

struct AlphaSubcases {
  bool generic = false;     // some admissible (α, n) has α mod n != 0
  bool degenerate = false;  // some admissible (α, n) has α ≡ 0 mod n
};

inline bool has_prime_factor_at_least(unsigned long m, unsigned long bound) {
  for (const auto& f : factorize(Integer(m)).factors) {
    if (f.prime >= bound) return true;
  }
  return false;
}

inline AlphaSubcases alpha_subcases(const FamilySpec& f) {
  if (f.alpha.kind != AlphaSpec::Kind::Exact) return {true, true};  // α = n or 2n, α = 1 or 2
  const unsigned long alpha = f.alpha.value;
  if (f.n) return {alpha % *f.n != 0, alpha % *f.n == 0};
  return {true, has_prime_factor_at_least(alpha, 7)};
}

inline std::string power(const std::string& base, const std::string& exp) {
  return exp == "1" ? base : base + "^" + exp;
}

}  // namespace detail

struct DerivedTernary {
  TernaryTemplate ternary;
  std::vector<std::string> footnotes;
};

// Ternary presentation of a hypothetical solution; `degenerate` selects the
// α ≡ 0 (mod n) subcase.
inline DerivedTernary derive_ternary(const FamilySpec& f, bool degenerate = false) {
  DerivedTernary out;
  auto& t = out.ternary;
  const std::string q = to_string(f.q);
  const std::string p = f.p ? to_string(*f.p) : "p";
  const std::string sign = f.sign == Sign::Plus ? "-" : "";
  t.n = f.n ? std::to_string(*f.n) : "n";
  t.B = "1";
  t.C = "1";
  t.b = "y";
  t.c = "±x, sign fixed so that c ≡ 1 (mod 4)";

  const bool exact = f.alpha.kind == AlphaSpec::Kind::Exact;
  if (degenerate) {
    t.A = f.sign == Sign::Plus ? "-1" : "1";
    const std::string k =
        exact && f.n ? std::to_string(f.alpha.value / *f.n) : "α/" + t.n;
    t.a = detail::power(q, k) + "·" + p;
    out.footnotes.push_back("α ≡ 0 (mod n): q^α·pⁿ = (q^(α/n)·p)ⁿ, so A = " + t.A +
                            " and no odd prime divides AB");
    return out;
  }

  if (exact && (f.n || f.alpha.value < 7)) {
    const unsigned long n = f.n ? *f.n : 7;  // α < 7 ≤ n: no reduction
    const unsigned long reduced = f.alpha.value % n;
    const unsigned long carried = f.n ? f.alpha.value / n : 0;
    t.A = sign + detail::power(q, std::to_string(reduced));
    t.a = carried == 0 ? p : detail::power(q, std::to_string(carried)) + "·" + p;
    if (carried > 0) {
      out.footnotes.push_back("valuation reduction: α = " + std::to_string(f.alpha.value) +
                              " ≥ n, so q^" + std::to_string(carried * n) +
                              " is absorbed into a and ord_q(A) = " + std::to_string(reduced) +
                              " < n");
    }
  } else {
    t.A = sign + q + "^α'";
    t.a = q + "^⌊α/" + t.n + "⌋·" + p;
    out.footnotes.push_back("valuation reduction: α' = α mod " + t.n +
                            " with 0 < α' < n; q^(n⌊α/n⌋) is absorbed into a so ord_q(A) < n");
  }
  return out;
}

struct ParityDerivation {
  std::vector<ParityFact> facts;
  std::optional<std::string> failure;  // first fact that could not be derived
};

inline ParityDerivation derive_parity_facts(const FamilySpec& f) {
  ParityDerivation d;
  const std::string q = to_string(f.q);
  const auto& h = f.hypotheses;

  if (!h.x_odd) {
    d.failure = "y even cannot be derived without the hypothesis x odd";
    return d;
  }
  if (f.q == 2) {
    d.failure = "y even cannot be derived when q = 2";
    return d;
  }
  d.facts.push_back({"y is even",
                     "x² is odd and q^α·pⁿ is odd (p, " + q +
                         " odd), so yⁿ = x² ∓ q^α·pⁿ is even"});

  if (!h.coprime) {
    d.failure = "coprimality of Aa, Bb, Cc needs gcd(x, y) = 1";
    return d;
  }
  d.facts.push_back({"p ∤ xy and " + q + " ∤ xy; Aa, Bb = y, Cc = ±x are pairwise coprime",
                     "a prime dividing q·p and one of x, y divides the other through the "
                     "equation, contradicting gcd(x, y) = 1"});

  d.facts.push_back({"c ≡ 1 ≡ C (mod 4) after replacing x by −x if needed",
                     "x is odd, so exactly one of ±x is 1 mod 4; the equation only sees x²"});

  const std::string n = f.n ? std::to_string(*f.n) : "n";
  d.facts.push_back({"ord₂(B·bⁿ) = " + n + "·ord₂(y) ≥ 7 ≥ 6, so case V applies",
                     "B = 1, b = y is even and n ≥ 7"});

  if (!h.positive) {
    d.failure = "the no-CM proxy |ab| ≠ 1 needs y ≥ 1";
    return d;
  }
  d.facts.push_back({"|ab| ≥ 2p > 1, so the Frey curve is not CM by the |ab| ≠ 1 criterion",
                     "a is divisible by p ≥ 3 and b = y is even and positive, so |b| ≥ 2"});
  return d;
}

// Level predicted for the case-V Frey curve of the family: B = C = 1,
// ord₂(B) = 0, odd primes of AB are {q} unless A = ±1.
inline Integer family_level(const FamilySpec& f, bool degenerate) {
  const int alpha = 0;  // ord₂(Bbⁿ) ≥ 7
  const int beta = level_beta(CaseLabel::V, alpha, /*ord2_B=*/0);
  const int two_exp = level_two_exponent(CaseLabel::V, beta, /*two_divides_AB=*/false);
  std::vector<Integer> odd_primes;
  if (!degenerate) odd_primes.push_back(f.q);
  return assemble_level(two_exp, 1, odd_primes);
}

inline std::vector<std::string> assumed_theorems() {
  return {
      "Modularity of elliptic curves over Q (Wiles; Breuil, Conrad, Diamond, Taylor)",
      "Irreducibility of the mod-n Galois representation of the Frey curve for prime n >= 7 "
      "(Mazur; Bennett-Skinner)",
      "Level lowering for signature (n,n,2) (Ribet; Bennett-Skinner): a Frey curve E_i(a,b,c) "
      "without CM satisfies E ~_n f for some weight-2 newform f of level N_n",
      "Bennett-Skinner tables for the discriminant, conductor and level of E_1, E_2, E_3",
  };
}

inline Certificate certify(const FamilySpec& f, DimensionTable& table = DimensionTable::shared()) {
  validate_family(f);
  Certificate cert;
  cert.family = f;
  cert.hypotheses = {"n prime, n >= 7", "p prime, p not in {2, " + to_string(f.q) + "}",
                     "alpha >= 1"};
  if (f.hypotheses.x_odd) cert.hypotheses.push_back("x odd");
  if (f.hypotheses.coprime) cert.hypotheses.push_back("gcd(x, y) = 1");
  if (f.hypotheses.positive) cert.hypotheses.push_back("x, y >= 1");
  cert.assumed_theorems = assumed_theorems();

  const auto subcases = detail::alpha_subcases(f);
  auto derived = derive_ternary(f, !subcases.generic);
  cert.ternary_template = derived.ternary;
  cert.footnotes = derived.footnotes;

  auto parity = derive_parity_facts(f);
  cert.parity_facts = parity.facts;
  if (parity.failure) {
    cert.footnotes.push_back("parity derivation failed: " + *parity.failure);
    return cert;
  }
  cert.case_label = CaseLabel::V;

  bool all_zero = true;
  if (subcases.generic) {
    const Integer level = family_level(f, false);
    cert.level = level;
    cert.dim_new_at_level = table.dim_s2_new(to_u64(level));
    all_zero = *cert.dim_new_at_level == 0;
  }
  if (subcases.degenerate) {
    const Integer level = family_level(f, true);
    const auto dim = table.dim_s2_new(to_u64(level));
    if (cert.level) {
      cert.footnotes.push_back(derive_ternary(f, true).footnotes.front());
      cert.footnotes.push_back("subcase α ≡ 0 (mod n): level " + to_string(level) +
                               ", dim S2new = " + std::to_string(dim));
    } else {
      cert.level = level;
      cert.dim_new_at_level = dim;
    }
    all_zero = all_zero && dim == 0;
  }

  const bool classical = (f.sign == Sign::Plus && f.alpha.kind == AlphaSpec::Kind::Odd) ||
                         (f.sign == Sign::Minus && f.alpha.kind == AlphaSpec::Kind::Even);
  if (classical) {
    cert.footnotes.push_back("A = (-" + to_string(f.q) +
                             ")^α presentation: the sign of A is absorbed by the parity of α");
  } else {
    cert.footnotes.push_back("A = " + std::string(f.sign == Sign::Plus ? "-" : "+") +
                             "q^α' presentation: the argument does not depend on the parity "
                             "of α");
  }
  cert.footnotes.push_back("case V tested as ord₂(B·bⁿ) >= 6 together with c ≡ C (mod 4)");
  cert.footnotes.push_back("y even forces y >= 2; x = 1 needs no separate treatment");
  cert.conclusion = all_zero ? Conclusion::NoSolutions : Conclusion::Inconclusive;
  if (!all_zero) cert.footnotes.push_back("a newform exists at the predicted level");
  return cert;
}

}  // namespace frey
