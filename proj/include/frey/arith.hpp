// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Exact integer utilities: primality, valuations, trial-division factoring,
// perfect squares and roots, totient and divisor lists.
//
// Everything is built on GMP's mpz_class. Values that fit a machine word take
// a uint64_t fast path; the answer never depends on which path ran.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "frey/errors.hpp"

namespace frey {

using Integer = mpz_class;

inline constexpr std::uint64_t kDefaultFactorBudget = 1'000'000;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline Integer parse_integer(const std::string& text) {
  Integer v;
  std::string t = text;
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  if (t.empty() || v.set_str(t, 10) != 0) {
    throw PreconditionError("not a decimal integer: '" + text + "'");
  }
  return v;
}

inline bool fits_u64(const Integer& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Integer& v) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline Integer from_u64(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

// Least nonnegative residue of m modulo k, for any sign of m.
inline unsigned long residue(const Integer& m, unsigned long k) {
  return mpz_fdiv_ui(m.get_mpz_t(), k);
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

inline bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace detail

// Deterministic for every 64-bit input: the first twelve primes are a known
// complete witness set below 3.3e24.
inline bool is_prime_u64(std::uint64_t n) {
  static constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13,
                                                           17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (auto w : kWitnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  for (auto w : kWitnesses) {
    if (!detail::strong_probable_prime(n, w)) return false;
  }
  return true;
}

enum class Primality { Composite, Prime, ProbablePrime };

inline Primality primality(const Integer& n) {
  if (sgn(n) <= 0) return Primality::Composite;
  if (fits_u64(n)) return is_prime_u64(to_u64(n)) ? Primality::Prime : Primality::Composite;
  switch (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    case 0:
      return Primality::Composite;
    case 2:
      return Primality::Prime;
    default:
      return Primality::ProbablePrime;
  }
}

inline bool is_prime(const Integer& n) { return primality(n) != Primality::Composite; }

inline void require_prime(const Integer& p, const char* what) {
  if (!is_prime(p)) throw PreconditionError(std::string(what) + " must be prime, got " + to_string(p));
}

// Largest k with p^k | m. Sign of m is ignored.
inline unsigned long padic_valuation(const Integer& m, const Integer& p) {
  if (sgn(m) == 0) throw PreconditionError("valuation of 0 is undefined");
  require_prime(p, "valuation base");
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
}

inline unsigned long padic_valuation(const Integer& m, unsigned long p) {
  return padic_valuation(m, Integer(p));
}

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime decomposition of a positive integer. `probable` is set when some
// factor above 2^64 was only shown to be a probable prime.
struct Factorization {
  std::vector<PrimePower> factors;
  bool probable = false;

  Integer value() const {
    Integer v = 1;
    for (const auto& f : factors) v *= ipow(f.prime, f.exponent);
    return v;
  }

  std::vector<Integer> primes() const {
    std::vector<Integer> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
  }

  unsigned long exponent_of(const Integer& p) const {
    for (const auto& f : factors) {
      if (f.prime == p) return f.exponent;
    }
    return 0;
  }
};

// Trial-division bound, overridable through FREY_FACTOR_BUDGET.
inline std::uint64_t factor_budget() {
  static const std::uint64_t budget = [] {
    if (const char* env = std::getenv("FREY_FACTOR_BUDGET"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      auto v = std::strtoull(env, &end, 10);
      if (end != nullptr && *end == '\0' && v >= 2) return static_cast<std::uint64_t>(v);
    }
    return kDefaultFactorBudget;
  }();
  return budget;
}

namespace detail {

inline void push_factor(Factorization& out, const Integer& p, unsigned long e) {
  if (e > 0) out.factors.push_back({p, e});
}

// Trial division on a word-sized cofactor. Returns true when fully factored.
inline bool trial_divide_u64(std::uint64_t& n, std::uint64_t start, std::uint64_t bound,
                             Factorization& out) {
  for (std::uint64_t d = start; d <= bound; d += 2) {
    if (d > n / d) {
      if (n > 1) push_factor(out, from_u64(n), 1);
      n = 1;
      return true;
    }
    if (n % d == 0) {
      unsigned long e = 0;
      do {
        n /= d;
        ++e;
      } while (n % d == 0);
      push_factor(out, from_u64(d), e);
    }
  }
  return n == 1;
}

}  // namespace detail

// Factor |m| by trial division up to `budget`; a leftover cofactor is
// accepted only if the primality test vouches for it.
inline Factorization factorize(const Integer& m, std::uint64_t budget = factor_budget()) {
  if (sgn(m) == 0) throw PreconditionError("cannot factor 0");
  Factorization out;
  Integer n = abs(m);

  unsigned long twos = mpz_scan1(n.get_mpz_t(), 0);
  if (twos > 0) {
    n >>= twos;
    detail::push_factor(out, 2, twos);
  }

  std::uint64_t d = 3;
  while (!fits_u64(n) && d <= budget) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      unsigned long e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        ++e;
      }
      detail::push_factor(out, from_u64(d), e);
    }
    d += 2;
  }

  if (fits_u64(n)) {
    std::uint64_t small = to_u64(n);
    if (detail::trial_divide_u64(small, d, budget, out)) return out;
    n = from_u64(small);
  }

  switch (primality(n)) {
    case Primality::Composite:
      throw BudgetExceeded("unfactored cofactor " + to_string(n) + " after trial division to " +
                           std::to_string(budget));
    case Primality::ProbablePrime:
      out.probable = true;
      [[fallthrough]];
    case Primality::Prime:
      detail::push_factor(out, n, 1);
      break;
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

inline std::optional<Integer> is_perfect_square(const Integer& m) {
  if (sgn(m) < 0 || mpz_perfect_square_p(m.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return r;
}

// floor(m^(1/k)).
inline Integer integer_nth_root(const Integer& m, unsigned long k) {
  if (sgn(m) < 0) throw PreconditionError("integer_nth_root of a negative number");
  if (k == 0) throw PreconditionError("integer_nth_root with k = 0");
  Integer r;
  mpz_root(r.get_mpz_t(), m.get_mpz_t(), k);
  return r;
}

inline Integer euler_phi(const Integer& m) {
  if (sgn(m) <= 0) throw PreconditionError("euler_phi needs m >= 1");
  Integer phi = m;
  for (const auto& f : factorize(m).factors) {
    phi /= f.prime;
    phi *= f.prime - 1;
  }
  return phi;
}

inline std::vector<Integer> divisors(const Factorization& fac) {
  std::vector<Integer> out{1};
  for (const auto& f : fac.factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned long e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Integer> divisors(const Integer& m) {
  if (sgn(m) <= 0) throw PreconditionError("divisors needs m >= 1");
  return divisors(factorize(m));
}

inline unsigned long divisor_count(const Factorization& fac) {
  unsigned long count = 1;
  for (const auto& f : fac.factors) count *= f.exponent + 1;
  return count;
}

inline bool is_squarefree(const Integer& m) {
  if (sgn(m) == 0) return false;
  for (const auto& f : factorize(m).factors) {
    if (f.exponent > 1) return false;
  }
  return true;
}

// Odd primes dividing the product of `values` (zeros are skipped), ascending.
inline std::vector<Integer> odd_prime_support(std::initializer_list<Integer> values) {
  std::vector<Integer> out;
  for (const auto& v : values) {
    if (sgn(v) == 0) continue;
    for (const auto& f : factorize(v).factors) {
      if (f.prime != 2) out.push_back(f.prime);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace frey
