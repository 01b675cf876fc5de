// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Exhaustive box searches for x² ± q^α·pⁿ = yⁿ and for x² + B = yⁿ.
//
// The box is walked y-outermost in fixed blocks. Workers claim blocks from a
// shared counter and write into per-block slots, so the merged report does
// not depend on the number of threads.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "frey/arith.hpp"
#include "frey/certifier.hpp"

namespace frey {

struct SearchConfig {
  Sign sign = Sign::Plus;
  Integer q = 5;
  unsigned long alpha_min = 1;
  unsigned long alpha_max = 1;
  std::vector<unsigned long> p_set;
  std::vector<unsigned long> n_set;
  std::uint64_t y_max = 1;
  bool require_x_odd = true;
  bool require_coprime = true;
  // Execution knobs; not part of the box and not echoed in reports.
  unsigned threads = 1;
  std::optional<std::chrono::milliseconds> time_limit;
};

inline void validate(const SearchConfig& c) {
  require_prime(c.q, "q");
  if (c.alpha_min > c.alpha_max) throw PreconditionError("empty alpha range");
  if (c.p_set.empty()) throw PreconditionError("empty p set");
  if (c.n_set.empty()) throw PreconditionError("empty n set");
  if (c.y_max < 1) throw PreconditionError("y_max must be >= 1");
  for (auto p : c.p_set) {
    require_prime(Integer(p), "p");
    if (p == 2 || Integer(p) == c.q) throw PreconditionError("p set must avoid {2, q}");
  }
  for (auto n : c.n_set) {
    if (n < 2) throw PreconditionError("exponents must be >= 2");
  }
}

inline constexpr const char* kViolationXEven = "x even";
inline constexpr const char* kViolationGcd = "gcd > 1";
inline constexpr const char* kViolationAlphaZero = "alpha = 0";
inline constexpr const char* kViolationExponent = "n outside hypotheses";

struct Witness {
  Integer x;
  std::uint64_t y = 0;
  unsigned long alpha = 0;
  unsigned long p = 0;
  unsigned long n = 0;
  std::vector<std::string> violated;

  // A witness meeting every hypothesis would contradict the theorem.
  bool fatal() const { return violated.empty(); }

  auto key() const { return std::tie(y, n, p, alpha); }
};

struct YInterval {
  std::uint64_t lo = 0, hi = 0;  // inclusive

  friend bool operator==(const YInterval&, const YInterval&) = default;
};

struct SearchReport {
  SearchConfig config;
  std::vector<YInterval> covered;
  bool complete = true;
  std::vector<Witness> witnesses;
  std::uint64_t candidates = 0;   // (y, n, p, α) tuples given a square test
  std::uint64_t square_hits = 0;  // tests with a positive square, before filters
  std::uint64_t filtered = 0;     // hits dropped by the x odd / gcd filters

  std::size_t fatal_count() const {
    return static_cast<std::size_t>(
        std::count_if(witnesses.begin(), witnesses.end(), [](const Witness& w) { return w.fatal(); }));
  }
};

namespace detail {

inline constexpr std::uint64_t kSearchBlock = 128;

struct Offset {
  unsigned long n, p, alpha;
  Integer value;             // q^α·pⁿ
  std::uint64_t y_min = 1;  // smallest y that can give a positive square
};

struct BlockResult {
  bool done = false;
  std::vector<Witness> witnesses;
  std::uint64_t candidates = 0;
  std::uint64_t square_hits = 0;
  std::uint64_t filtered = 0;
};

inline std::vector<Offset> make_offsets(const SearchConfig& c) {
  std::vector<Offset> out;
  for (auto n : c.n_set) {
    for (auto p : c.p_set) {
      for (unsigned long alpha = c.alpha_min; alpha <= c.alpha_max; ++alpha) {
        Offset o{n, p, alpha, ipow(c.q, alpha) * ipow(Integer(p), n), 1};
        if (c.sign == Sign::Plus) {
          // yⁿ must exceed q^α·pⁿ.
          o.y_min = to_u64(integer_nth_root(o.value, n)) + 1;
        }
        out.push_back(std::move(o));
      }
    }
  }
  return out;
}

inline std::vector<std::string> violations(const Integer& x, std::uint64_t y, unsigned long alpha,
                                           unsigned long n) {
  std::vector<std::string> v;
  if (mpz_even_p(x.get_mpz_t())) v.push_back(kViolationXEven);
  if (gcd(x, from_u64(y)) != 1) v.push_back(kViolationGcd);
  if (alpha == 0) v.push_back(kViolationAlphaZero);
  if (n < 7 || !is_prime_u64(n)) v.push_back(kViolationExponent);
  return v;
}

inline void run_block(const SearchConfig& c, const std::vector<Offset>& offsets,
                      std::uint64_t y_lo, std::uint64_t y_hi, BlockResult& out) {
  Integer yn, t;
  for (std::uint64_t y = y_lo; y <= y_hi; ++y) {
    const Integer Y = from_u64(y);
    unsigned long last_n = 0;
    for (const auto& o : offsets) {
      if (y < o.y_min) continue;
      if (o.n != last_n) {
        yn = ipow(Y, o.n);
        last_n = o.n;
      }
      t = c.sign == Sign::Plus ? Integer(yn - o.value) : Integer(yn + o.value);
      ++out.candidates;
      auto x = is_perfect_square(t);
      if (!x || *x == 0) continue;
      ++out.square_hits;
      if (*x * *x != (c.sign == Sign::Plus ? Integer(yn - o.value) : Integer(yn + o.value))) {
        throw ComputationError("internal: witness failed re-verification");
      }
      auto v = violations(*x, y, o.alpha, o.n);
      const bool x_even = std::find(v.begin(), v.end(), kViolationXEven) != v.end();
      const bool shared = std::find(v.begin(), v.end(), kViolationGcd) != v.end();
      if ((c.require_x_odd && x_even) || (c.require_coprime && shared)) {
        ++out.filtered;
        continue;
      }
      out.witnesses.push_back({*x, y, o.alpha, o.p, o.n, std::move(v)});
    }
  }
  out.done = true;
}

inline std::vector<YInterval> merge_covered(const std::vector<BlockResult>& blocks,
                                            std::uint64_t y_max) {
  std::vector<YInterval> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!blocks[i].done) continue;
    const std::uint64_t lo = 1 + i * kSearchBlock;
    const std::uint64_t hi = std::min(y_max, lo + kSearchBlock - 1);
    if (!out.empty() && out.back().hi + 1 == lo) {
      out.back().hi = hi;
    } else {
      out.push_back({lo, hi});
    }
  }
  return out;
}

}  // namespace detail

inline SearchReport search_family(const SearchConfig& config) {
  validate(config);
  const auto offsets = detail::make_offsets(config);
  const std::uint64_t blocks = (config.y_max + detail::kSearchBlock - 1) / detail::kSearchBlock;
  std::vector<detail::BlockResult> results(blocks);

  const auto start = std::chrono::steady_clock::now();
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      if (config.time_limit && std::chrono::steady_clock::now() - start > *config.time_limit) {
        return;
      }
      const std::uint64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      const std::uint64_t lo = 1 + b * detail::kSearchBlock;
      const std::uint64_t hi = std::min(config.y_max, lo + detail::kSearchBlock - 1);
      detail::run_block(config, offsets, lo, hi, results[b]);
    }
  };

  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  SearchReport report;
  report.config = config;
  report.covered = detail::merge_covered(results, config.y_max);
  for (auto& r : results) {
    if (!r.done) {
      report.complete = false;
      continue;
    }
    report.candidates += r.candidates;
    report.square_hits += r.square_hits;
    report.filtered += r.filtered;
    for (auto& w : r.witnesses) report.witnesses.push_back(std::move(w));
  }
  std::sort(report.witnesses.begin(), report.witnesses.end(),
            [](const Witness& a, const Witness& b) { return a.key() < b.key(); });
  return report;
}

struct LebesgueSolution {
  Integer x;
  std::uint64_t y = 0;
  unsigned long n = 0;

  friend bool operator==(const LebesgueSolution&, const LebesgueSolution&) = default;
};

// All x, y ≥ 1 with x² + B = yⁿ, n_min ≤ n ≤ n_max, y ≤ y_max; sorted by (n, y).
inline std::vector<LebesgueSolution> search_lebesgue(const Integer& B, unsigned long n_min,
                                                     unsigned long n_max, std::uint64_t y_max) {
  if (B < 1) throw PreconditionError("search_lebesgue needs B >= 1");
  if (n_min < 1 || n_min > n_max) throw PreconditionError("empty exponent range");
  std::vector<LebesgueSolution> out;
  for (unsigned long n = n_min; n <= n_max; ++n) {
    for (std::uint64_t y = 1; y <= y_max; ++y) {
      const Integer t = ipow(from_u64(y), n) - B;
      if (t < 1) continue;
      if (auto x = is_perfect_square(t)) out.push_back({*x, y, n});
    }
  }
  return out;
}

}  // namespace frey
