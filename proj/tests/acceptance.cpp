// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Acceptance run: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock limits printed on each line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "frey/corpus.hpp"
#include "frey/frey.hpp"
#include "frey/serialize.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using namespace frey;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s  %d  %-28s %8.3f s (limit %g s)  %s%s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), secs, limit_s, o.detail.c_str(), in_time ? "" : " [too slow]");
  std::fflush(stdout);
}

void check(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    o.detail += "[" + what + "] ";
  }
}

Outcome newform_free_levels() {
  Outcome o;
  DimensionTable table;
  auto r = verify_no_newform_levels(kNewformFreeLevels, table);
  check(o, r.ok(), "newform-free list");
  check(o, r.levels.size() == 17, "17 levels");
  const std::pair<std::uint64_t, std::uint64_t> controls[] = {
      {11, 1}, {14, 1}, {26, 2}, {15, 1}, {20, 1}};
  for (auto [N, dim] : controls) {
    const auto rec = table.dim_s2_new(N);
    const auto inv = dim_s2_new_by_inversion(N);
    check(o, rec == dim && inv == static_cast<std::int64_t>(dim),
          "dim-new(" + std::to_string(N) + ")=" + std::to_string(rec) + "/" + std::to_string(inv));
  }
  if (o.ok) o.detail = "17 levels at 0; controls 11,14,26,15,20 = 1,1,2,1,1 by both methods";
  return o;
}

Outcome certificates() {
  Outcome o;
  DimensionTable table;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    for (AlphaSpec a : {AlphaSpec::odd(), AlphaSpec::even()}) {
      FamilySpec f;
      f.sign = s;
      f.alpha = a;
      auto c = certify(f, table);
      check(o, c.level && *c.level == 10 && c.conclusion == Conclusion::NoSolutions,
            std::string(to_string(s)) + "/" + a.to_string());
    }
  }
  FamilySpec degenerate;
  degenerate.alpha = AlphaSpec::exact(7);
  degenerate.n = 7;
  auto d = certify(degenerate, table);
  check(o, d.level && *d.level == 2 && d.conclusion == Conclusion::NoSolutions, "alpha = 0 mod n");
  FamilySpec contrast;
  contrast.q = 7;
  auto c7 = certify(contrast, table);
  check(o, c7.level && *c7.level == 14 && c7.conclusion == Conclusion::Inconclusive, "q = 7");
  if (o.ok) o.detail = "q=5 -> level 10 NoSolutions (x4); alpha=0 mod n -> 2; q=7 -> 14 Inconclusive";
  return o;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = generate_corpus(200, 20260101);
  return c;
}

Outcome discriminant_identity() {
  Outcome o;
  std::size_t agree = 0;
  std::set<CaseLabel> labels;
  for (const auto& e : corpus()) {
    labels.insert(e.analysis.label);
    if (compute_invariants(e.analysis.curve).disc == e.analysis.disc_closed_form) ++agree;
  }
  check(o, corpus().size() >= 1000, "corpus size");
  check(o, labels.size() == 5, "all five cases");
  check(o, agree == corpus().size(), "identity on corpus");
  const std::tuple<TernaryInstance, long> worked[] = {
      {{1, 3, 1, 1, 1, 2, 7}, 576}, {{1, 2, 3, 1, 1, 1, 7}, 6912}, {{97, 1, 1, 1, 2, -15, 7}, 388}};
  for (const auto& [t, disc] : worked) {
    auto fa = analyze(t);
    check(o, fa.disc_closed_form == disc && compute_invariants(fa.curve).disc == disc,
          "worked " + std::to_string(disc));
  }
  o.detail = std::to_string(agree) + "/" + std::to_string(corpus().size()) +
             " instances agree; worked 576, 6912, 388 " + o.detail;
  return o;
}

Outcome conductor_cross_check() {
  Outcome o;
  std::size_t odd_ok = 0, two_ok = 0, case_v = 0, six = 0, seven = 0;
  for (const auto& e : corpus()) {
    auto cc = cross_check(e.analysis);
    if (cc.odd_conductor) ++odd_ok;
    if (e.analysis.label != CaseLabel::V) continue;
    ++case_v;
    const auto& t = e.analysis.normalized;
    const auto ord = padic_valuation(t.B, 2) + t.n * padic_valuation(t.b == 0 ? 1 : t.b, 2);
    const int expected = ord == 6 ? 0 : 1;
    (ord == 6 ? six : seven) += 1;
    if (cc.two_adic && e.analysis.conductor_2_exponent == expected) ++two_ok;
  }
  check(o, odd_ok == corpus().size(), "odd primes");
  check(o, two_ok == case_v, "2-adic case V");
  check(o, six > 0 && seven > 0, "both ord2 rows exercised");
  o.detail = "odd " + std::to_string(odd_ok) + "/" + std::to_string(corpus().size()) +
             ", case V e2 " + std::to_string(two_ok) + "/" + std::to_string(case_v) + " (ord2=6: " +
             std::to_string(six) + ", >=7: " + std::to_string(seven) + ") " + o.detail;
  return o;
}

Outcome two_torsion() {
  Outcome o;
  std::size_t ok = 0;
  for (const auto& e : corpus()) {
    if (e.analysis.curve.contains(0, 0) && e.analysis.curve.is_two_torsion(0, 0)) ++ok;
  }
  check(o, ok == corpus().size(), "torsion");
  o.detail = std::to_string(ok) + "/" + std::to_string(corpus().size()) + " curves " + o.detail;
  return o;
}

Outcome search_box() {
  Outcome o;
  SearchConfig c;
  c.q = 5;
  c.alpha_min = 1;
  c.alpha_max = 4;
  c.p_set = {3, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  c.n_set = {7, 11, 13};
  c.y_max = 2000;
  std::size_t hits_off = 0;
  const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    for (bool filters : {true, false}) {
      c.sign = s;
      c.require_x_odd = c.require_coprime = filters;
      c.threads = 1;
      const auto single = search_family(c);
      if (filters) {
        check(o, single.witnesses.empty(), "filtered box has witnesses");
      } else {
        hits_off += single.witnesses.size();
        check(o, single.fatal_count() == 0, "untagged witness");
      }
      check(o, single.complete, "incomplete");
      c.threads = hw;
      check(o, to_json(search_family(c)).dump() == to_json(single).dump(), "parallel differs");
    }
  }
  o.detail = "0 witnesses with filters; " + std::to_string(hits_off) +
             " tagged witnesses without; parallel byte-identical " + o.detail;
  return o;
}

Outcome dimension_engine() {
  Outcome o;
  DimensionTable table;
  std::size_t ok = 0;
  for (std::uint64_t N = 1; N <= 10000; ++N) {
    const auto g = genus_X0(N).genus;  // throws unless 12g is a nonnegative multiple of 12
    if (old_plus_new_dimension(N, table) == g) ++ok;
  }
  check(o, ok == 10000, "trace identity");
  o.detail = std::to_string(ok) + "/10000 levels satisfy the identity " + o.detail;
  return o;
}

Outcome lebesgue() {
  Outcome o;
  auto four = search_lebesgue(4, 2, 7, 10);
  check(o, four == std::vector<LebesgueSolution>{{2, 2, 3}, {11, 5, 3}}, "B=4");
  check(o, search_lebesgue(1, 2, 7, 10).empty(), "B=1");
  if (o.ok) o.detail = "B=4 -> {(2,2,3), (11,5,3)}; B=1 -> {}";
  return o;
}

}  // namespace

int main() {
  report(1, "newform-free levels", 1, newform_free_levels);
  report(2, "family certificates", 1, certificates);
  report(3, "discriminant identity", 120, discriminant_identity);
  report(4, "conductor cross-check", 120, conductor_cross_check);
  report(5, "2-torsion", 120, two_torsion);
  report(6, "search box", 300, search_box);
  report(7, "dimension engine", 30, dimension_engine);
  report(8, "x^2 + B = y^n", 10, lebesgue);
  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
