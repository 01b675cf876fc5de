// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Canonical JSON documents. Keys keep insertion order and every integer is
// written as a decimal string, so big values survive any consumer.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "frey/certifier.hpp"
#include "frey/classifier.hpp"
#include "frey/dimensions.hpp"
#include "frey/search.hpp"
#include "frey/weierstrass.hpp"

namespace frey {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline std::string dec(const Integer& v) { return v.get_str(); }

template <class T>
  requires std::is_integral_v<T>
std::string dec(T v) {
  return std::to_string(v);
}

}  // namespace detail

inline Json to_json(const WeierstrassCurve& e) {
  using detail::dec;
  return Json{{"a1", dec(e.a1)}, {"a2", dec(e.a2)}, {"a3", dec(e.a3)}, {"a4", dec(e.a4)},
              {"a6", dec(e.a6)}};
}

inline Json to_json(const CurveInvariants& inv) {
  using detail::dec;
  Json j{{"b2", dec(inv.b2)}, {"b4", dec(inv.b4)}, {"b6", dec(inv.b6)}, {"b8", dec(inv.b8)},
         {"c4", dec(inv.c4)}, {"c6", dec(inv.c6)}, {"disc", dec(inv.disc)}};
  if (inv.j) {
    j["j_num"] = dec(inv.j->num);
    j["j_den"] = dec(inv.j->den);
  } else {
    j["j_num"] = nullptr;
    j["j_den"] = nullptr;
  }
  return j;
}

inline Json to_json(const LocalReduction& r) {
  return Json{{"prime", detail::dec(r.prime)},
              {"kind", to_string(r.kind)},
              {"conductor_exponent",
               r.conductor_exponent ? Json(detail::dec(*r.conductor_exponent)) : Json("unknown")},
              {"minimal_model_checked", r.minimal_model_checked}};
}

inline Json to_json(const TernaryInstance& t) {
  using detail::dec;
  return Json{{"A", dec(t.A)}, {"B", dec(t.B)}, {"C", dec(t.C)}, {"a", dec(t.a)},
              {"b", dec(t.b)}, {"c", dec(t.c)}, {"n", dec(t.n)}};
}

inline Json to_json(const FreyAnalysis& fa) {
  using detail::dec;
  return Json{{"normalized", to_json(fa.normalized)},
              {"move", to_string(fa.move)},
              {"case", to_string(fa.label)},
              {"curve_index", dec(fa.curve_index)},
              {"curve", to_json(fa.curve)},
              {"delta_exp", dec(fa.delta_exp)},
              {"disc_closed_form", dec(fa.disc_closed_form)},
              {"table_alpha", dec(fa.table_alpha)},
              {"table_beta", dec(fa.table_beta)},
              {"conductor_2_exponent", dec(fa.conductor_2_exponent)},
              {"conductor", dec(fa.conductor)},
              {"level_2_exponent", dec(fa.level_2_exponent)},
              {"level", dec(fa.level)},
              {"level_lowering_applicable", fa.level_lowering_applicable}};
}

inline Json to_json(const DimensionRecord& r) {
  using detail::dec;
  return Json{{"level", dec(r.level)},   {"mu", dec(r.mu)},         {"nu2", dec(r.nu2)},
              {"nu3", dec(r.nu3)},       {"nu_inf", dec(r.nu_inf)}, {"genus", dec(r.genus)},
              {"dim_s2", dec(r.dim_s2)}, {"dim_s2_new", dec(r.dim_s2_new)}};
}

inline Json to_json(const NoNewformReport& report) {
  Json levels = Json::array();
  for (const auto& c : report.levels) {
    Json entry = to_json(c.record);
    entry["dim_s2_new_by_inversion"] = detail::dec(c.by_inversion);
    levels.push_back(std::move(entry));
  }
  Json nonzero = Json::array();
  for (auto N : report.nonzero) nonzero.push_back(detail::dec(N));
  Json disagreement = Json::array();
  for (auto N : report.disagreement) disagreement.push_back(detail::dec(N));
  return Json{{"levels", std::move(levels)},
              {"nonzero", std::move(nonzero)},
              {"disagreement", std::move(disagreement)},
              {"ok", report.ok()}};
}

inline Json to_json(const FamilySpec& f) {
  return Json{{"sign", to_string(f.sign)},
              {"q", detail::dec(f.q)},
              {"alpha", f.alpha.to_string()},
              {"p", f.p ? detail::dec(*f.p) : std::string("any")},
              {"n", f.n ? detail::dec(*f.n) : std::string("any")}};
}

inline Json to_json(const Certificate& c) {
  Json facts = Json::array();
  for (const auto& f : c.parity_facts) {
    facts.push_back(Json{{"fact", f.fact}, {"justification", f.justification}});
  }
  const auto& t = c.ternary_template;
  return Json{
      {"schema", kSchemaVersion},
      {"family", to_json(c.family)},
      {"hypotheses", c.hypotheses},
      {"ternary_template",
       Json{{"A", t.A}, {"B", t.B}, {"C", t.C}, {"a", t.a}, {"b", t.b}, {"c", t.c}, {"n", t.n}}},
      {"parity_facts", std::move(facts)},
      {"case", c.case_label ? Json(to_string(*c.case_label)) : Json(nullptr)},
      {"level", c.level ? Json(detail::dec(*c.level)) : Json(nullptr)},
      {"dim_new_at_level",
       c.dim_new_at_level ? Json(detail::dec(*c.dim_new_at_level)) : Json(nullptr)},
      {"conclusion", to_string(c.conclusion)},
      {"assumed_theorems", c.assumed_theorems},
      {"footnotes", c.footnotes}};
}

inline Json to_json(const SearchConfig& c) {
  using detail::dec;
  Json ps = Json::array();
  for (auto p : c.p_set) ps.push_back(dec(p));
  Json ns = Json::array();
  for (auto n : c.n_set) ns.push_back(dec(n));
  return Json{{"sign", to_string(c.sign)},
              {"q", dec(c.q)},
              {"alpha_range", Json::array({dec(c.alpha_min), dec(c.alpha_max)})},
              {"p_set", std::move(ps)},
              {"n_set", std::move(ns)},
              {"y_max", dec(c.y_max)},
              {"filters", Json{{"require_x_odd", c.require_x_odd},
                               {"require_coprime", c.require_coprime}}}};
}

inline Json to_json(const SearchReport& r) {
  using detail::dec;
  Json covered = Json::array();
  for (const auto& iv : r.covered) covered.push_back(Json::array({dec(iv.lo), dec(iv.hi)}));
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(Json{{"x", dec(w.x)},
                             {"y", dec(w.y)},
                             {"alpha", dec(w.alpha)},
                             {"p", dec(w.p)},
                             {"n", dec(w.n)},
                             {"violated_hypotheses", w.violated},
                             {"fatal", w.fatal()}});
  }
  return Json{{"schema", kSchemaVersion},
              {"config", to_json(r.config)},
              {"boxes_covered", Json{{"y_intervals", std::move(covered)},
                                     {"complete", r.complete}}},
              {"witnesses", std::move(witnesses)},
              {"counts", Json{{"candidates", dec(r.candidates)},
                              {"square_hits", dec(r.square_hits)},
                              {"filtered", dec(r.filtered)},
                              {"fatal", dec(r.fatal_count())}}}};
}

inline Json to_json(const std::vector<LebesgueSolution>& sols) {
  Json out = Json::array();
  for (const auto& s : sols) {
    out.push_back(Json{{"x", detail::dec(s.x)}, {"y", detail::dec(s.y)}, {"n", detail::dec(s.n)}});
  }
  return out;
}

// {schema, command, input, result, diagnostics}
inline Json envelope(const std::string& command, Json input, Json result,
                     const std::vector<std::string>& diagnostics = {}) {
  return Json{{"schema", kSchemaVersion},
              {"command", command},
              {"input", std::move(input)},
              {"result", std::move(result)},
              {"diagnostics", diagnostics}};
}

}  // namespace frey
