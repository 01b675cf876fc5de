// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Command-line front end. Payloads go to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 1 usage or validation error, 2 computational
// failure (unclassifiable instance, factoring budget, failed verification,
// FATAL search witness).

#pragma once

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "frey/frey.hpp"
#include "frey/serialize.hpp"

namespace frey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

namespace detail {

struct InstanceArgs {
  std::string A, B, C, a, b, c;
  unsigned long n = 7;

  void attach(CLI::App* cmd) {
    cmd->add_option("--A", A, "coefficient A")->required();
    cmd->add_option("--B", B, "coefficient B")->required();
    cmd->add_option("--C", C, "coefficient C")->required();
    cmd->add_option("--a", a, "base a")->required();
    cmd->add_option("--b", b, "base b")->required();
    cmd->add_option("--c", c, "square root c")->required();
    cmd->add_option("--n", n, "prime exponent n >= 7")->required();
  }

  TernaryInstance parse() const {
    return {parse_integer(A), parse_integer(B), parse_integer(C), parse_integer(a),
            parse_integer(b), parse_integer(c), n};
  }
};

// A flat list of "key: value" lines for text mode. Nested objects are
// flattened with dotted keys, arrays with [i].
inline void print_text(std::ostream& out, const Json& j, const std::string& prefix = "") {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      print_text(out, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    }
  } else if (j.is_array()) {
    if (j.empty()) out << prefix << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      print_text(out, j[i], prefix + "[" + std::to_string(i) + "]");
    }
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

inline std::vector<unsigned long> primes_up_to(unsigned long bound, const Integer& q) {
  std::vector<unsigned long> out;
  for (unsigned long p = 3; p <= bound; ++p) {
    if (is_prime_u64(p) && Integer(p) != q) out.push_back(p);
  }
  return out;
}

inline Sign parse_sign(const std::string& s) {
  if (s == "plus" || s == "+") return Sign::Plus;
  if (s == "minus" || s == "-") return Sign::Minus;
  throw PreconditionError("sign must be plus or minus");
}

inline AlphaSpec parse_alpha(const std::string& s) {
  if (s == "any") return AlphaSpec::any();
  if (s == "odd") return AlphaSpec::odd();
  if (s == "even") return AlphaSpec::even();
  const Integer v = parse_integer(s);
  if (v < 1 || !v.fits_ulong_p()) throw PreconditionError("alpha must be a positive integer");
  return AlphaSpec::exact(v.get_ui());
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"frey: Frey curves, levels and certificates for x^2 ± q^α·p^n = y^n"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized corpus generation")->capture_default_str();
  app.add_option("--threads", threads, "worker threads for search")->capture_default_str();

  std::vector<std::string> coeffs(5, "0");
  auto* cmd_inv = app.add_subcommand("invariants", "Weierstrass invariants of [a1,a2,a3,a4,a6]");
  cmd_inv->add_option("--a1", coeffs[0])->capture_default_str();
  cmd_inv->add_option("--a2", coeffs[1])->capture_default_str();
  cmd_inv->add_option("--a3", coeffs[2])->capture_default_str();
  cmd_inv->add_option("--a4", coeffs[3])->capture_default_str();
  cmd_inv->add_option("--a6", coeffs[4])->capture_default_str();

  detail::InstanceArgs inst;
  auto* cmd_classify = app.add_subcommand("classify", "normalise and classify an instance");
  auto* cmd_frey = app.add_subcommand("frey", "Frey curve attached to an instance");
  auto* cmd_analyze = app.add_subcommand("analyze", "discriminant, conductor and level");
  for (auto* cmd : {cmd_classify, cmd_frey, cmd_analyze}) inst.attach(cmd);

  std::uint64_t level = 1;
  auto* cmd_dims = app.add_subcommand("dims", "genus and newform dimensions at a level");
  cmd_dims->add_option("--level", level, "level N")->required()->check(CLI::PositiveNumber);

  auto* cmd_verify = app.add_subcommand("verify-levels", "check the newform-free level list");

  std::string sign = "plus", q_text = "5", alpha_text = "any", p_text = "any", n_text = "any";
  std::vector<std::string> dropped;
  auto* cmd_certify = app.add_subcommand("certify", "non-existence certificate for a family");
  cmd_certify->add_option("--sign", sign)->required()->check(CLI::IsMember({"plus", "minus"}));
  cmd_certify->add_option("--q", q_text)->capture_default_str();
  cmd_certify->add_option("--alpha", alpha_text, "value, any, odd or even")
      ->capture_default_str();
  cmd_certify->add_option("--p", p_text, "prime or any")->capture_default_str();
  cmd_certify->add_option("--n", n_text, "prime >= 7 or any")->capture_default_str();
  cmd_certify->add_option("--drop-hypothesis", dropped, "x-odd, coprime or positive")
      ->check(CLI::IsMember({"x-odd", "coprime", "positive"}));

  SearchConfig search_cfg;
  std::string search_sign = "plus", search_q = "5";
  std::vector<unsigned long> p_list, n_list{7, 11, 13};
  unsigned long p_max = 0;
  bool no_x_odd = false, no_coprime = false;
  long long time_limit_ms = 0;
  auto* cmd_search = app.add_subcommand("search", "exhaustive box search for solutions");
  cmd_search->add_option("--sign", search_sign)->required()->check(
      CLI::IsMember({"plus", "minus"}));
  cmd_search->add_option("--q", search_q)->capture_default_str();
  cmd_search->add_option("--alpha-min", search_cfg.alpha_min)->capture_default_str();
  cmd_search->add_option("--alpha-max", search_cfg.alpha_max)->capture_default_str();
  auto* opt_p = cmd_search->add_option("--p", p_list, "explicit primes");
  cmd_search->add_option("--p-max", p_max, "all odd primes <= bound except q")->excludes(opt_p);
  cmd_search->add_option("--n", n_list, "exponents")->capture_default_str();
  cmd_search->add_option("--y-max", search_cfg.y_max)->required();
  cmd_search->add_flag("--no-x-odd-filter", no_x_odd, "keep witnesses with x even");
  cmd_search->add_flag("--no-coprime-filter", no_coprime, "keep witnesses with gcd(x,y) > 1");
  cmd_search->add_option("--time-limit-ms", time_limit_ms, "stop after this many ms");

  std::string leb_B;
  unsigned long leb_n_min = 3, leb_n_max = 7;
  std::uint64_t leb_y_max = 10;
  auto* cmd_leb = app.add_subcommand("lebesgue", "solutions of x^2 + B = y^n in a box");
  cmd_leb->add_option("--B", leb_B)->required();
  cmd_leb->add_option("--n-min", leb_n_min)->capture_default_str();
  cmd_leb->add_option("--n-max", leb_n_max)->capture_default_str();
  cmd_leb->add_option("--y-max", leb_y_max)->capture_default_str();

  std::size_t per_case = 200;
  auto* cmd_corpus =
      app.add_subcommand("corpus", "cross-check closed forms on a seeded random corpus");
  cmd_corpus->add_option("--per-case", per_case, "instances per case")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<std::string> diagnostics;
  auto emit = [&](const std::string& command, Json input, Json result) {
    if (format == "json") {
      out << envelope(command, std::move(input), std::move(result), diagnostics).dump(2) << "\n";
    } else {
      out << "command: " << command << "\n";
      detail::print_text(out, result);
    }
    for (const auto& d : diagnostics) err << "note: " << d << "\n";
  };

  try {
    if (*cmd_inv) {
      WeierstrassCurve e{parse_integer(coeffs[0]), parse_integer(coeffs[1]),
                         parse_integer(coeffs[2]), parse_integer(coeffs[3]),
                         parse_integer(coeffs[4])};
      auto inv = compute_invariants(e);
      if (inv.singular()) diagnostics.push_back("singular model: j-invariant undefined");
      emit("invariants", to_json(e), to_json(inv));
      return kExitOk;
    }

    if (*cmd_classify || *cmd_frey || *cmd_analyze) {
      const auto t = inst.parse();
      if (auto violations = validate(t); !violations.empty()) {
        for (const auto& v : violations) err << "invalid instance: " << v << "\n";
        return kExitUsage;
      }
      if (*cmd_classify) {
        auto norm = normalize(t);
        Json result{{"case", to_string(classify(norm.instance))},
                    {"move", to_string(norm.move)},
                    {"normalized", to_json(norm.instance)}};
        emit("classify", to_json(t), std::move(result));
      } else if (*cmd_frey) {
        auto norm = normalize(t);
        const auto label = classify(norm.instance);
        Json result{{"case", to_string(label)},
                    {"curve_index", std::to_string(curve_index(label))},
                    {"curve", to_json(build_frey(norm.instance, label))}};
        emit("frey", to_json(t), std::move(result));
      } else {
        auto fa = analyze(t);
        if (!fa.level_lowering_applicable) {
          diagnostics.push_back("|ab| = 1: curve may have CM, level lowering inapplicable");
        }
        emit("analyze", to_json(t), to_json(fa));
      }
      return kExitOk;
    }

    if (*cmd_dims) {
      emit("dims", Json{{"level", std::to_string(level)}},
           to_json(DimensionTable::shared().record(level)));
      return kExitOk;
    }

    if (*cmd_verify) {
      auto report = verify_no_newform_levels();
      emit("verify-levels", Json::object(), to_json(report));
      return report.ok() ? kExitOk : kExitFailure;
    }

    if (*cmd_certify) {
      FamilySpec f;
      f.sign = detail::parse_sign(sign);
      f.q = parse_integer(q_text);
      f.alpha = detail::parse_alpha(alpha_text);
      if (p_text != "any") f.p = parse_integer(p_text);
      if (n_text != "any") {
        const Integer n = parse_integer(n_text);
        if (n < 1 || !n.fits_ulong_p()) throw PreconditionError("n out of range");
        f.n = n.get_ui();
      }
      for (const auto& h : dropped) {
        if (h == "x-odd") f.hypotheses.x_odd = false;
        if (h == "coprime") f.hypotheses.coprime = false;
        if (h == "positive") f.hypotheses.positive = false;
      }
      auto cert = certify(f);
      emit("certify", to_json(f), to_json(cert));
      return kExitOk;
    }

    if (*cmd_search) {
      search_cfg.sign = detail::parse_sign(search_sign);
      search_cfg.q = parse_integer(search_q);
      if (p_max > 0) {
        search_cfg.p_set = detail::primes_up_to(p_max, search_cfg.q);
      } else {
        search_cfg.p_set = p_list;
      }
      search_cfg.n_set = n_list;
      search_cfg.require_x_odd = !no_x_odd;
      search_cfg.require_coprime = !no_coprime;
      search_cfg.threads = threads;
      if (time_limit_ms > 0) search_cfg.time_limit = std::chrono::milliseconds(time_limit_ms);
      auto report = search_family(search_cfg);
      if (!report.complete) diagnostics.push_back("time limit reached; report is partial");
      emit("search", to_json(search_cfg), to_json(report));
      return report.fatal_count() > 0 ? kExitFailure : kExitOk;
    }

    if (*cmd_leb) {
      auto sols = search_lebesgue(parse_integer(leb_B), leb_n_min, leb_n_max, leb_y_max);
      Json input{{"B", leb_B},
                 {"n_range", Json::array({std::to_string(leb_n_min), std::to_string(leb_n_max)})},
                 {"y_max", std::to_string(leb_y_max)}};
      emit("lebesgue", std::move(input), Json{{"solutions", to_json(sols)}});
      return kExitOk;
    }

    if (*cmd_corpus) {
      auto corpus = generate_corpus(per_case, seed);
      std::size_t failures = 0;
      std::array<std::size_t, 5> per_label{};
      for (const auto& entry : corpus) {
        ++per_label[static_cast<std::size_t>(entry.analysis.label)];
        auto cc = cross_check(entry.analysis);
        if (!cc.ok()) {
          ++failures;
          for (const auto& p : cc.problems) {
            diagnostics.push_back(entry.instance.to_string() + ": " + p);
          }
        }
      }
      Json counts = Json::object();
      for (CaseLabel l : {CaseLabel::I, CaseLabel::II, CaseLabel::III, CaseLabel::IV,
                          CaseLabel::V}) {
        counts[to_string(l)] = std::to_string(per_label[static_cast<std::size_t>(l)]);
      }
      Json result{{"instances", std::to_string(corpus.size())},
                  {"per_case", std::move(counts)},
                  {"failures", std::to_string(failures)}};
      emit("corpus", Json{{"seed", std::to_string(seed)}, {"per_case", std::to_string(per_case)}},
           std::move(result));
      return failures == 0 ? kExitOk : kExitFailure;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "failure: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace frey::cli
