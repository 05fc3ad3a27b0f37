// Copyright 2026 The talex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "talex/cli/config.hpp"
#include "talex/verify.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace talex::cli {

using Json = nlohmann::ordered_json;

inline Json complex_json(const Scalar &z, int digits) {
  return Json::array({to_decimal(z.re(), digits), to_decimal(z.im(), digits)});
}

inline Json flags_json(const pretzel::DegeneracyFlags &f) {
  Json arr = Json::array();
  for (const auto &name : f.names())
    arr.push_back(name);
  return arr;
}

inline std::string short_decimal(const Real &x) { return to_decimal(x, 6); }

/// Documented delta schema.
inline Json delta_json(const RunConfig &cfg, const pretzel::PretzelContext &ctx, const DeltaResult &d) {
  const int digits = output_digits(cfg.precision_bits);
  Json j;
  j["n"] = ctx.n;
  j["m"] = complex_json(ctx.m, digits);
  j["s"] = complex_json(ctx.s, digits);
  j["flags"] = flags_json(ctx.degeneracy_flags);
  j["method"] = std::string(to_string(d.method));
  j["unit"] = {{"sign", d.unit.sign}, {"shift", d.unit.shift}};
  Json coeffs = Json::array();
  for (const auto &[e, c] : d.poly.terms())
    coeffs.push_back({{"exp", e}, {"re", to_decimal(c.re(), digits)}, {"im", to_decimal(c.im(), digits)}});
  j["coefficients"] = std::move(coeffs);
  return j;
}

inline int cmd_roots(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  cfg.validate();
  PrecisionScope scope(cfg.precision_bits);
  std::vector<pretzel::SRoot> roots;
  try {
    roots = pretzel::solve_s_roots(cfg.n, cfg.m.value(), cfg.precision_bits);
  } catch (const NonConvergence &e) {
    err << "error: " << e.what() << "\n";
    return exit_code::non_convergence;
  }
  const int digits = output_digits(cfg.precision_bits);
  switch (cfg.format) {
  case OutputFormat::json: {
    Json j;
    j["n"] = cfg.n;
    j["m"] = Json::array({cfg.m.re, cfg.m.im});
    j["precision_bits"] = cfg.precision_bits;
    Json arr = Json::array();
    for (std::size_t i = 0; i < roots.size(); ++i)
      arr.push_back({{"index", i},
                     {"s", complex_json(roots[i].s, digits)},
                     {"residual", short_decimal(roots[i].residual)},
                     {"flags", flags_json(roots[i].flags)}});
    j["roots"] = std::move(arr);
    out << j.dump(2) << "\n";
    break;
  }
  case OutputFormat::csv:
    out << "index,re,im,residual,flags\n";
    for (std::size_t i = 0; i < roots.size(); ++i) {
      std::string flags;
      for (const auto &f : roots[i].flags.names())
        flags += (flags.empty() ? "" : ";") + f;
      out << i << ',' << to_decimal(roots[i].s.re(), digits) << ',' << to_decimal(roots[i].s.im(), digits) << ','
          << short_decimal(roots[i].residual) << ',' << flags << "\n";
    }
    break;
  case OutputFormat::text:
    for (std::size_t i = 0; i < roots.size(); ++i) {
      out << "[" << i << "] s = " << to_decimal(roots[i].s.re(), 20) << " + " << to_decimal(roots[i].s.im(), 20)
          << "i  residual " << short_decimal(roots[i].residual);
      for (const auto &f : roots[i].flags.names())
        out << "  " << f;
      out << "\n";
    }
    break;
  }
  return pretzel::default_root_index(roots) ? exit_code::ok : exit_code::no_nondegenerate_root;
}

inline int fox_generator_index(const RunConfig &cfg) {
  const std::vector<std::string> names =
      cfg.three_gen ? std::vector<std::string>{"a", "b", "x"} : std::vector<std::string>{"a", "c"};
  const std::string want = cfg.remove_generator.value_or(cfg.three_gen ? "x" : "c");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == want)
      return static_cast<int>(i);
  throw UsageError("--remove must name a generator of the chosen presentation");
}

inline int cmd_delta(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  cfg.validate();
  PrecisionScope scope(cfg.precision_bits);
  const Scalar m = cfg.m.value();
  std::vector<pretzel::SRoot> roots;
  try {
    roots = pretzel::solve_s_roots(cfg.n, m, cfg.precision_bits);
  } catch (const NonConvergence &e) {
    err << "error: " << e.what() << "\n";
    return exit_code::non_convergence;
  }
  std::size_t index = 0;
  if (cfg.root_index) {
    if (*cfg.root_index >= roots.size())
      throw UsageError("--root-index out of range (" + std::to_string(roots.size()) + " roots)");
    index = *cfg.root_index;
  } else if (auto def = pretzel::default_root_index(roots)) {
    index = *def;
  } else {
    err << "error: no nondegenerate root\n";
    return exit_code::degenerate_context;
  }
  const pretzel::PretzelContext ctx = pretzel::build_context(cfg.n, m, roots[index].s);
  const Real tol = cfg.division_tolerance ? Real(*cfg.division_tolerance)
                                          : pow2(-static_cast<int>(cfg.precision_bits) / 2);

  std::vector<DeltaResult> results;
  try {
    ctx.require_nondegenerate("delta");
    const bool all = cfg.method == MethodChoice::all;
    if (all || cfg.method == MethodChoice::fox) {
      const pretzel::HolonomyRep rep = pretzel::build_holonomy_rep(ctx);
      const fox::Presentation p =
          cfg.three_gen ? pretzel::presentation_three_gen(cfg.n) : pretzel::presentation_two_gen(cfg.n);
      results.push_back(
          fox::wada_polynomial(p, cfg.three_gen ? rep.three_gen : rep.two_gen, fox_generator_index(cfg), tol));
    }
    if (all || cfg.method == MethodChoice::theorem)
      results.push_back(closed_form::delta_theorem(ctx));
    if (all || cfg.method == MethodChoice::prop32)
      results.push_back(closed_form::delta_prop32(ctx));
  } catch (const DegenerateContext &e) {
    err << "error: " << e.what() << "\n";
    return exit_code::degenerate_context;
  } catch (const InexactDivision &e) {
    err << "error: " << e.what() << "\n";
    return exit_code::inexact_division;
  } catch (const SingularDenominator &e) {
    err << "error: " << e.what() << "\n";
    return exit_code::inexact_division;
  }

  Real deviation(0);
  for (std::size_t i = 0; i < results.size(); ++i)
    for (std::size_t j = i + 1; j < results.size(); ++j)
      deviation = std::max(deviation, max_coefficient_deviation(results[i].poly, results[j].poly));

  const int digits = output_digits(cfg.precision_bits);
  switch (cfg.format) {
  case OutputFormat::json:
    if (results.size() == 1) {
      out << delta_json(cfg, ctx, results.front()).dump(2) << "\n";
    } else {
      Json j;
      j["n"] = ctx.n;
      j["m"] = complex_json(ctx.m, digits);
      j["s"] = complex_json(ctx.s, digits);
      j["flags"] = flags_json(ctx.degeneracy_flags);
      j["method"] = "all";
      Json arr = Json::array();
      for (const auto &r : results)
        arr.push_back(delta_json(cfg, ctx, r));
      j["results"] = std::move(arr);
      j["max_pairwise_deviation"] = short_decimal(deviation);
      out << j.dump(2) << "\n";
    }
    break;
  case OutputFormat::csv:
    out << (results.size() == 1 ? "exp,re,im\n" : "method,exp,re,im\n");
    for (const auto &r : results)
      for (const auto &[e, c] : r.poly.terms()) {
        if (results.size() > 1)
          out << to_string(r.method) << ',';
        out << e << ',' << to_decimal(c.re(), digits) << ',' << to_decimal(c.im(), digits) << "\n";
      }
    break;
  case OutputFormat::text:
    out << "n = " << ctx.n << ", root " << index << ": s = " << to_decimal(ctx.s.re(), 20) << " + "
        << to_decimal(ctx.s.im(), 20) << "i\n";
    for (const auto &r : results) {
      out << "method " << to_string(r.method) << " (unit sign " << r.unit.sign << ", shift " << r.unit.shift
          << ")\n";
      for (const auto &[e, c] : r.poly.terms())
        out << "  t^" << e << ": " << to_decimal(c.re(), 20) << " + " << to_decimal(c.im(), 20) << "i\n";
    }
    if (results.size() > 1)
      out << "max pairwise deviation " << short_decimal(deviation) << "\n";
    break;
  }
  return exit_code::ok;
}

inline int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  cfg.validate();
  PrecisionScope scope(cfg.precision_bits);
  std::vector<Scalar> ms;
  std::vector<ComplexText> m_texts =
      cfg.m_values.empty() ? std::vector<ComplexText>{{"1.2", "0.4"}, {"0.9", "-0.2"}} : cfg.m_values;
  for (const auto &mt : m_texts)
    ms.push_back(mt.value());
  verify::PointOptions opt;
  opt.precision_bits = cfg.precision_bits;
  if (cfg.perturb_s)
    opt.perturb_s = Real(*cfg.perturb_s);

  verify::SweepReport report;
  try {
    report = verify::verify_sweep(cfg.n_lo, cfg.n_hi, ms, opt);
  } catch (const NonConvergence &e) {
    err << "error: " << e.what() << "\n";
    return exit_code::non_convergence;
  }

  const int digits = output_digits(cfg.precision_bits);
  switch (cfg.format) {
  case OutputFormat::json: {
    Json j;
    j["passed"] = report.passed();
    j["precision_bits"] = cfg.precision_bits;
    Json pts = Json::array();
    for (const auto &p : report.points) {
      Json checks = Json::array();
      for (const auto &c : p.checks)
        checks.push_back({{"name", c.name},
                          {"value", short_decimal(c.value)},
                          {"threshold", short_decimal(c.threshold)},
                          {"passed", c.passed}});
      pts.push_back({{"n", p.n},
                     {"m", complex_json(p.m, digits)},
                     {"root_index", p.root_index},
                     {"s", complex_json(p.s, digits)},
                     {"precision_bits", p.precision_bits},
                     {"passed", p.passed()},
                     {"checks", std::move(checks)}});
    }
    j["points"] = std::move(pts);
    out << j.dump(2) << "\n";
    break;
  }
  case OutputFormat::csv:
    out << "n,m_re,m_im,root_index,precision_bits,check,value,threshold,passed\n";
    for (const auto &p : report.points)
      for (const auto &c : p.checks)
        out << p.n << ',' << to_decimal(p.m.re(), 12) << ',' << to_decimal(p.m.im(), 12) << ',' << p.root_index
            << ',' << p.precision_bits << ',' << c.name << ',' << short_decimal(c.value) << ','
            << short_decimal(c.threshold) << ',' << (c.passed ? "true" : "false") << "\n";
    break;
  case OutputFormat::text:
    for (const auto &p : report.points) {
      out << "n=" << p.n << " m=" << to_decimal(p.m.re(), 6) << "," << to_decimal(p.m.im(), 6) << " root "
          << p.root_index << " (" << p.precision_bits << " bits): " << (p.passed() ? "PASS" : "FAIL");
      for (const auto &f : p.failed_names())
        out << " " << f;
      out << "\n";
    }
    out << (report.passed() ? "all checks passed" : "some checks failed") << " (" << report.points.size()
        << " points)\n";
    break;
  }
  if (!report.passed()) {
    for (const auto &p : report.points)
      for (const auto &f : p.failed_names())
        err << "FAILED " << f << " at n=" << p.n << " root " << p.root_index << "\n";
    if (report.points.empty())
      err << "FAILED no nondegenerate roots in sweep\n";
    return exit_code::check_failed;
  }
  return exit_code::ok;
}

} // namespace talex::cli
