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

#include "talex/closed_form/auxiliary.hpp"
#include "talex/closed_form/genus.hpp"
#include "talex/closed_form/prop32.hpp"
#include "talex/closed_form/theorem.hpp"
#include "talex/fox/wada.hpp"
#include "talex/pretzel/holonomy.hpp"
#include "talex/pretzel/roots.hpp"

#include <string>
#include <vector>

namespace talex::verify {

/// Pass thresholds for the certification checks.
struct Thresholds {
  Real relation_residual{"1e-25"};
  Real r1{"1e-25"};
  Real zeta1{"1e-30"};
  Real zeta2{"1e-25"};
  Real division{"1e-25"};
  Real agreement{"1e-20"};
  Real shape{"1e-20"};
};

struct Check {
  std::string name;
  Real value;     // measured quantity; passes when value <= threshold
  Real threshold;
  bool passed = false;
};

struct PointOptions {
  unsigned precision_bits = kDefaultPrecisionBits;
  /// Test hook: move s off the root by this amount before checking.
  std::optional<Real> perturb_s;
  /// On failure, retry at doubled precision up to this many bits.
  unsigned max_retry_bits = 1024;
};

struct PointReport {
  int n = 0;
  Scalar m;
  Scalar s;
  std::size_t root_index = 0;
  unsigned precision_bits = 0;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto &c : checks)
      if (!c.passed)
        return false;
    return !checks.empty();
  }
  const Check *find(std::string_view name) const {
    for (const auto &c : checks)
      if (c.name == name)
        return &c;
    return nullptr;
  }
  std::vector<std::string> failed_names() const {
    std::vector<std::string> out;
    for (const auto &c : checks)
      if (!c.passed)
        out.push_back(c.name);
    return out;
  }
};

/// Fox-pipeline results for every (presentation, removed generator) pair.
struct FoxVariants {
  struct Variant {
    std::string label;
    DeltaResult result;
  };
  std::vector<Variant> variants; // variants[0] is two-gen with c removed
};

inline FoxVariants fox_variants(const pretzel::PretzelContext &ctx, const Real &tol) {
  const pretzel::HolonomyRep rep = pretzel::build_holonomy_rep(ctx);
  const fox::Presentation p2 = pretzel::presentation_two_gen(ctx.n);
  const fox::Presentation p3 = pretzel::presentation_three_gen(ctx.n);
  FoxVariants out;
  auto add = [&](std::string label, const fox::Presentation &p, const fox::Representation &rho, int k) {
    DeltaResult d = fox::normalized_quotient(fox::wada_quotient(p, rho, k, tol));
    d.context = std::make_shared<const pretzel::PretzelContext>(ctx);
    out.variants.push_back({std::move(label), std::move(d)});
  };
  add("two_gen/remove_c", p2, rep.two_gen, pretzel::gen2::c);
  add("two_gen/remove_a", p2, rep.two_gen, pretzel::gen2::a);
  add("three_gen/remove_a", p3, rep.three_gen, pretzel::gen3::a);
  add("three_gen/remove_b", p3, rep.three_gen, pretzel::gen3::b);
  add("three_gen/remove_x", p3, rep.three_gen, pretzel::gen3::x);
  return out;
}

inline Real palindrome_defect(const LaurentPoly &p, int degree) {
  Real worst(0);
  for (int i = 0; i <= degree; ++i)
    worst = std::max(worst, Real(abs(p.coeff(i) - p.coeff(degree - i))));
  return worst;
}

/// Every certification check at one (n, m, s), run at the current scope's
/// precision.
inline std::vector<Check> run_checks(const pretzel::PretzelContext &ctx, const Thresholds &th = {}) {
  std::vector<Check> checks;
  auto add = [&](std::string name, Real value, const Real &threshold) {
    bool ok = value <= threshold;
    checks.push_back({std::move(name), std::move(value), threshold, ok});
  };
  const int n = ctx.n;
  const Real tol = pow2(-static_cast<int>(current_precision_bits()) / 2);

  const pretzel::RelationReport rel = pretzel::rep_relation_check(ctx);
  add("relation_three_gen_link", rel.three_gen_link, th.relation_residual);
  add("relation_three_gen_surgery", rel.three_gen_surgery, th.relation_residual);
  add("relation_two_gen", rel.two_gen, th.relation_residual);
  add("determinant_one", rel.determinant_defect, th.relation_residual);

  add("r1_vanishes", abs(pretzel::eval_r1(ctx)), th.r1);
  const closed_form::Zeta z = closed_form::zeta_vanishing(ctx);
  add("zeta1_vanishes", abs(z.zeta1), th.zeta1);
  add("zeta2_vanishes", abs(z.zeta2), th.zeta2);

  const FoxVariants fv = fox_variants(ctx, tol);
  Real worst_division(0);
  for (const auto &v : fv.variants)
    worst_division = std::max(worst_division, v.result.division_remainder);
  add("division_exact", worst_division, th.division);

  const DeltaResult &fox_delta = fv.variants.front().result;
  const DeltaResult theorem = closed_form::delta_theorem(ctx);
  const DeltaResult prop = closed_form::delta_prop32(ctx);
  add("three_way_agreement",
      std::max({max_coefficient_deviation(fox_delta.poly, theorem.poly),
                max_coefficient_deviation(fox_delta.poly, prop.poly),
                max_coefficient_deviation(theorem.poly, prop.poly)}),
      th.agreement);

  Real worst_variant(0);
  for (const auto &v : fv.variants)
    worst_variant = std::max(worst_variant, max_coefficient_deviation(v.result.poly, fox_delta.poly));
  add("presentation_column_independence", worst_variant, th.agreement);

  const int degree = 4 * n + 6;
  add("palindromic", palindrome_defect(fox_delta.poly, degree), th.shape);
  add("structural_zeros",
      std::max({Real(abs(fox_delta.poly.coeff(1))), Real(abs(fox_delta.poly.coeff(2))),
                Real(abs(fox_delta.poly.coeff(4 * n + 4))), Real(abs(fox_delta.poly.coeff(4 * n + 5)))}),
      th.shape);
  const Scalar one(1);
  add("constant_term_one", abs(fox_delta.poly.coeff(0) - one), th.shape);
  add("leading_term_one", abs(fox_delta.poly.coeff(degree) - one), th.shape);
  const closed_form::GenusReport g = closed_form::genus_fiberedness_report(fox_delta, n, th.shape);
  const bool shape_ok = g.monic && g.degree_matches_family && g.genus_matches_family && g.fibered_consistent;
  add("monic_degree_genus", Real(shape_ok ? 0 : 1), Real(0));

  const fox::Presentation p2 = pretzel::presentation_two_gen(n);
  const pretzel::HolonomyRep rep = pretzel::build_holonomy_rep(ctx);
  add("derivative_expansion",
      max_coefficient_deviation(closed_form::derivative_expansion_eq2(ctx),
                                fox::phi_map(fox::fox_derivative_of_relator(p2.relators[0], pretzel::gen2::a),
                                             rep.two_gen, p2.abelian_exponents)),
      th.agreement);
  add("denominator_closed_form",
      max_coefficient_deviation(closed_form::denominator_closed_form(ctx),
                                fox::generator_denominator(p2, rep.two_gen, pretzel::gen2::c)),
      th.agreement);
  return checks;
}

/// The root of r0(m, .) at `bits` closest to s.
inline Scalar nearest_root(int n, const Scalar &m, const Scalar &s, unsigned bits) {
  auto roots = pretzel::solve_s_roots(n, m, bits);
  PrecisionScope scope(bits);
  const pretzel::SRoot *best = nullptr;
  Real best_d;
  for (const auto &r : roots) {
    Real d = abs(r.s - s);
    if (!best || d < best_d) {
      best = &r;
      best_d = d;
    }
  }
  return best->s;
}

/// Check one root; on failure re-solve at doubled precision (up to
/// opt.max_retry_bits) and try again.
inline PointReport verify_point(int n, const Scalar &m, std::size_t root_index, const Scalar &s,
                                const PointOptions &opt = {}, const Thresholds &th = {}) {
  PointReport rep;
  rep.n = n;
  rep.root_index = root_index;
  for (unsigned bits = opt.precision_bits;; bits *= 2) {
    PrecisionScope scope(bits);
    rep.precision_bits = bits;
    rep.m = m.rounded_to(bits);
    rep.s = bits == opt.precision_bits ? s.rounded_to(bits) : nearest_root(n, m, s, bits);
    Scalar s_used = rep.s;
    if (opt.perturb_s)
      s_used += Scalar(with_precision(*opt.perturb_s, bits));
    const pretzel::PretzelContext ctx = pretzel::build_context(n, rep.m, s_used);
    if (ctx.degenerate())
      rep.checks = {{"nondegenerate_context", Real(1), Real(0), false}};
    else
      rep.checks = run_checks(ctx, th);
    if (rep.passed() || bits * 2 > opt.max_retry_bits)
      break;
  }
  return rep;
}

struct SweepReport {
  std::vector<PointReport> points;
  bool passed() const {
    if (points.empty())
      return false;
    for (const auto &p : points)
      if (!p.passed())
        return false;
    return true;
  }
};

/// All nondegenerate roots for every n in [n_lo, n_hi] and every m.
inline SweepReport verify_sweep(int n_lo, int n_hi, const std::vector<Scalar> &ms, const PointOptions &opt = {},
                                const Thresholds &th = {}) {
  SweepReport out;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (const Scalar &m : ms) {
      const auto roots = pretzel::solve_s_roots(n, m, opt.precision_bits);
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!roots[i].flags.empty())
          continue;
        out.points.push_back(verify_point(n, m, i, roots[i].s, opt, th));
      }
    }
  }
  return out;
}

} // namespace talex::verify
