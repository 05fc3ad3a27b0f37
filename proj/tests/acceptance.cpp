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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "talex/pretzel/r0.hpp"
#include "talex/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>

using namespace talex;

namespace {

struct Criterion {
  std::string detail;
  bool passed = true;

  void fail(std::string why) {
    if (passed)
      detail = std::move(why);
    passed = false;
  }
};

std::vector<Scalar> meridians() { return {Scalar::from_strings("1.2", "0.4"), Scalar::from_strings("0.9", "-0.2")}; }

std::string sci(const Real &x) { return to_decimal(x, 3); }

struct Worst {
  Real value = Real(0);
  std::string where;
  void update(const Real &v, const std::string &at) {
    if (v > value || where.empty()) {
      value = v;
      where = at;
    }
  }
};

std::string point_label(const verify::PointReport &p) {
  return "n=" + std::to_string(p.n) + " m=" + to_decimal(p.m.re(), 2) + "," + to_decimal(p.m.im(), 2) +
         " root " + std::to_string(p.root_index);
}

verify::SweepReport sweep_at(unsigned bits, std::optional<Real> perturb = std::nullopt) {
  PrecisionScope scope(bits);
  verify::PointOptions opt;
  opt.precision_bits = bits;
  opt.max_retry_bits = bits; // no precision escalation inside the gate
  opt.perturb_s = perturb;
  return verify::verify_sweep(1, 5, meridians(), opt);
}

// Judge the named checks over every point; records the worst value.
void judge(Criterion &c, const verify::SweepReport &r, std::initializer_list<const char *> names) {
  if (r.points.empty())
    c.fail("no certified roots");
  for (const char *name : names) {
    Worst w;
    for (const auto &p : r.points) {
      const verify::Check *chk = p.find(name);
      if (!chk) {
        c.fail(std::string(name) + " missing at " + point_label(p));
        continue;
      }
      w.update(chk->value, point_label(p));
      if (!chk->passed)
        c.fail(std::string(name) + " = " + sci(chk->value) + " > " + sci(chk->threshold) + " at " + point_label(p));
    }
    if (!c.detail.empty())
      c.detail += "; ";
    c.detail += std::string(name) + " worst " + sci(w.value);
  }
}

Real relation_residual(const verify::PointReport &p) {
  Real worst(0);
  for (const char *name : {"relation_three_gen_link", "relation_three_gen_surgery", "relation_two_gen"})
    if (const verify::Check *c = p.find(name))
      worst = std::max(worst, c->value);
  return worst;
}

void report(int id, const char *title, const Criterion &c) {
  std::printf("%s C%d %s: %s\n", c.passed ? "PASS" : "FAIL", id, title, c.detail.c_str());
  std::fflush(stdout);
}

} // namespace

int main() {
  using clock = std::chrono::steady_clock;
  bool all = true;
  auto done = [&](int id, const char *title, const Criterion &c) {
    report(id, title, c);
    all = all && c.passed;
  };

  const auto t0 = clock::now();
  const verify::SweepReport base = sweep_at(256);
  const double seconds = std::chrono::duration<double>(clock::now() - t0).count();
  PrecisionScope scope(256);

  {
    Criterion c;
    judge(c, base, {"relation_three_gen_link", "relation_three_gen_surgery", "relation_two_gen", "determinant_one"});
    c.detail = std::to_string(base.points.size()) + " roots; " + c.detail + "; sweep " +
               std::to_string(static_cast<int>(seconds)) + " s";
    if (seconds >= 300)
      c.fail("sweep took " + std::to_string(seconds) + " s");
    done(1, "representation certification", c);
  }
  {
    Criterion c;
    judge(c, base, {"r1_vanishes", "zeta1_vanishes", "zeta2_vanishes"});
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> u(-1.8, 1.8);
    Real worst(0);
    for (int n = 1; n <= 5; ++n)
      for (int i = 0; i < 40; ++i) {
        Scalar m(Real(u(rng)), Real(u(rng))), s(Real(u(rng)), Real(u(rng)));
        if (m.is_zero() || s.is_zero())
          continue;
        const auto ctx = pretzel::build_context(n, m, s);
        worst = std::max(worst, Real(abs(closed_form::zeta_vanishing(ctx).zeta1)));
      }
    c.detail += "; zeta1 at 200 random contexts worst " + sci(worst);
    if (worst > Real("1e-30"))
      c.fail("zeta1 = " + sci(worst) + " at a random context");
    done(2, "identity vanishing", c);
  }
  {
    Criterion c;
    judge(c, base, {"three_way_agreement"});
    done(3, "three-way agreement", c);
  }
  {
    Criterion c;
    judge(c, base, {"constant_term_one", "leading_term_one", "structural_zeros", "palindromic", "monic_degree_genus"});
    done(4, "shape of the Fox result", c);
  }
  {
    Criterion c;
    judge(c, base, {"division_exact"});
    done(5, "division exactness", c);
  }
  {
    Criterion c;
    judge(c, base, {"presentation_column_independence"});
    done(6, "presentation and column independence", c);
  }
  {
    Criterion c;
    const pretzel::BivarPoly s2m1 = pretzel::BivarPoly::s(2) - pretzel::BivarPoly(1);
    for (int n = 1; n <= 8; ++n) {
      const pretzel::BivarPoly r0 = pretzel::r0_polynomial(n);
      if (!(r0.mirror_m(8) == r0))
        c.fail("m-palindromicity fails at n=" + std::to_string(n));
      if (!r0.divide_by_monic_s(s2m1).second.is_zero())
        c.fail("s^2 - 1 does not divide r0 at n=" + std::to_string(n));
    }
    if (c.passed)
      c.detail = "n = 1..8 exact";
    done(7, "exact integer properties of r0", c);
  }
  {
    Criterion c;
    const verify::SweepReport lo = sweep_at(128);
    const verify::SweepReport hi = sweep_at(512);
    // Pair points across precisions by (n, m, nearest s).
    auto match = [&](const verify::SweepReport &r, const verify::PointReport &p) -> const verify::PointReport * {
      const verify::PointReport *best = nullptr;
      Real best_d;
      for (const auto &q : r.points) {
        if (q.n != p.n || abs(q.m - p.m) > Real("1e-30"))
          continue;
        Real d = abs(q.s - p.s);
        if (!best || d < best_d) {
          best = &q;
          best_d = d;
        }
      }
      return best && best_d < Real("1e-20") ? best : nullptr;
    };
    auto orders = [](const Real &coarse, const Real &fine, unsigned fine_bits) {
      // an exact zero counts as the working epsilon squared
      const Real floor = pow2(-2 * static_cast<int>(fine_bits));
      return static_cast<double>(log10(std::max(coarse, floor)) - log10(std::max(fine, floor)));
    };
    double min_lo = 1e9, min_hi = 1e9;
    for (const auto &p : base.points) {
      const auto *a = match(lo, p);
      const auto *b = match(hi, p);
      if (!a || !b) {
        c.fail("no matching root at 128/512 bits for " + point_label(p));
        continue;
      }
      min_lo = std::min(min_lo, orders(relation_residual(*a), relation_residual(p), 256));
      min_hi = std::min(min_hi, orders(relation_residual(p), relation_residual(*b), 512));
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "min orders gained 128->256: %.1f, 256->512: %.1f", min_lo, min_hi);
    if (c.passed)
      c.detail = buf;
    if (min_lo < 30 || min_hi < 30)
      c.fail(buf);
    done(8, "precision scaling", c);
  }
  {
    Criterion c;
    const verify::SweepReport off = sweep_at(256, Real("1e-3"));
    Real least_residual(-1), least_remainder(-1);
    for (const auto &p : off.points) {
      const Real res = relation_residual(p);
      const verify::Check *div = p.find("division_exact");
      if (least_residual < 0 || res < least_residual)
        least_residual = res;
      if (!div) {
        c.fail("no division check at " + point_label(p));
        continue;
      }
      if (least_remainder < 0 || div->value < least_remainder)
        least_remainder = div->value;
      if (res <= Real("1e-6"))
        c.fail("perturbed residual " + sci(res) + " at " + point_label(p));
      if (div->passed)
        c.fail("perturbed division passed at " + point_label(p));
    }
    if (off.points.empty())
      c.fail("no perturbed points");
    if (c.passed)
      c.detail = std::to_string(off.points.size()) + " perturbed roots; least residual " + sci(least_residual) +
                 "; least remainder " + sci(least_remainder);
    done(9, "negative controls", c);
  }

  std::printf("%s\n", all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
  return all ? 0 : 1;
}
