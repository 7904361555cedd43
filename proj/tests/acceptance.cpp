/*
   Copyright 2026 The xop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "xop/xop.hpp"

using namespace xop;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double dist(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

Complex cx(const std::string& s, Precision p) { return parse_complex(s, p); }

/// Accumulates sub-check results and a short detail string.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      if (!failures_.empty()) failures_ += "; ";
      failures_ += what;
    }
  }
  void note(const std::string& s) {
    if (!notes_.empty()) notes_ += ", ";
    notes_ += s;
  }
  bool ok() const { return ok_; }
  std::string detail() const { return ok_ ? notes_ : failures_ + (notes_.empty() ? "" : " | " + notes_); }

 private:
  bool ok_ = true;
  std::string failures_;
  std::string notes_;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const ConvergenceRow& row_at(const ConvergenceReport& rep, long n) {
  for (const auto& r : rep.rows)
    if (r.n == n) return r;
  throw InvalidInput("missing row");
}

// 1. Type-III table.
void type_iii_table(Check& c) {
  const auto t0 = Clock::now();
  const Precision p = 256;
  const FamilySpec spec = LaguerreTypeIIISpec{5, Rational(-2, 5)};
  const LimitPoints lp = limit_points(spec, p);
  const int k = select_limit(lp.points, cx("-1.00772514594748", p));
  const Complex& z = lp.points[static_cast<std::size_t>(k - 1)];
  const Complex omega_check = evaluate(reflect(laguerre(5, Rational(-3, 5))), z);
  c.require(abs(omega_check).to_double() < 1e-60, "limit point is not a root of L_5^(-3/5)(-x)");
  const double dz = dist(z, cx("-1.00772514594748", p));
  c.require(dz < 1e-10, "zeta_inf off by " + fmt("%.2e", dz));
  const ConvergenceReport rep = scaled_gap_study(spec, k, {100, 150, 175, 200}, p);
  const std::vector<std::pair<long, double>> ref = {{100, -1.0377}, {150, -1.03007}, {175, -1.0277}, {200, -1.02584}};
  double worst = 0;
  for (const auto& [n, v] : ref) {
    const ConvergenceRow& r = row_at(rep, n);
    c.require(r.ok, "row n=" + std::to_string(n) + " failed: " + r.error);
    if (!r.ok) continue;
    const double e = dist(r.scaled_gap, cx(fmt("%.6f", v), p));
    worst = std::max(worst, e);
    c.require(e < 1e-3, "s_" + std::to_string(n) + " off by " + fmt("%.2e", e));
  }
  const double dl = dist(rep.theoretical_limit, cx("-1.00386", p));
  c.require(dl < 1e-4, "limit off by " + fmt("%.2e", dl));
  const double t = seconds_since(t0);
  c.require(t < 120, "runtime " + fmt("%.1f", t) + " s");
  c.note("max |s_n - ref| " + fmt("%.1e", worst));
  c.note("limit " + fmt("%.6f", rep.theoretical_limit.real().to_double()));
  c.note(fmt("%.1f s", t));
}

// 2. Hermite (2,2) table at 512 bits.
void hermite_table(Check& c) {
  const auto t0 = Clock::now();
  const Precision p = 512;
  const FamilySpec spec = HermiteSpec{Partition{2, 2}};
  const Real q = sqrt(sqrt(Real(Rational(3, 4), p)) / Real(2L, p));
  const LimitPoints lp = limit_points(spec, p);
  const int k = select_limit(lp.points, Complex(q, q));
  c.require(dist(lp.points[static_cast<std::size_t>(k - 1)], Complex(q, q)) < 1e-100, "limit point mismatch");
  const ConvergenceReport rep = scaled_gap_study(spec, k, {100, 200, 400, 500}, p);
  struct Ref {
    long n;
    double re, im;
  };
  const std::vector<Ref> ref = {{100, -0.000538702, 0.719837},
                                {200, -0.000262063, 0.713381},
                                {400, -0.00012928, 0.710222},
                                {500, -0.000103149, 0.709596}};
  double worst = 0;
  for (const auto& r : ref) {
    const ConvergenceRow& row = row_at(rep, r.n);
    c.require(row.ok, "row n=" + std::to_string(r.n) + " failed: " + row.error);
    if (!row.ok) continue;
    const double er = std::abs(row.scaled_gap.real().to_double() - r.re);
    const double ei = std::abs(row.scaled_gap.imag().to_double() - r.im);
    worst = std::max({worst, er, ei});
    c.require(er < 1e-5 && ei < 1e-5, "s_" + std::to_string(r.n) + " off by " + fmt("%.2e", std::max(er, ei)));
  }
  const double er = std::abs(rep.theoretical_limit.real().to_double());
  const double ei = std::abs(rep.theoretical_limit.imag().to_double() - 0.707107);
  c.require(er < 1e-5 && ei < 1e-5, "limit off");
  const double t = seconds_since(t0);
  c.require(t < 600, "runtime " + fmt("%.1f", t) + " s");
  c.note("max component error " + fmt("%.1e", worst));
  c.note("limit " + fmt("%.6f", rep.theoretical_limit.imag().to_double()) + "i");
  c.note(fmt("%.1f s", t));
}

RationalPoly lag(long n, const Rational& a) { return n < 0 ? RationalPoly() : laguerre(static_cast<unsigned>(n), a); }

// 3. Closed forms.
void closed_forms(Check& c) {
  const FamilySpec h = HermiteSpec{Partition{1, 1}};
  int hermite_cases = 0;
  for (long n = 0; n <= 50; ++n) {
    if (!index_set_contains(h, n)) continue;
    const RationalPoly got = exceptional_polynomial(h, n);
    if (n < 3) {
      // The closed form needs H_{n-2}; n = 0 is the constant member.
      c.require(got.degree() == n, "Hermite degree at n=" + std::to_string(n));
      continue;
    }
    const RationalPoly closed = (x_poly() * Rational(-2) * hermite(static_cast<unsigned>(n - 1)) +
                                 (RationalPoly{Rational(1), Rational(0), Rational(2)} * Rational(n) -
                                  RationalPoly::constant(2)) *
                                     hermite(static_cast<unsigned>(n - 2))) *
                                Rational(16 * (n - 1));
    c.require(proportional(got, closed), "Hermite (1,1) n=" + std::to_string(n));
    ++hermite_cases;
  }
  const Rational a(3, 2);
  const FamilySpec t1 = LaguerreTypeISpec{2, a};
  int type_i_cases = 0;
  for (long n = 2; n <= 30; ++n) {
    const RationalPoly closed = reflect(laguerre(2, a)) * lag(n - 2, a - 1) + reflect(laguerre(2, a - 1)) * lag(n - 3, a);
    c.require(proportional(exceptional_polynomial(t1, n), closed), "Type-I n=" + std::to_string(n));
    ++type_i_cases;
  }
  for (const auto& [al, be] : std::vector<std::pair<Rational, Rational>>{{Rational(1, 2), Rational(3)},
                                                                         {Rational(1, 3), Rational(4)}}) {
    const RationalPoly omega = generalized_polynomial(JacobiSpec{al - 2, be + 2, {}, Partition{1, 1}});
    c.require(proportional(omega, jacobi(2, -al - 1, be - 1)), "Jacobi X2 at (" + to_string(al) + "," + to_string(be) + ")");
  }
  c.note(std::to_string(hermite_cases) + " Hermite, " + std::to_string(type_i_cases) + " Type-I, 2 Jacobi");
}

// 4. Type-I analytic identity.
void type_i_identity(Check& c) {
  const Precision p = 256;
  for (const Rational& a : {Rational(1, 2), Rational(3, 2), Rational(5, 2)}) {
    const FamilySpec spec = LaguerreTypeISpec{2, a};
    const Real s = sqrt(Real(a + 1, p));
    const Complex zeta(Real(-(a + 1), p) + s);
    const LimitPoints lp = limit_points(spec, p);
    const int k = select_limit(lp.points, zeta);
    const double dz = dist(lp.points[static_cast<std::size_t>(k - 1)], zeta);
    c.require(dz < 1e-20, "alpha=" + to_string(a) + " root mismatch " + fmt("%.1e", dz));
    const Complex limit(-sqrt(Real(a + 1, p) - s));
    const ConvergenceReport rep = scaled_gap_study(spec, k, {100, 400}, p);
    c.require(dist(rep.theoretical_limit, limit) < 1e-60, "alpha=" + to_string(a) + " limit formula mismatch");
    const ConvergenceRow& r100 = row_at(rep, 100);
    const ConvergenceRow& r400 = row_at(rep, 400);
    c.require(r100.ok && r400.ok, "alpha=" + to_string(a) + " row failed");
    if (!(r100.ok && r400.ok)) continue;
    const double g100 = dist(r100.scaled_gap, limit);
    const double g400 = dist(r400.scaled_gap, limit);
    c.require(g400 < g100, "alpha=" + to_string(a) + " gap not shrinking");
    c.require(g400 < 0.05, "alpha=" + to_string(a) + " |s400 - limit| = " + fmt("%.3f", g400));
    c.note("alpha=" + to_string(a) + ": " + fmt("%.4f", g100) + " -> " + fmt("%.4f", g400));
  }
}

// 5. X2 Jacobi constant.
void x2_constant(Check& c) {
  const Precision p = 256;
  const Rational a(1, 2), b(3);
  const Complex target(Rational(1) / (1 - a), p);
  double worst = 0;
  for (const auto& v : x2_jacobi_constant(a, b, p)) worst = std::max(worst, dist(v, target));
  c.require(worst < 1e-25, "constant off by " + fmt("%.1e", worst));
  c.note("max error " + fmt("%.1e", worst));
}

// 6. Electrostatic identities.
void electrostatics(Check& c) {
  const Precision p = 256;
  const std::vector<std::pair<FamilySpec, long>> cases = {
      {HermiteSpec{Partition{1, 1}}, 15}, {HermiteSpec{Partition{2, 2}}, 40}, {LaguerreTypeIIISpec{5, Rational(-2, 5)}, 50}};
  for (const auto& [spec, n] : cases) {
    const ZeroAnalysis a = analyze(spec, n, p);
    const Real bound = Real::pow2(-(static_cast<long>(p) - 60), 64) * Real(n, 64);
    double worst = 0;
    for (const auto& pr : a.assignment.pairs) {
      const Real r = abs(electrostatic_residual(spec, n, pr.k, a.zeros, a.assignment)).rounded(64);
      worst = std::max(worst, r.to_double());
      c.require(r < bound, to_string(kind_of(spec)) + " n=" + std::to_string(n) + " k=" + std::to_string(pr.k));
    }
    c.note(to_string(kind_of(spec)) + " n=" + std::to_string(n) + " " + fmt("%.1e", worst));
    // Perturb the regular zero closest to any evaluation point.
    const LimitPair* at = &a.assignment.pairs.front();
    std::size_t nearest = 0;
    for (const auto& pr : a.assignment.pairs) {
      for (std::size_t j = 0; j < a.zeros.regular.size(); ++j) {
        if (abs(a.zeros.regular[j] - pr.zero) < abs(a.zeros.regular[nearest] - at->zero)) {
          at = &pr;
          nearest = j;
        }
      }
    }
    ZeroSet bumped = a.zeros;
    bumped.regular[nearest] += Complex(Real(1e-3, p));
    const double neg = abs(electrostatic_residual(spec, n, at->k, bumped, a.assignment)).to_double();
    c.require(neg > 1e-4, to_string(kind_of(spec)) + " negative control only " + fmt("%.1e", neg));
    c.note(to_string(kind_of(spec)) + " control " + fmt("%.1e", neg));
  }
}

// 7. Structural properties.
void structure(Check& c) {
  const Precision p = 256;
  const std::vector<FamilySpec> specs = {
      HermiteSpec{Partition{1, 1}},
      HermiteSpec{Partition{2, 2}},
      LaguerreTypeISpec{2, Rational(1, 2)},
      LaguerreTypeISpec{2, Rational(3, 2)},
      LaguerreTypeISpec{2, Rational(5, 2)},
      LaguerreTypeIIISpec{5, Rational(-2, 5)},
      JacobiSpec{Rational(-3, 2), Rational(5), {}, Partition{1, 1}},
  };
  for (const auto& spec : specs) {
    const std::string name = to_string(kind_of(spec));
    c.require(generalized_polynomial(spec).degree() == exceptional_count(spec), name + " Omega degree");
    long missing = 0;
    for (long n = 0; n <= 50; ++n) {
      if (!index_set_contains(spec, n)) {
        ++missing;
        continue;
      }
      if (n <= 30 || n % 10 == 0) c.require(exceptional_polynomial(spec, n).degree() == n, name + " degree at n=" + std::to_string(n));
    }
    c.require(missing == exceptional_count(spec), name + " index-set complement " + std::to_string(missing));
    // Even-partition support freeness applies to specs meeting the rate hypotheses.
    if (check_admissibility(spec, next_in_index_set(spec, 0)).rate_hypotheses_ok && kind_of(spec) != FamilyKind::LaguerreTypeIII)
      c.require(limit_points(spec, p).support_free, name + " Omega meets the support");
  }
  const InterlacingReport h = interlacing_check(HermiteSpec{Partition{1, 1}}, 40, p);
  c.require(h.count >= h.bound, "Hermite interlacing " + std::to_string(h.count) + " < " + std::to_string(h.bound));
  const InterlacingReport l = interlacing_check(LaguerreTypeISpec{2, Rational(3, 2)}, 40, p);
  c.require(l.count >= l.bound, "Laguerre interlacing " + std::to_string(l.count) + " < " + std::to_string(l.bound));
  c.note("interlacing " + std::to_string(h.count) + ">=" + std::to_string(h.bound) + ", " + std::to_string(l.count) +
         ">=" + std::to_string(l.bound));
  const Real ode_bound = Real::pow2(-(static_cast<long>(p) - 40), 64);
  const std::vector<std::pair<FamilySpec, long>> odes = {{LaguerreTypeIIISpec{5, Rational(-2, 5)}, 12},
                                                         {HermiteSpec{Partition{2, 2}}, 20}};
  double worst = 0;
  for (const auto& [spec, n] : odes)
    for (const char* z : {"1+1i", "-0.6+2.3i"}) {
      const OdeResidual r = ode_residual(spec, n, cx(z, p));
      const Real rel = (abs(r.residual) / r.scale).rounded(64);
      worst = std::max(worst, rel.to_double());
      c.require(rel < ode_bound, to_string(kind_of(spec)) + " ODE residual at " + z);
    }
  c.note("ODE rel. residual " + fmt("%.1e", worst));
}

// 8. X2 Jacobi rate.
void jacobi_rate(Check& c) {
  const Precision p = 256;
  const FamilySpec spec = JacobiSpec{Rational(-3, 2), Rational(5), {}, Partition{1, 1}};
  const LimitPoints lp = limit_points(spec, p);
  const int k = select_limit(lp.points, cx("1.1137", p));
  const Complex& z = lp.points[static_cast<std::size_t>(k - 1)];
  const Complex limit = sqrt(z * z - Complex(Real(1L, p)));
  const ConvergenceReport rep = scaled_gap_study(spec, k, {100, 400}, p);
  c.require(dist(rep.theoretical_limit, limit) < 1e-60, "limit formula mismatch");
  const ConvergenceRow& r100 = row_at(rep, 100);
  const ConvergenceRow& r400 = row_at(rep, 400);
  c.require(r100.ok && r400.ok, "row failed");
  if (!(r100.ok && r400.ok)) return;
  const double g100 = dist(r100.scaled_gap, limit);
  const double g400 = dist(r400.scaled_gap, limit);
  const double rel = g400 / abs(limit).to_double();
  c.require(g400 < g100, "gap not shrinking");
  c.require(rel < 0.05, "relative gap " + fmt("%.3f", rel));
  c.note("zeta_inf " + fmt("%.8f", z.real().to_double()) + ", gap " + fmt("%.4f", g100) + " -> " + fmt("%.4f", g400) +
         ", rel " + fmt("%.4f", rel));
}

// 9. Ratio asymptotics.
void dhm(Check& c) {
  const auto rows = ratio_asymptotics_check(Rational(3, 2), Rational(1, 2), 0, cx("-1", 256), {100, 200, 400});
  const double base = rows[0].error.to_double() * 10.0;
  std::string trail;
  for (const auto& r : rows) {
    const double scaled = r.error.to_double() * std::sqrt(static_cast<double>(r.n));
    c.require(scaled <= 3 * base, "n=" + std::to_string(r.n) + " error*sqrt(n) " + fmt("%.3f", scaled));
    trail += (trail.empty() ? "" : ", ") + fmt("%.4f", scaled);
  }
  c.note("error*sqrt(n) " + trail);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"1 Type-III table (m=5, alpha=-2/5)", type_iii_table},
      {"2 Hermite (2,2) table at 512 bits", hermite_table},
      {"3 closed-form equalities", closed_forms},
      {"4 Type-I limit identity", type_i_identity},
      {"5 X2 Jacobi constant", x2_constant},
      {"6 electrostatic identities", electrostatics},
      {"7 structural properties", structure},
      {"8 X2 Jacobi rate", jacobi_rate},
      {"9 ratio asymptotics", dhm},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    if (!c.ok()) ++failed;
    std::printf("%s  %s  (%s)\n", c.ok() ? "PASS" : "FAIL", name.c_str(), c.detail().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
