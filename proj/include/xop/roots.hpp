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

#ifndef XOP_ROOTS_HPP
#define XOP_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "xop/errors.hpp"
#include "xop/family.hpp"
#include "xop/mpreal.hpp"
#include "xop/poly.hpp"

namespace xop {

/// Thrown when Aberth iteration fails at the largest allowed precision.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, std::vector<Complex> partial)
      : Error(what), partial_(std::move(partial)) {}
  const std::vector<Complex>& partial_roots() const { return partial_; }

 private:
  std::vector<Complex> partial_;
};

struct RootOptions {
  int max_aberth_iters = 200;
  /// Working precision is never raised above this.
  Precision max_precision = 8192;
  /// Classification tolerance 2^{-bits} used by the analysis layer; 0 means prec/2.
  long classification_bits = 0;
};

struct RootResult {
  std::vector<Complex> roots;
  /// Per-root a-posteriori error estimate (|p| + rounding noise) / |p'|.
  std::vector<Real> errors;
  bool suspected_multiple = false;
  Precision working_precision = 0;
  int sweeps = 0;
};

namespace detail {

/// Positive root of |c_d| x^d = sum_{i<d} |c_i| x^i, found by bisection at
/// 64 bits between 0 and twice the Fujiwara bound.
inline Real cauchy_bound(const std::vector<Real>& mag) {
  const Precision lp = 64;
  const std::size_t d = mag.size() - 1;
  Real fuj(lp);
  for (std::size_t i = 0; i < d; ++i) {
    if (mag[i].is_zero()) continue;
    Real ratio = mag[i] / mag[d];
    if (i == 0) ratio /= Real(2L, lp);
    Real root = pow(ratio, Real(1L, lp) / Real(static_cast<long>(d - i), lp));
    fuj = max(fuj, root);
  }
  fuj *= Real(2L, lp);
  if (fuj.is_zero()) return Real(1L, lp);
  // h(x) = sum_{i<d} |c_i/c_d| x^{i-d} - 1 is decreasing on (0, inf).
  auto h = [&](const Real& x) {
    const Real inv = Real(1L, lp) / x;
    Real acc(lp);
    for (std::size_t i = 0; i < d; ++i) acc = (acc + mag[i] / mag[d]) * inv;
    return acc - Real(1L, lp);
  };
  Real lo(lp);
  Real hi = fuj * Real(2L, lp);
  for (int it = 0; it < 80; ++it) {
    Real mid = (lo + hi) / Real(2L, lp);
    if (mid.is_zero()) break;
    if (h(mid).sign() > 0) lo = mid;
    else hi = mid;
  }
  return hi;
}

/// Starting points: one circle per edge of the upper convex hull of
/// (k, log|c_k|), with radius (|c_i|/|c_j|)^{1/(j-i)} and as many points as
/// the edge is long; radii are capped at the Cauchy bound. The k-th point
/// overall sits at angle 0.4 + k * golden angle. Returns the d real parts followed by the d imaginary parts.
inline std::vector<Real> initial_points(const std::vector<Real>& mag, const Real& cauchy, Precision wprec) {
  const std::size_t d = mag.size() - 1;
  std::vector<double> lg(d + 1, -INFINITY);
  for (std::size_t k = 0; k <= d; ++k)
    if (!mag[k].is_zero()) lg[k] = log2(mag[k]).to_double();
  std::vector<std::size_t> hull;
  for (std::size_t k = 0; k <= d; ++k) {
    if (std::isinf(lg[k])) continue;
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      // drop b when it lies on or below the segment a-k
      const double cross = (lg[b] - lg[a]) * static_cast<double>(k - a) - (lg[k] - lg[a]) * static_cast<double>(b - a);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(k);
  }
  std::vector<Real> xs, ys;
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  const double cap = log2(cauchy).to_double();
  // Roots at zero (c_0 = ... = c_{k0-1} = 0) start on a tiny circle.
  if (!hull.empty() && hull.front() > 0) {
    lg[0] = lg[hull.front()] - 60.0 * static_cast<double>(hull.front());
    hull.insert(hull.begin(), 0);
  }
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const std::size_t i = hull[e];
    const std::size_t j = hull[e + 1];
    const double lr = std::min(cap, (lg[i] - lg[j]) / static_cast<double>(j - i));
    const Real r = Real(std::exp2(lr - std::floor(lr)), wprec) *
                   Real::pow2(static_cast<long>(std::floor(lr)), wprec);
    for (std::size_t t = i; t < j; ++t) {
      const double theta = 0.4 + golden * static_cast<double>(xs.size());
      xs.push_back(r * Real(std::cos(theta), wprec));
      ys.push_back(r * Real(std::sin(theta), wprec));
    }
  }
  for (auto& y : ys) xs.push_back(std::move(y));
  return xs;
}

/// Aberth-Ehrlich iteration at one working precision. Coefficients are
/// stored as separate real/imaginary arrays; the Aberth sum and its
/// denominator are formed at a small fixed precision since they only enter
/// the step multiplicatively through 1 - N S.
class AberthSolver {
 public:
  AberthSolver(const std::vector<Complex>& coeffs, Precision wprec)
      : d_(coeffs.size() - 1), wprec_(wprec), real_coeffs_(true) {
    cr_.reserve(coeffs.size());
    ci_.reserve(coeffs.size());
    mag_.reserve(coeffs.size());
    for (const auto& c : coeffs) {
      cr_.emplace_back(c.real());
      cr_.back().set_precision(wprec);
      ci_.emplace_back(c.imag());
      ci_.back().set_precision(wprec);
      if (!c.imag().is_zero()) real_coeffs_ = false;
      Real m = abs(c);
      m.set_precision(kLow);
      mag_.push_back(std::move(m));
    }
    noise_factor_ = Real::pow2(-static_cast<long>(wprec), kLow) * Real(static_cast<long>(4 * d_ + 4), kLow);
  }

  std::size_t degree() const { return d_; }
  const std::vector<Real>& magnitudes() const { return mag_; }

  struct Eval {
    Real pr, pi, dr, di;  // p(z), p'(z) at working precision
    Real bound;           // sum |c_k| |z|^k at low precision
  };

  void evaluate(const Real& x, const Real& y, Eval& e) {
    mpfr_set(e.pr.get(), cr_[d_].get(), MPFR_RNDN);
    mpfr_set(e.pi.get(), ci_[d_].get(), MPFR_RNDN);
    mpfr_set_zero(e.dr.get(), 1);
    mpfr_set_zero(e.di.get(), 1);
    Real az = hypot(Real(x).rounded(kLow), Real(y).rounded(kLow));
    mpfr_set(e.bound.get(), mag_[d_].get(), MPFR_RNDN);
    for (std::size_t k = d_; k-- > 0;) {
      // p' <- p' z + p
      mpfr_mul(t1_.get(), e.dr.get(), x.get(), MPFR_RNDN);
      mpfr_mul(t2_.get(), e.di.get(), y.get(), MPFR_RNDN);
      mpfr_sub(t1_.get(), t1_.get(), t2_.get(), MPFR_RNDN);
      mpfr_mul(t2_.get(), e.dr.get(), y.get(), MPFR_RNDN);
      mpfr_mul(t3_.get(), e.di.get(), x.get(), MPFR_RNDN);
      mpfr_add(t2_.get(), t2_.get(), t3_.get(), MPFR_RNDN);
      mpfr_add(e.dr.get(), t1_.get(), e.pr.get(), MPFR_RNDN);
      mpfr_add(e.di.get(), t2_.get(), e.pi.get(), MPFR_RNDN);
      // p <- p z + c_k
      mpfr_mul(t1_.get(), e.pr.get(), x.get(), MPFR_RNDN);
      mpfr_mul(t2_.get(), e.pi.get(), y.get(), MPFR_RNDN);
      mpfr_sub(t1_.get(), t1_.get(), t2_.get(), MPFR_RNDN);
      mpfr_mul(t2_.get(), e.pr.get(), y.get(), MPFR_RNDN);
      mpfr_mul(t3_.get(), e.pi.get(), x.get(), MPFR_RNDN);
      mpfr_add(t2_.get(), t2_.get(), t3_.get(), MPFR_RNDN);
      mpfr_add(e.pr.get(), t1_.get(), cr_[k].get(), MPFR_RNDN);
      if (real_coeffs_) mpfr_swap(e.pi.get(), t2_.get());
      else mpfr_add(e.pi.get(), t2_.get(), ci_[k].get(), MPFR_RNDN);
      mpfr_mul(e.bound.get(), e.bound.get(), az.get(), MPFR_RNDN);
      mpfr_add(e.bound.get(), e.bound.get(), mag_[k].get(), MPFR_RNDN);
    }
  }

  Eval make_eval() const { return Eval{Real(wprec_), Real(wprec_), Real(wprec_), Real(wprec_), Real(kLow)}; }

  /// Rounding-noise level of a Horner evaluation with the given bound.
  Real noise(const Real& bound) const { return bound * noise_factor_; }

  /// Runs Gauss-Seidel Aberth sweeps until every root is frozen or the cap
  /// is reached; returns the number of sweeps, or -1 on the cap.
  int iterate(std::vector<Real>& xs, std::vector<Real>& ys, int max_sweeps) {
    const std::size_t n = xs.size();
    std::vector<Real> lx, ly;
    for (std::size_t i = 0; i < n; ++i) {
      lx.push_back(xs[i].rounded(kLow));
      ly.push_back(ys[i].rounded(kLow));
    }
    std::vector<char> frozen(n, 0);
    Eval e = make_eval();
    Real nr(wprec_), ni(wprec_), den(wprec_), wr(wprec_), wi(wprec_);
    Real sr(kLow), si(kLow), dx(kLow), dy(kLow), q(kLow), lnr(kLow), lni(kLow), dr(kLow), di(kLow), dd(kLow);
    Real pabs(kLow), step(kLow), zabs(kLow);
    const Real one(1L, kLow);
    const Real tiny = Real::pow2(-static_cast<long>(wprec_) + 4, kLow);
    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
      std::size_t active = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (frozen[i]) continue;
        ++active;
        evaluate(xs[i], ys[i], e);
        pabs = hypot(e.pr.rounded(kLow), e.pi.rounded(kLow));
        if (pabs <= noise(e.bound)) {
          frozen[i] = 1;
          continue;
        }
        // N = p / p'
        mpfr_mul(den.get(), e.dr.get(), e.dr.get(), MPFR_RNDN);
        mpfr_fma(den.get(), e.di.get(), e.di.get(), den.get(), MPFR_RNDN);
        if (mpfr_zero_p(den.get())) {
          // Stationary point: nudge deterministically.
          zabs = hypot(lx[i], ly[i]);
          mpfr_add_d(xs[i].get(), xs[i].get(), 1e-3 * (1.0 + zabs.to_double()), MPFR_RNDN);
          lx[i] = xs[i].rounded(kLow);
          continue;
        }
        mpfr_fmma(nr.get(), e.pr.get(), e.dr.get(), e.pi.get(), e.di.get(), MPFR_RNDN);
        mpfr_fmms(ni.get(), e.pi.get(), e.dr.get(), e.pr.get(), e.di.get(), MPFR_RNDN);
        mpfr_div(nr.get(), nr.get(), den.get(), MPFR_RNDN);
        mpfr_div(ni.get(), ni.get(), den.get(), MPFR_RNDN);
        // S = sum_{j != i} 1 / (z_i - z_j)
        mpfr_set_zero(sr.get(), 1);
        mpfr_set_zero(si.get(), 1);
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          mpfr_sub(dx.get(), lx[i].get(), lx[j].get(), MPFR_RNDN);
          mpfr_sub(dy.get(), ly[i].get(), ly[j].get(), MPFR_RNDN);
          mpfr_sqr(q.get(), dx.get(), MPFR_RNDN);
          mpfr_fma(q.get(), dy.get(), dy.get(), q.get(), MPFR_RNDN);
          if (mpfr_zero_p(q.get())) continue;
          mpfr_ui_div(q.get(), 1, q.get(), MPFR_RNDN);
          mpfr_fma(sr.get(), dx.get(), q.get(), sr.get(), MPFR_RNDN);
          mpfr_fms(si.get(), dy.get(), q.get(), si.get(), MPFR_RNDN);
          mpfr_neg(si.get(), si.get(), MPFR_RNDN);
        }
        // D = 1 - N S at low precision, w = N / D.
        lnr = nr.rounded(kLow);
        lni = ni.rounded(kLow);
        mpfr_fmms(dr.get(), lnr.get(), sr.get(), lni.get(), si.get(), MPFR_RNDN);
        mpfr_fmma(di.get(), lnr.get(), si.get(), lni.get(), sr.get(), MPFR_RNDN);
        mpfr_ui_sub(dr.get(), 1, dr.get(), MPFR_RNDN);
        mpfr_neg(di.get(), di.get(), MPFR_RNDN);
        mpfr_sqr(dd.get(), dr.get(), MPFR_RNDN);
        mpfr_fma(dd.get(), di.get(), di.get(), dd.get(), MPFR_RNDN);
        if (mpfr_zero_p(dd.get())) {
          wr = nr;
          wi = ni;
        } else {
          // w = N conj(D) / |D|^2
          mpfr_fmma(wr.get(), nr.get(), dr.get(), ni.get(), di.get(), MPFR_RNDN);
          mpfr_fmms(wi.get(), ni.get(), dr.get(), nr.get(), di.get(), MPFR_RNDN);
          mpfr_div(wr.get(), wr.get(), dd.get(), MPFR_RNDN);
          mpfr_div(wi.get(), wi.get(), dd.get(), MPFR_RNDN);
        }
        mpfr_sub(xs[i].get(), xs[i].get(), wr.get(), MPFR_RNDN);
        mpfr_sub(ys[i].get(), ys[i].get(), wi.get(), MPFR_RNDN);
        lx[i] = xs[i].rounded(kLow);
        ly[i] = ys[i].rounded(kLow);
        step = hypot(wr.rounded(kLow), wi.rounded(kLow));
        zabs = hypot(lx[i], ly[i]);
        if (step <= tiny * max(one, zabs)) frozen[i] = 1;
      }
      if (active == 0) return sweep;
    }
    return -1;
  }

 private:
  static constexpr Precision kLow = 128;

  std::size_t d_;
  Precision wprec_;
  bool real_coeffs_;
  std::vector<Real> cr_, ci_, mag_;
  Real noise_factor_{kLow};
  Real t1_{wprec_}, t2_{wprec_}, t3_{wprec_};
};

}  // namespace detail

/// All complex roots of p by Aberth-Ehrlich iteration.
///
/// `coeffs_at(P)` must return the coefficients c_0..c_d rounded to P bits,
/// so that exact inputs can be re-rounded when the working precision is
/// raised. Each root z is returned with an error estimate
/// e = (|p(z)| + noise) / |p'(z)|; iteration restarts at a higher precision
/// until e < 2^{-(prec-32)} max(1,|z|) for every root and no two roots are
/// closer than 2^{-prec/4} max(1,|z|), or max_precision is reached.
inline RootResult all_roots(const std::function<std::vector<Complex>(Precision)>& coeffs_at, Precision prec,
                            const RootOptions& opts = {}) {
  prec = std::max(prec, kMinPrecision);
  std::vector<Complex> c = coeffs_at(prec + 64);
  if (c.size() < 2 || c.back().is_zero()) throw InvalidInput("all_roots needs a polynomial of degree >= 1");
  const std::size_t d = c.size() - 1;

  Precision wprec = prec + 64;
  detail::AberthSolver first(c, wprec);
  const Real radius = detail::cauchy_bound(first.magnitudes());

  const std::vector<Real> starts = detail::initial_points(first.magnitudes(), radius, wprec);
  std::vector<Real> xs(starts.begin(), starts.begin() + static_cast<long>(d));
  std::vector<Real> ys(starts.begin() + static_cast<long>(d), starts.end());

  RootResult out;
  for (int stage = 0;; ++stage) {
    detail::AberthSolver solver(stage == 0 ? c : coeffs_at(wprec), wprec);
    for (std::size_t i = 0; i < d; ++i) {
      xs[i].set_precision(wprec);
      ys[i].set_precision(wprec);
    }
    const int sweeps = solver.iterate(xs, ys, opts.max_aberth_iters);
    out.sweeps += sweeps < 0 ? opts.max_aberth_iters : sweeps;

    // Newton polish and a-posteriori estimates.
    auto e = solver.make_eval();
    std::vector<Real> err(d, Real(64));
    Real worst_ratio(1L, 64);
    bool all_ok = sweeps >= 0;
    for (std::size_t i = 0; i < d; ++i) {
      solver.evaluate(xs[i], ys[i], e);
      const Complex p(e.pr, e.pi);
      const Complex dp(e.dr, e.di);
      const Real dabs = abs(dp).rounded(64);
      const Real zabs = hypot(xs[i].rounded(64), ys[i].rounded(64));
      const Real target = Real::pow2(-static_cast<long>(prec) + 32, 64) * max(Real(1L, 64), zabs);
      if (dabs.is_zero()) {
        err[i] = Real(1L, 64);
        all_ok = false;
        continue;
      }
      const Complex step = p / dp;
      xs[i] -= step.real();
      ys[i] -= step.imag();
      err[i] = (abs(p).rounded(64) + solver.noise(e.bound)) / dabs;
      if (!(err[i] < target)) {
        all_ok = false;
        worst_ratio = max(worst_ratio, err[i] / target);
      }
    }

    // Cluster suspicion.
    bool cluster = false;
    const Real sep = Real::pow2(-static_cast<long>(prec / 4), 64);
    for (std::size_t i = 0; i < d && !cluster; ++i) {
      const Real zi = hypot(xs[i].rounded(64), ys[i].rounded(64));
      for (std::size_t j = i + 1; j < d; ++j) {
        const Real dist = hypot((xs[i] - xs[j]).rounded(64), (ys[i] - ys[j]).rounded(64));
        if (dist < sep * max(Real(1L, 64), zi)) {
          cluster = true;
          break;
        }
      }
    }

    if ((all_ok && !cluster) || wprec >= opts.max_precision) {
      out.roots.clear();
      for (std::size_t i = 0; i < d; ++i) out.roots.emplace_back(xs[i], ys[i]);
      out.errors = std::move(err);
      out.suspected_multiple = cluster;
      out.working_precision = wprec;
      if (!all_ok && !cluster)
        throw NonConvergenceError("root finder did not converge at " + std::to_string(wprec) + " bits", out.roots);
      return out;
    }
    // Jump by the observed shortfall plus a margin, at least doubling the guard.
    const long extra = std::max<long>(64, static_cast<long>(std::ceil(log2(worst_ratio).to_double())) + 48);
    wprec = std::min<Precision>(opts.max_precision, wprec + std::max<long>(extra, cluster ? static_cast<long>(wprec) : 0));
  }
}

inline RootResult all_roots(const RationalPoly& p, Precision prec, const RootOptions& opts = {}) {
  if (p.degree() < 1) throw InvalidInput("all_roots needs a polynomial of degree >= 1");
  return all_roots([&](Precision wp) {
    std::vector<Complex> c;
    for (const auto& q : p.coefficients()) c.emplace_back(q, wp);
    return c;
  }, prec, opts);
}

inline RootResult all_roots(const ComplexPoly& p, Precision prec, const RootOptions& opts = {}) {
  if (p.degree() < 1) throw InvalidInput("all_roots needs a polynomial of degree >= 1");
  return all_roots([&](Precision wp) {
    std::vector<Complex> c(p.coefficients().begin(), p.coefficients().end());
    for (auto& z : c) z.set_precision(wp);
    return c;
  }, prec, opts);
}

/// Regular zeros lie in the open support (real, sorted ascending); the rest
/// are exceptional.
struct ZeroSet {
  Support support = Support::RealLine;
  std::vector<Complex> regular;
  std::vector<Complex> exceptional;
  bool certified_simple = false;
  Real residual_bound{64};
};

/// Default classification tolerance 2^{-prec/2}.
inline Real default_classification_tol(Precision prec) { return Real::pow2(-static_cast<long>(prec / 2), 64); }

inline Real classification_tol(Precision prec, const RootOptions& opts) {
  return opts.classification_bits > 0 ? Real::pow2(-opts.classification_bits, 64) : default_classification_tol(prec);
}

/// Membership test against the support, with |Im z| <= tol max(1,|z|) and
/// the support's endpoints inflated by the same amount.
inline bool in_open_support(const Complex& z, Support support, const Real& tol) {
  const Real scale = max(Real(1L, 64), abs(z).rounded(64));
  const Real slack = tol * scale;
  if (abs(z.imag()) > slack) return false;
  const Real& x = z.real();
  switch (support) {
    case Support::Interval: return x > Real(-1L, 64) - slack && x < Real(1L, 64) + slack;
    case Support::HalfLine: return x > -slack;
    case Support::RealLine: return true;
  }
  return false;
}

inline ZeroSet classify_zeros(const std::vector<Complex>& roots, Support support, const Real& tol) {
  ZeroSet zs;
  zs.support = support;
  for (const auto& z : roots) {
    if (in_open_support(z, support, tol)) zs.regular.push_back(z);
    else zs.exceptional.push_back(z);
  }
  std::sort(zs.regular.begin(), zs.regular.end(), [](const Complex& a, const Complex& b) { return a.real() < b.real(); });
  // Simplicity is numerical: no two zeros within tol of each other.
  zs.certified_simple = true;
  for (std::size_t i = 0; i < roots.size() && zs.certified_simple; ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (abs(roots[i] - roots[j]).rounded(64) <= tol * max(Real(1L, 64), abs(roots[i]).rounded(64))) {
        zs.certified_simple = false;
        break;
      }
  return zs;
}

inline ZeroSet classify_zeros(const RootResult& r, Support support, const Real& tol) {
  ZeroSet zs = classify_zeros(r.roots, support, tol);
  zs.certified_simple = zs.certified_simple && !r.suspected_multiple;
  for (const auto& e : r.errors) zs.residual_bound = max(zs.residual_bound, e);
  return zs;
}

struct LimitPair {
  int k = 0;  // 1-based index into the limit list
  Complex zero;
  Complex limit;
  Real distance{64};
};

struct LimitAssignment {
  std::vector<LimitPair> pairs;  // ordered by k
  bool ambiguous = false;
  double total_cost = 0;
};

/// Minimum-total-distance injective assignment of zeros to limit points:
/// exhaustive over permutations up to 8 points, greedy by distance beyond.
/// The result is flagged ambiguous when a different assignment costs the
/// same up to a relative 1e-9.
inline LimitAssignment match_to_limits(const std::vector<Complex>& zeros, const std::vector<Complex>& limits) {
  if (zeros.size() != limits.size())
    throw MatchingError("cannot match " + std::to_string(zeros.size()) + " zeros to " +
                        std::to_string(limits.size()) + " limit points");
  const std::size_t m = zeros.size();
  std::vector<std::vector<double>> cost(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) cost[i][j] = abs(zeros[i] - limits[j]).to_double();

  std::vector<std::size_t> best(m);  // best[j] = zero index for limit j
  LimitAssignment out;
  if (m <= 8) {
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    double best_cost = INFINITY;
    double second = INFINITY;
    do {
      double c = 0;
      for (std::size_t j = 0; j < m; ++j) c += cost[perm[j]][j];
      if (c < best_cost) {
        second = best_cost;
        best_cost = c;
        best = perm;
      } else if (c < second) {
        second = c;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.total_cost = m == 0 ? 0 : best_cost;
    out.ambiguous = m > 1 && second - best_cost <= 1e-9 * std::max(1.0, best_cost);
  } else {
    std::vector<std::tuple<double, std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) edges.emplace_back(cost[i][j], i, j);
    std::sort(edges.begin(), edges.end());
    std::vector<char> zi(m, 0), lj(m, 0);
    for (const auto& [c, i, j] : edges) {
      if (zi[i] || lj[j]) continue;
      zi[i] = lj[j] = 1;
      best[j] = i;
      out.total_cost += c;
    }
  }
  for (std::size_t j = 0; j < m; ++j)
    out.pairs.push_back({static_cast<int>(j + 1), zeros[best[j]], limits[j], abs(zeros[best[j]] - limits[j]).rounded(64)});
  return out;
}

/// Number of intervals (outer_i, outer_{i+1}) containing at least one
/// element of inner. Both lists sorted ascending.
inline int interlacing_count(const std::vector<Real>& inner, const std::vector<Real>& outer) {
  int count = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i + 1 < outer.size(); ++i) {
    while (k < inner.size() && !(inner[k] > outer[i])) ++k;
    if (k < inner.size() && inner[k] < outer[i + 1]) ++count;
  }
  return count;
}

}  // namespace xop

#endif  // XOP_ROOTS_HPP
