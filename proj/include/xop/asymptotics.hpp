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

#ifndef XOP_ASYMPTOTICS_HPP
#define XOP_ASYMPTOTICS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "xop/classical.hpp"
#include "xop/construct.hpp"
#include "xop/errors.hpp"
#include "xop/family.hpp"
#include "xop/roots.hpp"

namespace xop {

/// Limit of the scaled gap n^rho (zeta_{k,n} - zeta_{k,inf}) at a limit point.
///
///   Jacobi   sqrt(z-1) sqrt(z+1)   cut [-1,1], positive on (1,inf)
///   Laguerre -sqrt(-z)             cut [0,inf) for z
///   Hermite  z / sqrt(-2 z^2)      cut R for z
///
/// Every sqrt is the principal root. For Jacobi the product of the two
/// principal roots has its cuts on (-inf,1] and (-inf,-1]; on (-inf,-1)
/// both flip sign and the product is continuous, which leaves [-1,1].
/// Points within tol max(1,|z|) of the cut throw BranchCutError.
inline Complex limit_formula(FamilyKind kind, const Complex& zeta, const Real& tol) {
  const Precision prec = zeta.precision();
  const Real slack = tol * max(Real(1L, 64), abs(zeta).rounded(64));
  const bool near_real = abs(zeta.imag()) <= slack;
  const Complex one(Real(1L, prec));
  switch (kind) {
    case FamilyKind::Jacobi:
      if (near_real && abs(zeta.real()) <= Real(1L, 64) + slack)
        throw BranchCutError("Jacobi limit formula: point on the cut [-1,1]");
      return sqrt(zeta - one) * sqrt(zeta + one);
    case FamilyKind::Laguerre:
    case FamilyKind::LaguerreTypeI:
    case FamilyKind::LaguerreTypeIII:
      if (near_real && zeta.real() >= -slack) throw BranchCutError("Laguerre limit formula: point on the cut [0,inf)");
      return -sqrt(-zeta);
    case FamilyKind::Hermite: {
      if (near_real) throw BranchCutError("Hermite limit formula: point on the real line");
      const Complex w = Complex(Real(-2L, prec)) * zeta * zeta;
      return zeta / sqrt(w);
    }
  }
  throw InvalidInput("unknown family");
}

inline Complex limit_formula(FamilyKind kind, const Complex& zeta) {
  return limit_formula(kind, zeta, default_classification_tol(zeta.precision()));
}

/// Zeros of the generalized polynomial, sorted by real part then imaginary
/// part, with flags for simplicity and for avoiding the support.
struct LimitPoints {
  std::vector<Complex> points;
  bool simple = true;
  bool support_free = true;
};

namespace detail {
inline void sort_points(std::vector<Complex>& v, const Real& tol) {
  std::sort(v.begin(), v.end(), [&](const Complex& a, const Complex& b) {
    if (abs(a.real() - b.real()).rounded(64) > tol) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}
}  // namespace detail

inline LimitPoints limit_points(const FamilySpec& spec, Precision prec, const RootOptions& opts = {}) {
  const RationalPoly omega = generalized_polynomial(spec);
  LimitPoints out;
  if (omega.degree() < 1) return out;
  const RootResult r = all_roots(omega, prec, opts);
  const Real tol = classification_tol(prec, opts);
  const ZeroSet zs = classify_zeros(r, support_of(spec), tol);
  out.simple = zs.certified_simple;
  out.support_free = zs.regular.empty();
  out.points = r.roots;
  for (auto& z : out.points) z.set_precision(prec);
  detail::sort_points(out.points, tol);
  return out;
}

/// 1-based index of the limit point nearest to anchor.
inline int select_limit(const std::vector<Complex>& limits, const Complex& anchor) {
  if (limits.empty()) throw InvalidInput("no limit points to select from");
  std::size_t best = 0;
  for (std::size_t i = 1; i < limits.size(); ++i)
    if (abs(limits[i] - anchor) < abs(limits[best] - anchor)) best = i;
  return static_cast<int>(best + 1);
}

/// Everything computed for one degree: the polynomial, its zeros, their
/// classification and the pairing of exceptional zeros with limit points.
struct ZeroAnalysis {
  long n = 0;
  RationalPoly poly;
  RootResult roots;
  ZeroSet zeros;
  std::vector<Complex> limits;
  LimitAssignment assignment;
  /// The exceptional count differs from the number of limit points; every
  /// limit is then paired greedily with its nearest zero of any class.
  bool count_mismatch = false;
};

namespace detail {
inline LimitAssignment nearest_assignment(const std::vector<Complex>& zeros, const std::vector<Complex>& limits) {
  LimitAssignment out;
  std::vector<std::tuple<double, std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < zeros.size(); ++i)
    for (std::size_t j = 0; j < limits.size(); ++j) edges.emplace_back(abs(zeros[i] - limits[j]).to_double(), i, j);
  std::sort(edges.begin(), edges.end());
  std::vector<char> zi(zeros.size(), 0), lj(limits.size(), 0);
  std::vector<std::size_t> pick(limits.size(), zeros.size());
  for (const auto& [c, i, j] : edges) {
    if (zi[i] || lj[j]) continue;
    zi[i] = lj[j] = 1;
    pick[j] = i;
    out.total_cost += c;
  }
  for (std::size_t j = 0; j < limits.size(); ++j) {
    if (pick[j] == zeros.size()) throw MatchingError("fewer zeros than limit points");
    out.pairs.push_back({static_cast<int>(j + 1), zeros[pick[j]], limits[j], abs(zeros[pick[j]] - limits[j]).rounded(64)});
  }
  return out;
}
}  // namespace detail

inline ZeroAnalysis analyze(const FamilySpec& spec, long n, const std::vector<Complex>& limits, Precision prec,
                            const RootOptions& opts = {}) {
  ZeroAnalysis a;
  a.n = n;
  a.poly = exceptional_polynomial(spec, n);
  a.limits = limits;
  if (a.poly.degree() < 1) {
    a.zeros.support = support_of(spec);
    return a;
  }
  a.roots = all_roots(a.poly, prec, opts);
  for (auto& z : a.roots.roots) z.set_precision(prec);
  a.zeros = classify_zeros(a.roots, support_of(spec), classification_tol(prec, opts));
  if (a.zeros.exceptional.size() == limits.size()) {
    a.assignment = match_to_limits(a.zeros.exceptional, limits);
  } else {
    a.count_mismatch = true;
    a.assignment = detail::nearest_assignment(a.roots.roots, limits);
  }
  return a;
}

inline ZeroAnalysis analyze(const FamilySpec& spec, long n, Precision prec, const RootOptions& opts = {}) {
  return analyze(spec, n, limit_points(spec, prec, opts).points, prec, opts);
}

struct ConvergenceRow {
  long n = 0;
  bool ok = false;
  Complex zeta;
  Complex scaled_gap;
  /// |scaled_gap - theoretical_limit|.
  Real abs_gap{64};
  bool count_mismatch = false;
  std::string error;
};

struct ConvergenceReport {
  FamilySpec spec;
  int k = 1;
  Rational rho;
  Complex limit_point;
  Complex theoretical_limit;
  std::vector<ConvergenceRow> rows;
  AdmissibilityReport hypotheses;
};

namespace detail {
inline Real scale_factor(const Rational& rho, long n, Precision prec) {
  const Real rn(n, prec);
  return rho == 1 ? rn : sqrt(rn);
}

inline std::vector<long> checked_grid(const FamilySpec& spec, std::vector<long> grid) {
  if (grid.empty()) throw InvalidInput("empty n-grid");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (long n : grid)
    if (!index_set_contains(spec, n)) throw IndexSetError("n = " + std::to_string(n) + " not in index set");
  return grid;
}

inline AdmissibilityReport hypotheses(const FamilySpec& spec, long n, const LimitPoints& lp) {
  AdmissibilityReport rep = check_admissibility(spec, n);
  rep.support_free = lp.support_free;
  rep.limits_simple = lp.simple;
  if (!lp.support_free) rep.messages.push_back("a limit point lies in the support");
  if (!lp.simple) rep.messages.push_back("limit points are not numerically simple");
  return rep;
}
}  // namespace detail

/// s_n = n^rho (zeta_{k,n} - zeta_{k,inf}) along the grid. A failing row is
/// recorded with its error message instead of aborting the study.
inline ConvergenceReport scaled_gap_study(const FamilySpec& spec, int k, std::vector<long> n_grid, Precision prec,
                                          const RootOptions& opts = {}) {
  validate(spec);
  n_grid = detail::checked_grid(spec, std::move(n_grid));
  const LimitPoints lp = limit_points(spec, prec, opts);
  if (k < 1 || static_cast<std::size_t>(k) > lp.points.size())
    throw InvalidInput("limit index " + std::to_string(k) + " out of range");
  ConvergenceReport rep;
  rep.spec = spec;
  rep.k = k;
  rep.rho = rate_exponent(spec);
  rep.limit_point = lp.points[static_cast<std::size_t>(k - 1)];
  rep.theoretical_limit = limit_formula(kind_of(spec), rep.limit_point);
  rep.hypotheses = detail::hypotheses(spec, n_grid.front(), lp);
  for (long n : n_grid) {
    ConvergenceRow row;
    row.n = n;
    try {
      const ZeroAnalysis a = analyze(spec, n, lp.points, prec, opts);
      const LimitPair& p = a.assignment.pairs[static_cast<std::size_t>(k - 1)];
      row.zeta = p.zero;
      row.scaled_gap = (p.zero - p.limit) * detail::scale_factor(rep.rho, n, prec);
      row.abs_gap = abs(row.scaled_gap - rep.theoretical_limit).rounded(64);
      row.count_mismatch = a.count_mismatch;
      row.ok = true;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

namespace detail {
/// Neumaier-compensated sum of 1/(at - z) (times weight) over zs, taken in
/// order of ascending |at - z|. Throws PoleError on a coincidence.
inline Complex reciprocal_sum(const Complex& at, const std::vector<Complex>& zs, const Real& weight) {
  const Precision prec = at.precision();
  const Real guard = Real::pow2(-static_cast<long>(prec) + 8, 64) * max(Real(1L, 64), abs(at).rounded(64));
  std::vector<std::pair<Real, Complex>> terms;
  terms.reserve(zs.size());
  for (const auto& z : zs) {
    const Complex d = at - z;
    const Real dist = abs(d).rounded(64);
    if (d.is_zero() || dist <= guard) throw PoleError("evaluation point coincides with a summed zero");
    terms.emplace_back(dist, Complex(weight) / d);
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Real sr(prec), si(prec), cr(prec), ci(prec);
  auto add = [](Real& s, Real& c, const Real& x) {
    const Real t = s + x;
    if (abs(s) >= abs(x)) c += (s - t) + x;
    else c += (x - t) + s;
    s = t;
  };
  for (const auto& [dist, t] : terms) {
    add(sr, cr, t.real());
    add(si, ci, t.imag());
  }
  return Complex(sr + cr, si + ci);
}

inline std::vector<Complex> all_zeros(const ZeroSet& zs) {
  std::vector<Complex> v = zs.regular;
  v.insert(v.end(), zs.exceptional.begin(), zs.exceptional.end());
  return v;
}

/// All zeros except the one nearest to `at`.
inline std::vector<Complex> others(const ZeroSet& zs, const Complex& at) {
  std::vector<Complex> v = all_zeros(zs);
  if (v.empty()) return v;
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (abs(v[i] - at) < abs(v[best] - at)) best = i;
  v.erase(v.begin() + static_cast<long>(best));
  return v;
}

inline const LimitPair& pair_at(const LimitAssignment& a, int k) {
  for (const auto& p : a.pairs)
    if (p.k == k) return p;
  throw InvalidInput("limit index " + std::to_string(k) + " has no assigned zero");
}

inline std::vector<Complex> limits_of(const LimitAssignment& a) {
  std::vector<Complex> v;
  for (const auto& p : a.pairs) v.push_back(p.limit);
  return v;
}
}  // namespace detail

/// Right-hand side used for the Jacobi identity at zeta_{k,inf}.
///   Stated  (a+r)/(2(1-z)) - (b+r)/(2(1+z)) + 3z/(1-z^2) + sum_{j!=k}
///   Exact   (a+r)/(2(1-z)) - (b+r1-r2)/(2(1+z)) + sum_{j!=k}
/// The two differ by -r2/(1+z) + 3z/(1-z^2), which does not depend on n.
enum class JacobiIdentity { Stated, Exact };

/// LHS - RHS of the family's electrostatic identity. Jacobi and Laguerre
/// (including Type-I) evaluate at zeta_{k,inf}; Type-III and Hermite at
/// zeta_{k,n}. Throws PoleError when the evaluation point hits a summed zero.
inline Complex electrostatic_residual(const FamilySpec& spec, long n, int k, const ZeroSet& zeros,
                                      const LimitAssignment& limits,
                                      JacobiIdentity form = JacobiIdentity::Stated) {
  (void)n;
  const LimitPair& pk = detail::pair_at(limits, k);
  const Precision prec = pk.limit.precision();
  const Real one(1L, prec);
  const Real two(2L, prec);
  std::vector<Complex> other_limits;
  for (const auto& p : limits.pairs)
    if (p.k != k) other_limits.push_back(p.limit);

  switch (kind_of(spec)) {
    case FamilyKind::Jacobi: {
      const auto& s = std::get<JacobiSpec>(spec);
      const Complex& z = pk.limit;
      const Complex c1(one);
      const long r1 = s.lambda.length();
      const long r2 = s.mu.length();
      const Real r(r1 + r2, prec);
      const Complex lhs = detail::reciprocal_sum(z, detail::all_zeros(zeros), one);
      Complex rhs = Complex(Real(s.alpha, prec) + r) / (Complex(two) * (c1 - z));
      if (form == JacobiIdentity::Stated) {
        rhs -= Complex(Real(s.beta, prec) + r) / (Complex(two) * (c1 + z));
        rhs += Complex(Real(3L, prec)) * z / (c1 - z * z);
      } else {
        rhs -= Complex(Real(s.beta + r1 - r2, prec)) / (Complex(two) * (c1 + z));
      }
      rhs += detail::reciprocal_sum(z, other_limits, one);
      return lhs - rhs;
    }
    case FamilyKind::Laguerre:
    case FamilyKind::LaguerreTypeI: {
      const LaguerreSpec s = underlying_laguerre(spec);
      const Complex& z = pk.limit;
      const Real r(static_cast<long>(s.lambda.length() + s.mu.length()), prec);
      const Complex lhs = detail::reciprocal_sum(z, detail::all_zeros(zeros), one);
      Complex rhs(one / two);
      rhs -= Complex(Real(s.alpha, prec) + r) / (Complex(two) * z);
      rhs += detail::reciprocal_sum(z, other_limits, one);
      return lhs - rhs;
    }
    case FamilyKind::LaguerreTypeIII: {
      const auto& s = std::get<LaguerreTypeIIISpec>(spec);
      const Complex& z = pk.zero;
      Complex out = detail::reciprocal_sum(z, detail::others(zeros, z), two);
      out += (Complex(Real(s.alpha + 1, prec)) - z) / z;
      out -= detail::reciprocal_sum(z, detail::limits_of(limits), two);
      return out;
    }
    case FamilyKind::Hermite: {
      const Complex& z = pk.zero;
      Complex out = detail::reciprocal_sum(z, detail::others(zeros, z), two);
      out -= Complex(two) * z;
      out -= detail::reciprocal_sum(z, detail::limits_of(limits), two);
      return out;
    }
  }
  throw InvalidInput("unknown family");
}

struct SumLimitRow {
  long n = 0;
  Complex value;
  Complex target;
  /// 1/s_n for the same n, for the reciprocal-consistency check.
  Complex inverse_gap;
};

/// The normalized reciprocal sums whose limits drive the rate results:
/// Jacobi and Laguerre sum over the regular zeros at zeta_{k,inf}, Type-III
/// and Hermite over all other zeros at zeta_{k,n}. The target is
/// 1 / limit_formula(zeta_{k,inf}).
inline std::vector<SumLimitRow> sum_limit_check(const FamilySpec& spec, int k, std::vector<long> n_grid,
                                                Precision prec, const RootOptions& opts = {}) {
  validate(spec);
  n_grid = detail::checked_grid(spec, std::move(n_grid));
  const LimitPoints lp = limit_points(spec, prec, opts);
  if (k < 1 || static_cast<std::size_t>(k) > lp.points.size())
    throw InvalidInput("limit index " + std::to_string(k) + " out of range");
  const Complex& zinf = lp.points[static_cast<std::size_t>(k - 1)];
  const FamilyKind kind = kind_of(spec);
  const Complex target = Complex(Real(1L, prec)) / limit_formula(kind, zinf);
  const Rational rho = rate_exponent(spec);
  std::vector<SumLimitRow> rows;
  for (long n : n_grid) {
    const ZeroAnalysis a = analyze(spec, n, lp.points, prec, opts);
    const LimitPair& p = detail::pair_at(a.assignment, k);
    const Real scale = detail::scale_factor(rho, n, prec);
    SumLimitRow row;
    row.n = n;
    row.target = target;
    const Real one(1L, prec);
    if (kind == FamilyKind::LaguerreTypeIII || kind == FamilyKind::Hermite)
      row.value = detail::reciprocal_sum(p.zero, detail::others(a.zeros, p.zero), one) / scale;
    else
      row.value = detail::reciprocal_sum(zinf, a.zeros.regular, one) / scale;
    row.inverse_gap = Complex(one) / ((p.zero - p.limit) * scale);
    rows.push_back(std::move(row));
  }
  return rows;
}

struct InterlacingReport {
  int count = 0;
  /// Lower bound the count must reach.
  long bound = 0;
  std::size_t regular = 0;
  std::size_t outer = 0;
};

/// Counts the intervals between consecutive zeros of the comparison
/// polynomial that contain a regular zero: H_n for Hermite (bound n-m-r),
/// L_n^{(alpha+r)} for Laguerre and Type-I (bound n-2|lambda|-2|mu|-r2) and
/// L_{n-m-1}^{(alpha+1)} for Type-III (every interval, n-m-2).
inline InterlacingReport interlacing_check(const FamilySpec& spec, long n, Precision prec,
                                           const RootOptions& opts = {}) {
  validate(spec);
  if (!index_set_contains(spec, n)) throw IndexSetError("n = " + std::to_string(n) + " not in index set");
  RationalPoly outer_poly;
  InterlacingReport rep;
  switch (kind_of(spec)) {
    case FamilyKind::Jacobi: throw InvalidInput("no interlacing bound is available for Jacobi specs");
    case FamilyKind::Hermite: {
      const Partition& l = std::get<HermiteSpec>(spec).lambda;
      outer_poly = hermite(static_cast<unsigned>(n));
      rep.bound = n - l.weight() - l.length();
      break;
    }
    case FamilyKind::LaguerreTypeIII: {
      const auto& t = std::get<LaguerreTypeIIISpec>(spec);
      if (n - t.m - 1 < 2) throw InvalidInput("n too small for the Type-III interlacing check");
      outer_poly = laguerre(static_cast<unsigned>(n - t.m - 1), t.alpha + 1);
      rep.bound = n - t.m - 2;
      break;
    }
    default: {
      const LaguerreSpec l = underlying_laguerre(spec);
      const int r = l.lambda.length() + l.mu.length();
      outer_poly = laguerre(static_cast<unsigned>(n), l.alpha + r);
      rep.bound = n - 2L * l.lambda.weight() - 2L * l.mu.weight() - l.mu.length();
      break;
    }
  }
  const ZeroAnalysis a = analyze(spec, n, {}, prec, opts);
  const RootResult o = all_roots(outer_poly, prec, opts);
  std::vector<Real> inner, outer;
  for (const auto& z : a.zeros.regular) inner.push_back(z.real());
  for (const auto& z : o.roots) outer.push_back(z.real());
  std::sort(outer.begin(), outer.end());
  rep.count = interlacing_count(inner, outer);
  rep.regular = inner.size();
  rep.outer = outer.size();
  return rep;
}

struct RatioRow {
  long n = 0;
  Complex lhs;
  Complex rhs;
  Real error{64};
  /// error / |rhs|, the quantity the O(n^{-1/2}) factor controls.
  Real relative_error{64};
};

/// L_{n+j}^{(alpha)}(z) / L_n^{(beta)}(z) against (-z/n)^{(beta-alpha)/2},
/// both by the three-term recurrence and the principal power.
inline std::vector<RatioRow> ratio_asymptotics_check(const Rational& alpha, const Rational& beta, long j,
                                                     const Complex& z, std::vector<long> n_grid) {
  if (!(alpha > -1 && beta > -1)) throw InvalidInput("ratio check requires alpha, beta > -1");
  const Precision prec = z.precision();
  const Real tol = default_classification_tol(prec);
  if (abs(z.imag()) <= tol * max(Real(1L, 64), abs(z).rounded(64)) && z.real() >= -tol)
    throw BranchCutError("ratio check: z lies on [0,inf)");
  if (n_grid.empty()) throw InvalidInput("empty n-grid");
  std::sort(n_grid.begin(), n_grid.end());
  const Real expo((beta - alpha) / 2, prec);
  std::vector<RatioRow> rows;
  for (long n : n_grid) {
    if (n < 1 || n + j < 0) throw InvalidInput("n and n + j must be nonnegative, n >= 1");
    RatioRow row;
    row.n = n;
    const Complex den = laguerre_value(static_cast<unsigned>(n), beta, z);
    if (den.is_zero()) throw PoleError("L_n^{(beta)} vanishes at z");
    row.lhs = laguerre_value(static_cast<unsigned>(n + j), alpha, z) / den;
    row.rhs = pow(-z / Real(n, prec), expo);
    row.error = abs(row.lhs - row.rhs).rounded(64);
    row.relative_error = row.error / abs(row.rhs).rounded(64);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// (z1 - y1)(z1 - y2) / ((z1 - 1)(z1 - z2)) for the X_2 Jacobi example, with
/// z1, z2 the zeros of P_2^{(-a-1,b-1)} and y1, y2 those of P_2^{(-a-2,b)};
/// one value for each choice of z1. Both should equal 1/(1-a).
inline std::vector<Complex> x2_jacobi_constant(const Rational& a, const Rational& b, Precision prec) {
  const RootResult zr = all_roots(jacobi(2, -a - 1, b - 1), prec);
  const RootResult yr = all_roots(jacobi(2, -a - 2, b), prec);
  const Complex one(Real(1L, prec));
  std::vector<Complex> out;
  for (std::size_t i = 0; i < 2; ++i) {
    const Complex& z1 = zr.roots[i];
    const Complex& z2 = zr.roots[1 - i];
    out.push_back((z1 - yr.roots[0]) * (z1 - yr.roots[1]) / ((z1 - one) * (z1 - z2)));
  }
  return out;
}

}  // namespace xop

#endif  // XOP_ASYMPTOTICS_HPP
