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

#ifndef XOP_CONSTRUCT_HPP
#define XOP_CONSTRUCT_HPP

#include <vector>

#include "xop/classical.hpp"
#include "xop/errors.hpp"
#include "xop/family.hpp"
#include "xop/quasi.hpp"

namespace xop {

namespace detail {

// Wronskian columns f_1..f_r for the Jacobi data.
inline std::vector<QuasiFunction> jacobi_columns(const JacobiSpec& s) {
  const Carrier c = Carrier::one_plus_x();
  const int r1 = s.lambda.length();
  const int r2 = s.mu.length();
  std::vector<QuasiFunction> fs;
  for (int j = 1; j <= r1; ++j)
    fs.push_back(QuasiFunction::polynomial(c, jacobi(static_cast<unsigned>(s.lambda.part(j) + r1 - j), s.alpha, s.beta)));
  for (int j = 1; j <= r2; ++j)
    fs.push_back(
        QuasiFunction::term(c, -s.beta, jacobi(static_cast<unsigned>(s.mu.part(j) + r2 - j), s.alpha, -s.beta)));
  return fs;
}

// Wronskian columns for the Laguerre data; e^x L(-x) lives on the e^x carrier
// with exponent 1, so d/dx acts as (d/dx + 1) on its polynomial part.
inline std::vector<QuasiFunction> laguerre_columns(const LaguerreSpec& s) {
  const Carrier c = Carrier::exponential(1);
  const int r1 = s.lambda.length();
  const int r2 = s.mu.length();
  std::vector<QuasiFunction> fs;
  for (int j = 1; j <= r1; ++j)
    fs.push_back(QuasiFunction::polynomial(c, laguerre(static_cast<unsigned>(s.lambda.part(j) + r1 - j), s.alpha)));
  for (int j = 1; j <= r2; ++j)
    fs.push_back(QuasiFunction::term(c, Rational(1), laguerre(static_cast<unsigned>(s.mu.part(j) + r2 - j), s.alpha).reflect()));
  return fs;
}

// H_{lambda_r}, H_{lambda_{r-1}+1}, ..., H_{lambda_1+r-1}.
inline std::vector<QuasiFunction> hermite_columns(const Partition& lambda) {
  const int r = lambda.length();
  std::vector<QuasiFunction> fs;
  for (int j = 1; j <= r; ++j)
    fs.push_back(QuasiFunction::polynomial(Carrier::one_plus_x(),
                                           hermite(static_cast<unsigned>(lambda.part(r - j + 1) + j - 1))));
  return fs;
}

inline RationalPoly require_degree(RationalPoly p, int expected) {
  if (p.degree() != expected) throw DegreeMismatch(expected, p.degree());
  return p;
}

inline RationalPoly jacobi_generalized(const JacobiSpec& s) {
  const auto fs = jacobi_columns(s);
  const Rational pre = (s.beta + s.lambda.length()) * s.mu.length();
  return require_degree(extract_polynomial(wronskian_det(fs), pre), s.lambda.weight() + s.mu.weight());
}

inline RationalPoly laguerre_generalized(const LaguerreSpec& s) {
  const auto fs = laguerre_columns(s);
  return require_degree(extract_polynomial(wronskian_det(fs), Rational(-s.mu.length())),
                        s.lambda.weight() + s.mu.weight());
}

inline RationalPoly jacobi_exceptional(const JacobiSpec& s, long n) {
  auto fs = jacobi_columns(s);
  const long deg = classical_column_degree(s.lambda, s.mu, n);
  fs.push_back(QuasiFunction::polynomial(Carrier::one_plus_x(), jacobi(static_cast<unsigned>(deg), s.alpha, s.beta)));
  const Rational pre = (s.beta + s.lambda.length() + 1) * s.mu.length();
  return require_degree(extract_polynomial(wronskian_det(fs), pre), static_cast<int>(n));
}

inline RationalPoly laguerre_exceptional(const LaguerreSpec& s, long n) {
  auto fs = laguerre_columns(s);
  const long deg = classical_column_degree(s.lambda, s.mu, n);
  fs.push_back(QuasiFunction::polynomial(Carrier::exponential(1), laguerre(static_cast<unsigned>(deg), s.alpha)));
  return require_degree(extract_polynomial(wronskian_det(fs), Rational(-s.mu.length())), static_cast<int>(n));
}

inline RationalPoly hermite_exceptional(const Partition& lambda, long n) {
  auto fs = hermite_columns(lambda);
  const long deg = n - lambda.weight() + lambda.length();
  fs.push_back(QuasiFunction::polynomial(Carrier::one_plus_x(), hermite(static_cast<unsigned>(deg))));
  return require_degree(extract_polynomial(wronskian_det(fs), Rational(0)), static_cast<int>(n));
}

}  // namespace detail

/// Omega^{(alpha,beta)}_{lambda,mu}, Omega^{(alpha)}_{lambda,mu} or H_lambda.
/// For the Type-I and Type-III specs this is the Omega of the underlying
/// Laguerre data. Throws NonPolynomialError, DegreeMismatch, or InvalidInput
/// when a Jacobi spec fails (C1)-(C3).
inline RationalPoly generalized_polynomial(const FamilySpec& spec) {
  validate(spec);
  if (const auto* j = std::get_if<JacobiSpec>(&spec)) {
    const AdmissibilityReport rep = check_admissibility(spec, next_in_index_set(spec, 0));
    if (!(rep.c1_ok && rep.c2_ok && rep.c3_ok)) throw InvalidInput("Jacobi parameters violate (C1)-(C3)");
    return detail::jacobi_generalized(*j);
  }
  if (const auto* h = std::get_if<HermiteSpec>(&spec)) {
    const auto fs = detail::hermite_columns(h->lambda);
    return detail::require_degree(extract_polynomial(wronskian_det(fs), Rational(0)), h->lambda.weight());
  }
  return detail::laguerre_generalized(underlying_laguerre(spec));
}

/// The exceptional polynomial of degree n. Type-I applies the sign -1 and
/// Type-III the scale -n (with the degree-0 member equal to 1). Throws
/// IndexSetError when n is outside the index set and InvalidInput when the
/// Jacobi admissibility or degree conditions fail.
inline RationalPoly exceptional_polynomial(const FamilySpec& spec, long n) {
  validate(spec);
  if (!index_set_contains(spec, n)) throw IndexSetError("n = " + std::to_string(n) + " not in index set");
  switch (kind_of(spec)) {
    case FamilyKind::Jacobi: {
      const AdmissibilityReport rep = check_admissibility(spec, n);
      if (!rep.construction_ok()) {
        std::string why;
        for (const auto& m : rep.messages) why += "; " + m;
        throw InvalidInput("Jacobi construction conditions fail" + why);
      }
      return detail::jacobi_exceptional(std::get<JacobiSpec>(spec), n);
    }
    case FamilyKind::Laguerre: return detail::laguerre_exceptional(std::get<LaguerreSpec>(spec), n);
    case FamilyKind::LaguerreTypeI: return -detail::laguerre_exceptional(underlying_laguerre(spec), n);
    case FamilyKind::LaguerreTypeIII:
      if (n == 0) return RationalPoly::constant(Rational(1));
      return detail::laguerre_exceptional(underlying_laguerre(spec), n) * Rational(-n);
    case FamilyKind::Hermite: return detail::hermite_exceptional(std::get<HermiteSpec>(spec).lambda, n);
  }
  throw InvalidInput("unknown family");
}

/// y'' + R y' + S y at a point, with the size of the largest of the three
/// terms as the scale a residual should be measured against.
struct OdeResidual {
  Complex residual;
  Real scale;
};

/// Residual of the Type-III or Hermite ODE for an arbitrary polynomial y
/// (normally the exceptional polynomial of degree n). Throws PoleError at
/// a zero of x or L_m^{(-alpha-1)}(-x) (Type-III) or of H_lambda (Hermite),
/// and InvalidInput for other families.
inline OdeResidual ode_residual(const FamilySpec& spec, long n, const RationalPoly& y, const Complex& point) {
  const Precision prec = point.precision();
  const Complex y0 = evaluate(y, point);
  const Complex y1 = evaluate(y.derivative(), point);
  const Complex y2 = evaluate(y.derivative(2), point);
  Complex r(prec);
  Complex s(prec);
  // A pole is declared when the denominator vanishes to working precision
  // relative to the size of its terms.
  auto guard = [&](const RationalPoly& q, const Complex& v) {
    Real size(prec);
    Real zabs = abs(point);
    Real pw(1L, prec);
    for (const auto& c : q.coefficients()) {
      size += abs(Real(c, prec)) * pw;
      pw *= zabs;
    }
    if (v.is_zero() || abs(v) <= size * Real::pow2(-(prec - 8), prec))
      throw PoleError("evaluation point is a pole of the ODE coefficients");
  };
  if (const auto* t3 = std::get_if<LaguerreTypeIIISpec>(&spec)) {
    const RationalPoly q = laguerre(static_cast<unsigned>(t3->m), -t3->alpha - 1).reflect();
    const Complex qv = evaluate(q, point);
    guard(x_poly(), point);
    guard(q, qv);
    const Complex qd = evaluate(q.derivative(), point);
    const Complex a1(t3->alpha + 1, prec);
    r = (a1 - point) / point - Complex(Real(2L, prec)) * qd / qv;
    s = Complex(Rational(n), prec) / point;
  } else if (const auto* h = std::get_if<HermiteSpec>(&spec)) {
    const RationalPoly hl = generalized_polynomial(spec);
    const Complex hv = evaluate(hl, point);
    guard(hl, hv);
    const Complex l1 = evaluate(hl.derivative(), point) / hv;
    const Complex l2 = evaluate(hl.derivative(2), point) / hv;
    const Complex two(Real(2L, prec));
    r = -(two * (point + l1));
    s = l2 + two * point * l1 + Complex(Rational(2 * (n - h->lambda.weight())), prec);
  } else {
    throw InvalidInput("ode_residual is available for Type-III Laguerre and Hermite specs");
  }
  const Complex t1 = r * y1;
  const Complex t2 = s * y0;
  OdeResidual out{y2 + t1 + t2, max(abs(y2), max(abs(t1), abs(t2)))};
  return out;
}

inline OdeResidual ode_residual(const FamilySpec& spec, long n, const Complex& point) {
  return ode_residual(spec, n, exceptional_polynomial(spec, n), point);
}

}  // namespace xop

#endif  // XOP_CONSTRUCT_HPP
