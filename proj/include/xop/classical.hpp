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

#ifndef XOP_CLASSICAL_HPP
#define XOP_CLASSICAL_HPP

#include <stdexcept>

#include "xop/mpreal.hpp"
#include "xop/poly.hpp"
#include "xop/rational.hpp"

namespace xop {

/// Jacobi polynomial P_n^{(a,b)} from the explicit hypergeometric sum in
/// powers of (x-1)/2. The Gamma ratios become rising factorials,
///   coeff_m = C(n,m)/n! * (a+m+1)_{n-m} * (a+b+n+1)_m,
/// so every rational (a, b) is admissible. The degree drops below n exactly
/// when (a+b+n+1)_n vanishes.
inline RationalPoly jacobi(unsigned n, const Rational& a, const Rational& b) {
  const Rational inv_nfact = Rational(1) / Rational(factorial(n));
  const RationalPoly t{Rational(-1, 2), Rational(1, 2)};  // (x-1)/2
  RationalPoly out;
  for (unsigned m = n + 1; m-- > 0;) {
    const Rational c = Rational(binomial(n, m)) * inv_nfact * pochhammer(a + m + 1, n - m) *
                       pochhammer(a + b + n + 1, m);
    out = out * t + RationalPoly::constant(c);
  }
  return out;
}

/// Laguerre polynomial L_n^{(a)}(x) = sum_j binom(n+a, n-j) (-x)^j / j!,
/// with binom(n+a, n-j) = (a+j+1)_{n-j} / (n-j)!.
inline RationalPoly laguerre(unsigned n, const Rational& a) {
  std::vector<Rational> c(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    Rational v = pochhammer(a + j + 1, n - j) / Rational(factorial(n - j) * factorial(j));
    if (j % 2 == 1) v = -v;
    c[j] = v;
  }
  return RationalPoly(std::move(c));
}

/// Hermite polynomial normalised through the Laguerre relations
///   H_{2k}   = (-4)^k k! L_k^{(-1/2)}(x^2),
///   H_{2k+1} = 2 (-4)^k k! x L_k^{(1/2)}(x^2),
/// which gives the physicists' H_n (leading coefficient 2^n).
inline RationalPoly hermite(unsigned n) {
  const unsigned k = n / 2;
  const bool odd = n % 2 == 1;
  const RationalPoly lag = laguerre(k, odd ? Rational(1, 2) : Rational(-1, 2));
  Integer scale = factorial(k);
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), 2 * k);  // 4^k k!
  if (k % 2 == 1) scale = -scale;
  if (odd) scale *= 2;
  std::vector<Rational> c(n + 1);
  for (unsigned j = 0; j <= k; ++j) c[2 * j + (odd ? 1 : 0)] = lag[j] * Rational(scale);
  return RationalPoly(std::move(c));
}

/// p(-x).
inline RationalPoly reflect(const RationalPoly& p) { return p.reflect(); }

// Three-term recurrences, used as an independent evaluation route and for
// large-degree evaluation without building coefficient lists.

namespace detail {
inline Rational lift(const Rational& q, const Rational&) { return q; }
inline Complex lift(const Rational& q, const Complex& like) { return Complex(q, like.precision()); }
}  // namespace detail

/// L_n^{(a)}(x) by (k+1) L_{k+1} = (2k+1+a-x) L_k - (k+a) L_{k-1}.
template <class T>
T laguerre_value(unsigned n, const Rational& a, const T& x) {
  T prev = detail::lift(Rational(1), x);
  if (n == 0) return prev;
  T cur = detail::lift(a + 1, x) - x;
  for (unsigned k = 1; k < n; ++k) {
    T next = (detail::lift(Rational(2 * k + 1) + a, x) - x) * cur - detail::lift(Rational(k) + a, x) * prev;
    next = next * detail::lift(Rational(1, k + 1), x);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// H_n(x) by H_{k+1} = 2x H_k - 2k H_{k-1}.
template <class T>
T hermite_value(unsigned n, const T& x) {
  T prev = detail::lift(Rational(1), x);
  if (n == 0) return prev;
  T two_x = detail::lift(Rational(2), x) * x;
  T cur = two_x;
  for (unsigned k = 1; k < n; ++k) {
    T next = two_x * cur - detail::lift(Rational(2 * k), x) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// P_n^{(a,b)}(x) by the standard three-term recurrence. Requires the
/// recurrence's leading factor 2k(k+a+b)(2k+a+b-2) to be nonzero for
/// k = 2..n; throws std::domain_error otherwise.
template <class T>
T jacobi_value(unsigned n, const Rational& a, const Rational& b, const T& x) {
  using detail::lift;
  T prev = lift(Rational(1), x);
  if (n == 0) return prev;
  T cur = lift((a + b + 2) / 2, x) * x + lift((a - b) / 2, x);
  for (unsigned k = 2; k <= n; ++k) {
    const Rational s = a + b + 2 * k;
    const Rational lead = Rational(2 * k) * (k + a + b) * (s - 2);
    if (sgn(lead) == 0) throw std::domain_error("Jacobi recurrence degenerates at these parameters");
    const Rational c1 = (s - 1) * s * (s - 2);
    const Rational c0 = (s - 1) * (a * a - b * b);
    const Rational c2 = Rational(2) * (k + a - 1) * (k + b - 1) * s;
    T next = (lift(c1, x) * x + lift(c0, x)) * cur - lift(c2, x) * prev;
    next = next * lift(Rational(1) / lead, x);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace xop

#endif  // XOP_CLASSICAL_HPP
