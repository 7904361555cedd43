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

#ifndef XOP_POLY_HPP
#define XOP_POLY_HPP

#include <algorithm>
#include <concepts>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xop/mpreal.hpp"
#include "xop/rational.hpp"

namespace xop {

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool is_zero(const Rational& q) { return sgn(q) == 0; }
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational from_int(long v, const Rational&) { return Rational(v); }
};

template <>
struct ScalarTraits<Complex> {
  static bool is_zero(const Complex& z) { return z.is_zero(); }
  static Complex zero_like(const Complex& z) { return Complex(z.precision()); }
  static Complex from_int(long v, const Complex& like) { return Complex(Real(v, like.precision())); }
};

/// The two coefficient domains a DensePoly may live in. Mixing domains in
/// one arithmetic expression does not compile.
template <class S>
concept PolyScalar = std::same_as<S, Rational> || std::same_as<S, Complex>;

/// Dense univariate polynomial c_0 + c_1 x + ... + c_d x^d.
///
/// The coefficient list never carries a zero leading entry; the zero
/// polynomial is the empty list and has degree -1.
template <PolyScalar S>
class DensePoly {
  using Traits = ScalarTraits<S>;

 public:
  using Scalar = S;

  DensePoly() = default;
  explicit DensePoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

  static DensePoly constant(S c) { return DensePoly(std::vector<S>{std::move(c)}); }

  /// c * x^k.
  static DensePoly monomial(const S& c, std::size_t k) {
    std::vector<S> v(k + 1, Traits::zero_like(c));
    v[k] = c;
    return DensePoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::span<const S> coefficients() const { return c_; }
  const S& operator[](std::size_t i) const { return c_[i]; }
  const S& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  DensePoly operator-() const {
    DensePoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  DensePoly& operator+=(const DensePoly& o) { return add(o, false); }
  DensePoly& operator-=(const DensePoly& o) { return add(o, true); }
  DensePoly& operator*=(const DensePoly& o) {
    *this = *this * o;
    return *this;
  }
  DensePoly& operator*=(const S& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const S& s) { return a *= s; }
  friend DensePoly operator*(const S& s, DensePoly a) { return a *= s; }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> out(a.c_.size() + b.c_.size() - 1, Traits::zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(out));
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  DensePoly derivative(unsigned order = 1) const {
    DensePoly r(*this);
    for (unsigned k = 0; k < order && !r.c_.empty(); ++k) {
      std::vector<S> d;
      d.reserve(r.c_.size() - 1);
      for (std::size_t i = 1; i < r.c_.size(); ++i)
        d.push_back(r.c_[i] * Traits::from_int(static_cast<long>(i), r.c_[i]));
      r = DensePoly(std::move(d));
    }
    return r;
  }

  /// p(-x).
  DensePoly reflect() const {
    DensePoly r(*this);
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  /// Horner evaluation at a point of the same domain.
  S operator()(const S& x) const {
    if (c_.empty()) return Traits::zero_like(x);
    S acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

 private:
  DensePoly& add(const DensePoly& o, bool subtract) {
    if (o.c_.size() > c_.size()) {
      const S zero = Traits::zero_like(o.c_[0]);
      c_.resize(o.c_.size(), zero);
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      if (subtract) c_[i] -= o.c_[i];
      else c_[i] += o.c_[i];
    }
    trim();
    return *this;
  }

  void trim() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

using RationalPoly = DensePoly<Rational>;
using ComplexPoly = DensePoly<Complex>;

/// The polynomial x over the rationals.
inline RationalPoly x_poly() { return RationalPoly{Rational(0), Rational(1)}; }

/// Quotient and remainder over a field; throws std::domain_error on a zero divisor.
inline std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPoly{}, a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] / b.leading();
    quot[static_cast<std::size_t>(k)] = q;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

/// Exact-rational polynomial rounded to `prec`-bit complex coefficients.
inline ComplexPoly to_complex(const RationalPoly& p, Precision prec) {
  std::vector<Complex> c;
  c.reserve(p.coefficients().size());
  for (const auto& q : p.coefficients()) c.emplace_back(q, prec);
  return ComplexPoly(std::move(c));
}

/// Horner evaluation of an exact polynomial at a multiprecision point,
/// rounding each coefficient to the point's precision.
inline Complex evaluate(const RationalPoly& p, const Complex& z) {
  const Precision prec = z.precision();
  if (p.is_zero()) return Complex(prec);
  const auto c = p.coefficients();
  Complex acc(c.back(), prec);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc *= z;
    acc.real() += Real(c[i], prec);
  }
  return acc;
}

/// True iff b == s * a for some nonzero rational s, which is stored in
/// `factor` when requested.
inline bool proportional(const RationalPoly& a, const RationalPoly& b, Rational* factor = nullptr) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  const Rational s = b.leading() / a.leading();
  if (a * s != b) return false;
  if (factor != nullptr) *factor = s;
  return true;
}

inline std::ostream& operator<<(std::ostream& os, const RationalPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rational m = abs(c);
    if (m != 1 || i == 0) os << to_string(m);
    if (i >= 1) os << (m != 1 ? "*x" : "x");
    if (i >= 2) os << "^" << i;
  }
  return os;
}

}  // namespace xop

#endif  // XOP_POLY_HPP
