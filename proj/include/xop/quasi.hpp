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

#ifndef XOP_QUASI_HPP
#define XOP_QUASI_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xop/errors.hpp"
#include "xop/poly.hpp"
#include "xop/rational.hpp"

namespace xop {

enum class CarrierKind { AffineOnePlusX, AffineX, Exponential };

/// The transcendental factor g(x) of a quasi-function term p(x) g(x)^e:
/// (1+x), x, or e^{rate x}.
struct Carrier {
  CarrierKind kind = CarrierKind::AffineOnePlusX;
  Rational rate = 1;  // Exponential only

  static Carrier one_plus_x() { return {CarrierKind::AffineOnePlusX, Rational(1)}; }
  static Carrier x() { return {CarrierKind::AffineX, Rational(1)}; }
  static Carrier exponential(Rational rate = 1) { return {CarrierKind::Exponential, std::move(rate)}; }

  bool is_affine() const { return kind != CarrierKind::Exponential; }

  /// (1+x) or x as a polynomial.
  RationalPoly base() const {
    return kind == CarrierKind::AffineOnePlusX ? RationalPoly{Rational(1), Rational(1)} : x_poly();
  }

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.kind == b.kind && (a.kind != CarrierKind::Exponential || a.rate == b.rate);
  }

  std::string to_string() const {
    switch (kind) {
      case CarrierKind::AffineOnePlusX: return "(1+x)";
      case CarrierKind::AffineX: return "x";
      case CarrierKind::Exponential: return "exp(" + xop::to_string(rate) + "x)";
    }
    return "?";
  }
};

/// Finite sum  sum_e p_e(x) g(x)^e  over one carrier g.
///
/// For the exponential carrier g^e means e^{e * rate * x} and exponents are
/// integers. Terms with equal exponent are merged on insertion; zero terms
/// are dropped.
class QuasiFunction {
 public:
  explicit QuasiFunction(Carrier carrier = Carrier::one_plus_x()) : carrier_(std::move(carrier)) {}

  static QuasiFunction term(Carrier carrier, const Rational& exponent, RationalPoly p) {
    QuasiFunction f(std::move(carrier));
    f.add_term(exponent, std::move(p));
    return f;
  }
  static QuasiFunction polynomial(Carrier carrier, RationalPoly p) {
    return term(std::move(carrier), Rational(0), std::move(p));
  }

  const Carrier& carrier() const { return carrier_; }
  const std::map<Rational, RationalPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Rational& exponent, RationalPoly p) {
    if (carrier_.kind == CarrierKind::Exponential && !is_integer(exponent))
      throw InvalidInput("exponential carrier exponents must be integers");
    if (p.is_zero()) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
      terms_.emplace(exponent, std::move(p));
      return;
    }
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }

  QuasiFunction operator-() const {
    QuasiFunction r(carrier_);
    for (const auto& [e, p] : terms_) r.terms_.emplace(e, -p);
    return r;
  }

  QuasiFunction& operator+=(const QuasiFunction& o) {
    require_same_carrier(o);
    for (const auto& [e, p] : o.terms_) add_term(e, p);
    return *this;
  }
  QuasiFunction& operator-=(const QuasiFunction& o) { return *this += -o; }

  friend QuasiFunction operator+(QuasiFunction a, const QuasiFunction& b) { return a += b; }
  friend QuasiFunction operator-(QuasiFunction a, const QuasiFunction& b) { return a -= b; }

  friend QuasiFunction operator*(const QuasiFunction& a, const QuasiFunction& b) {
    a.require_same_carrier(b);
    QuasiFunction r(a.carrier_);
    for (const auto& [ea, pa] : a.terms_)
      for (const auto& [eb, pb] : b.terms_) r.add_term(ea + eb, pa * pb);
    return r;
  }

  /// Multiplies by g(x)^shift.
  QuasiFunction shifted(const Rational& shift) const {
    QuasiFunction r(carrier_);
    for (const auto& [e, p] : terms_) r.add_term(e + shift, p);
    return r;
  }

  /// Merges terms whose exponents differ by an integer into a single term
  /// at the smallest exponent of the class: p g^e + q g^{e+k} = (p + q g^k) g^e.
  /// Exponential carriers are returned unchanged.
  QuasiFunction collapsed() const {
    if (!carrier_.is_affine() || terms_.size() < 2) return *this;
    // class representative (fractional part) -> list of (exponent, poly)
    std::map<Rational, std::vector<std::pair<Rational, const RationalPoly*>>> classes;
    for (const auto& [e, p] : terms_) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), e.get_num_mpz_t(), e.get_den_mpz_t());
      classes[e - Rational(fl)].emplace_back(e, &p);
    }
    const RationalPoly base = carrier_.base();
    QuasiFunction r(carrier_);
    for (const auto& [frac, members] : classes) {
      const Rational& lowest = members.front().first;  // map order: ascending
      RationalPoly sum;
      RationalPoly power = RationalPoly::constant(Rational(1));
      Rational at = lowest;
      for (const auto& [e, p] : members) {
        while (at < e) {
          power *= base;
          at += 1;
        }
        sum += *p * power;
      }
      r.add_term(lowest, std::move(sum));
    }
    return r;
  }

  friend bool operator==(const QuasiFunction& a, const QuasiFunction& b) {
    if (!(a.carrier_ == b.carrier_)) return false;
    const QuasiFunction ca = a.collapsed();
    const QuasiFunction cb = b.collapsed();
    return ca.terms_ == cb.terms_;
  }

 private:
  void require_same_carrier(const QuasiFunction& o) const {
    if (!(carrier_ == o.carrier_))
      throw CarrierMismatch("carrier mismatch: " + carrier_.to_string() + " vs " + o.carrier_.to_string());
  }

  Carrier carrier_;
  std::map<Rational, RationalPoly> terms_;
};

/// Exact d/dx, term by term:
///   d[p (1+x)^g] = ((1+x) p' + g p) (1+x)^{g-1}
///   d[p x^g]     = (x p' + g p) x^{g-1}
///   d[p e^{c x}] = (p' + c p) e^{c x}
inline QuasiFunction quasi_derivative(const QuasiFunction& f) {
  const Carrier& carrier = f.carrier();
  QuasiFunction out(carrier);
  if (carrier.is_affine()) {
    const RationalPoly base = carrier.base();
    for (const auto& [g, p] : f.terms()) {
      RationalPoly next = base * p.derivative();
      if (sgn(g) != 0) next += p * g;
      out.add_term(g - 1, std::move(next));
    }
  } else {
    for (const auto& [k, p] : f.terms()) {
      RationalPoly next = p.derivative();
      const Rational c = k * carrier.rate;
      if (sgn(c) != 0) next += p * c;
      out.add_term(k, std::move(next));
    }
  }
  return out;
}

/// Wronskian determinant det[ d^i fs[j] / dx^i ], i, j = 0..r-1.
///
/// Laplace expansion along the last column with every row-subset minor
/// memoised, so the cost is r 2^{r-1} ring products instead of r!. The
/// heaviest column (the last one) is touched only at the final level.
inline QuasiFunction wronskian_det(std::span<const QuasiFunction> fs) {
  if (fs.empty()) return QuasiFunction::polynomial(Carrier::one_plus_x(), RationalPoly::constant(Rational(1)));
  const Carrier carrier = fs.front().carrier();
  for (const auto& f : fs)
    if (!(f.carrier() == carrier))
      throw CarrierMismatch("Wronskian entries must share one carrier: " + carrier.to_string() + " vs " +
                            f.carrier().to_string());
  const std::size_t r = fs.size();
  if (r > 16) throw InvalidInput("Wronskian order too large: " + std::to_string(r));

  // rows[i][j] = i-th derivative of fs[j]
  std::vector<std::vector<QuasiFunction>> rows(r);
  rows[0].assign(fs.begin(), fs.end());
  for (std::size_t i = 1; i < r; ++i) {
    rows[i].reserve(r);
    for (std::size_t j = 0; j < r; ++j) rows[i].push_back(quasi_derivative(rows[i - 1][j]));
  }

  const std::uint32_t full = (std::uint32_t{1} << r) - 1;
  std::vector<std::optional<QuasiFunction>> minor(std::size_t{full} + 1);
  minor[0] = QuasiFunction::polynomial(carrier, RationalPoly::constant(Rational(1)));
  for (std::size_t k = 1; k <= r; ++k) {
    const std::size_t col = k - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
      if (k == r && mask != full) continue;
      QuasiFunction acc(carrier);
      std::size_t position = 0;
      for (std::size_t row = 0; row < r; ++row) {
        const std::uint32_t bit = std::uint32_t{1} << row;
        if ((mask & bit) == 0) continue;
        const auto& sub = minor[mask & ~bit];
        if (sub && !sub->is_zero() && !rows[row][col].is_zero()) {
          QuasiFunction term = rows[row][col] * *sub;
          if ((position + col) % 2 == 0) acc += term;
          else acc -= term;
        }
        ++position;
      }
      minor[mask] = acc.collapsed();
    }
    // minors of size k-1 are no longer needed
    if (k >= 2)
      for (std::uint32_t mask = 1; mask <= full; ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == k - 1) minor[mask].reset();
  }
  return *minor[full];
}

inline QuasiFunction wronskian_det(std::initializer_list<QuasiFunction> fs) {
  return wronskian_det(std::span<const QuasiFunction>(fs.begin(), fs.size()));
}

/// Multiplies f by g^prefactor and returns the result as a plain polynomial.
/// Throws NonPolynomialError if any carrier factor survives, including a
/// negative integer power of an affine base that does not divide exactly.
inline RationalPoly extract_polynomial(const QuasiFunction& f, const Rational& prefactor_exponent) {
  const QuasiFunction g = f.shifted(prefactor_exponent).collapsed();
  if (g.is_zero()) return {};
  const Carrier& carrier = g.carrier();
  if (!carrier.is_affine()) {
    for (const auto& [k, p] : g.terms())
      if (sgn(k) != 0)
        throw NonPolynomialError("non-polynomial result: residual factor " + carrier.to_string() + "^" +
                                 to_string(k));
    return g.terms().begin()->second;
  }
  if (g.terms().size() != 1)
    throw NonPolynomialError("non-polynomial result: carrier exponents in distinct classes");
  const auto& [e, p] = *g.terms().begin();
  if (!is_integer(e))
    throw NonPolynomialError("non-polynomial result: residual factor " + carrier.to_string() + "^" + to_string(e));
  const long k = e.get_num().get_si();
  RationalPoly power = RationalPoly::constant(Rational(1));
  for (long i = 0; i < (k < 0 ? -k : k); ++i) power *= carrier.base();
  if (k >= 0) return p * power;
  auto [quotient, remainder] = divmod(p, power);
  if (!remainder.is_zero())
    throw NonPolynomialError("non-polynomial result: " + carrier.to_string() + "^" + std::to_string(-k) +
                             " does not divide the collapsed numerator");
  return quotient;
}

}  // namespace xop

#endif  // XOP_QUASI_HPP
