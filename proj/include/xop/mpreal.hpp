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

#ifndef XOP_MPREAL_HPP
#define XOP_MPREAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace xop {

using Precision = mpfr_prec_t;

inline constexpr Precision kMinPrecision = 64;
inline constexpr Precision kDefaultPrecision = 256;

/// Binary multiprecision float with an explicit, per-value precision.
///
/// Binary operations round to the larger of the two operand precisions, so a
/// computation started at P bits stays at P bits unless a wider operand is
/// mixed in. All rounding is to nearest.
class Real {
 public:
  explicit Real(Precision prec = kDefaultPrecision) {
    mpfr_init2(v_, std::max(prec, kMinPrecision));
    mpfr_set_zero(v_, 1);
  }
  Real(long x, Precision prec) : Real(prec) { mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x, Precision prec) : Real(static_cast<long>(x), prec) {}
  Real(double x, Precision prec) : Real(prec) { mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(const mpq_class& q, Precision prec) : Real(prec) {
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const mpz_class& z, Precision prec) : Real(prec) {
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  /// Parses a decimal string such as "-1.0077e0". Throws std::invalid_argument.
  Real(const std::string& s, Precision prec) : Real(prec) {
    char* end = nullptr;
    if (mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN), end == s.c_str() || *end != '\0')
      throw std::invalid_argument("not a decimal number: '" + s + "'");
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    v_[0] = o.v_[0];
    o.v_[0]._mpfr_d = nullptr;
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      if (v_[0]._mpfr_d == nullptr) mpfr_init2(v_, mpfr_get_prec(o.v_));
      else mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    std::swap(v_[0], o.v_[0]);
    return *this;
  }
  ~Real() {
    if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
  }

  Precision precision() const { return mpfr_get_prec(v_); }
  /// Changes the precision in place, rounding the stored value.
  void set_precision(Precision prec) { mpfr_prec_round(v_, std::max(prec, kMinPrecision), MPFR_RNDN); }
  /// Copy rounded to `prec` bits.
  Real rounded(Precision prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool signbit() const { return mpfr_signbit(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Base-2 exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long exponent2() const { return mpfr_get_exp(v_); }

  /// Decimal rendering with `digits` significant digits, trailing zeros trimmed.
  std::string to_string(int digits = 30) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  Real operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) { return apply(mpfr_add, o); }
  Real& operator-=(const Real& o) { return apply(mpfr_sub, o); }
  Real& operator*=(const Real& o) { return apply(mpfr_mul, o); }
  Real& operator/=(const Real& o) { return apply(mpfr_div, o); }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  friend Real abs(Real a) {
    mpfr_abs(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend Real sqrt(Real a) {
    mpfr_sqrt(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend Real log2(Real a) {
    mpfr_log2(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend Real log(Real a) {
    mpfr_log(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend Real exp(Real a) {
    mpfr_exp(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend Real cos(Real a) {
    mpfr_cos(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend Real sin(Real a) {
    mpfr_sin(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.precision(), x.precision()));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend Real pow(Real a, const Real& e) {
    mpfr_pow(a.v_, a.v_, e.v_, MPFR_RNDN);
    return a;
  }
  friend Real hypot(const Real& a, const Real& b) {
    Real r(std::max(a.precision(), b.precision()));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }
  friend Real min(const Real& a, const Real& b) { return b < a ? b : a; }

  /// 2^e at the given precision.
  static Real pow2(long e, Precision prec) {
    Real r(1L, prec);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }
  static Real pi(Precision prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

 private:
  using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  Real& apply(BinaryOp op, const Real& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    op(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  mpfr_t v_;
};

/// Multiprecision complex number; both parts share one precision.
class Complex {
 public:
  explicit Complex(Precision prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) { unify(); }
  Complex(const Real& re) : re_(re), im_(re.precision()) {}
  Complex(double re, double im, Precision prec) : re_(re, prec), im_(im, prec) {}
  Complex(const mpq_class& re, Precision prec) : re_(re, prec), im_(prec) {}

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  Real& real() { return re_; }
  Real& imag() { return im_; }
  Precision precision() const { return re_.precision(); }
  void set_precision(Precision prec) {
    re_.set_precision(prec);
    im_.set_precision(prec);
  }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  Complex operator-() const { return Complex(-re_, -im_); }
  Complex& operator+=(const Complex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re_ *= s;
    im_ *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    // Smith's algorithm keeps intermediates in range for very unequal parts.
    if (abs(o.re_) >= abs(o.im_)) {
      const Real ratio = o.im_ / o.re_;
      const Real den = o.re_ + o.im_ * ratio;
      Real re = (re_ + im_ * ratio) / den;
      im_ = (im_ - re_ * ratio) / den;
      re_ = std::move(re);
    } else {
      const Real ratio = o.re_ / o.im_;
      const Real den = o.re_ * ratio + o.im_;
      Real re = (re_ * ratio + im_) / den;
      im_ = (im_ * ratio - re_) / den;
      re_ = std::move(re);
    }
    return *this;
  }
  Complex& operator/=(const Real& s) {
    re_ /= s;
    im_ /= s;
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& b, Complex a) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  friend Real abs(const Complex& z) { return hypot(z.re_, z.im_); }
  friend Real norm(const Complex& z) { return z.re_ * z.re_ + z.im_ * z.im_; }
  friend Complex conj(const Complex& z) { return Complex(z.re_, -z.im_); }
  friend Real arg(const Complex& z) { return atan2(z.im_, z.re_); }

  /// Principal square root: cut on the negative real axis, Re >= 0, and
  /// the sign of the imaginary part follows the sign bit of Im w (so -0
  /// selects the lower side of the cut).
  friend Complex sqrt(const Complex& w) {
    const Precision prec = w.precision();
    if (w.is_zero()) return Complex(prec);
    const Real m = abs(w);
    const Real two(2L, prec);
    Real re = sqrt((m + w.re_) / two);
    Real im = sqrt((m - w.re_) / two);
    // Recover the smaller part from the larger one to avoid cancellation.
    if (w.re_.sign() >= 0) {
      im = w.im_ / (two * re);
      im = abs(im);
    } else {
      re = abs(w.im_) / (two * im);
    }
    if (w.im_.signbit()) im = -im;
    return Complex(std::move(re), std::move(im));
  }

  /// Principal logarithm, Im in (-pi, pi].
  friend Complex log(const Complex& z) { return Complex(log(abs(z)), arg(z)); }
  friend Complex exp(const Complex& z) {
    const Real m = exp(z.re_);
    return Complex(m * cos(z.im_), m * sin(z.im_));
  }
  /// Principal power w^e = exp(e log w); w = 0 gives 0.
  friend Complex pow(const Complex& w, const Real& e) {
    if (w.is_zero()) return Complex(w.precision());
    Complex l = log(w);
    l *= e;
    return exp(l);
  }

  /// "a+bi" style rendering with `digits` significant digits per part.
  std::string to_string(int digits = 30) const {
    std::string im = im_.to_string(digits);
    if (!im.empty() && im[0] != '-') im = "+" + im;
    return re_.to_string(digits) + im + "i";
  }

 private:
  void unify() {
    const Precision p = std::max(re_.precision(), im_.precision());
    re_.set_precision(p);
    im_.set_precision(p);
  }

  Real re_;
  Real im_;
};

/// Parses "a", "bi", "a+bi", "a-bi" (also "i", "-i"); decimal parts.
inline Complex parse_complex(std::string s, Precision prec) {
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty()) throw std::invalid_argument("empty complex number");
  auto part = [&](const std::string& t) {
    if (t.empty() || t == "+") return Real(1L, prec);
    if (t == "-") return Real(-1L, prec);
    return Real(t, prec);
  };
  if (s.back() != 'i' && s.back() != 'j') return Complex(part(s), Real(prec));
  s.pop_back();
  // Split at the last sign that is not an exponent sign or the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return Complex(Real(prec), part(s));
  return Complex(part(s.substr(0, split)), part(s.substr(split)));
}

}  // namespace xop

#endif  // XOP_MPREAL_HPP
