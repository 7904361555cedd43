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

#include <gtest/gtest.h>

#include <random>

#include "xop/xop.hpp"

using namespace xop;

namespace {

RationalPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& q : c) {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  }
  if (sgn(c.back()) == 0) c.back() = 1;
  return RationalPoly(std::move(c));
}

RationalPoly poly(std::initializer_list<Rational> c) { return RationalPoly(c); }

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational q(6, -4);
  q.canonicalize();
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_EQ(Rational(0).get_den(), 1);
}

TEST(Rational, ParseAcceptsOnlyFractions) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_THROW(parse_rational("0.4"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Complex, PrecisionIsSharedAndFloored) {
  const Complex z(Real(1L, 100), Real(2L, 300));
  EXPECT_EQ(z.real().precision(), 300);
  EXPECT_EQ(z.imag().precision(), 300);
  Real r(1L, 200);
  r.set_precision(8);
  EXPECT_EQ(r.precision(), kMinPrecision);
}

TEST(Complex, PrincipalSqrtBranch) {
  const Precision p = 128;
  // Lower side of the cut gives -i, upper side +i.
  const Complex above(Real(-1L, p), Real(0L, p));
  const Complex below(Real(-1L, p), -Real(0L, p));
  EXPECT_EQ(sqrt(above).imag().sign(), 1);
  EXPECT_EQ(sqrt(below).imag().sign(), -1);
  const Complex w = parse_complex("3-4i", p);
  const Complex s = sqrt(w);
  EXPECT_LT(abs(s * s - w).to_double(), 1e-35);
  EXPECT_GT(s.real().sign(), 0);
}

TEST(Complex, LogExpPowRoundTrip) {
  const Precision p = 192;
  const Complex z = parse_complex("-1.5+0.25i", p);
  EXPECT_LT(abs(exp(log(z)) - z).to_double(), 1e-50);
  const Complex half = pow(z, Real(0.5, p));
  EXPECT_LT(abs(half - sqrt(z)).to_double(), 1e-50);
  EXPECT_TRUE(pow(Complex(p), Real(0.5, p)).is_zero());
}

TEST(Complex, ParseForms) {
  const Precision p = 128;
  EXPECT_EQ(parse_complex("i", p), Complex(Real(0L, p), Real(1L, p)));
  EXPECT_EQ(parse_complex("-i", p), Complex(Real(0L, p), Real(-1L, p)));
  EXPECT_EQ(parse_complex("-2", p), Complex(Real(-2L, p)));
  const Complex z = parse_complex("1.5-2i", p);
  EXPECT_EQ(z.real().to_double(), 1.5);
  EXPECT_EQ(z.imag().to_double(), -2.0);
}

TEST(DensePoly, Arithmetic) {
  const RationalPoly x = x_poly();
  const RationalPoly one = RationalPoly::constant(1);
  EXPECT_EQ((x + one) * (x - one), poly({-1, 0, 1}));
  EXPECT_EQ(RationalPoly() + poly({1, 2}), poly({1, 2}));
  EXPECT_TRUE((poly({1, 2}) - poly({1, 2})).is_zero());
  EXPECT_EQ(poly({1, 2}).degree(), 1);
  EXPECT_EQ(RationalPoly().degree(), -1);
}

TEST(DensePoly, LaguerreTwoAtAlphaZeroByHand) {
  // x^2/2 - 2x + 1, doubled.
  const RationalPoly l2 = poly({1, -2, Rational(1, 2)});
  EXPECT_EQ(l2 * Rational(2), poly({2, -4, 1}));
}

TEST(DensePoly, DegreeOfProductProperty) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const RationalPoly a = random_poly(rng, 8);
    const RationalPoly b = random_poly(rng, 8);
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST(DensePoly, DivmodReconstructs) {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const RationalPoly a = random_poly(rng, 9);
    const RationalPoly b = random_poly(rng, 4);
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), std::max(b.degree(), 1));
  }
}

TEST(DensePoly, ProportionalReportsFactor) {
  Rational f;
  EXPECT_TRUE(proportional(poly({1, 2}), poly({3, 6}), &f));
  EXPECT_EQ(f, 3);
  EXPECT_FALSE(proportional(poly({1, 2}), poly({3, 5})));
}

TEST(Quasi, DerivativeExamples) {
  const Rational beta(3, 7);
  const auto c = Carrier::one_plus_x();
  const QuasiFunction f = QuasiFunction::term(c, -beta, RationalPoly::constant(1));
  EXPECT_EQ(quasi_derivative(f), QuasiFunction::term(c, -beta - 1, RationalPoly::constant(-beta)));

  const auto e = Carrier::exponential(1);
  const QuasiFunction g = QuasiFunction::term(e, 1, RationalPoly::constant(1));
  EXPECT_EQ(quasi_derivative(g), g);

  const QuasiFunction h = QuasiFunction::term(c, Rational(1, 2), x_poly());
  EXPECT_EQ(quasi_derivative(h), QuasiFunction::term(c, Rational(-1, 2), poly({1, Rational(3, 2)})));

  const QuasiFunction k = QuasiFunction::term(Carrier::x(), Rational(2), poly({1, 1}));
  // d[(1+x) x^2] = (x + 2(1+x)) x = (2 + 3x) x
  EXPECT_EQ(quasi_derivative(k), QuasiFunction::term(Carrier::x(), Rational(1), poly({2, 3})));
}

TEST(Quasi, DerivativeCommutesWithMerging) {
  std::mt19937 rng(3);
  const auto c = Carrier::one_plus_x();
  for (int t = 0; t < 30; ++t) {
    const QuasiFunction a = QuasiFunction::term(c, Rational(-5, 3), random_poly(rng, 4));
    const QuasiFunction b = QuasiFunction::term(c, Rational(-2, 3), random_poly(rng, 4));
    const QuasiFunction lhs = quasi_derivative(a + b).collapsed();
    const QuasiFunction rhs = (quasi_derivative(a) + quasi_derivative(b)).collapsed();
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Wronskian, SmallCases) {
  const auto c = Carrier::one_plus_x();
  const QuasiFunction f = QuasiFunction::polynomial(c, poly({1, 2, 3}));
  EXPECT_EQ(extract_polynomial(wronskian_det({f}), 0), poly({1, 2, 3}));
  const QuasiFunction one = QuasiFunction::polynomial(c, RationalPoly::constant(1));
  const QuasiFunction x = QuasiFunction::polynomial(c, x_poly());
  EXPECT_EQ(extract_polynomial(wronskian_det({one, x}), 0), RationalPoly::constant(1));
  // Wr[2x, 4x^2 - 2] = 8x^2 + 4
  const QuasiFunction h1 = QuasiFunction::polynomial(c, poly({0, 2}));
  const QuasiFunction h2 = QuasiFunction::polynomial(c, poly({-2, 0, 4}));
  EXPECT_EQ(extract_polynomial(wronskian_det({h1, h2}), 0), poly({4, 0, 8}));
}

TEST(Wronskian, AlternatingProperty) {
  std::mt19937 rng(5);
  const auto c = Carrier::one_plus_x();
  for (int t = 0; t < 10; ++t) {
    std::vector<QuasiFunction> fs;
    for (int i = 0; i < 3; ++i) fs.push_back(QuasiFunction::polynomial(c, random_poly(rng, 5)));
    fs.push_back(QuasiFunction::term(c, Rational(-1, 2), random_poly(rng, 3)));
    const QuasiFunction w = wronskian_det(fs);
    std::swap(fs[0], fs[3]);
    EXPECT_EQ(wronskian_det(fs).collapsed(), (-w).collapsed());
  }
}

TEST(Wronskian, MixedCarriersRejected) {
  const QuasiFunction a = QuasiFunction::polynomial(Carrier::one_plus_x(), x_poly());
  const QuasiFunction b = QuasiFunction::polynomial(Carrier::exponential(1), x_poly());
  EXPECT_THROW(wronskian_det({a, b}), CarrierMismatch);
}

TEST(Extract, CancelsKnownPrefactor) {
  const auto c = Carrier::one_plus_x();
  const Rational beta(5, 2);
  const RationalPoly p = poly({3, -1, 4});
  EXPECT_EQ(extract_polynomial(QuasiFunction::polynomial(c, p), 0), p);
  EXPECT_EQ(extract_polynomial(QuasiFunction::term(c, -beta, p), beta), p);
  EXPECT_THROW(extract_polynomial(QuasiFunction::term(c, -beta, p), 0), NonPolynomialError);
  // (1+x)^{-1} p does not divide unless p(-1) = 0.
  EXPECT_THROW(extract_polynomial(QuasiFunction::term(c, -1, p), 0), NonPolynomialError);
  EXPECT_EQ(extract_polynomial(QuasiFunction::term(c, -1, poly({1, 1})), 0), RationalPoly::constant(1));
}

TEST(Extract, InverseOfTaggingProperty) {
  std::mt19937 rng(13);
  const auto c = Carrier::one_plus_x();
  for (int t = 0; t < 20; ++t) {
    const RationalPoly p = random_poly(rng, 6);
    const Rational g(static_cast<long>(t) - 7, 3);
    EXPECT_EQ(extract_polynomial(QuasiFunction::term(c, -g, p), g), p);
  }
}

TEST(PartitionType, InvariantsAndParsing) {
  const Partition p = Partition::parse("3,3,1,1");
  EXPECT_EQ(p.weight(), 8);
  EXPECT_EQ(p.length(), 4);
  EXPECT_EQ(p.part(1), 3);
  EXPECT_TRUE(p.is_even());
  EXPECT_FALSE(Partition::parse("2,1").is_even());
  EXPECT_FALSE(Partition::parse("1,1,1").is_even());
  EXPECT_TRUE(Partition{}.is_even());
  EXPECT_THROW(Partition({1, 2}), InvalidInput);
  EXPECT_THROW(Partition({2, 0}), InvalidInput);
  EXPECT_THROW(Partition::parse("2,x"), InvalidInput);
  EXPECT_EQ(Partition::ones(3), Partition({1, 1, 1}));
}
