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

#include <algorithm>
#include <random>

#include "xop/xop.hpp"

using namespace xop;

namespace {

constexpr Precision kPrec = 256;

RationalPoly poly(std::initializer_list<Rational> c) { return RationalPoly(c); }

std::vector<Complex> sorted(std::vector<Complex> zs) {
  std::sort(zs.begin(), zs.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return zs;
}

double dist(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

ZeroSet zeros_of(const FamilySpec& spec, long n, Precision prec = kPrec) {
  const RootResult r = all_roots(exceptional_polynomial(spec, n), prec);
  return classify_zeros(r, support_of(spec), default_classification_tol(prec));
}

RationalPoly random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
  for (auto& q : c) q = num(rng);
  if (sgn(c.back()) == 0) c.back() = 3;
  return RationalPoly(std::move(c));
}

}  // namespace

TEST(AllRoots, Quadratic) {
  const auto r = sorted(all_roots(poly({-1, 0, 1}), kPrec).roots);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_LT(dist(r[0], Complex(Real(-1L, kPrec))), 1e-70);
  EXPECT_LT(dist(r[1], Complex(Real(1L, kPrec))), 1e-70);
}

TEST(AllRoots, LaguerreTwo) {
  const Rational a(1, 2);
  const auto r = sorted(all_roots(laguerre(2, a), kPrec).roots);
  const Real c(Rational(5, 2), kPrec);
  const Real s = sqrt(c);
  EXPECT_LT(dist(r[0], Complex(c - s)), 1e-70);
  EXPECT_LT(dist(r[1], Complex(c + s)), 1e-70);
}

TEST(AllRoots, FourthRootsOfMinusThreeQuarters) {
  const auto r = all_roots(generalized_polynomial(HermiteSpec{Partition{2, 2}}), kPrec).roots;
  ASSERT_EQ(r.size(), 4u);
  const Complex minus(Rational(-3, 4), kPrec);
  for (const auto& z : r) EXPECT_LT(dist(z * z * z * z, minus), 1e-70);
  const Real q = sqrt(sqrt(Real(Rational(3, 4), kPrec)) / Real(2L, kPrec));
  const Complex principal(q, q);
  EXPECT_TRUE(std::any_of(r.begin(), r.end(), [&](const Complex& z) { return dist(z, principal) < 1e-70; }));
}

TEST(AllRoots, ResidualBoundProperty) {
  std::mt19937 rng(41);
  for (int t = 0; t < 5; ++t) {
    const RationalPoly p = random_poly(rng, 12 + 3 * t);
    const Precision prec = 128;
    const RootResult res = all_roots(p, prec);
    ASSERT_EQ(res.roots.size(), static_cast<std::size_t>(p.degree()));
    Real cmax(0L, 64);
    for (const auto& c : p.coefficients()) cmax = max(cmax, abs(Real(c, 64)));
    for (const auto& z : res.roots) {
      const Complex v = evaluate(p, Complex(z.real().rounded(4 * prec), z.imag().rounded(4 * prec)));
      const Real zs = max(Real(1L, 64), abs(z).rounded(64));
      Real bound = Real::pow2(-(static_cast<long>(prec) - 32), 64) * cmax;
      for (int k = 0; k < p.degree(); ++k) bound *= zs;
      EXPECT_LE(abs(v).rounded(64), bound);
    }
  }
}

TEST(AllRoots, VietaSumsAndProducts) {
  std::mt19937 rng(43);
  for (int t = 0; t < 5; ++t) {
    const RationalPoly p = random_poly(rng, 9 + t);
    const auto r = all_roots(p, kPrec).roots;
    Complex sum(kPrec);
    Complex prod(Real(1L, kPrec));
    for (const auto& z : r) {
      sum += z;
      prod *= z;
    }
    const auto& c = p.coefficients();
    const std::size_t d = c.size() - 1;
    const Complex vs(Rational(-c[d - 1] / c[d]), kPrec);
    const Complex vp(Rational((d % 2 == 0 ? 1 : -1) * c[0] / c[d]), kPrec);
    EXPECT_LT(dist(sum, vs), 1e-60);
    EXPECT_LT(dist(prod, vp), 1e-60 * std::max(1.0, abs(vp).to_double()));
  }
}

TEST(AllRoots, ConjugateClosure) {
  const ZeroSet zs = zeros_of(HermiteSpec{Partition{2, 2}}, 30);
  ASSERT_EQ(zs.exceptional.size(), 4u);
  for (const auto& z : zs.exceptional) {
    const Complex c = conj(z);
    EXPECT_TRUE(std::any_of(zs.exceptional.begin(), zs.exceptional.end(),
                            [&](const Complex& w) { return dist(w, c) < 1e-60; }));
  }
}

TEST(AllRoots, ComplexCoefficients) {
  // (x - i)(x + 2)
  const Complex i(Real(0L, kPrec), Real(1L, kPrec));
  const Complex two(Real(2L, kPrec));
  const ComplexPoly p({-(i * two), two - i, Complex(Real(1L, kPrec))});
  const auto r = sorted(all_roots(p, kPrec).roots);
  EXPECT_LT(dist(r[0], -two), 1e-70);
  EXPECT_LT(dist(r[1], i), 1e-70);
}

TEST(AllRoots, RejectsConstants) {
  EXPECT_THROW(all_roots(RationalPoly::constant(3), kPrec), InvalidInput);
  EXPECT_THROW(all_roots(RationalPoly(), kPrec), InvalidInput);
}

TEST(AllRoots, NonConvergenceCarriesPartialRoots) {
  RootOptions opts;
  opts.max_aberth_iters = 1;
  opts.max_precision = 64;
  const RationalPoly p = hermite(30);
  try {
    all_roots(p, 128, opts);
    FAIL() << "expected NonConvergenceError";
  } catch (const NonConvergenceError& e) {
    EXPECT_EQ(e.partial_roots().size(), 30u);
  }
}

TEST(AllRoots, DoubleRootIsFlagged) {
  RootOptions opts;
  opts.max_precision = 512;
  const RationalPoly p = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
  const RootResult r = all_roots(p, 128, opts);
  EXPECT_TRUE(r.suspected_multiple);
  const ZeroSet zs = classify_zeros(r, Support::RealLine, default_classification_tol(128));
  EXPECT_FALSE(zs.certified_simple);
}

TEST(Classify, HermiteOneOne) {
  const ZeroSet zs = zeros_of(HermiteSpec{Partition{1, 1}}, 10);
  EXPECT_EQ(zs.regular.size(), 8u);
  EXPECT_EQ(zs.exceptional.size(), 2u);
  EXPECT_TRUE(zs.certified_simple);
  for (std::size_t i = 1; i < zs.regular.size(); ++i) EXPECT_LT(zs.regular[i - 1].real(), zs.regular[i].real());
  for (const auto& z : zs.exceptional) EXPECT_GT(abs(z.imag()).to_double(), 0.1);
}

TEST(Classify, TypeIIIExceptionalZerosAreNegativeReals) {
  const ZeroSet zs = zeros_of(LaguerreTypeIIISpec{5, Rational(-2, 5)}, 12);
  EXPECT_EQ(zs.regular.size(), 7u);
  ASSERT_EQ(zs.exceptional.size(), 5u);
  for (const auto& z : zs.exceptional) {
    EXPECT_LT(z.real().to_double(), 0);
    EXPECT_LT(abs(z.imag()).to_double(), 1e-60);
  }
  for (const auto& z : zs.regular) EXPECT_GT(z.real().to_double(), 0);
}

TEST(Classify, OffSupportPair) {
  const std::vector<Complex> zs = {parse_complex("-1-i", kPrec), parse_complex("-1+i", kPrec)};
  const ZeroSet s = classify_zeros(zs, Support::HalfLine, default_classification_tol(kPrec));
  EXPECT_TRUE(s.regular.empty());
  EXPECT_EQ(s.exceptional.size(), 2u);
}

TEST(Classify, IntervalEndpointsAreExcluded) {
  const std::vector<Complex> zs = {parse_complex("-1", kPrec), parse_complex("0.5", kPrec), parse_complex("1.5", kPrec)};
  const ZeroSet s = classify_zeros(zs, Support::Interval, default_classification_tol(kPrec));
  EXPECT_EQ(s.regular.size(), 1u);
  EXPECT_EQ(s.exceptional.size(), 2u);
}

TEST(Classify, StableUnderHalvedTolerance) {
  const std::vector<std::pair<FamilySpec, long>> cases = {
      {LaguerreTypeIIISpec{5, Rational(-2, 5)}, 200},
      {HermiteSpec{Partition{2, 2}}, 100},
      {LaguerreTypeISpec{2, Rational(3, 2)}, 100},
      {JacobiSpec{Rational(-3, 2), Rational(5), {}, Partition{1, 1}}, 100},
  };
  for (const auto& [spec, n] : cases) {
    const RootResult r = all_roots(exceptional_polynomial(spec, n), kPrec);
    const Real tol = default_classification_tol(kPrec);
    const ZeroSet a = classify_zeros(r, support_of(spec), tol);
    const ZeroSet b = classify_zeros(r, support_of(spec), tol / Real(2L, 64));
    EXPECT_EQ(a.regular.size(), b.regular.size()) << to_string(kind_of(spec));
    EXPECT_EQ(a.regular.size() + a.exceptional.size(), static_cast<std::size_t>(n));
  }
}

TEST(Match, SingleAndMismatch) {
  const std::vector<Complex> one = {parse_complex("0.5", kPrec)};
  const auto a = match_to_limits(one, {parse_complex("0.4", kPrec)});
  ASSERT_EQ(a.pairs.size(), 1u);
  EXPECT_EQ(a.pairs[0].k, 1);
  EXPECT_NEAR(a.pairs[0].distance.to_double(), 0.1, 1e-15);
  EXPECT_FALSE(a.ambiguous);
  EXPECT_THROW(match_to_limits(one, {}), MatchingError);
}

TEST(Match, AmbiguityIsFlagged) {
  const std::vector<Complex> zs = {parse_complex("0", kPrec), parse_complex("0", kPrec)};
  const std::vector<Complex> ls = {parse_complex("1", kPrec), parse_complex("-1", kPrec)};
  EXPECT_TRUE(match_to_limits(zs, ls).ambiguous);
}

TEST(Match, HermiteConjugatePair) {
  const ZeroSet zs = zeros_of(HermiteSpec{Partition{1, 1}}, 20);
  const Real h = sqrt(Real(Rational(1, 2), kPrec));
  const std::vector<Complex> ls = {Complex(Real(0L, kPrec), -h), Complex(Real(0L, kPrec), h)};
  const auto a = match_to_limits(zs.exceptional, ls);
  for (const auto& p : a.pairs) {
    EXPECT_LT(p.distance.to_double(), 0.2);
    EXPECT_EQ(p.zero.imag().sign(), p.limit.imag().sign());
  }
}

TEST(Match, TypeIIIZeroNearKnownLimit) {
  const FamilySpec spec = LaguerreTypeIIISpec{5, Rational(-2, 5)};
  const ZeroSet zs = zeros_of(spec, 40);
  const auto ls = all_roots(generalized_polynomial(spec), kPrec).roots;
  const auto a = match_to_limits(zs.exceptional, ls);
  const auto it = std::find_if(a.pairs.begin(), a.pairs.end(), [](const LimitPair& p) {
    return std::abs(p.limit.real().to_double() + 1.00772514594748) < 1e-12;
  });
  ASSERT_NE(it, a.pairs.end());
  EXPECT_LT(it->distance.to_double(), 0.2);
}

TEST(Interlacing, Counts) {
  auto reals = [](std::initializer_list<double> xs) {
    std::vector<Real> out;
    for (double x : xs) out.emplace_back(x, 64);
    return out;
  };
  EXPECT_EQ(interlacing_count(reals({0}), reals({-1, 1})), 1);
  EXPECT_EQ(interlacing_count(reals({}), reals({-1, 1})), 0);
  EXPECT_EQ(interlacing_count(reals({-1, 1}), reals({-1, 1})), 0);
  EXPECT_EQ(interlacing_count(reals({0.5, 1.5, 1.6, 2.5}), reals({0, 1, 2, 3})), 3);
  EXPECT_EQ(interlacing_count(reals({-5, 5}), reals({0, 1})), 0);
}
