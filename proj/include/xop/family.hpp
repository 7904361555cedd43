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

#ifndef XOP_FAMILY_HPP
#define XOP_FAMILY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "xop/errors.hpp"
#include "xop/partition.hpp"
#include "xop/rational.hpp"

namespace xop {

struct JacobiSpec {
  Rational alpha;
  Rational beta;
  Partition lambda;
  Partition mu;
};

struct LaguerreSpec {
  Rational alpha;
  Partition lambda;
  Partition mu;
};

/// Type-I X_m Laguerre: -L^{(alpha-1)}_{(), (m), n}.
struct LaguerreTypeISpec {
  int m = 1;
  Rational alpha;
};

/// Type-III X_m Laguerre: -n L^{(alpha-m)}_{(1^m), (), n}, with alpha in (-1, 0).
struct LaguerreTypeIIISpec {
  int m = 1;
  Rational alpha;
};

struct HermiteSpec {
  Partition lambda;
};

using FamilySpec = std::variant<JacobiSpec, LaguerreSpec, LaguerreTypeISpec, LaguerreTypeIIISpec, HermiteSpec>;

enum class FamilyKind { Jacobi, Laguerre, LaguerreTypeI, LaguerreTypeIII, Hermite };

/// Orthogonality support of the classical family: [-1,1], [0,inf) or R.
enum class Support { Interval, HalfLine, RealLine };

inline FamilyKind kind_of(const FamilySpec& spec) { return static_cast<FamilyKind>(spec.index()); }

inline Support support_of(const FamilySpec& spec) {
  switch (kind_of(spec)) {
    case FamilyKind::Jacobi: return Support::Interval;
    case FamilyKind::Hermite: return Support::RealLine;
    default: return Support::HalfLine;
  }
}

inline std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Jacobi: return "jacobi";
    case FamilyKind::Laguerre: return "laguerre";
    case FamilyKind::LaguerreTypeI: return "laguerre1";
    case FamilyKind::LaguerreTypeIII: return "laguerre3";
    case FamilyKind::Hermite: return "hermite";
  }
  return "?";
}

inline std::string to_string(Support s) {
  switch (s) {
    case Support::Interval: return "[-1,1]";
    case Support::HalfLine: return "[0,inf)";
    case Support::RealLine: return "R";
  }
  return "?";
}

/// Rate exponent rho in n^rho (zeta_{k,n} - zeta_{k,inf}): 1 for Jacobi, 1/2 otherwise.
inline Rational rate_exponent(const FamilySpec& spec) {
  return kind_of(spec) == FamilyKind::Jacobi ? Rational(1) : Rational(1, 2);
}

/// Throws InvalidInput when the spec violates its variant's invariants.
inline void validate(const FamilySpec& spec) {
  if (const auto* t1 = std::get_if<LaguerreTypeISpec>(&spec)) {
    if (t1->m < 1) throw InvalidInput("Type-I requires m >= 1");
  } else if (const auto* t3 = std::get_if<LaguerreTypeIIISpec>(&spec)) {
    if (t3->m < 1) throw InvalidInput("Type-III requires m >= 1");
    if (!(t3->alpha > -1 && t3->alpha < 0)) throw InvalidInput("Type-III requires alpha in (-1,0)");
  }
}

/// The (alpha, lambda, mu) Laguerre data behind a Type-I or Type-III spec.
inline LaguerreSpec underlying_laguerre(const FamilySpec& spec) {
  if (const auto* t1 = std::get_if<LaguerreTypeISpec>(&spec)) return {t1->alpha - 1, {}, Partition{t1->m}};
  if (const auto* t3 = std::get_if<LaguerreTypeIIISpec>(&spec)) return {t3->alpha - t3->m, Partition::ones(t3->m), {}};
  if (const auto* l = std::get_if<LaguerreSpec>(&spec)) return *l;
  throw InvalidInput("not a Laguerre-type spec");
}

/// Number of exceptional zeros: |lambda| + |mu|, or m.
inline int exceptional_count(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, JacobiSpec> || std::is_same_v<T, LaguerreSpec>)
          return s.lambda.weight() + s.mu.weight();
        else if constexpr (std::is_same_v<T, HermiteSpec>)
          return s.lambda.weight();
        else
          return s.m;
      },
      spec);
}

/// n in N_{lambda,mu}: n >= |lambda| + |mu| - r1 and n - |lambda| - |mu| != lambda_j - j.
inline bool index_set_contains(const Partition& lambda, const Partition& mu, long n) {
  const long total = lambda.weight() + mu.weight();
  if (n < 0 || n < total - lambda.length()) return false;
  for (int j = 1; j <= lambda.length(); ++j)
    if (n - total == lambda.part(j) - j) return false;
  return true;
}

/// n in N_lambda: n >= m - r and n != m - j + lambda_j.
inline bool index_set_contains_hermite(const Partition& lambda, long n) {
  const long m = lambda.weight();
  if (n < 0 || n < m - lambda.length()) return false;
  for (int j = 1; j <= lambda.length(); ++j)
    if (n == m - j + lambda.part(j)) return false;
  return true;
}

inline bool index_set_contains(const FamilySpec& spec, long n) {
  if (const auto* h = std::get_if<HermiteSpec>(&spec)) return index_set_contains_hermite(h->lambda, n);
  if (const auto* j = std::get_if<JacobiSpec>(&spec)) return index_set_contains(j->lambda, j->mu, n);
  const LaguerreSpec l = underlying_laguerre(spec);
  return index_set_contains(l.lambda, l.mu, n);
}

/// Smallest n >= from that lies in the index set.
inline long next_in_index_set(const FamilySpec& spec, long from) {
  long n = std::max(from, 0L);
  while (!index_set_contains(spec, n)) ++n;
  return n;
}

/// The s = n - |lambda| - |mu| + r1 degree of the classical column appended
/// to the Wronskian of an exceptional polynomial.
inline long classical_column_degree(const Partition& lambda, const Partition& mu, long n) {
  return n - lambda.weight() - mu.weight() + lambda.length();
}

struct AdmissibilityReport {
  bool c1_ok = true;
  bool c2_ok = true;
  bool c3_ok = true;
  bool degree_conditions_ok = true;
  bool in_index_set = true;
  /// lambda is even (required by the rate results; Type-III is exempt).
  bool lambda_even = true;
  /// alpha > -1, beta > mu_1 + r2 - 1, lambda even (Jacobi) or alpha > -1,
  /// lambda even (Laguerre). Type-III reports its own alpha range; Hermite
  /// reports lambda even.
  bool rate_hypotheses_ok = true;
  /// Jacobi with lambda = () and mu = (1,1) only: the X_2 reading in which the
  /// spec parameters are (a-2, b+2) and a > -1, b > 0 is assumed instead.
  std::optional<bool> x2_hypotheses_ok;
  /// Filled in only after a root computation of the generalized polynomial.
  std::optional<bool> support_free;
  /// Zeros of the generalized polynomial numerically simple; root-based as well.
  std::optional<bool> limits_simple;
  std::vector<std::string> messages;

  bool construction_ok() const { return c1_ok && c2_ok && c3_ok && degree_conditions_ok && in_index_set; }
};

namespace detail {
/// True iff v is an integer in {-1, ..., -d}.
inline bool in_negative_range(const Rational& v, long d) {
  return is_integer(v) && v <= -1 && v >= -d;
}
}  // namespace detail

/// Exact checks of (C1)-(C3), the degree conditions for the given n and the
/// hypotheses of the rate results. Never throws.
inline AdmissibilityReport check_admissibility(const FamilySpec& spec, long n) {
  AdmissibilityReport rep;
  rep.in_index_set = index_set_contains(spec, n);
  if (!rep.in_index_set) {
    rep.degree_conditions_ok = false;
    rep.messages.push_back("n = " + std::to_string(n) + " is not in the index set");
  }
  if (const auto* j = std::get_if<JacobiSpec>(&spec)) {
    const int r1 = j->lambda.length();
    const int r2 = j->mu.length();
    std::vector<long> d(static_cast<std::size_t>(r1));
    std::vector<long> e(static_cast<std::size_t>(r2));
    for (int i = 1; i <= r1; ++i) d[static_cast<std::size_t>(i - 1)] = j->lambda.part(i) + r1 - i;
    for (int i = 1; i <= r2; ++i) e[static_cast<std::size_t>(i - 1)] = j->mu.part(i) + r2 - i;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (detail::in_negative_range(j->alpha + j->beta + d[i], d[i])) {
        rep.c1_ok = false;
        rep.messages.push_back("C1 fails for j = " + std::to_string(i + 1));
      }
    for (std::size_t i = 0; i < e.size(); ++i)
      if (detail::in_negative_range(j->alpha - j->beta + e[i], e[i])) {
        rep.c2_ok = false;
        rep.messages.push_back("C2 fails for j = " + std::to_string(i + 1));
      }
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = 0; b < e.size(); ++b)
        if (j->beta == Rational(e[b] - d[a])) {
          rep.c3_ok = false;
          rep.messages.push_back("C3 fails for (i, j) = (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ")");
        }
    if (rep.in_index_set) {
      const long s = classical_column_degree(j->lambda, j->mu, n);
      if (detail::in_negative_range(j->alpha + j->beta + s, s)) {
        rep.degree_conditions_ok = false;
        rep.messages.push_back("alpha + beta + s is in {-1, ..., -s} for s = " + std::to_string(s));
      }
      for (std::size_t b = 0; b < e.size(); ++b)
        if (j->beta == Rational(e[b] - s)) {
          rep.degree_conditions_ok = false;
          rep.messages.push_back("beta = e_j - s for j = " + std::to_string(b + 1));
        }
    }
    rep.lambda_even = j->lambda.is_even();
    const int mu1 = r2 > 0 ? j->mu.part(1) : 0;
    rep.rate_hypotheses_ok = j->alpha > -1 && j->beta > Rational(mu1 + r2 - 1) && rep.lambda_even;
    if (!rep.rate_hypotheses_ok)
      rep.messages.push_back("rate hypotheses (alpha > -1, beta > mu_1 + r2 - 1, lambda even) not met");
    if (j->lambda.empty() && j->mu == Partition{1, 1}) {
      rep.x2_hypotheses_ok = j->alpha + 2 > -1 && j->beta - 2 > 0;
      if (!*rep.x2_hypotheses_ok) rep.messages.push_back("X_2 hypotheses (a > -1, b > 0 at a = alpha+2, b = beta-2) not met");
    }
    return rep;
  }
  if (const auto* h = std::get_if<HermiteSpec>(&spec)) {
    rep.lambda_even = h->lambda.is_even();
    rep.rate_hypotheses_ok = rep.lambda_even;
    if (!rep.lambda_even) rep.messages.push_back("lambda is not even");
    return rep;
  }
  if (const auto* t3 = std::get_if<LaguerreTypeIIISpec>(&spec)) {
    rep.lambda_even = Partition::ones(t3->m).is_even();
    rep.rate_hypotheses_ok = t3->alpha > -1 && t3->alpha < 0;
    if (!rep.rate_hypotheses_ok) rep.messages.push_back("Type-III requires alpha in (-1,0)");
    return rep;
  }
  const LaguerreSpec l = underlying_laguerre(spec);
  rep.lambda_even = l.lambda.is_even();
  rep.rate_hypotheses_ok = l.alpha > -1 && rep.lambda_even;
  if (!rep.rate_hypotheses_ok) rep.messages.push_back("rate hypotheses (alpha > -1, lambda even) not met");
  return rep;
}

}  // namespace xop

#endif  // XOP_FAMILY_HPP
