#pragma once

// Explicit ideals and families: the colength-12 counterexample family and
// its discriminant, the smoothing family over k[t] and its four components,
// first-order families of the closed immersion, disjoint unions with
// reduced points, the length-78 example, and random marked bases.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hilb/groebner.hpp"
#include "hilb/presentation.hpp"
#include "hilb/random.hpp"
#include "hilb/substitution.hpp"
#include "hilb/tangent.hpp"

namespace hilb {

/// Ambient x > y > z shared by every family.
const AmbientPtr& xyz_ambient();

/// The twelve monomials {y^2 z, y z^2, z^3, xy, y^2, xz, yz, z^2, x, y, z, 1}.
const OrderIdeal& counterexample_order_ideal();

using Params5 = std::array<mpq_class, 5>;  // (b1, ..., b5) with b0 = 1

/// b3 b4^3 - b2 b4^2 b5 + b1 b4 b5^2 - b5^3
mpq_class discriminant_B(const Params5& b);
/// b4^2 (b3 b4 - b2 b5) + b5^2 (b1 b4 - b5)
mpq_class discriminant_B_factored(const Params5& b);

enum class TangentStratum { Homogeneous, DiscriminantZero, Generic };
/// 54 / 48 / 45 stratum of the (b4, b5, B) case split.
TangentStratum stratum_of(const Params5& b);
std::size_t expected_tangent_dimension(TangentStratum s);

struct CounterexampleParams {
  char chart = 'x';                    // variable playing the role of l
  std::array<mpq_class, 2> a{0, 0};    // l = chart + a1 u + a2 w, (u, w) the other variables in order
  std::array<mpq_class, 6> b{1, 0, 0, 0, 0, 0};

  static CounterexampleParams standard(const Params5& b5) {
    CounterexampleParams p;
    p.b = {1, b5[0], b5[1], b5[2], b5[3], b5[4]};
    return p;
  }
};

/// The generator strings of the length-78 example.
const std::vector<std::string>& length78_generator_strings();

/// Variable indices (l-variable, u, w) of a chart.
std::array<std::size_t, 3> chart_variables(char chart);

template <Field K>
Polynomial<K> constant_poly(const K& field, const mpq_class& q) {
  return Polynomial<K>::constant(field, xyz_ambient(), field.from_rational(q));
}

template <Field K>
Polynomial<K> var_poly(const K& field, std::size_t i) {
  return Polynomial<K>::variable(field, xyz_ambient(), i);
}

/// ((l) + m^2)^2 + (v) for l = l-variable + a1 u + a2 w and
/// v = b0 u^3 + b1 u^2 w + b2 u w^2 + b3 w^3 + b4 l u + b5 l w.
template <Field K>
std::vector<Polynomial<K>> counterexample_generators(const K& field, const CounterexampleParams& p) {
  if (std::all_of(p.b.begin(), p.b.end(), [](const mpq_class& q) { return sgn(q) == 0; }))
    fail(ErrorCode::ZeroParameters, "v must be nonzero: all b vanish");
  auto idx = chart_variables(p.chart);
  auto c = [&](const mpq_class& q) { return constant_poly(field, q); };
  auto l = var_poly(field, idx[0]) + c(p.a[0]) * var_poly(field, idx[1]) + c(p.a[1]) * var_poly(field, idx[2]);
  auto u = var_poly(field, idx[1]);
  auto w = var_poly(field, idx[2]);
  // (l) + m^2 = (l) + (u, w)^2
  std::vector<Polynomial<K>> lin{l, u * u, u * w, w * w};
  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 0; i < lin.size(); ++i)
    for (std::size_t j = i; j < lin.size(); ++j) gens.push_back(lin[i] * lin[j]);
  auto v = c(p.b[0]) * u.pow(3) + c(p.b[1]) * u * u * w + c(p.b[2]) * u * w * w + c(p.b[3]) * w.pow(3) +
           c(p.b[4]) * l * u + c(p.b[5]) * l * w;
  gens.push_back(v);
  return gens;
}

/// The ideal (x^2, xy^2, xyz, xz^2, y^2z^2, yz^3, z^4, y^3 - xz).
template <Field K>
std::vector<Polynomial<K>> baby_example_generators(const K& field) {
  std::vector<Polynomial<K>> gens;
  for (const char* s : {"x^2", "x*y^2", "x*y*z", "x*z^2", "y^2*z^2", "y*z^3", "z^4", "y^3 - x*z"})
    gens.push_back(parse_polynomial(s, field, xyz_ambient()));
  return gens;
}

/// Marked basis on the 12-element N for l = x, a = 0, b0 != 0 (v is divided by b0).
template <Field K>
MarkedSet<K> counterexample_marked_basis(const K& field, const CounterexampleParams& p) {
  if (p.chart != 'x' || sgn(p.a[0]) != 0 || sgn(p.a[1]) != 0 || sgn(p.b[0]) == 0)
    fail(ErrorCode::UnsupportedChart, "a marked basis is only provided for l = x with b0 != 0");
  auto c = [&](const mpq_class& q) { return constant_poly(field, q / p.b[0]); };
  auto x = var_poly(field, 0), y = var_poly(field, 1), z = var_poly(field, 2);
  auto tail = c(p.b[1]) * y * y * z + c(p.b[2]) * y * z * z + c(p.b[3]) * z.pow(3) + c(p.b[4]) * x * y + c(p.b[5]) * x * z;
  const auto& N = counterexample_order_ideal();
  auto F = MarkedSet<K>::monomial(field, xyz_ambient(), N);
  std::vector<Polynomial<K>> tails;
  for (std::size_t a = 0; a < F.size(); ++a)
    tails.push_back(F.head(a) == Monomial{0, 3, 0} ? tail : Polynomial<K>(field, xyz_ambient()));
  return F.with_tails(std::move(tails));
}

template <Field K>
MarkedSet<K> counterexample_marked_basis(const K& field, const Params5& b) {
  return counterexample_marked_basis(field, CounterexampleParams::standard(b));
}

/// Checks that the ideals built from a basis (l1, l2) of L and from the
/// basis of L' congruent to it modulo l coincide. Linear forms are given as
/// coefficient triples on (x, y, z).
using LinearForm = std::array<mpq_class, 3>;
bool lambda_invariance_check(const LinearForm& l, const std::array<LinearForm, 2>& L,
                             const std::array<LinearForm, 2>& Lprime, const std::array<mpq_class, 6>& b);

/// Sign of the y^2 term of the x^2 generator in the smoothing family; the
/// displayed formula drops it. Only "-" passes the criterion over K[t].
inline constexpr bool kSmoothingPlusSign = false;

/// The smoothing family over K[t] as a marked set on the 12-element N.
/// Throws DiscriminantZero when B = 0.
template <Field K>
MarkedSet<UnivariatePolys<K>> smoothing_family(const K& field, const Params5& b, bool plus_sign = kSmoothingPlusSign) {
  const mpq_class B = discriminant_B(b);
  if (sgn(B) == 0) fail(ErrorCode::DiscriminantZero, "the smoothing family needs B != 0");
  const auto& [b1, b2, b3, b4, b5] = b;
  using UP = UnivariatePolys<K>;
  UP R(field);
  const auto& amb = xyz_ambient();
  auto T = [&](const mpq_class& c, std::size_t k) { return R.monomial(field.from_rational(c), k); };
  auto P = [&](const Monomial& m, typename UP::Element c) { return Polynomial<UP>::term(R, amb, m, std::move(c)); };
  const Monomial x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1}, one{0, 0, 0};
  const mpq_class e = b3 * b4 - b2 * b5, f = b1 * b4 - b5;
  const mpq_class s = plus_sign ? 1 : -1;
  std::vector<std::pair<Monomial, Polynomial<UP>>> tails;
  tails.emplace_back(x * x, P(y * y, T(s * b4 * b4 * e / B, 2)) + P(y * z, T(-b4 * e * f / B, 2)) +
                                P(z * z, T(b3 * b4 * b5 * f / B, 2)) + P(x, T(-b4 * (2 * B - b5 * b5 * f) / B, 2)) +
                                P(one, T(b4 * b4 * b4 * b4 * e / B, 4)));
  tails.emplace_back(x * y * y, Polynomial<UP>(R, amb));
  tails.emplace_back(x * y * z, P(y * y * z, T(1, 1)) + P(y * z, T(-b4, 2)));
  tails.emplace_back(x * z * z, P(z * z, T(-b4, 2)));
  tails.emplace_back(y * y * z * z, Polynomial<UP>(R, amb));
  tails.emplace_back(y * z * z * z, Polynomial<UP>(R, amb));
  tails.emplace_back(z * z * z * z, Polynomial<UP>(R, amb));
  tails.emplace_back(y * y * y, P(y * y * z, T(b1, 0)) + P(y * z * z, T(b2, 0)) + P(z * z * z, T(b3, 0)) +
                                    P(x * y, T(b4, 0)) + P(x * z, T(b5, 0)) + P(y, T(-b4 * b4, 2)) +
                                    P(z, T(-b4 * b5, 2)));
  return MarkedSet<UP>::make(R, amb, counterexample_order_ideal(), std::move(tails));
}

/// The b4 = b5 = 0 family: xyz + t y^2 z, the other generators unchanged.
template <Field K>
MarkedSet<UnivariatePolys<K>> smoothing_family_homogeneous(const K& field, const Params5& b) {
  if (sgn(b[3]) != 0 || sgn(b[4]) != 0) fail(ErrorCode::InvalidArgument, "this family needs b4 = b5 = 0");
  using UP = UnivariatePolys<K>;
  UP R(field);
  auto base = counterexample_marked_basis(field, b);
  auto F = base.map_coefficients(R, [&](const auto& c) { return R.from_base(c); });
  std::vector<Polynomial<UP>> tails;
  for (std::size_t a = 0; a < F.size(); ++a) {
    auto t = F.tail(a);
    if (F.head(a) == Monomial{1, 1, 1}) t = t + Polynomial<UP>::term(R, xyz_ambient(), Monomial{0, 2, 1}, R.parameter());
    tails.push_back(std::move(t));
  }
  return F.with_tails(std::move(tails));
}

/// Generators of the specialization at t (over K).
template <Field K>
std::vector<Polynomial<K>> specialize_family(const MarkedSet<UnivariatePolys<K>>& F, const mpq_class& t) {
  const K& field = F.ring().base();
  std::vector<Polynomial<K>> out;
  for (const auto& p : F.polynomials()) out.push_back(specialize(p, {{"t", field.from_rational(t)}}));
  return out;
}

/// The four components of the t != 0 fiber of the smoothing family.
template <Field K>
std::array<std::vector<Polynomial<K>>, 4> smoothing_component_generators(const K& field, const Params5& b,
                                                                         const mpq_class& t) {
  const mpq_class B = discriminant_B(b);
  if (sgn(B) == 0) fail(ErrorCode::DiscriminantZero, "components need B != 0");
  if (sgn(b[3]) == 0) fail(ErrorCode::B4Zero, "components need b4 != 0");
  if (sgn(t) == 0) fail(ErrorCode::InvalidArgument, "components need t != 0");
  const auto& [b1, b2, b3, b4, b5] = b;
  auto c = [&](const mpq_class& q) { return constant_poly(field, q); };
  auto x = var_poly(field, 0), y = var_poly(field, 1), z = var_poly(field, 2);
  const mpq_class e = b3 * b4 - b2 * b5;
  auto xs = x - c(b4 * t * t);
  std::array<std::vector<Polynomial<K>>, 4> P;
  P[0] = {xs * xs,
          y * y,
          c(e) * y * z - c(b3 * b5) * z * z - c(b5 * b5) * xs,
          c(b3) * y * z * z + c(b5) * y * xs,
          c(b2) * y * z * z + c(b3) * z.pow(3) + (c(b4) * y + c(b5) * z) * xs,
          xs * z * z,
          xs * y * z,
          y * z.pow(3),
          z.pow(4)};
  const mpq_class s2 = b4 * b4 * b4 * e / B * t * t;
  auto x2 = x - c(s2);
  P[1] = {x2,
          c(b4) * y + c(b5) * z,
          x2 * (c(b5 * b5) * y + c(b4 * e + b1 * b5 * b5) * z) + c(b4 * b4 * b4 * b5 * b5 * e / B * t * t) * y +
              c(b4 * b4 * b5 * b5 * b5 * e / B * t * t) * z,
          y * y,
          y * z,
          z * z};
  auto y3 = y - c(b4 * t);
  P[2] = {x, c(2 * b4) * y3 + c(b1 * b4 - b5) * z, (c(2) * y + c(b1) * z) * y3 + c((b1 * b4 - b5) * t) * z, y3 * z, z * z};
  P[3] = {x, y + c(b4 * t), z};
  return P;
}

/// Support points (b4 t^2, 0, 0), (b4^3 (b3 b4 - b2 b5) t^2 / B, 0, 0), (0, b4 t, 0), (0, -b4 t, 0).
std::array<std::array<mpq_class, 3>, 4> smoothing_component_supports(const Params5& b, const mpq_class& t);

struct SmoothingReport {
  std::array<std::size_t, 4> lengths{};
  std::array<std::array<mpq_class, 3>, 4> supports;
  std::array<bool, 4> supported{};  // each component is supported exactly at its point
  bool pairwise_comaximal = false;
  bool intersection_matches = false;  // P1 ∩ ... ∩ P4 = the family at t
  bool family_flat = false;           // criterion over K[t]
  std::size_t fiber_length = 0;
};

template <Field K>
SmoothingReport smoothing_components(const K& field, const Params5& b, const mpq_class& t) {
  SmoothingReport rep;
  auto P = smoothing_component_generators(field, b, t);
  rep.supports = smoothing_component_supports(b, t);
  for (std::size_t i = 0; i < 4; ++i) {
    auto len = oracle_colength(P[i]);
    rep.lengths[i] = len ? *len : 0;
    std::vector<typename K::Element> pt;
    for (const auto& q : rep.supports[i]) pt.push_back(field.from_rational(q));
    rep.supported[i] = len && support_check(P[i], pt, static_cast<unsigned>(*len));
  }
  rep.pairwise_comaximal = true;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      auto sum = P[i];
      sum.insert(sum.end(), P[j].begin(), P[j].end());
      auto len = oracle_colength(sum);
      if (!len || *len != 0) rep.pairwise_comaximal = false;
    }
  auto inter = intersect(intersect(intersect(P[0], P[1]), P[2]), P[3]);
  auto F = smoothing_family(field, b);
  auto fiber = specialize_family(F, t);
  rep.intersection_matches = ideal_equal(inter, fiber);
  rep.family_flat = is_marked_basis(F).is_basis;
  auto fl = oracle_colength(fiber);
  rep.fiber_length = fl ? *fl : 0;
  return rep;
}

/// The ten first-order families spanning the image of the differential of
/// the classifying map at (l = x, v, 0). Displayed perturbations g + eps h
/// are stored as marked tails eps * NF(h).
template <Field K>
std::vector<MarkedSet<DualNumbers<K>>> closed_immersion_vectors(const K& field, const Params5& b) {
  const auto& [b1, b2, b3, b4, b5] = b;
  auto F = counterexample_marked_basis(field, b);
  (void)b3;
  auto c = [&](const mpq_class& q) { return constant_poly(field, q); };
  auto x = var_poly(field, 0), y = var_poly(field, 1), z = var_poly(field, 2);
  auto zero = Polynomial<K>(field, xyz_ambient());
  // perturbations in generator order x^2, xy^2, xyz, xz^2, y^2z^2, yz^3, z^4, v
  using Row = std::array<Polynomial<K>, 8>;
  std::vector<Row> rows;
  auto only_v = [&](const Polynomial<K>& h) { return Row{zero, zero, zero, zero, zero, zero, zero, h}; };
  rows.push_back({c(2) * x * y, y.pow(3), y * y * z, y * z * z, zero, zero, zero, c(b4) * y * y + c(b5) * y * z});
  rows.push_back({c(2) * x * z, y * y * z, y * z * z, z.pow(3), zero, zero, zero, c(b4) * y * z + c(b5) * z * z});
  rows.push_back(only_v(y * y * z));
  rows.push_back(only_v(y * z * z));
  rows.push_back(only_v(z.pow(3)));
  rows.push_back(only_v(x * y));
  rows.push_back(only_v(x * z));
  rows.push_back({c(2) * x, y * y, y * z, z * z, zero, zero, zero, c(b4) * y + c(b5) * z});
  rows.push_back({zero, c(2) * x * y, x * z, zero, c(2) * y * z * z, z.pow(3), zero,
                  c(3) * y * y + c(2 * b1) * y * z + c(b2) * z * z + c(b4) * x});
  rows.push_back({zero, zero, x * y, c(2) * x * z, c(2) * y * y * z, c(3) * y * z * z, c(4) * z.pow(3),
                  c(b1) * y * y + c(2 * b2) * y * z + c(3 * b3) * z * z + c(b5) * x});
  const std::array<Monomial, 8> heads{Monomial{2, 0, 0}, Monomial{1, 2, 0}, Monomial{1, 1, 1}, Monomial{1, 0, 2},
                                      Monomial{0, 2, 2}, Monomial{0, 1, 3}, Monomial{0, 0, 4}, Monomial{0, 3, 0}};
  const auto& N = F.order_ideal();
  std::vector<MarkedSet<DualNumbers<K>>> out;
  for (const auto& row : rows) {
    std::vector<typename K::Element> T(F.size() * N.size(), field.zero());
    for (std::size_t g = 0; g < 8; ++g) {
      if (row[g].is_zero()) continue;
      auto a = static_cast<std::size_t>(F.head_index(heads[g]));
      const auto nf = reduce(row[g], F);
      for (const auto& t : nf.terms())
        T[a * N.size() + static_cast<std::size_t>(N.index_of(t.mono))] = t.coeff;
    }
    out.push_back(first_order_deformation(F, T));
  }
  return out;
}

/// Checks the displayed 45-parameter first-order family at B != 0: every
/// parameter direction lies in ker S and together they span it.
template <Field K>
bool tangent_pattern_holds(const MarkedSet<K>& F, const Params5& b) {
  const auto& N = F.order_ideal();
  const std::size_t nN = N.size();
  auto mono = [](const char* s) { return parse_monomial(s, *xyz_ambient()); };
  const std::vector<const char*> low{"y^2*z", "y*z^2", "z^3", "x*y", "x*z"};
  std::vector<std::vector<typename K::Element>> dirs;
  auto unit = [&]() { return std::vector<typename K::Element>(F.size() * nN, F.ring().zero()); };
  auto put = [&](std::vector<typename K::Element>& v, const char* head, const char* m, const mpq_class& c) {
    int a = F.head_index(mono(head));
    int j = N.index_of(mono(m));
    if (a < 0 || j < 0) fail(ErrorCode::Internal, "pattern refers to a monomial outside the marked set");
    v[static_cast<std::size_t>(a) * nN + static_cast<std::size_t>(j)] = F.ring().from_rational(c);
  };
  for (const char* head : {"x^2", "x*y^2", "x*y*z", "x*z^2", "y^2*z^2", "y*z^3", "z^4", "y^3"})
    for (const char* m : low) {
      dirs.push_back(unit());
      put(dirs.back(), head, m, 1);
    }
  for (const char* m : {"y^2", "y*z", "z^2", "x"}) {
    dirs.push_back(unit());
    put(dirs.back(), "y^3", m, 1);
  }
  auto e10 = unit();
  put(e10, "x^2", "x", 2);
  put(e10, "x*y^2", "y^2", 1);
  put(e10, "x*y*z", "y*z", 1);
  put(e10, "x*z^2", "z^2", 1);
  put(e10, "y^3", "y", b[3]);
  put(e10, "y^3", "z", b[4]);
  dirs.push_back(e10);
  auto S = build_tangent_system(F);
  for (const auto& v : dirs)
    if (!in_kernel(S, F.ring(), v)) return false;
  return dirs.size() == 45 && rref(F.ring(), dirs, F.size() * nN).rows.size() == 45 &&
         tangent_dimension(F).dim == 45;
}

/// I ∩ (maximal ideals of the points). Throws DuplicatePoint or PointInSupport.
template <Field K>
std::vector<Polynomial<K>> disjoint_union(const std::vector<Polynomial<K>>& gens,
                                          const std::vector<std::array<mpq_class, 3>>& points) {
  const K& field = gens.front().ring();
  const auto& amb = gens.front().ambient();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) fail(ErrorCode::DuplicatePoint, "points must be distinct");
  std::vector<Polynomial<K>> acc = gens;
  for (const auto& p : points) {
    std::vector<typename K::Element> pt;
    for (const auto& q : p) pt.push_back(field.from_rational(q));
    bool in_support = std::all_of(gens.begin(), gens.end(), [&](const Polynomial<K>& g) {
      return field.is_zero(evaluate_at<K>(g, pt));
    });
    if (in_support) fail(ErrorCode::PointInSupport, "point lies in the support of the ideal");
    std::vector<Polynomial<K>> m;
    for (std::size_t i = 0; i < amb->size(); ++i)
      m.push_back(Polynomial<K>::variable(field, amb, i) - Polynomial<K>::constant(field, amb, pt[i]));
    acc = intersect(acc, m);
  }
  return acc;
}

/// Ideal of distinct reduced points.
template <Field K>
std::vector<Polynomial<K>> points_ideal(const K& field, const std::vector<std::array<mpq_class, 3>>& points) {
  if (points.empty()) fail(ErrorCode::InvalidArgument, "need at least one point");
  std::vector<Polynomial<K>> first;
  for (std::size_t i = 0; i < 3; ++i) first.push_back(var_poly(field, i) - constant_poly(field, points[0][i]));
  std::vector<std::array<mpq_class, 3>> rest(points.begin() + 1, points.end());
  return disjoint_union(first, rest);
}

/// The fourteen generators of the length-78 example.
template <Field K>
std::vector<Polynomial<K>> length78_generators(const K& field) {
  std::vector<Polynomial<K>> gens;
  for (const auto& s : length78_generator_strings()) gens.push_back(parse_polynomial(s, field, xyz_ambient()));
  return gens;
}

/// True iff every generator is homogeneous for the given per-variable weight vectors.
template <CoefficientRing R>
bool multigrading_check(const std::vector<Polynomial<R>>& gens, const std::vector<std::vector<long>>& weights) {
  for (const auto& g : gens) {
    std::optional<std::vector<long>> deg;
    for (const auto& t : g.terms()) {
      std::vector<long> d(weights.empty() ? 0 : weights[0].size(), 0);
      for (std::size_t i = 0; i < t.mono.size(); ++i)
        for (std::size_t k = 0; k < d.size(); ++k) d[k] += weights[i][k] * t.mono[i];
      if (!deg) deg = d;
      else if (*deg != d) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Random sources
// ---------------------------------------------------------------------------

/// All order ideals with d elements in n variables (sorted, deterministic).
std::vector<OrderIdeal> enumerate_order_ideals(std::size_t nvars, std::size_t d);

/// Random order ideal of size d in n variables, grown by adding random corners.
OrderIdeal random_order_ideal(std::size_t nvars, std::size_t d, Rng& rng);

/// Random triangular automorphism x_i -> x_i + h_i(x_{i+1}, ..., x_n) with
/// h_i in m^2, applied to the generators of J_N; resampled until N is a
/// basis of the quotient. The result is a marked basis on N.
template <Field K>
MarkedSet<K> random_marked_basis(const K& field, const OrderIdeal& N, Rng& rng, int max_tries = 64) {
  const std::size_t n = N.nvars();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  AmbientPtr amb = n == 3 ? xyz_ambient() : make_ambient(names);
  const auto J = complement_ideal(N);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Polynomial<K>> images;
    for (std::size_t i = 0; i < n; ++i) {
      auto img = Polynomial<K>::variable(field, amb, i);
      if (i + 1 < n) {
        std::vector<typename Polynomial<K>::Term> terms;
        for (unsigned d = 2; d <= 3; ++d)
          for (const auto& m : monomials_of_degree(n, d)) {
            if (m.max_var() <= static_cast<int>(i) || rng.uniform(0, 2) != 0) continue;
            auto c = field.from_rational(rng.rational(3));
            terms.push_back({m, c});
          }
        img = img + Polynomial<K>::from_terms(field, amb, std::move(terms));
      }
      images.push_back(std::move(img));
    }
    std::vector<Polynomial<K>> gens;
    for (const auto& g : J.generators()) gens.push_back(substitute<K>(Polynomial<K>::monomial(field, amb, g), images));
    try {
      return marked_basis_from_generators(gens, N);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotComplementary) throw;
    }
  }
  fail(ErrorCode::Internal, "could not sample a marked basis on the order ideal");
}

/// Random b = (b1, ..., b5) with small rational entries.
Params5 random_params(Rng& rng, long num_bound = 9, long den_bound = 4);

}  // namespace hilb
