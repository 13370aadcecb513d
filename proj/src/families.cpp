#include "hilb/families.hpp"

#include <set>

namespace hilb {

const AmbientPtr& xyz_ambient() {
  static const AmbientPtr amb = make_ambient({"x", "y", "z"});
  return amb;
}

const OrderIdeal& counterexample_order_ideal() {
  static const OrderIdeal N = [] {
    std::vector<Monomial> m;
    for (const char* s : {"y^2*z", "y*z^2", "z^3", "x*y", "y^2", "x*z", "y*z", "z^2", "x", "y", "z", "1"})
      m.push_back(parse_monomial(s, *xyz_ambient()));
    return OrderIdeal::make(3, std::move(m));
  }();
  return N;
}

mpq_class discriminant_B(const Params5& b) {
  const auto& [b1, b2, b3, b4, b5] = b;
  return b3 * b4 * b4 * b4 - b2 * b4 * b4 * b5 + b1 * b4 * b5 * b5 - b5 * b5 * b5;
}

mpq_class discriminant_B_factored(const Params5& b) {
  const auto& [b1, b2, b3, b4, b5] = b;
  return b4 * b4 * (b3 * b4 - b2 * b5) + b5 * b5 * (b1 * b4 - b5);
}

TangentStratum stratum_of(const Params5& b) {
  if (sgn(b[3]) == 0 && sgn(b[4]) == 0) return TangentStratum::Homogeneous;
  if (sgn(discriminant_B(b)) == 0) return TangentStratum::DiscriminantZero;
  return TangentStratum::Generic;
}

std::size_t expected_tangent_dimension(TangentStratum s) {
  switch (s) {
    case TangentStratum::Homogeneous: return 54;
    case TangentStratum::DiscriminantZero: return 48;
    case TangentStratum::Generic: return 45;
  }
  return 0;
}

std::array<std::size_t, 3> chart_variables(char chart) {
  switch (chart) {
    case 'x': return {0, 1, 2};
    case 'y': return {1, 0, 2};
    case 'z': return {2, 0, 1};
  }
  fail(ErrorCode::InvalidArgument, std::string("chart must be x, y or z, got '") + chart + "'");
}

const std::vector<std::string>& length78_generator_strings() {
  static const std::vector<std::string> gens{
      "y^2*z^4",
      "x^2*z^4 + z^6",
      "y^3*z^3",
      "x^3*z^3",
      "x*y^3*z^2",
      "x*y^4*z + x^3*y*z^2 - y^2*z^3",
      "x^4*y*z - z^6 + y^3*z^2",
      "x^3*y^3 - x^2*y*z^2 - y*z^4",
      "x^5*z + x^3*y^2*z + x*y*z^4 - x^2*z^3 - z^5",
      "y^6 + x^4*z^2 + x*y^2*z^3 + x*z^5",
      "x^6 - y^4*z - x*z^4",
      "y^5*z^2 + x*y*z^5",
      "x^2*y^5 + x*y*z^5 + z^7",
      "x^5*y^2 + x^3*y^2*z^2 + x*y*z^5 + x^2*y^4 - y^4*z^2 + z^6 - x*y^2*z^2",
  };
  return gens;
}

namespace {

mpq_class det3(const LinearForm& a, const LinearForm& b, const LinearForm& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Polynomial<RationalField> linear(const LinearForm& f) {
  RationalField Q;
  auto p = Polynomial<RationalField>(Q, xyz_ambient());
  for (std::size_t i = 0; i < 3; ++i) p = p + constant_poly(Q, f[i]) * var_poly(Q, i);
  return p;
}

std::vector<Polynomial<RationalField>> lambda_ideal(const LinearForm& l, const std::array<LinearForm, 2>& L,
                                                    const std::array<mpq_class, 6>& b) {
  RationalField Q;
  auto c = [&](const mpq_class& q) { return constant_poly(Q, q); };
  auto el = linear(l), l1 = linear(L[0]), l2 = linear(L[1]);
  std::vector<Polynomial<RationalField>> lin{el, l1 * l1, l1 * l2, l2 * l2};
  std::vector<Polynomial<RationalField>> gens;
  for (std::size_t i = 0; i < lin.size(); ++i)
    for (std::size_t j = i; j < lin.size(); ++j) gens.push_back(lin[i] * lin[j]);
  gens.push_back(c(b[0]) * l1.pow(3) + c(b[1]) * l1 * l1 * l2 + c(b[2]) * l1 * l2 * l2 + c(b[3]) * l2.pow(3) +
                 c(b[4]) * el * l1 + c(b[5]) * el * l2);
  return gens;
}

// Coordinates of f in the basis (e0, e1, e2), by Cramer's rule.
std::array<mpq_class, 3> solve3(const LinearForm& e0, const LinearForm& e1, const LinearForm& e2, const LinearForm& f) {
  const mpq_class d = det3(e0, e1, e2);
  return {det3(f, e1, e2) / d, det3(e0, f, e2) / d, det3(e0, e1, f) / d};
}

}  // namespace

bool lambda_invariance_check(const LinearForm& l, const std::array<LinearForm, 2>& L,
                             const std::array<LinearForm, 2>& Lprime, const std::array<mpq_class, 6>& b) {
  if (std::all_of(b.begin(), b.end(), [](const mpq_class& q) { return sgn(q) == 0; }))
    fail(ErrorCode::ZeroParameters, "v must be nonzero: all b vanish");
  if (sgn(det3(l, L[0], L[1])) == 0) fail(ErrorCode::DegenerateComplement, "L does not complement <l>");
  if (sgn(det3(l, Lprime[0], Lprime[1])) == 0) fail(ErrorCode::DegenerateComplement, "L' does not complement <l>");
  // the basis of L' congruent to (l1, l2) modulo l
  std::array<LinearForm, 2> M;
  for (std::size_t i = 0; i < 2; ++i) {
    auto co = solve3(l, Lprime[0], Lprime[1], L[i]);
    for (std::size_t k = 0; k < 3; ++k) M[i][k] = co[1] * Lprime[0][k] + co[2] * Lprime[1][k];
  }
  return ideal_equal(lambda_ideal(l, L, b), lambda_ideal(l, M, b));
}

std::array<std::array<mpq_class, 3>, 4> smoothing_component_supports(const Params5& b, const mpq_class& t) {
  const auto& [b1, b2, b3, b4, b5] = b;
  (void)b1;
  const mpq_class B = discriminant_B(b);
  if (sgn(B) == 0) fail(ErrorCode::DiscriminantZero, "supports need B != 0");
  return {{{b4 * t * t, 0, 0}, {b4 * b4 * b4 * (b3 * b4 - b2 * b5) / B * t * t, 0, 0}, {0, b4 * t, 0}, {0, -b4 * t, 0}}};
}

namespace {

std::vector<Monomial> corners(const std::set<Monomial, DegRevLexGreater>& N, std::size_t nvars) {
  std::set<Monomial, DegRevLexGreater> out;
  if (N.empty()) {
    out.insert(Monomial(nvars));
  } else {
    for (const auto& m : N)
      for (std::size_t i = 0; i < nvars; ++i) {
        Monomial c = m.times_var(i);
        if (N.count(c)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < nvars && ok; ++j) {
          if (!c[j]) continue;
          Monomial d = c;
          --d[j];
          ok = N.count(d) != 0;
        }
        if (ok) out.insert(c);
      }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<OrderIdeal> enumerate_order_ideals(std::size_t nvars, std::size_t d) {
  using Key = std::set<Monomial, DegRevLexGreater>;
  auto less = [](const Key& a, const Key& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), DegRevLexGreater{});
  };
  std::set<Key, decltype(less)> level(less);
  level.insert(Key{});
  for (std::size_t k = 0; k < d; ++k) {
    std::set<Key, decltype(less)> next(less);
    for (const auto& N : level)
      for (const auto& c : corners(N, nvars)) {
        Key M = N;
        M.insert(c);
        next.insert(std::move(M));
      }
    level = std::move(next);
  }
  std::vector<OrderIdeal> out;
  for (const auto& N : level) out.push_back(OrderIdeal::make(nvars, {N.begin(), N.end()}));
  return out;
}

OrderIdeal random_order_ideal(std::size_t nvars, std::size_t d, Rng& rng) {
  std::set<Monomial, DegRevLexGreater> N;
  for (std::size_t k = 0; k < d; ++k) {
    auto c = corners(N, nvars);
    N.insert(c[rng.uniform(0, c.size() - 1)]);
  }
  return OrderIdeal::make(nvars, {N.begin(), N.end()});
}

Params5 random_params(Rng& rng, long num_bound, long den_bound) {
  Params5 b;
  for (auto& q : b) q = rng.rational(num_bound, den_bound);
  return b;
}

}  // namespace hilb
