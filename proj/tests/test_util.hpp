#pragma once

#include <doctest.h>

#include "hilb/families.hpp"

namespace testutil {

using namespace hilb;

inline const RationalField Q{};

inline Polynomial<RationalField> P(const std::string& s, const AmbientPtr& amb = xyz_ambient()) {
  return parse_polynomial(s, Q, amb);
}

inline Monomial M(const std::string& s, const AmbientPtr& amb = xyz_ambient()) { return parse_monomial(s, *amb); }

inline OrderIdeal order_ideal(std::initializer_list<const char*> ms, const AmbientPtr& amb = xyz_ambient()) {
  std::vector<Monomial> v;
  for (const char* s : ms) v.push_back(parse_monomial(s, *amb));
  return OrderIdeal::make(amb->size(), std::move(v));
}

inline const AmbientPtr& xy_ambient() {
  static const AmbientPtr amb = make_ambient({"x", "y"});
  return amb;
}

template <class Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an hilb::Error");
  return ErrorCode::Internal;
}

/// Random polynomial with small coefficients and degree <= maxdeg.
template <Field K>
Polynomial<K> random_poly(const K& field, const AmbientPtr& amb, Rng& rng, unsigned maxdeg, std::size_t terms) {
  std::vector<typename Polynomial<K>::Term> t;
  for (std::size_t i = 0; i < terms; ++i) {
    unsigned d = static_cast<unsigned>(rng.uniform(0, maxdeg));
    auto ms = monomials_of_degree(amb->size(), d);
    t.push_back({ms[rng.uniform(0, ms.size() - 1)], field.from_rational(rng.rational(5, field.characteristic() == 0 ? 3 : 1))});
  }
  return Polynomial<K>::from_terms(field, amb, std::move(t));
}

}  // namespace testutil
