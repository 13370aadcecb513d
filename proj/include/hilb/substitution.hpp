#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hilb/polynomial.hpp"

namespace hilb {

/// p(images[0], ..., images[n-1]). Images must share a ring and ambient; the
/// result lives in the images' ambient.
template <CoefficientRing Ring>
Polynomial<Ring> substitute(const Polynomial<Ring>& p, std::span<const Polynomial<Ring>> images) {
  if (images.size() != p.nvars()) fail(ErrorCode::AmbientMismatch, "substitution needs one image per variable");
  if (images.empty()) return p;
  const auto& ring = p.ring();
  const auto& target = images[0].ambient();
  for (const auto& im : images) {
    if (!same_ambient(im.ambient(), target)) fail(ErrorCode::AmbientMismatch, "substitution images differ in ambient");
    if (!(im.ring() == ring)) fail(ErrorCode::RingMismatch, "substitution images differ in ring");
  }
  // powers[i][k] = images[i]^k, built on demand
  std::vector<std::vector<Polynomial<Ring>>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial<Ring>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial<Ring>::constant(ring, target, ring.one()));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial<Ring> acc(ring, target);
  for (const auto& t : p.terms()) {
    Polynomial<Ring> prod = Polynomial<Ring>::constant(ring, target, t.coeff);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) prod = prod * power(i, t.mono[i]);
    acc = acc + prod;
  }
  return acc;
}

/// Value of p at a point.
template <CoefficientRing Ring>
typename Ring::Element evaluate_at(const Polynomial<Ring>& p, std::span<const typename Ring::Element> point) {
  if (point.size() != p.nvars()) fail(ErrorCode::AmbientMismatch, "point has the wrong length");
  const auto& ring = p.ring();
  auto acc = ring.zero();
  for (const auto& t : p.terms()) {
    auto v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v = ring.mul(v, point[i]);
    acc = ring.add(acc, v);
  }
  return acc;
}

/// Square matrix over a field, row-major: entries[row][col].
template <Field K>
using FieldMatrix = std::vector<std::vector<typename K::Element>>;

template <Field K>
bool is_invertible(const K& field, FieldMatrix<K> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) return false;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && field.is_zero(m[piv][c])) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[c]);
    auto inv = field.inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (field.is_zero(m[r][c])) continue;
      auto f = field.mul(m[r][c], inv);
      for (std::size_t k = c; k < n; ++k) m[r][k] = field.sub(m[r][k], field.mul(f, m[c][k]));
    }
  }
  return true;
}

/// Linear change of coordinates. Column j of M lists the coefficients of the
/// linear form substituted for variable j:  x_j -> sum_i M[i][j] x_i.
/// With this convention apply(apply(p, M1), M2) == apply(p, M2 * M1).
template <Field K>
Polynomial<K> apply_linear_change(const Polynomial<K>& p, const FieldMatrix<K>& M) {
  const std::size_t n = p.nvars();
  if (M.size() != n) fail(ErrorCode::InvalidArgument, "matrix size does not match the variable count");
  if (!is_invertible(p.ring(), M)) fail(ErrorCode::SingularMatrix, "linear change of coordinates is singular");
  std::vector<Polynomial<K>> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<typename Polynomial<K>::Term> terms;
    for (std::size_t i = 0; i < n; ++i)
      if (!p.ring().is_zero(M[i][j])) terms.push_back({Monomial::variable(n, i), M[i][j]});
    images.push_back(Polynomial<K>::from_terms(p.ring(), p.ambient(), std::move(terms)));
  }
  return substitute<K>(p, images);
}

/// x_i -> x_i + c_i.
template <CoefficientRing Ring>
Polynomial<Ring> translate(const Polynomial<Ring>& p, std::span<const typename Ring::Element> c) {
  const std::size_t n = p.nvars();
  if (c.size() != n) fail(ErrorCode::AmbientMismatch, "translation vector has the wrong length");
  std::vector<Polynomial<Ring>> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(Polynomial<Ring>::variable(p.ring(), p.ambient(), i) +
                     Polynomial<Ring>::constant(p.ring(), p.ambient(), c[i]));
  return substitute<Ring>(p, images);
}

/// Evaluates the coefficient parameter of K[t] at a field value.
/// The assignment must name the ring's parameter unless p has constant coefficients.
template <Field K>
Polynomial<K> specialize(const Polynomial<UnivariatePolys<K>>& p,
                         const std::map<std::string, typename K::Element>& assignment) {
  const auto& ring = p.ring();
  auto it = assignment.find(std::string(ring.parameter_name()));
  if (it == assignment.end()) {
    for (const auto& t : p.terms())
      if (t.coeff.size() > 1)
        fail(ErrorCode::UnassignedParameter, "no value for '" + std::string(ring.parameter_name()) + "'");
    return p.map_coefficients(ring.base(), [&](const auto& c) { return c.empty() ? ring.base().zero() : c[0]; });
  }
  const auto value = it->second;
  return p.map_coefficients(ring.base(), [&](const auto& c) { return ring.evaluate(c, value); });
}

/// Substitutes values for the listed parameter variables and drops them
/// from the ambient. Every parameter that occurs in p must be assigned.
template <Field K>
Polynomial<K> specialize(const Polynomial<K>& p, const std::map<std::string, typename K::Element>& assignment,
                         const std::vector<std::string>& parameters) {
  const auto& amb = *p.ambient();
  std::vector<bool> is_param(amb.size(), false);
  for (const auto& name : parameters) {
    int v = amb.index_of(name);
    if (v < 0) fail(ErrorCode::InvalidArgument, "parameter '" + name + "' is not a variable of the ring");
    is_param[static_cast<std::size_t>(v)] = true;
  }
  for (const auto& [name, value] : assignment) {
    int v = amb.index_of(name);
    if (v < 0) fail(ErrorCode::InvalidArgument, "assigned symbol '" + name + "' is not a variable of the ring");
    is_param[static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::string> kept;
  std::vector<int> new_index(amb.size(), -1);
  for (std::size_t i = 0; i < amb.size(); ++i)
    if (!is_param[i]) {
      new_index[i] = static_cast<int>(kept.size());
      kept.push_back(amb.names[i]);
    }
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < amb.size(); ++i)
      if (is_param[i] && t.mono[i] && !assignment.count(amb.names[i]))
        fail(ErrorCode::UnassignedParameter, "no value for '" + amb.names[i] + "'");
  auto target = make_ambient(kept);
  const auto& field = p.ring();
  std::vector<typename Polynomial<K>::Term> out;
  for (const auto& t : p.terms()) {
    auto c = t.coeff;
    Monomial m(kept.size());
    for (std::size_t i = 0; i < amb.size(); ++i) {
      if (!t.mono[i]) continue;
      if (new_index[i] >= 0) {
        m[static_cast<std::size_t>(new_index[i])] = t.mono[i];
      } else {
        const auto& v = assignment.at(amb.names[i]);
        for (unsigned k = 0; k < t.mono[i]; ++k) c = field.mul(c, v);
      }
    }
    out.push_back({m, c});
  }
  return Polynomial<K>::from_terms(field, target, std::move(out));
}

}  // namespace hilb
