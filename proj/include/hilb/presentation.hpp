#pragma once

// Marked bases of zero-dimensional ideals given by generators.

#include <optional>
#include <vector>

#include "hilb/groebner.hpp"
#include "hilb/linalg.hpp"
#include "hilb/marked.hpp"
#include "hilb/random.hpp"
#include "hilb/substitution.hpp"

namespace hilb {

/// The J_N-marked basis of (gens): f_a = x^a - (the representative of x^a in <N>).
/// N defaults to the degrevlex standard monomials. A user-supplied N must be
/// an order ideal whose monomials form a basis of the quotient.
template <Field K>
MarkedSet<K> marked_basis_from_generators(const std::vector<Polynomial<K>>& gens,
                                          const std::optional<OrderIdeal>& order_ideal = std::nullopt) {
  if (gens.empty()) fail(ErrorCode::InvalidArgument, "no generators");
  const K& field = gens.front().ring();
  const auto& amb = gens.front().ambient();
  const std::size_t n = amb->size();
  auto G = buchberger(gens, TermOrder::degrevlex());
  if (!is_zero_dimensional(G, n)) fail(ErrorCode::NotZeroDimensional, "ideal is not zero-dimensional");
  OrderIdeal S = *standard_monomials(initial_ideal(G, n));
  OrderIdeal N = order_ideal ? *order_ideal : S;
  if (N.nvars() != n) fail(ErrorCode::AmbientMismatch, "order ideal has the wrong variable count");
  if (N.size() != S.size()) fail(ErrorCode::NotComplementary, "order ideal size differs from the colength");
  const auto P = pommaret_basis(complement_ideal(N));

  auto nf_coords = [&](const Monomial& m) {
    return coordinates(normal_form(Polynomial<K>::monomial(field, amb, m), G), S);
  };
  std::vector<std::pair<Monomial, Polynomial<K>>> tails;
  if (N == S) {
    for (const auto& h : P.generators()) tails.emplace_back(h, -normal_form(Polynomial<K>::monomial(field, amb, h), G));
    return MarkedSet<K>::make(field, amb, std::move(N), std::move(tails));
  }
  // express normal forms in the basis N: solve A c = b with A's columns NF(N[j])
  const std::size_t d = S.size();
  std::vector<std::vector<typename K::Element>> A(d, std::vector<typename K::Element>(d, field.zero()));
  for (std::size_t j = 0; j < d; ++j) {
    auto v = nf_coords(N[j]);
    for (std::size_t r = 0; r < d; ++r) A[r][j] = v[r];
  }
  std::vector<std::vector<std::vector<typename K::Element>>> rhs;
  for (const auto& h : P.generators()) {
    auto b = nf_coords(h);
    // augmented system [A | b]
    auto M = A;
    for (std::size_t r = 0; r < d; ++r) M[r].push_back(b[r]);
    auto R = rref(field, std::move(M), d + 1);
    if (R.pivots.size() != d || (d > 0 && R.pivots.back() >= d))
      fail(ErrorCode::NotComplementary, "order ideal is not a basis of the quotient");
    std::vector<typename Polynomial<K>::Term> terms;
    for (std::size_t i = 0; i < d; ++i) terms.push_back({N[R.pivots[i]], field.neg(R.rows[i][d])});
    tails.emplace_back(h, Polynomial<K>::from_terms(field, amb, std::move(terms)));
  }
  return MarkedSet<K>::make(field, amb, std::move(N), std::move(tails));
}

/// marked_basis_from_generators on the degrevlex standard monomials; on
/// NotQuasiStable the generators are moved by seeded random linear changes
/// (up to max_changes). Throws QuasiStableNotFound when all attempts fail.
template <Field K>
MarkedSet<K> marked_basis_any_coordinates(const std::vector<Polynomial<K>>& gens, Rng& rng, int max_changes = 8) {
  if (gens.empty()) fail(ErrorCode::InvalidArgument, "no generators");
  const K& field = gens.front().ring();
  const std::size_t n = gens.front().nvars();
  auto current = gens;
  for (int attempt = 0;; ++attempt) {
    try {
      return marked_basis_from_generators(current);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotQuasiStable) throw;
    }
    if (attempt == max_changes) fail(ErrorCode::QuasiStableNotFound, "no quasi-stable initial ideal found");
    FieldMatrix<K> M;
    do {
      M.assign(n, std::vector<typename K::Element>(n, field.zero()));
      for (auto& row : M)
        for (auto& c : row) c = field.from_rational(rng.rational(5));
    } while (!is_invertible(field, M));
    current.clear();
    for (const auto& g : gens) current.push_back(apply_linear_change(g, M));
  }
}

}  // namespace hilb
