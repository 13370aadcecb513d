#pragma once

// Marked sets over a Pommaret basis, marked reduction, the marked-basis
// criterion and the quotient algebra R/(F) on the basis N.

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hilb/monomial_ideal.hpp"
#include "hilb/polynomial.hpp"
#include "hilb/random.hpp"

namespace hilb {

template <CoefficientRing R>
class MarkedSet {
 public:
  using Poly = Polynomial<R>;
  using Coeff = typename R::Element;

  /// Heads must be exactly the Pommaret basis of J_N; tails must lie in <N>.
  static MarkedSet make(const R& ring, AmbientPtr amb, OrderIdeal N, std::vector<std::pair<Monomial, Poly>> tails) {
    if (N.nvars() != amb->size()) fail(ErrorCode::AmbientMismatch, "order ideal and ring have different variable counts");
    MarkedSet F(ring, amb, std::move(N));
    const auto& heads = F.P_.generators();
    if (tails.size() != heads.size()) fail(ErrorCode::HeadMismatch, "heads do not match the Pommaret basis of J_N");
    F.tails_.assign(heads.size(), Poly(ring, amb));
    std::vector<bool> seen(heads.size(), false);
    for (auto& [head, tail] : tails) {
      auto it = F.head_index_.find(head);
      if (it == F.head_index_.end() || seen[it->second])
        fail(ErrorCode::HeadMismatch, "head " + monomial_to_string(head, *amb) + " is not a Pommaret generator of J_N");
      if (!same_ambient(tail.ambient(), amb)) fail(ErrorCode::AmbientMismatch, "tail lives in another ring");
      for (const auto& t : tail.terms())
        if (!F.N_.contains(t.mono))
          fail(ErrorCode::TailOutsideN, "tail monomial " + monomial_to_string(t.mono, *amb) + " is not in N");
      seen[it->second] = true;
      F.tails_[it->second] = std::move(tail);
    }
    return F;
  }

  /// Splits each polynomial into its unique monic monomial outside N and a tail.
  static MarkedSet from_polynomials(const R& ring, AmbientPtr amb, OrderIdeal N, const std::vector<Poly>& polys) {
    std::vector<std::pair<Monomial, Poly>> tails;
    for (const auto& p : polys) {
      std::optional<Monomial> head;
      std::vector<typename Poly::Term> rest;
      for (const auto& t : p.terms()) {
        if (N.contains(t.mono)) {
          rest.push_back(t);
          continue;
        }
        if (head || !ring.equal(t.coeff, ring.one()))
          fail(ErrorCode::TailOutsideN, "polynomial " + to_string(p) + " has no single monic head outside N");
        head = t.mono;
      }
      if (!head) fail(ErrorCode::HeadMismatch, "polynomial " + to_string(p) + " lies in <N>");
      tails.emplace_back(*head, Poly::from_terms(ring, amb, std::move(rest)));
    }
    return make(ring, std::move(amb), std::move(N), std::move(tails));
  }

  /// The monomial marked set: every tail is zero.
  static MarkedSet monomial(const R& ring, AmbientPtr amb, OrderIdeal N) {
    MarkedSet F(ring, amb, std::move(N));
    F.tails_.assign(F.P_.size(), Poly(ring, amb));
    return F;
  }

  const R& ring() const { return ring_; }
  const AmbientPtr& ambient() const { return amb_; }
  const OrderIdeal& order_ideal() const { return N_; }
  const PommaretBasis& pommaret() const { return P_; }
  std::size_t size() const { return P_.size(); }
  const Monomial& head(std::size_t i) const { return P_.generators()[i]; }
  const Poly& tail(std::size_t i) const { return tails_[i]; }
  int head_index(const Monomial& m) const {
    auto it = head_index_.find(m);
    return it == head_index_.end() ? -1 : static_cast<int>(it->second);
  }
  Poly polynomial(std::size_t i) const { return Poly::monomial(ring_, amb_, head(i)) + tails_[i]; }
  std::vector<Poly> polynomials() const {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(polynomial(i));
    return out;
  }
  unsigned max_degree() const {
    unsigned d = std::max(P_.max_degree(), N_.max_degree());
    return d;
  }

  /// Same heads, tails mapped coefficient-wise into another ring.
  template <CoefficientRing S, class Fn>
  MarkedSet<S> map_coefficients(const S& target, Fn&& fn) const {
    std::vector<std::pair<Monomial, Polynomial<S>>> tails;
    for (std::size_t i = 0; i < size(); ++i) tails.emplace_back(head(i), tails_[i].map_coefficients(target, fn));
    return MarkedSet<S>::make(target, amb_, N_, std::move(tails));
  }

  /// Replaces the tails, keeping N and the heads (internal use).
  MarkedSet with_tails(std::vector<Poly> tails) const {
    MarkedSet F = *this;
    F.tails_ = std::move(tails);
    return F;
  }

 private:
  template <CoefficientRing> friend class MarkedSet;

  MarkedSet(const R& ring, AmbientPtr amb, OrderIdeal N)
      : ring_(ring), amb_(std::move(amb)), N_(std::move(N)), P_(pommaret_basis(complement_ideal(N_))) {
    for (std::size_t i = 0; i < P_.size(); ++i) head_index_.emplace(P_.generators()[i], i);
  }

  R ring_;
  AmbientPtr amb_;
  OrderIdeal N_;
  PommaretBasis P_;
  std::vector<Poly> tails_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> head_index_;
};

template <class Coeff>
struct ReductionStep {
  std::size_t head;
  Monomial multiplier;
  Coeff coeff;
};

struct ReduceOptions {
  /// false: always reduce the degrevlex-largest reducible term.
  /// true: pick a reducible term at random (seeded); used to probe strategy independence.
  bool randomized = false;
  std::uint64_t seed = 0;
};

/// Marked normal form of g in <N>. Optionally records every step
/// g -> g - c * x^beta * f_alpha.
template <CoefficientRing R>
Polynomial<R> reduce(const Polynomial<R>& g, const MarkedSet<R>& F,
                     std::vector<ReductionStep<typename R::Element>>* steps = nullptr, const ReduceOptions& opts = {}) {
  using Coeff = typename R::Element;
  const auto& ring = F.ring();
  if (!same_ambient(g.ambient(), F.ambient())) fail(ErrorCode::AmbientMismatch, "reduce: different rings");
  const auto& N = F.order_ideal();
  const auto& P = F.pommaret();

  std::map<Monomial, Coeff, DegRevLexGreater> pending, normal;
  auto add_to = [&](std::map<Monomial, Coeff, DegRevLexGreater>& map, const Monomial& m, const Coeff& c) {
    auto [it, inserted] = map.try_emplace(m, c);
    if (!inserted) {
      it->second = ring.add(it->second, c);
      if (ring.is_zero(it->second)) map.erase(it);
    }
  };
  for (const auto& t : g.terms()) (N.contains(t.mono) ? normal : pending).emplace(t.mono, t.coeff);

  unsigned maxdeg = std::max(g.total_degree(), F.max_degree());
  for (std::size_t i = 0; i < F.size(); ++i) maxdeg = std::max(maxdeg, F.tail(i).total_degree());
  const std::size_t budget = std::max<std::size_t>(1, g.size()) * std::max<std::size_t>(1, N.size()) *
                             std::max<std::size_t>(1, static_cast<std::size_t>(maxdeg) * maxdeg) * 100;
  Rng rng(opts.seed);
  std::size_t count = 0;
  while (!pending.empty()) {
    if (++count > budget) fail(ErrorCode::NonTermination, "marked reduction exceeded its step budget");
    auto it = pending.begin();
    if (opts.randomized && pending.size() > 1)
      std::advance(it, static_cast<std::ptrdiff_t>(rng.uniform(0, pending.size() - 1)));
    const Monomial m = it->first;
    const Coeff c = it->second;
    pending.erase(it);
    int a = P.find_cone(m);
    if (a < 0) fail(ErrorCode::Internal, "term outside N lies in no Pommaret cone");
    const auto ai = static_cast<std::size_t>(a);
    const Monomial beta = m / F.head(ai);
    if (steps) steps->push_back({ai, beta, c});
    const Coeff negc = ring.neg(c);
    for (const auto& t : F.tail(ai).terms()) {
      Monomial mm = t.mono * beta;
      Coeff cc = ring.mul(negc, t.coeff);
      if (ring.is_zero(cc)) continue;
      add_to(N.contains(mm) ? normal : pending, mm, cc);
    }
  }
  std::vector<typename Polynomial<R>::Term> terms;
  terms.reserve(normal.size());
  for (auto& [m, c] : normal) terms.push_back({m, c});
  return Polynomial<R>::from_terms(ring, F.ambient(), std::move(terms));
}

/// Pairs (x_i, f_alpha) with x_i > min(x^alpha), ordered by head (degrevlex
/// descending) and then by variable (largest first).
struct CriterionPair {
  std::size_t var;
  std::size_t head;
};

template <CoefficientRing R>
std::vector<CriterionPair> criterion_pairs(const MarkedSet<R>& F) {
  std::vector<CriterionPair> out;
  for (std::size_t a = 0; a < F.size(); ++a) {
    int mv = F.head(a).min_var();
    for (int i = 0; i < mv; ++i) out.push_back({static_cast<std::size_t>(i), a});
  }
  return out;
}

template <CoefficientRing R>
struct BasisVerdict {
  bool is_basis = true;
  /// First failing pair and its nonzero normal form.
  std::optional<CriterionPair> pair;
  std::optional<Polynomial<R>> normal_form;
};

template <CoefficientRing R>
BasisVerdict<R> is_marked_basis(const MarkedSet<R>& F, const ReduceOptions& opts = {}) {
  BasisVerdict<R> v;
  for (const auto& pr : criterion_pairs(F)) {
    auto g = F.polynomial(pr.head).mul_term(Monomial::variable(F.ambient()->size(), pr.var), F.ring().one());
    auto h = reduce(g, F, nullptr, opts);
    if (!h.is_zero()) {
      v.is_basis = false;
      v.pair = pr;
      v.normal_form = std::move(h);
      return v;
    }
  }
  return v;
}

/// Coordinates of a polynomial supported on N, in the order of N.
template <CoefficientRing R>
std::vector<typename R::Element> coordinates(const Polynomial<R>& h, const OrderIdeal& N) {
  std::vector<typename R::Element> v(N.size(), h.ring().zero());
  for (const auto& t : h.terms()) {
    int k = N.index_of(t.mono);
    if (k < 0) fail(ErrorCode::TailOutsideN, "polynomial is not supported on N");
    v[static_cast<std::size_t>(k)] = t.coeff;
  }
  return v;
}

/// R/(F) as a free module on N, with the multiplication matrices
/// mult[i][r][c] = coefficient of N[r] in x_i * N[c] mod F.
template <CoefficientRing R>
struct QuotientAlgebra {
  OrderIdeal N;
  std::vector<std::vector<std::vector<typename R::Element>>> mult;
};

template <CoefficientRing R>
QuotientAlgebra<R> quotient_algebra(const MarkedSet<R>& F) {
  if (!is_marked_basis(F).is_basis) fail(ErrorCode::NotABasis, "marked set is not a marked basis");
  const auto& N = F.order_ideal();
  const auto& ring = F.ring();
  const std::size_t n = F.ambient()->size();
  QuotientAlgebra<R> Q{N, {}};
  Q.mult.assign(n, std::vector<std::vector<typename R::Element>>(N.size(),
                                                                   std::vector<typename R::Element>(N.size(), ring.zero())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < N.size(); ++c) {
      auto h = reduce(Polynomial<R>::monomial(ring, F.ambient(), N[c].times_var(i)), F);
      auto col = coordinates(h, N);
      for (std::size_t r = 0; r < N.size(); ++r) Q.mult[i][r][c] = col[r];
    }
  return Q;
}

template <CoefficientRing R>
bool matrices_commute(const R& ring, const QuotientAlgebra<R>& Q) {
  const std::size_t d = Q.N.size();
  auto product = [&](const auto& A, const auto& B) {
    std::vector<std::vector<typename R::Element>> C(d, std::vector<typename R::Element>(d, ring.zero()));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t k = 0; k < d; ++k) {
        if (ring.is_zero(A[r][k])) continue;
        for (std::size_t c = 0; c < d; ++c) C[r][c] = ring.add(C[r][c], ring.mul(A[r][k], B[k][c]));
      }
    return C;
  };
  for (std::size_t i = 0; i < Q.mult.size(); ++i)
    for (std::size_t j = i + 1; j < Q.mult.size(); ++j) {
      auto AB = product(Q.mult[i], Q.mult[j]);
      auto BA = product(Q.mult[j], Q.mult[i]);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          if (!ring.equal(AB[r][c], BA[r][c])) return false;
    }
  return true;
}

template <CoefficientRing R>
std::size_t colength(const MarkedSet<R>& F) {
  if (!is_marked_basis(F).is_basis) fail(ErrorCode::NotABasis, "marked set is not a marked basis");
  return F.order_ideal().size();
}

/// Normal forms of arbitrary monomials as coordinate vectors over N, built
/// from the multiplication matrices and memoized. Requires a marked basis.
template <CoefficientRing R>
class MonomialNormalForms {
 public:
  using Vec = std::vector<typename R::Element>;

  MonomialNormalForms(const R& ring, QuotientAlgebra<R> Q) : ring_(ring), Q_(std::move(Q)) {
    for (std::size_t k = 0; k < Q_.N.size(); ++k) {
      Vec e(Q_.N.size(), ring_.zero());
      e[k] = ring_.one();
      cache_.emplace(Q_.N[k], std::move(e));
    }
  }

  const Vec& of(const Monomial& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    // peel off the largest variable present and multiply by its matrix
    int i = m.max_var();
    Monomial rest = m;
    --rest[static_cast<std::size_t>(i)];
    Vec base = of(rest);
    const auto& M = Q_.mult[static_cast<std::size_t>(i)];
    const std::size_t d = Q_.N.size();
    Vec out(d, ring_.zero());
    for (std::size_t c = 0; c < d; ++c) {
      if (ring_.is_zero(base[c])) continue;
      for (std::size_t r = 0; r < d; ++r)
        if (!ring_.is_zero(M[r][c])) out[r] = ring_.add(out[r], ring_.mul(M[r][c], base[c]));
    }
    return cache_.emplace(m, std::move(out)).first->second;
  }

  const QuotientAlgebra<R>& algebra() const { return Q_; }

 private:
  R ring_;
  QuotientAlgebra<R> Q_;
  std::unordered_map<Monomial, Vec, MonomialHash> cache_;
};

}  // namespace hilb
