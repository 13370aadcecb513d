#pragma once

// Plain Buchberger algorithm: an independent oracle for normal forms,
// membership, ideal equality, intersections and colength.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilb/monomial_ideal.hpp"
#include "hilb/polynomial.hpp"

namespace hilb {

struct TermOrder {
  enum class Kind { Lex, DegRevLex, Elimination };
  Kind kind = Kind::DegRevLex;
  /// Elimination: the first `block` variables form the eliminated block;
  /// each block is compared by degrevlex, the eliminated one first.
  std::size_t block = 0;

  static TermOrder lex() { return {Kind::Lex, 0}; }
  static TermOrder degrevlex() { return {Kind::DegRevLex, 0}; }
  static TermOrder elimination(std::size_t block) { return {Kind::Elimination, block}; }

  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::DegRevLex:
        return degrevlex_compare(a, b);
      case Kind::Elimination: {
        Monomial ha(a.size()), hb(b.size()), ta(a.size()), tb(b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          (i < block ? ha : ta)[i] = a[i];
          (i < block ? hb : tb)[i] = b[i];
        }
        int c = degrevlex_compare(ha, hb);
        return c != 0 ? c : degrevlex_compare(ta, tb);
      }
    }
    return 0;
  }
  bool operator==(const TermOrder&) const = default;
};

template <Field K>
struct GroebnerBasis {
  std::vector<Polynomial<K>> generators;  // monic, sorted by leading monomial (descending)
  std::vector<Monomial> leading;          // parallel to generators
  TermOrder order;
  bool reduced = true;
};

namespace detail {

/// Term list sorted descending in a given term order.
template <Field K>
class OrderedPoly {
 public:
  using Elem = typename K::Element;
  using Term = std::pair<Monomial, Elem>;

  std::vector<Term> terms;

  bool zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().first; }
  const Elem& lc() const { return terms.front().second; }
};

template <Field K>
class Engine {
 public:
  using OP = OrderedPoly<K>;
  using Elem = typename K::Element;

  Engine(K field, TermOrder order) : field_(std::move(field)), order_(order) {}

  OP from_poly(const Polynomial<K>& p) const {
    OP out;
    for (const auto& t : p.terms()) out.terms.emplace_back(t.mono, t.coeff);
    std::sort(out.terms.begin(), out.terms.end(),
              [&](const auto& a, const auto& b) { return order_.compare(a.first, b.first) > 0; });
    return out;
  }
  Polynomial<K> to_poly(const OP& p, const AmbientPtr& amb) const {
    std::vector<typename Polynomial<K>::Term> t;
    for (const auto& [m, c] : p.terms) t.push_back({m, c});
    return Polynomial<K>::from_terms(field_, amb, std::move(t));
  }

  /// a - c * m * b
  OP sub_mul(const OP& a, const Elem& c, const Monomial& m, const OP& b) const {
    OP r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
      int cmp;
      Monomial bm;
      if (j < b.terms.size()) bm = b.terms[j].first * m;
      if (i == a.terms.size()) cmp = -1;
      else if (j == b.terms.size()) cmp = 1;
      else cmp = order_.compare(a.terms[i].first, bm);
      if (cmp > 0) {
        r.terms.push_back(a.terms[i++]);
      } else if (cmp < 0) {
        r.terms.emplace_back(bm, field_.neg(field_.mul(c, b.terms[j].second)));
        ++j;
      } else {
        auto v = field_.sub(a.terms[i].second, field_.mul(c, b.terms[j].second));
        if (!field_.is_zero(v)) r.terms.emplace_back(bm, std::move(v));
        ++i;
        ++j;
      }
    }
    return r;
  }

  void make_monic(OP& p) const {
    if (p.zero()) return;
    auto inv = field_.inv(p.lc());
    for (auto& t : p.terms) t.second = field_.mul(t.second, inv);
  }

  /// Full normal form of p modulo G (G monic).
  OP normal_form(OP p, const std::vector<OP>& G) const {
    OP rem;
    while (!p.zero()) {
      const Monomial lm = p.lm();
      bool reduced = false;
      for (const auto& g : G) {
        if (!g.lm().divides(lm)) continue;
        p = sub_mul(p, p.lc(), lm / g.lm(), g);
        reduced = true;
        break;
      }
      if (!reduced) {
        rem.terms.push_back(p.terms.front());
        p.terms.erase(p.terms.begin());
      }
    }
    return rem;
  }

  OP spoly(const OP& f, const OP& g) const {
    Monomial l = f.lm().lcm(g.lm());
    OP a = sub_mul(OP{}, field_.neg(field_.one()), l / f.lm(), f);
    return sub_mul(a, field_.one(), l / g.lm(), g);
  }

  std::vector<OP> buchberger(std::vector<OP> input) const {
    std::vector<OP> G;
    struct Pair {
      std::size_t i, j;
      Monomial lcm;
    };
    std::vector<Pair> pairs;
    auto in_queue = [&](std::size_t a, std::size_t b) {
      if (a > b) std::swap(a, b);
      return std::any_of(pairs.begin(), pairs.end(), [&](const Pair& p) { return p.i == a && p.j == b; });
    };
    auto add = [&](OP f) {
      make_monic(f);
      G.push_back(std::move(f));
      std::size_t k = G.size() - 1;
      for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, G[i].lm().lcm(G[k].lm())});
    };
    for (auto& f : input) {
      f = normal_form(std::move(f), G);
      if (!f.zero()) add(std::move(f));
    }
    while (!pairs.empty()) {
      // normal selection: smallest lcm, then earliest pair
      auto best = pairs.begin();
      for (auto it = pairs.begin(); it != pairs.end(); ++it) {
        int c = order_.compare(it->lcm, best->lcm);
        if (c < 0 || (c == 0 && std::make_pair(it->i, it->j) < std::make_pair(best->i, best->j))) best = it;
      }
      Pair p = *best;
      pairs.erase(best);
      // first criterion: coprime leading monomials
      if (G[p.i].lm().coprime(G[p.j].lm())) continue;
      // second criterion: some g_k with lm dividing the lcm whose pairs are already done
      bool skip = false;
      for (std::size_t k = 0; k < G.size() && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        if (G[k].lm().divides(p.lcm) && !in_queue(p.i, k) && !in_queue(p.j, k)) skip = true;
      }
      if (skip) continue;
      OP h = normal_form(spoly(G[p.i], G[p.j]), G);
      if (!h.zero()) add(std::move(h));
    }
    // minimalize and interreduce
    std::vector<OP> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
        if (i == j || !G[j].lm().divides(G[i].lm())) continue;
        redundant = !(G[j].lm() == G[i].lm()) || j < i;
      }
      if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<OP> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<OP> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      OP head;
      head.terms.push_back(minimal[i].terms.front());
      OP tail;
      tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
      OP r = normal_form(std::move(tail), others);
      head.terms.insert(head.terms.end(), r.terms.begin(), r.terms.end());
      reduced.push_back(std::move(head));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const OP& a, const OP& b) { return order_.compare(a.lm(), b.lm()) > 0; });
    return reduced;
  }

  const K& field() const { return field_; }
  const TermOrder& order() const { return order_; }

 private:
  K field_;
  TermOrder order_;
};

}  // namespace detail

template <Field K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens, const TermOrder& order) {
  if (gens.empty()) fail(ErrorCode::InvalidArgument, "buchberger needs at least one generator");
  const auto& field = gens.front().ring();
  const auto& amb = gens.front().ambient();
  for (const auto& g : gens) gens.front().check_compatible(g);
  detail::Engine<K> eng(field, order);
  std::vector<detail::OrderedPoly<K>> in;
  for (const auto& g : gens)
    if (!g.is_zero()) in.push_back(eng.from_poly(g));
  auto G = eng.buchberger(std::move(in));
  GroebnerBasis<K> out;
  out.order = order;
  for (const auto& g : G) {
    out.leading.push_back(g.lm());
    out.generators.push_back(eng.to_poly(g, amb));
  }
  return out;
}

template <Field K>
Polynomial<K> normal_form(const Polynomial<K>& g, const GroebnerBasis<K>& G) {
  detail::Engine<K> eng(g.ring(), G.order);
  std::vector<detail::OrderedPoly<K>> basis;
  for (const auto& f : G.generators) basis.push_back(eng.from_poly(f));
  return eng.to_poly(eng.normal_form(eng.from_poly(g), basis), g.ambient());
}

/// The monomial ideal generated by the leading monomials.
template <Field K>
MonomialIdeal initial_ideal(const GroebnerBasis<K>& G, std::size_t nvars) {
  return MonomialIdeal::from_generators(nvars, G.leading);
}

template <Field K>
bool is_zero_dimensional(const GroebnerBasis<K>& G, std::size_t nvars) {
  for (std::size_t i = 0; i < nvars; ++i) {
    bool pure = std::any_of(G.leading.begin(), G.leading.end(),
                            [&](const Monomial& m) { return m.degree() == m[i]; });
    if (!pure) return false;
  }
  return true;
}

/// Number of standard monomials; nullopt when the quotient is infinite-dimensional.
template <Field K>
std::optional<std::size_t> oracle_colength(const std::vector<Polynomial<K>>& gens) {
  const std::size_t n = gens.front().nvars();
  auto G = buchberger(gens, TermOrder::degrevlex());
  if (!is_zero_dimensional(G, n)) return std::nullopt;
  return standard_monomials(initial_ideal(G, n))->size();
}

template <Field K>
bool membership(const Polynomial<K>& g, const GroebnerBasis<K>& G) {
  return normal_form(g, G).is_zero();
}

template <Field K>
bool membership(const Polynomial<K>& g, const std::vector<Polynomial<K>>& gens) {
  return membership(g, buchberger(gens, TermOrder::degrevlex()));
}

template <Field K>
bool ideal_equal(const std::vector<Polynomial<K>>& a, const std::vector<Polynomial<K>>& b) {
  auto Ga = buchberger(a, TermOrder::degrevlex());
  auto Gb = buchberger(b, TermOrder::degrevlex());
  // reduced bases are unique for a fixed order
  if (Ga.generators.size() != Gb.generators.size()) return false;
  for (std::size_t i = 0; i < Ga.generators.size(); ++i)
    if (!(Ga.generators[i] == Gb.generators[i])) return false;
  for (const auto& g : a)
    if (!membership(g, Gb)) return false;
  for (const auto& g : b)
    if (!membership(g, Ga)) return false;
  return true;
}

/// I ∩ J via t*I + (1 - t)*J and elimination of the auxiliary variable t.
template <Field K>
std::vector<Polynomial<K>> intersect(const std::vector<Polynomial<K>>& a, const std::vector<Polynomial<K>>& b) {
  if (a.empty() || b.empty()) fail(ErrorCode::InvalidArgument, "intersect needs generators on both sides");
  const auto& field = a.front().ring();
  const auto& amb = a.front().ambient();
  const std::size_t n = amb->size();
  std::string aux = "aux";
  while (amb->index_of(aux) >= 0) aux += "_";
  std::vector<std::string> names{aux};
  names.insert(names.end(), amb->names.begin(), amb->names.end());
  auto big = make_ambient(names);
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  auto t = Polynomial<K>::variable(field, big, 0);
  auto one_minus_t = Polynomial<K>::constant(field, big, field.one()) - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a) gens.push_back(t * f.embed(big, shift));
  for (const auto& g : b) gens.push_back(one_minus_t * g.embed(big, shift));
  auto G = buchberger(gens, TermOrder::elimination(1));
  std::vector<Polynomial<K>> out;
  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) back[i + 1] = i;
  for (std::size_t k = 0; k < G.generators.size(); ++k) {
    if (G.leading[k][0] != 0) continue;
    std::vector<typename Polynomial<K>::Term> terms;
    for (const auto& tm : G.generators[k].terms()) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = tm.mono[i + 1];
      terms.push_back({m, tm.coeff});
    }
    out.push_back(Polynomial<K>::from_terms(field, amb, std::move(terms)));
  }
  if (out.empty()) out.push_back(Polynomial<K>(field, amb));
  return out;
}

/// True iff the ideal contains the bound-th power of the maximal ideal of the point
/// and has positive colength, i.e. it is supported exactly at the point.
template <Field K>
bool support_check(const std::vector<Polynomial<K>>& gens, const std::vector<typename K::Element>& point,
                   unsigned bound) {
  const auto& field = gens.front().ring();
  const auto& amb = gens.front().ambient();
  const std::size_t n = amb->size();
  if (point.size() != n) fail(ErrorCode::AmbientMismatch, "point has the wrong number of coordinates");
  auto G = buchberger(gens, TermOrder::degrevlex());
  if (!is_zero_dimensional(G, n)) fail(ErrorCode::NotZeroDimensional, "ideal is not zero-dimensional");
  if (!standard_monomials(initial_ideal(G, n))->size()) return false;
  std::vector<Polynomial<K>> shifted;
  for (std::size_t i = 0; i < n; ++i)
    shifted.push_back(Polynomial<K>::variable(field, amb, i) - Polynomial<K>::constant(field, amb, point[i]));
  for (const auto& m : monomials_of_degree(n, bound)) {
    auto p = Polynomial<K>::constant(field, amb, field.one());
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned e = 0; e < m[i]; ++e) p = p * shifted[i];
    if (!membership(p, G)) return false;
  }
  return true;
}

}  // namespace hilb
