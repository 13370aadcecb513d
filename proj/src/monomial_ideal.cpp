#include "hilb/monomial_ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace hilb {

namespace {

void sort_desc(std::vector<Monomial>& v) { std::sort(v.begin(), v.end(), DegRevLexGreater{}); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool is_order_ideal(std::span<const Monomial> monomials) {
  std::unordered_set<Monomial, MonomialHash> set(monomials.begin(), monomials.end());
  for (const auto& m : monomials)
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      Monomial d = m;
      --d[i];
      if (!set.count(d)) return false;
    }
  return true;
}

OrderIdeal OrderIdeal::make(std::size_t nvars, std::vector<Monomial> monomials) {
  for (const auto& m : monomials)
    if (m.size() != nvars) fail(ErrorCode::InvalidOrderIdeal, "monomial with wrong variable count");
  sort_desc(monomials);
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  if (!is_order_ideal(monomials)) fail(ErrorCode::InvalidOrderIdeal, "set is not closed under division");
  OrderIdeal N;
  N.nvars_ = nvars;
  N.monos_ = std::move(monomials);
  for (std::size_t i = 0; i < N.monos_.size(); ++i) N.index_.emplace(N.monos_[i], i);
  return N;
}

unsigned OrderIdeal::max_degree() const {
  unsigned d = 0;
  for (const auto& m : monos_) d = std::max(d, m.degree());
  return d;
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t nvars, std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : degrevlex_compare(a, b) > 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    if (g.size() != nvars) fail(ErrorCode::InvalidArgument, "generator with wrong variable count");
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) minimal.push_back(g);
  }
  sort_desc(minimal);
  MonomialIdeal J;
  J.nvars_ = nvars;
  J.gens_ = std::move(minimal);
  return J;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

unsigned MonomialIdeal::max_generator_degree() const {
  unsigned d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

MonomialIdeal complement_ideal(const OrderIdeal& N) {
  const std::size_t n = N.nvars();
  if (N.size() == 0) return MonomialIdeal::from_generators(n, {Monomial(n)});
  std::vector<Monomial> gens;
  for (const auto& m : N.monomials())
    for (std::size_t i = 0; i < n; ++i) {
      Monomial c = m.times_var(i);
      if (!N.contains(c)) gens.push_back(c);
    }
  return MonomialIdeal::from_generators(n, std::move(gens));
}

std::optional<OrderIdeal> standard_monomials(const MonomialIdeal& J) {
  const std::size_t n = J.nvars();
  if (J.contains(Monomial(n))) return OrderIdeal::make(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    bool has_pure_power = std::any_of(J.generators().begin(), J.generators().end(), [&](const Monomial& g) {
      return g[i] > 0 && g.degree() == g[i];
    });
    if (!has_pure_power) return std::nullopt;
  }
  std::vector<Monomial> out;
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> queue;
  Monomial one(n);
  if (!J.contains(one)) {
    queue.push_back(one);
    seen.insert(one);
  }
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    out.push_back(m);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial c = m.times_var(i);
      if (seen.count(c) || J.contains(c)) continue;
      seen.insert(c);
      queue.push_back(c);
    }
  }
  return OrderIdeal::make(n, std::move(out));
}

bool in_pommaret_cone(const Monomial& g, const Monomial& m) {
  if (!g.divides(m)) return false;
  int min_g = g.min_var();
  if (min_g < 0) return true;
  for (int i = 0; i < min_g; ++i)
    if (m[static_cast<std::size_t>(i)] != g[static_cast<std::size_t>(i)]) return false;
  return true;
}

bool PommaretCone::contains(const Monomial& m) const { return in_pommaret_cone(generator, m); }

PommaretCone pommaret_cone(const Monomial& m) {
  if (m.is_one()) fail(ErrorCode::InvalidArgument, "the Pommaret cone of 1 is not defined");
  PommaretCone c{m, {}};
  for (std::size_t i = static_cast<std::size_t>(m.min_var()); i < m.size(); ++i) c.multipliers.push_back(i);
  return c;
}

PommaretBasis::PommaretBasis(std::vector<Monomial> gens, MonomialIdeal parent)
    : gens_(std::move(gens)), parent_(std::move(parent)) {
  sort_desc(gens_);
}

int PommaretBasis::find_cone(const Monomial& m) const {
  int best = -1;
  int best_min = -1;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!in_pommaret_cone(gens_[i], m)) continue;
    // the largest minimum variable has the smallest index
    int mv = gens_[i].min_var();
    if (best < 0 || mv < best_min) {
      best = static_cast<int>(i);
      best_min = mv;
    }
  }
  return best;
}

unsigned PommaretBasis::max_degree() const {
  unsigned d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

unsigned pommaret_degree_bound(const MonomialIdeal& J) {
  const unsigned n = static_cast<unsigned>(J.nvars());
  const unsigned D = J.max_generator_degree();
  unsigned reg_bound = D == 0 ? 0 : n * (D - 1) + 1;
  return std::max(D + n, reg_bound);
}

std::optional<PommaretBasis> pommaret_completion(const MonomialIdeal& J) {
  const unsigned bound = pommaret_degree_bound(J);
  std::vector<Monomial> basis = J.generators();
  auto covered = [&](const Monomial& m) {
    return std::any_of(basis.begin(), basis.end(), [&](const Monomial& g) { return in_pommaret_cone(g, m); });
  };
  while (true) {
    std::optional<Monomial> best;
    for (const auto& g : basis) {
      int mv = g.min_var();
      for (int i = 0; i < mv; ++i) {
        Monomial c = g.times_var(static_cast<std::size_t>(i));
        if (covered(c)) continue;
        if (!best || c.degree() < best->degree() ||
            (c.degree() == best->degree() && degrevlex_compare(c, *best) < 0))
          best = c;
      }
    }
    if (!best) break;
    if (best->degree() > bound) return std::nullopt;
    basis.push_back(*best);
  }
  // autoreduce: drop generators lying in another generator's cone
  std::vector<Monomial> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool inside = false;
    for (std::size_t j = 0; j < basis.size() && !inside; ++j)
      if (i != j && !(basis[i] == basis[j]) && in_pommaret_cone(basis[j], basis[i])) inside = true;
    if (!inside) reduced.push_back(basis[i]);
  }
  return PommaretBasis(std::move(reduced), J);
}

PommaretBasis pommaret_basis(const MonomialIdeal& J) {
  if (!standard_monomials(J)) fail(ErrorCode::InfiniteColength, "the complement order ideal is infinite");
  auto P = pommaret_completion(J);
  if (!P) fail(ErrorCode::NotQuasiStable, "Pommaret completion did not close within the degree bound");
  return *P;
}

bool is_quasi_stable(const MonomialIdeal& J) { return pommaret_completion(J).has_value(); }

bool verify_cone_partition(const PommaretBasis& P, unsigned bound) {
  const std::size_t n = P.parent().nvars();
  for (unsigned d = 0; d <= bound; ++d)
    for (const auto& m : monomials_of_degree(n, d)) {
      std::size_t hits = 0;
      for (const auto& g : P.generators())
        if (in_pommaret_cone(g, m)) ++hits;
      if (hits != (P.parent().contains(m) ? 1u : 0u)) return false;
    }
  return true;
}

std::size_t count_via_cones(const PommaretBasis& P, unsigned d) {
  std::size_t total = 0;
  for (const auto& g : P.generators()) {
    unsigned dg = g.degree();
    if (d < dg) continue;
    std::size_t k = g.is_one() ? g.size() : g.size() - static_cast<std::size_t>(g.min_var());
    // monomials of degree d - dg in k variables
    total += binomial(d - dg + k - 1, k - 1);
  }
  return total;
}

}  // namespace hilb
