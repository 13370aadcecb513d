#pragma once

// Tangent space of the marked family at a marked basis F: first-order
// deformations f_a + eps * sum_g T_{a,g} x^g that remain marked bases.

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "hilb/linalg.hpp"
#include "hilb/marked.hpp"

namespace hilb {

/// Columns: unknowns T_{a,g}, index a * |N| + g (heads and N in their stored order).
/// Rows: one block of |N| rows per criterion pair, in criterion_pairs order.
template <Field K>
struct TangentSystem {
  std::size_t heads = 0;
  std::size_t nsize = 0;
  std::vector<CriterionPair> pairs;
  SparseMatrix<K> matrix;

  std::size_t unknowns() const { return heads * nsize; }
  std::size_t unknown(std::size_t head, std::size_t g) const { return head * nsize + g; }
};

enum class TangentRoute {
  Auto,           // superposition up to the exact-rank threshold, linearized above it
  Superposition,  // one dual-number reduction per unknown and criterion pair
  Linearized,     // one base reduction per pair, eps-parts from normal forms of monomials
};

inline constexpr std::size_t kExactRankThreshold = 300;

namespace detail {

template <Field K>
void append_block(TangentSystem<K>& S, const K& field, const std::vector<std::vector<typename K::Element>>& block) {
  // block[u][delta]: coefficient of N[delta] contributed by unknown u
  for (std::size_t delta = 0; delta < S.nsize; ++delta) {
    SparseRow<typename K::Element> row;
    for (std::size_t u = 0; u < block.size(); ++u)
      if (!field.is_zero(block[u][delta])) row.emplace_back(static_cast<std::uint32_t>(u), block[u][delta]);
    S.matrix.rows.push_back(std::move(row));
  }
}

template <Field K>
TangentSystem<K> build_superposition(const MarkedSet<K>& F) {
  const K& field = F.ring();
  DualNumbers<K> D(field);
  auto FD = F.map_coefficients(D, [&](const auto& c) { return D.from_base(c); });
  const auto& N = F.order_ideal();
  TangentSystem<K> S;
  S.heads = F.size();
  S.nsize = N.size();
  S.pairs = criterion_pairs(F);
  S.matrix.cols = S.unknowns();
  const std::size_t n = F.ambient()->size();
  std::vector<std::vector<std::vector<typename K::Element>>> blocks(
      S.pairs.size(),
      std::vector<std::vector<typename K::Element>>(S.unknowns(), std::vector<typename K::Element>(S.nsize, field.zero())));
  std::vector<Polynomial<DualNumbers<K>>> base_tails;
  for (std::size_t a = 0; a < FD.size(); ++a) base_tails.push_back(FD.tail(a));
  for (std::size_t a = 0; a < S.heads; ++a)
    for (std::size_t g = 0; g < S.nsize; ++g) {
      auto tails = base_tails;
      tails[a] = tails[a] + Polynomial<DualNumbers<K>>::term(D, F.ambient(), N[g], D.make(field.zero(), field.one()));
      auto Ft = FD.with_tails(std::move(tails));
      const std::size_t u = S.unknown(a, g);
      for (std::size_t k = 0; k < S.pairs.size(); ++k) {
        const auto& pr = S.pairs[k];
        auto h = reduce(Ft.polynomial(pr.head).mul_term(Monomial::variable(n, pr.var), D.one()), Ft);
        for (const auto& t : h.terms()) {
          if (!field.is_zero(t.coeff.re)) fail(ErrorCode::NotABasis, "base marked set is not a marked basis");
          blocks[k][u][static_cast<std::size_t>(N.index_of(t.mono))] = t.coeff.eps;
        }
      }
    }
  for (const auto& b : blocks) append_block(S, field, b);
  return S;
}

template <Field K>
TangentSystem<K> build_linearized(const MarkedSet<K>& F) {
  const K& field = F.ring();
  const auto& N = F.order_ideal();
  const std::size_t n = F.ambient()->size();
  TangentSystem<K> S;
  S.heads = F.size();
  S.nsize = N.size();
  S.pairs = criterion_pairs(F);
  S.matrix.cols = S.unknowns();
  MonomialNormalForms<K> nf(field, quotient_algebra(F));
  using Vec = std::vector<typename K::Element>;
  for (const auto& pr : S.pairs) {
    // x_i f_a = sum_b q_b f_b, recorded by the deterministic reduction
    std::vector<ReductionStep<typename K::Element>> steps;
    auto h = reduce(F.polynomial(pr.head).mul_term(Monomial::variable(n, pr.var), field.one()), F, &steps);
    if (!h.is_zero()) fail(ErrorCode::NotABasis, "base marked set is not a marked basis");
    std::vector<std::map<Monomial, typename K::Element, DegRevLexGreater>> q(S.heads);
    for (const auto& st : steps) {
      auto [it, inserted] = q[st.head].try_emplace(st.multiplier, st.coeff);
      if (!inserted) it->second = field.add(it->second, st.coeff);
    }
    // eps-part for unknown (b, g): NF(delta_{ab} x_i x^g - q_b x^g)
    std::vector<Vec> block(S.unknowns(), Vec(S.nsize, field.zero()));
    for (std::size_t b = 0; b < S.heads; ++b)
      for (std::size_t g = 0; g < S.nsize; ++g) {
        Vec& col = block[S.unknown(b, g)];
        if (b == pr.head) {
          const Vec& v = nf.of(N[g].times_var(pr.var));
          for (std::size_t r = 0; r < S.nsize; ++r) col[r] = field.add(col[r], v[r]);
        }
        for (const auto& [beta, c] : q[b]) {
          if (field.is_zero(c)) continue;
          const Vec& v = nf.of(beta * N[g]);
          for (std::size_t r = 0; r < S.nsize; ++r)
            if (!field.is_zero(v[r])) col[r] = field.sub(col[r], field.mul(c, v[r]));
        }
      }
    append_block(S, field, block);
  }
  return S;
}

}  // namespace detail

template <Field K>
TangentSystem<K> build_tangent_system(const MarkedSet<K>& F, TangentRoute route = TangentRoute::Auto) {
  if (!is_marked_basis(F).is_basis) fail(ErrorCode::NotABasis, "marked set is not a marked basis");
  if (route == TangentRoute::Auto)
    route = F.size() * F.order_ideal().size() <= kExactRankThreshold ? TangentRoute::Superposition
                                                                     : TangentRoute::Linearized;
  return route == TangentRoute::Superposition ? detail::build_superposition(F) : detail::build_linearized(F);
}

struct TangentReport {
  std::size_t d = 0;
  std::size_t dim = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  std::size_t equations = 0;  // nonzero rows of the system
  std::uint64_t characteristic = 0;
  bool parity_holds = true;
  std::string rank_method;
  std::vector<std::uint64_t> primes;
};

struct TangentOptions {
  TangentRoute route = TangentRoute::Auto;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> primes;  // override for the modular consensus
  std::size_t exact_threshold = kExactRankThreshold;
};

namespace detail {

inline TangentReport finish_report(std::size_t d, std::size_t unknowns, std::size_t equations, RankResult r,
                                   std::uint64_t characteristic) {
  TangentReport rep;
  rep.d = d;
  rep.unknowns = unknowns;
  rep.rank = r.rank;
  rep.dim = unknowns - r.rank;
  rep.equations = equations;
  rep.characteristic = characteristic;
  rep.parity_holds = (rep.dim % 2) == (d % 2);
  rep.rank_method = r.method;
  rep.primes = std::move(r.primes);
  return rep;
}

}  // namespace detail

/// Tangent dimension = |P_J| * |N| - rank(S). Over Q the rank is exact
/// (Bareiss) up to the threshold and a modular consensus above it; over
/// F_p it is always exact.
template <Field K>
TangentReport tangent_dimension(const MarkedSet<K>& F, const TangentOptions& opts = {}) {
  const std::size_t cols = F.size() * F.order_ideal().size();
  const std::size_t d = F.order_ideal().size();
  const auto& kernels = simd::active_kernels();
  if constexpr (std::is_same_v<K, RationalField>) {
    if (cols <= opts.exact_threshold) {
      auto S = build_tangent_system(F, opts.route);
      RankResult r{rank_bareiss(S.matrix), "exact-rational", {}};
      return detail::finish_report(d, cols, S.matrix.nonzero_rows(), std::move(r), 0);
    }
    if (!is_marked_basis(F).is_basis) fail(ErrorCode::NotABasis, "marked set is not a marked basis");
    Rng rng(opts.seed);
    std::size_t equations = 0;
    auto r = consensus_rank(
        [&](std::uint64_t p) -> std::optional<std::size_t> {
          PrimeField Fp(p);
          std::optional<MarkedSet<PrimeField>> G;
          try {
            G.emplace(F.map_coefficients(Fp, [&](const mpq_class& c) { return Fp.from_rational(c); }));
          } catch (const Error& e) {
            if (e.code() == ErrorCode::NonUnitDivision) return std::nullopt;
            throw;
          }
          auto route = opts.route == TangentRoute::Auto ? TangentRoute::Linearized : opts.route;
          std::optional<TangentSystem<PrimeField>> S;
          try {
            S.emplace(build_tangent_system(*G, route));
          } catch (const Error& e) {
            if (e.code() == ErrorCode::NotABasis) return std::nullopt;  // the reduction mod p broke flatness
            throw;
          }
          equations = std::max(equations, S->matrix.nonzero_rows());
          return rank_prime_field(Fp, S->matrix, kernels);
        },
        rng, opts.primes);
    return detail::finish_report(d, cols, equations, std::move(r), 0);
  } else if constexpr (std::is_same_v<K, PrimeField>) {
    auto S = build_tangent_system(F, opts.route);
    RankResult r{rank_prime_field(F.ring(), S.matrix, kernels), "exact-modular", {F.ring().modulus()}};
    return detail::finish_report(d, cols, S.matrix.nonzero_rows(), std::move(r), F.ring().modulus());
  } else {
    auto S = build_tangent_system(F, opts.route);
    RankResult r{rank_generic(F.ring(), S.matrix), "exact-generic", {}};
    return detail::finish_report(d, cols, S.matrix.nonzero_rows(), std::move(r), F.ring().characteristic());
  }
}

/// First-order marked set F + eps * T for a vector T indexed like the unknowns.
template <Field K>
MarkedSet<DualNumbers<K>> first_order_deformation(const MarkedSet<K>& F, const std::vector<typename K::Element>& T) {
  const K& field = F.ring();
  const auto& N = F.order_ideal();
  if (T.size() != F.size() * N.size()) fail(ErrorCode::InvalidArgument, "tangent vector has the wrong length");
  DualNumbers<K> D(field);
  auto FD = F.map_coefficients(D, [&](const auto& c) { return D.from_base(c); });
  std::vector<Polynomial<DualNumbers<K>>> tails;
  for (std::size_t a = 0; a < F.size(); ++a) {
    std::vector<typename Polynomial<DualNumbers<K>>::Term> terms;
    for (std::size_t g = 0; g < N.size(); ++g) {
      const auto& v = T[a * N.size() + g];
      if (!field.is_zero(v)) terms.push_back({N[g], D.make(field.zero(), v)});
    }
    tails.push_back(FD.tail(a) + Polynomial<DualNumbers<K>>::from_terms(D, F.ambient(), std::move(terms)));
  }
  return FD.with_tails(std::move(tails));
}

/// Basis of ker S; each vector is a first-order deformation.
template <Field K>
std::vector<std::vector<typename K::Element>> tangent_basis(const MarkedSet<K>& F,
                                                            TangentRoute route = TangentRoute::Auto) {
  auto S = build_tangent_system(F, route);
  return kernel_basis(F.ring(), S.matrix);
}

template <Field K>
bool in_kernel(const TangentSystem<K>& S, const K& field, const std::vector<typename K::Element>& v) {
  for (const auto& row : S.matrix.rows) {
    auto acc = field.zero();
    for (const auto& [c, x] : row) acc = field.add(acc, field.mul(x, v[c]));
    if (!field.is_zero(acc)) return false;
  }
  return true;
}

/// eps-parts of a first-order marked set, as a vector over the unknowns.
template <Field K>
std::vector<typename K::Element> eps_vector(const MarkedSet<DualNumbers<K>>& Ft) {
  const auto& D = Ft.ring();
  const auto& N = Ft.order_ideal();
  std::vector<typename K::Element> v(Ft.size() * N.size(), D.base().zero());
  for (std::size_t a = 0; a < Ft.size(); ++a)
    for (const auto& t : Ft.tail(a).terms()) v[a * N.size() + static_cast<std::size_t>(N.index_of(t.mono))] = t.coeff.eps;
  return v;
}

/// eps = 0 part of a first-order marked set.
template <Field K>
MarkedSet<K> base_of(const MarkedSet<DualNumbers<K>>& Ft) {
  const K& field = Ft.ring().base();
  return Ft.map_coefficients(field, [](const auto& c) { return c.re; });
}

/// Rank of the eps-parts of first-order marked sets over a common base.
template <Field K>
std::size_t tangent_vectors_rank(const std::vector<MarkedSet<DualNumbers<K>>>& vectors) {
  if (vectors.empty()) return 0;
  const K& field = vectors.front().ring().base();
  auto base = base_of(vectors.front());
  SparseMatrix<K> M;
  M.cols = base.size() * base.order_ideal().size();
  for (const auto& Ft : vectors) {
    auto b = base_of(Ft);
    if (!(b.order_ideal() == base.order_ideal())) fail(ErrorCode::BaseMismatch, "first-order sets use different N");
    for (std::size_t a = 0; a < base.size(); ++a)
      if (!(b.tail(a) == base.tail(a))) fail(ErrorCode::BaseMismatch, "first-order sets have different eps = 0 parts");
    if (!is_marked_basis(Ft).is_basis) fail(ErrorCode::NotFlat, "a first-order set fails the marked-basis criterion");
    auto v = eps_vector(Ft);
    SparseRow<typename K::Element> row;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!field.is_zero(v[c])) row.emplace_back(static_cast<std::uint32_t>(c), v[c]);
    M.rows.push_back(std::move(row));
  }
  if constexpr (std::is_same_v<K, RationalField>) return rank_bareiss(M);
  else return rank_generic(field, M);
}

}  // namespace hilb
