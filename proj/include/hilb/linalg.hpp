#pragma once

// Exact linear algebra on sparse row lists: generic elimination over any
// field, fraction-free (Bareiss) rank over Q, and incremental modular
// echelon forms driven by the SIMD row kernels.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilb/random.hpp"
#include "hilb/rings.hpp"
#include "hilb/simd/mod_kernels.hpp"

namespace hilb {

template <class E>
using SparseRow = std::vector<std::pair<std::uint32_t, E>>;

template <Field K>
struct SparseMatrix {
  std::size_t cols = 0;
  std::vector<SparseRow<typename K::Element>> rows;

  std::size_t nonzero_rows() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += !r.empty();
    return n;
  }
  std::vector<std::vector<typename K::Element>> dense(const K& field) const {
    std::vector<std::vector<typename K::Element>> out(rows.size(), std::vector<typename K::Element>(cols, field.zero()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [c, v] : rows[i]) out[i][c] = v;
    return out;
  }
};

/// Reduced row echelon form over a field.
template <Field K>
struct Rref {
  std::vector<std::vector<typename K::Element>> rows;  // nonzero rows only
  std::vector<std::size_t> pivots;
};

template <Field K>
Rref<K> rref(const K& field, std::vector<std::vector<typename K::Element>> m, std::size_t cols) {
  Rref<K> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && field.is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    auto inv = field.inv(m[r][c]);
    for (std::size_t k = c; k < cols; ++k) m[r][k] = field.mul(m[r][k], inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || field.is_zero(m[i][c])) continue;
      auto f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!field.is_zero(m[r][k])) m[i][k] = field.sub(m[i][k], field.mul(f, m[r][k]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

template <Field K>
std::size_t rank_generic(const K& field, const SparseMatrix<K>& m) {
  return rref(field, m.dense(field), m.cols).pivots.size();
}

/// Basis of {v : M v = 0}; one vector per free column, with a 1 in that column.
template <Field K>
std::vector<std::vector<typename K::Element>> kernel_basis(const K& field, const SparseMatrix<K>& m) {
  auto R = rref(field, m.dense(field), m.cols);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : R.pivots) is_pivot[p] = true;
  std::vector<std::vector<typename K::Element>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename K::Element> v(m.cols, field.zero());
    v[f] = field.one();
    for (std::size_t i = 0; i < R.pivots.size(); ++i) v[R.pivots[i]] = field.neg(R.rows[i][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact rank over Q by fraction-free elimination on integer rows.
std::size_t rank_bareiss(const SparseMatrix<RationalField>& m);

/// Incremental row echelon form over F_p, p < 2^26, with double-encoded residues.
class ModularEchelon {
 public:
  ModularEchelon(std::uint64_t p, std::size_t cols, const simd::ModKernels& kernels);

  /// Reduces the row against the current pivots; if a nonzero remainder
  /// survives it becomes a new pivot. Returns true when the rank grew.
  /// Entries must already be residues in [0, p).
  bool insert(std::vector<double> row);
  std::size_t rank() const { return pivots_.size(); }
  std::uint64_t prime() const { return p_; }

 private:
  std::uint64_t p_;
  double pd_, pinv_;
  std::size_t cols_;
  const simd::ModKernels* k_;
  std::vector<std::size_t> pivot_col_;        // sorted ascending
  std::vector<std::vector<double>> pivots_;  // parallel to pivot_col_, monic
};

/// Exact rank over F_p. Uses the kernel-driven echelon form for p < 2^26
/// and generic elimination above that.
std::size_t rank_prime_field(const PrimeField& field, const SparseMatrix<PrimeField>& m,
                             const simd::ModKernels& kernels);

/// Rank of the reduction of a rational matrix mod p; nullopt when some
/// denominator vanishes mod p.
std::optional<std::size_t> rank_rational_mod_p(const SparseMatrix<RationalField>& m, std::uint64_t p,
                                               const simd::ModKernels& kernels);

struct RankResult {
  std::size_t rank = 0;
  std::string method;                // "exact-rational", "modular-consensus", "exact-modular"
  std::vector<std::uint64_t> primes;  // primes used by the modular method
};

/// Random prime in [lo, hi).
std::uint64_t random_prime(Rng& rng, std::uint64_t lo, std::uint64_t hi);

inline constexpr std::uint64_t kConsensusPrimeLo = 1ull << 24;
inline constexpr std::uint64_t kConsensusPrimeHi = 1ull << 26;

/// Consensus over primes: rank_at(p) returns the rank mod p, or nullopt for
/// an unusable prime. Same acceptance rule as below.
RankResult consensus_rank(const std::function<std::optional<std::size_t>(std::uint64_t)>& rank_at, Rng& rng,
                          const std::vector<std::uint64_t>& fixed_primes = {});

/// Rank over Q from modular ranks. Draws at least three primes (or uses the
/// supplied ones); if they disagree, draws up to six more and accepts the
/// largest rank seen at three or more primes. Throws ModularDisagreement otherwise.
RankResult rank_modular_consensus(const SparseMatrix<RationalField>& m, Rng& rng,
                                  const std::vector<std::uint64_t>& fixed_primes = {});

}  // namespace hilb
