#include "hilb/linalg.hpp"

#include <algorithm>
#include <map>

namespace hilb {

std::size_t rank_bareiss(const SparseMatrix<RationalField>& m) {
  const std::size_t cols = m.cols;
  std::vector<std::vector<mpz_class>> a;
  a.reserve(m.rows.size());
  for (const auto& row : m.rows) {
    if (row.empty()) continue;
    mpz_class den = 1;
    for (const auto& e : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.second.get_den_mpz_t());
    std::vector<mpz_class> r(cols, 0);
    for (const auto& [c, v] : row) r[c] = v.get_num() * (den / v.get_den());
    a.push_back(std::move(r));
  }
  const std::size_t rows = a.size();
  std::size_t k = 0;
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t piv = k;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[k]);
    const mpz_class& p = a[k][c];
    for (std::size_t i = k + 1; i < rows; ++i) {
      const mpz_class f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a[i][j] = (p * a[i][j] - f * a[k][j]) / prev, exact
        t = p * a[i][j];
        if (sgn(f) != 0 && sgn(a[k][j]) != 0) t -= f * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[k][c];
    ++k;
  }
  return k;
}

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return PrimeField(p).inv(a % p); }

std::uint64_t residue(const mpz_class& z, std::uint64_t p) {
  return static_cast<std::uint64_t>(mpz_fdiv_ui(z.get_mpz_t(), p));
}

}  // namespace

ModularEchelon::ModularEchelon(std::uint64_t p, std::size_t cols, const simd::ModKernels& kernels)
    : p_(p), pd_(static_cast<double>(p)), pinv_(1.0 / static_cast<double>(p)), cols_(cols), k_(&kernels) {
  if (p < 2 || p >= simd::kMaxKernelPrime) fail(ErrorCode::InvalidArgument, "kernel primes must be below 2^26");
}

bool ModularEchelon::insert(std::vector<double> row) {
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::size_t c = pivot_col_[k];
    const double v = row[c];
    if (v == 0.0) continue;
    k_->submul(row.data() + c, pivots_[k].data(), v, cols_ - c, pd_, pinv_);
  }
  std::size_t j = 0;
  while (j < cols_ && row[j] == 0.0) ++j;
  if (j == cols_) return false;
  const auto lead_inv = static_cast<double>(inv_mod(static_cast<std::uint64_t>(row[j]), p_));
  k_->scale(row.data() + j, lead_inv, cols_ - j, pd_, pinv_);
  std::vector<double> stored(row.begin() + static_cast<std::ptrdiff_t>(j), row.end());
  auto pos = std::lower_bound(pivot_col_.begin(), pivot_col_.end(), j) - pivot_col_.begin();
  pivot_col_.insert(pivot_col_.begin() + pos, j);
  pivots_.insert(pivots_.begin() + pos, std::move(stored));
  return true;
}

std::size_t rank_prime_field(const PrimeField& field, const SparseMatrix<PrimeField>& m,
                             const simd::ModKernels& kernels) {
  const std::uint64_t p = field.modulus();
  if (p >= simd::kMaxKernelPrime) return rank_generic(field, m);
  ModularEchelon ech(p, m.cols, kernels);
  std::vector<double> dense(m.cols);
  for (const auto& row : m.rows) {
    if (row.empty()) continue;
    std::fill(dense.begin(), dense.end(), 0.0);
    for (const auto& [c, v] : row) dense[c] = static_cast<double>(v % p);
    ech.insert(dense);
    if (ech.rank() == m.cols) break;
  }
  return ech.rank();
}

std::optional<std::size_t> rank_rational_mod_p(const SparseMatrix<RationalField>& m, std::uint64_t p,
                                               const simd::ModKernels& kernels) {
  ModularEchelon ech(p, m.cols, kernels);
  std::vector<double> dense(m.cols);
  for (const auto& row : m.rows) {
    if (row.empty()) continue;
    std::fill(dense.begin(), dense.end(), 0.0);
    for (const auto& [c, v] : row) {
      std::uint64_t d = residue(v.get_den(), p);
      if (d == 0) return std::nullopt;
      std::uint64_t n = residue(v.get_num(), p);
      dense[c] = static_cast<double>(static_cast<std::uint64_t>((static_cast<unsigned __int128>(n) * inv_mod(d, p)) % p));
    }
    ech.insert(dense);
    if (ech.rank() == m.cols) break;
  }
  return ech.rank();
}

std::uint64_t random_prime(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  while (true) {
    std::uint64_t c = rng.uniform(lo, hi - 1) | 1u;
    if (c < hi && is_prime_u64(c)) return c;
  }
}

RankResult consensus_rank(const std::function<std::optional<std::size_t>(std::uint64_t)>& rank_at, Rng& rng,
                          const std::vector<std::uint64_t>& fixed_primes) {
  RankResult res;
  res.method = "modular-consensus";
  std::map<std::size_t, std::size_t> votes;
  auto try_prime = [&](std::uint64_t p) {
    auto r = rank_at(p);
    if (!r) return;  // bad prime, e.g. a denominator vanishes
    res.primes.push_back(p);
    ++votes[*r];
  };
  for (auto p : fixed_primes) {
    if (!is_prime_u64(p) || p >= simd::kMaxKernelPrime)
      fail(ErrorCode::InvalidArgument, "consensus primes must be primes below 2^26");
    try_prime(p);
  }
  std::size_t draws = 0;
  while (res.primes.size() < 3 && draws < 64) {
    try_prime(random_prime(rng, kConsensusPrimeLo, kConsensusPrimeHi));
    ++draws;
  }
  if (votes.size() > 1)
    for (int extra = 0; extra < 6; ++extra) try_prime(random_prime(rng, kConsensusPrimeLo, kConsensusPrimeHi));
  // a reduction mod p never raises the rank, so the largest well-supported value wins
  for (auto it = votes.rbegin(); it != votes.rend(); ++it)
    if (it->second >= 3) {
      res.rank = it->first;
      return res;
    }
  fail(ErrorCode::ModularDisagreement, "modular ranks disagree across primes");
}

RankResult rank_modular_consensus(const SparseMatrix<RationalField>& m, Rng& rng,
                                  const std::vector<std::uint64_t>& fixed_primes) {
  const auto& kernels = simd::active_kernels();
  return consensus_rank([&](std::uint64_t p) { return rank_rational_mod_p(m, p, kernels); }, rng, fixed_primes);
}

}  // namespace hilb
