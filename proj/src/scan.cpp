#include "hilb/scan.hpp"

#include <atomic>
#include <thread>

#include "hilb/families.hpp"

namespace hilb {

std::vector<ScanItem> parallel_items(std::size_t n, unsigned jobs, const std::function<ScanItem(std::size_t)>& fn) {
  std::vector<ScanItem> out(n);
  auto guarded = [&](std::size_t i) {
    try {
      out[i] = fn(i);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
    out[i].index = i;
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) guarded(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) guarded(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

namespace {

ScanResult summarize(std::vector<ScanItem> items) {
  ScanResult r;
  r.items = std::move(items);
  for (const auto& it : r.items) {
    if (!it.ok()) {
      ++r.errors;
      continue;
    }
    r.violations += !it.parity_holds;
    r.mismatches += it.mismatch();
  }
  return r;
}

template <Field K>
ScanItem tangent_item(const MarkedSet<K>& F, std::uint64_t seed) {
  TangentOptions opts;
  opts.seed = seed;
  auto rep = tangent_dimension(F, opts);
  ScanItem it;
  it.seed = seed;
  it.d = rep.d;
  it.dim = rep.dim;
  it.parity_holds = rep.parity_holds;
  return it;
}

std::string order_ideal_label(const OrderIdeal& N) {
  std::string s;
  for (const auto& m : N.monomials()) {
    if (!s.empty()) s += " ";
    s += monomial_to_string(m, *xyz_ambient());
  }
  return s;
}

}  // namespace

ScanResult scan_order_ideals(const std::vector<OrderIdeal>& ideals, const ScanOptions& opts) {
  if (opts.count > 0 && ideals.empty()) fail(ErrorCode::InvalidArgument, "no order ideals to scan");
  for (const auto& N : ideals)
    if (N.nvars() != 3) fail(ErrorCode::InvalidArgument, "scans run in three variables");
  return summarize(parallel_items(opts.count, opts.jobs, [&](std::size_t i) {
    const auto seed = Rng::derive(opts.seed, i);
    const auto& N = ideals[i % ideals.size()];
    Rng rng(seed);
    ScanItem it;
    if (opts.characteristic == 0) {
      RationalField Q;
      it = tangent_item(random_marked_basis(Q, N, rng), seed);
    } else {
      PrimeField Fp(opts.characteristic);
      it = tangent_item(random_marked_basis(Fp, N, rng), seed);
    }
    it.label = order_ideal_label(N);
    return it;
  }));
}

ScanResult scan_lambda(const ScanOptions& opts) {
  return summarize(parallel_items(opts.count, opts.jobs, [&](std::size_t i) {
    const auto seed = Rng::derive(opts.seed, i);
    Rng rng(seed);
    Params5 b = random_params(rng);
    switch (i % 4) {
      case 0:
        b[3] = b[4] = 0;
        break;
      case 1: {
        // solve B = 0 for b3 with b4 != 0
        if (sgn(b[3]) == 0) b[3] = 1;
        b[2] = 0;
        b[2] = -discriminant_B(b) / (b[3] * b[3] * b[3]);
        break;
      }
      default:
        if (sgn(discriminant_B(b)) == 0) b[4] += 1;
    }
    ScanItem it;
    const auto stratum = stratum_of(b);
    if (opts.characteristic == 0) {
      RationalField Q;
      it = tangent_item(counterexample_marked_basis(Q, b), seed);
    } else {
      PrimeField Fp(opts.characteristic);
      it = tangent_item(counterexample_marked_basis(Fp, b), seed);
    }
    std::string label = "b=(";
    for (std::size_t k = 0; k < 5; ++k) label += (k ? "," : "") + b[k].get_str();
    it.label = label + ")";
    if (opts.characteristic == 0) it.expected_dim = expected_tangent_dimension(stratum);
    return it;
  }));
}

ScanResult scan_monomial(std::size_t max_d, const ScanOptions& opts) {
  std::vector<OrderIdeal> all;
  for (std::size_t d = 1; d <= max_d; ++d)
    for (auto& N : enumerate_order_ideals(3, d)) all.push_back(std::move(N));
  return summarize(parallel_items(all.size(), opts.jobs, [&](std::size_t i) {
    ScanItem it;
    if (opts.characteristic == 0) {
      RationalField Q;
      it = tangent_item(MarkedSet<RationalField>::monomial(Q, xyz_ambient(), all[i]), opts.seed);
    } else {
      PrimeField Fp(opts.characteristic);
      it = tangent_item(MarkedSet<PrimeField>::monomial(Fp, xyz_ambient(), all[i]), opts.seed);
    }
    it.label = order_ideal_label(all[i]);
    return it;
  }));
}

}  // namespace hilb
