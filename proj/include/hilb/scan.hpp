#pragma once

// Parity scans over random or enumerated marked bases.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hilb/monomial_ideal.hpp"

namespace hilb {

struct ScanOptions {
  std::uint64_t seed = 1;
  std::size_t count = 0;
  std::uint64_t characteristic = 0;
  unsigned jobs = 1;
};

struct ScanItem {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string label;
  std::size_t d = 0;
  std::size_t dim = 0;
  bool parity_holds = true;
  std::optional<std::size_t> expected_dim;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
  bool mismatch() const { return ok() && expected_dim && *expected_dim != dim; }
};

struct ScanResult {
  std::vector<ScanItem> items;
  std::size_t violations = 0;  // parity failures
  std::size_t errors = 0;
  std::size_t mismatches = 0;  // dimension differs from the expected stratum value
};

/// Runs fn(i) for i < n on up to `jobs` threads; results keep index order.
std::vector<ScanItem> parallel_items(std::size_t n, unsigned jobs, const std::function<ScanItem(std::size_t)>& fn);

/// Random marked bases on the given order ideals (cycled), one per sample.
ScanResult scan_order_ideals(const std::vector<OrderIdeal>& ideals, const ScanOptions& opts);

/// Random b for the 12-element N, spread over the three strata.
ScanResult scan_lambda(const ScanOptions& opts);

/// Every monomial ideal of colength 1..max_d in three variables.
ScanResult scan_monomial(std::size_t max_d, const ScanOptions& opts);

}  // namespace hilb
