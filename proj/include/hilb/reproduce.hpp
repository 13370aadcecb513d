#pragma once

// Golden computations with embedded expected values.

#include <cstdint>
#include <string>
#include <vector>

namespace hilb {

struct Check {
  std::string group;
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
  double seconds = 0;
};

struct ReproduceOptions {
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> primes;
  unsigned jobs = 1;
};

/// all | thmA | table | char2 | smoothing | immersion | len78 | monomial-parity
const std::vector<std::string>& reproduce_targets();

/// Throws InvalidArgument for an unknown target.
std::vector<Check> reproduce(const std::string& which, const ReproduceOptions& opts = {});

}  // namespace hilb
