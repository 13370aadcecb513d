#include <cstdint>

#include "hilb/simd/mod_kernels.hpp"

namespace hilb::simd {

namespace {

void submul_scalar(double* dst, const double* src, double c, std::size_t n, double p, double) {
  const auto P = static_cast<std::uint64_t>(p);
  const auto negc = (P - static_cast<std::uint64_t>(c)) % P;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = static_cast<std::uint64_t>(dst[i]);
    auto s = static_cast<std::uint64_t>(src[i]);
    dst[i] = static_cast<double>((d + negc * s) % P);
  }
}

void scale_scalar(double* row, double c, std::size_t n, double p, double) {
  const auto P = static_cast<std::uint64_t>(p);
  const auto C = static_cast<std::uint64_t>(c);
  for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<double>((static_cast<std::uint64_t>(row[i]) * C) % P);
}

constexpr ModKernels kScalar{&submul_scalar, &scale_scalar, Isa::Scalar, "scalar"};

}  // namespace

const ModKernels& scalar_kernels() { return kScalar; }

}  // namespace hilb::simd
