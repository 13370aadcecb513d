#pragma once

// Row kernels for Gaussian elimination over F_p with p < 2^26.
//
// Residues are stored as doubles holding integers in [0, p). Products of two
// residues stay below 2^52, so a fused multiply-add followed by one
// floor-quotient correction yields the exact residue. The scalar kernels
// are the reference; every vector variant must agree with them bit for bit.

#include <cstddef>
#include <cstdint>

namespace hilb::simd {

inline constexpr std::uint64_t kMaxKernelPrime = (1ull << 26);

enum class Isa { Scalar, Avx2 };

struct ModKernels {
  /// dst[i] = (dst[i] - c * src[i]) mod p, for i < n.
  void (*submul)(double* dst, const double* src, double c, std::size_t n, double p, double pinv);
  /// row[i] = (row[i] * c) mod p, for i < n.
  void (*scale)(double* row, double c, std::size_t n, double p, double pinv);
  Isa isa;
  const char* name;
};

const ModKernels& scalar_kernels();
/// nullptr when the binary was built without AVX2 support.
const ModKernels* avx2_kernels();

/// True when the running CPU can execute the AVX2+FMA kernels.
bool cpu_has_avx2();

/// Kernels selected for this process: AVX2 when available, unless the
/// HILB_FORCE_SCALAR environment variable is set or an override is active.
const ModKernels& active_kernels();
const ModKernels& kernels_for(Isa isa);

/// Pins the dispatch to one ISA (tests); pass nullptr to restore automatic selection.
void set_kernel_override(const Isa* isa);

const char* isa_name(Isa isa);

}  // namespace hilb::simd
