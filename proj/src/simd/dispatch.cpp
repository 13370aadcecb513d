#include <atomic>
#include <cstdlib>

#include "hilb/simd/mod_kernels.hpp"

namespace hilb::simd {

#ifndef HILB_HAVE_AVX2
const ModKernels* avx2_kernels() { return nullptr; }
#endif

namespace {
std::atomic<int> g_override{-1};
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

const ModKernels& kernels_for(Isa isa) {
  if (isa == Isa::Avx2 && avx2_kernels() && cpu_has_avx2()) return *avx2_kernels();
  return scalar_kernels();
}

void set_kernel_override(const Isa* isa) { g_override.store(isa ? static_cast<int>(*isa) : -1); }

const ModKernels& active_kernels() {
  int o = g_override.load();
  if (o >= 0) return kernels_for(static_cast<Isa>(o));
  static const bool force_scalar = std::getenv("HILB_FORCE_SCALAR") != nullptr;
  if (force_scalar) return scalar_kernels();
  return kernels_for(Isa::Avx2);
}

}  // namespace hilb::simd
