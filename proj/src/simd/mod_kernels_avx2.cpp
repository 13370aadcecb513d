// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <cmath>

#include "hilb/simd/mod_kernels.hpp"

namespace hilb::simd {

namespace {

inline double reduce_one(double t, double p, double pinv) {
  double q = std::floor(t * pinv);
  double r = std::fma(-q, p, t);
  if (r < 0) r += p;
  if (r >= p) r -= p;
  return r;
}

inline __m256d reduce4(__m256d t, __m256d vp, __m256d vpinv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vpinv));
  __m256d r = _mm256_fnmadd_pd(q, vp, t);
  const __m256d zero = _mm256_setzero_pd();
  // r < 0  -> r + p
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
  // r >= p -> r - p
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
  return r;
}

void submul_avx2(double* dst, const double* src, double c, std::size_t n, double p, double pinv) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vpinv = _mm256_set1_pd(pinv);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d d0 = _mm256_loadu_pd(dst + i);
    __m256d d1 = _mm256_loadu_pd(dst + i + 4);
    __m256d s0 = _mm256_loadu_pd(src + i);
    __m256d s1 = _mm256_loadu_pd(src + i + 4);
    __m256d t0 = _mm256_fnmadd_pd(vc, s0, d0);  // d - c*s, exact below 2^53
    __m256d t1 = _mm256_fnmadd_pd(vc, s1, d1);
    _mm256_storeu_pd(dst + i, reduce4(t0, vp, vpinv));
    _mm256_storeu_pd(dst + i + 4, reduce4(t1, vp, vpinv));
  }
  for (; i + 4 <= n; i += 4) {
    __m256d d0 = _mm256_loadu_pd(dst + i);
    __m256d s0 = _mm256_loadu_pd(src + i);
    _mm256_storeu_pd(dst + i, reduce4(_mm256_fnmadd_pd(vc, s0, d0), vp, vpinv));
  }
  for (; i < n; ++i) dst[i] = reduce_one(std::fma(-c, src[i], dst[i]), p, pinv);
}

void scale_avx2(double* row, double c, std::size_t n, double p, double pinv) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vpinv = _mm256_set1_pd(pinv);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_loadu_pd(row + i);
    _mm256_storeu_pd(row + i, reduce4(_mm256_mul_pd(r, vc), vp, vpinv));
  }
  for (; i < n; ++i) row[i] = reduce_one(row[i] * c, p, pinv);
}

constexpr ModKernels kAvx2{&submul_avx2, &scale_avx2, Isa::Avx2, "avx2"};

}  // namespace

const ModKernels* avx2_kernels() { return &kAvx2; }

}  // namespace hilb::simd
