// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include "jacsyz/modp/kernels.hpp"

#include <cmath>
#include <cstdint>

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace jacsyz::modp {

namespace {

// c * s mod p for residues c, s < p < 2^26: the product is exact in a double;
// q = floor(prod / p) may be off by one, the fnmadd remainder is exact.
inline __m256d mulmod(__m256d c, __m256d s, __m256d p, __m256d pinv) {
    const __m256d prod = _mm256_mul_pd(c, s);
    const __m256d q = _mm256_round_pd(_mm256_mul_pd(prod, pinv), _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(q, p, prod);
    const __m256d zero = _mm256_setzero_pd();
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
    return r;
}

inline double mulmod1(double c, double s, const Modulus& m) {
    const double prod = c * s;
    const double q = std::floor(prod * m.pinv);
    double r = std::fma(-q, m.pd, prod);
    if (r < 0) r += m.pd;
    if (r >= m.pd) r -= m.pd;
    return r;
}

void submul_avx2(double* dst, const double* src, double c, std::size_t n, const Modulus& m) {
    const __m256d vp = _mm256_set1_pd(m.pd);
    const __m256d vpinv = _mm256_set1_pd(m.pinv);
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d s = _mm256_loadu_pd(src + i);
        const __m256d t = mulmod(vc, s, vp, vpinv);
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(dst + i), t);
        d = _mm256_add_pd(d, _mm256_and_pd(_mm256_cmp_pd(d, zero, _CMP_LT_OQ), vp));
        _mm256_storeu_pd(dst + i, d);
    }
    for (; i < n; ++i) {
        double d = dst[i] - mulmod1(c, src[i], m);
        if (d < 0) d += m.pd;
        dst[i] = d;
    }
}

void scale_avx2(double* row, double c, std::size_t n, const Modulus& m) {
    const __m256d vp = _mm256_set1_pd(m.pd);
    const __m256d vpinv = _mm256_set1_pd(m.pinv);
    const __m256d vc = _mm256_set1_pd(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(row + i, mulmod(vc, _mm256_loadu_pd(row + i), vp, vpinv));
    for (; i < n; ++i) row[i] = mulmod1(c, row[i], m);
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable table{"avx2", &submul_avx2, &scale_avx2};
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
    return &table;
}

}  // namespace jacsyz::modp

#else

namespace jacsyz::modp {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace jacsyz::modp

#endif
