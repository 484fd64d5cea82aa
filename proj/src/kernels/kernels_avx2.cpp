// AVX2+FMA variants of the hot loops. Compiled with -mavx2 -mfma; the
// dispatcher only hands these out when cpuid reports both.
#include "moyal/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace moyal::kernels {

namespace {

using cd = std::complex<double>;

inline __m256d cmul_accum2(__m256d acc, __m256d a, __m256d b) {
    // two packed complex: acc += a*b
    __m256d bre = _mm256_movedup_pd(b);           // [b0r b0r b1r b1r]
    __m256d bim = _mm256_permute_pd(b, 0xF);      // [b0i b0i b1i b1i]
    __m256d asw = _mm256_permute_pd(a, 0x5);      // [a0i a0r a1i a1r]
    __m256d t = _mm256_mul_pd(asw, bim);
    return _mm256_add_pd(acc, _mm256_fmaddsub_pd(a, bre, t));
}

void cmul_strided_accum_avx2(cd* acc, const cd* a, const cd* b, std::ptrdiff_t bstride,
                             std::size_t n) {
    std::size_t i = 0;
    if (bstride == 1) {
        for (; i + 2 <= n; i += 2) {
            __m256d av = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
            __m256d bv = _mm256_loadu_pd(reinterpret_cast<const double*>(b + i));
            __m256d ac = _mm256_loadu_pd(reinterpret_cast<double*>(acc + i));
            _mm256_storeu_pd(reinterpret_cast<double*>(acc + i), cmul_accum2(ac, av, bv));
        }
    } else {
        for (; i + 2 <= n; i += 2) {
            __m256d av = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
            __m128d b0 = _mm_loadu_pd(reinterpret_cast<const double*>(b + std::ptrdiff_t(i) * bstride));
            __m128d b1 = _mm_loadu_pd(reinterpret_cast<const double*>(b + std::ptrdiff_t(i + 1) * bstride));
            __m256d bv = _mm256_set_m128d(b1, b0);
            __m256d ac = _mm256_loadu_pd(reinterpret_cast<double*>(acc + i));
            _mm256_storeu_pd(reinterpret_cast<double*>(acc + i), cmul_accum2(ac, av, bv));
        }
    }
    for (; i < n; ++i) acc[i] += a[i] * b[std::ptrdiff_t(i) * bstride];
}

void axpy_rc_avx2(cd* acc, const double* x, cd alpha, std::size_t n) {
    __m256d av = _mm256_set_pd(alpha.imag(), alpha.real(), alpha.imag(), alpha.real());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i); // [x0 x1 x2 x3]
        __m256d lo = _mm256_permute4x64_pd(xv, 0x50); // [x0 x0 x1 x1]
        __m256d hi = _mm256_permute4x64_pd(xv, 0xFA); // [x2 x2 x3 x3]
        __m256d a0 = _mm256_loadu_pd(reinterpret_cast<double*>(acc + i));
        __m256d a1 = _mm256_loadu_pd(reinterpret_cast<double*>(acc + i + 2));
        _mm256_storeu_pd(reinterpret_cast<double*>(acc + i), _mm256_fmadd_pd(lo, av, a0));
        _mm256_storeu_pd(reinterpret_cast<double*>(acc + i + 2), _mm256_fmadd_pd(hi, av, a1));
    }
    for (; i < n; ++i) acc[i] += alpha * x[i];
}

void laguerre_step_avx2(const double* z, const double* b_k, const double* b_km1,
                        double* b_next, int k, std::size_t n) {
    __m256d a0 = _mm256_set1_pd(2.0 * k + 1.0);
    __m256d kk = _mm256_set1_pd(double(k));
    __m256d inv = _mm256_set1_pd(1.0 / (k + 1));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d zv = _mm256_loadu_pd(z + i);
        __m256d bk = _mm256_loadu_pd(b_k + i);
        __m256d bm = _mm256_loadu_pd(b_km1 + i);
        __m256d t = _mm256_mul_pd(_mm256_sub_pd(a0, zv), bk);
        t = _mm256_fnmadd_pd(kk, bm, t);
        _mm256_storeu_pd(b_next + i, _mm256_mul_pd(t, inv));
    }
    double s0 = 2.0 * k + 1.0, sinv = 1.0 / (k + 1);
    for (; i < n; ++i) b_next[i] = ((s0 - z[i]) * b_k[i] - k * b_km1[i]) * sinv;
}

double max_abs2_avx2(const cd* v, std::size_t n) {
    __m256d mx = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d a = _mm256_loadu_pd(reinterpret_cast<const double*>(v + i));
        __m256d sq = _mm256_mul_pd(a, a);
        __m256d s = _mm256_hadd_pd(sq, sq); // [|v0|^2 |v0|^2 |v1|^2 |v1|^2]
        mx = _mm256_max_pd(mx, s);
    }
    alignas(32) double out[4];
    _mm256_store_pd(out, mx);
    double m = std::max(std::max(out[0], out[1]), std::max(out[2], out[3]));
    for (; i < n; ++i) m = std::max(m, std::norm(v[i]));
    return m;
}

double sum_abs2_avx2(const cd* v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d a = _mm256_loadu_pd(reinterpret_cast<const double*>(v + i));
        acc = _mm256_fmadd_pd(a, a, acc);
    }
    alignas(32) double out[4];
    _mm256_store_pd(out, acc);
    double s = (out[0] + out[1]) + (out[2] + out[3]);
    for (; i < n; ++i) s += std::norm(v[i]);
    return s;
}

cd sum_avx2(const cd* v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(reinterpret_cast<const double*>(v + i)));
    alignas(32) double out[4];
    _mm256_store_pd(out, acc);
    cd s(out[0] + out[2], out[1] + out[3]);
    for (; i < n; ++i) s += v[i];
    return s;
}

} // namespace

const Ops& avx2_ops() {
    static const Ops ops{cmul_strided_accum_avx2, axpy_rc_avx2, laguerre_step_avx2,
                         max_abs2_avx2,           sum_abs2_avx2, sum_avx2,
                         "avx2"};
    return ops;
}

} // namespace moyal::kernels

#else

namespace moyal::kernels {
const Ops& avx2_ops() { return scalar_ops(); }
} // namespace moyal::kernels

#endif
