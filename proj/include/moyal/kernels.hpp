#pragma once

#include <complex>
#include <cstddef>

namespace moyal::kernels {

// Hot inner loops, scalar reference implementations plus AVX2 variants
// selected once at startup (cpuid; MOYAL_KERNELS=scalar|avx2 overrides).
// All reductions run in a fixed lane order so reruns are bit-identical.
struct Ops {
    // acc[i] += a[i] * b[i*bstride]   (complex FMA; bstride may be negative)
    void (*cmul_strided_accum)(std::complex<double>* acc, const std::complex<double>* a,
                               const std::complex<double>* b, std::ptrdiff_t bstride,
                               std::size_t n);
    // acc[i] += alpha * x[i]          (real array, complex coefficient)
    void (*axpy_rc)(std::complex<double>* acc, const double* x, std::complex<double> alpha,
                    std::size_t n);
    // b_next[i] = ((2k+1 - z[i]) * b_k[i] - k * b_km1[i]) / (k+1)
    // scaled Laguerre recurrence step: b_k = exp(-z/2) L_k(z), all |b_k| <= 1
    void (*laguerre_step)(const double* z, const double* b_k, const double* b_km1,
                          double* b_next, int k, std::size_t n);
    double (*max_abs2)(const std::complex<double>*, std::size_t);
    double (*sum_abs2)(const std::complex<double>*, std::size_t);
    std::complex<double> (*sum)(const std::complex<double>*, std::size_t);
    const char* name;
};

const Ops& ops();        // runtime-selected
const Ops& scalar_ops(); // always available (reference)
bool avx2_available();
const Ops& avx2_ops();   // valid only if avx2_available()

} // namespace moyal::kernels
