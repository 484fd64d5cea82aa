#include "moyal/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace moyal::kernels {

namespace {

using cd = std::complex<double>;

void cmul_strided_accum_scalar(cd* acc, const cd* a, const cd* b, std::ptrdiff_t bstride,
                               std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        acc[i] += a[i] * b[std::ptrdiff_t(i) * bstride];
}

void axpy_rc_scalar(cd* acc, const double* x, cd alpha, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += alpha * x[i];
}

void laguerre_step_scalar(const double* z, const double* b_k, const double* b_km1,
                          double* b_next, int k, std::size_t n) {
    double inv = 1.0 / (k + 1);
    double a0 = 2.0 * k + 1.0;
    for (std::size_t i = 0; i < n; ++i)
        b_next[i] = ((a0 - z[i]) * b_k[i] - k * b_km1[i]) * inv;
}

double max_abs2_scalar(const cd* v, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::norm(v[i]));
    return m;
}

double sum_abs2_scalar(const cd* v, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(v[i]);
    return s;
}

cd sum_scalar(const cd* v, std::size_t n) {
    cd s(0.0);
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{cmul_strided_accum_scalar, axpy_rc_scalar, laguerre_step_scalar,
                         max_abs2_scalar,           sum_abs2_scalar, sum_scalar,
                         "scalar"};
    return ops;
}

} // namespace moyal::kernels
