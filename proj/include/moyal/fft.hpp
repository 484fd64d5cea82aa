#pragma once

#include <complex>

namespace moyal::fft {

// Thin FFTW3 front end. Plans are FFTW_ESTIMATE (deterministic), cached
// behind a mutex, executed on caller buffers. sign = -1 is e^{-2pi i jk/N}.
void fft_1d(std::complex<double>* data, int n, int sign);
void fft_rows(std::complex<double>* data, int nrows, int ncols, int sign);
void fft_cols(std::complex<double>* data, int nrows, int ncols, int sign);

// out[j] = sum_i a[i] exp(sign * 2pi i * (i - n/2)(j - n/2) / n), in place.
// Requires n % 4 == 0 (always true for our power-of-two grids).
void centered_fft_1d(std::complex<double>* a, int n, int sign);

} // namespace moyal::fft
