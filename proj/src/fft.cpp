#include "moyal/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "moyal/errors.hpp"

namespace moyal::fft {

namespace {

// FFTW planning is not thread safe; execution on distinct buffers is.
// FFTW_ESTIMATE keeps plans deterministic; FFTW_UNALIGNED lets one plan
// serve any caller buffer via fftw_execute_dft.
std::mutex plan_mutex;

struct PlanKey {
    int n, howmany, stride, dist, sign;
    bool operator<(const PlanKey& o) const {
        return std::tie(n, howmany, stride, dist, sign) <
               std::tie(o.n, o.howmany, o.stride, o.dist, o.sign);
    }
};

fftw_plan get_plan(const PlanKey& key) {
    static std::map<PlanKey, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::size_t span = std::size_t(key.stride) * (key.n - 1) +
                       std::size_t(key.dist) * (key.howmany - 1) + 1;
    std::vector<std::complex<double>> scratch(span);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan p = fftw_plan_many_dft(1, &key.n, key.howmany, buf, nullptr, key.stride, key.dist,
                                     buf, nullptr, key.stride, key.dist,
                                     key.sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw Error("fftw planning failed");
    cache.emplace(key, p);
    return p;
}

void run(std::complex<double>* data, const PlanKey& key) {
    fftw_plan p = get_plan(key);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, buf, buf);
}

} // namespace

void fft_1d(std::complex<double>* data, int n, int sign) {
    run(data, PlanKey{n, 1, 1, 1, sign});
}

void fft_rows(std::complex<double>* data, int nrows, int ncols, int sign) {
    run(data, PlanKey{ncols, nrows, 1, ncols, sign});
}

void fft_cols(std::complex<double>* data, int nrows, int ncols, int sign) {
    run(data, PlanKey{nrows, ncols, ncols, 1, sign});
}

void centered_fft_1d(std::complex<double>* a, int n, int sign) {
    if (n % 4 != 0) throw ValidationError("centered_fft_1d: n must be divisible by 4");
    for (int i = 1; i < n; i += 2) a[i] = -a[i];
    fft_1d(a, n, sign);
    for (int j = 1; j < n; j += 2) a[j] = -a[j];
}

} // namespace moyal::fft
