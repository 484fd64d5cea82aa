#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "moyal/fdweights.hpp"
#include "moyal/fft.hpp"
#include "moyal/ode.hpp"

using namespace moyal;
using cd = std::complex<double>;

namespace {

std::vector<cd> naive_dft(const std::vector<cd>& a, int sign) {
    int n = int(a.size());
    std::vector<cd> out(n);
    for (int k = 0; k < n; ++k) {
        cd s(0.0);
        for (int j = 0; j < n; ++j)
            s += a[j] * std::exp(cd(0.0, sign * 2.0 * M_PI * j * k / n));
        out[k] = s;
    }
    return out;
}

} // namespace

TEST_CASE("fft_1d matches the naive DFT") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int n : {8, 16, 64}) {
        std::vector<cd> a(n);
        for (auto& z : a) z = cd(U(rng), U(rng));
        for (int sign : {-1, +1}) {
            auto want = naive_dft(a, sign);
            auto got = a;
            fft::fft_1d(got.data(), n, sign);
            for (int k = 0; k < n; ++k) CHECK(std::abs(got[k] - want[k]) < 1e-12 * n);
        }
    }
}

TEST_CASE("fft rows/cols transform the right axis") {
    int nr = 8, nc = 16;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<cd> a(nr * nc);
    for (auto& z : a) z = cd(U(rng), U(rng));

    auto rows = a;
    fft::fft_rows(rows.data(), nr, nc, -1);
    for (int r = 0; r < nr; ++r) {
        std::vector<cd> row(a.begin() + r * nc, a.begin() + (r + 1) * nc);
        auto want = naive_dft(row, -1);
        for (int k = 0; k < nc; ++k) CHECK(std::abs(rows[r * nc + k] - want[k]) < 1e-11);
    }

    auto cols = a;
    fft::fft_cols(cols.data(), nr, nc, +1);
    for (int c = 0; c < nc; ++c) {
        std::vector<cd> col(nr);
        for (int r = 0; r < nr; ++r) col[r] = a[r * nc + c];
        auto want = naive_dft(col, +1);
        for (int r = 0; r < nr; ++r) CHECK(std::abs(cols[r * nc + c] - want[r]) < 1e-11);
    }
}

TEST_CASE("centered_fft_1d matches the centered-index sum") {
    int n = 16;
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<cd> a(n);
    for (auto& z : a) z = cd(U(rng), U(rng));
    std::vector<cd> want(n);
    for (int j = 0; j < n; ++j) {
        cd s(0.0);
        for (int i = 0; i < n; ++i)
            s += a[i] * std::exp(cd(0.0, 2.0 * M_PI * (i - n / 2) * (j - n / 2) / n));
        want[j] = s;
    }
    auto got = a;
    fft::centered_fft_1d(got.data(), n, +1);
    for (int j = 0; j < n; ++j) CHECK(std::abs(got[j] - want[j]) < 1e-12 * n);
}

TEST_CASE("fd_weights reproduce derivatives of sin") {
    double h = 1e-2;
    std::vector<double> nodes;
    for (int k = -3; k <= 3; ++k) nodes.push_back(k * h);
    for (int d : {1, 2, 3}) {
        auto w = fd_weights(0.0, nodes, d);
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += w[i] * std::sin(0.7 + nodes[i]);
        double want = (d == 1) ? std::cos(0.7) : (d == 2) ? -std::sin(0.7) : -std::cos(0.7);
        CHECK(acc == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("dopri5 dense output solves the oscillator to tolerance") {
    ode::Options opts;
    opts.rtol = 1e-10;
    opts.atol = 1e-12;
    auto rhs = [](double, const double* y, double* dy) {
        dy[0] = y[1];
        dy[1] = -y[0];
    };
    auto sol = ode::integrate(rhs, {1.0, 0.0}, 0.0, 2.0 * M_PI, opts);
    double worst = 0.0;
    for (int k = 0; k <= 500; ++k) {
        double t = 2.0 * M_PI * k / 500.0;
        worst = std::max(worst, std::abs(sol.eval(t, 0) - std::cos(t)));
        worst = std::max(worst, std::abs(sol.eval(t, 1) + std::sin(t)));
    }
    CHECK(worst < 1e-8); // dense output within a couple orders of the step tolerance
    CHECK(sol.eval(2.0 * M_PI, 0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS((void)sol.eval(7.0, 0), ValidationError);
}

TEST_CASE("dopri5 reports step-size underflow on a finite-time blowup") {
    auto rhs = [](double, const double* y, double* dy) { dy[0] = y[0] * y[0]; };
    CHECK_THROWS_AS(ode::integrate(rhs, {1.0}, 0.0, 2.0, {}), StepUnderflowGuard);
}
