#include "doctest.h"

#include <cmath>
#include <random>

#include "moyal/invariant.hpp"
#include "moyal/models.hpp"
#include "moyal/star.hpp"

using namespace moyal;

namespace {

InvariantSpec make_spec(const ModelPreset& preset, double t1 = 10.0) {
    TDModel m = build_model(preset);
    return InvariantSpec{m, solve_rho(m, 0.0, t1, 1e-12), PhysContext(1.0, m.Omega)};
}

} // namespace

TEST_CASE("xi/pi map: SHO identity, CK at t = 0, inverse round trip") {
    InvariantSpec sho = make_spec(ModelPreset::sho());
    auto [xi, pi] = xi_pi_of_xp(sho, 0.7, -1.2, 3.0);
    CHECK(xi == doctest::Approx(0.7).epsilon(1e-10));
    CHECK(pi == doctest::Approx(-1.2).epsilon(1e-10));

    // CK with gamma0 = 0.6, omega0 = 1: Omega0 = sqrt(0.91), rho(0) = Omega0^{-1/2},
    // rhodot(0) = -0.3 rho(0), so xi = x sqrt(Omega0), pi = (p + 0.3 x)/sqrt(Omega0)
    InvariantSpec ck = make_spec(ModelPreset::ck(1.0, 0.6, 1.0));
    double s8 = std::sqrt(std::sqrt(0.91));
    for (auto [x, p] : {std::pair{1.0, 0.0}, std::pair{0.4, -1.3}}) {
        auto [cxi, cpi] = xi_pi_of_xp(ck, x, p, 0.0);
        CHECK(cxi == doctest::Approx(x * s8).epsilon(1e-9));
        CHECK(cpi == doctest::Approx((p + 0.3 * x) / s8).epsilon(1e-9));
    }
    // x = 0: xi = 0 and pi = p rho at any time
    auto [zxi, zpi] = xi_pi_of_xp(ck, 0.0, 2.0, 4.2);
    CHECK(zxi == 0.0);
    CHECK(zpi == doctest::Approx(2.0 * ck.sol.rho(4.2)));

    std::mt19937 rng(8);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int k = 0; k < 20; ++k) {
        double x = U(rng), p = U(rng), t = 5.0 + U(rng);
        auto [a, b] = xi_pi_of_xp(ck, x, p, t);
        auto [xr, pr] = xp_of_xi_pi(ck, a, b, t);
        CHECK(std::abs(xr - x) < 1e-12);
        CHECK(std::abs(pr - p) < 1e-12);
    }
}

TEST_CASE("invariant evaluation") {
    InvariantSpec sho = make_spec(ModelPreset::sho());
    CHECK(invariant_eval(sho, 1.0, 2.0, 4.0) == doctest::Approx(2.5).epsilon(1e-10));
    CHECK(invariant_eval(sho, 0.0, 0.0, 1.0) == 0.0);
}

TEST_CASE("laguerre recurrence") {
    for (double z : {-3.0, 0.0, 2.5, 40.0}) CHECK(laguerre(0, z) == 1.0);
    for (int n : {1, 5, 17, 50}) CHECK(laguerre(n, 0.0) == doctest::Approx(1.0));
    CHECK(laguerre(1, 1.0) == doctest::Approx(0.0));
    CHECK(laguerre(2, 1.0) == doctest::Approx(-0.5)); // 1 - 2z + z^2/2 at z = 1
    CHECK_THROWS_AS(laguerre(501, 1.0), ValidationError);
    CHECK_THROWS_AS(laguerre(-1, 1.0), ValidationError);

    // scaled variant stays bounded and matches the direct product
    for (int n : {3, 25, 500})
        for (double z : {0.5, 30.0, 400.0, 3000.0}) {
            double b = laguerre_scaled(n, z);
            CHECK(std::abs(b) <= 1.0 + 1e-12);
            if (z < 60.0)
                CHECK(b == doctest::Approx(std::exp(-0.5 * z) * laguerre(n, z)).epsilon(1e-10));
        }
}

TEST_CASE("wigner_n: peak, normalization, nodal ellipse, parity") {
    PhysContext ctx(1.0, 1.0);
    // W_0(0,0) = 1/pi, W_n(0,0) = (-1)^n / pi
    for (int n : {0, 1, 2, 5}) {
        PhaseGrid g = wigner_auto_grid(n, ctx, 256);
        GridSymbol w = wigner_n_xipi(n, ctx, g);
        int i0 = g.n_x() / 2, j0 = g.n_p() / 2;
        double want = (n % 2 ? -1.0 : 1.0) / M_PI;
        CHECK(w.at(i0, j0).real() == doctest::Approx(want).epsilon(1e-12));
        CHECK(w.at(i0, j0).imag() == 0.0);
    }

    // int W_n = 1 for n <= 10, stable under grid refinement
    for (int n : {0, 3, 10}) {
        for (int N : {256, 512}) {
            PhaseGrid g = wigner_auto_grid(n, ctx, N);
            GridSymbol w = wigner_n_xipi(n, ctx, g);
            CHECK(std::abs(symbol_norms(w).integral.real() - 1.0) < 1e-8);
        }
    }

    // W_1 vanishes on the ellipse I = hbar Omega / 4 (radius sqrt(hbar/Omega/... ))
    PhaseGrid g = wigner_auto_grid(1, ctx, 512);
    GridSymbol w1 = wigner_n_xipi(1, ctx, g);
    double rstar = std::sqrt(ctx.hbar / 2.0); // I = r^2/2 = hbar/4
    int jc = g.n_p() / 2;
    int ilo = int(std::floor((rstar + g.x_max()) / g.dx()));
    double wlo = w1.at(ilo, jc).real(), whi = w1.at(ilo + 1, jc).real();
    CHECK(wlo * whi <= 0.0); // sign change brackets the nodal radius
    CHECK(std::abs(wlo) < std::abs(w1.at(g.n_x() / 2, jc).real()) * 0.05);
}

TEST_CASE("wigner_n pullback agrees with scalar evaluation at mapped points") {
    InvariantSpec ck = make_spec(ModelPreset::ck(1.0, 0.6, 1.0));
    double t = 2.0;
    // the pullback stretches: pi = p rho - m x rhodot needs a tall p-range
    PhaseGrid g(64, 128, 4.0, 12.0);
    GridSymbol w = wigner_n(2, ck, g, Frame::x_p, t);
    double hb = ck.ctx.hbar, Om = ck.ctx.omega_cap;
    for (int i = 0; i < g.n_x(); i += 7)
        for (int j = 0; j < g.n_p(); j += 5) {
            auto [xi, pi] = xi_pi_of_xp(ck, g.x(i), g.p(j), t);
            double I = 0.5 * (pi * pi + Om * Om * xi * xi);
            double want = laguerre_scaled(2, 4.0 * I / (hb * Om)) / (M_PI * hb);
            CHECK(std::abs(w.at(i, j).real() - want) < 1e-12);
        }
}

TEST_CASE("stargenvalue equation via star_mixed, n <= 10") {
    PhysContext ctx(1.0, 1.0);
    PolySymbol h = scaled_oscillator_hamiltonian(ctx);
    for (int n : {0, 1, 5, 10}) {
        PhaseGrid g = wigner_auto_grid(n, ctx, 512);
        GridSymbol wn = wigner_n_xipi(n, ctx, g);
        GridSymbol hw = star_mixed(h, wn, ctx, 2);
        double en = ctx.hbar * ctx.omega_cap * (n + 0.5);
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < wn.values.size(); ++k) {
            num = std::max(num, std::abs(hw.values[k] - en * wn.values[k]));
            den = std::max(den, std::abs(wn.values[k]));
        }
        CHECK(num / den <= 1e-6);
    }
}

TEST_CASE("wigner grids: auto-sizing and the boundary guard") {
    PhysContext ctx(1.0, 1.0);
    PhaseGrid g = wigner_auto_grid(4, ctx, 256);
    CHECK(g.is_star_compatible(ctx.hbar));
    CHECK(g.p_max() >= 6.0 * std::sqrt(9.0)); // 6 sqrt(hbar (2n+1) / Omega), n = 4
    PhaseGrid tiny(32, 32, 2.0, 2.0);
    CHECK_THROWS_AS(wigner_n_xipi(6, ctx, tiny), BoundaryDecayGuard);
}
