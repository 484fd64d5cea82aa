#include "moyal/invariant.hpp"

#include <cmath>
#include <vector>

#include "moyal/kernels.hpp"
#include "moyal/parallel.hpp"

namespace moyal {

XiPi xi_pi_of_xp(const InvariantSpec& spec, double x, double p, double t) {
    double r = spec.sol.rho(t), rd = spec.sol.rhodot(t), m = spec.model.mass(t);
    return {x / r, p * r - m * x * rd};
}

XP xp_of_xi_pi(const InvariantSpec& spec, double xi, double pi, double t) {
    double r = spec.sol.rho(t), rd = spec.sol.rhodot(t), m = spec.model.mass(t);
    double x = xi * r;
    return {x, (pi + m * x * rd) / r};
}

double invariant_eval(const InvariantSpec& spec, double x, double p, double t) {
    auto [xi, pi] = xi_pi_of_xp(spec, x, p, t);
    double Om = spec.model.Omega;
    return 0.5 * (pi * pi + Om * Om * xi * xi);
}

double laguerre(int n, double z) {
    if (n < 0) throw ValidationError("laguerre: n must be >= 0");
    if (n > 500) throw ValidationError("laguerre: n > 500 exceeds the accuracy guard");
    if (n == 0) return 1.0;
    double lkm1 = 1.0, lk = 1.0 - z;
    for (int k = 1; k < n; ++k) {
        double lkp1 = ((2.0 * k + 1.0 - z) * lk - k * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

double laguerre_scaled(int n, double z) {
    if (n < 0) throw ValidationError("laguerre_scaled: n must be >= 0");
    if (n > 500) throw ValidationError("laguerre_scaled: n > 500 exceeds the accuracy guard");
    double e = std::exp(-0.5 * z);
    if (n == 0) return e;
    double bkm1 = e, bk = (1.0 - z) * e;
    for (int k = 1; k < n; ++k) {
        double bkp1 = ((2.0 * k + 1.0 - z) * bk - k * bkm1) / (k + 1.0);
        bkm1 = bk;
        bk = bkp1;
    }
    return bk;
}

PolySymbol scaled_oscillator_hamiltonian(const PhysContext& ctx) {
    PolySymbol h;
    h.set(0, 2, 0.5);
    h.set(2, 0, 0.5 * ctx.omega_cap * ctx.omega_cap);
    return h;
}

namespace {

// W_n over an array of z = 4I/(hbar Omega): (-1)^n exp(-z/2) L_n(z) / (pi hbar)
void wigner_row(int n, const std::vector<double>& z, double scale, cplx* out) {
    const std::size_t len = z.size();
    std::vector<double> bkm1(len), bk(len), bnext(len);
    for (std::size_t i = 0; i < len; ++i) bkm1[i] = std::exp(-0.5 * z[i]);
    if (n == 0) {
        for (std::size_t i = 0; i < len; ++i) out[i] = scale * bkm1[i];
        return;
    }
    for (std::size_t i = 0; i < len; ++i) bk[i] = (1.0 - z[i]) * bkm1[i];
    const auto& K = kernels::ops();
    for (int k = 1; k < n; ++k) {
        K.laguerre_step(z.data(), bk.data(), bkm1.data(), bnext.data(), k, len);
        bkm1.swap(bk);
        bk.swap(bnext);
    }
    double s = (n % 2 ? -scale : scale);
    for (std::size_t i = 0; i < len; ++i) out[i] = s * bk[i];
}

} // namespace

GridSymbol wigner_n_xipi(int n, const PhysContext& ctx, const PhaseGrid& grid) {
    if (n < 0) throw ValidationError("wigner_n: n must be >= 0");
    if (!(ctx.hbar > 0)) throw ValidationError("wigner_n: hbar must be positive");
    double Om = ctx.omega_cap, hb = ctx.hbar;
    GridSymbol w(grid);
    parallel_for(std::size_t(grid.n_x()), [&](std::size_t i0, std::size_t i1) {
        std::vector<double> z(grid.n_p());
        for (std::size_t i = i0; i < i1; ++i) {
            double xi = grid.x(int(i));
            for (int j = 0; j < grid.n_p(); ++j) {
                double pi_ = grid.p(j);
                double I = 0.5 * (pi_ * pi_ + Om * Om * xi * xi);
                z[j] = 4.0 * I / (hb * Om);
            }
            wigner_row(n, z, 1.0 / (M_PI * hb), w.values.data() + i * grid.n_p());
        }
    });
    double peak = std::sqrt(kernels::ops().max_abs2(w.values.data(), w.values.size()));
    double bnd = boundary_max(w);
    if (bnd > 1e-12 * peak)
        throw BoundaryDecayGuard("wigner_n: boundary value " + std::to_string(bnd) +
                                 " exceeds 1e-12 * peak for n = " + std::to_string(n));
    return w;
}

GridSymbol wigner_n(int n, const InvariantSpec& spec, const PhaseGrid& grid, Frame frame,
                    double t) {
    if (frame == Frame::xi_pi) return wigner_n_xipi(n, spec.ctx, grid);
    if (n < 0) throw ValidationError("wigner_n: n must be >= 0");
    double Om = spec.ctx.omega_cap, hb = spec.ctx.hbar;
    if (!(hb > 0)) throw ValidationError("wigner_n: hbar must be positive");
    GridSymbol w(grid);
    double r = spec.sol.rho(t), rd = spec.sol.rhodot(t), m = spec.model.mass(t);
    parallel_for(std::size_t(grid.n_x()), [&](std::size_t i0, std::size_t i1) {
        std::vector<double> z(grid.n_p());
        for (std::size_t i = i0; i < i1; ++i) {
            double x = grid.x(int(i));
            double xi = x / r;
            for (int j = 0; j < grid.n_p(); ++j) {
                double pi_ = grid.p(j) * r - m * x * rd;
                double I = 0.5 * (pi_ * pi_ + Om * Om * xi * xi);
                z[j] = 4.0 * I / (hb * Om);
            }
            wigner_row(n, z, 1.0 / (M_PI * hb), w.values.data() + i * grid.n_p());
        }
    });
    double peak = std::sqrt(kernels::ops().max_abs2(w.values.data(), w.values.size()));
    double bnd = boundary_max(w);
    if (bnd > 1e-12 * peak)
        throw BoundaryDecayGuard("wigner_n (x_p frame): boundary value " + std::to_string(bnd) +
                                 " exceeds 1e-12 * peak for n = " + std::to_string(n));
    return w;
}

PhaseGrid wigner_auto_grid(int n_max, const PhysContext& ctx, int n_points) {
    if (n_max < 0) throw ValidationError("wigner_auto_grid: n_max must be >= 0");
    if (!(ctx.hbar > 0)) throw ValidationError("wigner_auto_grid: hbar must be positive");
    double xi_half = 6.0 * std::sqrt(ctx.hbar * (2.0 * n_max + 1.0) / ctx.omega_cap);
    double pi_half = ctx.omega_cap * xi_half;
    return PhaseGrid::star_compatible(xi_half, pi_half, n_points, n_points, ctx.hbar);
}

} // namespace moyal
