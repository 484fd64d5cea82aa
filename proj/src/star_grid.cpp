// Integral-representation Moyal product on grids.
#include <cstdio>
//
// Changing variables in the fourfold integral (equivalently: composing Weyl
// kernels in the mixed (x, p-frequency) representation) gives the exact form
//
//   (f*g)(x,p) = (1/2pi)^2 Int dk dv e^{i(k+v)p} fT(x - hbar v/2, k) gT(x + hbar k/2, v)
//
// with fT(x,k) = Int f(x,p) e^{-ikp} dp. Discretized on the p-lattice the
// boundary phases cancel and the output frequency fold (k+v) mod (2pi/dp) is
// exact, so no p-padding is needed; x is zero-padded 2x to absorb the shears.
// When the shear step m = pi hbar/(n_p dp dx) is an integer the shifted
// lookups stay on the x-lattice (fast path); otherwise the shears are applied
// exactly in the x-frequency domain (shear path, any grid).
#include <vector>

#include "moyal/fft.hpp"
#include "moyal/kernels.hpp"
#include "moyal/parallel.hpp"
#include "moyal/star.hpp"

namespace moyal {

namespace {

struct Padded {
    int nx, np, nx2;
    std::vector<cplx> data; // [nx2][np], rows nx/2 .. 3nx/2 hold the symbol

    Padded(const GridSymbol& s)
        : nx(s.grid.n_x()), np(s.grid.n_p()), nx2(2 * s.grid.n_x()),
          data(std::size_t(nx2) * np, cplx(0.0)) {
        for (int i = 0; i < nx; ++i)
            std::copy(s.values.begin() + std::size_t(i) * np,
                      s.values.begin() + std::size_t(i + 1) * np,
                      data.begin() + std::size_t(i + nx / 2) * np);
    }
};

void check_inputs(const GridSymbol& f, const GridSymbol& g, double decay_tol) {
    if (f.grid != g.grid) throw GridMismatchGuard("star_grid: operands on different grids");
    for (const GridSymbol* s : {&f, &g}) {
        double sup = std::sqrt(kernels::ops().max_abs2(s->values.data(), s->values.size()));
        double bnd = boundary_max(*s);
        if (sup > 0.0 && bnd > decay_tol * sup) {
            char msg[160];
            std::snprintf(msg, sizeof msg,
                          "star_grid: boundary magnitude %.3e exceeds %.1e * sup (%.3e)", bnd,
                          decay_tol, sup);
            throw BoundaryDecayGuard(msg);
        }
    }
}

// fold acc2[0..2np) into S[0..np), backward FFT, scale, write output row
void finish_row(std::vector<cplx>& acc2, int np, double scale, cplx* out_row) {
    std::vector<cplx> S(np);
    for (int l = 0; l < np; ++l) S[l] = acc2[l] + acc2[l + np];
    fft::fft_1d(S.data(), np, +1);
    for (int j = 0; j < np; ++j) out_row[j] = S[j] * scale;
}

GridSymbol star_grid_lattice(const GridSymbol& f, const GridSymbol& g, const PhysContext& ctx,
                             int m) {
    const PhaseGrid& grid = f.grid;
    const int nx = grid.n_x(), np = grid.n_p(), nx2 = 2 * nx;

    Padded F(f), G(g);
    fft::fft_rows(F.data.data(), nx2, np, -1);
    fft::fft_rows(G.data.data(), nx2, np, -1);

    // transpose F so the v-walk is a strided row scan
    std::vector<cplx> Ft(std::size_t(np) * nx2);
    for (int r = 0; r < nx2; ++r)
        for (int k = 0; k < np; ++k) Ft[std::size_t(k) * nx2 + r] = F.data[std::size_t(r) * np + k];

    GridSymbol out(grid);
    const double scale = 1.0 / (double(np) * np);
    const auto& K = kernels::ops();

    parallel_for(std::size_t(nx), [&](std::size_t i0, std::size_t i1) {
        std::vector<cplx> acc2(2 * np);
        for (std::size_t ix = i0; ix < i1; ++ix) {
            std::fill(acc2.begin(), acc2.end(), cplx(0.0));
            const int ipad = int(ix) + nx / 2;
            for (int k = 0; k < np; ++k) {
                int kt = k < np / 2 ? k : k - np;
                int rG = ipad + m * kt;
                if (rG < 0 || rG >= nx2) continue;
                const cplx* gRow = G.data.data() + std::size_t(rG) * np;
                const cplx* fRow = Ft.data() + std::size_t(k) * nx2;
                // segment v in [0, np/2): f index ipad - m v
                int hi1 = std::min(np / 2, ipad / m + 1);
                if (hi1 > 0)
                    K.cmul_strided_accum(acc2.data() + k, gRow, fRow + ipad, -m, hi1);
                // segment v in [np/2, np): f index ipad + m (np - v)
                int lo2 = std::max(np / 2, np - (nx2 - 1 - ipad) / m);
                if (lo2 < np)
                    K.cmul_strided_accum(acc2.data() + k + lo2, gRow + lo2,
                                         fRow + ipad + m * (np - lo2), -m, np - lo2);
            }
            finish_row(acc2, np, scale, out.values.data() + ix * np);
        }
    });
    return out;
}

GridSymbol star_grid_shear(const GridSymbol& f, const GridSymbol& g, const PhysContext& ctx) {
    const PhaseGrid& grid = f.grid;
    const int nx = grid.n_x(), np = grid.n_p(), nx2 = 2 * nx;
    const double hb = ctx.hbar;

    Padded F(f), G(g);
    fft::fft_rows(F.data.data(), nx2, np, -1); // fT(x, k)
    fft::fft_rows(G.data.data(), nx2, np, -1); // gT(x, v)
    // x-frequency domain of both
    std::vector<cplx> F2 = F.data, G2 = G.data;
    fft::fft_cols(F2.data(), nx2, np, -1);
    fft::fft_cols(G2.data(), nx2, np, -1);

    const double dkap = 2.0 * M_PI / (np * grid.dp());
    const double dthe = 2.0 * M_PI / (nx2 * grid.dx());
    auto freq = [](int i, int n) { return i < n / 2 ? i : i - n; };

    GridSymbol out(grid);
    const double scale = 1.0 / (double(np) * np);
    const auto& K = kernels::ops();

    std::vector<std::vector<cplx>> acc(nx, std::vector<cplx>(2 * np, cplx(0.0)));
    std::vector<cplx> Fv(std::size_t(nx2) * np);
    std::vector<cplx> Gvk(std::size_t(np) * nx2); // per fixed v: [k][r]
    std::vector<cplx> col(nx2);
    for (int v = 0; v < np; ++v) {
        // Fv(x, k) = fT(x - hbar kappa_v / 2, k): one phase multiply + column IFFT
        double fshift = -0.5 * hb * freq(v, np) * dkap;
        for (int t = 0; t < nx2; ++t) {
            cplx ph = std::exp(cplx(0.0, freq(t, nx2) * dthe * fshift)) / double(nx2);
            const cplx* src = F2.data() + std::size_t(t) * np;
            cplx* dst = Fv.data() + std::size_t(t) * np;
            for (int k = 0; k < np; ++k) dst[k] = src[k] * ph;
        }
        fft::fft_cols(Fv.data(), nx2, np, +1);

        // Gvk[k][r] = gT(x_r + hbar kappa_k / 2, v): np shears of gT's column v
        for (int k = 0; k < np; ++k) {
            double gshift = 0.5 * hb * freq(k, np) * dkap;
            for (int t = 0; t < nx2; ++t)
                col[t] = G2[std::size_t(t) * np + v] *
                         std::exp(cplx(0.0, freq(t, nx2) * dthe * gshift)) / double(nx2);
            fft::fft_1d(col.data(), nx2, +1);
            std::copy(col.begin(), col.end(), Gvk.begin() + std::size_t(k) * nx2);
        }

        for (int ix = 0; ix < nx; ++ix) {
            const int ipad = ix + nx / 2;
            // acc[ix][v + k] += Fv[ipad][k] * Gvk[k][ipad]
            K.cmul_strided_accum(acc[ix].data() + v, Fv.data() + std::size_t(ipad) * np,
                                 Gvk.data() + ipad, nx2, np);
        }
    }
    for (int ix = 0; ix < nx; ++ix)
        finish_row(acc[ix], np, scale, out.values.data() + std::size_t(ix) * np);
    return out;
}

} // namespace

GridSymbol star_grid(const GridSymbol& f, const GridSymbol& g, const PhysContext& ctx,
                     StarGridPath path, double decay_tol) {
    check_inputs(f, g, decay_tol);
    if (ctx.hbar == 0.0) return pointwise_mul(f, g); // classical limit

    double ms = f.grid.shear_step(ctx.hbar);
    bool lattice_ok = f.grid.is_star_compatible(ctx.hbar) && std::round(ms) >= 1.0;
    switch (path) {
    case StarGridPath::lattice:
        if (!lattice_ok)
            throw ValidationError("star_grid: grid is not shear-lattice compatible "
                                  "(use PhaseGrid::star_compatible)");
        return star_grid_lattice(f, g, ctx, int(std::round(ms)));
    case StarGridPath::shear:
        return star_grid_shear(f, g, ctx);
    case StarGridPath::automatic:
    default:
        return lattice_ok ? star_grid_lattice(f, g, ctx, int(std::round(ms)))
                          : star_grid_shear(f, g, ctx);
    }
}

GridSymbol moyal_bracket(const GridSymbol& f, const GridSymbol& g, const PhysContext& ctx) {
    if (ctx.hbar == 0.0)
        throw ValidationError("moyal_bracket on two grid symbols requires hbar > 0");
    GridSymbol fg = star_grid(f, g, ctx);
    GridSymbol gf = star_grid(g, f, ctx);
    cplx inv = cplx(0.0, -1.0 / ctx.hbar);
    GridSymbol out(f.grid);
    for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] = inv * (fg.values[k] - gf.values[k]);
    return out;
}

} // namespace moyal
