#include <optional>
#include <vector>

#include "moyal/fdweights.hpp"
#include "moyal/fft.hpp"
#include "moyal/star.hpp"

namespace moyal {

namespace {

// ---- grid derivatives ------------------------------------------------------

// Spectral derivative d_x^a d_p^b from one shared forward 2-D transform.
// Signed frequencies; decaying symbols keep periodization at the spectral
// floor.
struct SpectralDerivs {
    PhaseGrid g;
    std::vector<cplx> hat;

    explicit SpectralDerivs(const GridSymbol& s) : g(s.grid), hat(s.values) {
        fft::fft_rows(hat.data(), g.n_x(), g.n_p(), -1);
        fft::fft_cols(hat.data(), g.n_x(), g.n_p(), -1);
    }

    GridSymbol deriv(int a, int b) const {
        const int nx = g.n_x(), np = g.n_p();
        GridSymbol out(g);
        std::vector<cplx>& v = out.values;
        v = hat;
        const double dthx = 2.0 * M_PI / (nx * g.dx());
        const double dthp = 2.0 * M_PI / (np * g.dp());
        for (int i = 0; i < nx; ++i) {
            int it = i < nx / 2 ? i : i - nx;
            cplx fx = std::pow(cplx(0.0, it * dthx), a);
            for (int j = 0; j < np; ++j) {
                int jt = j < np / 2 ? j : j - np;
                v[std::size_t(i) * np + j] *= fx * std::pow(cplx(0.0, jt * dthp), b);
            }
        }
        fft::fft_rows(v.data(), nx, np, +1);
        fft::fft_cols(v.data(), nx, np, +1);
        double scale = 1.0 / (double(nx) * np);
        for (auto& z : v) z *= scale;
        return out;
    }
};

// 4th-order central stencils composed per axis; zero extension off-grid.
GridSymbol fd_deriv(const GridSymbol& s, int a, int b) {
    const PhaseGrid& g = s.grid;
    GridSymbol cur = s;
    auto apply_axis = [&](int order, bool xaxis) {
        if (order == 0) return;
        auto off = central_offsets_order4(order);
        std::vector<double> nodes(off.size());
        double h = xaxis ? g.dx() : g.dp();
        for (std::size_t k = 0; k < off.size(); ++k) nodes[k] = off[k] * h;
        auto w = fd_weights(0.0, nodes, order);
        GridSymbol next(g);
        for (int i = 0; i < g.n_x(); ++i)
            for (int j = 0; j < g.n_p(); ++j) {
                cplx acc(0.0);
                for (std::size_t k = 0; k < off.size(); ++k) {
                    int ii = i + (xaxis ? off[k] : 0);
                    int jj = j + (xaxis ? 0 : off[k]);
                    if (ii < 0 || ii >= g.n_x() || jj < 0 || jj >= g.n_p()) continue;
                    acc += w[k] * cur.at(ii, jj);
                }
                next.at(i, j) = acc;
            }
        cur = std::move(next);
    };
    apply_axis(a, true);
    apply_axis(b, false);
    return cur;
}

} // namespace

GridSymbol star_mixed(const PolySymbol& f, const GridSymbol& g, const PhysContext& ctx,
                      int max_order, Side side, DerivKind dk) {
    const double hb = ctx.hbar;
    if (f.degree() < 0) return GridSymbol(g.grid); // zero polynomial
    if (max_order < f.degree())
        throw ValidationError("star_mixed: max_order must cover deg f");
    if (dk == DerivKind::fd4 &&
        (g.grid.n_x() < 2 * max_order + 5 || g.grid.n_p() < 2 * max_order + 5))
        throw StencilGuard("grid too coarse for the requested stencil order");

    if (hb == 0.0) return pointwise_mul(sample_poly(f, g.grid), g);

    std::optional<SpectralDerivs> spec;
    if (dk == DerivKind::spectral) spec.emplace(g);
    auto grid_deriv = [&](int a, int b) { // d_x^a d_p^b
        if (a == 0 && b == 0) return g;
        return spec ? spec->deriv(a, b) : fd_deriv(g, a, b);
    };

    // term (m, n): coefficient (i hbar/2)^{m+n} / (m! n!) times
    //   left  (f*g): (-1)^m (d_p^m d_x^n f)(d_p^n d_x^m g)
    //   right (g*f): (-1)^n (d_p^m d_x^n f)(d_p^n d_x^m g)   [roles swapped]
    GridSymbol out(g.grid);
    const cplx ih2 = cplx(0.0, hb / 2.0);
    const int fo_p = f.degree_p(), fo_x = f.degree_x();
    for (int m = 0; m <= fo_p; ++m) {
        for (int n = 0; n <= fo_x; ++n) {
            if (m + n > max_order) continue;
            PolySymbol df = f.deriv(n, m); // d_x^n d_p^m f
            if (df.is_zero()) continue;
            double fact = 1.0;
            for (int t = 2; t <= m; ++t) fact *= t;
            for (int t = 2; t <= n; ++t) fact *= t;
            int sgn = (side == Side::left) ? m : n;
            cplx coef = std::pow(ih2, m + n) * ((sgn % 2) ? -1.0 : 1.0) / fact;
            GridSymbol dg = grid_deriv(m, n); // d_x^m d_p^n g
            GridSymbol dfs = sample_poly(df, g.grid);
            for (std::size_t k = 0; k < out.values.size(); ++k)
                out.values[k] += coef * dfs.values[k] * dg.values[k];
        }
    }
    return out;
}

GridSymbol moyal_bracket(const PolySymbol& f, const GridSymbol& g, const PhysContext& ctx,
                         int max_order, DerivKind dk) {
    if (ctx.hbar == 0.0) { // Poisson bracket, the continuous limit
        std::optional<SpectralDerivs> spec;
        if (dk == DerivKind::spectral) spec.emplace(g);
        auto gd = [&](int a, int b) { return spec ? spec->deriv(a, b) : fd_deriv(g, a, b); };
        GridSymbol fx = sample_poly(f.deriv_x(), g.grid), fp = sample_poly(f.deriv_p(), g.grid);
        GridSymbol gp = gd(0, 1), gx = gd(1, 0);
        GridSymbol out(g.grid);
        for (std::size_t k = 0; k < out.values.size(); ++k)
            out.values[k] = fx.values[k] * gp.values[k] - fp.values[k] * gx.values[k];
        return out;
    }
    GridSymbol fg = star_mixed(f, g, ctx, max_order, Side::left, dk);
    GridSymbol gf = star_mixed(f, g, ctx, max_order, Side::right, dk);
    GridSymbol out(g.grid);
    cplx inv = cplx(0.0, -1.0 / ctx.hbar);
    for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] = inv * (fg.values[k] - gf.values[k]);
    return out;
}

} // namespace moyal
