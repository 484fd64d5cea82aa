#include "moyal/grid_symbol.hpp"

#include <algorithm>
#include <cmath>

#include "moyal/kernels.hpp"
#include "moyal/parallel.hpp"

namespace moyal {

GridSymbol sample(const PhaseGrid& g, const std::function<cplx(double, double)>& f) {
    GridSymbol s(g);
    parallel_for(std::size_t(g.n_x()), [&](std::size_t i0, std::size_t i1) {
        for (std::size_t i = i0; i < i1; ++i) {
            double x = g.x(int(i));
            cplx* row = s.values.data() + i * g.n_p();
            for (int j = 0; j < g.n_p(); ++j) row[j] = f(x, g.p(j));
        }
    });
    return s;
}

SymbolNorms symbol_norms(const GridSymbol& f) {
    const auto& k = kernels::ops();
    SymbolNorms n;
    double w = f.grid.dx() * f.grid.dp();
    n.integral = k.sum(f.values.data(), f.values.size()) * w;
    n.l2 = std::sqrt(k.sum_abs2(f.values.data(), f.values.size()) * w);
    n.sup = std::sqrt(k.max_abs2(f.values.data(), f.values.size()));
    return n;
}

double boundary_max(const GridSymbol& f) {
    const PhaseGrid& g = f.grid;
    double m2 = 0.0;
    auto upd = [&](const cplx& v) { m2 = std::max(m2, std::norm(v)); };
    for (int j = 0; j < g.n_p(); ++j) {
        upd(f.at(0, j));
        upd(f.at(g.n_x() - 1, j));
    }
    for (int i = 0; i < g.n_x(); ++i) {
        upd(f.at(i, 0));
        upd(f.at(i, g.n_p() - 1));
    }
    return std::sqrt(m2);
}

void check_finite(const GridSymbol& f, const char* who) {
    for (const cplx& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ValidationError(std::string(who) + ": non-finite symbol values");
}

GridSymbol conj_symbol(const GridSymbol& f) {
    GridSymbol r(f.grid);
    for (std::size_t i = 0; i < f.values.size(); ++i) r.values[i] = std::conj(f.values[i]);
    return r;
}

GridSymbol lin_comb(cplx a, const GridSymbol& f, cplx b, const GridSymbol& g) {
    if (f.grid != g.grid) throw GridMismatchGuard("lin_comb: grids differ");
    GridSymbol r(f.grid);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        r.values[i] = a * f.values[i] + b * g.values[i];
    return r;
}

GridSymbol pointwise_mul(const GridSymbol& f, const GridSymbol& g) {
    if (f.grid != g.grid) throw GridMismatchGuard("pointwise_mul: grids differ");
    GridSymbol r(f.grid);
    for (std::size_t i = 0; i < f.values.size(); ++i) r.values[i] = f.values[i] * g.values[i];
    return r;
}

void scale_inplace(GridSymbol& f, cplx a) {
    for (auto& v : f.values) v *= a;
}

void apply_edge_taper(GridSymbol& f, double rho0, double sigma) {
    const PhaseGrid& g = f.grid;
    for (int i = 0; i < g.n_x(); ++i) {
        double u = g.x(i) / g.x_max();
        for (int j = 0; j < g.n_p(); ++j) {
            double v = g.p(j) / g.p_max();
            double rho = std::sqrt(u * u + v * v);
            f.at(i, j) *= 0.5 * std::erfc((rho - rho0) / sigma);
        }
    }
}

static void interior_range(const PhaseGrid& g, double frac, int& i0, int& i1, int& j0, int& j1) {
    i0 = g.n_x(), i1 = 0, j0 = g.n_p(), j1 = 0;
    for (int i = 0; i < g.n_x(); ++i)
        if (std::abs(g.x(i)) <= frac * g.x_max()) {
            i0 = std::min(i0, i);
            i1 = std::max(i1, i + 1);
        }
    for (int j = 0; j < g.n_p(); ++j)
        if (std::abs(g.p(j)) <= frac * g.p_max()) {
            j0 = std::min(j0, j);
            j1 = std::max(j1, j + 1);
        }
}

double max_abs_diff_interior(const GridSymbol& a, const GridSymbol& b, double frac) {
    if (a.grid != b.grid) throw GridMismatchGuard("max_abs_diff_interior: grids differ");
    int i0, i1, j0, j1;
    interior_range(a.grid, frac, i0, i1, j0, j1);
    double m = 0.0;
    for (int i = i0; i < i1; ++i)
        for (int j = j0; j < j1; ++j) m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
    return m;
}

double max_abs_interior(const GridSymbol& a, double frac) {
    int i0, i1, j0, j1;
    interior_range(a.grid, frac, i0, i1, j0, j1);
    double m = 0.0;
    for (int i = i0; i < i1; ++i)
        for (int j = j0; j < j1; ++j) m = std::max(m, std::abs(a.at(i, j)));
    return m;
}

cplx interp_bilinear(const GridSymbol& f, double x, double p) {
    const PhaseGrid& g = f.grid;
    double fi = (x + g.x_max()) / g.dx();
    double fj = (p + g.p_max()) / g.dp();
    // snap near-exact lattice hits so pass-through lookups stay exact
    if (std::abs(fi - std::round(fi)) < 1e-9) fi = std::round(fi);
    if (std::abs(fj - std::round(fj)) < 1e-9) fj = std::round(fj);
    if (fi < 0.0 || fj < 0.0 || fi > g.n_x() - 1 || fj > g.n_p() - 1)
        throw CoverageGuard("bilinear interpolation outside grid");
    int i = std::min(int(fi), g.n_x() - 2);
    int j = std::min(int(fj), g.n_p() - 2);
    if (g.n_x() < 2 || g.n_p() < 2) throw ValidationError("grid too small");
    double u = fi - i, v = fj - j;
    return (1 - u) * (1 - v) * f.at(i, j) + u * (1 - v) * f.at(i + 1, j) +
           (1 - u) * v * f.at(i, j + 1) + u * v * f.at(i + 1, j + 1);
}

} // namespace moyal
