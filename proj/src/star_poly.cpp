#include <vector>

#include "moyal/star.hpp"

namespace moyal {

PolySymbol star_poly(const PolySymbol& f, const PolySymbol& g, const PhysContext& ctx) {
    const double hb = ctx.hbar;
    if (hb == 0.0) return f * g; // classical limit: pointwise product

    // derivative tables; the series terminates once either factor vanishes
    const int mp = f.degree_p(), nx = f.degree_x();
    const int gp = g.degree_p(), gx = g.degree_x();
    std::vector<std::vector<PolySymbol>> df(mp + 1, std::vector<PolySymbol>(nx + 1));
    for (int m = 0; m <= mp; ++m)
        for (int n = 0; n <= nx; ++n) df[m][n] = f.deriv(n, m); // (ox, op) = (n, m)

    PolySymbol out;
    const cplx ih2 = cplx(0.0, hb / 2.0);
    for (int m = 0; m <= std::min(mp, gx); ++m) {
        for (int n = 0; n <= std::min(nx, gp); ++n) {
            if (df[m][n].is_zero()) continue;
            PolySymbol dg = g.deriv(m, n); // d_x^m d_p^n g
            if (dg.is_zero()) continue;
            double fact = 1.0;
            for (int t = 2; t <= m; ++t) fact *= t;
            for (int t = 2; t <= n; ++t) fact *= t;
            cplx coef = std::pow(ih2, m + n) * ((m % 2) ? -1.0 : 1.0) / fact;
            out += coef * (df[m][n] * dg);
        }
    }
    return out;
}

PolySymbol poisson_bracket(const PolySymbol& f, const PolySymbol& g) {
    return f.deriv_x() * g.deriv_p() - f.deriv_p() * g.deriv_x();
}

PolySymbol moyal_bracket(const PolySymbol& f, const PolySymbol& g, const PhysContext& ctx) {
    if (ctx.hbar == 0.0) return poisson_bracket(f, g); // continuous hbar -> 0 limit
    // All m+n >= 3 terms carry a third derivative of whichever factor has
    // degree <= 2, so the bracket IS the Poisson bracket for such pairs.
    if (std::min(f.degree(), g.degree()) <= 2) return poisson_bracket(f, g);
    // General case: only odd orders survive the commutator; antisymmetrize
    // term by term so {f, f} = 0 holds exactly and coefficients stay real
    // for real inputs: (i hbar/2)^k / (i hbar) = (-1)^((k-1)/2) hbar^(k-1) / 2^k.
    PolySymbol out;
    const int dmax = std::min(f.degree(), g.degree());
    for (int m = 0; m <= dmax; ++m) {
        for (int n = 0; n + m <= dmax; ++n) {
            if ((m + n) % 2 == 0) continue;
            PolySymbol df = f.deriv(n, m), dg = g.deriv(m, n);
            PolySymbol gf = g.deriv(n, m), fg_ = f.deriv(m, n);
            if (df.is_zero() && gf.is_zero()) continue;
            double fact = 1.0;
            for (int t = 2; t <= m; ++t) fact *= t;
            for (int t = 2; t <= n; ++t) fact *= t;
            int k = m + n;
            double coef = std::pow(ctx.hbar / 2.0, k - 1) / 2.0 / fact;
            if (((k - 1) / 2) % 2) coef = -coef;
            if (m % 2) coef = -coef;
            out += coef * (df * dg - gf * fg_);
        }
    }
    return out;
}

} // namespace moyal
