#include "moyal/poly.hpp"

#include <algorithm>
#include <vector>

#include "moyal/parallel.hpp"

namespace moyal {

// Dense coefficient rectangle c[i][j] for Horner; small degrees only.
static std::vector<std::vector<cplx>> dense_coeffs(const PolySymbol& f) {
    int dx = f.degree_x(), dp = f.degree_p();
    std::vector<std::vector<cplx>> c(dx + 1, std::vector<cplx>(dp + 1, cplx(0.0)));
    for (auto& [k, v] : f.terms()) c[k.first][k.second] = v;
    return c;
}

cplx PolySymbol::eval(double x, double p) const {
    if (coef_.empty()) return 0.0;
    auto c = dense_coeffs(*this);
    cplx acc(0.0);
    for (int i = int(c.size()) - 1; i >= 0; --i) {
        cplx inner(0.0);
        for (int j = int(c[i].size()) - 1; j >= 0; --j) inner = inner * p + c[i][j];
        acc = acc * x + inner;
    }
    return acc;
}

GridSymbol sample_poly(const PolySymbol& f, const PhaseGrid& grid) {
    GridSymbol s(grid);
    if (f.is_zero()) return s;
    auto c = dense_coeffs(f);
    parallel_for(std::size_t(grid.n_x()), [&](std::size_t i0, std::size_t i1) {
        for (std::size_t i = i0; i < i1; ++i) {
            double x = grid.x(int(i));
            cplx* row = s.values.data() + i * grid.n_p();
            for (int j = 0; j < grid.n_p(); ++j) {
                double p = grid.p(j);
                cplx acc(0.0);
                for (int a = int(c.size()) - 1; a >= 0; --a) {
                    cplx inner(0.0);
                    for (int b = int(c[a].size()) - 1; b >= 0; --b) inner = inner * p + c[a][b];
                    acc = acc * x + inner;
                }
                row[j] = acc;
            }
        }
    });
    check_finite(s, "sample_poly");
    return s;
}

double max_coeff_diff(const PolySymbol& a, const PolySymbol& b) {
    double m = 0.0;
    for (auto& [k, c] : a.terms()) m = std::max(m, std::abs(c - b.coeff(k.first, k.second)));
    for (auto& [k, c] : b.terms()) m = std::max(m, std::abs(c - a.coeff(k.first, k.second)));
    return m;
}

} // namespace moyal
