#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "moyal/grid.hpp"

namespace moyal {

using cplx = std::complex<double>;

// Complex-valued function sampled on a PhaseGrid, row-major with x outer.
struct GridSymbol {
    PhaseGrid grid;
    std::vector<cplx> values;

    explicit GridSymbol(const PhaseGrid& g) : grid(g), values(g.size(), cplx(0.0)) {}
    GridSymbol(const PhaseGrid& g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.size())
            throw ValidationError("GridSymbol: value count does not match grid");
    }

    cplx& at(int i, int j) { return values[grid.index(i, j)]; }
    const cplx& at(int i, int j) const { return values[grid.index(i, j)]; }
};

struct SymbolNorms {
    double l2 = 0.0;
    double sup = 0.0;
    cplx integral{0.0, 0.0};
};

GridSymbol sample(const PhaseGrid& g, const std::function<cplx(double, double)>& f);

// Uniform-weight quadrature (periodic convention), L2 and sup norms.
SymbolNorms symbol_norms(const GridSymbol& f);

// Largest |value| on the outermost rows/columns; drives decay preconditions.
double boundary_max(const GridSymbol& f);

void check_finite(const GridSymbol& f, const char* who);

GridSymbol conj_symbol(const GridSymbol& f);
GridSymbol lin_comb(cplx a, const GridSymbol& f, cplx b, const GridSymbol& g);
GridSymbol pointwise_mul(const GridSymbol& f, const GridSymbol& g);
void scale_inplace(GridSymbol& f, cplx a);

// Multiply by the radial erfc taper w = erfc((rho - rho0)/sigma)/2 in the
// normalized elliptical radius rho = sqrt((x/x_max)^2 + (p/p_max)^2).
// Flat to ~1e-11 inside rho0 - 4 sigma and below 1e-12 at the boundary.
// The absolute transition scale sigma * extent must stay well above
// sqrt(hbar), or the star product's nonlocality drags edge artifacts into
// the interior. Defaults suit extents ~= 16-20 sqrt(hbar).
void apply_edge_taper(GridSymbol& f, double rho0 = 0.58, double sigma = 0.075);

// max_ij |a - b| over the centered sub-box of half-extent frac * extent.
double max_abs_diff_interior(const GridSymbol& a, const GridSymbol& b, double frac = 0.5);
double max_abs_interior(const GridSymbol& a, double frac = 0.5);

// Bilinear interpolation; throws CoverageGuard outside the grid.
cplx interp_bilinear(const GridSymbol& f, double x, double p);

// Serialization. CSV: header "x,p,re,im", row-major x outer.
// JSON: {"grid": {...}, "values": [[re, im], ...]}.
void write_csv(const GridSymbol& f, const std::string& path);
void write_json(const GridSymbol& f, const std::string& path);
GridSymbol read_csv(const std::string& path);
GridSymbol read_json(const std::string& path);

} // namespace moyal
