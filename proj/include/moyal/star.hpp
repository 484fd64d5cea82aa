#pragma once

#include "moyal/grid_symbol.hpp"
#include "moyal/phys.hpp"
#include "moyal/poly.hpp"

namespace moyal {

// Exact Moyal product of polynomials: the bidifferential series
//   sum_{m,n} (i hbar/2)^{m+n} (-1)^m / (m! n!) (d_p^m d_x^n f)(d_p^n d_x^m g)
// terminates, so the result is exact in coefficient arithmetic.
PolySymbol star_poly(const PolySymbol& f, const PolySymbol& g, const PhysContext& ctx);

PolySymbol poisson_bracket(const PolySymbol& f, const PolySymbol& g);

enum class Side { left, right };            // left: f * g, right: g * f
enum class DerivKind { spectral, fd4 };

// Same series with analytic derivatives on the polynomial factor and grid
// derivatives on g. Spectral derivatives by default; fd4 uses 4th-order
// central stencils (with the width guard) and suits non-decaying symbols.
GridSymbol star_mixed(const PolySymbol& f, const GridSymbol& g, const PhysContext& ctx,
                      int max_order, Side side = Side::left,
                      DerivKind dk = DerivKind::spectral);

enum class StarGridPath { automatic, lattice, shear };

// Integral-representation star product of two grid symbols, evaluated
// spectrally (see star_grid.cpp for the derivation). Requires matching grids
// and boundary decay below decay_tol * sup.
GridSymbol star_grid(const GridSymbol& f, const GridSymbol& g, const PhysContext& ctx,
                     StarGridPath path = StarGridPath::automatic, double decay_tol = 1e-12);

// (f*g - g*f) / (i hbar); the hbar = 0 limit is the Poisson bracket.
PolySymbol moyal_bracket(const PolySymbol& f, const PolySymbol& g, const PhysContext& ctx);
GridSymbol moyal_bracket(const GridSymbol& f, const GridSymbol& g, const PhysContext& ctx);
GridSymbol moyal_bracket(const PolySymbol& f, const GridSymbol& g, const PhysContext& ctx,
                         int max_order, DerivKind dk = DerivKind::spectral);

} // namespace moyal
