#pragma once

#include "moyal/ermakov.hpp"
#include "moyal/phys.hpp"
#include "moyal/poly.hpp"

namespace moyal {

struct InvariantSpec {
    TDModel model;
    ErmakovSolution sol; // generated from model
    PhysContext ctx;
};

struct XiPi {
    double xi, pi;
};

// xi = x/rho, pi = p rho - m x rhodot (and the inverse map).
XiPi xi_pi_of_xp(const InvariantSpec& spec, double x, double p, double t);
struct XP {
    double x, p;
};
XP xp_of_xi_pi(const InvariantSpec& spec, double xi, double pi, double t);

// Lewis-Riesenfeld invariant I = (pi^2 + Omega^2 xi^2) / 2.
double invariant_eval(const InvariantSpec& spec, double x, double p, double t);

// Standard Laguerre polynomial by forward recurrence; n <= 500.
double laguerre(int n, double z);
// exp(-z/2) L_n(z); bounded by 1 for z >= 0, safe for any grid.
double laguerre_scaled(int n, double z);

enum class Frame { xi_pi, x_p };

// H(xi, pi) = (pi^2 + Omega^2 xi^2)/2 as an exact polynomial in grid coords.
PolySymbol scaled_oscillator_hamiltonian(const PhysContext& ctx);

// Diagonal Wigner function W_n in the (xi, pi) frame; no model needed.
GridSymbol wigner_n_xipi(int n, const PhysContext& ctx, const PhaseGrid& grid);

// Frame-aware variant: x_p evaluates the pullback through xi_pi_of_xp at t.
GridSymbol wigner_n(int n, const InvariantSpec& spec, const PhaseGrid& grid, Frame frame,
                    double t = 0.0);

// Grid auto-sizing: xi half-extent 6 sqrt(hbar (2n+1) / Omega), pi half-extent
// Omega times that, adjusted onto the star-compatible lattice.
PhaseGrid wigner_auto_grid(int n_max, const PhysContext& ctx, int n_points = 256);

} // namespace moyal
