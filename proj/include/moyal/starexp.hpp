#pragma once

#include "moyal/ermakov.hpp"
#include "moyal/grid_symbol.hpp"
#include "moyal/phys.hpp"

namespace moyal {

// H(xi, pi) = (pi^2 + Omega^2 xi^2)/2 sampled on a grid.
GridSymbol sho_hamiltonian_symbol(const PhaseGrid& grid, const PhysContext& ctx);

// Closed form sec(Omega tau/2) exp[(2H / i hbar Omega) tan(Omega tau/2)]
// applied pointwise to the sampled Hamiltonian. Guarded around the sec poles.
GridSymbol star_exp_closed(const GridSymbol& h_vals, double tau, const PhysContext& ctx);

// Same object from the propagator route: the offset Fourier transform of the
// Mehler kernel, evaluated per gridpoint by the exact complex-Gaussian
// integral with epsilon-damping selecting the branch.
GridSymbol star_exp_via_propagator(const PhaseGrid& grid, double tau, const PhysContext& ctx,
                                   double eps = 1e-8);

// Abel-regularized Fourier-Dirichlet partial sum
//   2 pi hbar sum_{n<=n_max} r^n e^{-i tau Omega (n+1/2)} W_n(xi,pi).
GridSymbol fourier_dirichlet_sum(const PhaseGrid& grid, double tau, int n_max, double abel_r,
                                 const PhysContext& ctx);

// exp(-i Omega (n + 1/2) tau(t)) with tau from the Ermakov solution.
cplx phase_function(const TDModel& model, const ErmakovSolution& sol, int n, double t);

enum class EvolveRoute { rotation, conjugation };

struct EvolveResult {
    GridSymbol w;
    double clipped_fraction = 0.0; // |W|-mass fraction resampled from off-grid
};

// Moyal evolution under the quadratic H: classical rotation of the symbol
// (bilinear resampling), or the star-conjugation route
// Exp(+tau) * W0 * Exp(-tau) with windowed star exponentials.
EvolveResult evolve_wigner(const GridSymbol& w0, double tau, const PhysContext& ctx,
                           EvolveRoute route = EvolveRoute::rotation);

} // namespace moyal
