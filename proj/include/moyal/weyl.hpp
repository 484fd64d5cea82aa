#pragma once

#include <Eigen/Dense>

#include <functional>

#include "moyal/grid_symbol.hpp"
#include "moyal/phys.hpp"
#include "moyal/poly.hpp"

namespace moyal {

// Discretized position-space line for the dense-matrix oracle.
// Conjugate momenta p_k = (k - n_q/2) * 2 pi hbar / (n_q dq).
class PositionGrid {
public:
    PositionGrid(int n_q, double q_max) : nq_(n_q), qmax_(q_max) {
        if (!is_pow2(nq_) || nq_ < 8)
            throw ValidationError("PositionGrid: n_q must be a power of two >= 8");
        if (nq_ > 512)
            throw ValidationError("PositionGrid: dense oracle capped at n_q <= 512");
        if (!(qmax_ > 0)) throw ValidationError("PositionGrid: q_max must be positive");
        dq_ = 2.0 * qmax_ / nq_;
    }
    int n_q() const { return nq_; }
    double q_max() const { return qmax_; }
    double dq() const { return dq_; }
    double q(int i) const { return -qmax_ + i * dq_; }
    double p_mom(int k, double hbar) const {
        return (k - nq_ / 2) * 2.0 * M_PI * hbar / (nq_ * dq_);
    }
    // The phase-space lattice this oracle natively produces; it satisfies the
    // star_grid shear-lattice condition with m = 1.
    PhaseGrid natural_phase_grid(double hbar) const {
        return PhaseGrid(nq_, nq_, qmax_, M_PI * hbar / (2.0 * dq_));
    }

private:
    int nq_;
    double qmax_, dq_;
};

// Dense matrix with entries kappa_f(x_i, x_j) * dq, so matrix products
// approximate operator composition directly.
struct OperatorMatrix {
    Eigen::MatrixXcd mat;
    PositionGrid grid;
};

using SymbolEval = std::function<cplx(double, double)>;

SymbolEval eval_of(const PolySymbol& f);
SymbolEval eval_of(const GridSymbol& f); // bilinear; CoverageGuard off-grid

// Kernel treatment beyond the principal offset band |x - x'| >= q_max.
// decayed_zero: the kernel of a momentum-decaying symbol has decayed there;
// the offset DFT would alias near-diagonal values into the corners, so they
// are zeroed (the right call for every integrable symbol this oracle star-
// multiplies). periodic: keep the DFT wrap, which reproduces the canonical
// spectral discretization exactly for polynomial symbols like the SHO
// Hamiltonian (p^2-type kernels only decay algebraically).
enum class KernelFold { decayed_zero, periodic };

OperatorMatrix weyl_quantize(const SymbolEval& f, const PositionGrid& qgrid,
                             const PhysContext& ctx,
                             KernelFold fold = KernelFold::decayed_zero);
OperatorMatrix weyl_quantize(const PolySymbol& f, const PositionGrid& qgrid,
                             const PhysContext& ctx,
                             KernelFold fold = KernelFold::decayed_zero);
OperatorMatrix weyl_quantize(const GridSymbol& f, const PositionGrid& qgrid,
                             const PhysContext& ctx,
                             KernelFold fold = KernelFold::decayed_zero);

GridSymbol wigner_transform(const OperatorMatrix& A, const PhaseGrid& target,
                            const PhysContext& ctx);

GridSymbol star_via_operators(const SymbolEval& f, const SymbolEval& g,
                              const PositionGrid& qgrid, const PhaseGrid& target,
                              const PhysContext& ctx);

// Lowest eigenpairs of the discretized SHO Hamiltonian (p^2 + Omega^2 x^2)/2;
// eigenvectors are dq-normalized wavefunction samples.
struct OracleEigs {
    std::vector<double> energies;
    Eigen::MatrixXcd vectors; // column n = psi_n(x_i) with sum |psi|^2 dq = 1
};
OracleEigs oracle_sho_eigs(const PositionGrid& qgrid, const PhysContext& ctx, int count);

// Projector |psi_n><psi_n| in the oracle's matrix convention.
OperatorMatrix oracle_sho_projector(const PositionGrid& qgrid, const PhysContext& ctx, int n);

// Measured projection constant c in W0 * W0 = c * W0 for the int W0 = 1
// normalization, obtained entirely inside the oracle.
double oracle_projection_constant(const PositionGrid& qgrid, const PhysContext& ctx);

} // namespace moyal
