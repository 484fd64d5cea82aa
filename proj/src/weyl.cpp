#include "moyal/weyl.hpp"

#include <cmath>
#include <vector>

#include "moyal/fft.hpp"

namespace moyal {

SymbolEval eval_of(const PolySymbol& f) {
    return [f](double x, double p) { return f.eval(x, p); };
}

SymbolEval eval_of(const GridSymbol& f) {
    // decayed symbols extend by zero (the oracle probes the full momentum
    // band); symbols that have not decayed keep the out-of-range error
    double sup = 0.0;
    for (const cplx& v : f.values) sup = std::max(sup, std::abs(v));
    bool decayed = boundary_max(f) <= 1e-10 * sup;
    return [f, decayed](double x, double p) -> cplx {
        if (std::abs(x) > f.grid.x_max() - f.grid.dx() ||
            std::abs(p) > f.grid.p_max() - f.grid.dp()) {
            if (decayed) return cplx(0.0);
            throw CoverageGuard("GridSymbol evaluation outside its grid");
        }
        return interp_bilinear(f, x, p);
    };
}

// kappa_f(x, x') = (1/2 pi hbar) Int f((x+x')/2, p) e^{i p (x-x')/hbar} dp,
// evaluated by one centered FFT over the momentum grid per midpoint; matrix
// entry = kappa * dq.
OperatorMatrix weyl_quantize(const SymbolEval& f, const PositionGrid& qgrid,
                             const PhysContext& ctx, KernelFold fold) {
    if (!(ctx.hbar > 0)) throw ValidationError("weyl_quantize: hbar must be positive");
    const int nq = qgrid.n_q();
    const double dq = qgrid.dq();
    const double dpm = 2.0 * M_PI * ctx.hbar / (nq * dq);

    // midpoints (x_i + x_j)/2 live on the half-step lattice, index u = i + j
    Eigen::MatrixXcd kappa_u(2 * nq - 1, nq); // row u: offsets w = i - j (mod nq)
    std::vector<cplx> buf(nq);
    for (int u = 0; u <= 2 * (nq - 1); ++u) {
        double mid = -qgrid.q_max() + 0.5 * u * dq;
        for (int k = 0; k < nq; ++k) buf[k] = f(mid, qgrid.p_mom(k, ctx.hbar));
        // sum_k f e^{i p_k w dq / hbar} = (-1)^w * backward DFT at index w
        fft::fft_1d(buf.data(), nq, +1);
        for (int w = 0; w < nq; ++w) kappa_u(u, w) = buf[w];
    }

    OperatorMatrix op{Eigen::MatrixXcd(nq, nq), qgrid};
    const double scale = dpm / (2.0 * M_PI * ctx.hbar) * dq; // includes the dq convention
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < nq; ++j) {
            int w = i - j;
            if (fold == KernelFold::decayed_zero && std::abs(w) >= nq / 2) {
                op.mat(i, j) = 0.0;
                continue;
            }
            double sgn = (w % 2) ? -1.0 : 1.0;
            int widx = (w % nq + nq) % nq;
            op.mat(i, j) = scale * sgn * kappa_u(i + j, widx);
        }
    return op;
}

OperatorMatrix weyl_quantize(const PolySymbol& f, const PositionGrid& qgrid,
                             const PhysContext& ctx, KernelFold fold) {
    return weyl_quantize(eval_of(f), qgrid, ctx, fold);
}
OperatorMatrix weyl_quantize(const GridSymbol& f, const PositionGrid& qgrid,
                             const PhysContext& ctx, KernelFold fold) {
    return weyl_quantize(eval_of(f), qgrid, ctx, fold);
}

// A_W(x, p) = Int <x - s/2| A |x + s/2> e^{i p s / hbar} ds with s = 2 m dq,
// FFT along the antidiagonal offset; bilinear resample onto the target.
GridSymbol wigner_transform(const OperatorMatrix& A, const PhaseGrid& target,
                            const PhysContext& ctx) {
    const PositionGrid& qg = A.grid;
    const int nq = qg.n_q();
    const double dq = qg.dq();
    PhaseGrid nat = qg.natural_phase_grid(ctx.hbar);
    if (target.x_max() > qg.q_max() + 1e-12 || target.p_max() > nat.p_max() + 1e-12)
        throw CoverageGuard("wigner_transform: target extents exceed oracle coverage");

    GridSymbol natw(nat);
    std::vector<cplx> buf(nq);
    for (int i = 0; i < nq; ++i) {
        // offsets m_t = -nq/2 .. nq/2 - 1; <x_i - m dq| A |x_i + m dq> = mat/dq
        for (int k = 0; k < nq; ++k) {
            int mt = k - nq / 2;
            int a = i - mt, b = i + mt;
            buf[k] = (a >= 0 && a < nq && b >= 0 && b < nq) ? A.mat(a, b) / dq : cplx(0.0);
        }
        // A_W(x_i, p_l) = 2 dq * sum_m buf e^{2 pi i (l - nq/2)(m)/nq} (centered)
        fft::centered_fft_1d(buf.data(), nq, +1);
        for (int l = 0; l < nq; ++l) natw.at(i, l) = 2.0 * dq * buf[l];
    }

    if (target == nat) return natw;
    GridSymbol out(target);
    for (int i = 0; i < target.n_x(); ++i)
        for (int j = 0; j < target.n_p(); ++j)
            out.at(i, j) = interp_bilinear(natw, target.x(i), target.p(j));
    return out;
}

GridSymbol star_via_operators(const SymbolEval& f, const SymbolEval& g,
                              const PositionGrid& qgrid, const PhaseGrid& target,
                              const PhysContext& ctx) {
    OperatorMatrix qf = weyl_quantize(f, qgrid, ctx);
    OperatorMatrix qg = weyl_quantize(g, qgrid, ctx);
    OperatorMatrix prod{qf.mat * qg.mat, qgrid};
    return wigner_transform(prod, target, ctx);
}

OracleEigs oracle_sho_eigs(const PositionGrid& qgrid, const PhysContext& ctx, int count) {
    PolySymbol h;
    h.set(0, 2, 0.5);
    h.set(2, 0, 0.5 * ctx.omega_cap * ctx.omega_cap);
    // periodic fold: the canonical spectral discretization of the SHO
    OperatorMatrix H = weyl_quantize(h, qgrid, ctx, KernelFold::periodic);
    // symmetrize: real symbols give Hermitian matrices up to roundoff
    Eigen::MatrixXcd Hs = 0.5 * (H.mat + H.mat.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Hs);
    if (es.info() != Eigen::Success) throw Error("oracle_sho_eigs: eigensolver failed");
    OracleEigs out;
    out.energies.assign(es.eigenvalues().data(), es.eigenvalues().data() + count);
    out.vectors = es.eigenvectors().leftCols(count) / std::sqrt(qgrid.dq());
    return out;
}

OperatorMatrix oracle_sho_projector(const PositionGrid& qgrid, const PhysContext& ctx, int n) {
    OracleEigs eigs = oracle_sho_eigs(qgrid, ctx, n + 1);
    Eigen::VectorXcd psi = eigs.vectors.col(n);
    // kernel psi(x) psi*(x'); matrix entry includes the dq factor
    OperatorMatrix P{(psi * psi.adjoint()) * qgrid.dq(), qgrid};
    return P;
}

double oracle_projection_constant(const PositionGrid& qgrid, const PhysContext& ctx) {
    OperatorMatrix P = oracle_sho_projector(qgrid, ctx, 0);
    PhaseGrid nat = qgrid.natural_phase_grid(ctx.hbar);
    GridSymbol w = wigner_transform(P, nat, ctx);
    // normalize to int W = 1, then project W*W onto W
    SymbolNorms nw = symbol_norms(w);
    scale_inplace(w, 1.0 / nw.integral);
    GridSymbol ww = star_via_operators(eval_of(w), eval_of(w), qgrid, nat, ctx);
    cplx num(0.0), den(0.0);
    for (std::size_t k = 0; k < w.values.size(); ++k) {
        num += std::conj(w.values[k]) * ww.values[k];
        den += std::conj(w.values[k]) * w.values[k];
    }
    return (num / den).real();
}

} // namespace moyal
