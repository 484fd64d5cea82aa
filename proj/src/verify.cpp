#include "moyal/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "moyal/invariant.hpp"
#include "moyal/models.hpp"
#include "moyal/star.hpp"
#include "moyal/starexp.hpp"
#include "moyal/weyl.hpp"

namespace moyal::verify {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string Report::to_json() const {
    std::ostringstream os;
    os << "{\"schema\":1,\"pass\":" << (all_pass() ? "true" : "false") << ",\"results\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        os << (i ? "," : "") << "{\"suite\":\"" << r.suite << "\",\"metric\":\"" << r.metric
           << "\",\"value\":" << fmt17(r.value) << ",\"tolerance\":" << fmt17(r.tolerance)
           << ",\"pass\":" << (r.pass ? "true" : "false") << "}";
    }
    os << "]}";
    return os.str();
}

void add_row(Report& rep, const std::string& suite, const std::string& metric, double value,
             double tol) {
    rep.rows.push_back({suite, metric, value, tol, value <= tol});
}

// ---- oracle equivalence -----------------------------------------------------

namespace {

PolySymbol random_poly(std::mt19937& rng, int max_total_degree) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    PolySymbol f;
    for (int a = 0; a <= max_total_degree; ++a)
        for (int b = 0; a + b <= max_total_degree; ++b) f.set(a, b, cplx(U(rng), 0.0));
    return f;
}

} // namespace

void suite_oracle(Report& rep, const OracleOptions& o) {
    PhysContext ctx(1.0, 1.0);

    // hand-derivable star_poly cases, exact in coefficients
    {
        PolySymbol xp = star_poly(PolySymbol::x(), PolySymbol::p(), ctx);
        PolySymbol expect;
        expect.set(1, 1, 1.0);
        expect.set(0, 0, cplx(0.0, 0.5));
        add_row(rep, "oracle", "star_poly_x_p", max_coeff_diff(xp, expect), o.tol_poly);

        PolySymbol x2 = PolySymbol::monomial(2, 0, 1.0), p2 = PolySymbol::monomial(0, 2, 1.0);
        PolySymbol x2p2 = star_poly(x2, p2, ctx);
        PolySymbol expect2;
        expect2.set(2, 2, 1.0);
        expect2.set(1, 1, cplx(0.0, 2.0));
        expect2.set(0, 0, -0.5);
        add_row(rep, "oracle", "star_poly_x2_p2", max_coeff_diff(x2p2, expect2), o.tol_poly);
    }

    PositionGrid qg(o.n_q, 8.0);
    PhaseGrid nat = qg.natural_phase_grid(ctx.hbar);
    const double sx = 0.9, sp = 2.5; // window widths; boundary decays below 1e-12
    auto window = [&](double x, double p) {
        return std::exp(-0.5 * x * x / (sx * sx) - 0.5 * p * p / (sp * sp));
    };

    std::mt19937 rng(o.seed);
    double worst = 0.0;
    for (int pair = 0; pair < o.pairs; ++pair) {
        PolySymbol fp = random_poly(rng, 4), gp = random_poly(rng, 4);
        auto fe = [&](double x, double p) { return fp.eval(x, p) * window(x, p); };
        auto ge = [&](double x, double p) { return gp.eval(x, p) * window(x, p); };
        GridSymbol f = sample(nat, fe), g = sample(nat, ge);
        GridSymbol engine = star_grid(f, g, ctx);
        GridSymbol oracle = star_via_operators(fe, ge, qg, nat, ctx);
        double scale = max_abs_interior(oracle, 0.5);
        double diff = max_abs_diff_interior(engine, oracle, 0.5);
        worst = std::max(worst, diff / scale);
    }
    add_row(rep, "oracle", "grid_vs_operators_rel", worst, o.tol_grid);
}

// ---- stargenvalue quantization ----------------------------------------------

void suite_stargenvalue(Report& rep, const StargenOptions& o) {
    PhysContext state_ctx(o.hbar_state, 1.0);
    PhysContext engine_ctx(o.hbar_engine, 1.0);
    PolySymbol h = scaled_oscillator_hamiltonian(engine_ctx);
    for (int n = 0; n <= o.n_max; ++n) {
        PhaseGrid grid = wigner_auto_grid(n, state_ctx, o.grid_n);
        GridSymbol wn = wigner_n_xipi(n, state_ctx, grid);
        GridSymbol hw = star_mixed(h, wn, engine_ctx, 2);
        double en = state_ctx.hbar * state_ctx.omega_cap * (n + 0.5);
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < wn.values.size(); ++k) {
            num = std::max(num, std::abs(hw.values[k] - en * wn.values[k]));
            den = std::max(den, std::abs(wn.values[k]));
        }
        add_row(rep, "stargenvalue", "n=" + std::to_string(n), num / den, o.tol);
    }
}

// ---- projection algebra -------------------------------------------------------

void suite_projection(Report& rep, const ProjectionOptions& o) {
    PhysContext ctx(1.0, 1.0);
    PhaseGrid grid = wigner_auto_grid(o.n_max, ctx, o.grid_n);
    std::vector<GridSymbol> W;
    for (int n = 0; n <= o.n_max; ++n) W.push_back(wigner_n_xipi(n, ctx, grid));

    std::vector<double> c(o.n_max + 1);
    double diag_resid = 0.0, offdiag = 0.0;
    for (int m = 0; m <= o.n_max; ++m) {
        for (int n = m; n <= o.n_max; ++n) {
            GridSymbol s = star_grid(W[m], W[n], ctx);
            if (m == n) {
                cplx num(0.0), den(0.0);
                for (std::size_t k = 0; k < s.values.size(); ++k) {
                    num += std::conj(W[n].values[k]) * s.values[k];
                    den += std::conj(W[n].values[k]) * W[n].values[k];
                }
                c[n] = (num / den).real();
                double r = 0.0, peak = 0.0;
                for (std::size_t k = 0; k < s.values.size(); ++k) {
                    r = std::max(r, std::abs(s.values[k] - c[n] * W[n].values[k]));
                    peak = std::max(peak, std::abs(c[n] * W[n].values[k]));
                }
                diag_resid = std::max(diag_resid, r / peak);
            } else {
                double r = 0.0, peak = 0.0;
                for (std::size_t k = 0; k < s.values.size(); ++k) {
                    r = std::max(r, std::abs(s.values[k]));
                    peak = std::max(peak, std::abs(W[n].values[k]));
                }
                offdiag = std::max(offdiag, r / peak);
            }
        }
    }
    double cbar = 0.0;
    for (double v : c) cbar += v;
    cbar /= c.size();
    double spread = 0.0;
    for (double v : c) spread = std::max(spread, std::abs(v - cbar) / cbar);

    add_row(rep, "projection", "c_consistency_rel", spread, o.tol_consistency);
    add_row(rep, "projection", "diag_shape_rel", diag_resid, o.tol_offdiag);
    add_row(rep, "projection", "offdiag_sup_rel", offdiag, o.tol_offdiag);

    PositionGrid qg(o.oracle_nq, 8.0);
    double c_oracle = oracle_projection_constant(qg, ctx);
    add_row(rep, "projection", "c_vs_oracle_rel", std::abs(cbar - c_oracle) / c_oracle,
            o.tol_oracle);
}

// ---- Ermakov residuals and invariant drift ----------------------------------

namespace {

bool model_selected(const std::string& label, const std::string& filter) {
    if (filter.empty() || filter == "all") return true;
    if (filter == "sho") return label == "sho";
    if (filter == "ck") return label == "caldirola_kanai";
    if (filter == "tdf") return label.rfind("tdf", 0) == 0;
    return label == filter;
}

} // namespace

void suite_ermakov(Report& rep, const ErmakovOptions& o, const std::string& model) {
    for (const auto& preset : all_presets()) {
        TDModel m = build_model(preset);
        if (!model_selected(m.label, model)) continue;
        ErmakovSolution sol = solve_rho(m, o.t0, o.t1, o.solver_tol);
        add_row(rep, "ermakov", m.label + "/residual_sup", sol.residual_sup(), o.residual_bound);
    }
}

void suite_invariant_drift(Report& rep, const DriftOptions& o, const std::string& model) {
    PhysContext ctx(1.0, 1.0);
    std::mt19937 rng(o.seed);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (const auto& preset : all_presets()) {
        TDModel m = build_model(preset);
        if (!model_selected(m.label, model)) continue;
        InvariantSpec spec{m, solve_rho(m, o.t0, o.t1, o.solver_tol), PhysContext(1.0, m.Omega)};
        double worst = 0.0;
        for (int k = 0; k < o.trajectories; ++k) {
            double x0 = U(rng), xd0 = U(rng);
            Trajectory tr = classical_trajectory(m, x0, xd0, o.t0, o.t1, o.solver_tol);
            double i0 = invariant_eval(spec, tr.x(o.t0), tr.p(o.t0), o.t0);
            if (std::abs(i0) < 0.05) {
                --k; // degenerate start, redraw
                continue;
            }
            for (int s = 0; s <= 100; ++s) {
                double t = o.t0 + (o.t1 - o.t0) * s / 100.0;
                double it = invariant_eval(spec, tr.x(t), tr.p(t), t);
                worst = std::max(worst, std::abs(it - i0) / std::abs(i0));
            }
        }
        add_row(rep, "invariant", m.label + "/drift_rel", worst, o.tol);
    }
}

// ---- Caldirola-Kanai closed forms --------------------------------------------

void suite_ck_closed(Report& rep, const CkClosedOptions& o) {
    TDModel m = build_model(ModelPreset::ck(o.m0, o.gamma0, o.omega0));
    double Om0 = std::sqrt(o.omega0 * o.omega0 - 0.25 * o.gamma0 * o.gamma0);
    ErmakovSolution sol = solve_rho(m, o.t0, o.t1, o.solver_tol);
    double drho = 0.0, dtau = 0.0;
    for (int k = 0; k <= 1000; ++k) {
        double t = o.t0 + (o.t1 - o.t0) * k / 1000.0;
        drho = std::max(drho, std::abs(sol.rho(t) - m.rho_closed(t)));
    }
    for (int k = 0; k <= 100; ++k) {
        double t = o.t0 + (o.t1 - o.t0) * k / 100.0;
        dtau = std::max(dtau, std::abs(sol.tau(t) - m.tau_closed(t)));
    }
    add_row(rep, "ck_closed", "rho_sup_err", drho, o.tol_rho_tau);
    add_row(rep, "ck_closed", "tau_sup_err", dtau, o.tol_rho_tau);

    double dphase = 0.0;
    for (int n = 0; n <= o.n_phase; ++n)
        for (double t : {1.0, 5.0, 10.0}) {
            cplx got = phase_function(m, sol, n, t);
            cplx want = std::exp(cplx(0.0, -Om0 * t * (n + 0.5)));
            dphase = std::max(dphase, std::abs(std::arg(got * std::conj(want))));
        }
    add_row(rep, "ck_closed", "phase_angle_err", dphase, o.tol_phase);
}

// ---- star-exponential routes --------------------------------------------------

void suite_starexp_routes(Report& rep, const StarexpOptions& o) {
    PhysContext ctx(1.0, 1.0);
    PhaseGrid grid(o.grid_n, o.grid_n, o.extent, o.extent);
    GridSymbol h = sho_hamiltonian_symbol(grid, ctx);
    for (double tau : o.taus) {
        GridSymbol closed = star_exp_closed(h, tau, ctx);
        GridSymbol prop = star_exp_via_propagator(grid, tau, ctx);
        double scale = max_abs_interior(closed, 0.5);
        double diff = max_abs_diff_interior(closed, prop, 0.5);
        char name[64];
        std::snprintf(name, sizeof name, "routes_rel_tau=%.6g", tau);
        add_row(rep, "starexp", name, diff / scale, o.tol_routes);
    }

    // Abel-regularized Fourier-Dirichlet partial sum against the closed form
    // at Omega tau = pi/2, compared in the Gaussian-weighted L2 metric that
    // matches the series' distributional convergence.
    double tau = M_PI / 2;
    GridSymbol closed = star_exp_closed(h, tau, ctx);
    GridSymbol dir = fourier_dirichlet_sum(grid, tau, o.dirichlet_nmax, o.abel_r, ctx);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < grid.n_x(); ++i)
        for (int j = 0; j < grid.n_p(); ++j) {
            double xi = grid.x(i), pj = grid.p(j);
            double w = std::exp(-(xi * xi + pj * pj) / ctx.hbar); // W_0-shaped weight
            cplx d = dir.at(i, j) - closed.at(i, j);
            num += std::norm(d) * w;
            den += std::norm(closed.at(i, j)) * w;
        }
    add_row(rep, "starexp", "dirichlet_weighted_rel", std::sqrt(num / den), o.tol_dirichlet);
}

// ---- evolution ----------------------------------------------------------------

void suite_evolution(Report& rep, const EvolutionOptions& o) {
    PhysContext ctx(1.0, 1.0);
    PhaseGrid grid =
        PhaseGrid::star_compatible(o.extent, o.extent, o.grid_n, o.grid_n, ctx.hbar);
    double tau = M_PI / 2; // exact-lookup rotation angle

    // displaced Gaussian (coherent-state Wigner) centered at (1, 0)
    GridSymbol w0 = sample(grid, [&](double x, double p) {
        return cplx(std::exp(-((x - 1.0) * (x - 1.0) + p * p) / ctx.hbar) / (M_PI * ctx.hbar));
    });
    EvolveResult rot = evolve_wigner(w0, tau, ctx, EvolveRoute::rotation);
    EvolveResult conj = evolve_wigner(w0, tau, ctx, EvolveRoute::conjugation);
    double scale = max_abs_interior(rot.w, 0.5);
    add_row(rep, "evolution", "conjugation_vs_rotation_rel",
            max_abs_diff_interior(rot.w, conj.w, 0.5) / scale, o.tol_routes);

    double fixed = 0.0;
    for (int n = 0; n <= 3; ++n) {
        PhaseGrid wg = wigner_auto_grid(n, ctx, o.grid_n);
        GridSymbol wn = wigner_n_xipi(n, ctx, wg);
        EvolveResult ev = evolve_wigner(wn, tau, ctx, EvolveRoute::rotation);
        double peak = 0.0, diff = 0.0;
        for (std::size_t k = 0; k < wn.values.size(); ++k) {
            peak = std::max(peak, std::abs(wn.values[k]));
            diff = std::max(diff, std::abs(ev.w.values[k] - wn.values[k]));
        }
        fixed = std::max(fixed, diff / peak);
    }
    add_row(rep, "evolution", "wn_fixed_point_rel", fixed, o.tol_fixed);

    SymbolNorms before = symbol_norms(w0), after = symbol_norms(rot.w);
    double dint = std::abs(after.integral - before.integral) / std::abs(before.integral);
    double dl2 = std::abs(after.l2 * after.l2 - before.l2 * before.l2) /
                 (before.l2 * before.l2);
    add_row(rep, "evolution", "integral_conservation_rel", dint, o.tol_conserve);
    add_row(rep, "evolution", "l2sq_conservation_rel", dl2, o.tol_conserve);
}

// ---- classical limit ------------------------------------------------------------

void suite_classical_limit(Report& rep) {
    PhysContext zero(0.0, 1.0), one(1.0, 1.0);
    std::mt19937 rng(424242);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        PolySymbol f = random_poly(rng, 4), g = random_poly(rng, 4);
        worst = std::max(worst, max_coeff_diff(star_poly(f, g, zero), f * g));
    }
    add_row(rep, "classical", "hbar0_pointwise_exact", worst, 0.0);

    double worst2 = 0.0;
    for (int k = 0; k < 10; ++k) {
        PolySymbol f = random_poly(rng, 2), g = random_poly(rng, 2);
        worst2 = std::max(worst2,
                          max_coeff_diff(moyal_bracket(f, g, one), poisson_bracket(f, g)));
    }
    add_row(rep, "classical", "quadratic_bracket_is_poisson", worst2, 0.0);
}

// ---- dispatch -------------------------------------------------------------------

std::vector<std::string> suite_names() {
    return {"oracle",    "stargenvalue", "projection", "ermakov",  "invariant",
            "ck_closed", "starexp",      "evolution",  "classical"};
}

Report run_suites(const std::vector<std::string>& names, const std::string& model) {
    auto wanted = [&](const std::string& s) {
        if (names.empty()) return true;
        for (const auto& n : names)
            if (n == s || n == "all") return true;
        return false;
    };
    Report rep;
    if (wanted("oracle")) suite_oracle(rep);
    if (wanted("stargenvalue")) suite_stargenvalue(rep);
    if (wanted("projection")) suite_projection(rep);
    if (wanted("ermakov")) suite_ermakov(rep, {}, model);
    if (wanted("invariant")) suite_invariant_drift(rep, {}, model);
    if (wanted("ck_closed")) suite_ck_closed(rep);
    if (wanted("starexp")) suite_starexp_routes(rep);
    if (wanted("evolution")) suite_evolution(rep);
    if (wanted("classical")) suite_classical_limit(rep);
    for (const auto& n : names)
        if (n != "all" && std::find(suite_names().begin(), suite_names().end(), n) ==
                              suite_names().end())
            throw ValidationError("unknown suite '" + n + "'");
    return rep;
}

} // namespace moyal::verify
