#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "moyal/phys.hpp"

namespace moyal::verify {

struct CheckRow {
    std::string suite;
    std::string metric;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Report {
    std::vector<CheckRow> rows;
    bool all_pass() const {
        for (auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
    std::string to_json() const; // {"schema":1, "pass":..., "results":[...]}
};

void add_row(Report& rep, const std::string& suite, const std::string& metric, double value,
             double tol);

// ---- suite options: defaults pin the acceptance parameters -----------------

struct OracleOptions {
    int n_q = 256;
    int pairs = 20;
    unsigned seed = 20240817;
    double tol_poly = 1e-12;
    double tol_grid = 1e-4;
};

struct StargenOptions {
    int n_max = 10;
    double tol = 1e-6;
    int grid_n = 512;
    double hbar_state = 1.0;  // hbar used to build W_n and E_n
    double hbar_engine = 1.0; // hbar used by the star product (fault injection)
};

struct ProjectionOptions {
    int n_max = 5;
    int grid_n = 256;
    int oracle_nq = 256;
    double tol_consistency = 1e-6;
    double tol_offdiag = 1e-6;
    double tol_oracle = 1e-3;
};

struct ErmakovOptions {
    double t0 = 0.0, t1 = 10.0;
    double solver_tol = 1e-12;
    double residual_bound = 1e-8;
};

struct DriftOptions {
    double t0 = 0.0, t1 = 10.0;
    int trajectories = 5;
    unsigned seed = 7041776;
    double solver_tol = 1e-12;
    double tol = 1e-6;
};

struct CkClosedOptions {
    double m0 = 1.0, gamma0 = 0.6, omega0 = 1.0;
    double t0 = 0.0, t1 = 10.0;
    double solver_tol = 1e-12;
    double tol_rho_tau = 1e-8;
    double tol_phase = 1e-9;
    int n_phase = 5;
};

struct StarexpOptions {
    std::vector<double> taus = {0.3, M_PI / 2, 2.0, 3.0 * M_PI / 4};
    double tol_routes = 1e-8;
    int grid_n = 128;
    double extent = 6.0;
    double abel_r = 0.999;
    int dirichlet_nmax = 400;
    double tol_dirichlet = 1e-2;
};

struct EvolutionOptions {
    int grid_n = 512;
    double extent = 20.0;
    double tol_routes = 1e-5;
    double tol_fixed = 1e-6;
    double tol_conserve = 1e-6;
};

void suite_oracle(Report& rep, const OracleOptions& o = {});
void suite_stargenvalue(Report& rep, const StargenOptions& o = {});
void suite_projection(Report& rep, const ProjectionOptions& o = {});
void suite_ermakov(Report& rep, const ErmakovOptions& o = {}, const std::string& model = "");
void suite_invariant_drift(Report& rep, const DriftOptions& o = {}, const std::string& model = "");
void suite_ck_closed(Report& rep, const CkClosedOptions& o = {});
void suite_starexp_routes(Report& rep, const StarexpOptions& o = {});
void suite_evolution(Report& rep, const EvolutionOptions& o = {});
void suite_classical_limit(Report& rep);

// Run the named suites ("" or "all" = everything); model filters the
// model-parametrized suites.
Report run_suites(const std::vector<std::string>& names, const std::string& model = "");

std::vector<std::string> suite_names();

} // namespace moyal::verify
