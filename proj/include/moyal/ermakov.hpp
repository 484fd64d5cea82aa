#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>

#include "moyal/ode.hpp"

namespace moyal {

// Time-dependent oscillator: m(t), omega(t), gamma = mdot/m, constant Omega.
// Presets may attach closed forms (test expectations) and initial data for
// the auxiliary equation.
struct TDModel {
    std::string label = "custom";
    double Omega = 1.0;
    std::function<double(double)> mass;
    std::function<double(double)> omega;
    std::function<double(double)> gamma; // mdot/m
    bool unit_mass = false;              // enables the Pinney superposition path

    // auxiliary-equation initial data; NaN selects the WKB seed
    double rho0 = std::numeric_limits<double>::quiet_NaN();
    double rhodot0 = std::numeric_limits<double>::quiet_NaN();

    // optional closed forms
    std::function<double(double)> rho_closed, rhodot_closed, tau_closed;

    void validate_at(double t) const;
};

// gamma(t) by 4th-order central difference of log m, h = 1e-5 (1 + |t|);
// used when a preset has no analytic mdot.
std::function<double(double)> gamma_from_mass_fd(std::function<double(double)> mass);

struct LinearModes {
    ode::DenseSolution u, v; // u(t0)=1, udot(t0)=0; v(t0)=0, vdot(t0)=1
    double wronskian;        // u vdot - udot v at t0 (m-weighted constancy checked)
    double mw_drift;         // measured sup |m W - m0 W0| / |m0 W0|
};

LinearModes solve_linear_modes(const TDModel& model, double t0, double t1, double tol);

enum class RhoMethod { Auto, Pinney, Direct };

// rho(t), rhodot(t), tau(t) evaluators with residual diagnostics.
class ErmakovSolution {
public:
    double rho(double t) const;
    double rhodot(double t) const;
    double tau(double t) const; // tau(t0) = 0, strictly increasing
    double residual_sup() const { return residual_sup_; }
    double t_begin() const { return t0_; }
    double t_end() const { return t1_; }
    const TDModel& model() const { return model_; }

private:
    friend ErmakovSolution solve_rho(const TDModel&, double, double, double, RhoMethod);
    TDModel model_;
    double t0_ = 0, t1_ = 0, residual_sup_ = 0;
    bool pinney_ = false;
    std::shared_ptr<const LinearModes> modes_;    // Pinney path
    std::shared_ptr<const ode::DenseSolution> direct_; // direct RK path
};

ErmakovSolution solve_rho(const TDModel& model, double t0, double t1, double tol,
                          RhoMethod method = RhoMethod::Auto);

double tau_of_t(const ErmakovSolution& sol, double t);

struct Trajectory {
    std::shared_ptr<const ode::DenseSolution> sol;
    std::function<double(double)> mass;
    double x(double t) const { return sol->eval(t, 0); }
    double xdot(double t) const { return sol->eval(t, 1); }
    double p(double t) const { return mass(t) * xdot(t); }
};

Trajectory classical_trajectory(const TDModel& model, double x0, double xdot0, double t0,
                                double t1, double tol);

} // namespace moyal
