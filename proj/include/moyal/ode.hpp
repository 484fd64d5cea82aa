#pragma once

#include <functional>
#include <vector>

#include "moyal/errors.hpp"

namespace moyal::ode {

struct Options {
    double rtol = 1e-10;
    double atol = 1e-12;
    double h_init = 0.0; // 0: heuristic
    double h_max = 0.0;  // 0: interval length
    double h_min_rel = 1e-13;
    std::size_t max_steps = 2000000;
};

using Rhs = std::function<void(double t, const double* y, double* dy)>;

// Dormand-Prince 5(4) solution with the classic 4th-order continuous
// extension stored per accepted step, so the solution is evaluable anywhere
// in [t0, t1] after the fact.
class DenseSolution {
public:
    double t_begin() const { return t0_; }
    double t_end() const { return t1_; }
    std::size_t dim() const { return dim_; }
    std::size_t steps() const { return tl_.size(); }

    double eval(double t, std::size_t comp) const;
    std::vector<double> eval_state(double t) const;

private:
    friend DenseSolution integrate(const Rhs&, std::vector<double>, double, double,
                                   const Options&);
    double t0_ = 0, t1_ = 0;
    std::size_t dim_ = 0;
    std::vector<double> tl_, h_;          // step left ends and sizes
    std::vector<double> rcont_;           // 5 * dim per step
    std::size_t locate(double t) const;
};

DenseSolution integrate(const Rhs& f, std::vector<double> y0, double t0, double t1,
                        const Options& opts = {});

} // namespace moyal::ode
