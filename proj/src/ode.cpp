#include "moyal/ode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace moyal::ode {

namespace {

// Dormand-Prince 5(4) tableau and dense-output coefficients (Hairer/Norsett/
// Wanner, DOPRI5).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

} // namespace

std::size_t DenseSolution::locate(double t) const {
    double span = t1_ - t0_;
    if (t < t0_ - 1e-12 * std::abs(span) - 1e-300 || t > t1_ + 1e-12 * std::abs(span) + 1e-300)
        throw ValidationError("DenseSolution: t outside [t0, t1]");
    t = std::clamp(t, t0_, t1_);
    // binary search for the step containing t
    std::size_t lo = 0, hi = tl_.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi + 1) / 2;
        if (tl_[mid] <= t)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

double DenseSolution::eval(double t, std::size_t comp) const {
    std::size_t s = locate(t);
    t = std::clamp(t, t0_, t1_);
    double th = (t - tl_[s]) / h_[s];
    double th1 = 1.0 - th;
    const double* r = rcont_.data() + 5 * dim_ * s + 5 * comp;
    return r[0] + th * (r[1] + th1 * (r[2] + th * (r[3] + th1 * r[4])));
}

std::vector<double> DenseSolution::eval_state(double t) const {
    std::vector<double> out(dim_);
    for (std::size_t c = 0; c < dim_; ++c) out[c] = eval(t, c);
    return out;
}

DenseSolution integrate(const Rhs& f, std::vector<double> y0, double t0, double t1,
                        const Options& opts) {
    const std::size_t dim = y0.size();
    if (!(t1 > t0)) throw ValidationError("ode::integrate: need t1 > t0");

    DenseSolution sol;
    sol.t0_ = t0;
    sol.t1_ = t1;
    sol.dim_ = dim;

    std::vector<double> y = y0, ynew(dim), ytmp(dim), err(dim);
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);

    const double span = t1 - t0;
    double hmax = opts.h_max > 0 ? opts.h_max : span;
    double h = opts.h_init > 0 ? opts.h_init : std::min(hmax, span / 100.0);
    const double hmin = opts.h_min_rel * span;

    double t = t0;
    f(t, y.data(), k1.data());
    std::size_t nsteps = 0;

    while (t < t1) {
        if (++nsteps > opts.max_steps)
            throw StepUnderflowGuard("ode: step budget exhausted (stiff input?)");
        if (h < hmin)
            throw StepUnderflowGuard("ode: step size underflow at t = " + std::to_string(t));
        if (t + h > t1) h = t1 - t;

        auto stage = [&](double ci, std::initializer_list<std::pair<const double*, double>> terms) {
            for (std::size_t i = 0; i < dim; ++i) {
                double acc = y[i];
                for (auto& [k, a] : terms) acc += h * a * k[i];
                ytmp[i] = acc;
            }
            (void)ci;
        };

        stage(c2, {{k1.data(), a21}});
        f(t + c2 * h, ytmp.data(), k2.data());
        stage(c3, {{k1.data(), a31}, {k2.data(), a32}});
        f(t + c3 * h, ytmp.data(), k3.data());
        stage(c4, {{k1.data(), a41}, {k2.data(), a42}, {k3.data(), a43}});
        f(t + c4 * h, ytmp.data(), k4.data());
        stage(c5, {{k1.data(), a51}, {k2.data(), a52}, {k3.data(), a53}, {k4.data(), a54}});
        f(t + c5 * h, ytmp.data(), k5.data());
        stage(1.0, {{k1.data(), a61}, {k2.data(), a62}, {k3.data(), a63}, {k4.data(), a64},
                    {k5.data(), a65}});
        f(t + h, ytmp.data(), k6.data());
        for (std::size_t i = 0; i < dim; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        f(t + h, ynew.data(), k7.data());

        double errnorm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                            e7 * k7[i]);
            double sc = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            errnorm += (e / sc) * (e / sc);
        }
        errnorm = std::sqrt(errnorm / double(dim));

        if (errnorm <= 1.0) {
            // accept; store dense coefficients
            std::size_t base = sol.rcont_.size();
            sol.rcont_.resize(base + 5 * dim);
            for (std::size_t i = 0; i < dim; ++i) {
                double ydiff = ynew[i] - y[i];
                double bspl = h * k1[i] - ydiff;
                double* r = sol.rcont_.data() + base + 5 * i;
                r[0] = y[i];
                r[1] = ydiff;
                r[2] = bspl;
                r[3] = ydiff - h * k7[i] - bspl;
                r[4] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                            d7 * k7[i]);
            }
            sol.tl_.push_back(t);
            sol.h_.push_back(h);
            t += h;
            y.swap(ynew);
            k1.swap(k7); // FSAL
            double fac = 0.9 * std::pow(std::max(errnorm, 1e-16), -0.2);
            h = std::min(hmax, h * std::clamp(fac, 0.2, 10.0));
        } else {
            double fac = 0.9 * std::pow(errnorm, -0.2);
            h *= std::clamp(fac, 0.1, 0.9);
        }
    }
    return sol;
}

} // namespace moyal::ode
