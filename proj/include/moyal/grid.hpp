#pragma once

#include <cmath>
#include <cstdint>

#include "moyal/errors.hpp"

namespace moyal {

inline bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Uniform, origin-centered rectangular sampling of the phase plane.
// x_i = -x_max + i*dx (i = 0..n_x-1), same for p; 0 is always a grid point.
class PhaseGrid {
public:
    PhaseGrid(int n_x, int n_p, double x_max, double p_max)
        : nx_(n_x), np_(n_p), xmax_(x_max), pmax_(p_max) {
        if (!is_pow2(nx_) || !is_pow2(np_) || nx_ < 8 || np_ < 8)
            throw ValidationError("PhaseGrid: sizes must be powers of two and >= 8");
        if (!(xmax_ > 0.0) || !(pmax_ > 0.0))
            throw ValidationError("PhaseGrid: extents must be positive");
        dx_ = 2.0 * xmax_ / nx_;
        dp_ = 2.0 * pmax_ / np_;
    }

    int n_x() const { return nx_; }
    int n_p() const { return np_; }
    double x_max() const { return xmax_; }
    double p_max() const { return pmax_; }
    double dx() const { return dx_; }
    double dp() const { return dp_; }
    double x(int i) const { return -xmax_ + i * dx_; }
    double p(int j) const { return -pmax_ + j * dp_; }
    std::size_t size() const { return std::size_t(nx_) * np_; }
    std::size_t index(int i, int j) const { return std::size_t(i) * np_ + j; }

    bool operator==(const PhaseGrid& o) const {
        return nx_ == o.nx_ && np_ == o.np_ && xmax_ == o.xmax_ && pmax_ == o.pmax_;
    }
    bool operator!=(const PhaseGrid& o) const { return !(*this == o); }

    // Shear step of the spectral star product in units of dx:
    // m = pi*hbar / (n_p * dp * dx). Integer m enables exact lattice lookups.
    double shear_step(double hbar) const {
        return M_PI * hbar / (np_ * dp_ * dx_);
    }
    bool is_star_compatible(double hbar) const {
        double m = shear_step(hbar);
        return m >= 0.5 && std::abs(m - std::round(m)) < 1e-9 * std::max(1.0, m);
    }

    // Square grid (dx == dp) with extents close to the request and an integer
    // shear step; squareness keeps quarter-turn rotations on-lattice.
    static PhaseGrid star_compatible_square(double half_extent, int n, double hbar) {
        if (!(hbar > 0.0))
            throw ValidationError("star_compatible_square: hbar must be positive");
        double d_req = 2.0 * half_extent / n;
        int m = std::max(1, int(std::round(d_req * d_req * n / (M_PI * hbar))));
        double d = std::sqrt(M_PI * hbar * m / n);
        return PhaseGrid(n, n, 0.5 * n * d, 0.5 * n * d);
    }

    // Smallest grid with extents >= the requested ones, n_p/p_max exactly as
    // requested, and dx adjusted so that the shear step is a positive integer.
    // Widens n_x when the requested sampling is finer than m = 1 allows.
    static PhaseGrid star_compatible(double x_half, double p_half, int n_x, int n_p,
                                     double hbar) {
        if (!(hbar > 0.0))
            throw ValidationError("star_compatible: hbar must be positive");
        double dp = 2.0 * p_half / n_p;
        for (;;) {
            double dx_req = 2.0 * x_half / n_x;
            double q = M_PI * hbar / (n_p * dp * dx_req); // shear step at requested dx
            int m = int(std::floor(q + 1e-12));
            if (m >= 1) {
                double dx = M_PI * hbar / (m * n_p * dp);
                return PhaseGrid(n_x, n_p, 0.5 * n_x * dx, p_half);
            }
            n_x *= 2; // requested dx coarser than one shear step: refine instead
            if (n_x > (1 << 20))
                throw ValidationError("star_compatible: cannot satisfy lattice condition");
        }
    }

private:
    int nx_, np_;
    double xmax_, pmax_, dx_, dp_;
};

} // namespace moyal
