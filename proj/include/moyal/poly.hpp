#pragma once

#include <complex>
#include <map>
#include <utility>

#include "moyal/grid_symbol.hpp"

namespace moyal {

// Exact bivariate polynomial in (x, p) with complex coefficients. Zero
// coefficients are never stored, so degree queries stay honest.
class PolySymbol {
public:
    using Key = std::pair<int, int>; // (degree_x, degree_p)
    using Map = std::map<Key, cplx>;

    PolySymbol() = default;

    static PolySymbol zero() { return {}; }
    static PolySymbol constant(cplx c) { return monomial(0, 0, c); }
    static PolySymbol x() { return monomial(1, 0, 1.0); }
    static PolySymbol p() { return monomial(0, 1, 1.0); }
    static PolySymbol monomial(int dx, int dp, cplx c) {
        PolySymbol f;
        f.set(dx, dp, c);
        return f;
    }

    void set(int dx, int dp, cplx c) {
        if (dx < 0 || dp < 0)
            throw ValidationError("PolySymbol: negative degree");
        if (c == cplx(0.0))
            coef_.erase({dx, dp});
        else
            coef_[{dx, dp}] = c;
    }
    void add_term(int dx, int dp, cplx c) {
        auto it = coef_.find({dx, dp});
        cplx v = (it == coef_.end() ? cplx(0.0) : it->second) + c;
        set(dx, dp, v);
    }

    cplx coeff(int dx, int dp) const {
        auto it = coef_.find({dx, dp});
        return it == coef_.end() ? cplx(0.0) : it->second;
    }
    const Map& terms() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }

    int degree() const { // max total degree, -1 for the zero polynomial
        int d = -1;
        for (auto& [k, c] : coef_) d = std::max(d, k.first + k.second);
        return d;
    }
    int degree_x() const {
        int d = 0;
        for (auto& [k, c] : coef_) d = std::max(d, k.first);
        return d;
    }
    int degree_p() const {
        int d = 0;
        for (auto& [k, c] : coef_) d = std::max(d, k.second);
        return d;
    }

    PolySymbol& operator+=(const PolySymbol& o) {
        for (auto& [k, c] : o.coef_) add_term(k.first, k.second, c);
        return *this;
    }
    PolySymbol& operator-=(const PolySymbol& o) {
        for (auto& [k, c] : o.coef_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend PolySymbol operator+(PolySymbol a, const PolySymbol& b) { return a += b; }
    friend PolySymbol operator-(PolySymbol a, const PolySymbol& b) { return a -= b; }
    friend PolySymbol operator*(cplx s, const PolySymbol& f) {
        PolySymbol r;
        if (s == cplx(0.0)) return r;
        for (auto& [k, c] : f.coef_) r.coef_[k] = s * c;
        return r;
    }
    friend PolySymbol operator*(const PolySymbol& a, const PolySymbol& b) {
        PolySymbol r;
        for (auto& [ka, ca] : a.coef_)
            for (auto& [kb, cb] : b.coef_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    PolySymbol deriv_x(int order = 1) const { return deriv(order, 0); }
    PolySymbol deriv_p(int order = 1) const { return deriv(0, order); }
    PolySymbol deriv(int ox, int op) const {
        PolySymbol r;
        for (auto& [k, c] : coef_) {
            int dx = k.first, dp = k.second;
            if (dx < ox || dp < op) continue;
            double fac = 1.0;
            for (int t = 0; t < ox; ++t) fac *= double(dx - t);
            for (int t = 0; t < op; ++t) fac *= double(dp - t);
            r.add_term(dx - ox, dp - op, fac * c);
        }
        return r;
    }

    PolySymbol conj() const {
        PolySymbol r;
        for (auto& [k, c] : coef_) r.coef_[k] = std::conj(c);
        return r;
    }

    // Horner evaluation with fixed nesting, x outer: sum_i x^i (sum_j c_ij p^j).
    cplx eval(double x, double p) const;

private:
    Map coef_;
};

GridSymbol sample_poly(const PolySymbol& f, const PhaseGrid& grid);

// max |coeff difference| over the union of terms; exactness checks in tests.
double max_coeff_diff(const PolySymbol& a, const PolySymbol& b);

} // namespace moyal
