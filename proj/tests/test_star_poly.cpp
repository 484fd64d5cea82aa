#include "doctest.h"

#include <random>

#include "moyal/star.hpp"

using namespace moyal;

namespace {

PolySymbol random_poly(std::mt19937& rng, int dmax) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    PolySymbol f;
    for (int a = 0; a <= dmax; ++a)
        for (int b = 0; a + b <= dmax; ++b) f.set(a, b, cplx(U(rng), U(rng)));
    return f;
}

} // namespace

TEST_CASE("x * p = xp + i hbar / 2") {
    for (double hb : {1.0, 0.3}) {
        PhysContext ctx(hb, 1.0);
        PolySymbol got = star_poly(PolySymbol::x(), PolySymbol::p(), ctx);
        PolySymbol want;
        want.set(1, 1, 1.0);
        want.set(0, 0, cplx(0.0, hb / 2));
        CHECK(max_coeff_diff(got, want) < 1e-15);
    }
}

TEST_CASE("x^2 * p^2 = x^2 p^2 + 2 i hbar x p - hbar^2 / 2") {
    double hb = 1.0;
    PhysContext ctx(hb, 1.0);
    PolySymbol got = star_poly(PolySymbol::monomial(2, 0, 1.0), PolySymbol::monomial(0, 2, 1.0), ctx);
    PolySymbol want;
    want.set(2, 2, 1.0);
    want.set(1, 1, cplx(0.0, 2.0 * hb));
    want.set(0, 0, -hb * hb / 2.0);
    CHECK(max_coeff_diff(got, want) < 1e-15);
}

TEST_CASE("the constant 1 is the unit of the star algebra") {
    PhysContext ctx(1.0, 1.0);
    std::mt19937 rng(17);
    PolySymbol f = random_poly(rng, 4);
    CHECK(max_coeff_diff(star_poly(f, PolySymbol::constant(1.0), ctx), f) == 0.0);
    CHECK(max_coeff_diff(star_poly(PolySymbol::constant(1.0), f, ctx), f) == 0.0);
}

TEST_CASE("hbar = 0 collapses to the pointwise product exactly") {
    PhysContext ctx(0.0, 1.0);
    std::mt19937 rng(23);
    for (int k = 0; k < 5; ++k) {
        PolySymbol f = random_poly(rng, 4), g = random_poly(rng, 4);
        CHECK(max_coeff_diff(star_poly(f, g, ctx), f * g) == 0.0);
    }
}

TEST_CASE("associativity holds for random polynomials of degree <= 4") {
    PhysContext ctx(1.0, 1.0);
    std::mt19937 rng(31);
    for (int k = 0; k < 8; ++k) {
        PolySymbol f = random_poly(rng, 4), g = random_poly(rng, 4), h = random_poly(rng, 4);
        PolySymbol lhs = star_poly(star_poly(f, g, ctx), h, ctx);
        PolySymbol rhs = star_poly(f, star_poly(g, h, ctx), ctx);
        CHECK(max_coeff_diff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("conjugation reverses the star product") {
    PhysContext ctx(0.7, 1.0);
    std::mt19937 rng(41);
    PolySymbol f = random_poly(rng, 3), g = random_poly(rng, 3);
    PolySymbol lhs = star_poly(f, g, ctx).conj();
    PolySymbol rhs = star_poly(g.conj(), f.conj(), ctx);
    CHECK(max_coeff_diff(lhs, rhs) < 1e-13);
}

TEST_CASE("moyal bracket basics") {
    PhysContext ctx(1.0, 1.0);
    // {x, p} = 1, the canonical pair
    PolySymbol b = moyal_bracket(PolySymbol::x(), PolySymbol::p(), ctx);
    CHECK(max_coeff_diff(b, PolySymbol::constant(1.0)) < 1e-15);

    // antisymmetry: {f, f} = 0 exactly
    std::mt19937 rng(43);
    PolySymbol f = random_poly(rng, 4);
    CHECK(moyal_bracket(f, f, ctx).is_zero());

    // {x^2, p^2} = 4 x p, its Poisson bracket
    PolySymbol q = moyal_bracket(PolySymbol::monomial(2, 0, 1.0), PolySymbol::monomial(0, 2, 1.0), ctx);
    CHECK(max_coeff_diff(q, PolySymbol::monomial(1, 1, 4.0)) == 0.0);
}

TEST_CASE("general bracket series matches the direct commutator") {
    PhysContext ctx(0.8, 1.0);
    std::mt19937 rng(53);
    for (int k = 0; k < 5; ++k) {
        PolySymbol f = random_poly(rng, 4), g = random_poly(rng, 4);
        PolySymbol direct = cplx(0.0, -1.0 / ctx.hbar) *
                            (star_poly(f, g, ctx) - star_poly(g, f, ctx));
        CHECK(max_coeff_diff(moyal_bracket(f, g, ctx), direct) < 1e-13);
        CHECK(moyal_bracket(f, f, ctx).is_zero());
    }
}

TEST_CASE("bracket of quadratics equals the Poisson bracket exactly") {
    PhysContext ctx(1.0, 1.0);
    std::mt19937 rng(47);
    for (int k = 0; k < 6; ++k) {
        PolySymbol f = random_poly(rng, 2), g = random_poly(rng, 2);
        CHECK(max_coeff_diff(moyal_bracket(f, g, ctx), poisson_bracket(f, g)) == 0.0);
    }
    // and the hbar = 0 bracket is defined as the Poisson bracket
    PhysContext zero(0.0, 1.0);
    PolySymbol f = random_poly(rng, 4), g = random_poly(rng, 4);
    CHECK(max_coeff_diff(moyal_bracket(f, g, zero), poisson_bracket(f, g)) == 0.0);
}
