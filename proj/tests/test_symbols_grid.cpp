#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <random>

#include "moyal/grid_symbol.hpp"
#include "moyal/poly.hpp"

using namespace moyal;

TEST_CASE("PhaseGrid validates sizes and extents") {
    CHECK_THROWS_AS(PhaseGrid(7, 8, 1.0, 1.0), ValidationError);
    CHECK_THROWS_AS(PhaseGrid(8, 4, 1.0, 1.0), ValidationError);
    CHECK_THROWS_AS(PhaseGrid(8, 8, -1.0, 1.0), ValidationError);
    PhaseGrid g(8, 16, 2.0, 4.0);
    CHECK(g.dx() == doctest::Approx(0.5));
    CHECK(g.x(0) == doctest::Approx(-2.0));
    CHECK(g.x(4) == doctest::Approx(0.0)); // origin is a grid point
    CHECK(g.p(15) == doctest::Approx(4.0 - g.dp()));
}

TEST_CASE("star_compatible grids have an integer shear step and cover the request") {
    for (double hbar : {1.0, 0.5, 2.0}) {
        PhaseGrid g = PhaseGrid::star_compatible(8.0, 8.0, 256, 256, hbar);
        double m = g.shear_step(hbar);
        CHECK(std::abs(m - std::round(m)) < 1e-9);
        CHECK(m >= 1.0);
        CHECK(g.x_max() >= 8.0);
        CHECK(g.p_max() == doctest::Approx(8.0));
        CHECK(g.is_star_compatible(hbar));
    }
    // coarse request: n_x is widened rather than shrinking the extents
    PhaseGrid c = PhaseGrid::star_compatible(20.0, 20.0, 32, 256, 1.0);
    CHECK(c.x_max() >= 20.0);
    CHECK(c.is_star_compatible(1.0));
}

TEST_CASE("sample_poly evaluates exactly") {
    PhaseGrid g(8, 8, 1.0, 1.0);
    GridSymbol ones = sample_poly(PolySymbol::constant(1.0), g);
    for (const auto& v : ones.values) CHECK(v == cplx(1.0, 0.0));

    GridSymbol xs = sample_poly(PolySymbol::x(), g);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(xs.at(i, j) == cplx(g.x(i), 0.0));

    PolySymbol x2p2 = PolySymbol::monomial(2, 2, 1.0);
    CHECK(x2p2.eval(2.0, 3.0) == cplx(36.0, 0.0));
}

TEST_CASE("sample_poly is linear in coefficients") {
    PhaseGrid g(16, 16, 2.0, 2.0);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    PolySymbol f, h;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b) {
            f.set(a, b, cplx(U(rng), U(rng)));
            h.set(a, b, cplx(U(rng), U(rng)));
        }
    cplx al(0.3, -1.2), be(-0.7, 0.1);
    GridSymbol lhs = sample_poly(al * f + be * h, g);
    GridSymbol rhs = lin_comb(al, sample_poly(f, g), be, sample_poly(h, g));
    for (std::size_t k = 0; k < lhs.values.size(); ++k)
        CHECK(std::abs(lhs.values[k] - rhs.values[k]) < 1e-12);
}

TEST_CASE("symbol_norms quadrature") {
    PhaseGrid unit(8, 8, 1.0, 1.0);
    GridSymbol ones = sample_poly(PolySymbol::constant(1.0), unit);
    SymbolNorms n = symbol_norms(ones);
    CHECK(n.integral.real() == doctest::Approx(4.0).epsilon(1e-14)); // area of [-1,1]^2
    CHECK(n.integral.imag() == 0.0);
    CHECK(n.sup == doctest::Approx(1.0));

    GridSymbol zero(unit);
    SymbolNorms z = symbol_norms(zero);
    CHECK(z.l2 == 0.0);
    CHECK(z.sup == 0.0);
    CHECK(z.integral == cplx(0.0));

    // Gaussian integral converges to pi under grid refinement
    for (int N : {64, 128}) {
        PhaseGrid g(N, N, 8.0, 8.0);
        GridSymbol f = sample(g, [](double x, double p) {
            return cplx(std::exp(-(x * x + p * p)), 0.0);
        });
        CHECK(std::abs(symbol_norms(f).integral.real() - M_PI) < 1e-8);
    }
}

TEST_CASE("integral of an even real symbol is real to 1e-14 relative") {
    PhaseGrid g(64, 64, 6.0, 6.0);
    GridSymbol f = sample(g, [](double x, double p) {
        double env = std::exp(-(x * x + p * p) / 2.0);
        return cplx(env * (1.0 + 0.5 * x * x), env * x * p); // odd imaginary part
    });
    SymbolNorms n = symbol_norms(f);
    CHECK(std::abs(n.integral.imag()) < 1e-14 * std::abs(n.integral.real()));
}

TEST_CASE("csv/json io round-trips bit-exactly") {
    PhaseGrid g(8, 16, 1.5, 2.5);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    GridSymbol f(g);
    for (auto& v : f.values) v = cplx(U(rng), U(rng));

    write_csv(f, "io_test.csv");
    GridSymbol fc = read_csv("io_test.csv");
    REQUIRE(fc.grid == g);
    for (std::size_t k = 0; k < f.values.size(); ++k) CHECK(fc.values[k] == f.values[k]);

    write_json(f, "io_test.json");
    GridSymbol fj = read_json("io_test.json");
    REQUIRE(fj.grid == g);
    for (std::size_t k = 0; k < f.values.size(); ++k) CHECK(fj.values[k] == f.values[k]);
    std::remove("io_test.csv");
    std::remove("io_test.json");
}

TEST_CASE("bilinear interpolation is exact on nodes and guards coverage") {
    PhaseGrid g(16, 16, 2.0, 2.0);
    GridSymbol f = sample(g, [](double x, double p) { return cplx(x + 2 * p, x * p); });
    CHECK(interp_bilinear(f, g.x(3), g.p(7)) == f.at(3, 7));
    // bilinear is exact for bilinear functions anywhere inside
    cplx mid = interp_bilinear(f, 0.1, -0.3);
    CHECK(std::abs(mid - cplx(0.1 - 0.6, -0.03)) < 1e-12);
    CHECK_THROWS_AS(interp_bilinear(f, 2.5, 0.0), CoverageGuard);
}

TEST_CASE("edge taper leaves the core and kills the boundary") {
    PhaseGrid g(64, 64, 8.0, 8.0);
    GridSymbol f = sample_poly(PolySymbol::constant(1.0), g);
    apply_edge_taper(f);
    CHECK(std::abs(f.at(32, 32)) == doctest::Approx(1.0));          // origin untouched
    CHECK(boundary_max(f) < 1e-12);                                  // edges killed
    CHECK(std::abs(f.at(40, 32)) == doctest::Approx(1.0).epsilon(1e-8)); // quarter extent
}
