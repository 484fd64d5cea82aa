#include "doctest.h"

#include <random>
#include <vector>

#include "moyal/kernels.hpp"

using namespace moyal;
using cd = std::complex<double>;

namespace {

std::vector<cd> random_cvec(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<cd> v(n);
    for (auto& z : v) z = cd(U(rng), U(rng));
    return v;
}

} // namespace

TEST_CASE("kernel variants agree with the scalar reference") {
    const auto& ref = kernels::scalar_ops();
    const auto& sel = kernels::ops();
    INFO("selected kernels: ", sel.name);
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> U(-1.0, 1.0);

    for (std::size_t n : {std::size_t(1), std::size_t(7), std::size_t(64), std::size_t(257)}) {
        auto a = random_cvec(rng, n);
        auto b = random_cvec(rng, 4 * n + 4);
        for (std::ptrdiff_t stride : {std::ptrdiff_t(1), std::ptrdiff_t(3)}) {
            auto acc1 = random_cvec(rng, n);
            auto acc2 = acc1;
            ref.cmul_strided_accum(acc1.data(), a.data(), b.data(), stride, n);
            sel.cmul_strided_accum(acc2.data(), a.data(), b.data(), stride, n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(std::abs(acc1[i] - acc2[i]) < 1e-13 * (1.0 + std::abs(acc1[i])));
        }
        // negative stride walking backward from the end of b
        {
            auto acc1 = random_cvec(rng, n);
            auto acc2 = acc1;
            const cd* bend = b.data() + b.size() - 1;
            ref.cmul_strided_accum(acc1.data(), a.data(), bend, -3, n);
            sel.cmul_strided_accum(acc2.data(), a.data(), bend, -3, n);
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(acc1[i] - acc2[i]) < 1e-13);
        }

        auto x = std::vector<double>(n);
        for (auto& t : x) t = U(rng);
        cd alpha(U(rng), U(rng));
        auto acc1 = random_cvec(rng, n);
        auto acc2 = acc1;
        ref.axpy_rc(acc1.data(), x.data(), alpha, n);
        sel.axpy_rc(acc2.data(), x.data(), alpha, n);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(acc1[i] - acc2[i]) < 1e-13);

        std::vector<double> z(n), bk(n), bkm1(n), o1(n), o2(n);
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = 3.0 * U(rng) + 3.5;
            bk[i] = U(rng);
            bkm1[i] = U(rng);
        }
        ref.laguerre_step(z.data(), bk.data(), bkm1.data(), o1.data(), 5, n);
        sel.laguerre_step(z.data(), bk.data(), bkm1.data(), o2.data(), 5, n);
        for (std::size_t i = 0; i < n; ++i) CHECK(o1[i] == doctest::Approx(o2[i]).epsilon(1e-13));

        CHECK(ref.max_abs2(a.data(), n) == doctest::Approx(sel.max_abs2(a.data(), n)));
        CHECK(ref.sum_abs2(a.data(), n) ==
              doctest::Approx(sel.sum_abs2(a.data(), n)).epsilon(1e-12));
        cd s1 = ref.sum(a.data(), n), s2 = sel.sum(a.data(), n);
        CHECK(std::abs(s1 - s2) < 1e-12 * (1.0 + std::abs(s1)));
    }
}

TEST_CASE("cmul_strided_accum computes acc += a*b") {
    const auto& K = kernels::ops();
    std::vector<cd> acc(3, cd(1.0, 0.0)), a{{1, 1}, {2, 0}, {0, 1}}, b{{2, 0}, {0, 3}, {1, 1}};
    K.cmul_strided_accum(acc.data(), a.data(), b.data(), 1, 3);
    CHECK(acc[0] == cd(3.0, 2.0));  // 1 + (1+i)*2
    CHECK(acc[1] == cd(1.0, 6.0));  // 1 + 2*3i
    CHECK(acc[2] == cd(0.0, 1.0));  // 1 + i*(1+i)
}
