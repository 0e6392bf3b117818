#include <cmath>
#include <random>

#include "doctest.h"
#include "elltrace/gamma_zeta.hpp"

using namespace elltrace;

namespace {
double crel(cplx a, cplx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }
}

TEST_CASE("gamma: known values") {
    CHECK(crel(cgamma({0.5, 0}), cplx(std::sqrt(M_PI), 0)) < 1e-14);
    CHECK(crel(cgamma({1, 0}), cplx(1, 0)) < 1e-14);
    CHECK(crel(cgamma({5, 0}), cplx(24, 0)) < 1e-14);
    CHECK(crel(cgamma({-1.5, 0}), cplx(4.0 * std::sqrt(M_PI) / 3.0, 0)) < 1e-13);
    // reference value at large imaginary argument
    CHECK(crel(cgamma({0.5, 20}), cplx(-3.430784159145482e-14, 4.542880357463343e-14)) < 1e-11);
}

TEST_CASE("gamma: reflection identity at random points") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> re(-4.5, 4.5), im(-8.0, 8.0);
    for (int i = 0; i < 20; ++i) {
        cplx s{re(rng), im(rng)};
        if (std::abs(s.imag()) < 0.05) s += cplx(0, 0.1);
        cplx lhs = cgamma(s) * cgamma(1.0 - s);
        cplx rhs = M_PI / std::sin(M_PI * s);
        CHECK(crel(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("gamma: poles and reciprocal") {
    CHECK_THROWS_AS(cgamma({0, 0}), PoleError);
    CHECK_THROWS_AS(cgamma({-3, 0}), PoleError);
    CHECK(rgamma({-2, 0}) == cplx(0, 0));
    CHECK(crel(rgamma({4, 0}), cplx(1.0 / 6.0, 0)) < 1e-14);
}

TEST_CASE("zeta: reference values") {
    CHECK(crel(zeta({4, 0}), cplx(1.08232323371113819, 0)) < 1e-13);
    CHECK(crel(zeta({3, 0}), cplx(1.20205690315959429, 0)) < 1e-13);
    CHECK(crel(zeta({1.5, 0}), cplx(2.61237534868548834, 0)) < 1e-13);
    CHECK(crel(zeta({0, 0}), cplx(-0.5, 0)) < 1e-13);
    CHECK(crel(zeta({0, 2}), cplx(0.314725764042099582, -0.231679648750520683)) < 1e-12);
    CHECK(crel(zeta({1, 4}), cplx(0.680275635962253011, 0.0547404426897893195)) < 1e-12);
    CHECK(crel(zeta({-0.25, 0.3}), cplx(-0.276650982285724615, -0.156769900735730971)) < 1e-12);
    CHECK(crel(zeta({0, 40}), cplx(0.633797253967305273, -2.39484695049927191)) < 1e-12);
    CHECK(crel(zeta({0, 80}), zeta({0, 80})) == 0.0);
    CHECK_THROWS_AS(zeta({1, 0}), PoleError);
}

TEST_CASE("geometric p-sum matches the ratio form away from poles") {
    cplx s{0.35, 1.2};
    for (double p : {2.0, 3.0, 5.0}) {
        for (int j : {1, 2, 4}) {
            cplx ratio = (1.0 - std::pow(p, -s * static_cast<double>(j + 1))) /
                         (1.0 - std::pow(p, -s));
            CHECK(crel(geometric_p_sum(p, s, j), ratio) < 1e-13);
        }
    }
    // removable point: at s = 2 pi i/log p the ratio degenerates but the sum is j+1
    for (double p : {2.0, 5.0}) {
        cplx s0{0.0, 2 * M_PI / std::log(p)};
        CHECK(std::abs(geometric_p_sum(p, s0, 3) - cplx(4, 0)) < 1e-10);
    }
}
