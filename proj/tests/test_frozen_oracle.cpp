#include "doctest.h"

#include <cmath>

#include "asai/arch.hpp"
#include "asai/asai_nonarch.hpp"
#include "asai/tate.hpp"
#include "asai/whittaker.hpp"
#include "oracles/frozen_oracle.hpp"
#include "test_util.hpp"

using namespace asai;

using testing::close;
using testing::dirichlet;

TEST_CASE("Gauss sums against explicit Dirichlet characters") {
    for (const auto& c : frozen::kGauss) {
        auto F = LocalField::ground(c.p);
        MultChar chi = dirichlet(F, c.g, c.k, c.n);
        REQUIRE(chi.conductor() == c.n);
        // the library pairs psi with chi^{-1}
        CHECK(close(gauss_sum(inverse(chi), AddChar(F)), c.value, 1e-10));
        CHECK(std::abs(std::abs(c.value) - std::pow(double(c.p), c.n / 2.0)) < 1e-12);
    }
}

TEST_CASE("Legendre symbols give the classical quadratic Gauss sums") {
    for (const auto& c : frozen::kGauss) {
        if (c.n != 1 || 2 * c.k != c.p - 1) continue;
        const double r = std::sqrt(double(c.p));
        CHECK(close(c.value, c.p % 4 == 1 ? cplx(r, 0.0) : cplx(0.0, r), 1e-12));
        auto F = LocalField::ground(c.p);
        MultChar chi = dirichlet(F, c.g, c.k, 1);
        CHECK(close(tate_factors(chi, AddChar(F)).eps.eval(0.5), c.value / r, 1e-10));
    }
}

TEST_CASE("spherical zeta integral against direct shell sums") {
    for (const auto& c : frozen::kSpherical) {
        auto E = LocalField::quadratic(c.p, parse_ext(c.ext));
        const cplx a = Angle(c.a_num, c.a_den).value(), b = Angle(c.b_num, c.b_den).value();
        SphericalZeta Z(AsaiInput::make(E, MultChar::unramified(E, a), MultChar::unramified(E, b)));
        for (int i = 0; i < 5; ++i) {
            INFO(c.p, " ", c.ext, " s = ", c.s[i]);
            CHECK(close(Z.zeta(c.s[i]), c.zeta[i], 1e-8));
        }
    }
}

TEST_CASE("archimedean spherical Whittaker function and zeta integral") {
    const CChar one{0.0, 0};
    for (const auto& c : frozen::kArchWhittaker) {
        CHECK(close(whittaker_value_quadrature(c.y, {}, one, one), c.value, 1e-9));
        CHECK(close(whittaker_value_quadrature(-c.y, {}, one, one), c.value, 1e-9));
    }
    for (const auto& c : frozen::kArchZeta) {
        CHECK(close(zeta_whittaker_closed(c.s, {}, RealChar{0, 0.0}, one, one), c.value, 1e-12));
        CHECK(close(zeta_whittaker_quadrature(c.s, {}, RealChar{0, 0.0}, one, one), c.value, 1e-6));
    }
}

TEST_CASE("Gamma-sum identity against direct summation") {
    for (const auto& c : frozen::kGammaSum) {
        CombResult r = combinatorial_identity(c.N, c.z, c.w);
        INFO("N = ", c.N, " lhs = ", r.lhs, " rhs = ", r.rhs);
        // the alternating terms cancel, so a few digits are lost in double precision
        CHECK(close(r.lhs, c.value, 1e-10));
        CHECK(close(r.rhs, c.value, 1e-9));
    }
}
