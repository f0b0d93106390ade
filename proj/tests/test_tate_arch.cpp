#include <cmath>

#include "asai/quadrature.hpp"
#include "asai/tate.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace asai;
using namespace asai::testing;

namespace {

cplx gamma_real(const RealChar& chi, cplx s, double a) {
    ArchTate t = tate_real(chi, a);
    ArchTate d = tate_real(RealChar{chi.m, -chi.lambda}, a);
    return t.eps.eval(s) * d.L.eval(1.0 - s) / t.L.eval(s);
}

cplx gamma_complex(const ComplexChar& chi, cplx s, double a) {
    ArchTate t = tate_complex(chi, a);
    ArchTate d = tate_complex(ComplexChar{-chi.n, -chi.lambda}, a);
    return t.eps.eval(s) * d.L.eval(1.0 - s) / t.L.eval(s);
}

}  // namespace

TEST_CASE("quadrature basics") {
    auto g = integrate_mult([](double t) { return t * t * std::exp(-M_PI * t * t); });
    CHECK(close(g.value, 0.5 / M_PI, 1e-10));
    auto h = integrate_mult_real([](double y) { return std::abs(y) * std::exp(-y * y); });
    CHECK(close(h.value, std::sqrt(M_PI), 1e-10));
}

TEST_CASE("real Tate factors") {
    ArchTate t = tate_real(RealChar{0, 0.0});
    CHECK(close(t.L.eval(2.0), ArchFactor::zeta_R(0.0).eval(2.0)));
    CHECK(close(t.eps.eval(0.3), 1.0));
    CHECK(close(tate_real(RealChar{1, 0.0}).eps.eval(0.7), cplx(0, 1)));
    CHECK(close(langlands_constant_CR(1.0), cplx(0, 1)));
    CHECK(close(langlands_constant_CR(-1.0), cplx(0, -1)));
    CHECK(close(langlands_constant_CR(-2.5), cplx(0, -1)));
}

TEST_CASE("real Tate epsilon agrees with the quadrature functional equation") {
    for (int m : {0, 1}) {
        for (cplx lam : {cplx(0.0), cplx(0.1, 0.3), cplx(-0.2, -0.5)}) {
            for (double a : {1.0, -1.0, 2.5, -0.4}) {
                for (cplx s : {cplx(0.45, 0.0), cplx(0.6, 1.2)}) {
                    if (!((s + lam).real() + m > 0.0 && (1.0 - s - lam).real() + m > 0.0)) continue;
                    RealChar chi{m, lam};
                    CAPTURE(m);
                    CAPTURE(a);
                    CHECK(close(tate_real_gamma_quadrature(chi, s, a), gamma_real(chi, s, a), 1e-8));
                }
            }
        }
    }
}

TEST_CASE("complex Tate epsilon agrees with the quadrature functional equation") {
    for (int n : {0, 1, -1, 2, -3}) {
        for (double a : {1.0, -1.0, 1.7}) {
            ComplexChar chi{n, cplx(0.05, 0.2)};
            cplx s(0.4, 0.3);
            CAPTURE(n);
            CAPTURE(a);
            CHECK(close(tate_complex_gamma_quadrature(chi, s, a), gamma_complex(chi, s, a), 1e-7));
        }
    }
    CHECK(close(tate_complex(ComplexChar{1, 0.0}).eps.eval(0.5), cplx(0, 1)));
    CHECK(close(tate_complex(ComplexChar{1, 0.0}).L.eval(2.0), ArchFactor::zeta_C(0.5).eval(2.0)));
}

TEST_CASE("quadrature strip is enforced") {
    CHECK_THROWS_AS(tate_real_gamma_quadrature(RealChar{0, 0.0}, 1.5), DomainError);
}
