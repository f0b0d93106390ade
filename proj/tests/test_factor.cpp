#include <random>

#include "asai/factor.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace asai;
using namespace asai::testing;

namespace {

NonArchFactor random_factor(i64 q, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(0, 2 * M_PI), rad(0.3, 1.0);
    std::uniform_int_distribution<int> kd(-1, 1), md(-2, 2);
    NonArchFactor f = NonArchFactor::monomial(q, std::polar(rad(rng), ang(rng)), md(rng));
    f.num.push_back({std::polar(rad(rng), ang(rng)), kd(rng)});
    f.den.push_back({std::polar(rad(rng), ang(rng)), kd(rng)});
    f.den.push_back({std::polar(rad(rng), ang(rng)), kd(rng)});
    return f;
}

}  // namespace

TEST_CASE("local zeta values") {
    CHECK(close(NonArchFactor::euler(3, 1.0).eval(1.0), 1.5));
    CHECK(close(ArchFactor::zeta_R(0.0).eval(2.0), 1.0 / M_PI));
    CHECK(close(ArchFactor::zeta_C(0.0).eval(1.0), 1.0 / M_PI));
    CHECK(close(gamma_c(5.0), 24.0));
    CHECK(close(gamma_c(0.5), std::sqrt(M_PI)));
    CHECK(close(gamma_c(cplx(-0.5, 0.0)), -2.0 * std::sqrt(M_PI)));
    CHECK_THROWS_AS(NonArchFactor::euler(3, 1.0).eval(0.0), PoleError);
}

TEST_CASE("duplication formula") {
    ArchFactor lhs = ArchFactor::zeta_C(0.0);
    ArchFactor rhs = ArchFactor::zeta_R(0.0) * ArchFactor::zeta_R(1.0);
    CHECK(approx_equal(lhs, rhs, default_grid(), 1e-9).equal);
    ArchFactor l2 = ArchFactor::zeta_C(cplx(0.25, 0.1));
    ArchFactor r2 = ArchFactor::zeta_R(cplx(0.25, 0.1)) * ArchFactor::zeta_R(cplx(1.25, 0.1));
    CHECK(approx_equal(l2, r2, default_grid(), 1e-9).equal);
}

TEST_CASE("non-archimedean factor algebra") {
    std::mt19937_64 rng(31);
    for (i64 q : {3, 9, 25}) {
        for (int i = 0; i < 10; ++i) {
            NonArchFactor f = random_factor(q, rng), g = random_factor(q, rng);
            for (cplx s : default_grid()) {
                CHECK(close((f * g).eval(s), f.eval(s) * g.eval(s), 1e-10));
                CHECK(close((f / g).eval(s), f.eval(s) / g.eval(s), 1e-10));
                CHECK(close(reflect(f).eval(s), f.eval(1.0 - s), 1e-10));
                CHECK(close(shift(f, cplx(0.2, 0.3)).eval(s), f.eval(s + cplx(0.2, 0.3)), 1e-10));
                CHECK(close(normalize(f).eval(s), f.eval(s), 1e-10));
            }
            CHECK(approx_equal(reflect(reflect(f)), f, default_grid(), 1e-10).equal);
            CHECK(simplify(f / f).is_monomial());
            CHECK(approx_equal(simplify(f / f), NonArchFactor::one(q), default_grid(), 1e-10).equal);
        }
    }
    std::mt19937_64 rng2(37);
    for (int i = 0; i < 10; ++i) {
        NonArchFactor f = random_factor(9, rng2);
        NonArchFactor b = to_base(f, 3);
        CHECK(b.q == 3);
        CHECK(approx_equal(b, f, default_grid(), 1e-10).equal);
    }
    NonArchFactor ap = NonArchFactor::abs_power(5, 2, 1, 0.5);
    CHECK(close(ap.eval(0.3), std::pow(5.0, -2 * 0.8)));
}

TEST_CASE("archimedean factor algebra") {
    ArchFactor f = ArchFactor::zeta_R(0.35) * ArchFactor::zeta_C(cplx(0.5, 0.2));
    ArchFactor g = cplx(0.0, 2.0) * ArchFactor::zeta_R(1.0);
    for (cplx s : default_grid()) {
        CHECK(close((f / g).eval(s), f.eval(s) / g.eval(s), 1e-10));
        CHECK(close(reflect(f).eval(s), f.eval(1.0 - s), 1e-10));
        CHECK(close(shift(f, 0.4).eval(s), f.eval(s + 0.4), 1e-10));
    }
}

TEST_CASE("grid comparison") {
    CHECK_THROWS_AS(approx_equal(ArchFactor::constant(1.0), ArchFactor::constant(1.0), {}, 1e-9), DomainError);
    Comparison c = approx_equal(ArchFactor::constant(1.0), ArchFactor::constant(1.0 + 1e-6), default_grid(), 1e-9);
    CHECK_FALSE(c.equal);
    CHECK(c.max_deviation == doctest::Approx(1e-6).epsilon(1e-3));
}
