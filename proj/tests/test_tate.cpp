#include <random>

#include "asai/tate.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace asai;
using namespace asai::testing;

namespace {

MultChar legendre_char(const LocalField& F) {
    const i64 p = F.p();
    return MultChar::from_unit_function(
        F, 1, [p](const EElem& u) { return Angle(legendre(residue(u.a, 1), p) == 1 ? 0 : 1, 2); }, 1.0);
}

}  // namespace

TEST_CASE("trivial character") {
    auto F = LocalField::ground(3);
    AddChar psi(F);
    TateResult r = tate_factors(MultChar::trivial(F), psi);
    CHECK(approx_equal(r.eps, NonArchFactor::one(3), default_grid(), 1e-12).equal);
    NonArchFactor expect = reflect(NonArchFactor::euler(3, 1.0)) / NonArchFactor::euler(3, 1.0);
    CHECK(approx_equal(r.gamma, expect, default_grid(), 1e-12).equal);
    CHECK(r.phi_deviation < 1e-10);
}

TEST_CASE("quadratic Gauss sums") {
    auto F5 = LocalField::ground(5);
    auto F3 = LocalField::ground(3);
    CHECK(close(gauss_sum(legendre_char(F5), AddChar(F5)), std::sqrt(5.0)));
    CHECK(close(gauss_sum(legendre_char(F3), AddChar(F3)), cplx(0.0, std::sqrt(3.0))));
    CHECK(close(eps_nonarch(legendre_char(F5), AddChar(F5)).eval(0.5), 1.0));
    CHECK(close(eps_nonarch(legendre_char(F3), AddChar(F3)).eval(0.5), cplx(0.0, 1.0)));
    CHECK_THROWS_AS(gauss_sum(MultChar::trivial(F5), AddChar(F5)), DomainError);
}

TEST_CASE("Gauss sum modulus") {
    std::mt19937_64 rng(41);
    for (i64 p : {3, 5, 7}) {
        for (const auto& K : all_fields(p)) {
            for (int i = 0; i < 3; ++i) {
                MultChar chi = random_character(K, 2, rng);
                if (!chi.ramified()) continue;
                double want = std::pow(static_cast<double>(K.q()), 0.5 * chi.conductor());
                CHECK(std::abs(gauss_sum(chi, AddChar(K))) == doctest::Approx(want).epsilon(1e-9));
                AddChar psi2 = AddChar(K).scaled(K.pi_pow(-1));
                CHECK(std::abs(gauss_sum(chi, psi2)) == doctest::Approx(want).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("epsilon factor laws") {
    std::mt19937_64 rng(43);
    for (i64 p : {3, 5}) {
        for (const auto& K : all_fields(p)) {
            for (int i = 0; i < 3; ++i) {
                MultChar chi = random_character(K, 2, rng, true);
                AddChar psi(K);
                TateResult r = tate_factors(chi, psi);
                CHECK(r.eps.is_monomial());
                CHECK(r.test_functions_used >= 1);

                // |eps(1/2)| = 1 for unitary chi
                if (std::abs(chi.lambda()) < 1e-14) CHECK(std::abs(r.eps.eval(0.5)) == doctest::Approx(1.0));

                // gamma(s, chi, psi) gamma(1 - s, chi^-1, psi^-) = 1
                AddChar psim = psi.scaled(K.from_int(-1));
                NonArchFactor g2 = reflect(gamma_tate_nonarch(inverse(chi), psim));
                CHECK(approx_equal(r.gamma * g2, NonArchFactor::one(K.q()), default_grid(), 1e-9).equal);

                // eps(s, chi, psi_a) = chi(a) |a|^{s - 1/2} eps(s, chi, psi)
                EElem a = random_element(K, rng, -2, 2);
                NonArchFactor lhs = eps_nonarch(chi, psi.scaled(a));
                int v = K.valuation(a);
                NonArchFactor rhs = chi(a) * NonArchFactor::abs_power(K.q(), v, 1, -0.5) * r.eps;
                CHECK(approx_equal(lhs, rhs, default_grid(), 1e-9).equal);

                // eps(s, chi mu, psi) = mu(pi)^{c(chi) - c(psi)} eps(s, chi, psi) for unramified mu
                MultChar mu = random_unramified(K, rng);
                AddChar psi3 = psi.scaled(K.pi_pow(1));
                NonArchFactor e1 = eps_nonarch(chi * mu, psi3);
                NonArchFactor e0 = eps_nonarch(chi, psi3);
                cplx f = std::pow(mu.at_uniformizer(), chi.conductor() - psi3.conductor());
                CHECK(approx_equal(e1, f * e0, default_grid(), 1e-9).equal);
            }
        }
    }
}

TEST_CASE("Langlands constant") {
    for (i64 p : {3, 5, 7}) {
        auto U = LocalField::quadratic(p, ExtType::unramified);
        CHECK(close(langlands_constant(U, AddChar(U.base())), 1.0));
        for (ExtType t : {ExtType::ramified_p, ExtType::ramified_up}) {
            auto E = LocalField::quadratic(p, t);
            cplx lam = langlands_constant(E, AddChar(E.base()));
            CHECK(close(lam * lam, omega_EF(E)(-1)));
        }
    }
}

TEST_CASE("test functions and Fourier transform") {
    auto K = LocalField::quadratic(3, ExtType::ramified_p);
    AddChar psi(K);
    TestFunction phi = TestFunction::box(K.one(), 2);
    CHECK(close(phi(K, psi, K.one()), 1.0));
    CHECK(close(phi(K, psi, K.from_int(2)), 0.0));
    // Phi^^(x) = Phi(-x) for the self-dual measure
    TestFunction hh = fourier_transform(fourier_transform(phi, psi), psi);
    std::mt19937_64 rng(47);
    for (int i = 0; i < 20; ++i) {
        EElem x = random_element(K, rng, 0, 3);
        CHECK(close(hh(K, psi, x), phi(K, psi, K.neg(x)), 1e-9));
    }
}
