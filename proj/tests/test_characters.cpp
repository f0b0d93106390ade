#include <random>

#include "asai/characters.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace asai;
using namespace asai::testing;

namespace {

// theta with O_E = O_F[theta] and psi_xi(a + b theta) = psi(b)
EElem theta_for(const LocalField& E, const EElem& xi) {
    // xi = c sqrt d; theta = sqrt d / (2 c d)
    FElem c = xi.b;
    return E.make(FElem::exact_zero(E.p()), inverse(E.fint(2) * c * E.fint(E.d())));
}

}  // namespace

TEST_CASE("additive character values") {
    auto F = LocalField::ground(3);
    AddChar psi(F);
    CHECK(close(psi(F.from_F(FElem::from_rational(3, 1, 3, 12))), std::polar(1.0, 2 * M_PI / 3)));
    CHECK(close(psi(F.from_int(17)), 1.0));
    CHECK(psi.conductor() == 0);
    CHECK(AddChar::shifted(F, F.fint(3)).conductor() == -1);

    std::mt19937_64 rng(3);
    for (i64 p : {3, 5}) {
        for (const auto& E : extensions(p)) {
            EElem xi = E.xi_canonical();
            AddChar psixi = AddChar::via_trace_xi(E, E.fint(1), xi);
            CHECK(psixi.conductor() == 0);
            EElem th = theta_for(E, xi);
            AddChar psiF(E.base());
            for (int i = 0; i < 20; ++i) {
                EElem a = random_element(E.base(), rng), b = random_element(E.base(), rng);
                EElem x = E.add(a, E.mul(b, th));
                CHECK(close(psixi(x), psiF(b)));
            }
        }
    }
}

TEST_CASE("additive conductor closed form") {
    std::mt19937_64 rng(5);
    for (i64 p : {3, 5, 7}) {
        for (const auto& K : all_fields(p)) {
            int dK = K.ramified() ? 1 : 0;
            for (int i = 0; i < 10; ++i) {
                EElem b = random_element(K, rng);
                AddChar psi(K, b);
                CHECK(psi.conductor() == -dK - K.valuation(b));
                EElem a = random_element(K, rng);
                CHECK(psi.scaled(a).conductor() == psi.conductor() - K.valuation(a));
            }
        }
    }
    auto E = LocalField::quadratic(3, ExtType::ramified_p);
    CHECK(AddChar::via_trace_xi(E, E.fint(1), E.sqrt_d()).conductor() == -2);
}

TEST_CASE("multiplicativity of random characters") {
    std::mt19937_64 rng(7);
    for (i64 p : {3, 5}) {
        for (const auto& K : all_fields(p)) {
            for (int k = 0; k < 3; ++k) {
                MultChar chi = random_character(K, 2, rng, true);
                for (int i = 0; i < 100; ++i) {
                    EElem x = random_element(K, rng), y = random_element(K, rng);
                    CHECK(close(chi(K.mul(x, y)), chi(x) * chi(y), 1e-9));
                }
            }
        }
    }
}

TEST_CASE("conductor is minimal") {
    std::mt19937_64 rng(9);
    for (i64 p : {3, 5}) {
        for (const auto& K : all_fields(p)) {
            for (int i = 0; i < 5; ++i) {
                MultChar chi = random_character(K, 3, rng);
                int c = chi.conductor();
                if (c == 0) continue;
                // nontrivial on 1 + pi^(c-1), trivial on 1 + pi^c
                bool nontrivial = false;
                for (const auto& u : K.residues(c)) {
                    EElem x = K.add(K.one(), K.mul(K.pi_pow(c - 1), u));
                    if (K.valuation(x) != 0) continue;
                    if (!chi.unit_angle(x).is_zero()) nontrivial = true;
                }
                CHECK(nontrivial);
                for (int j = 0; j < 10; ++j) {
                    EElem x = K.add(K.one(), K.mul(K.pi_pow(c), random_unit(K, rng)));
                    CHECK(chi.unit_angle(x).is_zero());
                }
            }
        }
    }
}

TEST_CASE("restriction to F") {
    auto E = LocalField::quadratic(3, ExtType::unramified);
    cplx alpha = std::polar(1.0, 0.37);
    MultChar chi = MultChar::unramified(E, alpha);
    MultChar r = restrict_to_F(chi);
    CHECK(r.conductor() == 0);
    CHECK(close(r(3), chi(E.from_int(3))));
    CHECK(same_character(restrict_to_F(MultChar::trivial(E)), MultChar::trivial(E.base())));

    // order-8 characters of F_9^x: the restriction is ramified iff nontrivial on F_3^x
    auto G = UnitGroup::get(E, 1);
    REQUIRE(G->orders().size() == 1);
    REQUIRE(G->orders()[0] == 8);
    for (i64 k = 1; k < 8; ++k) {
        MultChar c = MultChar::from_generator_angles(E, 1, {Angle(k, 8)}, 1.0);
        bool nontriv_on_F3 = !c.unit_angle(E.from_int(2)).is_zero();
        CHECK((restrict_to_F(c).conductor() == 1) == nontriv_on_F3);
    }

    std::mt19937_64 rng(13);
    for (i64 p : {3, 5}) {
        for (const auto& K : extensions(p)) {
            for (int i = 0; i < 4; ++i) {
                MultChar chi2 = random_character(K, 2, rng, true);
                MultChar res = restrict_to_F(chi2);
                for (int j = 0; j < 10; ++j) {
                    EElem x = random_element(K.base(), rng);
                    CHECK(close(res(x), chi2(x), 1e-9));
                }
            }
        }
    }
}

TEST_CASE("extension from F") {
    std::mt19937_64 rng(17);
    auto E5 = LocalField::quadratic(5, ExtType::ramified_p);
    auto F5 = E5.base();
    CHECK(same_character(extend_from_F(MultChar::trivial(F5), E5), MultChar::trivial(E5)));

    MultChar absF = MultChar::unramified(F5, 1.0, cplx(0.3, 0.1));
    MultChar absE = extend_from_F(absF, E5);
    CHECK(close(absE(E5.from_int(5)), absF(5)));
    for (int j = 0; j < 3; ++j) {
        EElem u = random_unit(F5, rng);
        CHECK(close(absE(u), absF(u)));
    }

    MultChar leg = MultChar::from_unit_function(
        F5, 1, [](const EElem& u) { return Angle(legendre(residue(u.a, 1), 5) == 1 ? 0 : 1, 2); }, 1.0);
    MultChar ext = extend_from_F(leg, E5);
    for (int j = 0; j < 10; ++j) {
        EElem x = random_element(F5, rng);
        CHECK(close(ext(x), leg(x)));
    }

    for (i64 p : {3, 5}) {
        for (const auto& E : extensions(p)) {
            for (int i = 0; i < 4; ++i) {
                MultChar chi = random_character(E.base(), 2, rng, true);
                MultChar t = extend_from_F(chi, E);
                CHECK(same_character(restrict_to_F(t), chi, 1e-9));
                MultChar t2 = extend_from_F(chi, E, E.e() * chi.conductor() + 1);
                CHECK(same_character(restrict_to_F(t2), chi, 1e-9));
            }
        }
    }
}

TEST_CASE("sigma conjugation") {
    auto E = LocalField::quadratic(3, ExtType::ramified_p);
    std::mt19937_64 rng(19);
    MultChar chi = random_character(E, 2, rng);
    MultChar cs = sigma_conjugate(chi);
    CHECK(close(cs(E.sqrt_d()), chi(E.neg(E.sqrt_d()))));

    for (i64 p : {3, 5}) {
        for (const auto& K : extensions(p)) {
            for (int i = 0; i < 4; ++i) {
                MultChar a = random_character(K, 2, rng, true), b = random_character(K, 2, rng);
                CHECK(same_character(sigma_conjugate(sigma_conjugate(a)), a, 1e-9));
                CHECK(sigma_conjugate(a).conductor() == a.conductor());
                CHECK(same_character(sigma_conjugate(a * b), sigma_conjugate(a) * sigma_conjugate(b), 1e-9));
                CHECK(same_character(sigma_conjugate(inverse(a)), inverse(sigma_conjugate(a)), 1e-9));
                for (int j = 0; j < 5; ++j) {
                    EElem x = random_element(K, rng);
                    CHECK(close(sigma_conjugate(a)(x), a(K.conj(x)), 1e-9));
                }
                MultChar f = random_character(K.base(), 2, rng);
                MultChar ft = extend_from_F(f, K) * sigma_conjugate(extend_from_F(f, K));
                CHECK(same_character(sigma_conjugate(ft), ft, 1e-9));
            }
        }
    }
}

TEST_CASE("quadratic character of E/F") {
    std::mt19937_64 rng(23);
    auto U = LocalField::quadratic(7, ExtType::unramified);
    MultChar wU = omega_EF(U);
    CHECK(close(wU(7), -1.0));
    CHECK(close(wU(3), 1.0));

    for (i64 p : {3, 5, 7, 11}) {
        for (const auto& E : extensions(p)) {
            MultChar w = omega_EF(E);
            CHECK(same_character(w * w, MultChar::trivial(E.base()), 1e-12));
            CHECK(w.conductor() == (E.ramified() ? 1 : 0));
            for (int i = 0; i < 20; ++i) {
                EElem x = random_element(E, rng);
                CHECK(close(w(E.from_F(E.norm(x))), 1.0));
            }
            if (E.ext() == ExtType::ramified_p) {
                for (int u = 1; u < p; ++u) CHECK(close(w(u), static_cast<double>(legendre(u, p))));
                if (p % 4 == 3) CHECK(close(w(-1), -1.0));
            }
        }
    }
}

TEST_CASE("norm composition") {
    std::mt19937_64 rng(29);
    for (i64 p : {3, 5}) {
        for (const auto& E : extensions(p)) {
            MultChar chi = random_character(E.base(), 2, rng, true);
            MultChar cn = compose_norm(chi, E);
            for (int i = 0; i < 10; ++i) {
                EElem x = random_element(E, rng);
                CHECK(close(cn(x), chi(E.from_F(E.norm(x))), 1e-9));
            }
        }
    }
}

TEST_CASE("character descriptors are validated") {
    auto F = LocalField::ground(5);
    CHECK_THROWS_AS(MultChar::from_generator_angles(F, 1, {}, 1.0), DomainError);
    CHECK_THROWS_AS(MultChar::from_generator_angles(F, 1, {Angle(1, 3)}, 1.0), DomainError);
    MultChar c = MultChar::from_generator_angles(F, 2, {Angle(1, 2), Angle(0, 1)}, 1.0);
    CHECK(c.conductor() == 1);
}
