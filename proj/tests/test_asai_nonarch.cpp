#include <random>

#include "asai/asai_nonarch.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace asai;
using namespace asai::testing;

namespace {

const std::vector<cplx> kGrid = default_grid();

AsaiInput random_input(const LocalField& E, std::mt19937_64& rng, int maxc = 2) {
    return AsaiInput::make(E, random_character(E, maxc, rng, true), random_character(E, maxc, rng, true));
}

FElem random_F_unit_scaled(const LocalField& F, std::mt19937_64& rng, int lo, int hi) {
    return random_element(F, rng, lo, hi).a;
}

// omega = 1 bundle: nu2 chosen so that omega_pi|_F mu2 nu2 = 1.
AsaiInput omega_one_bundle(const LocalField& E, std::mt19937_64& rng) {
    AsaiInput in = random_input(E, rng, 1);
    const LocalField F = E.base();
    MultChar mu2 = random_character(F, 2, rng, true);
    MultChar nu2 = inverse(restrict_to_F(in.mu * in.nu) * mu2);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    in.tau = TauData{mu2, nu2, cplx(u(rng), u(rng))};
    return in;
}

}  // namespace

TEST_CASE("trivial characters over the unramified extension") {
    auto E = LocalField::quadratic(3, ExtType::unramified);
    auto F = E.base();
    AsaiInput in = AsaiInput::make(E, MultChar::trivial(E), MultChar::trivial(E));
    NonArchFactor gF = gamma_tate_nonarch(MultChar::trivial(F), AddChar(F));
    NonArchFactor gE = gamma_tate_nonarch(MultChar::trivial(E), AddChar::via_trace_xi(E, F.fint(1), in.xi));
    CHECK(gE.q == 9);
    NonArchFactor expect = gF * gF * to_base(gE, 3);
    CHECK(approx_equal(gamma_RS(in), expect, kGrid, 1e-12).equal);
    CHECK(approx_equal(eps_RS(in), NonArchFactor::one(3), kGrid, 1e-12).equal);
    EpsComparison c = eps_gal_comparison(in);
    CHECK(c.cmp.equal);
    CHECK(close(c.lambda, 1.0));
    CHECK_FALSE(asai_RS(in).norm.applied());
}

TEST_CASE("L factor of the Galois side") {
    std::mt19937_64 rng(101);
    auto E = LocalField::quadratic(5, ExtType::unramified);
    MultChar mu = random_unramified(E, rng), nu = random_unramified(E, rng);
    AsaiInput in = AsaiInput::make(E, mu, nu);
    NonArchFactor L = L_gal_asai(in);
    CHECK(L.den.size() == 4);  // q, q and q_E = q^2 split into two factors
    for (i64 p : {3, 5}) {
        for (const auto& K : extensions(p)) {
            for (int i = 0; i < 4; ++i) {
                AsaiInput t = random_input(K, rng);
                t.chi = random_character(K.base(), 1, rng, true);
                CHECK(approx_equal(L_gal_asai(t), asai_RS(t).L, kGrid, 1e-10).equal);
            }
        }
    }
    // ramified mu nu^sigma contributes 1
    auto R = LocalField::quadratic(3, ExtType::ramified_p);
    MultChar r = MultChar::from_generator_angles(R, 1, {Angle(1, 2)}, 1.0);
    AsaiInput ri = AsaiInput::make(R, r, MultChar::trivial(R));
    CHECK(L_gal_asai(ri).den.size() == 1);
}

TEST_CASE("renormalization agrees with the direct composition") {
    std::mt19937_64 rng(103);
    for (i64 p : {3, 5}) {
        for (const auto& E : extensions(p)) {
            const LocalField F = E.base();
            for (int i = 0; i < 3; ++i) {
                AsaiInput in = random_input(E, rng);
                in.psi = AddChar::shifted(F, random_F_unit_scaled(F, rng, -2, 2));
                in.xi = E.mul(E.from_F(random_F_unit_scaled(F, rng, -2, 2)), E.xi_canonical());
                RSResult r = asai_RS(in);
                CHECK(approx_equal(r.gamma, gamma_RS_direct(in), kGrid, 1e-8).equal);
                CHECK(approx_equal(r.eps, eps_RS_direct(in), kGrid, 1e-8).equal);
            }
        }
    }
}

TEST_CASE("dependence on psi and xi") {
    std::mt19937_64 rng(107);
    for (i64 p : {3, 5}) {
        for (const auto& E : extensions(p)) {
            const LocalField F = E.base();
            for (int i = 0; i < 3; ++i) {
                AsaiInput in = random_input(E, rng);
                const FElem a = random_F_unit_scaled(F, rng, -2, 2);
                const MultChar w = omega_F(in);
                const cplx wa = w(F.from_F(a));
                const int va = F.valuation(F.from_F(a));

                AsaiInput ia = in;
                ia.psi = in.psi.scaled(F.from_F(a));
                NonArchFactor law = (wa * wa) * NonArchFactor::abs_power(F.q(), va, 4, -2.0);
                CHECK(approx_equal(gamma_RS_direct(ia), law * gamma_RS_direct(in), kGrid, 1e-8).equal);
                CHECK(approx_equal(gamma_RS(ia), law * gamma_RS(in), kGrid, 1e-8).equal);

                AsaiInput ix = in;
                ix.xi = E.mul(E.from_F(a), in.xi);
                NonArchFactor lx = wa * NonArchFactor::abs_power(F.q(), va, 2, -1.0);
                CHECK(approx_equal(eps_RS_direct(ix), lx * eps_RS_direct(in), kGrid, 1e-8).equal);
                CHECK(approx_equal(eps_RS(ix), lx * eps_RS(in), kGrid, 1e-8).equal);
            }
        }
    }
}

TEST_CASE("epsilon comparison with the Galois side") {
    std::mt19937_64 rng(109);
    for (i64 p : {3, 5}) {
        for (const auto& E : extensions(p)) {
            const LocalField F = E.base();
            for (int i = 0; i < 3; ++i) {
                AsaiInput in = random_input(E, rng);
                if (i > 0) in.psi = AddChar::shifted(F, random_F_unit_scaled(F, rng, -1, 1));
                if (i > 1) in.xi = E.mul(E.from_F(random_F_unit_scaled(F, rng, -1, 1)), in.xi);
                EpsComparison c = eps_gal_comparison(in);
                CHECK_MESSAGE(c.cmp.equal, E.describe(), " deviation ", c.cmp.max_deviation);
                CHECK(c.constituents.size() == 6);
            }
        }
    }
}

TEST_CASE("split case") {
    std::mt19937_64 rng(113);
    for (i64 p : {3, 5, 7}) {
        auto F = LocalField::ground(p);
        for (int i = 0; i < 4; ++i) {
            MultChar m1 = random_character(F, 2, rng, true), n1 = random_character(F, 2, rng, true);
            MultChar m2 = random_character(F, 2, rng, true), n2 = random_character(F, 2, rng, true);
            AddChar psi = AddChar::shifted(F, random_F_unit_scaled(F, rng, -1, 1));
            SplitCheck s = split_case_check(m1, n1, m2, n2, psi, random_F_unit_scaled(F, rng, -2, 2));
            CHECK_MESSAGE(s.cmp.equal, s.cmp.max_deviation);
        }
    }
}

TEST_CASE("twist is independent of the extension of chi") {
    std::mt19937_64 rng(127);
    for (i64 p : {3, 5}) {
        for (const auto& E : extensions(p)) {
            for (int i = 0; i < 3; ++i) {
                AsaiInput in = random_input(E, rng, 1);
                MultChar chi = random_character(E.base(), 2, rng, true);
                MultChar c1 = extend_from_F(chi, E);
                // d / d^sigma is trivial on F^x, so c2 is a second extension of chi
                MultChar d = random_character(E, 1, rng);
                MultChar c2 = extend_from_F(chi, E, E.e() * chi.conductor() + 1) * d * inverse(sigma_conjugate(d));
                REQUIRE(same_character(restrict_to_F(c2), chi, 1e-9));
                AsaiInput a = AsaiInput::make(E, in.mu * c1, in.nu * c1);
                AsaiInput b = AsaiInput::make(E, in.mu * c2, in.nu * c2);
                AsaiInput t = in;
                t.chi = chi;
                CHECK(approx_equal(gamma_RS(a), gamma_RS(b), kGrid, 1e-8).equal);
                CHECK(approx_equal(gamma_RS(t), gamma_RS(a), kGrid, 1e-8).equal);
            }
        }
    }
}

TEST_CASE("functional equation involution") {
    std::mt19937_64 rng(131);
    for (i64 p : {3, 5}) {
        for (const auto& E : extensions(p)) {
            for (int i = 0; i < 3; ++i) {
                AsaiInput in = random_input(E, rng);
                AsaiInput d = in;
                d.mu = inverse(in.mu);
                d.nu = inverse(in.nu);
                NonArchFactor g = gamma_RS(in), gd = gamma_RS(d);
                for (cplx s : kGrid) CHECK(close(g.eval(s) * gd.eval(1.0 - s), 1.0, 1e-8));
            }
        }
    }
}

TEST_CASE("twisted Asai gamma: both assemblies agree") {
    std::mt19937_64 rng(137);
    for (i64 p : {3, 5}) {
        for (const auto& E : extensions(p)) {
            const LocalField F = E.base();
            for (int i = 0; i < 3; ++i) {
                AsaiInput in = random_input(E, rng, 1);
                std::uniform_real_distribution<double> u(-0.4, 0.4);
                in.tau = TauData{random_character(F, 2, rng, true), random_character(F, 2, rng, true),
                                 cplx(u(rng), u(rng))};
                if (i == 2) in.psi = AddChar::shifted(F, random_F_unit_scaled(F, rng, -1, 1));
                PSRResult r = gamma_PSR(in, kGrid, 1e-8, false);
                CHECK_MESSAGE(r.cmp.equal, E.describe(), " deviation ", r.cmp.max_deviation);
            }
        }
    }
}

TEST_CASE("twisted Asai gamma: specialization and dependence") {
    std::mt19937_64 rng(139);
    for (const auto& E : extensions(5)) {
        const LocalField F = E.base();
        MultChar mu = random_character(E, 1, rng);
        AsaiInput in = AsaiInput::make(E, mu, inverse(sigma_conjugate(mu)));
        REQUIRE(same_character(omega_F(in), MultChar::trivial(F), 1e-10));
        in.tau = TauData{MultChar::trivial(F), MultChar::trivial(F), 0.0};
        const FElem xi2 = E.mul(in.xi, in.xi).a;
        const FElem x4 = F.fint(4) * xi2 * xi2;
        NonArchFactor g = gamma_RS(AsaiInput::make(E, in.mu, in.nu));
        NonArchFactor expect = NonArchFactor::abs_power(F.q(), F.valuation(F.from_F(x4)), -2, 1.0) * g * g;
        CHECK(approx_equal(gamma_PSR(in).assembly1, expect, kGrid, 1e-10).equal);
    }

    for (i64 p : {3, 5}) {
        for (const auto& E : extensions(p)) {
            const LocalField F = E.base();
            AsaiInput in = random_input(E, rng, 1);
            in.tau = TauData{random_character(F, 1, rng, true), random_character(F, 2, rng, true), cplx(0.1, -0.2)};
            const FElem a = random_F_unit_scaled(F, rng, -2, 2);
            const cplx wa = omega_F(in)(F.from_F(a));
            const int va = F.valuation(F.from_F(a));
            NonArchFactor g = gamma_PSR(in).assembly1;

            AsaiInput ia = in;
            ia.psi = in.psi.scaled(F.from_F(a));
            NonArchFactor lawa = std::pow(wa, 4) * NonArchFactor::abs_power(F.q(), va, 8, -4.0);
            CHECK(approx_equal(gamma_PSR(ia).assembly1, lawa * g, kGrid, 1e-8).equal);

            AsaiInput ix = in;
            ix.xi = E.mul(E.from_F(a), in.xi);
            NonArchFactor lawx = std::pow(wa, -2) * NonArchFactor::abs_power(F.q(), va, -4, 2.0);
            CHECK(approx_equal(gamma_PSR(ix).assembly1, lawx * g, kGrid, 1e-8).equal);
        }
    }
}

TEST_CASE("dichotomy sign") {
    auto U = LocalField::quadratic(3, ExtType::unramified);
    AsaiInput triv = AsaiInput::make(U, MultChar::trivial(U), MultChar::trivial(U));
    triv.tau = TauData{MultChar::trivial(U.base()), MultChar::trivial(U.base()), 0.0};
    CHECK(dichotomy_sign(triv).sign == 1);

    AsaiInput bad = triv;
    bad.tau->mu2 = MultChar::unramified(U.base(), -1.0);
    CHECK_THROWS_AS(dichotomy_sign(bad), DomainError);

    // omega_{E/F}(-1) = -1 for p = 3 ramified; the constituent flips but the product is +1
    auto R = LocalField::quadratic(3, ExtType::ramified_p);
    AsaiInput r = AsaiInput::make(R, MultChar::trivial(R), MultChar::trivial(R));
    r.tau = TauData{MultChar::trivial(R.base()), MultChar::trivial(R.base()), 0.0};
    DichotomyResult dr = dichotomy_sign(r);
    CHECK(close(dr.omega_EF_minus1, -1.0));
    CHECK(close(dr.eps_mu2 * dr.eps_nu2, -1.0, 1e-9));
    CHECK(dr.sign == 1);

    std::mt19937_64 rng(149);
    int plus = 0, minus = 0;
    for (i64 p : {3, 5}) {
        for (const auto& E : extensions(p)) {
            const LocalField F = E.base();
            for (int i = 0; i < 3; ++i) {
                AsaiInput in = omega_one_bundle(E, rng);
                DichotomyResult d = dichotomy_sign(in);
                CHECK(std::abs(d.value - static_cast<double>(d.sign)) < 1e-8);
                (d.sign > 0 ? plus : minus)++;
                const FElem a = random_F_unit_scaled(F, rng, -2, 2);
                AsaiInput ia = in;
                ia.psi = in.psi.scaled(F.from_F(a));
                CHECK(dichotomy_sign(ia).sign == d.sign);
                AsaiInput ix = in;
                ix.xi = E.mul(E.from_F(a), in.xi);
                CHECK(dichotomy_sign(ix).sign == d.sign);
            }
        }
    }
    MESSAGE("signs: +1 x ", plus, ", -1 x ", minus);
}

TEST_CASE("input validation") {
    auto E = LocalField::quadratic(3, ExtType::ramified_p);
    AsaiInput in = AsaiInput::make(E, MultChar::trivial(E), MultChar::trivial(E));
    AsaiInput sc = in;
    sc.kind = RepKind::supercuspidal;
    CHECK_THROWS_AS(gamma_RS(sc), DomainError);
    AsaiInput tr = in;
    tr.xi = E.from_int(1);
    CHECK_THROWS_AS(gamma_RS(tr), DomainError);
    CHECK_THROWS_AS(gamma_PSR(in), DomainError);
}
