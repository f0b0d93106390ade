#include "asai/verify.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "asai/arch.hpp"
#include "asai/asai_nonarch.hpp"
#include "asai/serialize.hpp"
#include "asai/tate.hpp"
#include "asai/unit_group.hpp"
#include "asai/whittaker.hpp"

namespace asai {

namespace {

const cplx kI(0.0, 1.0);

std::vector<LocalField> extensions(i64 p) {
    return {LocalField::quadratic(p, ExtType::unramified), LocalField::quadratic(p, ExtType::ramified_p),
            LocalField::quadratic(p, ExtType::ramified_up)};
}

EElem random_unit(const LocalField& K, std::mt19937_64& rng) {
    std::uniform_int_distribution<i64> dig(0, ipow(K.p(), 6) - 1);
    for (;;) {
        EElem u = K.make(dig(rng), K.is_E() ? dig(rng) : 0);
        if (!K.is_zero(u) && K.valuation(u) == 0) return u;
    }
}

// unit * p^v with lo <= v <= hi
FElem random_scalar(const LocalField& F, std::mt19937_64& rng, int lo, int hi) {
    const int v = std::uniform_int_distribution<int>(lo, hi)(rng);
    return F.mul(random_unit(F, rng), F.pi_pow(v)).a;
}

AsaiInput random_input(const LocalField& E, std::mt19937_64& rng, int maxc, bool move_psi_xi) {
    AsaiInput in = AsaiInput::make(E, random_character(E, maxc, rng, true), random_character(E, maxc, rng, true));
    if (move_psi_xi) {
        const LocalField F = E.base();
        in.psi = AddChar::shifted(F, random_scalar(F, rng, -1, 1));
        in.xi = E.mul(E.from_F(random_scalar(F, rng, -1, 1)), E.xi_canonical());
    }
    return in;
}

double grid_deviation(const NonArchFactor& a, const NonArchFactor& b, const std::vector<cplx>& grid) {
    return approx_equal(a, b, grid, 1.0).max_deviation;
}

std::string describe_E(const LocalField& E) { return E.describe(); }

struct Tracker {
    CheckResult r;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    Tracker(int id, std::string name, double tol, double limit = 0.0) {
        r.id = id;
        r.name = std::move(name);
        r.tolerance = tol;
        r.time_limit = limit;
    }
    void observe(double dev, const std::string& where) {
        ++r.samples;
        if (!(dev <= r.max_deviation)) {
            r.max_deviation = std::isnan(dev) ? INFINITY : dev;
            r.detail = "worst: " + where;
        }
    }
    CheckResult finish(bool extra_ok = true, const std::string& extra = "") {
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.passed = extra_ok && r.max_deviation < r.tolerance && (r.time_limit <= 0.0 || r.seconds < r.time_limit);
        if (!extra.empty()) r.detail = r.detail.empty() ? extra : r.detail + "; " + extra;
        if (r.time_limit > 0.0 && r.seconds >= r.time_limit) r.detail += "; over the time budget";
        return r;
    }
};

// ---- 1: Gauss-sum modulus over every primitive character of conductor <= 3

CheckResult gauss_modulus(const RunConfig& cfg) {
    Tracker t(1, "Gauss-sum modulus", cfg.tol.gauss_modulus, 5.0);
    for (i64 p : {3, 5, 7}) {
        const LocalField F = LocalField::ground(p);
        const AddChar psi0(F);
        for (int n = 1; n <= 3; ++n) {
            auto G = UnitGroup::get(F, n);
            const auto& orders = G->orders();
            std::vector<i64> e(orders.size(), 0);
            const double want = std::pow(static_cast<double>(p), 0.5 * n);
            for (;;) {
                std::vector<Angle> a;
                for (size_t j = 0; j < e.size(); ++j) a.emplace_back(e[j], orders[j]);
                MultChar chi = MultChar::from_generator_angles(F, n, a, 1.0);
                if (chi.conductor() == n) {
                    const double dev = std::abs(std::abs(gauss_sum(chi, psi0)) - want);
                    t.observe(dev, "p=" + std::to_string(p) + " n=" + std::to_string(n));
                }
                size_t j = 0;
                while (j < e.size() && ++e[j] == orders[j]) e[j++] = 0;
                if (j == e.size()) break;
            }
        }
    }
    return t.finish(t.r.samples > 0);
}

// ---- 2: Phi-independence of the Tate epsilon

CheckResult phi_independence(const RunConfig& cfg) {
    Tracker t(2, "Tate Phi-independence", cfg.tol.phi_independence);
    std::mt19937_64 rng(cfg.seed + 2);
    int fewest = 1 << 30;
    for (int i = 0; i < 50; ++i) {
        const i64 p = i % 2 == 0 ? 3 : 5;
        const LocalField F = LocalField::ground(p);
        MultChar chi = random_character(F, 2, rng, true);
        AddChar psi = AddChar::shifted(F, random_scalar(F, rng, -1, 1));
        TateResult r = tate_factors(chi, psi, 1.0);
        t.observe(r.phi_deviation, "p=" + std::to_string(p) + " c=" + std::to_string(chi.conductor()));
        fewest = std::min(fewest, r.test_functions_used);
    }
    return t.finish(fewest >= 2, "at least " + std::to_string(fewest) + " test functions per character");
}

// ---- 3: gamma_RS against the spherical zeta-integral ratio

CheckResult unramified_gamma(const RunConfig& cfg) {
    Tracker t(3, "unramified gamma_RS vs spherical zeta", cfg.tol.nonarch, 30.0);
    std::mt19937_64 rng(cfg.seed + 3);
    for (i64 p : {3, 5}) {
        for (const auto& E : extensions(p)) {
            for (int i = 0; i < 10; ++i) {
                AsaiInput in = AsaiInput::make(E, random_unramified(E, rng, true), random_unramified(E, rng, true));
                SphericalZeta Z(in);
                const NonArchFactor g = gamma_RS(in);
                Comparison c = compare_on_grid([&](cplx s) { return Z.gamma(s); }, [&](cplx s) { return g.eval(s); },
                                               cfg.grid, cfg.tol.nonarch);
                t.observe(c.max_deviation, describe_E(E));
            }
        }
    }
    return t.finish();
}

// ---- 4: brute-force Whittaker sums against the closed forms

CheckResult whittaker_closed_forms(const RunConfig& cfg) {
    Tracker t(4, "Whittaker closed forms by brute force", cfg.tol.whittaker_exact);
    std::mt19937_64 rng(cfg.seed + 4);
    int several = 0, single = 0, second = 0, second_ramified = 0;
    for (i64 p : {3, 5}) {
        for (const auto& E : extensions(p)) {
            const LocalField F = E.base();
            const AddChar psi = AddChar::via_trace_xi(E, F.fint(1), E.xi_canonical());
            // two characters per (c(mu), c(mu|F)) class, c(mu) <= 2
            std::map<std::pair<int, int>, std::vector<MultChar>> buckets;
            for (int i = 0; i < 200; ++i) {
                MultChar mu = random_character(E, 2, rng);
                if (i % 2 == 1) {
                    MultChar d = random_character(E, 2, rng);
                    mu = d * inverse(sigma_conjugate(d)) * random_unramified(E, rng);
                }
                if (!mu.ramified()) continue;
                auto& v = buckets[{mu.conductor(), restrict_to_F(mu).conductor()}];
                if (v.size() < 2) v.push_back(mu);
            }
            for (const auto& [key, mus] : buckets) {
                for (const auto& mu : mus) {
                    const bool first = restrict_to_F(mu).ramified();
                    InducedSection f{mu, MultChar::trivial(E), SectionKind::big_cell};
                    TranslateSum s = first ? averaged_section_g(mu) : averaged_section_h(mu);
                    if (first) (s.terms.size() > 1 ? several : single)++;
                    else {
                        ++second;
                        if (E.ramified()) ++second_ramified;
                    }
                    for (int oa = -3; oa <= 3; ++oa) {
                        const FElem a = F.mul(random_unit(F, rng), F.pi_pow(oa)).a;
                        const cplx w = whittaker_of_sum(f, psi, s, mat_diag(E, E.from_F(a), E.one()));
                        const cplx c = first ? whittaker_closed_g(mu, a) : whittaker_closed_h(mu, a);
                        t.observe(std::abs(w - c), describe_E(E) + " c(mu)=" + std::to_string(key.first) +
                                                      " ord a=" + std::to_string(oa));
                    }
                }
            }
        }
    }
    const bool covered = several > 0 && single > 0 && second_ramified > 0;
    std::ostringstream cov;
    cov << "coverage: g " << several + single << ", h " << second;
    return t.finish(covered, cov.str());
}

// ---- 5: eps_RS against the Galois epsilon

CheckResult eps_equality(const RunConfig& cfg) {
    Tracker t(5, "epsilon equality RS vs Galois", cfg.tol.nonarch);
    std::mt19937_64 rng(cfg.seed + 5);
    int ramified = 0, unramified = 0;
    for (int i = 0; i < 20; ++i) {
        const i64 p = i % 2 == 0 ? 3 : 5;
        const LocalField E = extensions(p)[(i / 2) % 3];
        (E.ramified() ? ramified : unramified)++;
        AsaiInput in = random_input(E, rng, 2, true);
        EpsComparison c = eps_gal_comparison(in, cfg.grid, cfg.tol.nonarch);
        t.observe(c.cmp.max_deviation, describe_E(E));
    }
    return t.finish(ramified > 0 && unramified > 0);
}

// ---- 6: archimedean case table

CheckResult arch_case_table(const RunConfig& cfg) {
    Tracker t(6, "archimedean case table", cfg.tol.arch, 60.0);
    const cplx expected_c[6] = {0.0, M_PI / 2, kI * M_PI, M_PI / (2.0 * kI), -M_PI / 2, -M_PI / 2};
    const cplx expected_eps[6] = {0.0, 1.0, 1.0, kI, -kI, 1.0};
    std::mt19937_64 rng(cfg.seed + 6);
    std::uniform_real_distribution<double> u(-0.2, 0.2);
    int seen[6] = {};
    std::map<int, std::pair<CChar, CChar>> reps;
    for (int n1 = -3; n1 <= 3; ++n1) {
        for (int n2 = -3; n2 <= 3; ++n2) {
            CChar mu{cplx(u(rng), u(rng)), n1}, nu{cplx(u(rng), u(rng)), n2};
            CaseReport r = verify_case(mu, nu, cfg.grid);
            const int id = r.datum.case_id;
            const std::string where = "case " + std::to_string(id) + " n=(" + std::to_string(n1) + "," +
                                      std::to_string(n2) + ")";
            if (id < 1 || id > 5) {
                t.observe(INFINITY, where + " unclassified");
                continue;
            }
            ++seen[id];
            reps.emplace(id, std::pair{mu, nu});
            t.observe(std::abs(r.mean_ratio - expected_c[id]) / std::abs(expected_c[id]), where + " constant");
            t.observe(r.stddev_ratio, where + " grid spread");
            t.observe(r.stddev_ratio_dual, where + " dual grid spread");
            t.observe(std::abs(r.eps_RS - expected_eps[id]), where + " eps_RS");
            t.observe(r.relation_dev, where + " Galois relation");
        }
    }
    // the same constants from fully numerical integrals
    for (const auto& [id, pair] : reps) {
        CaseDatum d = case_table(pair.first, pair.second);
        const cplx s(0.55, 0.3);
        CaseZeta q = zeta_integral_case_quadrature(s, d);
        t.observe(std::abs(q.ratio - expected_c[id]) / std::abs(expected_c[id]),
                  "case " + std::to_string(id) + " quadrature");
        t.observe(std::abs(q.ratio_dual / q.ratio - expected_eps[id]), "case " + std::to_string(id) + " quadrature eps");
    }
    bool all = true;
    for (int id = 1; id <= 5; ++id) all = all && seen[id] > 0;
    return t.finish(all, all ? "" : "a case was not reached");
}

// ---- 7: closed-form zeta of W_(a,b) against 2-D quadrature

CheckResult arch_closed_vs_quadrature(const RunConfig& cfg) {
    Tracker t(7, "closed form vs 2-D quadrature", cfg.tol.arch);
    std::mt19937_64 rng(cfg.seed + 7);
    std::uniform_real_distribution<double> u(-0.15, 0.15);
    std::uniform_int_distribution<int> nd(-2, 2), id(0, 3);
    int done = 0;
    while (done < 10) {
        CChar mu{cplx(u(rng), u(rng)), nd(rng)}, nu{cplx(u(rng), u(rng)), nd(rng)};
        WhittakerIndex idx{id(rng), id(rng), id(rng), id(rng)};
        if (!selection_rule(idx, mu, nu)) continue;
        // the sign character of chi matches the parity of W on R^x, so the integral is not identically zero
        RealChar chi{(mu.n + idx.a1 + idx.a2) % 2 == 0 ? 0 : 1, cplx(u(rng), u(rng))};
        const cplx s(1.2 + u(rng), 3 * u(rng));
        const cplx closed = zeta_whittaker_closed(s, idx, chi, mu, nu);
        if (std::abs(closed) < 1e-12) continue;
        const cplx quad = zeta_whittaker_quadrature(s, idx, chi, mu, nu);
        t.observe(std::abs(quad - closed) / std::max(std::abs(closed), 1e-300),
                  "idx=(" + std::to_string(idx.a1) + "," + std::to_string(idx.a2) + "," + std::to_string(idx.b1) +
                      "," + std::to_string(idx.b2) + ")");
        ++done;
    }
    return t.finish();
}

// ---- 8: combinatorial Gamma identity

CheckResult combinatorial(const RunConfig& cfg) {
    Tracker t(8, "combinatorial identity", cfg.tol.combinatorial);
    std::mt19937_64 rng(cfg.seed + 8);
    std::uniform_real_distribution<double> re(0.1, 4.0), im(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        // nonzero imaginary parts keep every Gamma argument off the poles
        const cplx z(re(rng), im(rng) + (i % 2 ? 0.25 : -0.25));
        const cplx w(re(rng) + 2.0, im(rng) + (i % 3 ? 0.3 : -0.3));
        for (int N = 0; N <= 6; ++N) t.observe(combinatorial_identity(N, z, w).deviation, "N=" + std::to_string(N));
    }
    return t.finish();
}

// ---- 9: the two assemblies of the twisted gamma factor

CheckResult twisted_assemblies(const RunConfig& cfg) {
    Tracker t(9, "twisted gamma: assembly-1 = assembly-2", cfg.tol.nonarch);
    std::mt19937_64 rng(cfg.seed + 9);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    for (int i = 0; i < 20; ++i) {
        const i64 p = i % 2 == 0 ? 3 : 5;
        const LocalField E = extensions(p)[(i / 2) % 3];
        const LocalField F = E.base();
        AsaiInput in = random_input(E, rng, 2, i % 4 >= 2);
        in.tau = TauData{random_character(F, 2, rng, true), random_character(F, 2, rng, true), cplx(u(rng), u(rng))};
        PSRResult r = gamma_PSR(in, cfg.grid, cfg.tol.nonarch, false);
        t.observe(r.cmp.max_deviation, describe_E(E));
    }
    return t.finish();
}

// ---- 10: dependence on psi and xi

CheckResult dependence_laws(const RunConfig& cfg) {
    Tracker t(10, "dependence laws in psi and xi", cfg.tol.nonarch);
    std::mt19937_64 rng(cfg.seed + 10);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    for (int i = 0; i < 12; ++i) {
        const i64 p = i % 2 == 0 ? 3 : 5;
        const LocalField E = extensions(p)[(i / 2) % 3];
        const LocalField F = E.base();
        const std::string where = describe_E(E);
        AsaiInput in = random_input(E, rng, 2, true);
        const FElem a = random_scalar(F, rng, -2, 2);
        const int va = F.valuation(F.from_F(a));

        const cplx wa = omega_F(in)(F.from_F(a));
        AsaiInput ia = in;
        ia.psi = in.psi.scaled(F.from_F(a));
        AsaiInput ix = in;
        ix.xi = E.mul(E.from_F(a), in.xi);
        t.observe(grid_deviation(gamma_RS(ia), (wa * wa) * NonArchFactor::abs_power(F.q(), va, 4, -2.0) * gamma_RS(in),
                                 cfg.grid),
                  where + " gamma_RS(psi^a)");
        t.observe(grid_deviation(eps_RS(ix), wa * NonArchFactor::abs_power(F.q(), va, 2, -1.0) * eps_RS(in), cfg.grid),
                  where + " eps_RS(a xi)");

        in.tau = TauData{random_character(F, 2, rng, true), random_character(F, 2, rng, true), cplx(u(rng), u(rng))};
        ia.tau = in.tau;
        ix.tau = in.tau;
        const cplx wt = omega_F(in)(F.from_F(a));
        const NonArchFactor g = gamma_PSR(in).assembly1;
        t.observe(grid_deviation(gamma_PSR(ia).assembly1,
                                 std::pow(wt, 4) * NonArchFactor::abs_power(F.q(), va, 8, -4.0) * g, cfg.grid),
                  where + " gamma_PSR(psi^a)");
        t.observe(grid_deviation(gamma_PSR(ix).assembly1,
                                 std::pow(wt, -2) * NonArchFactor::abs_power(F.q(), va, -4, 2.0) * g, cfg.grid),
                  where + " gamma_PSR(a xi)");
    }
    return t.finish();
}

// ---- 11: dichotomy sign

CheckResult dichotomy(const RunConfig& cfg) {
    Tracker t(11, "dichotomy sign", cfg.tol.sign);
    std::mt19937_64 rng(cfg.seed + 11);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    int plus = 0, minus = 0;
    bool invariant = true;
    for (int i = 0; i < 20; ++i) {
        const i64 p = i % 2 == 0 ? 3 : 5;
        const LocalField E = extensions(p)[(i / 2) % 3];
        const LocalField F = E.base();
        AsaiInput in = random_input(E, rng, 1, i % 4 >= 2);
        const MultChar mu2 = random_character(F, 2, rng, true);
        in.tau = TauData{mu2, inverse(restrict_to_F(in.mu * in.nu) * mu2), cplx(u(rng), u(rng))};
        const DichotomyResult d = dichotomy_sign(in, 1.0);
        t.observe(std::abs(d.value - static_cast<double>(d.sign)), describe_E(E));
        (d.sign > 0 ? plus : minus)++;

        const FElem a = random_scalar(F, rng, -2, 2);
        AsaiInput ia = in;
        ia.psi = in.psi.scaled(F.from_F(a));
        AsaiInput ix = in;
        ix.xi = E.mul(E.from_F(a), in.xi);
        for (const AsaiInput* v : {&ia, &ix}) {
            const DichotomyResult dv = dichotomy_sign(*v, 1.0);
            invariant = invariant && dv.sign == d.sign;
            t.observe(std::abs(dv.value - d.value), describe_E(E) + " rescaled");
        }
    }
    std::ostringstream os;
    os << "signs +1 x " << plus << ", -1 x " << minus;
    return t.finish(invariant, os.str());
}

using Criterion = CheckResult (*)(const RunConfig&);
const Criterion kCriteria[] = {gauss_modulus,         phi_independence, unramified_gamma, whittaker_closed_forms,
                               eps_equality,          arch_case_table,  arch_closed_vs_quadrature,
                               combinatorial,         twisted_assemblies,        dependence_laws,      dichotomy};

}  // namespace

bool SuiteReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CheckResult run_criterion(int id, const RunConfig& cfg) {
    if (id < 1 || id > criterion_count()) throw DomainError("no acceptance criterion " + std::to_string(id));
    try {
        return kCriteria[id - 1](cfg);
    } catch (const std::exception& ex) {
        CheckResult r;
        r.id = id;
        r.name = "criterion " + std::to_string(id);
        r.passed = false;
        r.max_deviation = INFINITY;
        r.detail = std::string("error: ") + ex.what();
        return r;
    }
}

std::vector<std::string> suite_names() { return {"arch", "nonarch", "tate"}; }

std::vector<int> suite_criteria(const std::string& suite) {
    if (suite == "tate") return {1, 2};
    if (suite == "nonarch") return {3, 4, 5, 9, 10, 11};
    if (suite == "arch") return {6, 7, 8};
    throw DomainError("unknown suite '" + suite + "' (expected arch, nonarch, tate or all)");
}

SuiteReport run_suite(const std::string& suite, const RunConfig& cfg) {
    SuiteReport r;
    r.suite = suite;
    for (int id : suite_criteria(suite)) r.checks.push_back(run_criterion(id, cfg));
    return r;
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& suites, const RunConfig& cfg) {
    for (const auto& s : suites) suite_criteria(s);
    std::vector<std::future<SuiteReport>> jobs;
    for (const auto& s : suites) jobs.push_back(std::async(std::launch::async, run_suite, s, cfg));
    std::vector<SuiteReport> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

nlohmann::json to_json(const CheckResult& r) {
    return {{"id", r.id},
            {"name", r.name},
            {"passed", r.passed},
            {"max_deviation", std::isfinite(r.max_deviation) ? nlohmann::json(r.max_deviation) : nlohmann::json("inf")},
            {"tolerance", r.tolerance},
            {"seconds", r.seconds},
            {"time_limit", r.time_limit},
            {"samples", r.samples},
            {"detail", r.detail}};
}

nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

std::string format_table(const std::vector<SuiteReport>& reports) {
    std::ostringstream os;
    os << std::left << std::setw(8) << "suite" << std::setw(4) << "id" << std::setw(52) << "check" << std::setw(6)
       << "result" << std::right << std::setw(12) << "max dev" << std::setw(10) << "tol" << std::setw(9) << "seconds"
       << "  detail\n";
    for (const auto& r : reports) {
        for (const auto& c : r.checks) {
            os << std::left << std::setw(8) << r.suite << std::setw(4) << c.id << std::setw(52) << c.name
               << std::setw(6) << (c.passed ? "PASS" : "FAIL") << std::right << std::scientific << std::setprecision(2)
               << std::setw(12) << c.max_deviation << std::setw(10) << c.tolerance << std::fixed
               << std::setprecision(2) << std::setw(9) << c.seconds << "  " << c.detail << "\n";
        }
    }
    return os.str();
}

}  // namespace asai
