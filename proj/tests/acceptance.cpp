// Runs the eleven acceptance criteria and prints one PASS/FAIL line each.
// Criteria 1, 3, 7 and 8 are also held against the frozen mpmath values.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "asai/arch.hpp"
#include "asai/asai_nonarch.hpp"
#include "asai/tate.hpp"
#include "asai/verify.hpp"
#include "asai/whittaker.hpp"
#include "oracles/frozen_oracle.hpp"
#include "test_util.hpp"

using namespace asai;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double frozen_gauss() {
    double dev = 0.0;
    for (const auto& c : frozen::kGauss) {
        auto F = LocalField::ground(c.p);
        MultChar chi = testing::dirichlet(F, c.g, c.k, c.n);
        dev = std::max(dev, rel(gauss_sum(inverse(chi), AddChar(F)), c.value));
    }
    return dev;
}

double frozen_spherical() {
    double dev = 0.0;
    for (const auto& c : frozen::kSpherical) {
        auto E = LocalField::quadratic(c.p, parse_ext(c.ext));
        const cplx a = Angle(c.a_num, c.a_den).value(), b = Angle(c.b_num, c.b_den).value();
        SphericalZeta Z(AsaiInput::make(E, MultChar::unramified(E, a), MultChar::unramified(E, b)));
        for (int i = 0; i < 5; ++i) dev = std::max(dev, rel(Z.zeta(c.s[i]), c.zeta[i]));
    }
    return dev;
}

double frozen_arch() {
    const CChar one{0.0, 0};
    double dev = 0.0;
    for (const auto& c : frozen::kArchZeta) {
        dev = std::max(dev, rel(zeta_whittaker_closed(c.s, {}, RealChar{0, 0.0}, one, one), c.value));
        dev = std::max(dev, rel(zeta_whittaker_quadrature(c.s, {}, RealChar{0, 0.0}, one, one), c.value));
    }
    return dev;
}

double frozen_gamma_sum() {
    double dev = 0.0;
    for (const auto& c : frozen::kGammaSum) {
        CombResult r = combinatorial_identity(c.N, c.z, c.w);
        dev = std::max({dev, rel(r.lhs, c.value), rel(r.rhs, c.value)});
    }
    return dev;
}

struct FrozenCheck {
    std::function<double()> deviation;
    double tolerance;
};

FrozenCheck frozen_for(int id, const Tolerances& tol) {
    switch (id) {
        case 1: return {frozen_gauss, tol.gauss_modulus};
        case 3: return {frozen_spherical, tol.nonarch};
        case 7: return {frozen_arch, tol.arch};
        case 8: return {frozen_gamma_sum, tol.combinatorial};
        default: return {nullptr, 0.0};
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            ids.push_back(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: %s [--only K]...\n", argv[0]);
            return 2;
        }
    }
    if (ids.empty())
        for (int k = 1; k <= criterion_count(); ++k) ids.push_back(k);

    const RunConfig cfg;
    int failed = 0;
    for (int id : ids) {
        CheckResult r = run_criterion(id, cfg);
        std::string extra;
        if (FrozenCheck f = frozen_for(id, cfg.tol); f.deviation) {
            double dev = 0.0;
            bool ok = false;
            try {
                dev = f.deviation();
                ok = dev <= f.tolerance;
            } catch (const std::exception& e) {
                extra = std::string(" frozen-oracle error: ") + e.what();
            }
            char buf[96];
            std::snprintf(buf, sizeof buf, " frozen-oracle=%.2e%s", dev, ok ? "" : " (over tolerance)");
            extra = buf + extra;
            r.passed = r.passed && ok;
        }
        char timing[64] = "";
        if (r.time_limit > 0) std::snprintf(timing, sizeof timing, "/%.0fs", r.time_limit);
        std::printf("criterion %2d: %s  %-44s max-dev=%.2e tol=%.0e samples=%d time=%.2fs%s%s%s%s\n", r.id,
                    r.passed ? "PASS" : "FAIL", r.name.c_str(), r.max_deviation, r.tolerance, r.samples, r.seconds,
                    timing, extra.c_str(), r.detail.empty() ? "" : "  ", r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failed;
    }
    std::printf("%zu criteria, %d failed\n", ids.size(), failed);
    return failed == 0 ? 0 : 1;
}
