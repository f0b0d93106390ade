#include "asai/tate.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace asai {

namespace {

constexpr int kNoBeta = std::numeric_limits<int>::max() / 4;

// Coefficient together with the size of the terms that were summed into it, so that
// exact cancellation can be told apart from a genuinely small value.
struct Coef {
    cplx v;
    double mag = 0.0;
};
using Laurent = std::map<int, Coef>;

void add_to(Laurent& p, int k, cplx v, double mag) {
    auto& c = p[k];
    c.v += v;
    c.mag += mag;
}

int beta_order(const LocalField& K, const BoxTerm& t) {
    if (!t.has_beta || K.is_zero(t.beta)) return kNoBeta;
    return K.valuation(t.beta);
}

cplx box_psi(const LocalField& K, const AddChar& psi, const BoxTerm& t, const EElem& x) {
    if (!t.has_beta) return 1.0;
    return psi(K.mul(t.beta, x));
}

// Z(s) * L(s)^{-1} as a Laurent polynomial in Y; exact for unramified chi since the
// tails are geometric with ratio r.
Laurent strip_L(const ZetaSeries& Z, bool unramified) {
    Laurent P;
    for (const auto& [v, c] : Z.coeffs) {
        double mag = Z.magnitude.at(v);
        add_to(P, v, c, mag);
        if (unramified) add_to(P, v + 1, -Z.ratio * c, std::abs(Z.ratio) * mag);
    }
    if (unramified)
        for (const auto& [c, V] : Z.tails) add_to(P, V, c * std::pow(Z.ratio, V), std::abs(c * std::pow(Z.ratio, V)));
    return P;
}

Laurent prune(const Laurent& p) {
    Laurent out;
    for (const auto& [k, c] : p)
        if (std::abs(c.v) > 1e-10 * c.mag) out[k] = c;
    return out;
}

double maxabs(const Laurent& p) {
    double m = 0.0;
    for (const auto& [k, c] : p) m = std::max(m, std::abs(c.v));
    return m;
}

struct EpsFit {
    bool vanishing = false;
    cplx C;
    int m = 0;
};

EpsFit fit_monomial(const Laurent& P, const Laurent& PdY) {
    Laurent a = prune(P), b = prune(PdY);
    if (a.empty() && b.empty()) return {true, 0.0, 0};
    if (a.empty() || b.empty())
        throw ConsistencyError("Tate functional equation: one side of the zeta ratio vanishes identically");
    int m = b.begin()->first - a.begin()->first;
    cplx C = b.begin()->second.v / a.begin()->second.v;
    double tol = 1e-9 * std::max(maxabs(b), std::abs(C) * maxabs(a));
    for (const auto& [k, c] : a) {
        auto it = b.find(k + m);
        cplx bv = it == b.end() ? cplx(0.0) : it->second.v;
        if (std::abs(bv - C * c.v) > tol) throw ConsistencyError("epsilon factor is not a monomial in q^{-s}");
    }
    for (const auto& [k, c] : b)
        if (a.find(k - m) == a.end() && std::abs(c.v) > tol)
            throw ConsistencyError("epsilon factor is not a monomial in q^{-s}");
    return {false, C, m};
}

}  // namespace

TestFunction TestFunction::box(const EElem& center, int k, cplx coef) {
    TestFunction f;
    BoxTerm t;
    t.coef = coef;
    t.center = center;
    t.k = k;
    f.terms.push_back(t);
    return f;
}

cplx TestFunction::operator()(const LocalField& K, const AddChar& psi, const EElem& x) const {
    cplx r = 0.0;
    for (const auto& t : terms) {
        EElem d = K.sub(x, t.center);
        if (!K.is_zero(d) && K.valuation(d) < t.k) continue;
        r += t.coef * box_psi(K, psi, t, x);
    }
    return r;
}

TestFunction fourier_transform(const TestFunction& phi, const AddChar& psi) {
    const LocalField& K = psi.field();
    const int cpsi = psi.conductor();
    const double q = static_cast<double>(K.q());
    TestFunction out;
    for (const auto& t : phi.terms) {
        // int psi(beta x) 1_{c + pi^k O}(x) psi(x y) dx
        //   = vol(pi^k O) psi(c beta) psi(c y) 1_{-beta + pi^{cpsi - k} O}(y)
        BoxTerm r;
        cplx ph = t.has_beta ? psi(K.mul(t.center, t.beta)) : cplx(1.0);
        r.coef = t.coef * std::pow(q, 0.5 * cpsi - t.k) * ph;
        r.has_beta = !K.is_zero(t.center);
        r.beta = t.center;
        r.center = t.has_beta ? K.neg(t.beta) : K.zero();
        r.k = cpsi - t.k;
        out.terms.push_back(r);
    }
    return out;
}

cplx ZetaSeries::eval(cplx s) const {
    cplx Y = std::exp(-s * std::log(static_cast<double>(q)));
    cplx r = 0.0;
    for (const auto& [v, c] : coeffs) r += c * std::pow(Y, v);
    for (const auto& [c, V] : tails) {
        cplx rY = ratio * Y;
        if (std::abs(rY) >= 1.0) throw DomainError("Tate zeta series diverges at this s");
        r += c * std::pow(rY, V) / (1.0 - rY);
    }
    return r;
}

ZetaSeries tate_zeta(const MultChar& chi, const TestFunction& phi, const AddChar& psi) {
    const LocalField& K = chi.field();
    if (psi.field() != K) throw DomainError("tate_zeta: character fields differ");
    const i64 q = K.q();
    const int cpsi = psi.conductor();
    const int cond = chi.conductor();
    ZetaSeries Z;
    Z.q = q;
    Z.ratio = chi.at_uniformizer();

    auto shell_sum = [&](const BoxTerm& t, int v, int ob) {
        int m = std::max({1, cond, ob == kNoBeta ? 1 : cpsi - ob - v});
        auto reps = K.shell_representatives(v, m);
        cplx s = 0.0;
        double mag = 0.0;
        for (const auto& x : reps) {
            cplx w = box_psi(K, psi, t, x) * chi(x);
            s += w;
            mag += std::abs(w);
        }
        const double n = static_cast<double>(reps.size());
        Z.coeffs[v] += t.coef * s / n;
        Z.magnitude[v] += std::abs(t.coef) * mag / n;
    };

    for (const auto& t : phi.terms) {
        const int ob = beta_order(K, t);
        const bool zero_inside = K.is_zero(t.center) || K.valuation(t.center) >= t.k;
        if (!zero_inside) {
            const int v = K.valuation(t.center);
            int m = std::max({1, cond, t.k - v});
            if (ob != kNoBeta) m = std::max(m, cpsi - ob - v);
            const int j = v + m - t.k;
            const double vol = 1.0 / (static_cast<double>(q - 1) * std::pow(static_cast<double>(q), m - 1));
            EElem pk = K.pi_pow(t.k);
            cplx s = 0.0;
            double mag = 0.0;
            for (const auto& z : K.residues(j)) {
                EElem x = K.add(t.center, K.mul(pk, z));
                cplx w = box_psi(K, psi, t, x) * chi(x);
                s += w;
                mag += std::abs(w);
            }
            Z.coeffs[v] += t.coef * vol * s;
            Z.magnitude[v] += std::abs(t.coef) * vol * mag;
        } else {
            const int V = ob == kNoBeta ? t.k : std::max(t.k, cpsi - ob);
            for (int v = t.k; v < V; ++v) shell_sum(t, v, ob);
            if (cond == 0) Z.tails.emplace_back(t.coef, V);
        }
    }
    return Z;
}

NonArchFactor L_nonarch(const MultChar& chi) {
    if (chi.ramified()) return NonArchFactor::one(chi.field().q());
    return NonArchFactor::euler(chi.field().q(), chi.at_uniformizer());
}

TateResult tate_factors(const MultChar& chi, const AddChar& psi, double phi_tol) {
    const LocalField& K = chi.field();
    const i64 q = K.q();
    const int cond = chi.conductor();
    const bool unram = cond == 0;
    MultChar chiinv = inverse(chi);

    std::vector<TestFunction> phis;
    phis.push_back(TestFunction::box(K.zero(), 0));
    phis.push_back(TestFunction::box(K.one(), std::max(cond, 1)));
    {
        // deterministic "random" translate
        std::mt19937_64 rng(0x7a7e5eedULL + static_cast<unsigned>(cond) * 131 + static_cast<unsigned>(q));
        std::uniform_int_distribution<i64> dig(1, ipow(K.p(), 4) - 1);
        std::uniform_int_distribution<int> vd(-1, 1), kd(1, 2);
        EElem a;
        do {
            a = K.make(dig(rng), K.is_E() ? dig(rng) : 0);
        } while (K.valuation(a) != 0);
        int v = vd(rng);
        a = K.mul(a, K.pi_pow(v));
        phis.push_back(TestFunction::box(a, v + std::max(cond, 1) + kd(rng) - 1));
    }

    std::vector<EpsFit> fits;
    for (const auto& phi : phis) {
        ZetaSeries Z = tate_zeta(chi, phi, psi);
        ZetaSeries Zd = tate_zeta(chiinv, fourier_transform(phi, psi), psi);
        Laurent P = strip_L(Z, unram);
        Laurent Pd = strip_L(Zd, unram);
        // Y' = q^{-1} Y^{-1}
        Laurent PdY;
        for (const auto& [j, c] : Pd) {
            double w = std::pow(static_cast<double>(q), -j);
            add_to(PdY, -j, c.v * w, c.mag * w);
        }
        EpsFit f = fit_monomial(P, PdY);
        if (!f.vanishing) fits.push_back(f);
    }
    if (fits.empty()) throw ConsistencyError("Tate functional equation: all test functions gave vanishing integrals");

    TateResult r;
    r.test_functions_used = static_cast<int>(fits.size());
    for (const auto& f : fits) {
        if (f.m != fits[0].m) {
            r.phi_deviation = std::numeric_limits<double>::infinity();
            break;
        }
        r.phi_deviation = std::max(r.phi_deviation, std::abs(f.C - fits[0].C) / std::abs(fits[0].C));
    }
    if (!(r.phi_deviation <= phi_tol))
        throw ConsistencyError("Tate functional equation depends on the test function (deviation " +
                               std::to_string(r.phi_deviation) + ")");
    r.L = L_nonarch(chi);
    r.eps = NonArchFactor::monomial(q, fits[0].C, fits[0].m);
    r.gamma = r.eps * reflect(L_nonarch(chiinv)) / r.L;
    return r;
}

NonArchFactor gamma_tate_nonarch(const MultChar& chi, const AddChar& psi) { return tate_factors(chi, psi).gamma; }

NonArchFactor eps_nonarch(const MultChar& chi, const AddChar& psi) { return tate_factors(chi, psi).eps; }

cplx gauss_sum(const MultChar& chi, const AddChar& psi) {
    if (!chi.ramified()) throw DomainError("gauss_sum: character is unramified");
    const LocalField& K = chi.field();
    const int c = chi.conductor();
    cplx s = 0.0;
    for (const auto& x : K.shell_representatives(psi.conductor() - c, c)) s += psi(x) / chi(x);
    return s;
}

cplx langlands_constant(const LocalField& E, const AddChar& psiF) {
    return eps_nonarch(omega_EF(E), psiF).eval(0.5);
}

}  // namespace asai
