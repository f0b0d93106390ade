#include "asai/factor.hpp"

#include <cmath>
#include <sstream>

namespace asai {

namespace {

constexpr double kPoleEps = 1e-13;

cplx qpow(double q, cplx z) { return std::exp(z * std::log(q)); }

bool near_nonpositive_integer(cplx z) {
    if (std::abs(z.imag()) > 1e-12 || z.real() > 0.5) return false;
    return std::abs(z.real() - std::round(z.real())) < 1e-12;
}

std::string fmt(cplx z) {
    std::ostringstream os;
    os.precision(10);
    if (z.imag() == 0.0)
        os << z.real();
    else
        os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- NonArchFactor

NonArchFactor NonArchFactor::abs_power(i64 q, int v, int A, cplx B) {
    return monomial(q, qpow(static_cast<double>(q), -static_cast<double>(v) * B), v * A);
}

cplx NonArchFactor::eval(cplx s) const {
    const double lq = std::log(static_cast<double>(q));
    cplx r = c * std::exp(-static_cast<double>(m) * s * lq);
    for (const auto& t : num) r *= 1.0 - t.alpha * std::exp(-(s + static_cast<double>(t.k)) * lq);
    for (const auto& t : den) {
        cplx d = 1.0 - t.alpha * std::exp(-(s + static_cast<double>(t.k)) * lq);
        if (std::abs(d) < kPoleEps) throw PoleError("NonArchFactor: pole at s = " + fmt(s), s);
        r /= d;
    }
    return r;
}

NonArchFactor operator*(const NonArchFactor& a, const NonArchFactor& b) {
    if (a.q != b.q) throw DomainError("NonArchFactor: mismatched q");
    NonArchFactor r = a;
    r.c *= b.c;
    r.m += b.m;
    r.num.insert(r.num.end(), b.num.begin(), b.num.end());
    r.den.insert(r.den.end(), b.den.begin(), b.den.end());
    return r;
}

NonArchFactor operator*(cplx k, const NonArchFactor& a) {
    NonArchFactor r = a;
    r.c *= k;
    return r;
}

NonArchFactor inverse(const NonArchFactor& a) {
    NonArchFactor r{a.q, 1.0 / a.c, -a.m, a.den, a.num};
    return r;
}

NonArchFactor operator/(const NonArchFactor& a, const NonArchFactor& b) { return a * inverse(b); }

NonArchFactor reflect(const NonArchFactor& a) {
    const double q = static_cast<double>(a.q);
    NonArchFactor r = NonArchFactor::monomial(a.q, a.c * std::pow(q, -a.m), -a.m);
    // 1 - alpha q^{-(1-s+k)} = (-beta) q^{s} (1 - beta^{-1} q^{-s}), beta = alpha q^{-1-k}
    for (const auto& t : a.num) {
        if (t.alpha == 0.0) continue;
        cplx beta = t.alpha * std::pow(q, -1.0 - t.k);
        r.c *= -beta;
        r.m -= 1;
        r.num.push_back({1.0 / beta, 0});
    }
    for (const auto& t : a.den) {
        if (t.alpha == 0.0) continue;
        cplx beta = t.alpha * std::pow(q, -1.0 - t.k);
        r.c /= -beta;
        r.m += 1;
        r.den.push_back({1.0 / beta, 0});
    }
    return r;
}

NonArchFactor shift(const NonArchFactor& a, cplx v) {
    const double q = static_cast<double>(a.q);
    NonArchFactor r = a;
    r.c *= qpow(q, -static_cast<double>(a.m) * v);
    for (auto& t : r.num) t.alpha *= qpow(q, -v);
    for (auto& t : r.den) t.alpha *= qpow(q, -v);
    return r;
}

NonArchFactor normalize(const NonArchFactor& a) {
    const double q = static_cast<double>(a.q);
    NonArchFactor r = a;
    for (auto& t : r.num) {
        t.alpha *= std::pow(q, -t.k);
        t.k = 0;
    }
    for (auto& t : r.den) {
        t.alpha *= std::pow(q, -t.k);
        t.k = 0;
    }
    return r;
}

NonArchFactor simplify(const NonArchFactor& a, double tol) {
    NonArchFactor r = normalize(a);
    std::vector<EulerTerm> num;
    std::vector<bool> used(r.den.size(), false);
    for (const auto& t : r.num) {
        if (std::abs(t.alpha) < tol) continue;
        bool cancelled = false;
        for (size_t j = 0; j < r.den.size(); ++j) {
            if (!used[j] && std::abs(r.den[j].alpha - t.alpha) <= tol * std::max(1.0, std::abs(t.alpha))) {
                used[j] = true;
                cancelled = true;
                break;
            }
        }
        if (!cancelled) num.push_back(t);
    }
    std::vector<EulerTerm> den;
    for (size_t j = 0; j < r.den.size(); ++j)
        if (!used[j] && std::abs(r.den[j].alpha) >= tol) den.push_back(r.den[j]);
    r.num = std::move(num);
    r.den = std::move(den);
    return r;
}

NonArchFactor to_base(const NonArchFactor& a, i64 qF) {
    if (qF * qF != a.q) throw DomainError("to_base: q is not the square of the base q");
    NonArchFactor n = normalize(a);
    NonArchFactor r = NonArchFactor::monomial(qF, n.c, 2 * n.m);
    for (const auto& t : n.num) {
        cplx s = std::sqrt(t.alpha);
        r.num.push_back({s, 0});
        r.num.push_back({-s, 0});
    }
    for (const auto& t : n.den) {
        cplx s = std::sqrt(t.alpha);
        r.den.push_back({s, 0});
        r.den.push_back({-s, 0});
    }
    return r;
}

// ---------------------------------------------------------------- Gamma

cplx lgamma_c(cplx z) {
    static const double g = 7.0;
    static const double coef[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                   771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                   -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (near_nonpositive_integer(z)) throw PoleError("Gamma: pole at " + fmt(z), z);
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(M_PI) - std::log(std::sin(M_PI * z)) - lgamma_c(1.0 - z);
    }
    z -= 1.0;
    cplx x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
    cplx t = z + g + 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx gamma_c(cplx z) { return std::exp(lgamma_c(z)); }

// ---------------------------------------------------------------- ArchFactor

ArchFactor ArchFactor::zeta_R(cplx b) {
    ArchFactor f;
    f.gammas.push_back({0.5, 0.5 * b, 1});
    f.expos.push_back({M_PI, -0.5, -0.5 * b});
    return f;
}

ArchFactor ArchFactor::zeta_C(cplx b) {
    ArchFactor f;
    f.c = 2.0;
    f.gammas.push_back({1.0, b, 1});
    f.expos.push_back({2.0 * M_PI, -1.0, -b});
    return f;
}

cplx ArchFactor::eval(cplx s) const {
    cplx lg = 0.0;
    for (const auto& g : gammas) {
        if (g.mult == 0) continue;
        cplx z = g.a * s + g.b;
        if (g.mult < 0 && near_nonpositive_integer(z)) return 0.0;
        lg += static_cast<double>(g.mult) * lgamma_c(z);
    }
    for (const auto& e : expos) lg += (e.u * s + e.v) * std::log(e.base);
    return c * std::exp(lg);
}

ArchFactor operator*(const ArchFactor& a, const ArchFactor& b) {
    ArchFactor r = a;
    r.c *= b.c;
    r.gammas.insert(r.gammas.end(), b.gammas.begin(), b.gammas.end());
    r.expos.insert(r.expos.end(), b.expos.begin(), b.expos.end());
    return r;
}

ArchFactor operator*(cplx k, const ArchFactor& a) {
    ArchFactor r = a;
    r.c *= k;
    return r;
}

ArchFactor inverse(const ArchFactor& a) {
    ArchFactor r = a;
    r.c = 1.0 / a.c;
    for (auto& g : r.gammas) g.mult = -g.mult;
    for (auto& e : r.expos) {
        e.u = -e.u;
        e.v = -e.v;
    }
    return r;
}

ArchFactor operator/(const ArchFactor& a, const ArchFactor& b) { return a * inverse(b); }

ArchFactor reflect(const ArchFactor& a) {
    ArchFactor r = a;
    for (auto& g : r.gammas) {
        g.b = g.a + g.b;
        g.a = -g.a;
    }
    for (auto& e : r.expos) {
        e.v = e.u + e.v;
        e.u = -e.u;
    }
    return r;
}

ArchFactor shift(const ArchFactor& a, cplx v) {
    ArchFactor r = a;
    for (auto& g : r.gammas) g.b += g.a * v;
    for (auto& e : r.expos) e.v += e.u * v;
    return r;
}

// ---------------------------------------------------------------- comparison

std::vector<cplx> default_grid() { return {{0.7, 0.0}, {1.3, 0.0}, {2.1, 0.5}, {0.4, -0.8}, {1.05, 0.0}}; }

Comparison approx_equal(const NonArchFactor& f, const NonArchFactor& g, const std::vector<cplx>& grid,
                        double tol) {
    return compare_on_grid([&](cplx s) { return f.eval(s); }, [&](cplx s) { return g.eval(s); }, grid, tol);
}

Comparison approx_equal(const ArchFactor& f, const ArchFactor& g, const std::vector<cplx>& grid, double tol) {
    return compare_on_grid([&](cplx s) { return f.eval(s); }, [&](cplx s) { return g.eval(s); }, grid, tol);
}

std::string to_string(const NonArchFactor& f) {
    std::ostringstream os;
    os << fmt(f.c);
    if (f.m != 0) os << " * " << f.q << "^(" << -f.m << "s)";
    auto term = [&](const EulerTerm& t) {
        std::ostringstream o;
        o << "(1 - " << fmt(t.alpha) << "*" << f.q << "^-(s" << (t.k ? (t.k > 0 ? "+" : "") + std::to_string(t.k) : "")
          << "))";
        return o.str();
    };
    for (const auto& t : f.num) os << " * " << term(t);
    for (const auto& t : f.den) os << " / " << term(t);
    return os.str();
}

std::string to_string(const ArchFactor& f) {
    std::ostringstream os;
    os << fmt(f.c);
    for (const auto& g : f.gammas)
        os << " * Gamma(" << g.a << "s+" << fmt(g.b) << ")" << (g.mult != 1 ? "^" + std::to_string(g.mult) : "");
    for (const auto& e : f.expos) os << " * " << e.base << "^(" << e.u << "s+" << fmt(e.v) << ")";
    return os.str();
}

}  // namespace asai
