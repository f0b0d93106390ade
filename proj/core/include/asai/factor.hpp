#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "asai/padic.hpp"

namespace asai {

class PoleError : public std::runtime_error {
public:
    PoleError(const std::string& what, cplx where) : std::runtime_error(what), location(where) {}
    cplx location;
};

// One factor (1 - alpha q^{-(s+k)}).
struct EulerTerm {
    cplx alpha;
    int k = 0;
};

// c * q^{-m s} * prod(num) / prod(den)
struct NonArchFactor {
    i64 q = 3;
    cplx c{1.0, 0.0};
    int m = 0;
    std::vector<EulerTerm> num;
    std::vector<EulerTerm> den;

    static NonArchFactor one(i64 q) { return NonArchFactor{q, 1.0, 0, {}, {}}; }
    static NonArchFactor monomial(i64 q, cplx c, int m) { return NonArchFactor{q, c, m, {}, {}}; }
    // (1 - alpha q^{-s})^{-1}
    static NonArchFactor euler(i64 q, cplx alpha) { return NonArchFactor{q, 1.0, 0, {}, {{alpha, 0}}}; }
    // |x|^{A s + B} as a function of s for ord(x) = v: q^{-v B} q^{-v A s}
    static NonArchFactor abs_power(i64 q, int v, int A, cplx B);

    cplx eval(cplx s) const;
    bool is_monomial() const { return num.empty() && den.empty(); }
};

NonArchFactor operator*(const NonArchFactor& a, const NonArchFactor& b);
NonArchFactor operator*(cplx k, const NonArchFactor& a);
NonArchFactor inverse(const NonArchFactor& a);
NonArchFactor operator/(const NonArchFactor& a, const NonArchFactor& b);
// s -> 1 - s, rewritten back into the (1 - alpha q^{-s}) shape.
NonArchFactor reflect(const NonArchFactor& a);
// s -> s + v
NonArchFactor shift(const NonArchFactor& a, cplx v);
// Fold each k into alpha.
NonArchFactor normalize(const NonArchFactor& a);
// Cancel matching numerator/denominator terms.
NonArchFactor simplify(const NonArchFactor& a, double tol = 1e-12);
// Re-express a factor in q_E = q_F^2 over the base q_F.
NonArchFactor to_base(const NonArchFactor& a, i64 qF);

// Gamma(a s + b)^mult
struct GammaTerm {
    double a = 1.0;
    cplx b;
    int mult = 1;
};

// base^{u s + v}
struct ExpoTerm {
    double base = 1.0;
    double u = 0.0;
    cplx v;
};

struct ArchFactor {
    cplx c{1.0, 0.0};
    std::vector<GammaTerm> gammas;
    std::vector<ExpoTerm> expos;

    static ArchFactor constant(cplx c) { return ArchFactor{c, {}, {}}; }
    // zeta_R(s + b) = pi^{-(s+b)/2} Gamma((s+b)/2)
    static ArchFactor zeta_R(cplx b);
    // zeta_C(s + b) = 2 (2 pi)^{-(s+b)} Gamma(s+b)
    static ArchFactor zeta_C(cplx b);

    cplx eval(cplx s) const;
};

ArchFactor operator*(const ArchFactor& a, const ArchFactor& b);
ArchFactor operator*(cplx k, const ArchFactor& a);
ArchFactor inverse(const ArchFactor& a);
ArchFactor operator/(const ArchFactor& a, const ArchFactor& b);
ArchFactor reflect(const ArchFactor& a);
ArchFactor shift(const ArchFactor& a, cplx v);

// log Gamma on C up to multiples of 2 pi i; only exp(lgamma) is meaningful.
cplx lgamma_c(cplx z);
cplx gamma_c(cplx z);

struct Comparison {
    bool equal = false;
    double max_deviation = 0.0;
    cplx worst_s;
};

std::vector<cplx> default_grid();

// Relative deviation |f - g| / max(|g|, tiny) at each grid point.
template <class F, class G>
Comparison compare_on_grid(const F& f, const G& g, const std::vector<cplx>& grid, double tol) {
    if (grid.empty()) throw DomainError("approx_equal: empty grid");
    Comparison r;
    for (cplx s : grid) {
        cplx a = f(s), b = g(s);
        double scale = std::max(std::abs(a), std::abs(b));
        double dev = scale < 1e-300 ? 0.0 : std::abs(a - b) / scale;
        if (dev >= r.max_deviation) {
            r.max_deviation = dev;
            r.worst_s = s;
        }
    }
    r.equal = r.max_deviation < tol;
    return r;
}

Comparison approx_equal(const NonArchFactor& f, const NonArchFactor& g, const std::vector<cplx>& grid,
                        double tol);
Comparison approx_equal(const ArchFactor& f, const ArchFactor& g, const std::vector<cplx>& grid, double tol);

std::string to_string(const NonArchFactor& f);
std::string to_string(const ArchFactor& f);

}  // namespace asai
