#pragma once

#include <string>
#include <vector>

#include "asai/factor.hpp"
#include "asai/tate.hpp"

namespace asai {

// z -> |z|_C^{lambda - n/2} z^n on C^x
struct CChar {
    cplx lambda;
    int n = 0;

    cplx operator()(cplx z) const;
    // restriction to R^x: sgn^n |.|^{2 lambda}
    RealChar restrict_to_R() const;
    ComplexChar as_complex() const { return ComplexChar{n, lambda}; }
    CChar inverse() const { return CChar{-lambda, -n}; }
};

// mu * nu^sigma, sigma the complex conjugation
CChar twisted_product(const CChar& mu, const CChar& nu);

// Index of the Whittaker basis element W_{(a,b)}.
struct WhittakerIndex {
    int a1 = 0, a2 = 0, b1 = 0, b2 = 0;
};

bool selection_rule(const WhittakerIndex& idx, const CChar& mu, const CChar& nu);

// zeta(s, W_{(a,b)}, chi) = int_{R^x} W(diag(y,1)) chi(y) |y|^{s-1} d^x y, closed form.
cplx zeta_whittaker_closed(cplx s, const WhittakerIndex& idx, const RealChar& chi, const CChar& mu,
                           const CChar& nu);

// W_{(a,b)}(diag(y,1)) by quadrature over the torus, angular part included.
cplx whittaker_value_quadrature(double y, const WhittakerIndex& idx, const CChar& mu, const CChar& nu,
                                double rel_tol = 1e-10);

// The same zeta integral as a 2-D quadrature (outer y, inner torus integral).
cplx zeta_whittaker_quadrature(cplx s, const WhittakerIndex& idx, const RealChar& chi, const CChar& mu,
                               const CChar& nu, double rel_tol = 1e-8);

struct ArchGal {
    ArchFactor L;
    ArchFactor eps;
};

// L_Gal and eps_Gal for psi_b(x) = exp(2 pi i b x), eps assembled as lambda_{C/R} times three Tate epsilons.
ArchGal L_eps_gal_arch(const CChar& mu, const CChar& nu, double b = 1.0);

struct WTerm {
    cplx coef;
    WhittakerIndex idx;
};

struct CaseDatum {
    int case_id = 0;
    // mu and nu after ordering so that n1 >= n2
    CChar mu, nu;
    bool swapped = false;
    std::string pairing_vector;
    std::vector<WTerm> W;
    // Phi(x, y) = (x + i y)^{c1} (x - i y)^{c2} e^{-pi (x^2 + y^2)}
    int c1 = 0, c2 = 0;
    cplx c, c_dual, eps;
};

CaseDatum case_table(const CChar& mu, const CChar& nu);

struct CaseZeta {
    cplx Z, Z_dual;
    cplx L, L_dual;
    cplx ratio, ratio_dual;
};

// Z(s, W, Phi) and Z(1 - s, W (x) omega^{-1}, Phi^) for the case datum, standard psi and xi = i.
CaseZeta zeta_integral_case(cplx s, const CaseDatum& d);
// Same, with every one-dimensional integral done by quadrature.
CaseZeta zeta_integral_case_quadrature(cplx s, const CaseDatum& d);

struct CaseReport {
    CaseDatum datum;
    cplx mean_ratio, mean_ratio_dual;
    double stddev_ratio = 0.0, stddev_ratio_dual = 0.0;
    double dev_c = 0.0, dev_c_dual = 0.0;
    cplx eps_RS;
    double eps_dev = 0.0;
    // |omega^{-1}(xi) |xi|_C^{-s+1/2} lambda eps_RS - eps_Gal| over the grid
    double relation_dev = 0.0;
};

CaseReport verify_case(const CChar& mu, const CChar& nu, const std::vector<cplx>& grid);

// eps_RS(s, As pi, psi_b, c i) = omega(b^2 c) |b^2 c|^{2s-1} eps_RS(s, As pi, psi, i)
ArchFactor eps_RS_arch(const CChar& mu, const CChar& nu, double b = 1.0, double c = 1.0);
// omega^{-1}(xi) |xi|_C^{-s+1/2} lambda_{C/R}(psi_b) eps_RS(s, psi_b, xi) - eps_Gal(s, psi_b), max over grid
double arch_relation_deviation(const CChar& mu, const CChar& nu, double b, double c, const std::vector<cplx>& grid);

struct CombResult {
    cplx lhs, rhs;
    double deviation = 0.0;
};

// sum_l binom(N, l) Gamma(z + l) Gamma(w - l) against Gamma(z) Gamma(w - N) Gamma(z + w) / Gamma(z + w - N)
CombResult combinatorial_identity(int N, cplx z, cplx w);

}  // namespace asai
