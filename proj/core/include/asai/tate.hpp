#pragma once

#include <map>
#include <vector>

#include "asai/characters.hpp"
#include "asai/factor.hpp"

namespace asai {

class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// coef * psi(beta x) * 1_{center + pi^k O}(x); beta absent means psi-factor 1.
struct BoxTerm {
    cplx coef{1.0, 0.0};
    bool has_beta = false;
    EElem beta;
    EElem center;
    int k = 0;
};

struct TestFunction {
    std::vector<BoxTerm> terms;

    static TestFunction box(const EElem& center, int k, cplx coef = 1.0);
    cplx operator()(const LocalField& K, const AddChar& psi, const EElem& x) const;
};

// Fourier transform for the self-dual measure of psi: Phi^(y) = int Phi(x) psi(x y) dx.
TestFunction fourier_transform(const TestFunction& phi, const AddChar& psi);

// sum_v coeffs[v] Y^v + sum_tails c (r Y)^v over v >= V, with Y = q^{-s}.
struct ZetaSeries {
    i64 q = 3;
    std::map<int, cplx> coeffs;
    // sum of |term| behind each coefficient, used to recognise exact cancellation
    std::map<int, double> magnitude;
    std::vector<std::pair<cplx, int>> tails;
    cplx ratio{0.0, 0.0};

    cplx eval(cplx s) const;
    bool has_tail() const { return !tails.empty(); }
};

// Z(s, chi, Phi) with d^x x normalized so that vol(O^x) = 1, summed exactly shell by shell.
ZetaSeries tate_zeta(const MultChar& chi, const TestFunction& phi, const AddChar& psi);

NonArchFactor L_nonarch(const MultChar& chi);

struct TateResult {
    NonArchFactor L;
    NonArchFactor eps;
    NonArchFactor gamma;
    // spread of the epsilon constant across the test functions used
    double phi_deviation = 0.0;
    int test_functions_used = 0;
};

// gamma is defined by the functional-equation ratio; eps is read off from it.
TateResult tate_factors(const MultChar& chi, const AddChar& psi, double phi_tol = 1e-10);
NonArchFactor gamma_tate_nonarch(const MultChar& chi, const AddChar& psi);
NonArchFactor eps_nonarch(const MultChar& chi, const AddChar& psi);

cplx gauss_sum(const MultChar& chi, const AddChar& psi);

// lambda_{E/F}(psi) := eps(1/2, omega_{E/F}, psi)
cplx langlands_constant(const LocalField& E, const AddChar& psiF);

// ---- archimedean Tate factors

// sgn^m |.|^lambda on R^x
struct RealChar {
    int m = 0;
    cplx lambda;
};

// |z|_C^{lambda - n/2} z^n on C^x
struct ComplexChar {
    int n = 0;
    cplx lambda;
};

struct ArchTate {
    ArchFactor L;
    ArchFactor eps;
};

// psi_a(x) = exp(2 pi i a x) on R.
ArchTate tate_real(const RealChar& chi, double a = 1.0);
// psi_a o tr_{C/R} on C.
ArchTate tate_complex(const ComplexChar& chi, double a = 1.0);
cplx langlands_constant_CR(double a = 1.0);

// Independent quadrature evaluation of gamma(s) for the archimedean Tate integrals,
// using harmonic Gaussians: Z(1-s, chi^-1, Phi^) / Z(s, chi, Phi).
cplx tate_real_gamma_quadrature(const RealChar& chi, cplx s, double a = 1.0);
cplx tate_complex_gamma_quadrature(const ComplexChar& chi, cplx s, double a = 1.0);

}  // namespace asai
