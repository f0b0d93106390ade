#pragma once

#include <vector>

#include "asai/asai_nonarch.hpp"
#include "asai/characters.hpp"

namespace asai {

// 2x2 matrix over a local field.
struct Mat2 {
    EElem a, b, c, d;
};

Mat2 mat_mul(const LocalField& K, const Mat2& x, const Mat2& y);
EElem mat_det(const LocalField& K, const Mat2& g);
Mat2 mat_identity(const LocalField& K);
Mat2 mat_diag(const LocalField& K, const EElem& a, const EElem& d);
// [[1, x], [0, 1]]
Mat2 mat_upper(const LocalField& K, const EElem& x);
// [[1, 0], [x, 1]]
Mat2 mat_lower(const LocalField& K, const EElem& x);
// [[0, -1], [1, 0]]
Mat2 mat_w(const LocalField& K);
// [[0, 1], [1, 0]]
Mat2 mat_w1(const LocalField& K);

enum class SectionKind {
    // GL_2(O_E)-fixed vector of Ind(mu, nu), mu and nu unramified, f(1) = 1.
    spherical,
    // f(w n(y)) = 1_{O_E}(y), zero on B; for nu = 1 this is f(u_(x)) = mu^{-1}(x)|x|^{-1} 1_{|x| >= 1}.
    big_cell,
};

// A section of B(mu, nu) on GL_2(E).
struct InducedSection {
    MultChar mu;
    MultChar nu;
    SectionKind kind = SectionKind::big_cell;

    cplx operator()(const Mat2& g) const;
};

struct WhittakerValue {
    cplx value;
    int truncation = 0;  // n with the integral over pi_E^{-n} O_E stable at n, n+1, n+2
    long cosets = 0;     // cosets summed at the accepted truncation
};

// W(h) = lim_n int_{pi^{-n} O_E} f(w n(z) h) psi_xi(-z) dz with the self-dual measure of psi_xi.
// The integral is summed exactly over cosets on which the integrand is constant.
WhittakerValue whittaker_from_section(const InducedSection& f, const AddChar& psi_xi, const Mat2& h);

// sum_i coef_i rho(k_i) f
struct TranslateSum {
    std::vector<std::pair<cplx, Mat2>> terms;
};

cplx whittaker_of_sum(const InducedSection& f, const AddChar& psi_xi, const TranslateSum& s, const Mat2& h);

// r = ceil(c(mu) / e(E/F)).
int section_level(const MultChar& mu);

// g = q^r int_{pi^{c_mu} O_F} rho(u_(x)) f dx, summed over x mod pi^level (level >= r).
TranslateSum averaged_section_g(const MultChar& mu, int level = -1);
// h = sum_{u mod pi^{r-1}} rho(u_(pi u)) f + sum_{u mod pi^r} rho(w1 u_(u)) f.
TranslateSum averaged_section_h(const MultChar& mu);

// Closed forms for W(diag(a, 1)), a in F^x, psi_xi with c(psi_xi) = 0.
cplx whittaker_closed_g(const MultChar& mu, const FElem& a);
cplx whittaker_closed_h(const MultChar& mu, const FElem& a);

// ---- two-variable Schwartz functions on F^2

// coef * phi1(x) * phi2(y)
struct BoxPair {
    cplx coef{1.0, 0.0};
    BoxTerm x;
    BoxTerm y;
};

struct Schwartz2 {
    std::vector<BoxPair> terms;

    // 1_{a + pi^n O}(x) 1_{b + pi^m O}(y)
    static Schwartz2 box(const EElem& a, int n, const EElem& b, int m, cplx coef = 1.0);
    cplx operator()(const LocalField& F, const AddChar& psi, const EElem& x, const EElem& y) const;
};

// Phi^(x, y) = int Phi(u, v) psi(u y - v x) du dv for the self-dual measure.
Schwartz2 fourier_transform_2d(const Schwartz2& phi, const AddChar& psi);

// ---- spherical Rankin-Selberg zeta integral

// Z(s, W (x) eta, Phi_k) for spherical W, Phi_k = 1_{pi^k (O + O)}, eta unramified on F^x.
class SphericalZeta {
public:
    // mu, nu unramified on E^x; psi and xi taken from the input.
    SphericalZeta(const AsaiInput& in, int terms = 10);

    // Analytic continuation through the closed-form tails.
    cplx zeta(cplx s, int box_level = 0) const;
    // Z(1 - s, W (x) omega^{-1}, Phi_k^), with Phi_k^ obtained from fourier_transform_2d.
    cplx zeta_dual(cplx s, int box_level = 0) const;
    cplx gamma(cplx s, int box_level = 0) const { return zeta_dual(s, box_level) / zeta(s, box_level); }

    // Partial sums of the shell series themselves; DomainError outside the convergence region.
    cplx zeta_series(cplx s, int box_level = 0, int shells = 200) const;
    // Re(s) must exceed this for the shell series to converge.
    double abscissa() const;

    const std::vector<cplx>& whittaker_values() const { return W_; }
    int support_start() const { return m0_; }
    int recurrence_order() const { return static_cast<int>(rec_.size()); }
    // max residual of the fitted recurrence on the brute-force values not used in the fit
    double recurrence_residual() const { return residual_; }

private:
    LocalField E_;
    AddChar psi_;
    cplx omega_pi_;  // omega_pi(p)
    int m0_ = 0;
    std::vector<cplx> W_;    // W(diag(p^{m0 + j}, 1))
    std::vector<cplx> rec_;  // W_{m} = sum_i rec_[i] W_{m-1-i}
    double residual_ = 0.0;

    // sum_m W_m (eta(p) q^{1-s})^m in closed form
    cplx whittaker_series(cplx s, cplx eta_p) const;
    cplx zeta_with(cplx s, cplx eta_p, int box_level, cplx scale) const;
};

}  // namespace asai
