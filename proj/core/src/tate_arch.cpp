#include <cmath>
#include <vector>

#include "asai/quadrature.hpp"
#include "asai/tate.hpp"

namespace asai {

namespace {

const cplx I(0.0, 1.0);

cplx ipow_i(int k) {
    static const cplx t[4] = {1.0, I, -1.0, -I};
    return t[((k % 4) + 4) % 4];
}

double sgn(double a) { return a < 0 ? -1.0 : 1.0; }

void check_shift(double a) {
    if (a == 0.0 || !std::isfinite(a)) throw DomainError("additive character parameter must be a nonzero real");
}

}  // namespace

ArchTate tate_real(const RealChar& chi, double a) {
    check_shift(a);
    int m = ((chi.m % 2) + 2) % 2;
    ArchTate r;
    r.L = ArchFactor::zeta_R(chi.lambda + static_cast<double>(m));
    // eps(s, chi, psi_a) = chi(a) |a|^{s - 1/2} eps(s, chi, psi)
    r.eps = ArchFactor::constant(ipow_i(m) * std::pow(sgn(a), m));
    if (std::abs(a) != 1.0) r.eps.expos.push_back({std::abs(a), 1.0, chi.lambda - 0.5});
    return r;
}

ArchTate tate_complex(const ComplexChar& chi, double a) {
    check_shift(a);
    int n = std::abs(chi.n);
    ArchTate r;
    r.L = ArchFactor::zeta_C(chi.lambda + 0.5 * n);
    r.eps = ArchFactor::constant(ipow_i(n) * std::pow(sgn(a), chi.n));
    if (std::abs(a) != 1.0) r.eps.expos.push_back({std::abs(a), 2.0, 2.0 * chi.lambda - 1.0});
    return r;
}

cplx langlands_constant_CR(double a) { return tate_real(RealChar{1, 0.0}, a).eps.eval(0.5); }

cplx tate_real_gamma_quadrature(const RealChar& chi, cplx s, double a) {
    check_shift(a);
    const int m = ((chi.m % 2) + 2) % 2;
    const cplx lam = chi.lambda;
    if (!((s + lam).real() + m > 0.0 && (1.0 - s - lam).real() + m > 0.0))
        throw DomainError("tate_real_gamma_quadrature: s outside the common convergence strip");
    const double tol = 1e-11;
    // e^{-pi x^2} and its transform are below 1e-300 beyond these radii
    const double X = 9.0, Y = 9.0 * std::max(1.0, std::abs(a));
    const double sd = std::sqrt(std::abs(a));
    auto Phi = [m](double x) { return std::pow(x, m) * std::exp(-M_PI * x * x); };
    auto chi_abs = [&](double x, cplx e) {
        return std::pow(sgn(x), m) * std::exp(e * std::log(std::abs(x)));
    };
    auto Phihat = [&](double y) {
        return sd * integrate([&](double x) { return Phi(x) * std::exp(2.0 * M_PI * I * a * x * y); }, -X, X, tol)
                        .value;
    };
    cplx Z = integrate_mult_real([&](double x) { return Phi(x) * chi_abs(x, lam + s); }, tol, X).value;
    cplx Zd = integrate_mult_real([&](double y) { return Phihat(y) * chi_abs(y, 1.0 - s - lam); }, tol, Y).value;
    return Zd / Z;
}

cplx tate_complex_gamma_quadrature(const ComplexChar& chi, cplx s, double a) {
    check_shift(a);
    const int n = chi.n;
    const int an = std::abs(n);
    const cplx lam = chi.lambda;
    if (!((s + lam).real() + 0.5 * an > 0.0 && (1.0 - s - lam).real() + 0.5 * an > 0.0))
        throw DomainError("tate_complex_gamma_quadrature: s outside the common convergence strip");
    const double tol = 1e-10;
    const double X = 6.5, R = 6.5 * std::max(1.0, std::abs(a));
    // Phi(z) = conj(z)^n e^{-2 pi |z|^2} for n >= 0, z^{|n|} e^{-2 pi |z|^2} for n < 0.
    // The y-integral of Phi is a polynomial in x times e^{-2 pi x^2}, from Gaussian moments.
    std::vector<cplx> P(an + 1, 0.0);
    double binom = 1.0;
    for (int k = 0; k <= an; ++k) {
        if (k > 0) binom = binom * (an - k + 1) / k;
        if (k % 2 == 0) {
            double moment = std::tgamma(0.5 * (k + 1)) * std::pow(2.0 * M_PI, -0.5 * (k + 1));
            P[an - k] += binom * std::pow(cplx(0.0, n >= 0 ? -1.0 : 1.0), k) * moment;
        }
    }
    auto Py = [&](double x) {
        cplx r = 0.0;
        for (int j = an; j >= 0; --j) r = r * x + P[j];
        return r;
    };
    // Phi^ at a positive real point r; self-dual measure |a| * 2 dx dy for psi_a o tr.
    auto Phihat = [&](double r) {
        auto inner = [&](double x) { return Py(x) * std::exp(-2.0 * M_PI * x * x + 4.0 * M_PI * I * a * x * r); };
        return 2.0 * std::abs(a) * integrate(inner, -X, X, tol).value;
    };
    // Radial reductions; the angular integrals contribute 2 * 2 pi on both sides.
    cplx Z = integrate_mult([&](double r) {
                 return std::exp((static_cast<double>(an) + 2.0 * lam + 2.0 * s) * std::log(r)) *
                        std::exp(-2.0 * M_PI * r * r);
             },
                            tol, X)
                 .value;
    cplx Zd = integrate_mult([&](double r) { return Phihat(r) * std::exp((2.0 - 2.0 * lam - 2.0 * s) * std::log(r)); },
                             tol, R)
                  .value;
    return Zd / Z;
}

}  // namespace asai
