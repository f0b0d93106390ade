#include "asai/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdio>
#include <limits>

namespace asai {

namespace {

std::string fmt_err(double e) {
    char b[32];
    std::snprintf(b, sizeof b, "%.3g", e);
    return b;
}

}  // namespace

QuadResult integrate(const RealIntegrand& f, double a, double b, double rel_tol) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    double err = 0.0, L1 = 0.0;
    cplx v = GK::integrate(f, a, b, 15, rel_tol, &err, &L1);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw QuadratureError("quadrature produced a non-finite value", std::numeric_limits<double>::infinity());
    // Boost reports an absolute estimate; accept it relative to the value, or relative
    // to the L1 norm when the integral itself is tiny through cancellation.
    if (err > 1e3 * rel_tol * std::abs(v) && err > 1e-10 * L1 && err > 1e-290)
        throw QuadratureError("quadrature did not converge (error estimate " + fmt_err(err) + ")", err);
    return {v, err};
}

QuadResult integrate_mult(const RealIntegrand& f, double rel_tol, double tmax) {
    const double inf = std::numeric_limits<double>::infinity();
    const double umax = std::isfinite(tmax) ? std::log(tmax) : inf;
    return integrate(
        [&](double u) -> cplx {
            if (u > 700.0 || u < -700.0) return 0.0;
            return f(std::exp(u));
        },
        -inf, umax, rel_tol);
}

QuadResult integrate_mult_real(const RealIntegrand& f, double rel_tol, double tmax) {
    QuadResult pos = integrate_mult(f, rel_tol, tmax);
    QuadResult neg = integrate_mult([&](double t) { return f(-t); }, rel_tol, tmax);
    return {pos.value + neg.value, pos.error + neg.error};
}

}  // namespace asai
