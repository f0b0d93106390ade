#pragma once

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "asai/padic.hpp"

namespace asai {

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved) : std::runtime_error(what), error_estimate(achieved) {}
    double error_estimate;
};

struct QuadResult {
    cplx value;
    double error = 0.0;
};

using RealIntegrand = std::function<cplx(double)>;

// Adaptive Gauss-Kronrod on [a, b]; a or b may be infinite.
QuadResult integrate(const RealIntegrand& f, double a, double b, double rel_tol = 1e-10);

// int_0^tmax f(t) dt / t, through t = e^u. Pass a finite tmax for integrands that
// are negligible beyond it (e.g. Gaussians) to avoid overflow at huge t.
QuadResult integrate_mult(const RealIntegrand& f, double rel_tol = 1e-10,
                          double tmax = std::numeric_limits<double>::infinity());

// int_{-tmax < y < tmax, y != 0} f(y) dy / |y|, through y = +-e^v.
QuadResult integrate_mult_real(const RealIntegrand& f, double rel_tol = 1e-10,
                               double tmax = std::numeric_limits<double>::infinity());

}  // namespace asai
