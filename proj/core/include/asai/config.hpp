#pragma once

#include <vector>

#include "asai/factor.hpp"

namespace asai {

// Every default tolerance used by the CLI, the verification suites and the acceptance run.
struct Tolerances {
    double gauss_modulus = 1e-9;     // absolute, |G(chi, psi)| - q^{c/2}
    double phi_independence = 1e-10; // spread of eps across Tate test functions
    double nonarch = 1e-8;           // relative, grid equality of non-archimedean factors
    double arch = 1e-6;              // relative, grid equality of archimedean factors
    double whittaker_exact = 1e-12;  // absolute, brute-force Whittaker sums vs closed forms
    double combinatorial = 1e-9;     // relative, Gamma-sum identity
    double sign = 1e-8;              // distance of the dichotomy value from +-1
    double round_trip = 1e-12;       // re-ingested JSON numerics
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t;
    return t;
}

struct RunConfig {
    std::vector<cplx> grid = default_grid();
    Tolerances tol;
    unsigned long long seed = 20240601ULL;
};

}  // namespace asai
