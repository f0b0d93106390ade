#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asai/characters.hpp"
#include "asai/factor.hpp"
#include "asai/tate.hpp"

namespace asai {

// Convention for the Asai epsilon factor; the Kable normalization differs by omega(-1).
inline constexpr const char* kAsaiNormalization = "Flicker";

enum class RepKind { principal_series, supercuspidal };

// tau = Ind(mu2 |.|^{v2}, nu2 |.|^{-v2}) on GL_2(F).
struct TauData {
    MultChar mu2;
    MultChar nu2;
    cplx v2{0.0, 0.0};
};

// pi = Ind(mu, nu) on GL_2(E), psi on F, xi in E^x with trace zero.
struct AsaiInput {
    LocalField E;
    MultChar mu;
    MultChar nu;
    AddChar psi;
    EElem xi;
    std::optional<MultChar> chi;
    std::optional<TauData> tau;
    RepKind kind = RepKind::principal_series;

    // psi standard on F and xi canonical, so c(psi) = c(psi_xi) = 0.
    static AsaiInput make(const LocalField& E, const MultChar& mu, const MultChar& nu);
};

void validate(const AsaiInput& in);

// (mu chi~, nu chi~) with chi~ = extend_from_F(chi); the pair itself when there is no twist.
std::pair<MultChar, MultChar> effective_pair(const AsaiInput& in);
// omega_pi on E^x for the effective pair.
MultChar central_character(const AsaiInput& in);
// omega = omega_pi|_F (times omega_tau when tau is present).
MultChar omega_F(const AsaiInput& in);

// gamma(psi, xi) = correction * gamma(psi^{a0}, b0 xi) with a0 = p^psi_shift, b0 = p^xi_shift.
struct Normalization {
    int psi_shift = 0;
    int xi_shift = 0;
    NonArchFactor correction;
    bool applied() const { return psi_shift != 0 || xi_shift != 0; }
};

struct RSResult {
    NonArchFactor gamma;
    NonArchFactor L;
    NonArchFactor L_dual;
    NonArchFactor eps;
    Normalization norm;
};

// nu(-1) gamma(mu|_F, psi) gamma(nu|_F, psi) gamma(mu nu^sigma, psi_xi), computed at the
// renormalized (psi', xi') with c = 0 and transported back by the dependence rules.
RSResult asai_RS(const AsaiInput& in);
NonArchFactor gamma_RS(const AsaiInput& in);
NonArchFactor eps_RS(const AsaiInput& in);
// Same composition evaluated directly at the given psi and xi.
NonArchFactor gamma_RS_direct(const AsaiInput& in);
NonArchFactor eps_RS_direct(const AsaiInput& in);

// L(mu|_F chi) L(nu|_F chi) L(mu nu^sigma chi o N), all over q_F.
NonArchFactor L_gal_asai(const AsaiInput& in);

// lambda_{E/F}(psi) times the three Tate constituents at psi and psi o tr.
NonArchFactor gamma_gal(const AsaiInput& in);
NonArchFactor eps_gal(const AsaiInput& in);

struct Constituent {
    std::string name;
    NonArchFactor eps;
};

struct EpsComparison {
    Comparison cmp;
    NonArchFactor lhs;  // eps_RS
    NonArchFactor rhs;  // omega(xi) |xi^2|^{s-1/2} lambda^{-1} eps_Gal
    cplx lambda;
    std::vector<Constituent> constituents;
};

EpsComparison eps_gal_comparison(const AsaiInput& in, const std::vector<cplx>& grid = default_grid(),
                                 double tol = 1e-8);

// E = F x F: pi = Ind(mu1, nu1) x Ind(mu2, nu2), xi = (t, -t). Relative deviation on the grid between
// the Asai composition and omega(xi) |xi|_E^{s-1/2} eps(pi1 x pi2, psi).
struct SplitCheck {
    Comparison cmp;
    NonArchFactor asai_side;
    NonArchFactor rs_side;
};
SplitCheck split_case_check(const MultChar& mu1, const MultChar& nu1, const MultChar& mu2, const MultChar& nu2,
                            const AddChar& psi, const FElem& t, const std::vector<cplx>& grid = default_grid(),
                            double tol = 1e-8);

struct PSRResult {
    NonArchFactor assembly1;
    NonArchFactor assembly2;
    Comparison cmp;
    Normalization norm_mu2;
    Normalization norm_nu2;
};

// Both assemblies of the twisted Asai gamma factor; throws ConsistencyError on mismatch when enforce is set.
PSRResult gamma_PSR(const AsaiInput& in, const std::vector<cplx>& grid = default_grid(), double tol = 1e-8,
                    bool enforce = true);

struct DichotomyResult {
    int sign = 1;
    cplx value;
    cplx omega_EF_minus1;
    cplx eps_mu2;  // eps_Gal(1/2 + v2, As pi x mu2)
    cplx eps_nu2;  // eps_Gal(1/2 - v2, As pi x nu2)
};

// omega_{E/F}(-1) eps_Gal(1/2, As pi x tau); requires omega = 1.
DichotomyResult dichotomy_sign(const AsaiInput& in, double tol = 1e-8);

}  // namespace asai
