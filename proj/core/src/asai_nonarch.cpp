#include "asai/asai_nonarch.hpp"

#include <cmath>

namespace asai {

namespace {

NonArchFactor to_F(const NonArchFactor& f, i64 qF) { return f.q == qF ? f : to_base(f, qF); }

FElem F_of(const EElem& x) {
    if (!x.b.is_zero()) throw DomainError("expected an element of F");
    return x.a;
}

cplx value_at(const MultChar& chi, const FElem& x) { return chi(chi.field().from_F(x)); }

// |x|_F^{A s + B}
NonArchFactor abs_F(const LocalField& F, const FElem& x, int A, cplx B) {
    return NonArchFactor::abs_power(F.q(), F.valuation(F.from_F(x)), A, B);
}

struct Pieces {
    TateResult mu_F;
    TateResult nu_F;
    TateResult twisted;  // mu nu^sigma at the E-level character
};

Pieces constituents(const MultChar& mu, const MultChar& nu, const AddChar& psiF,
                    const AddChar& psiE) {
    return {tate_factors(restrict_to_F(mu), psiF), tate_factors(restrict_to_F(nu), psiF),
            tate_factors(mu * sigma_conjugate(nu), psiE)};
}

FElem psi_scalar(const AsaiInput& in) { return in.psi.multiplier().a; }

AsaiInput with_pair(const AsaiInput& in, const MultChar& mu, const MultChar& nu) {
    AsaiInput r = in;
    r.mu = mu;
    r.nu = nu;
    r.chi.reset();
    r.tau.reset();
    return r;
}

struct Renormalized {
    AddChar psi;
    EElem xi;
    Normalization norm;
};

Renormalized renormalize(const AsaiInput& in, const MultChar& omegaF) {
    const LocalField& E = in.E;
    const LocalField F = E.base();
    const FElem a = psi_scalar(in);
    const int c = in.psi.conductor();
    const FElem a0 = F.pi_pow(c).a;
    const FElem a1 = a * a0;
    const int cx = AddChar::via_trace_xi(E, a1, in.xi).conductor();
    if (cx % E.e() != 0) throw ConsistencyError("psi_xi conductor is not a multiple of e(E/F)");
    const FElem b0 = F.pi_pow(cx / E.e()).a;

    Renormalized r{AddChar::shifted(F, a1), E.mul(E.from_F(b0), in.xi), {}};
    r.norm.psi_shift = c;
    r.norm.xi_shift = cx / E.e();
    const FElem ai = inverse(a0), bi = inverse(b0);
    cplx k = value_at(omegaF, ai) * value_at(omegaF, ai) * value_at(omegaF, bi);
    r.norm.correction = k * (abs_F(F, ai, 4, -2.0) * abs_F(F, bi, 2, -1.0));
    if (AddChar::via_trace_xi(E, a1, r.xi).conductor() != 0 || r.psi.conductor() != 0)
        throw ConsistencyError("renormalization did not reach conductor zero");
    return r;
}

NonArchFactor compose_gamma(const AsaiInput& in, const MultChar& mu, const MultChar& nu, const AddChar& psi,
                            const EElem& xi) {
    const LocalField F = in.E.base();
    Pieces P = constituents(mu, nu, psi, AddChar::via_trace_xi(in.E, psi.multiplier().a, xi));
    return nu(in.E.from_int(-1)) * (P.mu_F.gamma * P.nu_F.gamma * to_F(P.twisted.gamma, F.q()));
}

NonArchFactor compose_eps(const AsaiInput& in, const MultChar& mu, const MultChar& nu, const AddChar& psi,
                          const EElem& xi) {
    const LocalField F = in.E.base();
    Pieces P = constituents(mu, nu, psi, AddChar::via_trace_xi(in.E, psi.multiplier().a, xi));
    return nu(in.E.from_int(-1)) * (P.mu_F.eps * P.nu_F.eps * to_F(P.twisted.eps, F.q()));
}

NonArchFactor L_pair(const LocalField& E, const MultChar& mu, const MultChar& nu) {
    const i64 qF = E.base().q();
    return L_nonarch(restrict_to_F(mu)) * L_nonarch(restrict_to_F(nu)) *
           to_F(L_nonarch(mu * sigma_conjugate(nu)), qF);
}

// (As pi) x chi2 for a character chi2 of F^x, realized through an extension to E^x.
AsaiInput twist_by(const AsaiInput& in, const MultChar& chi2) {
    auto [mu, nu] = effective_pair(in);
    MultChar ct = extend_from_F(chi2, in.E);
    return with_pair(in, mu * ct, nu * ct);
}

}  // namespace

AsaiInput AsaiInput::make(const LocalField& E, const MultChar& mu, const MultChar& nu) {
    AsaiInput in{E, mu, nu, AddChar(E.base()), E.xi_canonical(), std::nullopt, std::nullopt,
                 RepKind::principal_series};
    return in;
}

void validate(const AsaiInput& in) {
    if (in.kind == RepKind::supercuspidal)
        throw DomainError(
            "supercuspidal pi is not supported: only principal series Ind(mu, nu) have local factors here");
    if (!in.E.is_E()) throw DomainError("E must be a quadratic extension");
    const LocalField F = in.E.base();
    if (in.mu.field() != in.E || in.nu.field() != in.E) throw DomainError("mu and nu must be characters of E^x");
    if (in.psi.field() != F) throw DomainError("psi must be a character of F");
    if (F.is_zero(in.psi.multiplier())) throw DomainError("psi must be nontrivial");
    if (in.E.is_zero(in.xi)) throw DomainError("xi must be nonzero");
    if (!in.E.trace(in.xi).is_zero()) throw DomainError("xi must have trace zero");
    if (in.chi && in.chi->field() != F) throw DomainError("chi must be a character of F^x");
    if (in.tau && (in.tau->mu2.field() != F || in.tau->nu2.field() != F))
        throw DomainError("mu2 and nu2 must be characters of F^x");
}

std::pair<MultChar, MultChar> effective_pair(const AsaiInput& in) {
    if (!in.chi) return {in.mu, in.nu};
    MultChar ct = extend_from_F(*in.chi, in.E);
    return {in.mu * ct, in.nu * ct};
}

MultChar central_character(const AsaiInput& in) {
    auto [mu, nu] = effective_pair(in);
    return mu * nu;
}

MultChar omega_F(const AsaiInput& in) {
    MultChar w = restrict_to_F(central_character(in));
    if (in.tau) w = w * in.tau->mu2 * in.tau->nu2;
    return w;
}

RSResult asai_RS(const AsaiInput& in) {
    validate(in);
    auto [mu, nu] = effective_pair(in);
    Renormalized R = renormalize(in, restrict_to_F(mu * nu));
    RSResult r;
    r.norm = R.norm;
    r.gamma = R.norm.correction * compose_gamma(in, mu, nu, R.psi, R.xi);
    r.L = L_pair(in.E, mu, nu);
    r.L_dual = L_pair(in.E, inverse(mu), inverse(nu));
    r.eps = simplify(r.gamma * r.L / reflect(r.L_dual));
    return r;
}

NonArchFactor gamma_RS(const AsaiInput& in) { return asai_RS(in).gamma; }

NonArchFactor eps_RS(const AsaiInput& in) { return asai_RS(in).eps; }

NonArchFactor gamma_RS_direct(const AsaiInput& in) {
    validate(in);
    auto [mu, nu] = effective_pair(in);
    return compose_gamma(in, mu, nu, in.psi, in.xi);
}

NonArchFactor eps_RS_direct(const AsaiInput& in) {
    validate(in);
    auto [mu, nu] = effective_pair(in);
    return compose_eps(in, mu, nu, in.psi, in.xi);
}

NonArchFactor L_gal_asai(const AsaiInput& in) {
    validate(in);
    const LocalField F = in.E.base();
    MultChar chi = in.chi ? *in.chi : MultChar::trivial(F);
    return L_nonarch(restrict_to_F(in.mu) * chi) * L_nonarch(restrict_to_F(in.nu) * chi) *
           to_F(L_nonarch(in.mu * sigma_conjugate(in.nu) * compose_norm(chi, in.E)), F.q());
}

namespace {

struct GalPieces {
    cplx lambda;
    Pieces P;
};

GalPieces gal_pieces(const AsaiInput& in) {
    validate(in);
    auto [mu, nu] = effective_pair(in);
    const FElem a = psi_scalar(in);
    return {langlands_constant(in.E, in.psi), constituents(mu, nu, in.psi, AddChar::via_trace(in.E, a))};
}

}  // namespace

NonArchFactor gamma_gal(const AsaiInput& in) {
    GalPieces G = gal_pieces(in);
    const i64 qF = in.E.base().q();
    return G.lambda * (G.P.mu_F.gamma * G.P.nu_F.gamma * to_F(G.P.twisted.gamma, qF));
}

NonArchFactor eps_gal(const AsaiInput& in) {
    GalPieces G = gal_pieces(in);
    const i64 qF = in.E.base().q();
    return G.lambda * (G.P.mu_F.eps * G.P.nu_F.eps * to_F(G.P.twisted.eps, qF));
}

EpsComparison eps_gal_comparison(const AsaiInput& in, const std::vector<cplx>& grid, double tol) {
    GalPieces G = gal_pieces(in);
    const LocalField F = in.E.base();
    const i64 qF = F.q();
    auto [mu, nu] = effective_pair(in);
    EpsComparison r;
    r.lambda = G.lambda;
    r.lhs = eps_RS(in);
    NonArchFactor gal = G.lambda * (G.P.mu_F.eps * G.P.nu_F.eps * to_F(G.P.twisted.eps, qF));
    const FElem xi2 = F_of(in.E.mul(in.xi, in.xi));
    r.rhs = ((mu * nu)(in.xi) / G.lambda) * (abs_F(F, xi2, 1, -0.5) * gal);
    r.cmp = approx_equal(r.lhs, r.rhs, grid, tol);

    AddChar psi_xi = AddChar::via_trace_xi(in.E, psi_scalar(in), in.xi);
    Pieces rs = constituents(mu, nu, in.psi, psi_xi);
    r.constituents = {{"rs: mu|F", rs.mu_F.eps},
                      {"rs: nu|F", rs.nu_F.eps},
                      {"rs: mu nu^sigma, psi_xi", to_F(rs.twisted.eps, qF)},
                      {"gal: mu|F", G.P.mu_F.eps},
                      {"gal: nu|F", G.P.nu_F.eps},
                      {"gal: mu nu^sigma, psi o tr", to_F(G.P.twisted.eps, qF)}};
    return r;
}

SplitCheck split_case_check(const MultChar& mu1, const MultChar& nu1, const MultChar& mu2, const MultChar& nu2,
                            const AddChar& psi, const FElem& t, const std::vector<cplx>& grid, double tol) {
    const LocalField& F = psi.field();
    for (const MultChar* c : {&mu1, &nu1, &mu2, &nu2})
        if (c->field() != F) throw DomainError("split case: characters must live on F^x");
    if (t.is_zero()) throw DomainError("split case: t must be nonzero");
    const EElem te = F.from_F(t), mt = F.neg(te), m1 = F.from_int(-1);
    auto eps = [&](const MultChar& c, const AddChar& p) { return eps_nonarch(c, p); };

    SplitCheck r;
    // nu(-1) eps(mu|F) eps(nu|F) eps(mu nu^sigma, psi_xi) on F x F
    r.asai_side = (nu1(m1) * nu2(m1)) * (eps(mu1 * mu2, psi) * eps(nu1 * nu2, psi) *
                                         eps(mu1 * nu2, psi.scaled(te)) * eps(mu2 * nu1, psi.scaled(mt)));
    cplx omega_xi = (mu1 * nu1)(te) * (mu2 * nu2)(mt);
    NonArchFactor xi_abs = NonArchFactor::abs_power(F.q(), 2 * F.valuation(te), 1, -0.5);
    r.rs_side = omega_xi * (xi_abs * eps(mu1 * mu2, psi) * eps(mu1 * nu2, psi) * eps(nu1 * mu2, psi) *
                            eps(nu1 * nu2, psi));
    r.cmp = approx_equal(r.asai_side, r.rs_side, grid, tol);
    return r;
}

PSRResult gamma_PSR(const AsaiInput& in, const std::vector<cplx>& grid, double tol, bool enforce) {
    validate(in);
    if (!in.tau) throw DomainError("gamma_PSR needs tau = (mu2, nu2, v2)");
    const TauData& T = *in.tau;
    const LocalField F = in.E.base();
    const MultChar w = omega_F(in);
    AsaiInput i1 = twist_by(in, T.mu2), i2 = twist_by(in, T.nu2);

    const FElem xi2 = F_of(in.E.mul(in.xi, in.xi));
    const FElem four = F.fint(4);
    const FElem x4 = four * xi2 * xi2, x2 = four * xi2;

    RSResult r1 = asai_RS(i1), r2 = asai_RS(i2);
    PSRResult r;
    r.norm_mu2 = r1.norm;
    r.norm_nu2 = r2.norm;
    r.assembly1 = (1.0 / value_at(w, x4)) *
                  (abs_F(F, x4, -2, 1.0) * shift(r1.gamma, T.v2) * shift(r2.gamma, -T.v2));
    const cplx wEF = omega_EF(in.E)(-1);
    r.assembly2 = (wEF / value_at(w, x2)) *
                  (abs_F(F, x2, -2, 1.0) * shift(gamma_gal(i1), T.v2) * shift(gamma_gal(i2), -T.v2));
    r.cmp = approx_equal(r.assembly1, r.assembly2, grid, tol);
    if (enforce && !r.cmp.equal)
        throw ConsistencyError("twisted Asai gamma: assemblies differ by " + std::to_string(r.cmp.max_deviation) +
                               " at s = " + std::to_string(r.cmp.worst_s.real()) + "+" +
                               std::to_string(r.cmp.worst_s.imag()) + "i");
    return r;
}

DichotomyResult dichotomy_sign(const AsaiInput& in, double tol) {
    validate(in);
    if (!in.tau) throw DomainError("dichotomy_sign needs tau = (mu2, nu2, v2)");
    const LocalField F = in.E.base();
    if (!same_character(omega_F(in), MultChar::trivial(F), 1e-10))
        throw DomainError("dichotomy_sign requires omega = omega_pi|_F omega_tau to be trivial");
    const TauData& T = *in.tau;
    DichotomyResult r;
    r.omega_EF_minus1 = omega_EF(in.E)(-1);
    r.eps_mu2 = eps_gal(twist_by(in, T.mu2)).eval(0.5 + T.v2);
    r.eps_nu2 = eps_gal(twist_by(in, T.nu2)).eval(0.5 - T.v2);
    r.value = r.omega_EF_minus1 * r.eps_mu2 * r.eps_nu2;
    r.sign = r.value.real() >= 0 ? 1 : -1;
    if (std::abs(r.value - static_cast<double>(r.sign)) > tol)
        throw ConsistencyError("dichotomy value is not a sign: " + std::to_string(r.value.real()) + "+" +
                               std::to_string(r.value.imag()) + "i");
    return r;
}

}  // namespace asai
