#include "asai/arch.hpp"

#include <algorithm>
#include <cmath>

#include "asai/quadrature.hpp"

namespace asai {

namespace {

const cplx I(0.0, 1.0);

cplx ipow_i(int k) {
    static const cplx t[4] = {1.0, I, -1.0, -I};
    return t[((k % 4) + 4) % 4];
}

int parity(int n) { return ((n % 2) + 2) % 2; }

double sgn(double a) { return a < 0 ? -1.0 : 1.0; }

cplx gamma_checked(cplx z) {
    double r = std::round(z.real());
    if (r <= 0.0 && std::abs(z - r) < 1e-12) throw PoleError("Gamma pole at " + std::to_string(z.real()), z);
    return gamma_c(z);
}

cplx real_power(double x, cplx e) { return std::exp(e * std::log(std::abs(x))); }

// (X + iY)^p (X - iY)^q as coefficients of X^j Y^{p+q-j}
std::vector<cplx> binomial_vector(int p, int q) {
    std::vector<cplx> v{1.0};
    auto mul = [&](cplx cy) {
        std::vector<cplx> w(v.size() + 1, 0.0);
        for (size_t j = 0; j < v.size(); ++j) {
            w[j + 1] += v[j];   // X
            w[j] += cy * v[j];  // c Y
        }
        v = w;
    };
    for (int i = 0; i < p; ++i) mul(I);
    for (int i = 0; i < q; ++i) mul(-I);
    return v;
}

// <W_pi, v>_{n0} for the minimal-type vector: sum_l (-1)^l v_{n0-l} W_{((0,l),(n0-l,0))}
std::vector<WTerm> pair_minimal(const std::vector<cplx>& v) {
    const int n0 = static_cast<int>(v.size()) - 1;
    std::vector<WTerm> out;
    for (int l = 0; l <= n0; ++l) {
        cplx c = (l % 2 ? -1.0 : 1.0) * v[n0 - l];
        if (std::abs(c) < 1e-15) continue;
        out.push_back({c, WhittakerIndex{0, l, n0 - l, 0}});
    }
    return out;
}

std::string vector_name(int p, int q) {
    auto part = [](const char* base, int e) -> std::string {
        if (e == 0) return "";
        return e == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(e);
    };
    std::string s = part("(X+iY)", p) + part("(X-iY)", q);
    return s.empty() ? "1" : s;
}

// int_{R_+} Phi_c(0, t) t^{E} d^x t for Phi_c = (x+iy)^{c1} (x-iy)^{c2} e^{-pi(x^2+y^2)}
cplx gaussian_tate(int c1, int c2, cplx E) {
    cplx z = 0.5 * (E + static_cast<double>(c1 + c2));
    return ipow_i(c1) * ipow_i(-c2) * 0.5 * std::exp(-z * std::log(M_PI)) * gamma_checked(z);
}

cplx gaussian_tate_quadrature(int c1, int c2, cplx E) {
    cplx pre = ipow_i(c1) * ipow_i(-c2);
    auto f = [&](double t) { return std::exp((E + static_cast<double>(c1 + c2)) * std::log(t) - M_PI * t * t); };
    return pre * integrate_mult(f, 1e-11, 30.0).value;
}

// Fourier eigenvalue of the harmonic Gaussians Phi_{(c,0)} and Phi_{(0,c)}
double fourier_sign(int c1, int c2) {
    if (c1 != 0 && c2 != 0) throw DomainError("only harmonic Gaussians have closed-form transforms here");
    return c2 % 2 ? -1.0 : 1.0;
}

}  // namespace

cplx CChar::operator()(cplx z) const {
    if (z == 0.0) throw DomainError("CChar evaluated at 0");
    double r2 = std::norm(z);
    return std::exp((lambda - 0.5 * n) * std::log(r2)) * std::pow(z, n);
}

RealChar CChar::restrict_to_R() const { return RealChar{parity(n), 2.0 * lambda}; }

CChar twisted_product(const CChar& mu, const CChar& nu) { return CChar{mu.lambda + nu.lambda, mu.n - nu.n}; }

bool selection_rule(const WhittakerIndex& idx, const CChar& mu, const CChar& nu) {
    return idx.a1 - idx.a2 + mu.n == idx.b1 - idx.b2 + nu.n;
}

cplx zeta_whittaker_closed(cplx s, const WhittakerIndex& idx, const RealChar& chi, const CChar& mu,
                           const CChar& nu) {
    if (!selection_rule(idx, mu, nu)) return 0.0;
    if (parity(mu.n + chi.m + idx.a1 + idx.a2) == 1) return 0.0;
    const double A = idx.a1 + idx.a2, B = idx.b1 + idx.b2;
    cplx e = s + chi.lambda + mu.lambda + nu.lambda - 1.0 + 0.5 * (A + B);
    return std::exp(-e * std::log(2.0 * M_PI)) * gamma_checked(0.5 * (s + chi.lambda + 2.0 * mu.lambda + A)) *
           gamma_checked(0.5 * (s + chi.lambda + 2.0 * nu.lambda + B));
}

cplx whittaker_value_quadrature(double y, const WhittakerIndex& idx, const CChar& mu, const CChar& nu,
                                double rel_tol) {
    if (y == 0.0 || !std::isfinite(y)) throw DomainError("whittaker_value_quadrature: y must be a nonzero real");
    // angular integral of e^{i k theta} by the periodic trapezoid rule
    const int k = idx.a1 - idx.a2 + idx.b2 - idx.b1 + mu.n - nu.n;
    const int M = 4 * (std::abs(k) + 8);
    cplx ang = 0.0;
    for (int j = 0; j < M; ++j) ang += std::polar(1.0, 2.0 * M_PI * k * j / M);
    ang *= 2.0 * M_PI / M;
    if (std::abs(ang) < 1e-13) return 0.0;

    const double A = idx.a1 + idx.a2, B = idx.b1 + idx.b2;
    const double ay = std::abs(y);
    const cplx E = A - B + 2.0 * (mu.lambda - nu.lambda);
    // t^E is factored at t = e^{u0} so that tiny |y| does not overflow the integrand
    const double u0 = E.real() > 0.0 ? std::max(0.0, -std::log(ay)) : 0.0;
    auto f = [&](double u) {
        const double t = std::exp(u);
        const double yt = ay * t;
        return std::exp(E * (u - u0) - 2.0 * M_PI * (yt * yt + 1.0 / (t * t)));
    };
    const double ulo = -3.5, uhi = std::max(ulo + 1.0, std::log(25.0 / ay));
    std::vector<double> cuts{ulo};
    for (double c : {0.0, -std::log(ay), -0.5 * std::log(ay)})
        if (c > ulo && c < uhi) cuts.push_back(c);
    cuts.push_back(uhi);
    std::sort(cuts.begin(), cuts.end());
    cplx radial = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i + 1] > cuts[i]) radial += integrate(f, cuts[i], cuts[i + 1], rel_tol).value;
    const cplx logpre = (2.0 * mu.lambda + 1.0 + A) * std::log(ay) + E * u0;
    const double sign = std::pow(sgn(y), mu.n + static_cast<int>(A));
    return 2.0 * sign * ang * std::exp(logpre) * radial;
}

cplx zeta_whittaker_quadrature(cplx s, const WhittakerIndex& idx, const RealChar& chi, const CChar& mu,
                               const CChar& nu, double rel_tol) {
    auto f = [&](double y) {
        return whittaker_value_quadrature(y, idx, mu, nu, 0.1 * rel_tol) * std::pow(sgn(y), chi.m) *
               real_power(y, chi.lambda + s - 1.0);
    };
    // |W(diag(y,1))| decays like exp(-4 pi |y|)
    return integrate_mult_real(f, rel_tol, 12.0).value;
}

ArchGal L_eps_gal_arch(const CChar& mu, const CChar& nu, double b) {
    ArchTate t1 = tate_real(mu.restrict_to_R(), b);
    ArchTate t2 = tate_real(nu.restrict_to_R(), b);
    ArchTate t3 = tate_complex(twisted_product(mu, nu).as_complex(), b);
    ArchGal g;
    g.L = t1.L * t2.L * t3.L;
    g.eps = langlands_constant_CR(b) * (t1.eps * t2.eps * t3.eps);
    return g;
}

CaseDatum case_table(const CChar& mu_in, const CChar& nu_in) {
    CaseDatum d;
    d.mu = mu_in;
    d.nu = nu_in;
    if (mu_in.n < nu_in.n) {
        std::swap(d.mu, d.nu);
        d.swapped = true;
    }
    const int n1 = d.mu.n, n0 = d.mu.n - d.nu.n;
    const bool n0_even = n0 % 2 == 0, n1_even = parity(n1) == 0;
    if (n0_even && n1_even) {
        d.case_id = 1;
        d.W = pair_minimal(binomial_vector(n0 / 2, n0 / 2));
        d.pairing_vector = vector_name(n0 / 2, n0 / 2);
        d.c = M_PI / 2;
        d.c_dual = M_PI / 2;
        d.eps = 1.0;
    } else if (n0_even && n0 >= 2) {
        d.case_id = 2;
        d.W = pair_minimal(binomial_vector(n0 / 2 + 1, n0 / 2 - 1));
        d.pairing_vector = vector_name(n0 / 2 + 1, n0 / 2 - 1);
        d.c2 = 2;
        d.c = I * M_PI;
        d.c_dual = I * M_PI;
        d.eps = 1.0;
    } else if (n0_even) {
        d.case_id = 5;
        // <W^(2), (X+iY)(X-iY)>_2 = -W_{((0,1),(0,1))} - W_{((1,0),(1,0))}
        d.W = {{-1.0, WhittakerIndex{0, 1, 0, 1}}, {-1.0, WhittakerIndex{1, 0, 1, 0}}};
        d.pairing_vector = "type-2 vector paired with (X+iY)(X-iY)";
        d.c = -M_PI / 2;
        d.c_dual = -M_PI / 2;
        d.eps = 1.0;
    } else {
        d.case_id = n1_even ? 3 : 4;
        d.W = pair_minimal(binomial_vector((n0 + 1) / 2, (n0 - 1) / 2));
        d.pairing_vector = vector_name((n0 + 1) / 2, (n0 - 1) / 2);
        d.c2 = 1;
        if (n1_even) {
            d.c = M_PI / (2.0 * I);
            d.c_dual = M_PI / 2;
            d.eps = I;
        } else {
            d.c = -M_PI / 2;
            d.c_dual = I * M_PI / 2.0;
            d.eps = -I;
        }
    }
    return d;
}

namespace {

template <class Zeta, class TateG>
CaseZeta assemble_case(cplx s, const CaseDatum& d, const Zeta& zeta, const TateG& tate) {
    const cplx lam = d.mu.lambda + d.nu.lambda;
    const RealChar one{0, 0.0};
    const RealChar omega_inv{parity(d.mu.n + d.nu.n), -2.0 * lam};
    cplx zs = 0.0, zd = 0.0;
    for (const auto& t : d.W) {
        zs += t.coef * zeta(s, t.idx, one);
        zd += t.coef * zeta(1.0 - s, t.idx, omega_inv);
    }
    CaseZeta r;
    r.Z = zs * tate(d.c1, d.c2, 2.0 * s + 2.0 * lam);
    r.Z_dual = zd * fourier_sign(d.c1, d.c2) * tate(d.c1, d.c2, 2.0 - 2.0 * s - 2.0 * lam);
    r.L = L_eps_gal_arch(d.mu, d.nu).L.eval(s);
    r.L_dual = L_eps_gal_arch(d.mu.inverse(), d.nu.inverse()).L.eval(1.0 - s);
    r.ratio = r.Z / r.L;
    r.ratio_dual = r.Z_dual / r.L_dual;
    return r;
}

}  // namespace

CaseZeta zeta_integral_case(cplx s, const CaseDatum& d) {
    return assemble_case(
        s, d, [&](cplx z, const WhittakerIndex& idx, const RealChar& chi) { return zeta_whittaker_closed(z, idx, chi, d.mu, d.nu); },
        gaussian_tate);
}

CaseZeta zeta_integral_case_quadrature(cplx s, const CaseDatum& d) {
    return assemble_case(
        s, d,
        [&](cplx z, const WhittakerIndex& idx, const RealChar& chi) {
            return zeta_whittaker_quadrature(z, idx, chi, d.mu, d.nu);
        },
        gaussian_tate_quadrature);
}

ArchFactor eps_RS_arch(const CChar& mu, const CChar& nu, double b, double c) {
    if (b == 0.0 || c == 0.0) throw DomainError("eps_RS_arch: psi and xi parameters must be nonzero");
    CaseDatum d = case_table(mu, nu);
    const double x = b * b * c;
    const cplx lam = mu.lambda + nu.lambda;
    ArchFactor f = ArchFactor::constant(d.c_dual / d.c * std::pow(sgn(x), mu.n + nu.n));
    if (std::abs(x) != 1.0) f.expos.push_back({std::abs(x), 2.0, 2.0 * lam - 1.0});
    return f;
}

double arch_relation_deviation(const CChar& mu, const CChar& nu, double b, double c, const std::vector<cplx>& grid) {
    const cplx xi = c * I;
    const cplx om = mu(xi) * nu(xi);
    ArchFactor eps = eps_RS_arch(mu, nu, b, c);
    ArchFactor gal = L_eps_gal_arch(mu, nu, b).eps;
    double dev = 0.0;
    for (cplx s : grid) {
        cplx lhs = std::exp((-s + 0.5) * std::log(c * c)) / om * langlands_constant_CR(b) * eps.eval(s);
        cplx rhs = gal.eval(s);
        dev = std::max(dev, std::abs(lhs - rhs) / std::abs(rhs));
    }
    return dev;
}

CaseReport verify_case(const CChar& mu, const CChar& nu, const std::vector<cplx>& grid) {
    if (grid.empty()) throw DomainError("verify_case: empty grid");
    CaseReport r;
    r.datum = case_table(mu, nu);
    std::vector<CaseZeta> z;
    for (cplx s : grid) z.push_back(zeta_integral_case(s, r.datum));
    const double n = static_cast<double>(grid.size());
    for (const auto& v : z) {
        r.mean_ratio += v.ratio / n;
        r.mean_ratio_dual += v.ratio_dual / n;
    }
    for (const auto& v : z) {
        r.stddev_ratio += std::norm(v.ratio - r.mean_ratio) / n;
        r.stddev_ratio_dual += std::norm(v.ratio_dual - r.mean_ratio_dual) / n;
    }
    r.stddev_ratio = std::sqrt(r.stddev_ratio) / std::abs(r.mean_ratio);
    r.stddev_ratio_dual = std::sqrt(r.stddev_ratio_dual) / std::abs(r.mean_ratio_dual);
    r.dev_c = std::abs(r.mean_ratio - r.datum.c) / std::abs(r.datum.c);
    r.dev_c_dual = std::abs(r.mean_ratio_dual - r.datum.c_dual) / std::abs(r.datum.c_dual);
    r.eps_RS = r.mean_ratio_dual / r.mean_ratio;
    r.eps_dev = std::abs(r.eps_RS - r.datum.eps);
    // relation at standard psi and xi = i, with the computed eps_RS
    const cplx om = mu(I) * nu(I);
    ArchFactor gal = L_eps_gal_arch(mu, nu).eps;
    for (cplx s : grid) {
        cplx lhs = langlands_constant_CR(1.0) * r.eps_RS / om;
        cplx rhs = gal.eval(s);
        r.relation_dev = std::max(r.relation_dev, std::abs(lhs - rhs) / std::abs(rhs));
    }
    return r;
}

CombResult combinatorial_identity(int N, cplx z, cplx w) {
    if (N < 0) throw DomainError("combinatorial_identity: N must be non-negative");
    CombResult r;
    double binom = 1.0;
    for (int l = 0; l <= N; ++l) {
        if (l > 0) binom = binom * (N - l + 1) / l;
        r.lhs += binom * gamma_checked(z + static_cast<double>(l)) * gamma_checked(w - static_cast<double>(l));
    }
    r.rhs = gamma_checked(z) * gamma_checked(w - static_cast<double>(N)) * gamma_checked(z + w) /
            gamma_checked(z + w - static_cast<double>(N));
    r.deviation = std::abs(r.lhs - r.rhs) / std::max(std::abs(r.rhs), 1e-300);
    return r;
}

}  // namespace asai
