#include "asai/whittaker.hpp"

#include <Eigen/Dense>
#include <climits>
#include <cmath>

namespace asai {

namespace {

constexpr int kInf = INT_MAX / 4;

int ord(const LocalField& K, const EElem& x) { return K.is_zero(x) ? kInf : K.valuation(x); }

double qpow(double q, double e) { return std::pow(q, e); }

// l(z) = l0 + z l1 on the coset z0 + pi^k O.
struct Linear {
    bool const_ord = false;
    int ord = 0;      // when const_ord
    int rel = 0;      // l(z) / l(z0) in 1 + pi^rel O
    int min_ord = 0;  // lower bound for ord l(z) otherwise
};

Linear linear_info(const LocalField& K, const EElem& l0, const EElem& l1, const EElem& z0, int k) {
    Linear r;
    const EElem L0 = K.add(l0, K.mul(z0, l1));
    const int o1 = ord(K, l1);
    const int v1 = o1 >= kInf ? kInf : o1 + k;
    const int o0 = ord(K, L0);
    if (o0 < v1) {
        r.const_ord = true;
        r.ord = o0;
        r.rel = v1 >= kInf ? kInf : v1 - o0;
    } else {
        r.min_ord = v1;
    }
    return r;
}

// Whether z -> f(w n(z) h) is constant on z0 + pi^k O_E.
bool constant_on(const InducedSection& f, const LocalField& E, const Mat2& h, const EElem& z0, int k) {
    // bottom row of w n(z) h is (h.a + z h.c, h.b + z h.d)
    Linear c = linear_info(E, h.a, h.c, z0, k);
    Linear d = linear_info(E, h.b, h.d, z0, k);
    if (f.kind == SectionKind::spherical) {
        if (c.const_ord && d.const_ord) return true;
        if (c.const_ord && d.min_ord >= c.ord) return true;
        if (d.const_ord && c.min_ord >= d.ord) return true;
        return false;
    }
    const int need = std::max({f.mu.conductor(), f.nu.conductor(), 1});
    if (c.const_ord) {
        if (d.const_ord && d.ord < c.ord) return true;  // indicator vanishes
        if (c.rel < need) return false;
        if (d.const_ord) return true;
        return d.min_ord >= c.ord;
    }
    return d.const_ord && c.min_ord > d.ord;
}

int start_truncation(const InducedSection& f, const LocalField& E, const Mat2& h, int cpsi) {
    const int cond = std::max(f.mu.conductor(), f.nu.conductor());
    int z0 = cpsi - std::max(cond, 1);
    for (auto [top, bot] : {std::pair{h.a, h.c}, std::pair{h.b, h.d}}) {
        if (E.is_zero(bot)) continue;
        const int ot = ord(E, top);
        if (ot >= kInf) continue;
        z0 = std::min(z0, ot - E.valuation(bot) - cond - 1);
    }
    return std::max(0, -z0 + 1);
}

struct CosetSum {
    cplx value;
    long cosets = 0;
};

// Sum over the given starting cosets (z0 + pi^k O).
CosetSum integrate_cosets(const InducedSection& f, const AddChar& psi, const Mat2& h,
                          std::vector<std::pair<EElem, int>> stack, int kmax) {
    const LocalField& E = psi.field();
    const double qE = static_cast<double>(E.q());
    const int cpsi = psi.conductor();
    const Mat2 w = mat_w(E);
    const auto digits = E.residues(1);

    CosetSum out;
    while (!stack.empty()) {
        auto [z0, k] = stack.back();
        stack.pop_back();
        if (constant_on(f, E, h, z0, k)) {
            ++out.cosets;
            if (k < cpsi) continue;  // psi_xi is nontrivial on pi^k O
            const Mat2 g = mat_mul(E, mat_mul(E, w, mat_upper(E, z0)), h);
            cplx v = f(g);
            if (v != 0.0) out.value += v * psi(E.neg(z0)) * qpow(qE, 0.5 * cpsi - k);
            continue;
        }
        if (k >= kmax) throw ConsistencyError("Whittaker integral: integrand not resolved at the working precision");
        const EElem pk = E.pi_pow(k);
        for (const auto& r : digits) stack.emplace_back(E.add(z0, E.mul(pk, r)), k + 1);
    }
    return out;
}

// int over pi^{-n} O
CosetSum integrate_disc(const InducedSection& f, const AddChar& psi, const Mat2& h, int n, int kmax) {
    const LocalField& E = psi.field();
    return integrate_cosets(f, psi, h, {{E.zero(), -n}}, kmax);
}

// int over ord z = -n
CosetSum integrate_annulus(const InducedSection& f, const AddChar& psi, const Mat2& h, int n, int kmax) {
    const LocalField& E = psi.field();
    const EElem pn = E.pi_pow(-n);
    std::vector<std::pair<EElem, int>> stack;
    for (const auto& r : E.residues(1))
        if (!E.is_zero(r)) stack.emplace_back(E.mul(pn, r), 1 - n);
    return integrate_cosets(f, psi, h, std::move(stack), kmax);
}

}  // namespace

Mat2 mat_mul(const LocalField& K, const Mat2& x, const Mat2& y) {
    return {K.add(K.mul(x.a, y.a), K.mul(x.b, y.c)), K.add(K.mul(x.a, y.b), K.mul(x.b, y.d)),
            K.add(K.mul(x.c, y.a), K.mul(x.d, y.c)), K.add(K.mul(x.c, y.b), K.mul(x.d, y.d))};
}

EElem mat_det(const LocalField& K, const Mat2& g) { return K.sub(K.mul(g.a, g.d), K.mul(g.b, g.c)); }

Mat2 mat_identity(const LocalField& K) { return {K.one(), K.zero(), K.zero(), K.one()}; }

Mat2 mat_diag(const LocalField& K, const EElem& a, const EElem& d) { return {a, K.zero(), K.zero(), d}; }

Mat2 mat_upper(const LocalField& K, const EElem& x) { return {K.one(), x, K.zero(), K.one()}; }

Mat2 mat_lower(const LocalField& K, const EElem& x) { return {K.one(), K.zero(), x, K.one()}; }

Mat2 mat_w(const LocalField& K) { return {K.zero(), K.neg(K.one()), K.one(), K.zero()}; }

Mat2 mat_w1(const LocalField& K) { return {K.zero(), K.one(), K.one(), K.zero()}; }

cplx InducedSection::operator()(const Mat2& g) const {
    const LocalField& E = mu.field();
    const double q = static_cast<double>(E.q());
    const EElem det = mat_det(E, g);
    if (kind == SectionKind::spherical) {
        const int oc = ord(E, g.c), od = ord(E, g.d);
        const int orr = std::min(oc, od);
        const int op = E.valuation(det) - orr;
        return std::pow(mu.at_uniformizer(), op) * std::pow(nu.at_uniformizer(), orr) * qpow(q, -0.5 * (op - orr));
    }
    if (E.is_zero(g.c)) return 0.0;
    const int oc = E.valuation(g.c);
    if (ord(E, g.d) < oc) return 0.0;
    const int odet = E.valuation(det);
    return mu(E.div(det, g.c)) * nu(g.c) * qpow(q, -0.5 * odet + oc);
}

WhittakerValue whittaker_from_section(const InducedSection& f, const AddChar& psi_xi, const Mat2& h) {
    const LocalField& E = psi_xi.field();
    if (f.mu.field() != E || f.nu.field() != E) throw DomainError("whittaker: section and character fields differ");
    if (f.kind == SectionKind::spherical && (f.mu.ramified() || f.nu.ramified()))
        throw DomainError("whittaker: spherical section needs unramified mu and nu");
    const int n0 = start_truncation(f, E, h, psi_xi.conductor());
    constexpr int kMaxSteps = 12;
    const int kmax = -n0 + 4 * E.precision();
    CosetSum acc = integrate_disc(f, psi_xi, h, n0, kmax);
    std::vector<CosetSum> vals{acc};
    for (int n = n0 + 1; n < n0 + kMaxSteps; ++n) {
        const CosetSum shell = integrate_annulus(f, psi_xi, h, n, kmax);
        acc.value += shell.value;
        acc.cosets += shell.cosets;
        vals.push_back(acc);
        const size_t m = vals.size();
        if (m < 3) continue;
        const cplx v = vals[m - 1].value;
        const double tol = 1e-12 * std::max(1.0, std::abs(v));
        if (std::abs(vals[m - 2].value - v) <= tol && std::abs(vals[m - 3].value - v) <= tol)
            return {vals[m - 3].value, n - 2, vals[m - 3].cosets};
    }
    throw ConsistencyError("Whittaker integral did not stabilize under truncation");
}

cplx whittaker_of_sum(const InducedSection& f, const AddChar& psi_xi, const TranslateSum& s, const Mat2& h) {
    const LocalField& E = psi_xi.field();
    cplx r = 0.0;
    for (const auto& [c, k] : s.terms) r += c * whittaker_from_section(f, psi_xi, mat_mul(E, h, k)).value;
    return r;
}

int section_level(const MultChar& mu) {
    const int e = mu.field().e();
    return (mu.conductor() + e - 1) / e;
}

TranslateSum averaged_section_g(const MultChar& mu, int level) {
    const LocalField& E = mu.field();
    const LocalField F = E.base();
    const int r = section_level(mu);
    const int cm = restrict_to_F(mu).conductor();
    if (level < 0) level = r;
    if (level < r || cm > level) throw DomainError("averaged_section_g: level below the section level");
    TranslateSum s;
    const double coef = qpow(static_cast<double>(F.q()), r - level);
    const EElem pc = F.pi_pow(cm);
    for (const auto& u : F.residues(level - cm))
        s.terms.emplace_back(coef, mat_lower(E, E.from_F(F.mul(pc, u).a)));
    return s;
}

TranslateSum averaged_section_h(const MultChar& mu) {
    const LocalField& E = mu.field();
    const LocalField F = E.base();
    const int r = section_level(mu);
    if (r < 1) throw DomainError("averaged_section_h: mu must be ramified");
    TranslateSum s;
    const EElem p = F.pi_pow(1);
    for (const auto& u : F.residues(r - 1)) s.terms.emplace_back(1.0, mat_lower(E, E.from_F(F.mul(p, u).a)));
    const Mat2 w1 = mat_w1(E);
    for (const auto& u : F.residues(r)) s.terms.emplace_back(1.0, mat_mul(E, w1, mat_lower(E, E.from_F(u.a))));
    return s;
}

cplx whittaker_closed_g(const MultChar& mu, const FElem& a) {
    const LocalField& E = mu.field();
    const LocalField F = E.base();
    const int oa = F.valuation(F.from_F(a));
    const int cm = restrict_to_F(mu).conductor();
    if (oa < cm - section_level(mu)) return 0.0;
    return qpow(static_cast<double>(F.q()), -oa);
}

cplx whittaker_closed_h(const MultChar& mu, const FElem& a) {
    const LocalField& E = mu.field();
    const LocalField F = E.base();
    const int oa = F.valuation(F.from_F(a));
    const int r = section_level(mu);
    const double abs_a = qpow(static_cast<double>(F.q()), -oa);
    cplx v = 0.0;
    if (oa >= -r) v += mu(E.from_F(a)) * abs_a * std::pow(mu(E.from_F(F.pi_pow(1).a)), r);
    if (oa >= 1 - r) v += abs_a;
    return v;
}

// ---- Schwartz functions on F^2

Schwartz2 Schwartz2::box(const EElem& a, int n, const EElem& b, int m, cplx coef) {
    Schwartz2 s;
    BoxPair t;
    t.coef = coef;
    t.x.center = a;
    t.x.k = n;
    t.y.center = b;
    t.y.k = m;
    s.terms.push_back(t);
    return s;
}

cplx Schwartz2::operator()(const LocalField& F, const AddChar& psi, const EElem& x, const EElem& y) const {
    cplx r = 0.0;
    for (const auto& t : terms) {
        TestFunction fx{{t.x}}, fy{{t.y}};
        r += t.coef * fx(F, psi, x) * fy(F, psi, y);
    }
    return r;
}

Schwartz2 fourier_transform_2d(const Schwartz2& phi, const AddChar& psi) {
    const LocalField& F = psi.field();
    Schwartz2 out;
    for (const auto& t : phi.terms) {
        // Phi^(x, y) = phi1^(y) phi2^(-x)
        BoxTerm hx = fourier_transform(TestFunction{{t.y}}, psi).terms.at(0);
        BoxTerm hy = fourier_transform(TestFunction{{t.x}}, psi).terms.at(0);
        hx.center = F.neg(hx.center);
        if (hx.has_beta) hx.beta = F.neg(hx.beta);
        BoxPair r;
        r.coef = t.coef * hx.coef * hy.coef;
        hx.coef = hy.coef = 1.0;
        r.x = hx;
        r.y = hy;
        out.terms.push_back(r);
    }
    return out;
}

// ---- spherical zeta integral

SphericalZeta::SphericalZeta(const AsaiInput& in, int terms) : E_(in.E), psi_(in.psi) {
    validate(in);
    if (in.chi || in.tau) throw DomainError("spherical zeta: twists are not supported");
    if (in.mu.ramified() || in.nu.ramified()) throw DomainError("spherical zeta: mu and nu must be unramified");
    if (terms < 8) throw DomainError("spherical zeta: at least 8 terms are needed for the recurrence fit");
    const LocalField F = E_.base();
    omega_pi_ = (in.mu * in.nu)(E_.from_F(F.pi_pow(1).a));

    const AddChar psi_xi = AddChar::via_trace_xi(E_, in.psi.multiplier().a, in.xi);
    const InducedSection f{in.mu, in.nu, SectionKind::spherical};
    auto W_at = [&](int m) {
        const EElem a = E_.from_F(F.pi_pow(m).a);
        return whittaker_from_section(f, psi_xi, mat_diag(E_, a, E_.one())).value;
    };

    // support of m -> W(diag(p^m, 1)) starts where ord_E(p^m) >= -c(psi_xi)
    int m = -static_cast<int>(std::ceil(static_cast<double>(psi_xi.conductor()) / E_.e())) - 2;
    const int mlim = m + 8;
    cplx w0 = W_at(m);
    while (std::abs(w0) < 1e-12 && m < mlim) w0 = W_at(++m);
    if (std::abs(w0) < 1e-12) throw ConsistencyError("spherical Whittaker function vanishes on the torus");
    m0_ = m;
    W_.push_back(w0);
    for (int j = 1; j < terms; ++j) W_.push_back(W_at(m0_ + j));

    double scale = 0.0;
    for (const auto& w : W_) scale = std::max(scale, std::abs(w));
    for (int d = 1; d <= 3; ++d) {
        const int neq = terms - d;
        if (neq < d + 2) break;
        Eigen::MatrixXcd A(neq, d);
        Eigen::VectorXcd b(neq);
        for (int j = 0; j < neq; ++j) {
            b(j) = W_[d + j];
            for (int i = 0; i < d; ++i) A(j, i) = W_[d + j - 1 - i];
        }
        Eigen::VectorXcd c = A.colPivHouseholderQr().solve(b);
        double res = ((A * c - b).cwiseAbs().maxCoeff()) / scale;
        if (res < 1e-9) {
            rec_.assign(c.data(), c.data() + d);
            residual_ = res;
            return;
        }
    }
    throw ConsistencyError("spherical Whittaker values satisfy no short linear recurrence");
}

cplx SphericalZeta::whittaker_series(cplx s, cplx eta_p) const {
    const double q = static_cast<double>(E_.base().q());
    const cplx X = eta_p * std::exp((1.0 - s) * std::log(q));
    const int d = static_cast<int>(rec_.size());
    // Q(X) = 1 - sum c_i X^{i+1}; P = (sum_{j<d} W_j X^j) Q mod X^d
    std::vector<cplx> Q(d + 1, 0.0);
    Q[0] = 1.0;
    for (int i = 0; i < d; ++i) Q[i + 1] = -rec_[i];
    cplx P = 0.0, Qv = 0.0, Xp = 1.0;
    for (int j = 0; j < d; ++j) {
        cplx pj = 0.0;
        for (int i = 0; i <= j; ++i) pj += W_[i] * Q[j - i];
        P += pj * Xp;
        Xp *= X;
    }
    Xp = 1.0;
    for (int j = 0; j <= d; ++j) {
        Qv += Q[j] * Xp;
        Xp *= X;
    }
    if (std::abs(Qv) < 1e-14) throw PoleError("spherical zeta: pole of the Whittaker series", s);
    return std::pow(X, m0_) * P / Qv;
}

cplx SphericalZeta::zeta_with(cplx s, cplx eta_p, int box_level, cplx scale) const {
    const double q = static_cast<double>(E_.base().q());
    const cplx Y = omega_pi_ * eta_p * eta_p * std::exp(-2.0 * s * std::log(q));
    if (std::abs(1.0 - Y) < 1e-14) throw PoleError("spherical zeta: pole of the central series", s);
    return scale * std::pow(Y, box_level) / (1.0 - Y) * whittaker_series(s, eta_p);
}

cplx SphericalZeta::zeta(cplx s, int box_level) const { return zeta_with(s, 1.0, box_level, 1.0); }

cplx SphericalZeta::zeta_dual(cplx s, int box_level) const {
    const LocalField F = E_.base();
    Schwartz2 hat = fourier_transform_2d(Schwartz2::box(F.zero(), box_level, F.zero(), box_level), psi_);
    const BoxPair& t = hat.terms.at(0);
    if (hat.terms.size() != 1 || t.x.has_beta || t.y.has_beta || !F.is_zero(t.x.center) ||
        !F.is_zero(t.y.center) || t.x.k != t.y.k)
        throw ConsistencyError("spherical zeta: transformed test function is not a K-invariant box");
    return zeta_with(1.0 - s, 1.0 / omega_pi_, t.x.k, t.coef);
}

double SphericalZeta::abscissa() const {
    const double lq = std::log(static_cast<double>(E_.base().q()));
    const int d = static_cast<int>(rec_.size());
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) C(0, i) = rec_[i];
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    double a = std::log(std::abs(omega_pi_)) / (2.0 * lq);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);
    for (int i = 0; i < d; ++i) {
        const double rho = std::abs(es.eigenvalues()(i));
        if (rho > 0.0) a = std::max(a, 1.0 + std::log(rho) / lq);
    }
    return a;
}

cplx SphericalZeta::zeta_series(cplx s, int box_level, int shells) const {
    const double a = abscissa();
    if (s.real() <= a)
        throw DomainError("spherical zeta: shell series diverges; Re(s) must exceed " + std::to_string(a));
    const double lq = std::log(static_cast<double>(E_.base().q()));
    cplx A = 0.0;
    for (int j = box_level; j < box_level + shells; ++j)
        A += std::pow(omega_pi_, j) * std::exp(-2.0 * s * lq * static_cast<double>(j));
    cplx B = 0.0;
    for (size_t j = 0; j < W_.size(); ++j)
        B += W_[j] * std::exp((1.0 - s) * lq * static_cast<double>(m0_ + static_cast<int>(j)));
    return A * B;
}

}  // namespace asai
