#include "asai/characters.hpp"

#include <cmath>

namespace asai {

namespace {

Angle angle_from_dlog(const std::vector<i64>& e, const std::vector<Angle>& angles) {
    Angle a;
    for (size_t j = 0; j < e.size(); ++j)
        if (e[j] != 0) a = a + angles[j] * e[j];
    return a;
}

cplx qpow(i64 q, cplx z) { return std::exp(z * std::log(static_cast<double>(q))); }

// Minimal conductor of the unit data and its re-expression at that level.
std::pair<int, std::vector<Angle>> minimize(const LocalField& K, int level, const std::vector<Angle>& angles) {
    if (level == 0) return {0, {}};
    auto G = UnitGroup::get(K, level);
    int cond = 0;
    for (i64 key : G->elements()) {
        Angle a = angle_from_dlog(G->dlog(key), angles);
        if (a.is_zero()) continue;
        int depth = 0;
        for (int c = level; c >= 1; --c) {
            auto [A, B] = K.residue_shape(c);
            i64 pa = ipow(K.p(), A);
            if (G->reduce_to(key, c) == 1 % pa) {
                depth = c;
                break;
            }
        }
        cond = std::max(cond, depth + 1);
        if (cond == level) break;
    }
    if (cond == level) return {level, angles};
    std::vector<Angle> out;
    if (cond > 0) {
        auto H = UnitGroup::get(K, cond);
        for (i64 g : H->generators()) {
            i64 key = K.residue_key(K.from_key(g, cond), level);
            out.push_back(angle_from_dlog(G->dlog(key), angles));
        }
    }
    return {cond, out};
}

}  // namespace

MultChar MultChar::unramified(const LocalField& K, cplx t, cplx lambda) {
    MultChar c(K);
    c.t_ = t;
    c.lambda_ = lambda;
    return c;
}

MultChar MultChar::from_generator_angles(const LocalField& K, int level, std::vector<Angle> angles, cplx t,
                                         cplx lambda) {
    if (level < 0) throw DomainError("character level must be non-negative");
    auto G = UnitGroup::get(K, level);
    if (angles.size() != G->generators().size())
        throw DomainError("character data: expected " + std::to_string(G->generators().size()) +
                          " generator angles at level " + std::to_string(level));
    for (size_t j = 0; j < angles.size(); ++j)
        if (!(angles[j] * G->orders()[j]).is_zero())
            throw DomainError("character data: angle order does not divide generator order");
    auto [cond, out] = minimize(K, level, angles);
    MultChar c(K);
    c.level_ = cond;
    c.unit_ = std::move(out);
    c.t_ = t;
    c.lambda_ = lambda;
    return c;
}

MultChar MultChar::from_unit_function(const LocalField& K, int level,
                                      const std::function<Angle(const EElem&)>& unit_angle, cplx t, cplx lambda) {
    auto G = UnitGroup::get(K, level);
    std::vector<Angle> angles;
    for (i64 g : G->generators()) angles.push_back(unit_angle(K.from_key(g, level)));
    return from_generator_angles(K, level, std::move(angles), t, lambda);
}

cplx MultChar::at_uniformizer() const { return t_ * qpow(K_.q(), -lambda_); }

Angle MultChar::unit_angle(const EElem& u) const {
    if (level_ == 0) return {};
    auto G = UnitGroup::get(K_, level_);
    return angle_from_dlog(G->dlog(K_.residue_key(u, level_)), unit_);
}

cplx MultChar::operator()(const EElem& x) const {
    int v = K_.valuation(x);
    EElem u = K_.unit_part(x);
    return std::pow(t_, v) * unit_value(u) * qpow(K_.q(), -static_cast<double>(v) * lambda_);
}

std::vector<Angle> MultChar::angles_at_level(int m) const {
    if (m < level_) throw DomainError("angles_at_level: level below conductor");
    auto G = UnitGroup::get(K_, m);
    std::vector<Angle> out;
    for (i64 g : G->generators()) out.push_back(unit_angle(K_.from_key(g, m)));
    return out;
}

MultChar MultChar::with_t(cplx t) const {
    MultChar c = *this;
    c.t_ = t;
    return c;
}

MultChar MultChar::with_lambda(cplx lambda) const {
    MultChar c = *this;
    c.lambda_ = lambda;
    return c;
}

MultChar operator*(const MultChar& a, const MultChar& b) {
    if (a.field() != b.field()) throw DomainError("product of characters on different fields");
    int m = std::max(a.conductor(), b.conductor());
    auto x = a.angles_at_level(m);
    auto y = b.angles_at_level(m);
    for (size_t j = 0; j < x.size(); ++j) x[j] = x[j] + y[j];
    return MultChar::from_generator_angles(a.field(), m, std::move(x), a.t() * b.t(), a.lambda() + b.lambda());
}

MultChar inverse(const MultChar& a) {
    auto x = a.angles_at_level(a.conductor());
    for (auto& v : x) v = -v;
    return MultChar::from_generator_angles(a.field(), a.conductor(), std::move(x), 1.0 / a.t(), -a.lambda());
}

MultChar power(const MultChar& a, int k) {
    MultChar r = MultChar::trivial(a.field());
    MultChar b = k < 0 ? inverse(a) : a;
    for (int i = 0; i < std::abs(k); ++i) r = r * b;
    return r;
}

bool same_character(const MultChar& a, const MultChar& b, double tol) {
    if (a.field() != b.field() || a.conductor() != b.conductor()) return false;
    if (a.unit_angles() != b.unit_angles()) return false;
    cplx ra = a.at_uniformizer(), rb = b.at_uniformizer();
    return std::abs(ra - rb) <= tol * std::max(1.0, std::abs(ra));
}

MultChar restrict_to_F(const MultChar& chi) {
    const LocalField& E = chi.field();
    if (!E.is_E()) throw DomainError("restrict_to_F expects a character of E^x");
    LocalField F = E.base();
    int k = (chi.conductor() + E.e() - 1) / E.e();
    cplx tF = std::pow(chi.t(), E.e()) * chi.unit_value(E.unit_part(E.from_int(E.p())));
    return MultChar::from_unit_function(
        F, k, [&](const EElem& u) { return chi.unit_angle(E.from_F(u.a)); }, tF, 2.0 * chi.lambda());
}

MultChar extend_from_F(const MultChar& chi, const LocalField& E, int M) {
    const LocalField& F = chi.field();
    if (F.is_E() || !E.is_E() || F.p() != E.p()) throw DomainError("extend_from_F: field mismatch");
    int c = chi.conductor();
    if (M < 0) M = E.e() * c;
    if (M < E.e() * c - E.e() + 1) throw DomainError("extend_from_F: modulus too small for the conductor");
    auto GE = UnitGroup::get(E, M);
    auto GF = UnitGroup::get(F, c);
    const auto& ord = GE->orders();
    const size_t r = ord.size();
    std::vector<std::vector<i64>> rows;
    for (i64 h : GF->generators()) rows.push_back(GE->dlog(E.residue_key(E.from_F(F.from_key(h, c).a), M)));
    const auto& target = chi.unit_angles();

    std::vector<i64> x(r, 0);
    auto ok = [&]() {
        for (size_t i = 0; i < rows.size(); ++i) {
            Angle s;
            for (size_t j = 0; j < r; ++j)
                if (rows[i][j] != 0 && x[j] != 0) s = s + Angle(x[j], ord[j]) * rows[i][j];
            if (s != target[i]) return false;
        }
        return true;
    };
    bool found = false;
    while (true) {
        if (ok()) {
            found = true;
            break;
        }
        // odometer, last coordinate fastest: lexicographic order
        size_t j = r;
        bool carry = true;
        while (j > 0 && carry) {
            --j;
            if (++x[j] < ord[j])
                carry = false;
            else
                x[j] = 0;
        }
        if (carry) break;
    }
    if (!found) throw std::logic_error("extend_from_F: character extension system inconsistent");
    std::vector<Angle> angles;
    for (size_t j = 0; j < r; ++j) angles.emplace_back(x[j], ord[j]);
    MultChar ext = MultChar::from_generator_angles(E, M, angles, 1.0, 0.5 * chi.lambda());
    cplx te = chi.t() / ext.unit_value(E.unit_part(E.from_int(E.p())));
    if (E.e() == 2) te = std::sqrt(te);
    return ext.with_t(te);
}

MultChar sigma_conjugate(const MultChar& chi) {
    const LocalField& E = chi.field();
    if (!E.is_E()) return chi;
    EElem w = E.uniformizer();
    cplx ts = chi.t() * chi.unit_value(E.div(E.conj(w), w));
    return MultChar::from_unit_function(
        E, chi.conductor(), [&](const EElem& u) { return chi.unit_angle(E.conj(u)); }, ts, chi.lambda());
}

MultChar omega_EF(const LocalField& E) {
    if (!E.is_E()) throw DomainError("omega_EF expects a quadratic extension");
    LocalField F = E.base();
    if (!E.ramified()) return MultChar::unramified(F, -1.0);
    i64 w = E.d() / E.p();
    const i64 p = E.p();
    return MultChar::from_unit_function(
        F, 1, [p](const EElem& u) { return Angle(legendre(residue(u.a, 1), p) == 1 ? 0 : 1, 2); },
        static_cast<double>(legendre(-w, p)));
}

MultChar compose_norm(const MultChar& chi, const LocalField& E) {
    const LocalField& F = chi.field();
    if (F.is_E() || !E.is_E() || F.p() != E.p()) throw DomainError("compose_norm: field mismatch");
    int M = E.e() * chi.conductor();
    FElem nw = E.norm(E.uniformizer());
    cplx tE = std::pow(chi.t(), E.f()) * chi.unit_value(F.unit_part(F.from_F(nw)));
    return MultChar::from_unit_function(
        E, M, [&](const EElem& u) { return chi.unit_angle(F.from_F(E.norm(u))); }, tE, chi.lambda());
}

MultChar random_character(const LocalField& K, int max_conductor, std::mt19937_64& rng, bool allow_lambda) {
    std::uniform_int_distribution<int> cd(0, max_conductor);
    int c = cd(rng);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    cplx t = std::polar(1.0, 2.0 * M_PI * ud(rng));
    cplx lam = allow_lambda ? cplx(0.6 * ud(rng) - 0.3, 0.0) : cplx(0.0, 0.0);
    if (c == 0) return MultChar::unramified(K, t, lam);
    auto G = UnitGroup::get(K, c);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Angle> a;
        for (i64 o : G->orders()) a.emplace_back(std::uniform_int_distribution<i64>(0, o - 1)(rng), o);
        MultChar chi = MultChar::from_generator_angles(K, c, a, t, lam);
        if (chi.conductor() == c) return chi;
    }
    throw std::logic_error("random_character: no primitive character found");
}

MultChar random_unramified(const LocalField& K, std::mt19937_64& rng, bool allow_lambda) {
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    cplx t = std::polar(1.0, 2.0 * M_PI * ud(rng));
    cplx lam = allow_lambda ? cplx(0.6 * ud(rng) - 0.3, 0.0) : cplx(0.0, 0.0);
    return MultChar::unramified(K, t, lam);
}

// ---------------------------------------------------------------- AddChar

AddChar::AddChar(const LocalField& K, const EElem& b) : K_(K), b_(b) {
    if (K.is_zero(b)) throw DomainError("additive character multiplier must be nonzero");
    cond_ = compute_conductor();
}

AddChar AddChar::shifted(const LocalField& F, const FElem& a) { return AddChar(F, F.from_F(a)); }

AddChar AddChar::via_trace_xi(const LocalField& E, const FElem& a, const EElem& xi) {
    if (!E.trace(xi).is_zero()) throw DomainError("xi must have trace zero");
    return AddChar(E, E.mul(E.from_F(a), xi));
}

AddChar AddChar::via_trace(const LocalField& E, const FElem& a) { return AddChar(E, E.from_F(a)); }

Angle AddChar::angle(const EElem& x) const {
    EElem y = K_.mul(b_, x);
    return frac_p(K_.trace(y));
}

int AddChar::compute_conductor() const {
    auto trivial_at = [&](int v) {
        EElem w = K_.mul(b_, K_.pi_pow(v));
        if (!frac_p(K_.trace(w)).is_zero()) return false;
        if (K_.is_E() && !frac_p(K_.trace(K_.mul(w, K_.sqrt_d()))).is_zero()) return false;
        return true;
    };
    int v = -K_.valuation(b_) - 4;
    while (trivial_at(v)) v -= 4;
    while (!trivial_at(v)) ++v;
    return v;
}

}  // namespace asai
