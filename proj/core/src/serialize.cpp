#include "asai/serialize.hpp"

#include <cstdlib>

namespace asai {

namespace {

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, size_t i) { return ptr + "/" + std::to_string(i); }

const json& require(const json& j, const std::string& key, const std::string& ptr) {
    if (!j.is_object()) throw InputError(ptr, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(child(ptr, key), "missing field");
    return *it;
}

i64 int_from_json(const json& j, const std::string& ptr) {
    if (!j.is_number_integer()) throw InputError(ptr, "expected an integer");
    return j.get<i64>();
}

double real_from_json(const json& j, const std::string& ptr) {
    if (!j.is_number()) throw InputError(ptr, "expected a number");
    return j.get<double>();
}

// "a/b" or "a"
bool parse_fraction(const std::string& s, i64& num, i64& den) {
    const auto slash = s.find('/');
    char* end = nullptr;
    num = std::strtoll(s.c_str(), &end, 10);
    if (end == s.c_str()) return false;
    if (slash == std::string::npos) {
        den = 1;
        return *end == '\0';
    }
    if (end != s.c_str() + slash) return false;
    const char* d = s.c_str() + slash + 1;
    den = std::strtoll(d, &end, 10);
    return end != d && *end == '\0';
}

std::string rep_kind_name(RepKind k) { return k == RepKind::principal_series ? "principal-series" : "supercuspidal"; }

}  // namespace

// ---- writers

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Angle& a) { return json::array({a.num, a.den}); }

json to_json(const Rational& r) {
    if (r.den == 1) return r.num;
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

json to_json(const LocalField& K) {
    json j{{"p", K.p()}, {"precision", K.precision()}};
    if (K.is_E()) j["ext"] = ext_name(K.ext());
    return j;
}

json to_json(const MultChar& chi) {
    json angles = json::array();
    for (const Angle& a : chi.unit_angles()) angles.push_back(to_json(a));
    return {{"field", chi.field().is_E() ? "E" : "F"},
            {"conductor", chi.conductor()},
            {"unit_part", angles},
            {"t", to_json(chi.t())},
            {"lambda", to_json(chi.lambda())}};
}

json to_json(const NonArchFactor& f) {
    auto terms = [](const std::vector<EulerTerm>& v) {
        json a = json::array();
        for (const auto& t : v) a.push_back({{"alpha", to_json(t.alpha)}, {"k", t.k}});
        return a;
    };
    return {{"kind", "nonarch"}, {"q", f.q},           {"c", to_json(f.c)},
            {"m", f.m},          {"num", terms(f.num)}, {"den", terms(f.den)}};
}

json to_json(const ArchFactor& f) {
    json g = json::array(), e = json::array();
    for (const auto& t : f.gammas) g.push_back({{"a", t.a}, {"b", to_json(t.b)}, {"mult", t.mult}});
    for (const auto& t : f.expos) e.push_back({{"base", t.base}, {"u", t.u}, {"v", to_json(t.v)}});
    return {{"kind", "arch"}, {"c", to_json(f.c)}, {"gammas", g}, {"expos", e}};
}

json to_json(const CChar& chi) { return {{"n", chi.n}, {"lambda", to_json(chi.lambda)}}; }

json to_json(const Comparison& c) {
    return {{"equal", c.equal}, {"max_deviation", c.max_deviation}, {"worst_s", to_json(c.worst_s)}};
}

json grid_to_json(const std::vector<cplx>& grid) {
    json a = json::array();
    for (cplx s : grid) a.push_back(to_json(s));
    return a;
}

json to_json(const Normalization& n) {
    return {{"applied", n.applied()},
            {"psi_shift", n.psi_shift},
            {"xi_shift", n.xi_shift},
            {"correction", to_json(n.correction)},
            {"correction_form", to_string(n.correction)}};
}

// ---- readers

cplx cplx_from_json(const json& j, const std::string& ptr) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2)
        return {real_from_json(j[0], child(ptr, size_t{0})), real_from_json(j[1], child(ptr, size_t{1}))};
    throw InputError(ptr, "expected a number or an [re, im] pair");
}

Angle angle_from_json(const json& j, const std::string& ptr) {
    i64 num = 0, den = 1;
    if (j.is_array() && j.size() == 2) {
        num = int_from_json(j[0], child(ptr, size_t{0}));
        den = int_from_json(j[1], child(ptr, size_t{1}));
    } else if (j.is_string()) {
        if (!parse_fraction(j.get<std::string>(), num, den)) throw InputError(ptr, "expected a fraction a/b");
    } else if (j.is_number_integer()) {
        num = j.get<i64>();
    } else {
        throw InputError(ptr, "expected an angle [num, den] or \"num/den\"");
    }
    if (den <= 0) throw InputError(ptr, "angle denominator must be positive");
    return Angle(num, den);
}

Rational rational_from_json(const json& j, const std::string& ptr) {
    Rational r;
    if (j.is_number_integer()) {
        r.num = j.get<i64>();
    } else if (j.is_string()) {
        if (!parse_fraction(j.get<std::string>(), r.num, r.den)) throw InputError(ptr, "expected a rational a/b");
    } else {
        throw InputError(ptr, "expected an integer or \"a/b\"");
    }
    if (r.den == 0 || r.num == 0) throw InputError(ptr, "rational must be nonzero with nonzero denominator");
    if (r.den < 0) {
        r.num = -r.num;
        r.den = -r.den;
    }
    return r;
}

LocalField field_from_json(const json& j, const std::string& ptr) {
    if (!j.is_object()) throw InputError(ptr, "field descriptor must be an object");
    for (const auto& [key, value] : j.items())
        if (key != "p" && key != "ext" && key != "precision") throw InputError(child(ptr, key), "unknown field key");
    const i64 p = int_from_json(require(j, "p", ptr), child(ptr, "p"));
    int N = default_precision();
    if (j.contains("precision")) N = static_cast<int>(int_from_json(j["precision"], child(ptr, "precision")));
    ExtType t = ExtType::none;
    if (j.contains("ext")) {
        const json& e = j["ext"];
        if (!e.is_string()) throw InputError(child(ptr, "ext"), "expected a string");
        try {
            t = parse_ext(e.get<std::string>());
        } catch (const std::exception&) {
            throw InputError(child(ptr, "ext"), "expected unramified, ramified-p or ramified-up");
        }
    }
    try {
        LocalField::ground(p, N);
    } catch (const DomainError& ex) {
        const bool bad_p = p < 3 || p % 2 == 0 || [&] {
            for (i64 d = 3; d * d <= p; d += 2)
                if (p % d == 0) return true;
            return false;
        }();
        throw InputError(child(ptr, bad_p ? "p" : "precision"), ex.what());
    }
    return LocalField::quadratic(p, t, N);
}

MultChar character_from_json(const json& j, const LocalField& K, const std::string& ptr) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "trivial") return MultChar::trivial(K);
        if (s == "omega") {
            if (!K.is_E()) throw InputError(ptr, "omega needs a quadratic extension");
            return omega_EF(K);
        }
        throw InputError(ptr, "unknown character shorthand '" + s + "'");
    }
    if (!j.is_object()) throw InputError(ptr, "character descriptor must be an object or a shorthand string");
    for (const auto& [key, value] : j.items())
        if (key != "field" && key != "conductor" && key != "unit_part" && key != "t" && key != "lambda")
            throw InputError(child(ptr, key), "unknown character key");
    std::string tag = K.is_E() ? "E" : "F";
    if (j.contains("field")) {
        if (!j["field"].is_string()) throw InputError(child(ptr, "field"), "expected \"F\" or \"E\"");
        tag = j["field"].get<std::string>();
        if (tag != "F" && tag != "E") throw InputError(child(ptr, "field"), "expected \"F\" or \"E\"");
        if (tag == "E" && !K.is_E()) throw InputError(child(ptr, "field"), "no quadratic extension given");
    }
    const LocalField L = tag == "E" ? K : K.base();
    int level = 0;
    if (j.contains("conductor")) {
        level = static_cast<int>(int_from_json(j["conductor"], child(ptr, "conductor")));
        if (level < 0 || level > L.precision() / 2) throw InputError(child(ptr, "conductor"), "conductor out of range");
    }
    std::vector<Angle> angles;
    if (j.contains("unit_part")) {
        const json& u = j["unit_part"];
        if (!u.is_array()) throw InputError(child(ptr, "unit_part"), "expected an array of angles");
        for (size_t i = 0; i < u.size(); ++i) angles.push_back(angle_from_json(u[i], child(child(ptr, "unit_part"), i)));
    } else if (level > 0) {
        throw InputError(child(ptr, "unit_part"), "missing field");
    }
    cplx t = 1.0;
    if (j.contains("t")) {
        const json& tj = j["t"];
        if (tj.is_object()) {
            t = angle_from_json(require(tj, "angle", child(ptr, "t")), child(child(ptr, "t"), "angle")).value();
        } else {
            t = cplx_from_json(tj, child(ptr, "t"));
        }
        if (std::abs(t) == 0.0) throw InputError(child(ptr, "t"), "t must be nonzero");
    }
    const cplx lambda = j.contains("lambda") ? cplx_from_json(j["lambda"], child(ptr, "lambda")) : cplx(0.0);
    try {
        return MultChar::from_generator_angles(L, level, std::move(angles), t, lambda);
    } catch (const DomainError& ex) {
        throw InputError(child(ptr, "unit_part"), ex.what());
    }
}

NonArchFactor nonarch_factor_from_json(const json& j, const std::string& ptr) {
    if (j.contains("kind") && j["kind"] != "nonarch") throw InputError(child(ptr, "kind"), "expected \"nonarch\"");
    NonArchFactor f;
    f.q = int_from_json(require(j, "q", ptr), child(ptr, "q"));
    if (f.q < 3) throw InputError(child(ptr, "q"), "q must be an odd prime power");
    f.c = cplx_from_json(require(j, "c", ptr), child(ptr, "c"));
    f.m = static_cast<int>(int_from_json(require(j, "m", ptr), child(ptr, "m")));
    auto terms = [&](const char* key) {
        std::vector<EulerTerm> out;
        const std::string p = child(ptr, key);
        const json& a = require(j, key, ptr);
        if (!a.is_array()) throw InputError(p, "expected an array");
        for (size_t i = 0; i < a.size(); ++i) {
            const std::string pi = child(p, i);
            out.push_back({cplx_from_json(require(a[i], "alpha", pi), child(pi, "alpha")),
                           static_cast<int>(int_from_json(require(a[i], "k", pi), child(pi, "k")))});
        }
        return out;
    };
    f.num = terms("num");
    f.den = terms("den");
    return f;
}

ArchFactor arch_factor_from_json(const json& j, const std::string& ptr) {
    if (j.contains("kind") && j["kind"] != "arch") throw InputError(child(ptr, "kind"), "expected \"arch\"");
    ArchFactor f;
    f.c = cplx_from_json(require(j, "c", ptr), child(ptr, "c"));
    const json& g = require(j, "gammas", ptr);
    const json& e = require(j, "expos", ptr);
    if (!g.is_array()) throw InputError(child(ptr, "gammas"), "expected an array");
    if (!e.is_array()) throw InputError(child(ptr, "expos"), "expected an array");
    for (size_t i = 0; i < g.size(); ++i) {
        const std::string pi = child(child(ptr, "gammas"), i);
        f.gammas.push_back({real_from_json(require(g[i], "a", pi), child(pi, "a")),
                            cplx_from_json(require(g[i], "b", pi), child(pi, "b")),
                            static_cast<int>(int_from_json(require(g[i], "mult", pi), child(pi, "mult")))});
    }
    for (size_t i = 0; i < e.size(); ++i) {
        const std::string pi = child(child(ptr, "expos"), i);
        f.expos.push_back({real_from_json(require(e[i], "base", pi), child(pi, "base")),
                           real_from_json(require(e[i], "u", pi), child(pi, "u")),
                           cplx_from_json(require(e[i], "v", pi), child(pi, "v"))});
    }
    return f;
}

CChar cchar_from_json(const json& j, const std::string& ptr) {
    if (j.is_string() && j.get<std::string>() == "trivial") return CChar{0.0, 0};
    if (!j.is_object()) throw InputError(ptr, "expected {\"n\": int, \"lambda\": [re, im]}");
    CChar c;
    c.n = static_cast<int>(int_from_json(require(j, "n", ptr), child(ptr, "n")));
    if (j.contains("lambda")) c.lambda = cplx_from_json(j["lambda"], child(ptr, "lambda"));
    return c;
}

std::vector<cplx> grid_from_json(const json& j, const std::string& ptr) {
    if (!j.is_array() || j.empty()) throw InputError(ptr, "expected a non-empty array of s values");
    std::vector<cplx> g;
    for (size_t i = 0; i < j.size(); ++i) g.push_back(cplx_from_json(j[i], child(ptr, i)));
    return g;
}

json parse_argument(const std::string& text, const std::string& ptr) {
    json j = json::parse(text, nullptr, false);
    if (!j.is_discarded()) return j;
    const bool word = !text.empty() && text.find_first_of("{}[]\":,") == std::string::npos;
    if (word) return text;
    throw InputError(ptr, "malformed JSON");
}

// ---- bundles

AddChar TateBundle::psi() const {
    const LocalField F = K.base();
    const FElem a = shift(F.fint(1), psi_shift);
    if (!K.is_E()) return AddChar::shifted(F, a);
    return AddChar::via_trace(K, a);
}

json to_json(const TateBundle& b) {
    return {{"field", to_json(b.K)}, {"char", to_json(b.chi)}, {"psi_shift", b.psi_shift}};
}

TateBundle tate_bundle_from_json(const json& j, const std::string& ptr) {
    if (!j.is_object()) throw InputError(ptr, "expected an object");
    TateBundle b;
    b.K = field_from_json(require(j, "field", ptr), child(ptr, "field"));
    const json& c = require(j, "char", ptr);
    b.chi = character_from_json(c, b.K, child(ptr, "char"));
    if (b.K.is_E() && !b.chi.field().is_E()) b.K = b.K.base();
    if (j.contains("psi_shift")) b.psi_shift = static_cast<int>(int_from_json(j["psi_shift"], child(ptr, "psi_shift")));
    return b;
}

AsaiInput AsaiBundle::input() const {
    const LocalField F = E.base();
    AsaiInput in = AsaiInput::make(E, mu, nu);
    in.psi = AddChar::shifted(F, shift(F.fint(1), psi_shift));
    const FElem s = FElem::from_rational(F.p(), xi_scale.num, xi_scale.den, F.precision());
    in.xi = E.mul(E.from_F(s), E.xi_canonical());
    in.chi = chi;
    in.tau = tau;
    in.kind = kind;
    return in;
}

json to_json(const AsaiBundle& b) {
    json j{{"field", to_json(b.E)},
           {"mu", to_json(b.mu)},
           {"nu", to_json(b.nu)},
           {"psi_shift", b.psi_shift},
           {"xi_scale", to_json(b.xi_scale)},
           {"kind", rep_kind_name(b.kind)}};
    if (b.chi) j["chi"] = to_json(*b.chi);
    if (b.tau) j["tau"] = {{"mu2", to_json(b.tau->mu2)}, {"nu2", to_json(b.tau->nu2)}, {"v2", to_json(b.tau->v2)}};
    return j;
}

AsaiBundle asai_bundle_from_json(const json& j, const std::string& ptr) {
    if (!j.is_object()) throw InputError(ptr, "expected an object");
    for (const auto& [key, value] : j.items())
        if (key != "field" && key != "mu" && key != "nu" && key != "psi_shift" && key != "xi_scale" &&
            key != "chi" && key != "tau" && key != "kind")
            throw InputError(child(ptr, key), "unknown bundle key");
    AsaiBundle b;
    b.E = field_from_json(require(j, "field", ptr), child(ptr, "field"));
    if (!b.E.is_E()) throw InputError(child(child(ptr, "field"), "ext"), "a quadratic extension is required");
    auto on_E = [&](const char* key) {
        MultChar c = character_from_json(require(j, key, ptr), b.E, child(ptr, key));
        if (!c.field().is_E()) throw InputError(child(child(ptr, key), "field"), "character must live on E");
        return c;
    };
    auto on_F = [&](const json& v, const std::string& p) {
        MultChar c = character_from_json(v, b.E.base(), p);
        return c;
    };
    b.mu = on_E("mu");
    b.nu = on_E("nu");
    if (j.contains("psi_shift")) b.psi_shift = static_cast<int>(int_from_json(j["psi_shift"], child(ptr, "psi_shift")));
    if (j.contains("xi_scale")) b.xi_scale = rational_from_json(j["xi_scale"], child(ptr, "xi_scale"));
    if (j.contains("chi") && !j["chi"].is_null()) b.chi = on_F(j["chi"], child(ptr, "chi"));
    if (j.contains("tau") && !j["tau"].is_null()) {
        const json& t = j["tau"];
        const std::string pt = child(ptr, "tau");
        TauData tau;
        tau.mu2 = on_F(require(t, "mu2", pt), child(pt, "mu2"));
        tau.nu2 = on_F(require(t, "nu2", pt), child(pt, "nu2"));
        if (t.contains("v2")) tau.v2 = cplx_from_json(t["v2"], child(pt, "v2"));
        b.tau = tau;
    }
    if (j.contains("kind")) {
        const json& k = j["kind"];
        if (k == "principal-series") b.kind = RepKind::principal_series;
        else if (k == "supercuspidal") b.kind = RepKind::supercuspidal;
        else throw InputError(child(ptr, "kind"), "expected principal-series or supercuspidal");
    }
    return b;
}

}  // namespace asai
