#include "asai/padic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace asai {

namespace {
__extension__ typedef __int128 i128;
}

int default_precision() {
    static const int N = [] {
        if (const char* env = std::getenv("ASAI_PRECISION")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v >= 8 && v <= 60) return static_cast<int>(v);
        }
        return 12;
    }();
    return N;
}

i64 ipow(i64 b, int k) {
    i64 r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

i64 mulmod(i64 a, i64 b, i64 m) {
    i128 r = static_cast<i128>(a) * b % m;
    if (r < 0) r += m;
    return static_cast<i64>(r);
}

i64 powmod(i64 a, i64 e, i64 m) {
    i64 r = 1 % m;
    a %= m;
    if (a < 0) a += m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

i64 invmod(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = a % m;
    if (a1 < 0) a1 += m;
    while (a1 != 0) {
        i64 t = g / a1;
        i64 tmp = g - t * a1;
        g = a1;
        a1 = tmp;
        tmp = x - t * x1;
        x = x1;
        x1 = tmp;
    }
    if (g != 1) throw DomainError("invmod: not invertible");
    x %= m;
    return x < 0 ? x + m : x;
}

int vp(i64 n, i64 p) {
    if (n == 0) return FElem::kExact;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int legendre(i64 a, i64 p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

Angle::Angle(i64 n, i64 d) {
    if (d <= 0) throw DomainError("Angle: denominator must be positive");
    n %= d;
    if (n < 0) n += d;
    i64 g = std::gcd(n, d);
    if (g == 0) g = d;
    num = n / g;
    den = d / g;
}

Angle Angle::operator+(const Angle& o) const {
    i64 g = std::gcd(den, o.den);
    i64 l = den / g * o.den;
    i64 n = (static_cast<i128>(num) * (l / den) + static_cast<i128>(o.num) * (l / o.den)) % l;
    return Angle(n, l);
}

Angle Angle::operator-() const { return Angle(den - num, den); }
Angle Angle::operator-(const Angle& o) const { return *this + (-o); }

Angle Angle::operator*(i64 k) const {
    i64 kk = k % den;
    return Angle(static_cast<i64>(static_cast<i128>(num) * kk % den), den);
}

cplx Angle::value() const {
    if (num == 0) return {1.0, 0.0};
    // exact quarter turns avoid rounding noise in signs
    if (4 * num == den) return {0.0, 1.0};
    if (2 * num == den) return {-1.0, 0.0};
    if (4 * num == 3 * den) return {0.0, -1.0};
    double th = 2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(th), std::sin(th)};
}

// ---------------------------------------------------------------- FElem

FElem FElem::exact_zero(i64 p) { return zero_mod(p, kExact); }

FElem FElem::zero_mod(i64 p, int abs_prec) {
    FElem z;
    z.p = p;
    z.val = std::min(abs_prec, kExact);
    z.unit = 0;
    z.rel = 0;
    z.zero = true;
    return z;
}

FElem FElem::make(i64 p, int val, i64 unit, int rel) {
    if (rel <= 0) return zero_mod(p, val);
    i64 m = ipow(p, rel);
    unit %= m;
    if (unit < 0) unit += m;
    if (unit % p == 0) throw DomainError("FElem::make: unit divisible by p");
    FElem r;
    r.p = p;
    r.val = val;
    r.unit = unit;
    r.rel = rel;
    r.zero = false;
    return r;
}

FElem FElem::from_int(i64 p, i64 n, int N) {
    if (n == 0) return exact_zero(p);
    int v = vp(n, p);
    i64 u = n / ipow(p, v);
    return make(p, v, u, N);
}

FElem FElem::from_rational(i64 p, i64 num, i64 den, int N) {
    if (den == 0) throw DomainError("from_rational: zero denominator");
    return from_int(p, num, N) * inverse(from_int(p, den, N));
}

static FElem normalize_sum(i64 p, int v, i64 s, int relw, int ap) {
    if (relw <= 0) return FElem::zero_mod(p, ap);
    i64 m = ipow(p, relw);
    s %= m;
    if (s < 0) s += m;
    if (s == 0) return FElem::zero_mod(p, ap);
    int k = vp(s, p);
    return FElem::make(p, v + k, s / ipow(p, k), relw - k);
}

static FElem truncate_to(const FElem& a, int ap) {
    if (a.zero) return FElem::zero_mod(a.p, std::min(a.val, ap));
    if (a.val >= ap) return FElem::zero_mod(a.p, ap);
    int r = std::min(a.rel, ap - a.val);
    return FElem::make(a.p, a.val, a.unit, r);
}

FElem operator+(const FElem& a, const FElem& b) {
    if (a.p != b.p) throw DomainError("FElem: mismatched primes");
    int ap = std::min(a.abs_prec(), b.abs_prec());
    if (a.zero) return truncate_to(b, ap);
    if (b.zero) return truncate_to(a, ap);
    int v = std::min(a.val, b.val);
    if (v >= ap) return FElem::zero_mod(a.p, ap);
    int relw = ap - v;
    i64 m = ipow(a.p, relw);
    auto lift = [&](const FElem& x) -> i64 {
        int sh = x.val - v;
        if (sh >= relw) return 0;
        return mulmod(x.unit % m, ipow(x.p, sh), m);
    };
    i64 s = lift(a) + lift(b);
    return normalize_sum(a.p, v, s, relw, ap);
}

FElem operator-(const FElem& a) {
    if (a.zero) return a;
    return FElem::make(a.p, a.val, ipow(a.p, a.rel) - a.unit, a.rel);
}

FElem operator-(const FElem& a, const FElem& b) { return a + (-b); }

FElem operator*(const FElem& a, const FElem& b) {
    if (a.p != b.p) throw DomainError("FElem: mismatched primes");
    if (a.zero || b.zero) {
        if (a.is_exact_zero() || b.is_exact_zero()) return FElem::exact_zero(a.p);
        long long v = static_cast<long long>(a.val) + b.val;
        return FElem::zero_mod(a.p, static_cast<int>(std::min<long long>(v, FElem::kExact)));
    }
    int r = std::min(a.rel, b.rel);
    i64 m = ipow(a.p, r);
    return FElem::make(a.p, a.val + b.val, mulmod(a.unit % m, b.unit % m, m), r);
}

FElem inverse(const FElem& a) {
    if (a.zero) throw DomainError("inverse of zero");
    i64 m = ipow(a.p, a.rel);
    return FElem::make(a.p, -a.val, invmod(a.unit, m), a.rel);
}

FElem shift(const FElem& a, int k) {
    FElem r = a;
    if (r.zero) {
        if (!r.is_exact_zero()) r.val += k;
        return r;
    }
    r.val += k;
    return r;
}

bool same_value(const FElem& a, const FElem& b) {
    FElem d = a - b;
    return d.zero;
}

i64 residue(const FElem& a, int A) {
    if (A <= 0) return 0;
    i64 m = ipow(a.p, A);
    if (a.zero) {
        if (a.val < A) throw PrecisionError("residue: zero known only modulo p^" + std::to_string(a.val));
        return 0;
    }
    if (a.val < 0) throw DomainError("residue: element is not integral");
    if (a.val >= A) return 0;
    if (a.abs_prec() < A)
        throw PrecisionError("residue: need p^" + std::to_string(A) + ", have p^" +
                             std::to_string(a.abs_prec()));
    return mulmod(a.unit % m, ipow(a.p, a.val), m);
}

Angle frac_p(const FElem& a) {
    if (a.zero) {
        if (a.val < 0) throw PrecisionError("frac_p: zero with negative absolute precision");
        return {};
    }
    if (a.val >= 0) return {};
    if (a.abs_prec() < 0)
        throw PrecisionError("frac_p: precision exhausted (abs precision " + std::to_string(a.abs_prec()) + ")");
    int k = -a.val;
    i64 m = ipow(a.p, k);
    return Angle(a.unit % m, m);
}

std::string to_string(const FElem& a) {
    std::ostringstream os;
    if (a.zero) {
        if (a.is_exact_zero())
            os << "0";
        else
            os << "O(" << a.p << "^" << a.val << ")";
        return os.str();
    }
    os << a.unit;
    if (a.val != 0) os << "*" << a.p << "^" << a.val;
    return os.str();
}

// ---------------------------------------------------------------- LocalField

std::string ext_name(ExtType t) {
    switch (t) {
        case ExtType::none: return "none";
        case ExtType::unramified: return "unramified";
        case ExtType::ramified_p: return "ramified-p";
        case ExtType::ramified_up: return "ramified-up";
    }
    return "none";
}

ExtType parse_ext(const std::string& s) {
    if (s == "none" || s == "F") return ExtType::none;
    if (s == "unramified") return ExtType::unramified;
    if (s == "ramified-p") return ExtType::ramified_p;
    if (s == "ramified-up") return ExtType::ramified_up;
    throw DomainError("unknown extension type '" + s + "'");
}

static void check_field_params(i64 p, int N) {
    if (p < 3 || p % 2 == 0) throw DomainError("p must be an odd prime");
    for (i64 k = 3; k * k <= p; k += 2)
        if (p % k == 0) throw DomainError("p must be an odd prime");
    if (N < 8) throw DomainError("precision must be at least 8");
    // p^N and products of two residues must stay inside 63 bits
    long double lim = std::pow(static_cast<long double>(p), N);
    if (lim >= 4.0e18L) throw DomainError("p^precision exceeds 62 bits");
}

LocalField LocalField::ground(i64 p, int N) {
    check_field_params(p, N);
    LocalField K;
    K.p_ = p;
    K.q_ = p;
    K.N_ = N;
    K.e_ = K.f_ = 1;
    K.ext_ = ExtType::none;
    K.u_ = 2;
    while (legendre(K.u_, p) != -1) ++K.u_;
    K.d_ = 1;
    K.dF_ = FElem::from_int(p, 1, N);
    return K;
}

LocalField LocalField::quadratic(i64 p, ExtType t, int N) {
    LocalField K = ground(p, N);
    if (t == ExtType::none) return K;
    K.ext_ = t;
    switch (t) {
        case ExtType::unramified:
            K.e_ = 1;
            K.f_ = 2;
            K.q_ = p * p;
            K.d_ = K.u_;
            break;
        case ExtType::ramified_p:
            K.e_ = 2;
            K.f_ = 1;
            K.d_ = p;
            break;
        case ExtType::ramified_up:
            K.e_ = 2;
            K.f_ = 1;
            K.d_ = p * K.u_;
            break;
        case ExtType::none: break;
    }
    K.dF_ = FElem::from_int(p, K.d_, N);
    return K;
}

EElem LocalField::zero() const { return {FElem::exact_zero(p_), FElem::exact_zero(p_)}; }
EElem LocalField::one() const { return from_int(1); }
EElem LocalField::from_int(i64 n) const { return {fint(n), FElem::exact_zero(p_)}; }
EElem LocalField::from_F(const FElem& a) const { return {a, FElem::exact_zero(p_)}; }

EElem LocalField::make(i64 a, i64 b) const {
    if (!is_E() && b != 0) throw DomainError("ground field element with sqrt(d) part");
    return {fint(a), fint(b)};
}

EElem LocalField::make(const FElem& a, const FElem& b) const {
    if (!is_E() && !b.is_zero()) throw DomainError("ground field element with sqrt(d) part");
    return {a, b};
}

EElem LocalField::sqrt_d() const {
    if (!is_E()) throw DomainError("sqrt(d) requested in the ground field");
    return make(0, 1);
}

EElem LocalField::add(const EElem& x, const EElem& y) const { return {x.a + y.a, x.b + y.b}; }
EElem LocalField::sub(const EElem& x, const EElem& y) const { return {x.a - y.a, x.b - y.b}; }
EElem LocalField::neg(const EElem& x) const { return {-x.a, -x.b}; }

EElem LocalField::mul(const EElem& x, const EElem& y) const {
    if (!is_E()) return {x.a * y.a, FElem::exact_zero(p_)};
    return {x.a * y.a + dF_ * (x.b * y.b), x.a * y.b + x.b * y.a};
}

EElem LocalField::conj(const EElem& x) const { return {x.a, -x.b}; }

FElem LocalField::trace(const EElem& x) const {
    if (!is_E()) return x.a;
    return fint(2) * x.a;
}

FElem LocalField::norm(const EElem& x) const {
    if (!is_E()) return x.a;
    return x.a * x.a - dF_ * (x.b * x.b);
}

EElem LocalField::inv(const EElem& x) const {
    if (is_zero(x)) throw DomainError("inverse of zero");
    if (!is_E()) return {inverse(x.a), FElem::exact_zero(p_)};
    FElem ninv = inverse(norm(x));
    EElem c = conj(x);
    return {c.a * ninv, c.b * ninv};
}

EElem LocalField::pow(const EElem& x, i64 k) const {
    EElem base = k < 0 ? inv(x) : x;
    i64 e = k < 0 ? -k : k;
    EElem r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool LocalField::is_zero(const EElem& x) const { return x.a.is_zero() && x.b.is_zero(); }

bool LocalField::equal(const EElem& x, const EElem& y) const { return is_zero(sub(x, y)); }

int LocalField::valuation(const EElem& x) const {
    if (is_zero(x)) throw DomainError("valuation of zero");
    // weights: ord_K(a) = e*ord_p(a); ord_K(b sqrt d) = e*ord_p(b) + (ramified ? 1 : 0)
    const int wb = ramified() ? 1 : 0;
    auto oa = [&](const FElem& a) { return e_ * a.val; };
    auto ob = [&](const FElem& b) { return e_ * b.val + wb; };
    int best = FElem::kExact;
    if (!x.a.is_zero()) best = std::min(best, oa(x.a));
    if (is_E() && !x.b.is_zero()) best = std::min(best, ob(x.b));
    if (x.a.is_zero() && !x.a.is_exact_zero() && oa(x.a) <= best)
        throw PrecisionError("valuation: precision exhausted");
    if (is_E() && x.b.is_zero() && !x.b.is_exact_zero() && ob(x.b) <= best)
        throw PrecisionError("valuation: precision exhausted");
    return best;
}

EElem LocalField::pi_pow(int k) const {
    if (!ramified()) return from_F(FElem::make(p_, k, 1, N_));
    int r = ((k % 2) + 2) % 2;
    int j = (k - r) / 2;
    // d = p*w
    i64 w = d_ / p_;
    FElem dj = FElem::make(p_, j, j >= 0 ? powmod(w, j, ipow(p_, N_)) : invmod(powmod(w, -j, ipow(p_, N_)), ipow(p_, N_)), N_);
    if (r == 0) return from_F(dj);
    return {FElem::exact_zero(p_), dj};
}

EElem LocalField::unit_part(const EElem& x) const { return mul(x, pi_pow(-valuation(x))); }

EElem LocalField::xi_canonical() const {
    if (!is_E()) throw DomainError("xi requires a quadratic extension");
    if (!ramified()) return sqrt_d();
    return {FElem::exact_zero(p_), inverse(fint(p_))};
}

std::pair<int, int> LocalField::residue_shape(int n) const {
    if (n < 0) throw DomainError("residue level must be non-negative");
    if (!is_E()) return {n, 0};
    if (!ramified()) return {n, n};
    return {(n + 1) / 2, n / 2};
}

i64 LocalField::residue_count(int n) const {
    auto [A, B] = residue_shape(n);
    return ipow(p_, A + B);
}

i64 LocalField::residue_key(const EElem& x, int n) const {
    auto [A, B] = residue_shape(n);
    if (A > N_) throw PrecisionError("residue level " + std::to_string(n) + " exceeds working precision");
    i64 ka = residue(x.a, A);
    i64 kb = is_E() ? residue(x.b, B) : 0;
    if (!is_E() && !x.b.is_zero()) throw DomainError("ground field element with sqrt(d) part");
    return ka + ipow(p_, A) * kb;
}

EElem LocalField::from_key(i64 key, int n) const {
    auto [A, B] = residue_shape(n);
    i64 pa = ipow(p_, A);
    i64 a = key % pa, b = key / pa;
    return {fint(a), fint(b)};
}

bool LocalField::key_is_unit(i64 key, int n) const {
    if (n == 0) return true;
    auto [A, B] = residue_shape(n);
    i64 pa = ipow(p_, A);
    i64 a = key % pa, b = key / pa;
    if (!is_E() || ramified()) return a % p_ != 0;
    return (a % p_ != 0) || (b % p_ != 0);
}

std::vector<EElem> LocalField::residues(int n) const {
    if (n > N_) throw PrecisionError("residues: level exceeds working precision");
    i64 cnt = residue_count(n);
    std::vector<EElem> out;
    out.reserve(static_cast<size_t>(cnt));
    for (i64 k = 0; k < cnt; ++k) out.push_back(from_key(k, n));
    return out;
}

std::vector<EElem> LocalField::unit_residues(int n) const {
    if (n > N_) throw PrecisionError("unit_residues: level exceeds working precision");
    i64 cnt = residue_count(n);
    std::vector<EElem> out;
    for (i64 k = 0; k < cnt; ++k)
        if (key_is_unit(k, n)) out.push_back(from_key(k, n));
    return out;
}

std::vector<EElem> LocalField::shell_representatives(int v, int m) const {
    if (m < 1) throw DomainError("shell_representatives: modulus must be >= 1");
    if (m > N_) throw PrecisionError("shell_representatives: modulus exceeds working precision");
    EElem pv = pi_pow(v);
    std::vector<EElem> out = unit_residues(m);
    for (auto& u : out) u = mul(pv, u);
    return out;
}

std::string LocalField::to_string(const EElem& x) const {
    if (!is_E()) return asai::to_string(x.a);
    return asai::to_string(x.a) + " + (" + asai::to_string(x.b) + ")*sqrt(" + std::to_string(d_) + ")";
}

std::string LocalField::describe() const {
    if (!is_E()) return "Q_" + std::to_string(p_);
    return "Q_" + std::to_string(p_) + "(sqrt(" + std::to_string(d_) + "))";
}

}  // namespace asai
