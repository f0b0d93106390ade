#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace asai {

using i64 = std::int64_t;
using cplx = std::complex<double>;

class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Working precision in p-adic digits. ASAI_PRECISION overrides the default of 12.
int default_precision();

i64 ipow(i64 b, int k);
i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 a, i64 e, i64 m);
i64 invmod(i64 a, i64 m);
int vp(i64 n, i64 p);
int legendre(i64 a, i64 p);

// Exact element of Q/Z, used for roots of unity exp(2 pi i num/den).
struct Angle {
    i64 num = 0;
    i64 den = 1;

    Angle() = default;
    Angle(i64 n, i64 d);
    Angle operator+(const Angle& o) const;
    Angle operator-(const Angle& o) const;
    Angle operator-() const;
    Angle operator*(i64 k) const;
    bool operator==(const Angle& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Angle& o) const { return !(*this == o); }
    bool is_zero() const { return num == 0; }
    cplx value() const;
};

// Element of Q_p stored as p^val * unit with unit known modulo p^rel.
// A zero carries its absolute precision in val.
struct FElem {
    static constexpr int kExact = 1 << 24;

    i64 p = 3;
    int val = kExact;
    i64 unit = 0;
    int rel = 0;
    bool zero = true;

    static FElem exact_zero(i64 p);
    static FElem zero_mod(i64 p, int abs_prec);
    static FElem from_int(i64 p, i64 n, int N);
    static FElem from_rational(i64 p, i64 num, i64 den, int N);
    static FElem make(i64 p, int val, i64 unit, int rel);

    int abs_prec() const { return zero ? val : val + rel; }
    bool is_zero() const { return zero; }
    bool is_exact_zero() const { return zero && val >= kExact; }
};

FElem operator+(const FElem& a, const FElem& b);
FElem operator-(const FElem& a);
FElem operator-(const FElem& a, const FElem& b);
FElem operator*(const FElem& a, const FElem& b);
FElem inverse(const FElem& a);
FElem shift(const FElem& a, int k);  // multiply by p^k
bool same_value(const FElem& a, const FElem& b);

// Value modulo p^A for an integral element.
i64 residue(const FElem& a, int A);
// Fractional part as an exact angle; requires abs precision >= 0.
Angle frac_p(const FElem& a);
std::string to_string(const FElem& a);

// a + b sqrt(d); for the ground field b is an exact zero.
struct EElem {
    FElem a;
    FElem b;
};

enum class ExtType { none, unramified, ramified_p, ramified_up };

std::string ext_name(ExtType t);
ExtType parse_ext(const std::string& s);

class LocalField {
public:
    static LocalField ground(i64 p, int N = default_precision());
    static LocalField quadratic(i64 p, ExtType t, int N = default_precision());

    bool is_E() const { return ext_ != ExtType::none; }
    ExtType ext() const { return ext_; }
    i64 p() const { return p_; }
    i64 q() const { return q_; }
    int e() const { return e_; }
    int f() const { return f_; }
    int precision() const { return N_; }
    i64 nonresidue() const { return u_; }
    i64 d() const { return d_; }
    bool ramified() const { return e_ == 2; }
    LocalField base() const { return ground(p_, N_); }

    EElem zero() const;
    EElem one() const;
    EElem from_int(i64 n) const;
    EElem from_F(const FElem& a) const;
    EElem make(i64 a, i64 b) const;
    EElem make(const FElem& a, const FElem& b) const;
    EElem sqrt_d() const;
    FElem fint(i64 n) const { return FElem::from_int(p_, n, N_); }

    EElem add(const EElem& x, const EElem& y) const;
    EElem sub(const EElem& x, const EElem& y) const;
    EElem neg(const EElem& x) const;
    EElem mul(const EElem& x, const EElem& y) const;
    EElem inv(const EElem& x) const;
    EElem div(const EElem& x, const EElem& y) const { return mul(x, inv(y)); }
    EElem pow(const EElem& x, i64 k) const;
    EElem conj(const EElem& x) const;
    FElem trace(const EElem& x) const;
    FElem norm(const EElem& x) const;
    bool is_zero(const EElem& x) const;
    bool equal(const EElem& x, const EElem& y) const;

    int valuation(const EElem& x) const;
    EElem uniformizer() const { return pi_pow(1); }
    EElem pi_pow(int k) const;
    EElem unit_part(const EElem& x) const;
    // Trace-zero element with c(psi_0 o tr(xi .)) = 0.
    EElem xi_canonical() const;

    // O/pi^n is stored as pairs (a mod p^A, b mod p^B).
    std::pair<int, int> residue_shape(int n) const;
    i64 residue_count(int n) const;
    i64 residue_key(const EElem& x, int n) const;
    EElem from_key(i64 key, int n) const;
    bool key_is_unit(i64 key, int n) const;
    std::vector<EElem> residues(int n) const;
    std::vector<EElem> unit_residues(int n) const;
    // Representatives of {ord = v} modulo pi^(v+m).
    std::vector<EElem> shell_representatives(int v, int m) const;

    std::string to_string(const EElem& x) const;
    std::string describe() const;

    bool operator==(const LocalField& o) const {
        return p_ == o.p_ && ext_ == o.ext_ && N_ == o.N_;
    }
    bool operator!=(const LocalField& o) const { return !(*this == o); }

private:
    i64 p_ = 3, q_ = 3, u_ = 2, d_ = 1;
    int e_ = 1, f_ = 1, N_ = 12;
    ExtType ext_ = ExtType::none;
    FElem dF_;
};

}  // namespace asai
