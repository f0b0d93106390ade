#pragma once

#include <functional>
#include <random>
#include <vector>

#include "asai/padic.hpp"
#include "asai/unit_group.hpp"

namespace asai {

// chi(x) = t^ord(x) * unit_part(x / pi^ord(x)) * |x|^lambda.
// The unit part is exact: one angle per generator of UnitGroup(K, conductor).
class MultChar {
public:
    MultChar() : MultChar(LocalField::ground(3)) {}
    explicit MultChar(const LocalField& K) : K_(K) {}

    static MultChar trivial(const LocalField& K) { return MultChar(K); }
    static MultChar unramified(const LocalField& K, cplx t, cplx lambda = 0.0);
    // Builds a character from its values on units at the given level; the
    // conductor is recomputed and the data re-expressed at the minimal level.
    static MultChar from_unit_function(const LocalField& K, int level,
                                       const std::function<Angle(const EElem&)>& unit_angle, cplx t,
                                       cplx lambda = 0.0);
    static MultChar from_generator_angles(const LocalField& K, int level, std::vector<Angle> angles, cplx t,
                                          cplx lambda = 0.0);

    const LocalField& field() const { return K_; }
    int conductor() const { return level_; }
    bool ramified() const { return level_ > 0; }
    const std::vector<Angle>& unit_angles() const { return unit_; }
    cplx t() const { return t_; }
    cplx lambda() const { return lambda_; }
    // chi(pi) including the |.|^lambda part.
    cplx at_uniformizer() const;

    Angle unit_angle(const EElem& u) const;
    cplx unit_value(const EElem& u) const { return unit_angle(u).value(); }
    cplx operator()(const EElem& x) const;
    cplx operator()(i64 n) const { return (*this)(K_.from_int(n)); }
    // Values on the units of level m >= conductor, re-expressed as generator angles.
    std::vector<Angle> angles_at_level(int m) const;

    MultChar with_t(cplx t) const;
    MultChar with_lambda(cplx lambda) const;
    // chi * |.|^z
    MultChar twist_abs(cplx z) const { return with_lambda(lambda_ + z); }

private:
    LocalField K_;
    int level_ = 0;
    std::vector<Angle> unit_;
    cplx t_{1.0, 0.0};
    cplx lambda_{0.0, 0.0};
};

MultChar operator*(const MultChar& a, const MultChar& b);
MultChar inverse(const MultChar& a);
MultChar power(const MultChar& a, int k);
// Equality as characters: same conductor, same unit values, same value at pi and same |.| exponent.
bool same_character(const MultChar& a, const MultChar& b, double tol = 1e-12);

MultChar restrict_to_F(const MultChar& chi);
// M defaults to e * c(chi), the smallest E-level that sees all of chi's unit data.
MultChar extend_from_F(const MultChar& chi, const LocalField& E, int M = -1);
MultChar sigma_conjugate(const MultChar& chi);
MultChar omega_EF(const LocalField& E);
MultChar compose_norm(const MultChar& chi, const LocalField& E);

// Random character of conductor <= max_conductor with unitary t.
MultChar random_character(const LocalField& K, int max_conductor, std::mt19937_64& rng,
                          bool allow_lambda = false);
MultChar random_unramified(const LocalField& K, std::mt19937_64& rng, bool allow_lambda = false);

// psi(x) = psi_0(Tr_{K/Q_p}(b x)), psi_0(y) = exp(2 pi i frac_p(y)).
class AddChar {
public:
    AddChar() : AddChar(LocalField::ground(3)) {}
    explicit AddChar(const LocalField& K) : AddChar(K, K.one()) {}
    AddChar(const LocalField& K, const EElem& b);

    static AddChar standard(const LocalField& K) { return AddChar(K); }
    // psi^a on F.
    static AddChar shifted(const LocalField& F, const FElem& a);
    // psi_xi(x) = psi^a(tr_{E/F}(xi x)).
    static AddChar via_trace_xi(const LocalField& E, const FElem& a, const EElem& xi);
    // psi^a o tr_{E/F}.
    static AddChar via_trace(const LocalField& E, const FElem& a);

    const LocalField& field() const { return K_; }
    const EElem& multiplier() const { return b_; }
    Angle angle(const EElem& x) const;
    cplx operator()(const EElem& x) const { return angle(x).value(); }
    // x -> psi(a x)
    AddChar scaled(const EElem& a) const { return AddChar(K_, K_.mul(b_, a)); }
    int conductor() const { return cond_; }

private:
    LocalField K_;
    EElem b_;
    int cond_ = 0;
    int compute_conductor() const;
};

}  // namespace asai
