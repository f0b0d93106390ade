#pragma once

#include <map>
#include <random>
#include <vector>

#include "asai/characters.hpp"
#include "asai/padic.hpp"

namespace asai::testing {

// Hensel lift of a square root of n modulo p^N (n a nonzero square mod p).
inline FElem hensel_sqrt(i64 p, i64 n, int N) {
    i64 m = ipow(p, N);
    n %= m;
    if (n < 0) n += m;
    i64 r = 1;
    while ((r * r - n) % p != 0) ++r;
    for (int k = 1; k < N; ++k) {
        i64 pk = ipow(p, k + 1);
        for (i64 t = 0; t < p; ++t) {
            i64 c = r + t * ipow(p, k);
            if ((mulmod(c, c, pk) - n % pk + pk) % pk == 0) {
                r = c;
                break;
            }
        }
    }
    return FElem::from_int(p, r % m, N);
}

inline EElem random_unit(const LocalField& K, std::mt19937_64& rng) {
    std::uniform_int_distribution<i64> dig(0, ipow(K.p(), 6) - 1);
    EElem u;
    do {
        u = K.make(dig(rng), K.is_E() ? dig(rng) : 0);
    } while (K.is_zero(u) || K.valuation(u) != 0);
    return u;
}

inline EElem random_element(const LocalField& K, std::mt19937_64& rng, int vlo = -3, int vhi = 3) {
    std::uniform_int_distribution<int> vd(vlo, vhi);
    return K.mul(random_unit(K, rng), K.pi_pow(vd(rng)));
}

inline std::vector<LocalField> all_fields(i64 p) {
    return {LocalField::ground(p), LocalField::quadratic(p, ExtType::unramified),
            LocalField::quadratic(p, ExtType::ramified_p), LocalField::quadratic(p, ExtType::ramified_up)};
}

inline std::vector<LocalField> extensions(i64 p) {
    return {LocalField::quadratic(p, ExtType::unramified), LocalField::quadratic(p, ExtType::ramified_p),
            LocalField::quadratic(p, ExtType::ramified_up)};
}

inline bool close(cplx a, cplx b, double tol = 1e-10) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

// chi(g^j) = exp(2 pi i k j / phi) on (Z/p^n)^x, read off through a brute-force discrete log.
inline MultChar dirichlet(const LocalField& F, i64 g, i64 k, int n) {
    const i64 m = ipow(F.p(), n);
    const i64 phi = m / F.p() * (F.p() - 1);
    std::map<i64, i64> dlog;
    i64 x = 1;
    for (i64 j = 0; j < phi; ++j, x = x * g % m) dlog[x] = j;
    return MultChar::from_unit_function(
        F, n, [&](const EElem& u) { return Angle(k * dlog.at(residue(u.a, n)) % phi, phi); }, 1.0);
}

}  // namespace asai::testing
