#pragma once

// Generated by tests/oracles/gen_frozen.py; do not edit.

#include <complex>

namespace asai::frozen {

using C = std::complex<double>;

// G(chi_k, psi_0) = sum over (Z/p^n)^x of chi_k(u) exp(2 pi i u / p^n), chi_k(g^j) = exp(2 pi i k j / phi(p^n)).
struct GaussCase {
    long p;
    int n;
    long g;
    long k;
    C value;
};

inline const GaussCase kGauss[] = {
    {3, 1, 2, 1, {0.0, 1.7320508075688773}},
    {3, 2, 2, 1, {-2.2981333293569341, 1.928362829059618}},
    {3, 2, 2, 2, {2.2981333293569341, 1.928362829059618}},
    {3, 2, 2, 4, {2.2981333293569341, -1.928362829059618}},
    {3, 3, 2, 1, {-3.7795443098727423, 3.5658161491737872}},
    {3, 3, 2, 2, {3.7795443098727423, 3.5658161491737872}},
    {3, 3, 2, 4, {1.19831521547293, 5.0560894616656127}},
    {5, 1, 2, 1, {-1.1755705045849463, 1.9021130325903071}},
    {5, 1, 2, 2, {2.2360679774997897, 0.0}},
    {5, 1, 2, 3, {1.1755705045849463, 1.9021130325903071}},
    {5, 2, 2, 1, {-4.9114362536434434, 0.93690657292862315}},
    {5, 2, 2, 2, {4.8429158056431556, 1.2434494358242739}},
    {5, 2, 2, 3, {-4.8429158056431556, 1.2434494358242739}},
    {5, 3, 2, 1, {-3.0516954120343922, 10.755796349511655}},
    {5, 3, 2, 2, {8.7034731211240272, 7.017802763676932}},
    {5, 3, 2, 3, {-9.3638481529819735, -6.1088745090970795}},
    {7, 1, 3, 1, {-2.4401333583455377, 1.0226187918717941}},
    {7, 1, 3, 2, {2.3704694055762006, -1.175106291884787}},
    {7, 1, 3, 3, {0.0, 2.6457513110645906}},
    {7, 2, 3, 1, {6.9425300967627228, 0.89514013179154207}},
    {7, 2, 3, 2, {-1.2646149502447926, 6.884820188473869}},
    {7, 2, 3, 3, {4.7061062318292175, 5.1819459795272088}},
    {7, 3, 3, 1, {14.265778947510391, 11.81048479194522}},
    {7, 3, 3, 2, {-4.5882735491594732, 17.942902380553809}},
    {7, 3, 3, 3, {-9.9608610265054245, 15.613495688366693}},
};

// Z(s, W, 1_(O+O)) for unramified mu(pi_E) = exp(2 pi i a), nu(pi_E) = exp(2 pi i b), on the default grid.
struct SphericalCase {
    long p;
    const char* ext;
    long a_num, a_den, b_num, b_den;
    C s[5];
    C zeta[5];
};

inline const SphericalCase kSpherical[] = {
    {3, "unramified", 0, 1, 0, 1,
     {{0.69999999999999996, 0.0}, {1.3, 0.0}, {2.1000000000000001, 0.5}, {0.40000000000000002, -0.80000000000000004}, {1.05, 0.0}},
     {{3.9324827103329462, 0.0}, {1.631668185274158, 0.0}, {1.0548819145823098, -0.12970076796224262}, {-0.24791532068497199, 1.2775244279545642}, {2.106992165587578, 0.0}}},
    {3, "unramified", 1, 5, 3, 7,
     {{0.69999999999999996, 0.0}, {1.3, 0.0}, {2.1000000000000001, 0.5}, {0.40000000000000002, -0.80000000000000004}, {1.05, 0.0}},
     {{0.51415699293319278, 0.34649560970663113}, {0.75450355315803265, 0.31736129065098458}, {0.96776872419087688, 0.26078099350259101}, {0.61573878679130935, -0.0036613268391325564}, {0.67117991044656639, 0.34201539478444703}}},
    {5, "ramified-p", 1, 3, 0, 1,
     {{0.69999999999999996, 0.0}, {1.3, 0.0}, {2.1000000000000001, 0.5}, {0.40000000000000002, -0.80000000000000004}, {1.05, 0.0}},
     {{1.1387795393934179, -0.17931127462266214}, {1.1020712219743412, -0.17353121363809791}, {1.0999630082889869, -0.17322885566278547}, {0.9712801858292028, -0.24002082072787102}, {1.1069562461532988, -0.17430040546302128}}},
    {3, "ramified-up", 1, 4, 2, 5,
     {{0.69999999999999996, 0.0}, {1.3, 0.0}, {2.1000000000000001, 0.5}, {0.40000000000000002, -0.80000000000000004}, {1.05, 0.0}},
     {{0.41058507061086593, -0.19235227586395774}, {0.61758609203618964, -0.053393810382897312}, {0.67502892778923474, 0.16677685136474112}, {0.43342531762839287, -1.0780372626581511}, {0.54676576341709882, -0.11624521813081749}}},
    {5, "unramified", 2, 9, 5, 6,
     {{0.69999999999999996, 0.0}, {1.3, 0.0}, {2.1000000000000001, 0.5}, {0.40000000000000002, -0.80000000000000004}, {1.05, 0.0}},
     {{1.2980825960422706, 0.023138293177896995}, {1.1231093708462891, -0.010680769615955814}, {1.0498473645862049, -0.040866108522313242}, {0.9801079451146334, 0.44759156738738825}, {1.173198003435673, -0.0018695795643055531}}},
};

// Spherical Whittaker function on GL_2(C) at diag(y, 1) and its zeta integral against the trivial character.
struct ArchWhittaker {
    double y;
    double value;
};

inline const ArchWhittaker kArchWhittaker[] = {
    {0.1, 0.3706422752463093},
    {0.5, 0.0057590693892249309},
    {1.0, 0.000015346120838439959},
    {1.7, 0.0000000030384053666686969},
};

struct ArchZeta {
    C s;
    C value;
};

inline const ArchZeta kArchZeta[] = {
    {{2.0, 0.0}, {0.15915494309189534, 0.0}},
    {{1.3, 0.40000000000000002}, {0.29573561568267944, -0.93085848479914234}},
    {{0.80000000000000004, -0.5}, {-2.2609332492095162, 4.2290470889637761}},
};

// sum_l binom(N, l) Gamma(z + l) Gamma(w - l)
struct GammaSum {
    int N;
    C z, w;
    C value;
};

inline const GammaSum kGammaSum[] = {
    {0, {1.7, 0.0}, {2.2000000000000002, 0.0}, {1.0011404191675414, 0.0}},
    {1, {2.0, 0.0}, {3.0, 0.0}, {4.0, 0.0}},
    {3, {0.59999999999999998, 0.90000000000000002}, {4.0999999999999996, -0.29999999999999999}, {9.9855964915675715, 0.43456423947269949}},
    {6, {1.3, 0.40000000000000002}, {5.7000000000000002, 0.0}, {-1779.0210832643451, -2246.7905076565921}},
    {6, {2.5, -1.1000000000000001}, {3.2000000000000002, 0.69999999999999996}, {2.5878843022591965, -4.750686754195902}},
};

}  // namespace asai::frozen
