#pragma once

// Twisted Kloosterman-type sums
//
//   Kl_{l,f}(xi, n) = sum over a mod 4lf^2 with f^2 | a^2-4n and
//                     (a^2-4n)/f^2 = 0,1 mod 4 of
//                     ((a^2-4n)/f^2 / l) e(a xi / (4lf^2))
//
// and the Dirichlet series they generate at xi = 0,
//
//   D(z;n) = sum_f f^{-(2z+1)} sum_l Kl_{l,f}(0,n) l^{-(z+1)}
//          = 4 zeta(2z)/zeta(z+1) prod_{p|n} (1-p^{-z(v_p(n)+1)})/(1-p^{-z}),
//
// the factorization coming from CRT multiplicativity of Kl_{l,f}(0,n)/4
// over coprime blocks together with closed-form local factors.  The
// truncated double sum carries a certified tail bound assembled from
// elementary local bounds:
//   - odd p, p∤n:  |Kl_{p,1}(0,n)| = p * |sum_a ((a^2-4n)/p)| = p  (the
//     complete quadratic character sum over a mod p equals -1),
//   - |Kl_{2^v,1}(0,n)| = 2^{v+1} exactly (for odd a, (a^2-4n / 2) is the
//     constant (1-4n mod 8 / 2)),
//   - for f-parts, the term count is controlled by the number of square
//     roots of 4n modulo p^{2u}.
// The bound series is multiplicative, so its total is an Euler product and
// the tail is (product) - (boxed partial sum), both computed numerically.

#include <vector>

#include "elltrace/arith.hpp"
#include "elltrace/estimate.hpp"
#include "elltrace/gamma_zeta.hpp"

namespace elltrace {

struct KloostermanSpec {
    i64 l = 1;
    i64 f = 1;
    i64 xi = 0;
    i64 n = 1;
};

inline constexpr i64 kKlDefaultMaxModulus = 10000000;

// Admissible residues a mod 4lf^2 and their character values; the xi
// dependence of Kl is a pure phase over this fixed support.
struct KlSupport {
    i64 modulus = 4;
    std::vector<i64> a;
    std::vector<signed char> chi;
};

KlSupport kl_support(i64 l, i64 f, i64 n, i64 max_modulus = kKlDefaultMaxModulus);
cplx kl_eval(const KlSupport& s, i64 xi);

// Kl_{l,f}(xi, n); throws BoundExceeded if 4lf^2 > max_modulus.
cplx kl(const KloostermanSpec& spec, i64 max_modulus = kKlDefaultMaxModulus);

// Independent re-derivation (reverse enumeration, no character table).
cplx kl_second_route(const KloostermanSpec& spec, i64 max_modulus = kKlDefaultMaxModulus);

// Fast real-valued xi = 0 evaluation.
double kl0(i64 l, i64 f, i64 n, i64 max_modulus = kKlDefaultMaxModulus);

// Classical S(a,b;c) = sum_{x mod c, gcd(x,c)=1} e((ax + b x^{-1})/c).
cplx classical_kloosterman(i64 a, i64 b, i64 c);

struct EulerFactorQuery {
    i64 p = 2;
    cplx z{2.0, 0.0};
    i64 n = 1;
    int vp = 0;  // v_p(n)
};

// Closed-form local factor D_p(z;n).
cplx euler_factor(const EulerFactorQuery& q);

// D(z;n) assembled from zeta and the p | n corrections; Re(z) > 1/2.
cplx euler_product(cplx z, i64 n);

struct DSeriesResult {
    cplx value{0.0, 0.0};
    double tail_bound = 0.0;  // certified |D(z;n) - value|
    i64 f_max = 0;
    i64 l_max = 0;
};

// Truncated double sum with certified tail; requires Re(z) >= 1.5.
DSeriesResult dseries_truncated(cplx z, i64 n, i64 f_max, i64 l_max);

// Certified bound on |sum over (l,f) outside the box| / 4 assembled from the
// multiplicative local bounds (exposed for tests).
double dseries_tail_bound(double sigma, i64 n, i64 f_max, i64 l_max);

}  // namespace elltrace
