#include "elltrace/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace elltrace {

namespace {

i64 modpos(i64 a, i64 m) { return ((a % m) + m) % m; }

// (x/l) is periodic in x mod (l odd ? l : 8l)
i64 chi_period(i64 l) { return (l % 2 == 0) ? 8 * l : l; }

std::vector<signed char> chi_table(i64 l) {
    i64 m = chi_period(l);
    std::vector<signed char> tab(m);
    for (i64 x = 0; x < m; ++x) tab[x] = static_cast<signed char>(kronecker(x, l));
    return tab;
}

void check_modulus(i64 l, i64 f, i64 max_modulus) {
    if (l < 1 || f < 1) throw std::invalid_argument("kloosterman: l, f must be >= 1");
    if (4 * l * f * f > max_modulus) throw BoundExceeded("kloosterman: 4lf^2 over enumeration bound");
}

}  // namespace

KlSupport kl_support(i64 l, i64 f, i64 n, i64 max_modulus) {
    check_modulus(l, f, max_modulus);
    const i64 M = 4 * l * f * f, ff = f * f;
    auto tab = chi_table(l);
    const i64 per = static_cast<i64>(tab.size());
    KlSupport s;
    s.modulus = M;
    for (i64 a = 0; a < M; ++a) {
        i64 d = a * a - 4 * n;
        if (modpos(d, ff) != 0) continue;
        i64 e = d / ff;
        i64 r4 = modpos(e, 4);
        if (r4 > 1) continue;
        signed char c = tab[modpos(e, per)];
        if (c == 0) continue;
        s.a.push_back(a);
        s.chi.push_back(c);
    }
    return s;
}

cplx kl_eval(const KlSupport& s, i64 xi) {
    double sum_re = 0, sum_im = 0;
    const double w = 2.0 * M_PI * static_cast<double>(modpos(xi, s.modulus)) /
                     static_cast<double>(s.modulus);
    for (std::size_t i = 0; i < s.a.size(); ++i) {
        double ph = w * static_cast<double>(s.a[i]);
        sum_re += s.chi[i] * std::cos(ph);
        sum_im += s.chi[i] * std::sin(ph);
    }
    return {sum_re, sum_im};
}

cplx kl(const KloostermanSpec& spec, i64 max_modulus) {
    return kl_eval(kl_support(spec.l, spec.f, spec.n, max_modulus), spec.xi);
}

cplx kl_second_route(const KloostermanSpec& spec, i64 max_modulus) {
    check_modulus(spec.l, spec.f, max_modulus);
    const i64 M = 4 * spec.l * spec.f * spec.f, ff = spec.f * spec.f;
    cplx sum{0, 0};
    for (i64 a = M - 1; a >= 0; --a) {
        i64 d = a * a - 4 * spec.n;
        if (modpos(d, ff) != 0) continue;
        i64 e = d / ff;
        if (modpos(e, 4) > 1) continue;
        int c = kronecker(e, spec.l);
        if (c == 0) continue;
        double ph = 2.0 * M_PI * static_cast<double>(modpos(a * modpos(spec.xi, M), M)) /
                    static_cast<double>(M);
        sum += static_cast<double>(c) * std::exp(cplx(0, ph));
    }
    return sum;
}

double kl0(i64 l, i64 f, i64 n, i64 max_modulus) {
    check_modulus(l, f, max_modulus);
    const i64 M = 4 * l * f * f, ff = f * f;
    auto tab = chi_table(l);
    const i64 per = static_cast<i64>(tab.size());
    auto term = [&](i64 a) -> i64 {
        i64 d = a * a - 4 * n;
        if (modpos(d, ff) != 0) return 0;
        i64 e = d / ff;
        if (modpos(e, 4) > 1) return 0;
        return tab[modpos(e, per)];
    };
    // summand(a) = summand(M - a): the character argument shifts by
    // 4l(M - 2a), a multiple of the character period
    i64 total = term(0) + term(M / 2);
    for (i64 a = 1; a < (M + 1) / 2; ++a) total += 2 * term(a);
    return static_cast<double>(total);
}

cplx classical_kloosterman(i64 a, i64 b, i64 c) {
    if (c < 1) throw std::invalid_argument("classical_kloosterman: c must be >= 1");
    cplx sum{0, 0};
    for (i64 x = 1; x <= c; ++x) {
        if (std::gcd(x, c) != 1) continue;
        i64 t = 0, newt = 1, r = c, newr = x;
        while (newr != 0) {
            i64 q = r / newr;
            i64 tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        i64 xinv = modpos(t, c);
        double ph = 2.0 * M_PI * static_cast<double>(modpos(a * x + b * xinv, c)) /
                    static_cast<double>(c);
        sum += std::exp(cplx(0, ph));
    }
    return sum;
}

cplx euler_factor(const EulerFactorQuery& q) {
    const double p = static_cast<double>(q.p);
    const cplx z = q.z;
    cplx d2 = 1.0 - std::pow(p, -2.0 * z);
    if (std::abs(d2) < 1e-12) throw PoleError("euler_factor: 1 - p^{-2z} vanishes");
    cplx pref = (q.p == 2) ? 4.0 : 1.0;
    cplx num = 1.0 - std::pow(p, -(z + 1.0));
    if (q.vp == 0) return pref * num / d2;
    cplx dz = 1.0 - std::pow(p, -z);
    if (std::abs(dz) < 1e-12) throw PoleError("euler_factor: 1 - p^{-z} vanishes");
    cplx numv = 1.0 - std::pow(p, -z * static_cast<double>(q.vp + 1));
    return pref * numv * num / (d2 * dz);
}

cplx euler_product(cplx z, i64 n) {
    if (n == 0) throw std::invalid_argument("euler_product: n = 0");
    if (z.real() <= 0.5) throw std::domain_error("euler_product: Re(z) must exceed 1/2");
    if (std::abs(2.0 * z - 1.0) < 1e-10) throw PoleError("euler_product: zeta(2z) pole");
    cplx out = 4.0 * zeta(2.0 * z) / zeta(z + 1.0);
    for (auto [p, e] : factorize(n)) out *= geometric_p_sum(static_cast<double>(p), z, e);
    return out;
}

namespace {

// bound on |Kl_{p^v,p^u}(0,n)| (divided by 4 when p = 2); multiplicative
// over coprime blocks by CRT
double local_bound(i64 p, int v, int u, i64 n) {
    if (v == 0 && u == 0) return 1.0;
    double pv = std::pow(static_cast<double>(p), v);
    if (u > 0) {
        i64 roots = count_sqrt_mod_ppow(4 * n, p, 2 * u);
        return pv * static_cast<double>(roots);
    }
    if (p == 2) return pv / 2.0;  // |Kl_{2^v,1}(0,n)| = 2^{v+1} exactly
    double pv1 = pv / static_cast<double>(p);
    if (n % p == 0) return pv1 * static_cast<double>(p - 1);
    if (v == 1) return 1.0;  // complete character sum over a mod p is -1
    if (v % 2) return pv1;
    return pv1 * static_cast<double>(p - 1 - kronecker(n, p));  // count of nonroots
}

// Euler factor of the bound series at p:
//   sum_{u,v >= 0} local_bound(p,v,u,n) p^{-v(sigma+1) - u(2 sigma + 1)}
double bound_factor(i64 p, double sigma, i64 n) {
    double acc = 0.0;
    const double pu_step = std::pow(static_cast<double>(p), -(2 * sigma + 1));
    const double pv_step = std::pow(static_cast<double>(p), -(sigma + 1));
    double pu = 1.0;
    for (int u = 0; u < 64; ++u) {
        double inner = 0.0, pv = 1.0;
        for (int v = 0; v < 128; ++v) {
            double t = local_bound(p, v, u, n) * pv;
            inner += t;
            pv *= pv_step;
            if (v > 2 && t < 1e-18 * std::max(inner, 1.0)) break;
        }
        double t = inner * pu;
        acc += t;
        pu *= pu_step;
        if (u > 1 && t < 1e-18 * std::max(acc, 1.0)) break;
    }
    return acc;
}

const std::vector<i64>& primes_100k() {
    static const std::vector<i64> primes = [] {
        const i64 N = 100000;
        std::vector<bool> comp(N + 1, false);
        std::vector<i64> out;
        for (i64 i = 2; i <= N; ++i) {
            if (comp[i]) continue;
            out.push_back(i);
            for (i64 j = i * i; j <= N; j += i) comp[j] = true;
        }
        return out;
    }();
    return primes;
}

}  // namespace

double dseries_tail_bound(double sigma, i64 n, i64 f_max, i64 l_max) {
    if (sigma < 1.5) throw std::domain_error("dseries_tail_bound: needs Re(z) >= 1.5");
    if (std::llabs(n) >= 100000)
        throw BoundExceeded("dseries_tail_bound: |n| too large for the prime table");
    // total of the bound series as an Euler product
    double total = 1.0;
    for (i64 p : primes_100k()) total *= bound_factor(p, sigma, n);
    // primes beyond the table: log factor <= p^{-(s+1)} + 2p^{-2s} + 3p^{-(2s+1)}
    const double P0 = 100000.0;
    double logtail = std::pow(P0, -sigma) / sigma +
                     2.0 * std::pow(P0, 1 - 2 * sigma) / (2 * sigma - 1) +
                     3.0 * std::pow(P0, -2 * sigma) / (2 * sigma);
    total *= std::exp(logtail);
    // boxed partial sum of the same multiplicative bound
    const i64 L = l_max, F = f_max;
    std::vector<i64> spf(static_cast<std::size_t>(std::max(L, F)) + 1, 0);
    for (i64 i = 2; i < static_cast<i64>(spf.size()); ++i)
        if (!spf[i])
            for (i64 j = i; j < static_cast<i64>(spf.size()); j += i)
                if (!spf[j]) spf[j] = i;
    auto exponents = [&](i64 v) {
        std::vector<std::pair<i64, int>> out;
        while (v > 1) {
            i64 p = spf[v];
            int e = 0;
            while (v % p == 0) v /= p, ++e;
            out.emplace_back(p, e);
        }
        return out;
    };
    double partial = 0.0;
    for (i64 f = 1; f <= F; ++f) {
        auto fe = exponents(f);
        double wf = std::pow(static_cast<double>(f), -(2 * sigma + 1));
        for (i64 l = 1; l <= L; ++l) {
            auto le = exponents(l);
            double b = 1.0;
            std::size_t i = 0, j = 0;
            while (i < le.size() || j < fe.size()) {
                i64 pl = i < le.size() ? le[i].first : (1LL << 62);
                i64 pf = j < fe.size() ? fe[j].first : (1LL << 62);
                i64 p = std::min(pl, pf);
                int v = (pl == p) ? le[i].second : 0;
                int u = (pf == p) ? fe[j].second : 0;
                b *= local_bound(p, v, u, n);
                if (pl == p) ++i;
                if (pf == p) ++j;
            }
            partial += b * std::pow(static_cast<double>(l), -(sigma + 1)) * wf;
        }
    }
    double tail = total - partial;
    return 4.0 * std::max(tail, 0.0) + 1e-12 * total;
}

DSeriesResult dseries_truncated(cplx z, i64 n, i64 f_max, i64 l_max) {
    if (n == 0) throw std::invalid_argument("dseries_truncated: n = 0");
    if (z.real() < 1.5) throw std::domain_error("dseries_truncated: needs Re(z) >= 1.5");
    DSeriesResult out;
    out.f_max = f_max;
    out.l_max = l_max;
    cplx acc{0, 0};
    for (i64 f = 1; f <= f_max; ++f) {
        cplx row{0, 0};
        for (i64 l = 1; l <= l_max; ++l)
            row += kl0(l, f, n) * std::pow(static_cast<double>(l), -(z + 1.0));
        acc += row * std::pow(static_cast<double>(f), -(2.0 * z + 1.0));
    }
    out.value = acc;
    out.tail_bound = dseries_tail_bound(z.real(), n, f_max, l_max);
    return out;
}

}  // namespace elltrace
