#include "elltrace/gamma_zeta.hpp"

#include <cmath>

namespace elltrace {

namespace {

// Lanczos, g = 607/128, 15 terms.
constexpr double lanczos_g = 4.7421875;
constexpr double lanczos_c[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

bool is_nonpositive_int(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

cplx lanczos_core(cplx z) {
    // valid for Re(z) >= 0.5
    z -= 1.0;
    cplx a = lanczos_c[0];
    for (int i = 1; i < 15; ++i) a += lanczos_c[i] / (z + static_cast<double>(i));
    cplx t = z + lanczos_g + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

// Bernoulli B_{2k} / (2k)!
constexpr double bern_over_fact[12] = {
    8.3333333333333333e-02,  -1.3888888888888889e-03, 3.3068783068783069e-05,
    -8.2671957671957672e-07, 2.0876756987868099e-08,  -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225829e-13, 8.5860620562778446e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812523e-19,
};

}  // namespace

cplx cgamma(cplx z) {
    if (is_nonpositive_int(z)) throw PoleError("gamma pole at nonpositive integer");
    if (z.real() < 0.5) {
        // reflection
        return M_PI / (std::sin(M_PI * z) * lanczos_core(1.0 - z));
    }
    return lanczos_core(z);
}

cplx rgamma(cplx z) {
    if (is_nonpositive_int(z)) return {0.0, 0.0};
    if (z.real() < 0.5) {
        return std::sin(M_PI * z) * lanczos_core(1.0 - z) / M_PI;
    }
    return 1.0 / lanczos_core(z);
}

cplx zeta(cplx s) {
    if (s == cplx(1.0, 0.0)) throw PoleError("zeta pole at s=1");
    if (s.real() < -1.0) throw std::domain_error("zeta: Re(s) < -1 unsupported");
    const int N = std::max(24, static_cast<int>(std::ceil(1.3 * std::abs(s.imag()))) + 8);
    cplx sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::pow(static_cast<double>(n), -s);
    const double dN = static_cast<double>(N);
    cplx Nms = std::pow(dN, -s);
    sum += 0.5 * Nms;
    sum += Nms * dN / (s - 1.0);
    // Euler-Maclaurin correction: sum_k B_{2k}/(2k)! * (s)_{2k-1} * N^{-s-2k+1}
    cplx poch = s;           // (s)_1
    cplx npow = Nms / dN;    // N^{-s-2k+1} at k=1
    const double invN2 = 1.0 / (dN * dN);
    for (int k = 1; k <= 12; ++k) {
        sum += bern_over_fact[k - 1] * poch * npow;
        // advance: (s)_{2k+1} = (s)_{2k-1} * (s+2k-1)(s+2k)
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        npow *= invN2;
    }
    return sum;
}

cplx geometric_p_sum(double p, cplx s, int j) {
    cplx q = std::pow(p, -s);
    cplx acc = 1.0;
    cplx term = 1.0;
    for (int i = 1; i <= j; ++i) {
        term *= q;
        acc += term;
    }
    return acc;
}

}  // namespace elltrace
