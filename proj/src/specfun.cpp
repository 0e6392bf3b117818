#include "elltrace/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elltrace {

namespace {

constexpr double kImagSwitch = 4.5;  // |Im nu| above this: I-series route

// I_nu(x) = sum_k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)), terms decrease from k=0.
cplx bessel_i_series(cplx nu, double x) {
    cplx term = std::pow(cplx(x / 2, 0.0), nu) * rgamma(nu + 1.0);
    cplx sum = term;
    const double q = x * x / 4.0;
    for (int k = 0; k < 200; ++k) {
        term *= q / ((k + 1.0) * (nu + static_cast<double>(k + 1)));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

double bessel_cutoff_t(double x, double re_nu) {
    // smallest t with x cosh t - |re_nu| t >= 50
    double t = std::acosh(std::max(2.0, 52.0 / x));
    for (int i = 0; i < 4; ++i) t = std::acosh(std::max(2.0, (50.0 + std::abs(re_nu) * t) / x));
    return t + 0.5;
}

}  // namespace

cplx bessel_k(cplx nu, double x, const QuadratureSpec& spec) {
    if (x <= 0) throw std::domain_error("bessel_k: x must be positive");
    if (std::abs(nu.imag()) <= kImagSwitch) {
        double tmax = bessel_cutoff_t(x, nu.real());
        auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
        auto [v, e] = integrate_adaptive<cplx>(f, 0.0, tmax, spec);
        (void)e;
        return v;
    }
    cplx im = bessel_i_series(-nu, x);
    cplx ip = bessel_i_series(nu, x);
    return 0.5 * M_PI * (im - ip) / std::sin(M_PI * nu);
}

double k0_of_2() {
    static const double v = [] {
        QuadratureSpec qs;
        qs.abs_tol = 1e-16;
        auto f = [](double t) { return std::exp(-2.0 * std::cosh(t)); };
        return integrate_adaptive<double>(f, 0.0, 5.5, qs).first;
    }();
    return v;
}

Estimate cutoff_f_direct(double x, const QuadratureSpec& spec) {
    if (x <= 0) throw std::domain_error("cutoff_f: x must be positive");
    auto g = [](double y) { return std::exp(-y - 1.0 / y) / y; };
    // integrate over [x, T] + certified tail, T chosen so exp(-T) is negligible
    double T = std::max(x + 1.0, 46.0);
    double tail = std::exp(-T);  // int_T^inf < e^{-T}
    if (x >= T) return {std::exp(-x) / (2 * k0_of_2()), std::exp(-x) / (2 * k0_of_2())};
    auto [v, e] = integrate_adaptive<double>(g, x, T, spec);
    double norm = 2 * k0_of_2();
    return {(v + 0.5 * tail) / norm, (e + 0.5 * tail) / norm};
}

namespace {

// Hermite cubic in t = log(y) with exact nodal derivatives.
struct LogHermiteSpline {
    double t0 = 0, dt = 0;
    std::vector<double> v, d;  // value, d/dt

    double eval_t(double t) const {
        double u = (t - t0) / dt;
        int i = static_cast<int>(std::floor(u));
        i = std::clamp(i, 0, static_cast<int>(v.size()) - 2);
        double s = u - i;
        double s2 = s * s, s3 = s2 * s;
        double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
        double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
        return h00 * v[i] + h10 * dt * d[i] + h01 * v[i + 1] + h11 * dt * d[i + 1];
    }
    double tmin() const { return t0; }
    double tmax() const { return t0 + dt * (static_cast<double>(v.size()) - 1); }
};

struct CutoffTable {
    LogHermiteSpline sp;
    double xlo, xhi;
};

const CutoffTable& cutoff_table() {
    static const CutoffTable tab = [] {
        CutoffTable t;
        t.xlo = 1e-8;
        t.xhi = 46.0;
        const int n = 6000;
        t.sp.t0 = std::log(t.xlo);
        t.sp.dt = (std::log(t.xhi) - std::log(t.xlo)) / (n - 1);
        t.sp.v.resize(n);
        t.sp.d.resize(n);
        const double norm = 2 * k0_of_2();
        auto g = [](double y) { return std::exp(-y - 1.0 / y) / y; };
        // accumulate from the top: F(xhi) ~ tail
        double acc = std::exp(-t.xhi) * 0.5;  // midpoint of [0, e^{-xhi}] tail bound
        t.sp.v[n - 1] = acc / norm;
        QuadratureSpec qs;
        qs.abs_tol = 1e-17;
        qs.rel_tol = 1e-15;
        for (int i = n - 2; i >= 0; --i) {
            double a = std::exp(t.sp.t0 + t.sp.dt * i);
            double b = std::exp(t.sp.t0 + t.sp.dt * (i + 1));
            acc += integrate_adaptive<double>(g, a, b, qs).first;
            t.sp.v[i] = acc / norm;
        }
        for (int i = 0; i < n; ++i) {
            double x = std::exp(t.sp.t0 + t.sp.dt * i);
            t.sp.d[i] = -std::exp(-x - 1.0 / x) / norm;  // dF/d(log x) = x F'(x)
        }
        return t;
    }();
    return tab;
}

}  // namespace

double cutoff_f(double x) {
    if (x <= 0) throw std::domain_error("cutoff_f: x must be positive");
    const CutoffTable& t = cutoff_table();
    if (x < t.xlo) return 1.0;  // 1 - F(x) < e^{-1/x}/(2K0(2)), ~1e-4e7 here
    if (x > t.xhi) return 0.0;  // F(x) < e^{-46}/(2K0(2)) < 5e-20
    return t.sp.eval_t(std::log(x));
}

cplx mellin_f(cplx z) {
    if (z == cplx(0.0, 0.0)) throw PoleError("mellin_f: pole at z = 0");
    return bessel_k(z, 2.0) / (z * k0_of_2());
}

CEstimate mellin_f_direct(cplx z, const QuadratureSpec& spec) {
    if (z.real() <= 0) throw std::domain_error("mellin_f_direct: Re z must be positive");
    // (0,1]: tanh-sinh absorbs the u^{Re z - 1} endpoint; [1,T]: adaptive
    auto f = [&](double u) { return cutoff_f_direct(u).value * std::pow(cplx(u, 0), z - 1.0); };
    auto [v1, e1] = integrate_tanh_sinh<cplx>(f, 0.0, 1.0, spec);
    double T = 50.0;
    auto [v2, e2] = integrate_adaptive<cplx>(f, 1.0, T, spec);
    // tail: F(u) < e^{-u}/(2K0(2))
    double tail = std::exp(-T) * std::pow(T, z.real() - 1.0) / (2 * k0_of_2());
    return {v1 + v2, e1 + e2 + tail};
}

cplx gamma_ratio(int iota, cplx u) {
    cplx a = 0.5 * (u + static_cast<double>(iota));
    cplx b = 0.5 * (1.0 - u + static_cast<double>(iota));
    cplx ra = rgamma(a);
    if (ra == cplx(0.0, 0.0)) throw PoleError("gamma_ratio: numerator pole");
    return rgamma(b) / ra;
}

namespace {

void arc_nodes(double upsilon, int panels, std::vector<cplx>& u, std::vector<cplx>& w) {
    // left half-circle from -i*upsilon to +i*upsilon; theta = -pi/2 - tau,
    // tau in [0, pi]; contributes (1/2pi i) * int G i u dtheta with dtheta = -dtau
    std::vector<double> xs, ws;
    double step = M_PI / panels;
    for (int i = 0; i < panels; ++i) gl15_panel(i * step, (i + 1) * step, xs, ws);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double theta = -M_PI / 2 - xs[i];
        cplx uu = upsilon * std::exp(cplx(0, theta));
        u.push_back(uu);
        w.push_back(ws[i] * cplx(0, -1.0) * uu / (2 * M_PI * cplx(0, 1)));
    }
}

void line_nodes(double c, double t_from, double t_to, double panel, std::vector<cplx>& u,
                std::vector<cplx>& w) {
    std::vector<double> xs, ws;
    int panels = std::max(1, static_cast<int>(std::ceil((t_to - t_from) / panel)));
    double step = (t_to - t_from) / panels;
    for (int i = 0; i < panels; ++i)
        gl15_panel(t_from + i * step, t_from + (i + 1) * step, xs, ws);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        u.push_back(cplx(c, xs[i]));
        w.push_back(ws[i] / (2 * M_PI));  // du = i dt, folded with 1/(2 pi i)
    }
}

}  // namespace

MellinLineKernel MellinLineKernel::line(double c, double height, double panel,
                                        const std::function<cplx(cplx)>& g) {
    MellinLineKernel k;
    std::vector<cplx> u, w;
    line_nodes(c, -height, height, panel, u, w);
    k.u_ = std::move(u);
    k.wg_.resize(k.u_.size());
    for (std::size_t i = 0; i < k.u_.size(); ++i) k.wg_[i] = w[i] * g(k.u_[i]);
    return k;
}

MellinLineKernel MellinLineKernel::indented(double upsilon, double height, double panel,
                                            const std::function<cplx(cplx)>& g) {
    MellinLineKernel k;
    std::vector<cplx> u, w;
    line_nodes(0.0, -height, -upsilon, panel, u, w);
    arc_nodes(upsilon, 24, u, w);
    line_nodes(0.0, upsilon, height, panel, u, w);
    k.u_ = std::move(u);
    k.wg_.resize(k.u_.size());
    for (std::size_t i = 0; i < k.u_.size(); ++i) k.wg_[i] = w[i] * g(k.u_[i]);
    return k;
}

cplx MellinLineKernel::eval(double s) const {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < u_.size(); ++i) acc += wg_[i] * std::exp(u_[i] * s);
    return acc;
}

std::pair<cplx, cplx> MellinLineKernel::eval_d(double s) const {
    cplx acc{0.0, 0.0}, dacc{0.0, 0.0};
    for (std::size_t i = 0; i < u_.size(); ++i) {
        cplx t = wg_[i] * std::exp(u_[i] * s);
        acc += t;
        dacc += u_[i] * t;
    }
    return {acc, dacc};
}

MellinLineKernel make_h_kernel(int iota, cplx z, double height, double panel) {
    cplx pref = std::pow(M_PI, z - 0.5);
    auto g = [iota, z, pref](cplx u) {
        cplx a = 0.5 * (1.0 + u - z + static_cast<double>(iota));
        cplx b = 0.5 * (z - u + static_cast<double>(iota));
        cplx ra = rgamma(a);
        if (ra == cplx(0.0, 0.0)) throw PoleError("make_h_kernel: numerator pole on contour");
        return pref * (rgamma(b) / ra) * mellin_f(u);
    };
    return MellinLineKernel::line(1.0, height, panel, g);
}

ContourResult contour_integral(const std::function<cplx(cplx)>& f, const ContourSpec& cs,
                               const QuadratureSpec& qs, const DecayEnvelope* env) {
    ContourResult out;
    DecayEnvelope def;
    const DecayEnvelope& e = env ? *env : def;
    double T = cs.height;
    auto add_line = [&](double c, double lo, double hi) {
        auto g = [&](double t) { return f(cplx(c, t)); };
        auto [v, er] = integrate_adaptive<cplx>(g, lo, hi, qs);
        out.value += v / (2 * M_PI);
        out.error += er / (2 * M_PI);
    };
    if (cs.kind == ContourSpec::Kind::vertical_line) {
        add_line(cs.c, -T, T);
        // envelope check near the truncation edge
        double probe = std::abs(f(cplx(cs.c, 0.97 * T)));
        if (probe > 10.0 * e.amplitude * std::exp(-e.rate * 0.97 * T)) out.envelope_violated = true;
    } else {
        add_line(0.0, -T, -cs.upsilon);
        add_line(0.0, cs.upsilon, T);
        auto g = [&](double tau) {
            cplx u = cs.upsilon * std::exp(cplx(0, -M_PI / 2 - tau));
            return f(u) * cplx(0, -1.0) * u;
        };
        auto [v, er] = integrate_adaptive<cplx>(g, 0.0, M_PI, qs);
        out.value += v / (2 * M_PI * cplx(0, 1));
        out.error += er / (2 * M_PI);
        double probe = std::abs(f(cplx(0.0, 0.97 * T)));
        if (probe > 10.0 * e.amplitude * std::exp(-e.rate * 0.97 * T)) out.envelope_violated = true;
    }
    out.error += 2.0 * e.amplitude * std::exp(-e.rate * T) / (e.rate * 2 * M_PI);
    return out;
}

CEstimate dual_kernel_h(int iota, double y, const ContourSpec& cs, const QuadratureSpec& qs) {
    if (y <= 0) throw std::domain_error("dual_kernel_h: y must be positive");
    auto f = [&](cplx u) {
        return std::sqrt(M_PI) * gamma_ratio(iota, u) * std::pow(cplx(M_PI * y, 0), -u) *
               mellin_f(u);
    };
    ContourSpec line = cs;
    line.kind = ContourSpec::Kind::vertical_line;
    line.c = 1.0;
    DecayEnvelope env{8.0 / std::min(1.0, M_PI * y), M_PI / 2};
    auto r = contour_integral(f, line, qs, &env);
    return {r.value, r.error};
}

namespace {

struct HTable {
    LogHermiteSpline sp[2];
    double ylo = 1e-5, yhi = 520.0;
    double env_c[2] = {0.5, 0.5};
};

const HTable& h_table() {
    static const HTable tab = [] {
        HTable t;
        const int n = 4096;
        for (int iota = 0; iota < 2; ++iota) {
            MellinLineKernel k = make_h_kernel(iota, cplx(1.0, 0.0));
            auto& sp = t.sp[iota];
            sp.t0 = std::log(t.ylo);
            sp.dt = (std::log(t.yhi) - std::log(t.ylo)) / (n - 1);
            sp.v.resize(n);
            sp.d.resize(n);
            double envc = 0.0;
            for (int i = 0; i < n; ++i) {
                double ly = sp.t0 + sp.dt * i;
                double y = std::exp(ly);
                auto [h, dh_ds] = k.eval_d(-std::log(M_PI * y));
                sp.v[i] = h.real();
                sp.d[i] = -dh_ds.real();  // d/d(log y) = -d/ds
                if (y >= 1.0 && y <= 120.0)
                    envc = std::max(envc, std::abs(h.real()) * y * std::exp(2 * std::sqrt(y)));
            }
            t.env_c[iota] = 1.25 * envc;
        }
        return t;
    }();
    return tab;
}

}  // namespace

double dual_kernel_h_fast(int iota, double y) {
    const HTable& t = h_table();
    if (y > t.yhi) return 0.0;  // |H| <= h_tail_bound(y) < 1e-19 here
    if (y < t.ylo) return dual_kernel_h(iota, y).value.real();
    return t.sp[iota].eval_t(std::log(y));
}

double h_envelope_c(int iota) { return h_table().env_c[iota]; }

double h_tail_bound(int iota, double y) {
    if (y < 1.0) return h_envelope_c(iota) * std::exp(-2.0);
    return h_envelope_c(iota) * std::exp(-2 * std::sqrt(y)) / y;
}

}  // namespace elltrace
