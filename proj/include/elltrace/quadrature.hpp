#pragma once

// Quadrature kernels used throughout: an adaptive Gauss-Kronrod 7/15 rule for
// finite intervals, tanh-sinh (double exponential) for finite intervals with
// endpoint singularities, and exp-sinh for semi-infinite tails.  Every routine
// returns the value together with an absolute error estimate.

#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <vector>

#include "elltrace/estimate.hpp"

namespace elltrace {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_subdivisions = 20000;
    enum class Scheme { adaptive_gk, double_exponential } scheme = Scheme::adaptive_gk;
};

namespace quad_detail {

// Gauss-Kronrod 7-15: Kronrod nodes (positive half), Kronrod weights, and
// Gauss weights (zero where the node is Kronrod-only).
inline constexpr double gk_x[8] = {
    0.0,
    0.2077849550078985, 0.4058451513773972, 0.5860872354676911,
    0.7415311855993945, 0.8648644233597691, 0.9491079123427585,
    0.9914553711208126};
inline constexpr double gk_wk[8] = {
    0.2094821410847278,
    0.2044329400752989, 0.1903505780647854, 0.1690047266392679,
    0.1406532597155259, 0.1047900103222502, 0.0630920926299785,
    0.0229353220105292};
inline constexpr double gk_wg[8] = {
    0.4179591836734694,
    0.0, 0.3818300505051189, 0.0,
    0.2797053914892767, 0.0, 0.1294849661688697,
    0.0};

template <class F, class T>
void gk15(const F& f, double a, double b, T& result, double& err) {
    const double mid = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    T fc = f(mid);
    T k = gk_wk[0] * fc;
    T g = gk_wg[0] * fc;
    double absint = gk_wk[0] * std::abs(fc);
    for (int i = 1; i < 8; ++i) {
        T lo = f(mid - hl * gk_x[i]);
        T hi = f(mid + hl * gk_x[i]);
        k += gk_wk[i] * (lo + hi);
        if (gk_wg[i] != 0.0) g += gk_wg[i] * (lo + hi);
        absint += gk_wk[i] * (std::abs(lo) + std::abs(hi));
    }
    result = hl * k;
    double diff = std::abs(hl * (k - g));
    // standard GK error heuristic, clipped to the crude |difference|
    double e = diff * std::sqrt(diff / std::max(absint * std::abs(hl) * 1e-15, 1e-300));
    err = std::min(diff, std::isfinite(e) ? std::max(e, diff * 1e-3) : diff);
}

template <class T>
struct Segment {
    double a, b, err;
    T val;
    bool operator<(const Segment& o) const { return err < o.err; }
};

}  // namespace quad_detail

struct ToleranceNotMet : std::runtime_error {
    double achieved;
    explicit ToleranceNotMet(double e)
        : std::runtime_error("quadrature tolerance not met"), achieved(e) {}
};

// Adaptive bisection GK15 on [a,b].  T = double or cplx.
template <class T, class F>
std::pair<T, double> integrate_adaptive(const F& f, double a, double b,
                                        const QuadratureSpec& spec = {}) {
    using quad_detail::Segment;
    if (a == b) return {T{}, 0.0};
    std::priority_queue<Segment<T>> heap;
    Segment<T> s0{a, b, 0.0, T{}};
    quad_detail::gk15(f, a, b, s0.val, s0.err);
    heap.push(s0);
    T total = s0.val;
    double toterr = s0.err;
    int splits = 0;
    while (splits < spec.max_subdivisions) {
        double goal = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
        if (toterr <= goal) break;
        Segment<T> worst = heap.top();
        heap.pop();
        double m = 0.5 * (worst.a + worst.b);
        Segment<T> l{worst.a, m, 0.0, T{}}, r{m, worst.b, 0.0, T{}};
        quad_detail::gk15(f, l.a, l.b, l.val, l.err);
        quad_detail::gk15(f, r.a, r.b, r.val, r.err);
        total += l.val + r.val - worst.val;
        toterr += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        ++splits;
    }
    return {total, std::max(toterr, 0.0)};
}

// tanh-sinh on (a,b); tolerates integrable endpoint singularities.  Nodes
// near the ends are placed by their distance from the endpoint, which keeps
// f evaluated at accurate abscissae arbitrarily close to a and b.
template <class T, class F>
std::pair<T, double> integrate_tanh_sinh(const F& f, double a, double b,
                                         const QuadratureSpec& spec = {}) {
    if (a == b) return {T{}, 0.0};
    const double hw = 0.5 * (b - a);
    const double tmax = 4.3;  // endpoint distance ~ exp(-pi*sinh(4.3)) ~ 1e-50
    // for t >= 0: distance of the outer nodes from their endpoints, and weight
    auto node = [&](double t, double& dist, double& w) {
        double u = 0.5 * M_PI * std::sinh(t);
        double em = std::exp(-2.0 * u);
        dist = hw * 2.0 * em / (1.0 + em);
        w = 0.5 * M_PI * std::cosh(t) * 4.0 * em / ((1.0 + em) * (1.0 + em));
    };
    double h = 0.5, dist, w;
    node(0.0, dist, w);
    T sum = w * f(a + dist);  // t = 0: midpoint
    for (double t = h; t <= tmax; t += h) {
        node(t, dist, w);
        if (dist > 0.0) sum += w * (f(a + dist) + f(b - dist));
    }
    T prev = h * sum;
    double err = std::abs(prev);
    for (int level = 1; level <= 11; ++level) {
        h *= 0.5;
        for (double t = h; t <= tmax; t += 2 * h) {
            node(t, dist, w);
            if (dist > 0.0) sum += w * (f(a + dist) + f(b - dist));
        }
        T cur = h * sum;
        err = std::abs(cur - prev);
        prev = cur;
        double goal = std::max(spec.abs_tol, spec.rel_tol * std::abs(cur) * std::abs(hw));
        if (level >= 4 && err <= goal) break;
    }
    return {hw * prev, std::abs(hw) * err + spec.abs_tol};
}

// exp-sinh on (a, +inf) for integrands decaying at infinity.
template <class T, class F>
std::pair<T, double> integrate_exp_sinh(const F& f, double a,
                                        const QuadratureSpec& spec = {}) {
    const double tmax = 4.0;
    auto node = [&](double t, double& x, double& w) {
        double u = 0.5 * M_PI * std::sinh(t);
        x = std::exp(u);
        w = x * 0.5 * M_PI * std::cosh(t);
    };
    double h = 0.5, x, w;
    node(0.0, x, w);
    T sum = w * f(a + x);
    for (double t = h; t <= tmax; t += h) {
        node(t, x, w);
        sum += w * f(a + x);
        node(-t, x, w);
        sum += w * f(a + x);
    }
    T prev = h * sum;
    double err = std::abs(prev);
    for (int level = 1; level <= 9; ++level) {
        h *= 0.5;
        for (double t = h; t <= tmax; t += 2 * h) {
            node(t, x, w);
            sum += w * f(a + x);
            node(-t, x, w);
            sum += w * f(a + x);
        }
        T cur = h * sum;
        err = std::abs(cur - prev);
        prev = cur;
        double goal = std::max(spec.abs_tol, spec.rel_tol * std::abs(cur));
        if (level >= 3 && err <= goal) break;
    }
    return {prev, err};
}

// 15-point Gauss-Legendre nodes/weights on [-1,1] (positive half; node 0 included).
inline constexpr double gl15_x[8] = {
    0.0,
    0.2011940939974345, 0.3941513470775634, 0.5709721726085388,
    0.7244177313601700, 0.8482065834104272, 0.9372733924007059,
    0.9879925180204854};
inline constexpr double gl15_w[8] = {
    0.2025782419255613,
    0.1984314853271116, 0.1861610000155622, 0.1662692058169939,
    0.1395706779261543, 0.1071592204671719, 0.0703660474881081,
    0.0307532419961173};

// Append the 15 GL nodes/weights for the interval [a,b] to xs, ws.
inline void gl15_panel(double a, double b, std::vector<double>& xs, std::vector<double>& ws) {
    double mid = 0.5 * (a + b), hl = 0.5 * (b - a);
    xs.push_back(mid);
    ws.push_back(hl * gl15_w[0]);
    for (int i = 1; i < 8; ++i) {
        xs.push_back(mid - hl * gl15_x[i]);
        ws.push_back(hl * gl15_w[i]);
        xs.push_back(mid + hl * gl15_x[i]);
        ws.push_back(hl * gl15_w[i]);
    }
}

}  // namespace elltrace
