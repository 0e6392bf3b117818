#pragma once

#include <cmath>
#include <complex>

namespace elltrace {

using cplx = std::complex<double>;

// A numeric value together with a propagated absolute error bound.
// Errors combine additively (first order); nothing here tracks correlations.
struct Estimate {
    double value = 0.0;
    double error = 0.0;

    Estimate() = default;
    Estimate(double v, double e = 0.0) : value(v), error(e) {}

    Estimate& operator+=(const Estimate& o) {
        value += o.value;
        error += o.error;
        return *this;
    }
    Estimate& operator-=(const Estimate& o) {
        value -= o.value;
        error += o.error;
        return *this;
    }
    Estimate& operator*=(double s) {
        value *= s;
        error *= std::abs(s);
        return *this;
    }
    friend Estimate operator+(Estimate a, const Estimate& b) { return a += b; }
    friend Estimate operator-(Estimate a, const Estimate& b) { return a -= b; }
    friend Estimate operator*(double s, Estimate a) { return a *= s; }
    friend Estimate operator*(Estimate a, double s) { return a *= s; }
};

// Complex-valued estimate.
struct CEstimate {
    cplx value{0.0, 0.0};
    double error = 0.0;

    CEstimate() = default;
    CEstimate(cplx v, double e = 0.0) : value(v), error(e) {}

    CEstimate& operator+=(const CEstimate& o) {
        value += o.value;
        error += o.error;
        return *this;
    }
    CEstimate& operator-=(const CEstimate& o) {
        value -= o.value;
        error += o.error;
        return *this;
    }
    CEstimate& operator*=(cplx s) {
        value *= s;
        error *= std::abs(s);
        return *this;
    }
    friend CEstimate operator+(CEstimate a, const CEstimate& b) { return a += b; }
    friend CEstimate operator-(CEstimate a, const CEstimate& b) { return a -= b; }
    friend CEstimate operator*(cplx s, CEstimate a) { return a *= s; }
    friend CEstimate operator*(CEstimate a, cplx s) { return a *= s; }

    Estimate real() const { return {value.real(), error}; }
};

inline double rel_diff(double a, double b) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / scale;
}

}  // namespace elltrace
