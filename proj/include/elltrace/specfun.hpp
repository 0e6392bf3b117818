#pragma once

// Analysis kernels for the smoothed sums:
//
//   F(x)      = 1/(2 K_0(2)) * int_x^inf exp(-y - 1/y) dy/y
//   Ftilde(z) = int_0^inf F(u) u^{z-1} du = K_z(2) / (z K_0(2))
//   H_i(y)    = sqrt(pi)/(2 pi i) * int_{Re u = 1}
//                 Gamma((u+i)/2)/Gamma((1+i-u)/2) (pi y)^{-u} Ftilde(u) du
//
// F is a smooth cutoff with 0 < F < e^{-x}/(2K_0(2)) and
// 0 < 1 - F < e^{-1/x}/(2K_0(2)); the measure exp(-y-1/y) dy/y is invariant
// under y -> 1/y, so F(x) + F(1/x) = 1 exactly.  Ftilde is odd with a simple
// pole of residue 1 at 0 and decays like e^{-pi|t|/2} on vertical lines,
// which makes every truncated contour here cheap to certify.  H_i decays
// like e^{-2 sqrt y}/y.
//
// Hot paths go through Hermite splines in log coordinates (cutoff_f,
// dual_kernel_h_fast); the direct quadrature routes remain available as
// oracles.

#include <functional>
#include <vector>

#include "elltrace/estimate.hpp"
#include "elltrace/gamma_zeta.hpp"
#include "elltrace/quadrature.hpp"

namespace elltrace {

struct ContourSpec {
    enum class Kind { vertical_line, indented };
    Kind kind = Kind::vertical_line;
    double c = 1.0;          // Re(u) for vertical_line
    double upsilon = 0.25;   // indentation radius for the indented contour
    double height = 30.0;    // truncation |Im u| <= height
};

struct DecayEnvelope {
    double amplitude = 1.0;  // |f(on contour, |Im u| >= T0)| <= amplitude * exp(-rate*|Im u|)
    double rate = M_PI / 2;
};

struct ContourResult {
    cplx value{0.0, 0.0};
    double error = 0.0;
    bool envelope_violated = false;
};

// K_0(2), computed once.
double k0_of_2();

// Modified Bessel function of the second kind, complex order, x > 0.
// Quadrature on exp(-x cosh t) cosh(nu t) for moderate |Im nu|; the
// I-series route (full relative accuracy) beyond.
cplx bessel_k(cplx nu, double x, const QuadratureSpec& spec = {});

// F by direct quadrature (oracle) and by spline (hot path).
Estimate cutoff_f_direct(double x, const QuadratureSpec& spec = {});
double cutoff_f(double x);

// Ftilde(z) = K_z(2)/(z K_0(2)); PoleError at z = 0.
cplx mellin_f(cplx z);

// int_0^inf F(u) u^{z-1} du by quadrature, Re z > 0; independent of mellin_f.
CEstimate mellin_f_direct(cplx z, const QuadratureSpec& spec = {});

// Gamma((u+iota)/2) / Gamma((1-u+iota)/2); returns 0 at denominator poles,
// throws PoleError at numerator poles.
cplx gamma_ratio(int iota, cplx u);

// (1/(2 pi i)) * integral of f along the contour.  vertical_line: Re(u)=c,
// |Im u| <= height.  indented: imaginary axis |t| in [upsilon, height] plus
// the left half-circle of radius upsilon around 0, traversed upward.
ContourResult contour_integral(const std::function<cplx(cplx)>& f, const ContourSpec& cs,
                               const QuadratureSpec& qs = {}, const DecayEnvelope* env = nullptr);

// H_iota(y) by direct contour quadrature (oracle route).
CEstimate dual_kernel_h(int iota, double y, const ContourSpec& cs = {},
                        const QuadratureSpec& qs = {});

// Spline-backed H_iota(y); exact 0 above the spline range (where
// |H| <= h_tail_bound(y) is negligible), direct evaluation below it.
double dual_kernel_h_fast(int iota, double y);

// Fitted envelope: |H_iota(y)| <= h_envelope_c(iota) * exp(-2 sqrt y)/y for y >= 1.
double h_envelope_c(int iota);
double h_tail_bound(int iota, double y);

// Discretized (1/(2 pi i)) int G(u) e^{u s} du on a truncated contour with all
// weights folded in; eval(s) is then a plain weighted exponential sum.  Used
// to batch contour integrals that differ only in the power y^{-u}.
class MellinLineKernel {
  public:
    // vertical line Re(u) = c
    static MellinLineKernel line(double c, double height, double panel,
                                 const std::function<cplx(cplx)>& g);
    // the indented contour
    static MellinLineKernel indented(double upsilon, double height, double panel,
                                     const std::function<cplx(cplx)>& g);

    cplx eval(double s) const;
    // value and d/ds
    std::pair<cplx, cplx> eval_d(double s) const;
    std::size_t size() const { return u_.size(); }

  private:
    std::vector<cplx> u_;
    std::vector<cplx> wg_;
};

// H_{iota,z}(y) evaluated in batch: returns a kernel with
// eval(-log(pi y)) = H_{iota,z}(y), the dual kernel of the completed-L
// functional equation at shift z (z = 1 reproduces H_iota).
MellinLineKernel make_h_kernel(int iota, cplx z, double height = 30.0, double panel = 0.25);

}  // namespace elltrace
