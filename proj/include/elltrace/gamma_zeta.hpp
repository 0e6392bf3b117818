#pragma once

// Complex gamma (Lanczos) and Riemann zeta (Euler-Maclaurin) backends.
// Accuracy targets: ~1e-13 relative for gamma on |Re z| <= 8, ~1e-12 for
// zeta on Re s > -1, |Im s| <= 100, away from s = 1.

#include <complex>
#include <stdexcept>

#include "elltrace/estimate.hpp"

namespace elltrace {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Gamma(z); throws PoleError at nonpositive integers.
cplx cgamma(cplx z);

// 1/Gamma(z); entire, returns exact 0 at nonpositive integers.
cplx rgamma(cplx z);

// zeta(s) for Re(s) > -1, s != 1.
cplx zeta(cplx s);

// (1 - p^{-s(j+1)}) / (1 - p^{-s}) = sum_{i=0}^{j} p^{-i s}, evaluated in the
// stable geometric form (no removable singularities).
cplx geometric_p_sum(double p, cplx s, int j);

}  // namespace elltrace
