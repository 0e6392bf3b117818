#pragma once

// Exact integer arithmetic: Kronecker symbols, discriminant decomposition,
// square-trace enumeration, and class number / regulator computation for
// quadratic fields by form reduction (imaginary) and continued fractions
// (real).  Everything here is an exact oracle for the analytic layers.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace elltrace {

using i64 = long long;

struct BoundExceeded : std::domain_error {
    using std::domain_error::domain_error;
};

// Kronecker symbol (a/n) for n >= 1 (completely multiplicative in both
// arguments, (a/1) = 1, (a/2) = 0, +1, -1 for a = 0, +-1, +-3 mod 8).
int kronecker(i64 a, i64 n);

// delta = conductor^2 * fundamental, fundamental a fundamental discriminant
// (or 1 when delta is a perfect square).  iota = 0 for delta > 0, 1 for < 0.
struct Discriminant {
    i64 value = 0;
    i64 fundamental = 0;
    i64 conductor = 1;
    int iota = 0;
};

// Requires delta != 0 and delta = 0,1 mod 4; throws std::invalid_argument.
Discriminant decompose(i64 delta);

// All f >= 1 with f^2 | delta and delta/f^2 = 0,1 mod 4, ascending.
std::vector<i64> divisors_with_square_cofactor(i64 delta);

// Traces m for which m^2 - 4n is a perfect square (n = sign * p^k).
// m with m^2 - 4n = 0 are listed separately: the corresponding conjugacy
// classes are degenerate and every consumer must skip them explicitly.
struct SquareTraces {
    std::vector<i64> traces;       // m^2 - 4n a nonzero perfect square
    std::vector<i64> zero_traces;  // m^2 - 4n = 0 (k even, m = +-2 p^{k/2})
};
SquareTraces enumerate_square_traces(i64 pk, int sign_n);

struct QuadraticFieldData {
    i64 discriminant = 0;
    i64 class_number = 0;
    double regulator = 0.0;  // log of the fundamental unit, D > 0 only
    int root_count = 0;      // number of roots of unity, D < 0 only
};

struct ClassDataBounds {
    i64 imaginary = 1000000;
    i64 real = 10000;
};

// D must be a fundamental discriminant within the bounds.
QuadraticFieldData class_data(i64 D, const ClassDataBounds& bounds = {});

// Independent recount of the imaginary class number (different enumeration
// order); used as the oracle against class_data.
i64 imaginary_class_number_recount(i64 D);

bool is_fundamental_discriminant(i64 D);
std::optional<i64> perfect_square_root(i64 n);  // exact sqrt if n is a square

// Trial-division factorization; inputs here are small by construction.
std::vector<std::pair<i64, int>> factorize(i64 n);
i64 ipow(i64 base, int exp);

// #solutions of x^2 = c (mod p^j), exact (classical Hensel casework).
i64 count_sqrt_mod_ppow(i64 c, i64 p, int j);

}  // namespace elltrace
