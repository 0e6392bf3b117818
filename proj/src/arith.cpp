#include "elltrace/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace elltrace {

int kronecker(i64 a, i64 n) {
    if (n < 1) throw std::invalid_argument("kronecker: n must be >= 1");
    int r = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        i64 m = ((a % 8) + 8) % 8;
        if (m == 3 || m == 5) r = -r;
    }
    if (n == 1) return r;
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 m = n % 8;
            if (m == 3 || m == 5) r = -r;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) r = -r;
        a %= n;
    }
    return n == 1 ? r : 0;
}

bool is_fundamental_discriminant(i64 D) {
    if (D == 1) return true;  // degenerate: square discriminants decompose onto 1
    if (D == 0) return false;
    i64 m = ((D % 4) + 4) % 4;
    auto squarefree = [](i64 v) {
        v = std::llabs(v);
        for (i64 d = 2; d * d <= v; ++d)
            if (v % (d * d) == 0) return false;
        return true;
    };
    if (m == 1) return squarefree(D);
    if (m == 0) {
        i64 q = D / 4;
        i64 qm = ((q % 4) + 4) % 4;
        return (qm == 2 || qm == 3) && squarefree(q);
    }
    return false;
}

std::optional<i64> perfect_square_root(i64 n) {
    if (n < 0) return std::nullopt;
    i64 r = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(n))));
    for (i64 c = std::max<i64>(0, r - 2); c <= r + 2; ++c)
        if (c * c == n) return c;
    return std::nullopt;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    n = std::llabs(n);
    std::vector<std::pair<i64, int>> out;
    if (n <= 1) return out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

i64 ipow(i64 base, int exp) {
    i64 r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

Discriminant decompose(i64 delta) {
    if (delta == 0) throw std::invalid_argument("decompose: delta = 0");
    i64 m = ((delta % 4) + 4) % 4;
    if (m != 0 && m != 1) throw std::invalid_argument("decompose: delta != 0,1 mod 4");
    i64 s = 1;
    for (auto [p, e] : factorize(delta)) s *= ipow(p, e / 2);
    i64 d = delta / (s * s);  // squarefree
    i64 dm = ((d % 4) + 4) % 4;
    if (dm != 1) {  // d = 2,3 mod 4: fundamental part is 4d, s must be even
        d *= 4;
        s /= 2;
    }
    return {delta, d, s, delta < 0 ? 1 : 0};
}

std::vector<i64> divisors_with_square_cofactor(i64 delta) {
    if (delta == 0) throw std::invalid_argument("divisors_with_square_cofactor: delta = 0");
    std::vector<i64> out;
    i64 ad = std::llabs(delta);
    for (i64 f = 1; f * f <= ad; ++f) {
        if (delta % (f * f)) continue;
        i64 q = delta / (f * f);
        i64 m = ((q % 4) + 4) % 4;
        if (m == 0 || m == 1) out.push_back(f);
    }
    return out;
}

SquareTraces enumerate_square_traces(i64 pk, int sign_n) {
    if (pk < 2) throw std::invalid_argument("enumerate_square_traces: pk < 2");
    SquareTraces st;
    i64 n = sign_n >= 0 ? pk : -pk;
    i64 fourn = 4 * std::llabs(n);
    std::set<i64> found;
    // m^2 - 4n = c^2  =>  (m-c)(m+c) = 4n   (n > 0)
    // m^2 + 4|n| = c^2 => (c-m)(c+m) = 4|n| (n < 0)
    for (i64 d = 1; d * d <= fourn; ++d) {
        if (fourn % d) continue;
        i64 e = fourn / d;
        if ((d + e) % 2) continue;
        i64 radius = (d + e) / 2, off = (e - d) / 2;
        i64 m = (n > 0) ? radius : off;
        i64 c = (n > 0) ? off : radius;
        if (m * m - 4 * n != c * c) continue;
        if (c == 0)
            st.zero_traces.push_back(m), st.zero_traces.push_back(-m);
        else
            found.insert(m), found.insert(-m);
    }
    st.traces.assign(found.begin(), found.end());
    std::sort(st.zero_traces.begin(), st.zero_traces.end());
    st.zero_traces.erase(std::unique(st.zero_traces.begin(), st.zero_traces.end()),
                         st.zero_traces.end());
    return st;
}

namespace {

// h(D) for D < 0 fundamental: count reduced forms (a,b,c), b^2-4ac=D,
// |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
i64 imaginary_class_number(i64 D) {
    i64 aD = -D;
    i64 h = 0;
    for (i64 b = (aD % 2); 3 * b * b <= aD; b += 2) {
        i64 n4 = b * b + aD;  // = 4ac
        if (n4 % 4) continue;
        i64 ac = n4 / 4;
        for (i64 a = std::max<i64>(b, 1); a * a <= ac; ++a) {
            if (ac % a) continue;
            i64 c = ac / a;
            if (b == 0 || a == b || a == c)
                h += 1;
            else
                h += 2;
        }
    }
    return h;
}

// One step of the continued fraction of (P + sqrt(D))/Q.
struct SurdState {
    i64 P, Q;
    bool operator<(const SurdState& o) const {
        return P != o.P ? P < o.P : Q < o.Q;
    }
};

// Real quadratic data via the continued fraction of the standard surd:
// regulator = sum of log((P_i + sqrt(D))/Q_i) over one period of the reduced
// orbit; the fundamental unit has norm (-1)^period.
struct RealCFResult {
    double regulator;
    i64 period;
};

RealCFResult real_cf(i64 D) {
    double sq = std::sqrt(static_cast<double>(D));
    i64 isq = static_cast<i64>(std::floor(sq));
    while (isq * isq > D) --isq;
    while ((isq + 1) * (isq + 1) <= D) ++isq;
    // start from omega = (P0 + sqrt D)/Q0 with Q0 | D - P0^2
    i64 P = (D % 2 == 0) ? 0 : 1;
    i64 Q = 2;
    auto step = [&](i64& p, i64& q) {
        i64 a = (p + isq) / q;  // floor((P + sqrt D)/Q), Q > 0
        p = a * q - p;
        q = (D - p * p) / q;
    };
    // reduce: iterate until the surd is reduced (alpha > 1, -1 < conj < 0)
    auto reduced = [&](i64 p, i64 q) {
        double al = (p + sq) / q;
        double cj = (p - sq) / q;
        return q > 0 && al > 1.0 && cj > -1.0 && cj < 0.0;
    };
    for (int guard = 0; guard < 4096 && !reduced(P, Q); ++guard) step(P, Q);
    if (!reduced(P, Q)) throw std::runtime_error("real_cf: reduction failed");
    const SurdState start{P, Q};
    double reg = 0.0;
    i64 period = 0;
    while (true) {
        reg += std::log((P + sq) / Q);
        step(P, Q);
        ++period;
        if (P == start.P && Q == start.Q) break;
        if (period > 4000000) throw std::runtime_error("real_cf: period overflow");
    }
    return {reg, period};
}

// Reduced indefinite form predicate and rho step (standard reduction theory).
struct Form {
    i64 a, b, c;
    bool operator<(const Form& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// reduced indefinite form: |sqrt(D) - 2|a|| < b < sqrt(D)
bool is_reduced_indefinite(const Form& f, double sq) {
    if (f.b <= 0 || static_cast<double>(f.b) >= sq) return false;
    double t = std::abs(sq - 2.0 * static_cast<double>(std::llabs(f.a)));
    return t < static_cast<double>(f.b);
}

Form rho(const Form& f, i64 D, double sq) {
    i64 c = f.c;
    i64 ac = std::llabs(c);
    i64 t = 2 * ac;
    i64 r = ((-f.b) % t + t) % t;  // r = -b mod 2|c|, r in [0, t)
    if (static_cast<double>(ac) > sq) {
        if (r > ac) r -= t;  // -|c| < r <= |c|
    } else {
        while (static_cast<double>(r) < sq - static_cast<double>(t)) r += t;
        while (static_cast<double>(r) > sq) r -= t;  // sqrt(D) - 2|c| < r < sqrt(D)
    }
    i64 cc = (r * r - D) / (4 * c);
    return {c, r, cc};
}

// narrow class number: number of rho-cycles of reduced forms of disc D
i64 narrow_class_number(i64 D) {
    double sq = std::sqrt(static_cast<double>(D));
    std::set<Form> all;
    i64 bmax = static_cast<i64>(std::floor(sq));
    for (i64 b = 1; b <= bmax; ++b) {
        if ((((D - b * b) % 4) + 4) % 4 != 0) continue;
        i64 m = (D - b * b) / 4;  // = -ac = |ac| > 0
        for (i64 d = 1; d <= m; ++d) {
            if (m % d) continue;
            Form f{d, b, -m / d};
            if (is_reduced_indefinite(f, sq)) all.insert(f);
            Form g{-d, b, m / d};
            if (is_reduced_indefinite(g, sq)) all.insert(g);
        }
    }
    std::set<Form> seen;
    i64 cycles = 0;
    for (const auto& f : all) {
        if (seen.count(f)) continue;
        ++cycles;
        Form g = f;
        do {
            seen.insert(g);
            g = rho(g, D, sq);
            if (!all.count(g)) throw std::logic_error("rho left the reduced set");
        } while ((g < f) || (f < g));
    }
    return cycles;
}

}  // namespace

i64 imaginary_class_number_recount(i64 D) {
    // same count, transposed enumeration: outer loop on a
    i64 aD = -D, h = 0;
    for (i64 a = 1; 3 * a * a <= aD; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            if ((((b - D) % 2) + 2) % 2) continue;
            i64 num = b * b - D;
            if (num % (4 * a)) continue;
            i64 c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            ++h;
        }
    }
    return h;
}

QuadraticFieldData class_data(i64 D, const ClassDataBounds& bounds) {
    if (!is_fundamental_discriminant(D) || D == 1)
        throw std::invalid_argument("class_data: D not a fundamental discriminant");
    QuadraticFieldData q;
    q.discriminant = D;
    if (D < 0) {
        if (-D > bounds.imaginary) throw BoundExceeded("class_data: |D| over imaginary bound");
        q.class_number = imaginary_class_number(D);
        q.root_count = (D == -4) ? 4 : (D == -3) ? 6 : 2;
    } else {
        if (D > bounds.real) throw BoundExceeded("class_data: D over real bound");
        auto cf = real_cf(D);
        i64 hplus = narrow_class_number(D);
        bool norm_minus_one = (cf.period % 2) != 0;
        q.class_number = norm_minus_one ? hplus : hplus / 2;
        q.regulator = cf.regulator;
    }
    return q;
}

i64 count_sqrt_mod_ppow(i64 c, i64 p, int j) {
    if (j == 0) return 1;
    i64 pj = ipow(p, j);
    c = ((c % pj) + pj) % pj;
    if (c == 0) return ipow(p, j / 2);  // x = 0 mod p^{ceil(j/2)}
    int r = 0;
    i64 c0 = c;
    while (c0 % p == 0) c0 /= p, ++r;
    if (r >= j) return ipow(p, j / 2);
    if (r % 2) return 0;
    // x = p^{r/2} y with y^2 = c0 mod p^{j-r}; count times p^{r/2}
    i64 lift = ipow(p, r / 2);
    int jr = j - r;
    if (p != 2) {
        return kronecker(c0, p) == 1 ? 2 * lift : 0;
    }
    if (jr == 1) return lift;
    if (jr == 2) return (c0 % 4 == 1) ? 2 * lift : 0;
    return (c0 % 8 == 1) ? 4 * lift : 0;
}

}  // namespace elltrace
