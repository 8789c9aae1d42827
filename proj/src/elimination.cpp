#include "ectcert/elimination.hpp"

#include <stdexcept>

namespace ect {
namespace {

// z-coefficient lists over the integers together with the rational factor
// that was pulled out of each polynomial
struct IntCoeffs {
    std::vector<PolyZ> c; // c[j] = coefficient of z^j
    Rat scale;            // original = scale * c
};

IntCoeffs integerize(const BiQ& p) {
    IntCoeffs out;
    Rat cont = content(p); // positive-sense content of the rational coefficients
    if (p.is_zero()) {
        out.scale = Rat(1);
        return out;
    }
    BiQ scaled = Rat(1 / cont) * p;
    out.scale = cont;
    auto cs = coeffs_in_second(scaled);
    out.c.reserve(cs.size());
    for (auto& cq : cs) {
        PolyZ zc;
        zc.c.reserve(cq.c.size());
        for (auto& r : cq.c) {
            if (den(r) != 1) throw std::logic_error("integerize: content strip left a denominator");
            zc.c.push_back(num(r));
        }
        zc.trim();
        out.c.push_back(std::move(zc));
    }
    while (!out.c.empty() && out.c.back().is_zero()) out.c.pop_back();
    return out;
}

long degz(const std::vector<PolyZ>& p) { return static_cast<long>(p.size()) - 1; }

PolyZ sylvester(const std::vector<PolyZ>& a, const std::vector<PolyZ>& b) {
    long m = degz(a), n = degz(b);
    if (m < 0 || n < 0) return {};
    if (m == 0 && n == 0) return PolyZ(Int(1));
    std::size_t dim = static_cast<std::size_t>(m + n);
    std::vector<std::vector<PolyZ>> mat(dim, std::vector<PolyZ>(dim));
    // n columns of a's coefficients (descending), then m columns of b's
    for (long col = 0; col < n; ++col)
        for (long i = 0; i <= m; ++i) mat[static_cast<std::size_t>(col + i)][static_cast<std::size_t>(col)] = a[static_cast<std::size_t>(m - i)];
    for (long col = 0; col < m; ++col)
        for (long i = 0; i <= n; ++i) mat[static_cast<std::size_t>(col + i)][static_cast<std::size_t>(n + col)] = b[static_cast<std::size_t>(n - i)];
    return bareiss_det(std::move(mat));
}

ResultantResult finalize(const PolyZ& full, const Rat& extra) {
    ResultantResult rr;
    if (full.is_zero() || extra == 0) {
        rr.zero = true;
        rr.content = Rat(0);
        return rr;
    }
    Int cont = content(full);
    if (sign(full.leading()) < 0) cont = -cont;
    rr.primitive = full; // divide below
    for (auto& cc : rr.primitive.c) cc = exact_div_int(cc, cont);
    rr.content = Rat(cont) * extra;
    return rr;
}

} // namespace

PolyZ bareiss_det(std::vector<std::vector<PolyZ>> m) {
    std::size_t n = m.size();
    if (n == 0) return PolyZ(Int(1));
    int detsign = 1;
    PolyZ prev(Int(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return {}; // singular
            std::swap(m[k], m[swap_row]);
            detsign = -detsign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                PolyZ t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(t, prev);
            }
        prev = m[k][k];
    }
    PolyZ det = m[n - 1][n - 1];
    if (detsign < 0) det = Int(-1) * det;
    return det;
}

ResultantResult resultant_second_sylvester(const BiQ& a, const BiQ& b) {
    IntCoeffs A = integerize(a), B = integerize(b);
    long m = degz(A.c), n = degz(B.c);
    if (m < 0 || n < 0) return finalize({}, Rat(0));
    Rat extra = pow_rat(A.scale, n) * pow_rat(B.scale, m);
    return finalize(sylvester(A.c, B.c), extra);
}

ResultantResult resultant_second(const BiQ& a, const BiQ& b) {
    IntCoeffs A = integerize(a), B = integerize(b);
    long m = degz(A.c), n = degz(B.c);
    if (m < 0 || n < 0) return finalize({}, Rat(0));
    Rat extra = pow_rat(A.scale, n) * pow_rat(B.scale, m);
    if (n == 0) {
        // Res(a, const) = const^deg(a)
        return finalize(pow_poly(B.c[0], static_cast<unsigned long>(m)), extra);
    }
    if (m < n) {
        ResultantResult rr = resultant_second(b, a);
        if ((m * n) % 2 != 0) rr.content = -rr.content;
        // recompute extra consistently: the recursive call already used both scales
        return rr;
    }
    if (m <= n + 1 || n > 6) {
        // no useful reduction; assemble directly
        return finalize(sylvester(A.c, B.c), extra);
    }
    // reduce A modulo B in the eliminated variable, tracking the pseudo-division
    // multiplier: lb^steps * A = Q*B + R, so
    //   lb^(steps*n) * Res(B, A) = lb^(m - deg R) * Res(B, R)
    const PolyZ lb = B.c.back();
    std::vector<PolyZ> R = A.c;
    long steps = 0;
    while (degz(R) >= n) {
        std::size_t k = static_cast<std::size_t>(degz(R) - n);
        PolyZ lr = R.back();
        for (auto& cp : R) cp = cp * lb;
        for (std::size_t i = 0; i < B.c.size(); ++i) R[i + k] = R[i + k] - lr * B.c[i];
        while (!R.empty() && R.back().is_zero()) R.pop_back();
        ++steps;
    }
    if (R.empty()) return finalize({}, Rat(0)); // common factor
    long dR = degz(R);
    PolyZ res_small = sylvester(B.c, R); // Res(B, R)
    long e = (m - dR) - steps * n;
    PolyZ full;
    if (e >= 0) {
        full = res_small * pow_poly(lb, static_cast<unsigned long>(e));
    } else {
        full = exact_div(res_small, pow_poly(lb, static_cast<unsigned long>(-e)));
    }
    // Res(A, B) = (-1)^(m n) Res(B, A)
    if ((m * n) % 2 != 0) full = Int(-1) * full;
    return finalize(full, extra);
}

BiQ common_factor(const BiQ& a, const BiQ& b) { return gcd_bipoly(a, b); }

} // namespace ect
