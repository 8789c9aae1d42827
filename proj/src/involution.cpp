#include "ectcert/involution.hpp"

#include <cstddef>
#include <vector>

namespace ect {
namespace {

// ---------------------------------------------------------------------------
// Truncated power series over Rat: a vector of coefficients of length K,
// index = power of x.  All operations stay at the fixed truncation order of
// the longer operand.

using Series = std::vector<Rat>;

Rat eval00(const BiQ& a);

Series series_of_poly(const PolyQ& p, std::size_t K) {
    Series s(K, Rat(0));
    for (std::size_t i = 0; i < K && i <= static_cast<std::size_t>(std::max<long>(p.degree(), 0)); ++i)
        if (static_cast<long>(i) <= p.degree()) s[i] = p.coeff(i);
    return s;
}

Series mul_series(const Series& a, const Series& b) {
    std::size_t K = std::max(a.size(), b.size());
    Series r(K, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < K; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Series sub_series(Series a, const Series& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

// Multiplicative inverse of a unit series (nonzero constant term).
Series inv_series(const Series& a) {
    Series r(a.size(), Rat(0));
    r[0] = 1 / a[0];
    for (std::size_t n = 1; n < a.size(); ++n) {
        Rat acc(0);
        for (std::size_t j = 1; j <= n; ++j) acc += a[j] * r[n - j];
        r[n] = -acc * r[0];
    }
    return r;
}

bool series_zero(const Series& a) {
    for (auto& c : a)
        if (c != 0) return false;
    return true;
}

// C(x, zeta(x)) truncated at order K, by Horner in the second variable.
Series eval_on_series(const BiQ& C, const Series& zeta, std::size_t K) {
    auto cs = coeffs_in_second(C);
    Series acc(K, Rat(0));
    for (std::size_t j = cs.size(); j-- > 0;) {
        acc = mul_series(acc, zeta);
        acc.resize(K, Rat(0));
        acc = sub_series(acc, series_of_poly(Rat(-1) * cs[j], K));
    }
    acc.resize(K, Rat(0));
    return acc;
}

// The unique power-series branch z = zeta(x), zeta(0) = 0, of C(x, z) = 0
// through the origin, to order K.  Requires C(0,0) = 0 and C_z(0,0) != 0
// (checked by the caller).  Newton iteration with precision doubling.
Series newton_branch(const BiQ& C, std::size_t K) {
    BiQ Cz = partial_second(C);
    Rat cx = eval_as<Rat>(eval_second(partial_first(C), Rat(0)), Rat(0));
    Rat cz = eval_as<Rat>(eval_second(Cz, Rat(0)), Rat(0));
    Series zeta(2, Rat(0));
    zeta[1] = -cx / cz;
    std::size_t prec = 2;
    while (prec < K) {
        prec = std::min(prec * 2, K);
        zeta.resize(prec, Rat(0));
        Series num = eval_on_series(C, zeta, prec);
        Series den = eval_on_series(Cz, zeta, prec);
        zeta = sub_series(zeta, mul_series(num, inv_series(den)));
        zeta.resize(prec, Rat(0));
    }
    if (!series_zero(eval_on_series(C, zeta, K)))
        throw std::logic_error("branch iteration failed to converge");
    return zeta;
}

// ---------------------------------------------------------------------------
// Nullspace of a K x n rational matrix (rows = equations), as a basis of
// column vectors.  Plain fraction-explicit Gauss-Jordan; the systems here
// are tiny (tens of unknowns).

std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> M, std::size_t n) {
    std::size_t rows = M.size();
    std::vector<long> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && M[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(M[rank], M[sel]);
        Rat inv = 1 / M[rank][col];
        for (std::size_t j = col; j < n; ++j) M[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || M[i][col] == 0) continue;
            Rat f = M[i][col];
            for (std::size_t j = col; j < n; ++j) M[i][j] -= f * M[rank][j];
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<Rat> v(n, Rat(0));
        v[free] = 1;
        for (std::size_t col = 0; col < n; ++col) {
            long pr = pivot_of_col[col];
            if (pr >= 0) v[col] = -M[static_cast<std::size_t>(pr)][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat eval00(const BiQ& a) { return eval_as<Rat>(eval_second(a, Rat(0)), Rat(0)); }

}  // namespace

BiQ involution_numerator(const RatFunc& A) {
    BiQ nx = lift_first(A.n), dx = lift_first(A.d);
    BiQ nz = lift_second(A.n), dz = lift_second(A.d);
    // A(x) - A(z) over the common denominator d(x) d(z); the denominator never
    // vanishes on the working interval, so only the numerator matters.
    BiQ N = nx * dz - nz * dx;
    BiQ xmz;
    xmz.add_term(1, 0, Rat(1));
    xmz.add_term(0, 1, Rat(-1));
    auto C = divide_exact(N, xmz);
    if (!C) throw std::logic_error("(x - z) must divide A(x) - A(z)");
    return normalize_content(*C);
}

InvolutionCurve find_involution(const RatFunc& A) {
    BiQ C = involution_numerator(A);
    long dz_C = static_cast<long>(coeffs_in_second(C).size()) - 1;
    long dx_C = 0;
    for (auto& cp : coeffs_in_second(C)) dx_C = std::max(dx_C, cp.degree());
    if (dz_C < 1)
        throw PreconditionError("level-set curve is independent of the second variable");
    if (eval00(C) != 0)
        throw PreconditionError("no factor of the level-set curve vanishes at the origin");
    if (eval00(partial_second(C)) == 0)
        throw PreconditionError(
            "origin branch of the level-set curve is not smooth and unique "
            "(vanishing z-derivative at the origin)");

    // Enough series precision that any bounded-degree polynomial vanishing on
    // the branch to this order vanishes identically on it (resultant-degree
    // bound), so exact division below cannot be fooled by truncation.
    std::size_t K = 2 * static_cast<std::size_t>(dx_C + 1) * static_cast<std::size_t>(dz_C + 1) + 8;
    Series zeta = newton_branch(C, K);

    // Precompute zeta^j mod x^K.
    std::vector<Series> zpow(static_cast<std::size_t>(dz_C) + 1);
    zpow[0] = Series(K, Rat(0));
    zpow[0][0] = 1;
    for (std::size_t j = 1; j < zpow.size(); ++j) {
        zpow[j] = mul_series(zpow[j - 1], zeta);
        zpow[j].resize(K, Rat(0));
    }

    for (long d = 1; d <= dz_C; ++d) {
        // Ansatz sum_{j<=d, i<=dx_C} a_{j,i} x^i z^j vanishing on the branch:
        // one linear equation per power of x.
        std::size_t ncols = static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(dx_C + 1);
        std::vector<std::vector<Rat>> M(K, std::vector<Rat>(ncols, Rat(0)));
        for (long j = 0; j <= d; ++j)
            for (long i = 0; i <= dx_C; ++i) {
                std::size_t col = static_cast<std::size_t>(j) * static_cast<std::size_t>(dx_C + 1) +
                                  static_cast<std::size_t>(i);
                for (std::size_t t = static_cast<std::size_t>(i); t < K; ++t)
                    M[t][col] = zpow[static_cast<std::size_t>(j)][t - static_cast<std::size_t>(i)];
            }
        for (auto& v : nullspace(std::move(M), ncols)) {
            BiQ cand;
            for (long j = 0; j <= d; ++j)
                for (long i = 0; i <= dx_C; ++i) {
                    Rat c = v[static_cast<std::size_t>(j) * static_cast<std::size_t>(dx_C + 1) +
                              static_cast<std::size_t>(i)];
                    if (c != 0) cand.add_term(static_cast<int>(i), static_cast<int>(j), c);
                }
            if (cand.is_zero()) continue;
            // Strip any pure-x content (a nullspace vector may be the factor
            // times an x-polynomial).
            PolyQ cont = content_wrt_second(cand);
            if (cont.degree() > 0) {
                auto stripped = coeffs_in_second(cand);
                for (auto& cp : stripped) cp = divmod(cp, cont).first;
                cand = from_coeffs_in_second(stripped);
            }
            cand = normalize_content(cand);
            if (!divide_exact(C, cand)) continue;

            if (eval00(cand) != 0) continue;
            Rat qx0 = eval00(partial_first(cand));
            Rat qz0 = eval00(partial_second(cand));
            if (qz0 == 0 || qx0 != qz0)
                throw PreconditionError(
                    "origin factor of the level-set curve violates the corner "
                    "conditions q_x(0,0) = q_z(0,0) != 0");

            InvolutionCurve out;
            out.q = cand;
            out.full = C;
            out.symmetric = (swap_vars(cand) == cand);
            auto cs = coeffs_in_second(cand);
            if (cs.size() == 2) {
                // q = a(x) + b(x) z  =>  sigma(x) = -a(x)/b(x).
                out.explicit_sigma = make_ratfunc(Rat(-1) * cs[0], cs[1]);
            }
            return out;
        }
    }
    throw PreconditionError("no polynomial factor captures the origin branch (reconstruction failed)");
}

}  // namespace ect
