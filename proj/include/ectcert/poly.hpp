#pragma once
// Dense univariate polynomials over an exact (or floating) scalar S.
// Coefficients are stored lowest degree first; the top coefficient is nonzero.
#include "ectcert/rational.hpp"
#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ect {

template <class R, class S> struct Convert {
    static R run(const S& s) { return static_cast<R>(s); }
};
template <class S> struct Convert<S, S> {
    static const S& run(const S& s) { return s; }
};
template <> struct Convert<Rat, Int> {
    static Rat run(const Int& s) { return Rat(s); }
};
template <> struct Convert<double, Rat> {
    static double run(const Rat& s) { return s.get_d(); }
};
template <> struct Convert<double, Int> {
    static double run(const Int& s) { return s.get_d(); }
};
// two-term splits: recover more significand bits than a single get_d()
template <> struct Convert<long double, Rat> {
    static long double run(const Rat& s) {
        double hi = s.get_d();
        double lo = Rat(s - Rat(hi)).get_d();
        return static_cast<long double>(hi) + static_cast<long double>(lo);
    }
};
template <> struct Convert<long double, Int> {
    static long double run(const Int& s) {
        double hi = s.get_d();
        double lo = Rat(Rat(s) - Rat(hi)).get_d();
        return static_cast<long double>(hi) + static_cast<long double>(lo);
    }
};
template <class R, class S> R convert_scalar(const S& s) { return Convert<R, S>::run(s); }

template <class S>
struct Polynomial {
    std::vector<S> c; // c[i] multiplies x^i

    Polynomial() = default;
    explicit Polynomial(const S& s) {
        if (!(s == S(0))) c.push_back(s);
    }
    explicit Polynomial(long v) : Polynomial(S(v)) {}

    static Polynomial from_coeffs(std::vector<S> cs) {
        Polynomial p;
        p.c = std::move(cs);
        p.trim();
        return p;
    }
    static Polynomial monomial(const S& a, std::size_t k) {
        Polynomial p;
        if (!(a == S(0))) {
            p.c.assign(k + 1, S(0));
            p.c[k] = a;
        }
        return p;
    }
    static Polynomial variable() { return monomial(S(1), 1); }

    void trim() {
        while (!c.empty() && c.back() == S(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; } // -1 for zero
    const S& leading() const {
        assert(!c.empty());
        return c.back();
    }
    S coeff(std::size_t i) const { return i < c.size() ? c[i] : S(0); }
    bool operator==(const Polynomial& o) const { return c == o.c; }
};

using PolyQ = Polynomial<Rat>;
using PolyZ = Polynomial<Int>;
using PolyD = Polynomial<double>;

template <class S>
Polynomial<S> operator+(const Polynomial<S>& a, const Polynomial<S>& b) {
    std::vector<S> r(std::max(a.c.size(), b.c.size()), S(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return Polynomial<S>::from_coeffs(std::move(r));
}

template <class S>
Polynomial<S> operator-(const Polynomial<S>& a) {
    Polynomial<S> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

template <class S>
Polynomial<S> operator-(const Polynomial<S>& a, const Polynomial<S>& b) {
    return a + (-b);
}

template <class S>
Polynomial<S> operator*(const Polynomial<S>& a, const Polynomial<S>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> r(a.c.size() + b.c.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == S(0)) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return Polynomial<S>::from_coeffs(std::move(r));
}

template <class S>
Polynomial<S> operator*(const S& s, const Polynomial<S>& a) {
    if (s == S(0)) return {};
    Polynomial<S> r = a;
    for (auto& x : r.c) x = x * s;
    r.trim();
    return r;
}

// multiply by x^k
template <class S>
Polynomial<S> mul_xk(const Polynomial<S>& a, std::size_t k) {
    if (a.is_zero()) return {};
    Polynomial<S> r;
    r.c.assign(a.c.size() + k, S(0));
    std::copy(a.c.begin(), a.c.end(), r.c.begin() + static_cast<long>(k));
    return r;
}

template <class S>
Polynomial<S> derivative(const Polynomial<S>& a) {
    if (a.c.size() <= 1) return {};
    std::vector<S> r(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i] * S(static_cast<long>(i));
    return Polynomial<S>::from_coeffs(std::move(r));
}

template <class R, class S>
R eval_as(const Polynomial<S>& a, const R& x) {
    R acc(0);
    for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * x + convert_scalar<R>(a.c[i]);
    return acc;
}

template <class S>
Polynomial<S> pow_poly(const Polynomial<S>& a, unsigned long e) {
    Polynomial<S> r(S(1)), base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// a(b(x)) by Horner
template <class S>
Polynomial<S> compose(const Polynomial<S>& a, const Polynomial<S>& b) {
    Polynomial<S> acc;
    for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * b + Polynomial<S>(a.c[i]);
    return acc;
}

// ---- field division (S must be a field: Rat or double) ----
template <class S>
std::pair<Polynomial<S>, Polynomial<S>> divmod(const Polynomial<S>& a, const Polynomial<S>& b) {
    assert(!b.is_zero());
    Polynomial<S> q, r = a;
    if (r.degree() >= b.degree()) q.c.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, S(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        S f = r.leading() / b.leading();
        std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        q.c[k] = f;
        r = r - (f * mul_xk(b, k));
    }
    q.trim();
    return {q, r};
}

// exact ring division (throws if the division does not come out exact)
template <class S>
Polynomial<S> exact_div(const Polynomial<S>& a, const Polynomial<S>& b) {
    if (a.is_zero()) return {};
    if (b.is_zero()) throw std::domain_error("exact_div by zero polynomial");
    Polynomial<S> q, r = a;
    if (r.degree() < b.degree()) throw std::domain_error("exact_div: not divisible");
    q.c.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, S(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        S f;
        if constexpr (std::is_same_v<S, Int>) {
            Int quo, rem;
            mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), r.leading().get_mpz_t(), b.leading().get_mpz_t());
            if (rem != 0) throw std::domain_error("exact_div: leading coefficient not divisible");
            f = quo;
        } else {
            f = r.leading() / b.leading();
        }
        std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        q.c[k] = f;
        r = r - (f * mul_xk(b, k));
    }
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    q.trim();
    return q;
}

// ---- integer-coefficient helpers ----
inline Int content(const PolyZ& a) {
    Int g = 0;
    for (const auto& x : a.c) g = gcd_int(g, x);
    return g; // nonnegative; 0 for the zero polynomial
}

inline PolyZ primitive_part(const PolyZ& a) {
    Int g = content(a);
    if (g == 0 || g == 1) return a;
    PolyZ r = a;
    for (auto& x : r.c) x /= g;
    return r;
}

/// positive rational content: a = content * primitive-integer-poly (sign kept in the poly)
inline Rat content(const PolyQ& a) {
    if (a.is_zero()) return Rat(0);
    Int gn = 0, ld = 1;
    for (const auto& x : a.c) {
        gn = gcd_int(gn, num(x));
        ld = lcm_int(ld, den(x));
    }
    return make_rat(gn, ld); // positive since gcd,lcm >= 0
}

struct IntScaled {
    PolyZ poly;  // primitive, sign preserved
    Rat scale;   // positive; input = scale * poly
};

inline IntScaled to_integer_poly(const PolyQ& a) {
    if (a.is_zero()) return {PolyZ{}, Rat(1)};
    Rat c = content(a);
    PolyZ p;
    p.c.reserve(a.c.size());
    for (const auto& x : a.c) {
        Rat q = x / c;
        assert(den(q) == 1);
        p.c.push_back(num(q));
    }
    return {p, c};
}

inline PolyQ to_rat_poly(const PolyZ& a) {
    PolyQ p;
    p.c.reserve(a.c.size());
    for (const auto& x : a.c) p.c.push_back(Rat(x));
    return p;
}

inline PolyD to_double_poly(const PolyQ& a) {
    PolyD p;
    p.c.reserve(a.c.size());
    for (const auto& x : a.c) p.c.push_back(x.get_d());
    return p;
}

/// pseudo-remainder: returns r with lc(b)^(deg a - deg b + 1) * a = q*b + r
inline PolyZ prem(const PolyZ& a, const PolyZ& b) {
    assert(!b.is_zero());
    PolyZ r = a;
    const Int& lb = b.leading();
    long target = a.degree() - b.degree() + 1;
    long steps = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Int lr = r.leading();
        std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        r = lb * r - lr * mul_xk(b, k);
        ++steps;
    }
    // pad the multiplier so the identity uses exactly lc(b)^(delta+1)
    for (; steps < target; ++steps) r = lb * r;
    return r;
}

// pseudo-remainder with a guaranteed POSITIVE multiplier |lc(b)|^(delta+1):
// sign-faithful version used by the Sturm chain.
inline PolyZ prem_positive(const PolyZ& a, const PolyZ& b) {
    PolyZ r = prem(a, b);
    long delta = a.degree() - b.degree();
    if (sign(b.leading()) < 0 && ((delta + 1) % 2) != 0) r = -r;
    return r;
}

// gcd of integer polynomials via the primitive PRS; positive leading coefficient.
inline PolyZ gcd_poly(const PolyZ& a0, const PolyZ& b0) {
    if (a0.is_zero() && b0.is_zero()) return {};
    if (a0.is_zero()) return sign(b0.leading()) < 0 ? -b0 : b0;
    if (b0.is_zero()) return sign(a0.leading()) < 0 ? -a0 : a0;
    Int cg = gcd_int(content(a0), content(b0));
    PolyZ a = primitive_part(a0), b = primitive_part(b0);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        PolyZ r = primitive_part(prem(a, b));
        a = b;
        b = r;
    }
    PolyZ g = cg * a;
    if (sign(g.leading()) < 0) g = -g;
    return g;
}

// monic gcd over the rationals
inline PolyQ gcd_poly(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() && b.is_zero()) return {};
    PolyZ g = gcd_poly(to_integer_poly(a).poly, to_integer_poly(b).poly);
    PolyQ r = to_rat_poly(g);
    Rat lead = r.leading();
    return Rat(Rat(1) / lead) * r;
}

inline PolyQ squarefree_part(const PolyQ& a) {
    if (a.degree() <= 0) return a;
    PolyQ g = gcd_poly(a, derivative(a));
    if (g.degree() <= 0) return a;
    return divmod(a, g).first;
}

// Yun's squarefree decomposition: a = content * prod factors[i].first ^ factors[i].second
inline std::vector<std::pair<PolyQ, unsigned>> squarefree_decompose(const PolyQ& a) {
    std::vector<std::pair<PolyQ, unsigned>> out;
    if (a.degree() <= 0) return out;
    PolyQ d = derivative(a);
    PolyQ g = gcd_poly(a, d);
    PolyQ w = divmod(a, g).first;
    PolyQ y = divmod(d, g).first;
    PolyQ z = y - derivative(w);
    unsigned i = 1;
    while (w.degree() > 0) {
        PolyQ gi = gcd_poly(w, z);
        if (gi.degree() > 0) out.emplace_back(gi, i);
        w = divmod(w, gi).first;
        y = divmod(z, gi).first;
        z = y - derivative(w);
        ++i;
    }
    return out;
}

inline std::optional<Rat> rat_kth_root(const Rat& a, unsigned long k) {
    if (a == 0) return Rat(0);
    if (a < 0) return std::nullopt; // even k only used here
    Int rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num(a).get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den(a).get_mpz_t(), k)) return std::nullopt;
    return make_rat(rn, rd);
}

// exact k-th root up to a constant: p = scale * root^k with monic-normalized root
inline std::optional<std::pair<PolyQ, Rat>> poly_kth_root(const PolyQ& p, unsigned k) {
    if (p.is_zero() || k == 0) return std::nullopt;
    if (p.degree() == 0) return std::make_pair(PolyQ(Rat(1)), p.coeff(0));
    if (p.degree() % k != 0) return std::nullopt;
    auto factors = squarefree_decompose(p);
    PolyQ root(Rat(1));
    long total = 0;
    for (auto& [f, m] : factors) {
        if (m % k != 0) return std::nullopt;
        root = root * pow_poly(f, m / k);
        total += static_cast<long>(m) * f.degree();
    }
    if (total != p.degree()) return std::nullopt; // content mismatch cannot happen past here
    // make root monic, compute scale
    Rat lead = root.leading();
    root = Rat(Rat(1) / lead) * root;
    PolyQ rk = pow_poly(root, k);
    // p = scale * rk
    Rat scale = p.leading(); // rk is monic
    PolyQ check = scale * rk;
    if (!(check == p)) return std::nullopt;
    return std::make_pair(root, scale);
}

// (1 + max |c_i| / |lc|): every real root has absolute value below this
inline Rat cauchy_bound(const PolyZ& p) {
    assert(!p.is_zero());
    Int m = 0;
    for (std::size_t i = 0; i + 1 < p.c.size(); ++i) m = std::max(m, abs_int(p.c[i]));
    return Rat(1) + make_rat(m, abs_int(p.leading()));
}

// ---- printing ----
inline std::string coeff_text(const Rat& a) { return a.get_str(); }
inline std::string coeff_text(const Int& a) { return a.get_str(); }

template <class S>
std::string to_string(const Polynomial<S>& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.c.size(); i-- > 0;) {
        const S& a = p.c[i];
        if (a == S(0)) continue;
        bool neg = sign(a) < 0;
        std::string mag = coeff_text(neg ? S(-a) : a);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (i == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace ect
