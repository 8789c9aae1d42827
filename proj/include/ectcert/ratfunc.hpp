#pragma once
// Univariate and bivariate rational functions over Q, kept in reduced form.
#include "ectcert/bipoly.hpp"
#include <optional>
#include <stdexcept>

namespace ect {

struct RatFunc {
    PolyQ n; // numerator
    PolyQ d; // denominator: monic, coprime to n
    RatFunc() : n(), d(PolyQ(Rat(1))) {}
};

inline RatFunc make_ratfunc(PolyQ num, PolyQ den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) return {};
    PolyQ g = gcd_poly(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    Rat lead = den.leading();
    RatFunc f;
    Rat inv = 1 / lead;
    f.n = inv * num;
    f.d = inv * den;
    return f;
}

inline RatFunc ratfunc_of(const PolyQ& p) {
    RatFunc f;
    f.n = p;
    return f;
}
inline RatFunc ratfunc_of(const Rat& r) { return ratfunc_of(PolyQ(r)); }

inline bool is_zero(const RatFunc& f) { return f.n.is_zero(); }
inline bool operator==(const RatFunc& a, const RatFunc& b) { return a.n == b.n && a.d == b.d; }

inline RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return make_ratfunc(a.n * b.d + b.n * a.d, a.d * b.d);
}
inline RatFunc operator-(const RatFunc& a) {
    RatFunc f = a;
    f.n = -f.n;
    return f;
}
inline RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
inline RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return make_ratfunc(a.n * b.n, a.d * b.d);
}
inline RatFunc operator*(const Rat& s, const RatFunc& a) { return make_ratfunc(s * a.n, a.d); }
inline RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (is_zero(b)) throw std::domain_error("division by zero rational function");
    return make_ratfunc(a.n * b.d, a.d * b.n);
}

inline RatFunc derivative(const RatFunc& f) {
    return make_ratfunc(derivative(f.n) * f.d - f.n * derivative(f.d), f.d * f.d);
}

// f(g) for polynomial f and rational g, via homogenization
inline RatFunc compose_poly(const PolyQ& f, const RatFunc& g) {
    long deg = f.degree();
    if (deg <= 0) return ratfunc_of(f);
    // f(n/d) = (sum_i a_i n^i d^(deg-i)) / d^deg, numerator by Horner
    PolyQ acc;
    for (long i = deg; i >= 0; --i)
        acc = acc * g.n + f.coeff(i) * pow_poly(g.d, static_cast<unsigned>(deg - i));
    return make_ratfunc(acc, pow_poly(g.d, static_cast<unsigned>(deg)));
}

inline RatFunc compose(const RatFunc& f, const RatFunc& g) {
    return compose_poly(f.n, g) / compose_poly(f.d, g);
}

inline std::optional<Rat> eval(const RatFunc& f, const Rat& x) {
    Rat dv = eval_as<Rat>(f.d, x);
    if (dv == 0) return std::nullopt;
    return eval_as<Rat>(f.n, x) / dv;
}

// order of vanishing at 0 (negative for a pole); throws on the zero function
inline long valuation_at_zero(const RatFunc& f) {
    if (is_zero(f)) throw std::domain_error("valuation of zero function");
    auto trail = [](const PolyQ& p) {
        long i = 0;
        while (p.c[static_cast<std::size_t>(i)] == 0) ++i;
        return i;
    };
    return trail(f.n) - trail(f.d);
}

inline bool analytic_at_zero(const RatFunc& f) {
    if (is_zero(f)) return true;
    return eval_as<Rat>(f.d, Rat(0)) != 0;
}

// Taylor coefficients c_0..c_nterms-1 at 0; requires analytic_at_zero
inline std::vector<Rat> series_expand(const RatFunc& f, std::size_t nterms) {
    if (!analytic_at_zero(f)) throw std::domain_error("series expansion at a pole");
    std::vector<Rat> c(nterms, Rat(0));
    Rat d0 = f.d.c.empty() ? Rat(1) : f.d.c[0];
    for (std::size_t k = 0; k < nterms; ++k) {
        Rat s = k < f.n.c.size() ? f.n.c[k] : Rat(0);
        for (std::size_t j = 1; j <= k && j < f.d.c.size(); ++j) s -= f.d.c[j] * c[k - j];
        c[k] = s / d0;
    }
    return c;
}

inline std::string to_string(const RatFunc& f, const std::string& var = "x") {
    if (f.d == PolyQ(Rat(1))) return to_string(f.n, var);
    return "(" + to_string(f.n, var) + ")/(" + to_string(f.d, var) + ")";
}

// ---------------------------------------------------------------------------

struct BiRat {
    BiQ n;
    BiQ d; // reduced against n; content 1, lex-leading coefficient positive
    BiRat() : n(), d(BiQ(Rat(1))) {}
};

inline BiRat make_birat(BiQ num, BiQ den) {
    if (den.is_zero()) throw std::domain_error("bivariate fraction with zero denominator");
    BiRat f;
    if (num.is_zero()) {
        f.d = BiQ(Rat(1));
        return f;
    }
    BiQ g = gcd_bipoly(num, den);
    if (!(g == BiQ(Rat(1)))) {
        num = *divide_exact(num, g);
        den = *divide_exact(den, g);
    }
    Rat c = content(den);
    if (sign(den.t.rbegin()->second) < 0) c = -c;
    Rat inv = 1 / c;
    f.n = inv * num;
    f.d = inv * den;
    return f;
}

inline BiRat birat_of(const BiQ& p) {
    BiRat f;
    f.n = p;
    return f;
}

inline bool is_zero(const BiRat& f) { return f.n.is_zero(); }
inline bool operator==(const BiRat& a, const BiRat& b) { return a.n == b.n && a.d == b.d; }

inline BiRat operator+(const BiRat& a, const BiRat& b) {
    return make_birat(a.n * b.d + b.n * a.d, a.d * b.d);
}
inline BiRat operator-(const BiRat& a) {
    BiRat f = a;
    f.n = -f.n;
    return f;
}
inline BiRat operator-(const BiRat& a, const BiRat& b) { return a + (-b); }
inline BiRat operator*(const BiRat& a, const BiRat& b) { return make_birat(a.n * b.n, a.d * b.d); }
inline BiRat operator*(const Rat& s, const BiRat& a) { return make_birat(BiQ(s) * a.n, a.d); }
inline BiRat operator/(const BiRat& a, const BiRat& b) {
    if (is_zero(b)) throw std::domain_error("division by zero fraction");
    return make_birat(a.n * b.d, a.d * b.n);
}

// f in the first-variable slot: f(x) viewed as a function of (x,z)
inline BiRat in_first(const RatFunc& f) {
    BiRat r;
    r.n = lift_first(f.n);
    r.d = lift_first(f.d);
    return r;
}
inline BiRat in_second(const RatFunc& f) {
    BiRat r;
    r.n = lift_second(f.n);
    r.d = lift_second(f.d);
    return r;
}

inline BiRat partial_first(const BiRat& f) {
    return make_birat(partial_first(f.n) * f.d - f.n * partial_first(f.d), f.d * f.d);
}
inline BiRat partial_second(const BiRat& f) {
    return make_birat(partial_second(f.n) * f.d - f.n * partial_second(f.d), f.d * f.d);
}

inline std::optional<Rat> eval_pair(const BiRat& f, const Rat& x, const Rat& z) {
    auto ev = [&](const BiQ& p) {
        Rat acc(0);
        for (auto& [e, c] : p.t) acc += c * pow_rat(x, e.first) * pow_rat(z, e.second);
        return acc;
    };
    Rat dv = ev(f.d);
    if (dv == 0) return std::nullopt;
    return ev(f.n) / dv;
}

inline std::string to_string(const BiRat& f, const std::string& v1 = "x", const std::string& v2 = "z") {
    if (f.d == BiQ(Rat(1))) return to_string(f.n, v1, v2);
    return "(" + to_string(f.n, v1, v2) + ")/(" + to_string(f.d, v1, v2) + ")";
}

} // namespace ect
