#pragma once
// Sparse bivariate polynomials. Terms are keyed by (exponent of first variable,
// exponent of second variable); the generic names below are x and z.
#include "ectcert/poly.hpp"
#include <map>
#include <optional>

namespace ect {

template <class S>
struct BiPoly {
    std::map<std::pair<int, int>, S> t;

    BiPoly() = default;
    explicit BiPoly(const S& s) {
        if (!(s == S(0))) t[{0, 0}] = s;
    }
    explicit BiPoly(long v) : BiPoly(S(v)) {}

    void add_term(int i, int j, const S& coeff) {
        if (coeff == S(0)) return;
        auto it = t.find({i, j});
        if (it == t.end()) {
            t[{i, j}] = coeff;
        } else {
            it->second += coeff;
            if (it->second == S(0)) t.erase(it);
        }
    }
    bool is_zero() const { return t.empty(); }
    bool operator==(const BiPoly& o) const { return t == o.t; }
    int deg_first() const {
        int d = -1;
        for (auto& [e, c] : t) d = std::max(d, e.first);
        return d;
    }
    int deg_second() const {
        int d = -1;
        for (auto& [e, c] : t) d = std::max(d, e.second);
        return d;
    }
};

using BiQ = BiPoly<Rat>;

template <class S>
BiPoly<S> operator+(const BiPoly<S>& a, const BiPoly<S>& b) {
    BiPoly<S> r = a;
    for (auto& [e, c] : b.t) r.add_term(e.first, e.second, c);
    return r;
}

template <class S>
BiPoly<S> operator-(const BiPoly<S>& a) {
    BiPoly<S> r = a;
    for (auto& [e, c] : r.t) c = -c;
    return r;
}

template <class S>
BiPoly<S> operator-(const BiPoly<S>& a, const BiPoly<S>& b) {
    return a + (-b);
}

template <class S>
BiPoly<S> operator*(const BiPoly<S>& a, const BiPoly<S>& b) {
    BiPoly<S> r;
    for (auto& [ea, ca] : a.t)
        for (auto& [eb, cb] : b.t)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

template <class S>
BiPoly<S> operator*(const S& s, const BiPoly<S>& a) {
    if (s == S(0)) return {};
    BiPoly<S> r = a;
    for (auto& [e, c] : r.t) c = c * s;
    return r;
}

template <class S>
BiPoly<S> lift_first(const Polynomial<S>& p) {
    BiPoly<S> r;
    for (std::size_t i = 0; i < p.c.size(); ++i) r.add_term(static_cast<int>(i), 0, p.c[i]);
    return r;
}

template <class S>
BiPoly<S> lift_second(const Polynomial<S>& p) {
    BiPoly<S> r;
    for (std::size_t i = 0; i < p.c.size(); ++i) r.add_term(0, static_cast<int>(i), p.c[i]);
    return r;
}

template <class S>
BiPoly<S> swap_vars(const BiPoly<S>& a) {
    BiPoly<S> r;
    for (auto& [e, c] : a.t) r.t[{e.second, e.first}] = c;
    return r;
}

template <class S>
BiPoly<S> partial_first(const BiPoly<S>& a) {
    BiPoly<S> r;
    for (auto& [e, c] : a.t)
        if (e.first > 0) r.add_term(e.first - 1, e.second, c * S(e.first));
    return r;
}

template <class S>
BiPoly<S> partial_second(const BiPoly<S>& a) {
    BiPoly<S> r;
    for (auto& [e, c] : a.t)
        if (e.second > 0) r.add_term(e.first, e.second - 1, c * S(e.second));
    return r;
}

// coefficients with respect to the second variable: out[j] = coeff of z^j (poly in x)
template <class S>
std::vector<Polynomial<S>> coeffs_in_second(const BiPoly<S>& a) {
    std::vector<Polynomial<S>> out(static_cast<std::size_t>(std::max(0, a.deg_second() + 1)));
    for (auto& [e, c] : a.t) {
        auto& p = out[static_cast<std::size_t>(e.second)];
        if (p.c.size() <= static_cast<std::size_t>(e.first)) p.c.resize(e.first + 1, S(0));
        p.c[static_cast<std::size_t>(e.first)] = c;
    }
    for (auto& p : out) p.trim();
    return out;
}

template <class S>
BiPoly<S> from_coeffs_in_second(const std::vector<Polynomial<S>>& cs) {
    BiPoly<S> r;
    for (std::size_t j = 0; j < cs.size(); ++j)
        for (std::size_t i = 0; i < cs[j].c.size(); ++i)
            r.add_term(static_cast<int>(i), static_cast<int>(j), cs[j].c[i]);
    return r;
}

// substitute second variable := value
template <class S>
Polynomial<S> eval_second(const BiPoly<S>& a, const S& value) {
    auto cs = coeffs_in_second(a);
    Polynomial<S> acc;
    for (std::size_t j = cs.size(); j-- > 0;) acc = Polynomial<S>(value) * acc + cs[j];
    return acc;
}

// a(P(u), Q(v)) — substitute polynomials for both variables
template <class S>
BiPoly<S> compose_vars(const BiPoly<S>& a, const Polynomial<S>& P, const Polynomial<S>& Q) {
    auto cs = coeffs_in_second(a);
    BiPoly<S> acc;
    BiPoly<S> Qv = lift_second(Q);
    for (std::size_t j = cs.size(); j-- > 0;) acc = Qv * acc + lift_first(compose(cs[j], P));
    return acc;
}

inline Rat content(const BiQ& a) {
    if (a.is_zero()) return Rat(0);
    Int gn = 0, ld = 1;
    for (auto& [e, c] : a.t) {
        gn = gcd_int(gn, num(c));
        ld = lcm_int(ld, den(c));
    }
    return make_rat(gn, ld);
}

// canonical: content 1, leading (lex, first variable major) coefficient positive
inline BiQ normalize_content(const BiQ& a) {
    if (a.is_zero()) return a;
    Rat c = content(a);
    if (sign(a.t.rbegin()->second) < 0) c = -c;
    return Rat(1 / c) * a;
}

// exact division via lex-ordered monomial reduction; nullopt if not divisible
inline std::optional<BiQ> divide_exact(const BiQ& a, const BiQ& b) {
    if (b.is_zero()) return std::nullopt;
    BiQ r = a, q;
    auto lb = *b.t.rbegin(); // lex-leading term of b
    while (!r.is_zero()) {
        auto lr = *r.t.rbegin();
        int di = lr.first.first - lb.first.first;
        int dj = lr.first.second - lb.first.second;
        if (di < 0 || dj < 0) return std::nullopt;
        Rat f = lr.second / lb.second;
        BiQ term;
        term.add_term(di, dj, f);
        q = q + term;
        r = r - term * b;
    }
    return q;
}

// gcd with the second variable as the main one: primitive PRS over Q[x]
inline PolyQ content_wrt_second(const BiQ& a) {
    PolyQ g;
    for (auto& cp : coeffs_in_second(a)) g = gcd_poly(g, cp);
    return g; // monic (or zero)
}

inline BiQ gcd_bipoly(const BiQ& a0, const BiQ& b0) {
    if (a0.is_zero()) return normalize_content(b0);
    if (b0.is_zero()) return normalize_content(a0);
    PolyQ ca = content_wrt_second(a0), cb = content_wrt_second(b0);
    PolyQ cg = gcd_poly(ca, cb);
    auto strip = [](const BiQ& p, const PolyQ& c) {
        if (c.degree() <= 0) return p;
        auto cs = coeffs_in_second(p);
        for (auto& cp : cs) cp = divmod(cp, c).first;
        return from_coeffs_in_second(cs);
    };
    std::vector<PolyQ> A = coeffs_in_second(strip(a0, ca));
    std::vector<PolyQ> B = coeffs_in_second(strip(b0, cb));
    auto degz = [](const std::vector<PolyQ>& p) { return static_cast<long>(p.size()) - 1; };
    auto trimz = [](std::vector<PolyQ>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    trimz(A);
    trimz(B);
    if (degz(A) < degz(B)) std::swap(A, B);
    auto prim = [&](std::vector<PolyQ> p) {
        PolyQ g;
        for (auto& cp : p) g = gcd_poly(g, cp);
        if (g.degree() > 0)
            for (auto& cp : p) cp = divmod(cp, g).first;
        // also strip the rational content for size control
        Rat rc(0);
        for (auto& cp : p)
            for (auto& cc : cp.c) {
                if (cc == 0) continue;
                rc = rc == 0 ? abs_rat(cc) : make_rat(gcd_int(num(rc), num(cc)), lcm_int(den(rc), den(cc)));
            }
        if (rc != 0 && rc != 1)
            for (auto& cp : p) cp = Rat(1 / rc) * cp;
        return p;
    };
    while (!B.empty()) {
        // pseudo-remainder of A by B in the z variable, coefficients in Q[x]
        PolyQ lb = B.back();
        std::vector<PolyQ> R = A;
        while (!R.empty() && degz(R) >= degz(B)) {
            std::size_t k = static_cast<std::size_t>(degz(R) - degz(B));
            PolyQ lr = R.back();
            for (auto& cp : R) cp = cp * lb;
            for (std::size_t i = 0; i < B.size(); ++i) R[i + k] = R[i + k] - lr * B[i];
            trimz(R);
        }
        A = B;
        B = prim(R);
        trimz(B);
    }
    BiQ g = from_coeffs_in_second(prim(A));
    if (cg.degree() > 0) g = g * lift_first(cg);
    return normalize_content(g);
}

template <class S>
std::string to_string(const BiPoly<S>& p, const std::string& v1 = "x", const std::string& v2 = "z") {
    if (p.is_zero()) return "0";
    // order: first variable descending, then second ascending
    std::vector<std::pair<std::pair<int, int>, S>> terms(p.t.begin(), p.t.end());
    std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second < b.first.second;
    });
    std::string out;
    for (auto& [e, c] : terms) {
        bool neg = sign(c) < 0;
        S mag = neg ? S(-c) : c;
        std::string ms = coeff_text(mag);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        std::string vars;
        if (e.first > 0) {
            vars += v1;
            if (e.first > 1) vars += "^" + std::to_string(e.first);
        }
        if (e.second > 0) {
            if (!vars.empty()) vars += "*";
            vars += v2;
            if (e.second > 1) vars += "^" + std::to_string(e.second);
        }
        if (vars.empty()) {
            out += ms;
        } else {
            if (ms != "1") out += ms + "*";
            out += vars;
        }
    }
    return out;
}

} // namespace ect
