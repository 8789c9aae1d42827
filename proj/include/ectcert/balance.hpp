// Factored rational arithmetic for balance construction and differentiation
// along curves.
//
// Differentiating a quotient whose denominator is a known product of fixed
// base polynomials never needs a gcd: the denominator exponents just grow by
// the logarithmic-derivative rule.  This module implements that arithmetic:
// values are (numerator polynomial, multiset of base-factor exponents) pairs
// over a shared registry of primitive base factors.  One reduction pass at
// the end (exact division loops per base factor, with on-demand splitting of
// reducible bases via gcd) produces the fully reduced quotient, so results
// match what a general-purpose simplifier would return, at a fraction of the
// cost on the deep derivative towers the Wronskians need.
#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ectcert/bipoly.hpp"
#include "ectcert/poly.hpp"
#include "ectcert/ratfunc.hpp"

namespace ect {

inline Rat rat_pow(const Rat& b, long e) {
    Rat r(1), a = b;
    long n = e < 0 ? -e : e;
    while (n > 0) {
        if (n & 1) r = Rat(r * a);
        n >>= 1;
        if (n > 0) a = Rat(a * a);
    }
    if (e < 0) r = Rat(Rat(1) / r);
    return r;
}

// ---------------------------------------------------------------------------
// Factorization by squarefree decomposition + rational-root extraction.
// parts are primitive integer polynomials with positive leading coefficient;
// p = unit * prod parts[i]^mult[i].  Pieces without rational roots stay
// whole (they are split on demand later if they ever share a factor with a
// numerator).
struct FactorList {
    Rat unit;
    std::vector<std::pair<PolyQ, long>> parts;
};

FactorList factor_rational_roots(const PolyQ& p);

// ---------------------------------------------------------------------------
// Scalar-domain operations used generically over PolyQ / BiQ.
template <class P>
struct FacOps;

template <>
struct FacOps<PolyQ> {
    static constexpr int arity = 1;
    static PolyQ one() { return PolyQ(Rat(1)); }
    static bool is_constant(const PolyQ& p) { return p.degree() <= 0; }
    static long degree(const PolyQ& p) { return p.degree(); }
    static PolyQ partial(const PolyQ& p, int) { return derivative(p); }
    static bool divides(const PolyQ& d, const PolyQ& n, PolyQ& q) {
        if (n.is_zero()) { q = n; return true; }
        auto dm = divmod(n, d);
        if (!dm.second.is_zero()) return false;
        q = dm.first;
        return true;
    }
    static PolyQ gcd(const PolyQ& a, const PolyQ& b) { return gcd_poly(a, b); }
    // p = unit * out with out integer-primitive, positive leading coefficient
    static PolyQ canonical(const PolyQ& p, Rat& unit) {
        Rat c = content(p);
        PolyQ r = Rat(Rat(1) / c) * p;
        if (sign(r.leading()) < 0) {
            c = -c;
            r = Rat(-1) * r;
        }
        unit = c;
        return r;
    }
    static std::string text(const PolyQ& p) { return to_string(p, "x"); }
};

template <>
struct FacOps<BiQ> {
    static constexpr int arity = 2;
    static BiQ one() { return BiQ(Rat(1)); }
    static bool is_constant(const BiQ& p) {
        for (auto& [e, c] : p.t)
            if (e.first != 0 || e.second != 0) return false;
        return true;
    }
    static long degree(const BiQ& p) {
        long d = -1;
        for (auto& [e, c] : p.t) d = std::max(d, long(e.first) + long(e.second));
        return d;
    }
    static BiQ partial(const BiQ& p, int which) {
        return which == 0 ? partial_first(p) : partial_second(p);
    }
    static bool divides(const BiQ& d, const BiQ& n, BiQ& q) {
        if (n.is_zero()) { q = n; return true; }
        auto r = divide_exact(n, d);
        if (!r) return false;
        q = *r;
        return true;
    }
    static BiQ gcd(const BiQ& a, const BiQ& b) { return gcd_bipoly(a, b); }
    static BiQ canonical(const BiQ& p, Rat& unit) {
        BiQ r = normalize_content(p);
        // p = unit * r; read the unit off any surviving term
        auto it = r.t.begin();
        unit = Rat(p.t.at(it->first) / it->second);
        return r;
    }
    static std::string text(const BiQ& p) { return to_string(p, "x", "z"); }
};

// ---------------------------------------------------------------------------
template <class P>
struct Fac {
    P num;
    std::map<int, long> den;  // base index -> exponent (> 0)
};

template <class P>
class FacAlgebra {
  public:
    using Ops = FacOps<P>;
    std::vector<P> base;  // canonical (integer-primitive, positive-leading)

    int ensure(const P& canon) {
        for (std::size_t i = 0; i < base.size(); ++i)
            if (base[i] == canon) return static_cast<int>(i);
        base.push_back(canon);
        return static_cast<int>(base.size()) - 1;
    }

    Fac<P> make(P n) const { return Fac<P>{std::move(n), {}}; }
    Fac<P> zero() const { return Fac<P>{P{}, {}}; }
    Fac<P> one() const { return Fac<P>{Ops::one(), {}}; }
    bool is_zero(const Fac<P>& f) const { return f.num.is_zero(); }

    // f *= p^e (e may be negative; p nonzero)
    void multiply_power(Fac<P>& f, const P& p, long e) {
        if (e == 0) return;
        if (p.is_zero()) throw std::logic_error("multiply_power: zero factor");
        Rat unit;
        P canon = Ops::canonical(p, unit);
        f.num = rat_pow(unit, e) * f.num;
        if (Ops::is_constant(canon)) return;  // canonical constant is 1
        if (e > 0) {
            int idx = ensure(canon);
            auto it = f.den.find(idx);
            if (it != f.den.end()) {
                // cancel against an existing denominator exponent
                long take = std::min(e, it->second);
                it->second -= take;
                e -= take;
                if (it->second == 0) f.den.erase(it);
            }
            for (long i = 0; i < e; ++i) f.num = f.num * canon;
        } else {
            f.den[ensure(canon)] += -e;
        }
    }

    Fac<P> neg(Fac<P> a) const {
        a.num = Rat(-1) * a.num;
        return a;
    }

    Fac<P> scale(const Rat& c, Fac<P> a) const {
        a.num = c * a.num;
        return a;
    }

    Fac<P> mul(const Fac<P>& a, const Fac<P>& b) {
        Fac<P> r;
        r.num = a.num * b.num;
        r.den = a.den;
        for (auto& [i, e] : b.den) r.den[i] += e;
        reduce(r);
        return r;
    }

    Fac<P> add(const Fac<P>& a, const Fac<P>& b) {
        Fac<P> r;
        r.den = a.den;
        for (auto& [i, e] : b.den) {
            auto it = r.den.find(i);
            if (it == r.den.end())
                r.den[i] = e;
            else
                it->second = std::max(it->second, e);
        }
        P ma = Ops::one(), mb = Ops::one();
        for (auto& [i, e] : r.den) {
            long ea = 0, eb = 0;
            if (auto it = a.den.find(i); it != a.den.end()) ea = it->second;
            if (auto it = b.den.find(i); it != b.den.end()) eb = it->second;
            for (long j = ea; j < e; ++j) ma = ma * base[i];
            for (long j = eb; j < e; ++j) mb = mb * base[i];
        }
        r.num = a.num * ma + b.num * mb;
        reduce(r);
        return r;
    }

    Fac<P> sub(const Fac<P>& a, const Fac<P>& b) { return add(a, neg(b)); }

    Fac<P> partial(const Fac<P>& f, int which) {
        // active bases: nonconstant derivative w.r.t. `which`
        std::vector<std::pair<int, long>> act;
        std::vector<P> dbase;
        for (auto& [i, e] : f.den) {
            P d = Ops::partial(base[i], which);
            if (!d.is_zero()) {
                act.push_back({i, e});
                dbase.push_back(d);
            }
        }
        Fac<P> r;
        r.den = f.den;
        for (auto& [i, e] : act) r.den[i] = e + 1;
        std::size_t n = act.size();
        // prefix[i] = prod_{j<i} base, suffix[i] = prod_{j>i} base
        std::vector<P> prefix(n + 1, Ops::one()), suffix(n + 1, Ops::one());
        for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * base[act[i].first];
        for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * base[act[i].first];
        P dnum = Ops::partial(f.num, which);
        r.num = dnum * prefix[n];
        for (std::size_t i = 0; i < n; ++i) {
            P term = f.num * dbase[i] * prefix[i] * suffix[i + 1];
            r.num = r.num - Rat(act[i].second) * term;
        }
        reduce(r);
        return r;
    }

    // Cheap pass: divide the numerator by denominator bases as often as they
    // divide exactly.  Complete whenever every base is irreducible.
    void reduce(Fac<P>& f) {
        if (f.num.is_zero()) {
            f.den.clear();
            return;
        }
        for (auto it = f.den.begin(); it != f.den.end();) {
            P q;
            while (it->second > 0 && Ops::divides(base[it->first], f.num, q)) {
                f.num = q;
                --it->second;
            }
            if (it->second == 0)
                it = f.den.erase(it);
            else
                ++it;
        }
    }

    // Full canonical reduction: after the cheap pass, any base of degree >= 2
    // still sharing a factor with the numerator is split by that gcd into two
    // registered bases and the pass repeats.  On exit
    // gcd(numerator, denominator) = 1.
    void reduce_full(Fac<P>& f) {
        bool changed = true;
        while (changed) {
            reduce(f);
            if (f.num.is_zero()) return;
            changed = false;
            for (auto& [i, e] : std::map<int, long>(f.den)) {
                if (Ops::degree(base[i]) < 2) continue;
                P g = Ops::gcd(f.num, base[i]);
                if (Ops::is_constant(g)) continue;
                Rat ug, uq;
                P gbar = Ops::canonical(g, ug);
                P q;
                if (!Ops::divides(gbar, base[i], q))
                    throw std::logic_error("reduce_full: gcd does not divide base");
                P qbar = Ops::canonical(q, uq);
                // base^e = (uq^e) gbar^e qbar^e
                f.num = rat_pow(uq, -e) * f.num;
                f.den.erase(i);
                f.den[ensure(gbar)] += e;
                if (!Ops::is_constant(qbar)) f.den[ensure(qbar)] += e;
                changed = true;
                break;  // indices changed; restart scan
            }
        }
    }

    P den_expanded(const Fac<P>& f) const {
        P d = Ops::one();
        for (auto& [i, e] : f.den)
            for (long j = 0; j < e; ++j) d = d * base[i];
        return d;
    }
};

// Determinant of a k x k matrix of factored values by cofactor expansion
// along the first row (k is small: at most the family size).
template <class P>
Fac<P> det_fac(FacAlgebra<P>& alg, const std::vector<std::vector<Fac<P>>>& m) {
    std::size_t k = m.size();
    if (k == 0) return alg.one();
    if (k == 1) return m[0][0];
    Fac<P> acc = alg.zero();
    for (std::size_t j = 0; j < k; ++j) {
        if (alg.is_zero(m[0][j])) continue;
        std::vector<std::vector<Fac<P>>> minor;
        minor.reserve(k - 1);
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<Fac<P>> row;
            row.reserve(k - 1);
            for (std::size_t jj = 0; jj < k; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        Fac<P> term = alg.mul(m[0][j], det_fac(alg, minor));
        if (j % 2) term = alg.neg(term);
        acc = alg.add(acc, term);
    }
    return acc;
}

using FacQ = Fac<PolyQ>;
using FacB = Fac<BiQ>;
using AlgQ = FacAlgebra<PolyQ>;
using AlgB = FacAlgebra<BiQ>;

}  // namespace ect
