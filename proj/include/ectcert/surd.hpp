#pragma once
// Exact quadratic irrationals a + b*sqrt(d) and interval endpoints (finite or infinite).
#include "ectcert/poly.hpp"
#include <optional>
#include <stdexcept>
#include <cmath>
#include <string>

namespace ect {

struct SurdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// value a + b*sqrt(d); d squarefree and >= 0; b == 0 forces d == 0
struct Surd {
    Rat a{0}, b{0};
    long d{0};

    Surd() = default;
    explicit Surd(const Rat& r) : a(r) {}
    explicit Surd(long v) : a(v) {}
    Surd(Rat a_, Rat b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
        if (b == 0) d = 0;
        if (d == 0) b = 0;
        if (d < 0) throw SurdError("negative radicand");
    }
    bool is_rational() const { return b == 0; }
    bool operator==(const Surd& o) const { return a == o.a && b == o.b && d == o.d; }
};

// strip the largest square factor: n = square * rest with rest squarefree
inline std::pair<Int, Int> strip_square(Int n) {
    if (n < 0) throw SurdError("negative radicand");
    Int sq = 1, rest = 1;
    for (Int p = 2; p * p <= n && p < 1000000; ++p) {
        while (n % (p * p) == 0) {
            sq *= p;
            n /= p * p;
        }
        while (n % p == 0) {
            rest *= p;
            n /= p;
        }
    }
    if (is_perfect_square(n)) {
        sq *= isqrt(n);
        n = 1;
    }
    if (n > Int("1000000000000")) throw SurdError("radicand too large to normalize");
    rest *= n;
    return {sq, rest};
}

inline Surd sqrt_of_rat(const Rat& r) {
    if (r < 0) throw SurdError("square root of a negative rational");
    if (r == 0) return Surd(Rat(0));
    // sqrt(p/q) = sqrt(p*q)/q
    Int pq = num(r) * den(r);
    auto [sq, rest] = strip_square(pq);
    Rat coeff = make_rat(sq, den(r));
    if (rest == 1) return Surd(coeff);
    if (!rest.fits_slong_p()) throw SurdError("radicand too large to normalize");
    return Surd(Rat(0), coeff, rest.get_si());
}

inline bool same_field(const Surd& x, const Surd& y) {
    return x.d == y.d || x.is_rational() || y.is_rational();
}

inline Surd operator+(const Surd& x, const Surd& y) {
    if (!same_field(x, y)) throw SurdError("mixed radicands in surd addition");
    long d = x.is_rational() ? y.d : x.d;
    return Surd(x.a + y.a, x.b + y.b, d);
}
inline Surd operator-(const Surd& x) { return Surd(-x.a, -x.b, x.d); }
inline Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

inline Surd operator*(const Surd& x, const Surd& y) {
    if (!same_field(x, y)) throw SurdError("mixed radicands in surd multiplication");
    long d = x.is_rational() ? y.d : x.d;
    return Surd(x.a * y.a + x.b * y.b * Rat(d), x.a * y.b + x.b * y.a, d);
}

inline bool is_zero(const Surd& x) { return x.a == 0 && x.b == 0; }

inline int sign(const Surd& x) {
    if (x.b == 0) return sign(x.a);
    if (x.a == 0) return sign(x.b);
    int sa = sign(x.a), sb = sign(x.b);
    if (sa == sb) return sa;
    // a and b*sqrt(d) compete: compare a^2 with b^2 d
    Rat a2 = x.a * x.a, b2d = x.b * x.b * Rat(x.d);
    if (a2 == b2d) return 0;
    return a2 > b2d ? sa : sb;
}

inline Surd inverse(const Surd& x) {
    if (x.b == 0) {
        if (x.a == 0) throw SurdError("division by zero surd");
        return Surd(1 / x.a);
    }
    Rat n = x.a * x.a - x.b * x.b * Rat(x.d); // conjugate norm
    if (n == 0) throw SurdError("division by zero surd");
    return Surd(x.a / n, -x.b / n, x.d);
}
inline Surd operator/(const Surd& x, const Surd& y) { return x * inverse(y); }

// rational enclosure of sqrt(d) with width 2^-k
inline std::pair<Rat, Rat> sqrt_enclosure(long d, unsigned k) {
    Int scale = pow_int(2, k);
    Int lo = isqrt(Int(d) * scale * scale);
    return {make_rat(lo, scale), make_rat(lo + 1, scale)};
}

// exact comparison that also handles distinct radicands via interval refinement
inline int compare(const Surd& x, const Surd& y) {
    if (same_field(x, y)) return sign(x - y);
    // x - y = A + B sqrt(d1) + C sqrt(d2), B,C nonzero, d1 != d2 (both squarefree > 1)
    // => never zero, so refinement terminates
    Rat A = x.a - y.a, B = x.b, C = -y.b;
    for (unsigned k = 4;; k += 8) {
        auto [l1, h1] = sqrt_enclosure(x.d, k);
        auto [l2, h2] = sqrt_enclosure(y.d, k);
        Rat lo = A + (B > 0 ? B * l1 : B * h1) + (C > 0 ? C * l2 : C * h2);
        Rat hi = A + (B > 0 ? B * h1 : B * l1) + (C > 0 ? C * h2 : C * l2);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (k > 256) throw SurdError("surd comparison failed to separate");
    }
}

inline double to_double(const Surd& x) {
    double r = to_double(x.a);
    if (x.b != 0) r += to_double(x.b) * std::sqrt(static_cast<double>(x.d));
    return r;
}

inline std::string to_string(const Surd& x) {
    if (x.b == 0) return x.a.get_str();
    std::string root = "sqrt(" + std::to_string(x.d) + ")";
    std::string bs;
    if (x.b == 1) bs = root;
    else if (x.b == -1) bs = "-" + root;
    else bs = x.b.get_str() + "*" + root;
    if (x.a == 0) return bs;
    if (x.b > 0) return x.a.get_str() + "+" + bs;
    return x.a.get_str() + bs;
}

// minimal integer polynomial vanishing at the surd (degree 1 or 2, primitive)
inline PolyZ minimal_poly(const Surd& x) {
    if (x.b == 0) {
        // den*X - num
        return PolyZ::from_coeffs({-num(x.a), den(x.a)});
    }
    // X^2 - 2a X + (a^2 - b^2 d), denominators cleared
    Rat c1 = -2 * x.a, c0 = x.a * x.a - x.b * x.b * Rat(x.d);
    Int l = lcm_int(den(c1), den(c0));
    return primitive_part(PolyZ::from_coeffs({num(c0) * (l / den(c0)), num(c1) * (l / den(c1)), l}));
}

template <class S>
Surd eval_at(const Polynomial<S>& p, const Surd& x) {
    Surd acc{Rat(0)};
    for (std::size_t i = p.c.size(); i-- > 0;) acc = acc * x + Surd(convert_scalar<Rat>(p.c[i]));
    return acc;
}

// ---- interval endpoints ----
struct Endpoint {
    enum Kind { NegInf, Finite, PosInf } kind{Finite};
    Surd value;

    static Endpoint neg_inf() { return {NegInf, Surd()}; }
    static Endpoint pos_inf() { return {PosInf, Surd()}; }
    static Endpoint finite(Surd s) { return {Finite, std::move(s)}; }
    static Endpoint finite(const Rat& r) { return {Finite, Surd(r)}; }
    bool is_finite() const { return kind == Finite; }
    bool operator==(const Endpoint& o) const {
        return kind == o.kind && (kind != Finite || value == o.value);
    }
};

inline int compare(const Endpoint& x, const Endpoint& y) {
    if (x.kind == y.kind && x.kind != Endpoint::Finite) return 0;
    if (x.kind == Endpoint::NegInf || y.kind == Endpoint::PosInf) return -1;
    if (x.kind == Endpoint::PosInf || y.kind == Endpoint::NegInf) return 1;
    return compare(x.value, y.value);
}

inline std::string to_string(const Endpoint& e) {
    switch (e.kind) {
        case Endpoint::NegInf: return "-inf";
        case Endpoint::PosInf: return "inf";
        default: return to_string(e.value);
    }
}

} // namespace ect
