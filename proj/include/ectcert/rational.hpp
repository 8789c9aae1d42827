#pragma once
// Exact scalar layer: arbitrary-precision integers and rationals (GMP-backed).
#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ect {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline int sign(const Int& a) { return sgn(a); }
inline int sign(const Rat& a) { return sgn(a); }

inline Int num(const Rat& a) { return a.get_num(); }
inline Int den(const Rat& a) { return a.get_den(); }

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int abs_int(const Int& a) { return abs(a); }

// exact integer quotient; throws if b does not divide a
inline Int exact_div_int(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("exact_div_int by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("exact_div_int: not divisible");
    return q;
}
inline Rat abs_rat(const Rat& a) { return abs(a); }

// a^e for integer e (negative allowed when a != 0)
inline Rat pow_rat(const Rat& a, long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat p;
    mpz_pow_ui(p.get_num_mpz_t(), a.get_num_mpz_t(), k);
    mpz_pow_ui(p.get_den_mpz_t(), a.get_den_mpz_t(), k);
    p.canonicalize();
    if (inv) {
        if (p == 0) throw std::domain_error("0 raised to a negative power");
        p = 1 / p;
    }
    return p;
}

inline Int pow_int(const Int& a, unsigned long e) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), a.get_mpz_t(), e);
    return p;
}

inline Int floor_rat(const Rat& a) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    return q;
}

inline double to_double(const Rat& a) { return a.get_d(); }
inline double to_double(const Int& a) { return a.get_d(); }

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

// exact integer square root and perfect-square test
inline Int isqrt(const Int& a) {
    if (a < 0) throw std::domain_error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

} // namespace ect
