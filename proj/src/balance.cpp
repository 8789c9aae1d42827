#include "engines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ect {

// ---------------------------------------------------------------------------
// factorization helpers

namespace {

PolyQ to_polyq(const PolyZ& p) {
    PolyQ r;
    r.c.reserve(p.c.size());
    for (const auto& x : p.c) r.c.push_back(Rat(x));
    r.trim();
    return r;
}

// All positive divisors of |n|, or nullopt when n resists the trial bound or
// has too many divisors.  Completeness is an optimization, not a soundness
// requirement: missed divisors only mean missed rational roots, and pieces
// kept whole are split on demand later.
std::optional<std::vector<Int>> divisors_of(Int n) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    std::vector<std::pair<Int, long>> fac;
    Int m = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (p > 100000) break;
        if (m % p == 0) {
            long e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            fac.push_back({p, e});
        }
    }
    if (m > 1) {
        if (m > Int(1000000000000L)) return std::nullopt;
        fac.push_back({m, 1});
    }
    std::vector<Int> divs{Int(1)};
    for (auto& [p, e] : fac) {
        std::size_t sz = divs.size();
        Int pk = 1;
        for (long i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
        if (divs.size() > 2048) return std::nullopt;
    }
    return divs;
}

}  // namespace

FactorList factor_rational_roots(const PolyQ& p) {
    if (p.is_zero()) throw std::logic_error("factor_rational_roots: zero polynomial");
    FactorList out;
    PolyQ c = FacOps<PolyQ>::canonical(p, out.unit);
    if (c.degree() <= 0) return out;

    // powers of x
    std::size_t v = 0;
    while (v < c.c.size() && c.c[v] == 0) ++v;
    if (v > 0) {
        out.parts.push_back({PolyQ::variable(), static_cast<long>(v)});
        PolyQ shifted;
        shifted.c.assign(c.c.begin() + static_cast<long>(v), c.c.end());
        shifted.trim();
        c = shifted;
    }
    if (c.degree() <= 0) return out;

    for (auto& [piece0, mult] : squarefree_decompose(c)) {
        Rat u;
        PolyQ piece = FacOps<PolyQ>::canonical(piece0, u);
        out.unit *= rat_pow(u, mult);
        if (piece.degree() <= 0) continue;
        // rational roots: p/q with p | trailing, q | leading
        auto dt = divisors_of(num(piece.coeff(0)));
        auto dl = divisors_of(num(piece.leading()));
        if (dt && dl && dt->size() * dl->size() <= 20000) {
            bool again = true;
            while (again && piece.degree() >= 1) {
                again = false;
                for (const Int& pnum : *dt) {
                    for (const Int& qden : *dl) {
                        if (gcd_int(pnum, qden) != 1) continue;
                        for (int sgn = 1; sgn >= -1; sgn -= 2) {
                            Rat r = make_rat(sgn * pnum, qden);
                            if (eval_as<Rat>(piece, r) != 0) continue;
                            PolyQ lin;
                            lin.c = {Rat(-sgn * pnum), Rat(qden)};
                            out.parts.push_back({lin, mult});
                            piece = divmod(piece, lin).first;
                            again = piece.degree() >= 1;
                            goto deflated;
                        }
                    }
                }
            deflated:;
            }
        }
        if (piece.degree() >= 1) {
            Rat u2;
            PolyQ rest = FacOps<PolyQ>::canonical(piece, u2);
            out.unit *= rat_pow(u2, mult);
            out.parts.push_back({rest, mult});
        } else {
            out.unit *= rat_pow(piece.coeff(0), mult);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace detail {

void divide_general(AlgQ& alg, FacQ& f, const PolyQ& p, long e) {
    if (e == 0) return;
    if (p.is_zero()) throw std::logic_error("divide_general: zero divisor");
    FactorList fl = factor_rational_roots(p);
    f.num = rat_pow(fl.unit, -e) * f.num;
    for (auto& [part, m] : fl.parts) alg.multiply_power(f, part, -e * m);
}

PolyQ compose_homogenized(const PolyQ& p, const PolyQ& rn, const PolyQ& rd) {
    long deg = p.degree();
    if (deg < 0) return PolyQ{};
    std::vector<PolyQ> rdpow(static_cast<std::size_t>(deg) + 1);
    rdpow[0] = PolyQ(Rat(1));
    for (long i = 1; i <= deg; ++i) rdpow[i] = rdpow[i - 1] * rd;
    PolyQ acc(p.coeff(static_cast<std::size_t>(deg)));
    for (long j = deg - 1; j >= 0; --j)
        acc = acc * rn + p.coeff(static_cast<std::size_t>(j)) * rdpow[deg - j];
    return acc;
}

FacB lift_fac(const AlgQ& aq, const FacQ& f, AlgB& ab, bool second) {
    FacB r = ab.make(second ? lift_second(f.num) : lift_first(f.num));
    for (auto& [i, e] : f.den) {
        BiQ pb = second ? lift_second(aq.base[i]) : lift_first(aq.base[i]);
        ab.multiply_power(r, pb, -e);
    }
    return r;
}

FacQ build_phi(AlgQ& alg, const RatFunc& f, const RatFunc& A, const RatFunc& carrier) {
    RatFunc Ap = derivative(A);
    if (Ap.n.is_zero()) throw PreconditionError("potential has zero derivative");
    FacQ phi = alg.make(f.n * Ap.d * carrier.d);
    divide_general(alg, phi, f.d, 1);
    divide_general(alg, phi, Ap.n, 1);
    divide_general(alg, phi, carrier.n, 1);
    alg.reduce(phi);
    return phi;
}

FacQ subst_fac(const AlgQ& ax, const FacQ& fx, AlgQ& au, const PolyQ& xofu) {
    FacQ r = au.make(compose(fx.num, xofu));
    for (auto& [i, e] : fx.den) divide_general(au, r, compose(ax.base[i], xofu), e);
    au.reduce(r);
    return r;
}

FacQ compose_fac(AlgQ& alg, const FacQ& phi, const RatFunc& rho) {
    if (phi.num.is_zero()) return alg.zero();
    long dn = phi.num.degree();
    FacQ r = alg.make(compose_homogenized(phi.num, rho.n, rho.d));
    long delta = -dn;
    for (auto& [i, e] : std::map<int, long>(phi.den)) {
        long dp = alg.base[i].degree();
        divide_general(alg, r, compose_homogenized(alg.base[i], rho.n, rho.d), e);
        delta += e * dp;
    }
    divide_general(alg, r, rho.d, -delta);
    alg.reduce(r);
    return r;
}

CurveEngine build_curve_engine(const std::vector<RatFunc>& f, const RatFunc& A,
                               const SubstitutionPlan& plan) {
    CurveEngine E;
    RatFunc Ap = derivative(A);
    if (Ap.n.is_zero()) throw PreconditionError("potential has zero derivative");
    AlgQ dom;
    std::vector<FacQ> phis;

    if (plan.kind == SubstitutionPlan::Kind::Identity) {
        for (const auto& fi : f) phis.push_back(build_phi(dom, fi, A, plan.carrier));
        // S = A'(x) / A'(z)
        E.S = E.alg.make(lift_first(Ap.n) * lift_second(Ap.d));
        FactorList fad = factor_rational_roots(Ap.d);
        FactorList fan = factor_rational_roots(Ap.n);
        E.S.num = Rat(Rat(1) / (fad.unit * fan.unit)) * E.S.num;
        for (auto& [part, m] : fad.parts) E.alg.multiply_power(E.S, lift_first(part), -m);
        for (auto& [part, m] : fan.parts) E.alg.multiply_power(E.S, lift_second(part), -m);
        E.pre = E.alg.one();
    } else {
        // x = u^r - c; the curve variables are (u, v)
        long r = static_cast<long>(plan.r);
        PolyQ var = PolyQ::variable();
        PolyQ xofu = pow_poly(var, static_cast<unsigned long>(r)) + PolyQ(Rat(-plan.c));
        AlgQ ax;
        RatFunc one = ratfunc_of(Rat(1));
        for (const auto& fi : f) {
            FacQ phix = build_phi(ax, fi, A, one);
            FacQ phiu = subst_fac(ax, phix, dom, xofu);
            dom.multiply_power(phiu, var, -plan.t);
            phis.push_back(phiu);
        }
        // S = u^{r-1} A'(x(u)) / (v^{r-1} A'(x(v)))
        PolyQ anu = compose(Ap.n, xofu);
        PolyQ adu = compose(Ap.d, xofu);
        E.S = E.alg.make(lift_first(pow_poly(var, static_cast<unsigned long>(r - 1)) * anu) *
                         lift_second(adu));
        FactorList f_adu = factor_rational_roots(adu);
        FactorList f_anu = factor_rational_roots(anu);
        E.S.num = Rat(Rat(1) / (f_adu.unit * f_anu.unit)) * E.S.num;
        for (auto& [part, m] : f_adu.parts) E.alg.multiply_power(E.S, lift_first(part), -m);
        for (auto& [part, m] : f_anu.parts) E.alg.multiply_power(E.S, lift_second(part), -m);
        E.alg.multiply_power(E.S, lift_second(var), -(r - 1));
        E.pre = E.alg.make(BiQ(Rat(Rat(1) / Rat(r))));
        E.alg.multiply_power(E.pre, lift_first(var), -(r - 1));
    }
    E.alg.reduce(E.S);
    for (const auto& phi : phis) {
        FacB a = lift_fac(dom, phi, E.alg, false);
        FacB b = lift_fac(dom, phi, E.alg, true);
        E.ells.push_back(E.alg.sub(a, b));
    }
    return E;
}

LineEngine build_line_engine(const std::vector<RatFunc>& f, const RatFunc& A,
                             const SubstitutionPlan& plan, const RatFunc& rho) {
    LineEngine E;
    for (const auto& fi : f) {
        FacQ phi = build_phi(E.alg, fi, A, plan.carrier);
        FacQ phir = compose_fac(E.alg, phi, rho);
        E.ells.push_back(E.alg.sub(phi, phir));
    }
    return E;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// public API

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::CERTIFIED: return "CERTIFIED";
        case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
        case Verdict::PRECONDITION_FAILED: return "PRECONDITION_FAILED";
    }
    return "?";
}

BiRat sigma_prime(const InvolutionCurve& curve) {
    BiQ qx = partial_first(curve.q);
    BiQ qz = partial_second(curve.q);
    if (qz.is_zero()) throw PreconditionError("involution curve independent of second variable");
    return make_birat(Rat(-1) * qx, qz);
}

BiRat balance_ell(const RatFunc& f, const RatFunc& A, const SubstitutionPlan& plan) {
    detail::CurveEngine E = detail::build_curve_engine({f}, A, plan);
    FacB L = E.ells.at(0);
    E.alg.reduce_full(L);
    return make_birat(L.num, E.alg.den_expanded(L));
}

BiRat derive_along_curve(const BiRat& R, const RatFunc& A, const SubstitutionPlan& plan) {
    detail::CurveEngine E = detail::build_curve_engine({}, A, plan);
    FacB v = E.alg.make(R.n);
    if (!FacOps<BiQ>::is_constant(R.d)) {
        E.alg.multiply_power(v, R.d, -1);
    } else if (!(R.d == BiQ(Rat(1)))) {
        v.num = Rat(Rat(1) / R.d.t.begin()->second) * v.num;
    }
    FacB dv = E.D(v);
    E.alg.reduce_full(dv);
    return make_birat(dv.num, E.alg.den_expanded(dv));
}

BiRat wronskian_curve(const std::vector<RatFunc>& f, const RatFunc& A,
                      const SubstitutionPlan& plan, unsigned k) {
    if (k == 0 || k > f.size()) throw std::invalid_argument("wronskian_curve: bad order");
    detail::CurveEngine E = detail::build_curve_engine(f, A, plan);
    std::vector<std::vector<FacB>> m(k);
    m[0].assign(E.ells.begin(), E.ells.begin() + k);
    for (unsigned i = 1; i < k; ++i) {
        m[i].reserve(k);
        for (unsigned j = 0; j < k; ++j) m[i].push_back(E.D(m[i - 1][j]));
    }
    FacB w = det_fac(E.alg, m);
    E.alg.reduce_full(w);
    return make_birat(w.num, E.alg.den_expanded(w));
}

RatFunc wronskian_explicit(const std::vector<RatFunc>& f, const RatFunc& A,
                           const SubstitutionPlan& plan, const RatFunc& rho, unsigned k) {
    if (k == 0 || k > f.size()) throw std::invalid_argument("wronskian_explicit: bad order");
    detail::LineEngine E = detail::build_line_engine(f, A, plan, rho);
    std::vector<std::vector<FacQ>> m(k);
    m[0].assign(E.ells.begin(), E.ells.begin() + k);
    for (unsigned i = 1; i < k; ++i) {
        m[i].reserve(k);
        for (unsigned j = 0; j < k; ++j) m[i].push_back(E.D(m[i - 1][j]));
    }
    FacQ w = det_fac(E.alg, m);
    E.alg.reduce_full(w);
    return make_ratfunc(w.num, E.alg.den_expanded(w));
}

// ---------------------------------------------------------------------------
// discrete (evaluation) Wronskians

namespace {

template <class T>
T det_dense(std::vector<std::vector<T>> m) {
    std::size_t n = m.size();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        if constexpr (std::is_same_v<T, double>) {
            for (std::size_t i = col + 1; i < n; ++i)
                if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
            if (m[piv][col] == 0.0) return 0.0;
        } else {
            while (piv < n && m[piv][col] == 0) ++piv;
            if (piv == n) return T(0);
        }
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            T factor = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= factor * m[col][j];
        }
    }
    return det;
}

}  // namespace

double discrete_wronskian(const std::vector<RatFunc>& fs, const std::vector<double>& points) {
    if (fs.size() != points.size()) throw std::invalid_argument("discrete_wronskian: size mismatch");
    std::size_t n = fs.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = eval_as<double>(fs[j].n, points[i]) / eval_as<double>(fs[j].d, points[i]);
    return det_dense(std::move(m));
}

Rat discrete_wronskian_exact(const std::vector<RatFunc>& fs, const std::vector<Rat>& points) {
    if (fs.size() != points.size())
        throw std::invalid_argument("discrete_wronskian_exact: size mismatch");
    std::size_t n = fs.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto v = eval(fs[j], points[i]);
            if (!v) throw std::domain_error("discrete_wronskian_exact: pole at sample point");
            m[i][j] = *v;
        }
    return det_dense(std::move(m));
}

}  // namespace ect
