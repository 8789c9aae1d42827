#include "engines.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <future>
#include <sstream>

namespace ect {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Rat eval_biq_rat(const BiQ& g, const Rat& x, const Rat& z) {
    auto cs = coeffs_in_second(g);
    Rat acc(0);
    for (std::size_t j = cs.size(); j-- > 0;) acc = Rat(acc * z + eval_as<Rat>(cs[j], x));
    return acc;
}

Surd eval_biq_surd(const BiQ& g, const Surd& x, const Surd& z) {
    auto cs = coeffs_in_second(g);
    Surd acc{Rat(0)};
    for (std::size_t j = cs.size(); j-- > 0;) acc = acc * z + eval_at(cs[j], x);
    return acc;
}

std::optional<Rat> exact_root_rat(const Rat& v, unsigned long k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return v;
    if (v < 0 && k % 2 == 0) return std::nullopt;
    Int n = num(v), d = den(v);
    Int an = n < 0 ? Int(-n) : n;
    Int rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), an.get_mpz_t(), k);
    int exact_d = mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k);
    if (!exact_n || !exact_d) return std::nullopt;
    return make_rat(n < 0 ? Int(-rn) : rn, rd);
}

// (v)^{1/r} as an exact quadratic surd, when representable
std::optional<Surd> surd_root(const Rat& v, unsigned r) {
    if (r == 1) return Surd(v);
    if (v < 0 && r % 2 == 0) return std::nullopt;
    if (auto w = exact_root_rat(v, r)) return Surd(*w);
    if (r == 2) return sqrt_of_rat(v);
    if (r % 2 == 0) {
        if (auto w = exact_root_rat(v, r / 2)) {
            if (*w >= 0) return sqrt_of_rat(*w);
        }
    }
    return std::nullopt;
}

PolyZ canonical_int(const PolyQ& p) {
    IntScaled is = to_integer_poly(p);
    PolyZ pz = primitive_part(is.poly);
    if (!pz.is_zero() && sign(pz.leading()) < 0) pz = -pz;
    return pz;
}

// Durand–Kerner on ascending double coefficients (diagnostics only)
std::vector<std::complex<double>> dk_roots(std::vector<double> c) {
    while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    std::size_t n = c.size() - 1;
    for (auto& x : c) x /= c[n] == 0.0 ? 1.0 : c[n];
    auto evalp = [&](std::complex<double> x) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    std::vector<std::complex<double>> r(n);
    std::complex<double> seed(0.4, 0.9), p(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        p *= seed;
        r[i] = p;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) denom *= r[i] - r[j];
            if (std::abs(denom) < 1e-300) continue;
            std::complex<double> step = evalp(r[i]) / denom;
            r[i] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-14) break;
    }
    return r;
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Numeric mirror-branch check for an isolated root (diagnostic only; never
// affects the verdict).
void numeric_filter(std::vector<std::string>& diags, const KRecord& rec, const BiQ& curve_poly,
                    const SubstitutionPlan& plan, const ProjectionInterval& interval) {
    double wlo, whi;
    if (plan.kind == SubstitutionPlan::Kind::Identity) {
        wlo = to_double(interval.x_left);
        whi = 0.0;
    } else {
        double c = to_double(plan.c);
        double xl = to_double(interval.x_left);
        if (xl + c <= 0) return;
        double rr = static_cast<double>(plan.r);
        wlo = std::pow(xl + c, 1.0 / rr);
        whi = std::pow(c, 1.0 / rr);
    }
    auto cs = coeffs_in_second(curve_poly);
    for (const auto& [lo, hi] : rec.dirty_roots) {
        double xs = (to_double(lo) + to_double(hi)) / 2.0;
        std::vector<double> zc;
        zc.reserve(cs.size());
        for (const auto& p : cs) zc.push_back(eval_as<double>(p, xs));
        bool partner = false;
        for (const auto& root : dk_roots(zc)) {
            if (std::abs(root.imag()) > 1e-8) continue;
            double re = root.real();
            if (re > wlo - 1e-10 && re < whi + 1e-10) partner = true;
        }
        std::ostringstream os;
        os << "k=" << rec.k << ": numeric check: isolated root near " << fmt_double(xs)
           << (partner ? " has a partner on the mirror branch"
                       : " appears to lie off the involution branch")
           << " (diagnostic only)";
        diags.push_back(os.str());
    }
}

}  // namespace

// ---------------------------------------------------------------------------

InvolutionCurve involution_from_A(const RatFunc& A, const std::optional<BiQ>& q_hint) {
    if (q_hint && !q_hint->is_zero()) {
        BiQ C = involution_numerator(A);
        BiQ cand = normalize_content(*q_hint);
        if (divide_exact(C, cand)) {
            Rat q00 = eval_biq_rat(cand, Rat(0), Rat(0));
            Rat qx0 = eval_biq_rat(partial_first(cand), Rat(0), Rat(0));
            Rat qz0 = eval_biq_rat(partial_second(cand), Rat(0), Rat(0));
            if (q00 == 0 && qz0 != 0 && qx0 == qz0) {
                InvolutionCurve curve;
                curve.q = cand;
                curve.full = C;
                curve.symmetric = swap_vars(cand) == cand;
                auto cs = coeffs_in_second(cand);
                if (cs.size() == 2) curve.explicit_sigma = make_ratfunc(Rat(-1) * cs[0], cs[1]);
                return curve;
            }
        }
        // hint failed verification: reconstruct from scratch
    }
    return find_involution(A);
}

// ---------------------------------------------------------------------------

std::vector<std::string> check_preconditions(const HamiltonianSpec& H,
                                             const IntegrandFamily& fam,
                                             const ProjectionInterval& interval,
                                             const SubstitutionPlan& plan) {
    std::vector<std::string> facts;
    const RatFunc& A = H.A;
    if (A.n.is_zero()) throw PreconditionError("A vanishes identically");

    long v = valuation_at_zero(A);
    if (v < 0) throw PreconditionError("A has a pole at the origin");
    if (v == 0) throw PreconditionError("A(0) must be 0");
    if (v % 2 != 0) throw PreconditionError("A vanishes at the origin to odd order " +
                                            std::to_string(v) + "; even order required");
    auto ser = series_expand(A, static_cast<std::size_t>(v) + 1);
    if (!(ser[static_cast<std::size_t>(v)] > 0))
        throw PreconditionError("leading Taylor coefficient of A at the origin must be positive");
    facts.push_back("A vanishes at 0 to even order " + std::to_string(v) +
                    " with positive leading coefficient");

    if (sign(interval.x_left) >= 0) throw PreconditionError("x_left must be negative");
    if (interval.x_right.is_finite() && sign(interval.x_right.value) <= 0)
        throw PreconditionError("x_right must be positive");
    facts.push_back("projection interval (" + to_string(interval.x_left) + ", " +
                    to_string(interval.x_right) + ") straddles the origin");

    Endpoint left = Endpoint::finite(interval.x_left);
    Endpoint zero = Endpoint::finite(Rat(0));
    const Endpoint& right = interval.x_right;

    auto root_free = [](const PolyQ& p, const Endpoint& a, const Endpoint& b,
                        const std::string& what) {
        if (p.degree() < 1) return;
        auto rc = count_roots(p, a, b);
        if (rc.count > 0)
            throw PreconditionError(what + " vanishes inside (" + to_string(a) + ", " +
                                    to_string(b) + ")");
    };

    RatFunc Ap = derivative(A);
    if (Ap.n.is_zero()) throw PreconditionError("A has zero derivative");
    root_free(Ap.n, left, zero, "A'");
    root_free(Ap.n, zero, right, "A'");
    root_free(Ap.d, left, zero, "a pole of A'");
    root_free(Ap.d, zero, right, "a pole of A'");
    facts.push_back("A' has no zeros or poles on (x_left, 0) or (0, x_right)");

    if (H.B) {
        const RatFunc& B = *H.B;
        if (B.n.is_zero()) throw PreconditionError("B vanishes identically");
        auto b0 = eval(B, Rat(0));
        if (!b0) throw PreconditionError("B has a pole at the origin");
        if (!(*b0 > 0)) throw PreconditionError("B(0) must be positive");
        root_free(B.n, left, right, "B");
        root_free(B.d, left, right, "a pole of B");
        facts.push_back("B is positive at 0 and zero/pole-free on the open interval");
        if (plan.kind == SubstitutionPlan::Kind::Radical) {
            // x + c > 0 is needed on the open interval only, so the left
            // endpoint itself may sit exactly at -c.
            Surd xc = interval.x_left + Surd(plan.c);
            if (sign(xc) < 0)
                throw PreconditionError("radical substitution needs x_left + c >= 0");
            facts.push_back("radical shift satisfies x_left + c >= 0");
        }
    }

    if (fam.f.empty()) throw PreconditionError("empty integrand family");
    for (std::size_t i = 0; i < fam.f.size(); ++i) {
        if (is_zero(fam.f[i]))
            throw PreconditionError("integrand f_" + std::to_string(i) + " is identically zero");
        root_free(fam.f[i].d, left, right, "denominator of f_" + std::to_string(i));
    }
    facts.push_back("integrand denominators have no roots on the open interval");

    if (!H.Psi) {
        long n = static_cast<long>(fam.size());
        long need = static_cast<long>(H.m) * (n - 2);
        if (static_cast<long>(fam.s) <= need)
            throw PreconditionError("power parameter s=" + std::to_string(fam.s) +
                                    " must exceed m(n-2)=" + std::to_string(need));
        facts.push_back("s > m(n-2) holds for the certified family");
    }
    return facts;
}

// ---------------------------------------------------------------------------

namespace {

// Rational interval arithmetic for the box-exclusion refinement.  All
// endpoints are exact rationals, so the enclosures are mathematically
// rigorous: the true value of the polynomial over the box always lies
// inside the returned interval.
struct IRat {
    Rat lo, hi;
};

IRat interval_add(const IRat& a, const IRat& b) { return {a.lo + b.lo, a.hi + b.hi}; }

IRat interval_mul(const IRat& a, const IRat& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

bool interval_has_zero(const IRat& a) { return a.lo <= 0 && 0 <= a.hi; }

IRat interval_eval(const PolyQ& p, const IRat& x) {
    IRat acc{Rat(0), Rat(0)};
    for (std::size_t i = p.c.size(); i-- > 0;)
        acc = interval_add(interval_mul(acc, x), IRat{p.c[i], p.c[i]});
    return acc;
}

// cs = coefficients of the second variable's powers, each a polynomial in
// the first variable (Horner in both directions)
IRat interval_eval_box(const std::vector<PolyQ>& cs, const IRat& x, const IRat& y) {
    IRat acc{Rat(0), Rat(0)};
    for (std::size_t j = cs.size(); j-- > 0;)
        acc = interval_add(interval_mul(acc, y), interval_eval(cs[j], x));
    return acc;
}

// One bisection step on an isolating interval of a squarefree polynomial
// (simple root, opposite endpoint signs); exact rational roots collapse the
// interval to a degenerate point.  Returns false once degenerate.
bool shrink_isolating(const PolyQ& sf, std::pair<Rat, Rat>& iv) {
    if (iv.first == iv.second) return false;
    Rat mid = (iv.first + iv.second) / 2;
    Rat vm = eval_as<Rat>(sf, mid);
    if (vm == 0) {
        iv = {mid, mid};
        return true;
    }
    Rat vl = eval_as<Rat>(sf, iv.first);
    if ((vl < 0) != (vm < 0))
        iv.second = mid;
    else
        iv.first = mid;
    return true;
}

// Exact refutation of candidate common zeros inside the window box.  A
// genuine common zero of (N, Q) in the open box must project onto a window
// root of the first-side resultant AND onto one of the second-side
// resultant, so it lives inside one of the candidate interval pairs.  Each
// pair is shrunk until an interval enclosure of N or of Q excludes zero
// over the product box; if every pair is refuted, no common zero exists in
// the box.  A pair that collapses to an exact rational common zero, or that
// survives the iteration budget, leaves the refutation unproven.
bool refute_common_zeros(const BiQ& N, const BiQ& Q,
                         const std::vector<std::pair<Rat, Rat>>& us,
                         const std::vector<std::pair<Rat, Rat>>& vs, const PolyZ& ru,
                         const PolyZ& rv) {
    PolyQ sfu = squarefree_part(to_rat_poly(ru));
    PolyQ sfv = squarefree_part(to_rat_poly(rv));
    auto ncs = coeffs_in_second(N);
    auto qcs = coeffs_in_second(Q);
    for (const auto& iu0 : us) {
        for (const auto& iv0 : vs) {
            auto iu = iu0;
            auto iv = iv0;
            bool excluded = false;
            for (int iter = 0; iter < 64; ++iter) {
                IRat bu{iu.first, iu.second}, bv{iv.first, iv.second};
                if (!interval_has_zero(interval_eval_box(ncs, bu, bv)) ||
                    !interval_has_zero(interval_eval_box(qcs, bu, bv))) {
                    excluded = true;
                    break;
                }
                bool su = shrink_isolating(sfu, iu);
                bool sv = shrink_isolating(sfv, iv);
                if (!su && !sv) break; // exact rational common zero
            }
            if (!excluded) return false;
        }
    }
    return true;
}

} // namespace

KRecord eliminate_and_count(const BiQ& numerator, const BiQ& curve_poly,
                            const SubstitutionPlan& plan, const ProjectionInterval& interval,
                            unsigned k, std::vector<std::string>& diagnostics) {
    auto t0 = Clock::now();
    KRecord rec;
    rec.k = k;
    bool radical = plan.kind == SubstitutionPlan::Kind::Radical;
    const char* v1 = radical ? "u" : "x";
    const char* v2 = radical ? "v" : "z";

    if (numerator.is_zero()) {
        rec.resultant_zero = true;
        diagnostics.push_back("k=" + std::to_string(k) +
                              ": Wronskian numerator is identically zero");
        rec.ms = ms_since(t0);
        return rec;
    }

    BiQ N = numerator;
    BiQ Qcur = curve_poly;
    // a pure-first-variable content of the curve polynomial cannot contain the
    // involution branch (a graph); strip it before eliminating
    PolyQ qcont = content_wrt_second(Qcur);
    if (qcont.degree() >= 1) {
        Qcur = *divide_exact(Qcur, lift_first(qcont));
        diagnostics.push_back("k=" + std::to_string(k) +
                              ": stripped branch-free curve content " + to_string(qcont, v1));
    }

    for (;;) {
        ResultantResult rr = resultant_second(N, Qcur);
        if (!rr.zero) {
            rec.resultant = rr.primitive;
            break;
        }
        // identically-zero resultant: the numerator shares a factor with the
        // (reducible) curve; remove curve factors certified not to contain
        // the involution branch and retry
        BiQ g = gcd_bipoly(N, Qcur);
        if (FacOps<BiQ>::is_constant(g)) {
            rec.resultant_zero = true;
            diagnostics.push_back("k=" + std::to_string(k) +
                                  ": resultant vanished without a shared curve factor");
            rec.ms = ms_since(t0);
            return rec;
        }
        // corner check: the closure of the involution branch contains the
        // origin corner (identity) or (c^{1/r}, c^{1/r}) (radical); a factor
        // nonvanishing there cannot contain the branch
        bool corner_ok = false, decidable = true;
        if (!radical) {
            corner_ok = !(eval_biq_rat(g, Rat(0), Rat(0)) == 0);
        } else if (plan.r == 2) {
            Surd u0 = sqrt_of_rat(plan.c);
            corner_ok = !is_zero(eval_biq_surd(g, u0, u0));
        } else if (auto u0 = exact_root_rat(plan.c, plan.r)) {
            corner_ok = !(eval_biq_rat(g, *u0, *u0) == 0);
        } else {
            decidable = false;
        }
        if (!decidable) {
            rec.resultant_zero = true;
            diagnostics.push_back(
                "k=" + std::to_string(k) +
                ": cannot certify that the shared curve factor avoids the branch corner");
            rec.ms = ms_since(t0);
            return rec;
        }
        if (!corner_ok) {
            rec.resultant_zero = true;
            diagnostics.push_back("k=" + std::to_string(k) +
                                  ": Wronskian vanishes along the involution branch itself");
            rec.ms = ms_since(t0);
            return rec;
        }
        Qcur = *divide_exact(Qcur, g);
        rec.curve_reductions.push_back(to_string(g, v1, v2));
        diagnostics.push_back("k=" + std::to_string(k) + ": removed branch-free curve factor " +
                              to_string(g, v1, v2));
        if (FacOps<BiQ>::is_constant(Qcur)) {
            rec.resultant_zero = true;
            diagnostics.push_back("k=" + std::to_string(k) +
                                  ": curve polynomial exhausted during reduction");
            rec.ms = ms_since(t0);
            return rec;
        }
    }

    // counting window
    Endpoint a, b;
    if (!radical) {
        a = Endpoint::finite(Rat(0));
        b = interval.x_right;
    } else {
        auto u0 = surd_root(plan.c, plan.r);
        if (!u0)
            throw PreconditionError("left endpoint c^{1/r} is not exactly representable");
        a = Endpoint::finite(*u0);
        if (!interval.x_right.is_finite()) {
            b = Endpoint::pos_inf();
        } else {
            const Surd& xr = interval.x_right.value;
            if (!xr.is_rational())
                throw PreconditionError(
                    "right endpoint is irrational; (x_right + c)^{1/r} is not representable");
            auto ur = surd_root(Rat(xr.a + plan.c), plan.r);
            if (!ur)
                throw PreconditionError(
                    "right endpoint (x_right + c)^{1/r} is not exactly representable");
            b = Endpoint::finite(*ur);
        }
    }
    RootCount rc = count_roots(rec.resultant, a, b);
    rec.sturm_count = rc.count;
    rec.adjustments = rc.adjustments;
    if (rc.count > 0) {
        rec.dirty_roots = isolate_roots(rec.resultant, a, b);
        // An on-branch common zero (x, sigma(x)) projects into the counting
        // window in the first variable AND into its involution image in the
        // second; eliminating the first variable instead and finding a zero
        // Sturm count over that partner window is an equally exact proof
        // that every first-side root is a mirror-branch artifact.
        bool partner_ok = true;
        Endpoint a2, b2;
        if (!radical) {
            a2 = Endpoint::finite(interval.x_left);
            b2 = Endpoint::finite(Rat(0));
        } else {
            const Surd& xl = interval.x_left;
            std::optional<Surd> lo;
            if (xl.is_rational()) lo = surd_root(Rat(xl.a + plan.c), plan.r);
            auto hi = surd_root(plan.c, plan.r);
            if (lo && hi) {
                a2 = Endpoint::finite(*lo);
                b2 = Endpoint::finite(*hi);
            } else {
                partner_ok = false;
                diagnostics.push_back("k=" + std::to_string(k) +
                                      ": partner window endpoints not exactly representable");
            }
        }
        if (partner_ok) {
            ResultantResult pr = resultant_second(swap_vars(N), swap_vars(Qcur));
            if (pr.zero) {
                diagnostics.push_back("k=" + std::to_string(k) +
                                      ": partner-side resultant vanished identically");
            } else {
                RootCount prc = count_roots(pr.primitive, a2, b2);
                rec.partner_sturm_count = prc.count;
                diagnostics.push_back(
                    "k=" + std::to_string(k) + ": partner-side elimination (degree " +
                    std::to_string(pr.primitive.degree()) + ") has Sturm count " +
                    std::to_string(prc.count) + " on the involution image window" +
                    (prc.count == 0 ? "; first-side roots are mirror-branch artifacts" : ""));
                if (prc.count > 0) {
                    // both projections are dirty; decide each candidate pair
                    // exactly by interval box exclusion
                    auto vroots = isolate_roots(pr.primitive, a2, b2);
                    if (refute_common_zeros(N, Qcur, rec.dirty_roots, vroots, rec.resultant,
                                            pr.primitive)) {
                        rec.box_certified = true;
                        diagnostics.push_back(
                            "k=" + std::to_string(k) +
                            ": interval box exclusion refuted every candidate common zero in "
                            "the window box; the window roots on both sides are off-branch "
                            "artifacts");
                    } else {
                        diagnostics.push_back(
                            "k=" + std::to_string(k) +
                            ": interval box exclusion could not refute every candidate pair");
                    }
                }
            }
        }
    }
    rec.ms = ms_since(t0);
    return rec;
}

// ---------------------------------------------------------------------------

namespace {

// Wronskian suite over one involution curve; appends k-records (k=1..n).
void run_suite(CertificationReport& rep, const std::vector<RatFunc>& f, const RatFunc& A,
               const SubstitutionPlan& plan, const InvolutionCurve& curve,
               const ProjectionInterval& interval, const CertifyOptions& opt) {
    unsigned n = static_cast<unsigned>(f.size());
    bool radical = plan.kind == SubstitutionPlan::Kind::Radical;

    if (curve.explicit_sigma && !radical) {
        if (rep.mode.empty()) rep.mode = "quadratic-explicit-sigma";
        detail::LineEngine E = detail::build_line_engine(f, A, plan, *curve.explicit_sigma);
        std::vector<std::vector<FacQ>> rows(n);
        rows[0] = E.ells;
        for (unsigned i = 1; i < n; ++i) {
            rows[i].reserve(n);
            for (unsigned j = 0; j < n; ++j) rows[i].push_back(E.D(rows[i - 1][j]));
        }
        for (unsigned k = 1; k <= n; ++k) {
            auto t0 = Clock::now();
            std::vector<std::vector<FacQ>> m(k);
            for (unsigned i = 0; i < k; ++i)
                m[i].assign(rows[i].begin(), rows[i].begin() + k);
            FacQ w = det_fac(E.alg, m);
            E.alg.reduce_full(w);
            KRecord rec;
            rec.k = k;
            if (w.num.is_zero()) {
                rec.resultant_zero = true;
                rep.diagnostics.push_back("k=" + std::to_string(k) +
                                          ": Wronskian is identically zero");
            } else {
                rec.wronskian_numerator = to_string(w.num, "x");
                rec.resultant = canonical_int(w.num);
                RootCount rc =
                    count_roots(rec.resultant, Endpoint::finite(Rat(0)), interval.x_right);
                rec.sturm_count = rc.count;
                rec.adjustments = rc.adjustments;
                if (rc.count > 0)
                    rec.dirty_roots =
                        isolate_roots(rec.resultant, Endpoint::finite(Rat(0)), interval.x_right);
            }
            rec.ms = ms_since(t0);
            if (opt.numeric_branch_filter && !rec.dirty_roots.empty()) {
                const RatFunc& rho = *curve.explicit_sigma;
                double wlo = to_double(interval.x_left);
                for (auto& [lo, hi] : rec.dirty_roots) {
                    double xs = (to_double(lo) + to_double(hi)) / 2.0;
                    double zs = eval_as<double>(rho.n, xs) / eval_as<double>(rho.d, xs);
                    bool partner = zs > wlo - 1e-10 && zs < 1e-10;
                    rep.diagnostics.push_back(
                        "k=" + std::to_string(rec.k) + ": numeric check: isolated root near " +
                        fmt_double(xs) +
                        (partner ? " has a partner on the mirror branch"
                                 : " appears to lie off the involution branch") +
                        " (diagnostic only)");
                }
            }
            rep.k_records.push_back(std::move(rec));
        }
        return;
    }

    if (rep.mode.empty()) rep.mode = radical ? "quadratic-radical" : "quadratic-implicit";
    detail::CurveEngine E = detail::build_curve_engine(f, A, plan);
    std::vector<std::vector<FacB>> rows(n);
    rows[0] = E.ells;
    for (unsigned i = 1; i < n; ++i) {
        rows[i].reserve(n);
        for (unsigned j = 0; j < n; ++j) rows[i].push_back(E.D(rows[i - 1][j]));
    }
    BiQ Qpoly = curve.q;
    if (radical) {
        PolyQ var = PolyQ::variable();
        PolyQ xofu = pow_poly(var, plan.r) + PolyQ(Rat(-plan.c));
        Qpoly = normalize_content(compose_vars(curve.q, xofu, xofu));
    }
    const char* v1 = radical ? "u" : "x";
    const char* v2 = radical ? "v" : "z";

    auto work = [&](unsigned k, AlgB alg) -> std::tuple<KRecord, std::vector<std::string>> {
        std::vector<std::vector<FacB>> m(k);
        for (unsigned i = 0; i < k; ++i) m[i].assign(rows[i].begin(), rows[i].begin() + k);
        FacB w = det_fac(alg, m);
        alg.reduce_full(w);
        std::vector<std::string> local;
        KRecord rec = eliminate_and_count(w.num, Qpoly, plan, interval, k, local);
        if (!w.num.is_zero()) rec.wronskian_numerator = to_string(w.num, v1, v2);
        return {std::move(rec), std::move(local)};
    };

    std::vector<std::tuple<KRecord, std::vector<std::string>>> results(n);
    if (opt.parallel_k && n > 1) {
        std::vector<std::future<std::tuple<KRecord, std::vector<std::string>>>> futs;
        futs.reserve(n);
        for (unsigned k = 1; k <= n; ++k)
            futs.push_back(std::async(std::launch::async, work, k, E.alg));
        for (unsigned k = 1; k <= n; ++k) results[k - 1] = futs[k - 1].get();
    } else {
        for (unsigned k = 1; k <= n; ++k) results[k - 1] = work(k, E.alg);
    }
    for (auto& [rec, local] : results) {
        for (auto& d : local) rep.diagnostics.push_back(d);
        if (opt.numeric_branch_filter && !rec.dirty_roots.empty() &&
            rec.partner_sturm_count != 0 && !rec.box_certified)
            numeric_filter(rep.diagnostics, rec, Qpoly, plan, interval);
        rep.k_records.push_back(std::move(rec));
    }
}

Verdict combine_verdict(const std::vector<KRecord>& recs) {
    if (recs.empty()) return Verdict::INCONCLUSIVE;
    for (const auto& r : recs) {
        if (r.resultant_zero) return Verdict::INCONCLUSIVE;
        bool clean = r.sturm_count == 0 || r.partner_sturm_count == 0 || r.box_certified;
        if (!clean) return Verdict::INCONCLUSIVE;
    }
    return Verdict::CERTIFIED;
}

}  // namespace

// ---------------------------------------------------------------------------

CertificationReport certify_theoremB(const HamiltonianSpec& H, const IntegrandFamily& fam,
                                     const ProjectionInterval& interval,
                                     const CertifyOptions& options) {
    CertificationReport rep;
    auto t0 = Clock::now();
    try {
        if (H.Psi) throw PreconditionError("separated-variables input passed to the quadratic pipeline");
        if (!H.B) throw PreconditionError("quadratic mode requires B");
        InvolutionCurve curve = involution_from_A(H.A, options.q_hint);
        rep.curve = curve;
        rep.sigma_prime = sigma_prime(curve);
        rep.origin_certified = curve.symmetric;
        if (!curve.symmetric)
            rep.diagnostics.push_back("involution curve is not symmetric in its two variables");
        if (options.q_hint && !(normalize_content(*options.q_hint) == curve.q))
            rep.diagnostics.push_back(
                "supplied curve hint failed verification; reconstructed the branch instead");
        IntegrandFamily fam2 = preprocess_family(fam, H, options.preprocess_auto, rep.trace);
        SubstitutionPlan plan = substitution_plan(*H.B, fam2.s, H.m);
        rep.plan = plan;
        rep.preconditions = check_preconditions(H, fam2, interval, plan);
        rep.family_final = fam2.f;
        rep.s_final = fam2.s;
        run_suite(rep, fam2.f, H.A, plan, curve, interval, options);
        rep.verdict = combine_verdict(rep.k_records);
    } catch (const PreconditionError& e) {
        rep.verdict = Verdict::PRECONDITION_FAILED;
        rep.diagnostics.push_back(e.what());
    }
    rep.total_ms = ms_since(t0);
    return rep;
}

CertificationReport certify_theoremA(const HamiltonianSpec& H, const IntegrandFamily& fam,
                                     const ProjectionInterval& interval, const Surd& y_right,
                                     const CertifyOptions& options) {
    CertificationReport rep;
    rep.mode = "separated";
    auto t0 = Clock::now();
    try {
        if (!H.Psi) throw PreconditionError("separated mode requires Psi");
        if (!fam.g) throw PreconditionError("separated mode requires g");
        unsigned n = static_cast<unsigned>(fam.size());
        if (n == 0) throw PreconditionError("empty integrand family");

        SubstitutionPlan trivial;
        trivial.kind = SubstitutionPlan::Kind::Identity;
        trivial.carrier = ratfunc_of(Rat(1));
        rep.plan = trivial;

        // hypothesis (a): balances of f_i / Phi' over the x-projection
        InvolutionCurve cx = involution_from_A(H.A, options.q_hint);
        rep.curve = cx;
        rep.sigma_prime = sigma_prime(cx);
        rep.origin_certified = cx.symmetric;
        HamiltonianSpec Hx;
        Hx.A = H.A;
        Hx.Psi = H.Psi;  // marks separated mode: no B, no power-parameter check
        auto facts = check_preconditions(Hx, fam, interval, trivial);
        rep.preconditions.insert(rep.preconditions.end(), facts.begin(), facts.end());
        rep.diagnostics.push_back("hypothesis (a): balances of f_i/Phi' on the x-side (records 1.." +
                                  std::to_string(n) + ")");
        run_suite(rep, fam.f, H.A, trivial, cx, interval, options);
        rep.family_final = fam.f;
        rep.s_final = fam.s;

        // order clause on g
        const RatFunc& Psi = *H.Psi;
        long vpsi = valuation_at_zero(Psi);
        if (vpsi < 2 || vpsi % 2 != 0)
            throw PreconditionError("Psi must vanish at 0 to positive even order");
        unsigned my = static_cast<unsigned>(vpsi / 2);
        if (!order_condition(*fam.g, my, n))
            throw PreconditionError(
                "hypothesis (b) order clause fails: odd part of g vanishes to order <= 2m(n-2)");
        rep.preconditions.push_back("odd part of g vanishes at 0 beyond order 2m(n-2)");

        // hypothesis (b): balances of the g-chain over the y-projection
        auto chain = g_chain(*fam.g, Psi, n);
        InvolutionCurve cy = involution_from_A(Psi, std::nullopt);
        RatFunc Psip = derivative(Psi);
        std::vector<RatFunc> gfam;
        gfam.reserve(n);
        // the engine forms phi = F / Psi'; passing F = g_i * Psi' balances g_i itself
        for (const auto& gi : chain) gfam.push_back(gi * Psip);
        ProjectionInterval iy;
        iy.x_left = -y_right;
        iy.x_right = Endpoint::finite(y_right);
        // y-side structural checks: Psi shape, Psi' root-free, chain poles
        long vs = valuation_at_zero(Psi);
        auto sery = series_expand(Psi, static_cast<std::size_t>(vs) + 1);
        if (!(sery[static_cast<std::size_t>(vs)] > 0))
            throw PreconditionError("leading Taylor coefficient of Psi at 0 must be positive");
        Endpoint yzero = Endpoint::finite(Rat(0));
        Endpoint yright = Endpoint::finite(y_right);
        Endpoint yleft = Endpoint::finite(-y_right);
        auto root_free = [](const PolyQ& p, const Endpoint& a, const Endpoint& b,
                            const std::string& what) {
            if (p.degree() < 1) return;
            if (count_roots(p, a, b).count > 0)
                throw PreconditionError(what + " vanishes inside (" + to_string(a) + ", " +
                                        to_string(b) + ")");
        };
        root_free(Psip.n, yzero, yright, "Psi'");
        root_free(Psip.n, yleft, yzero, "Psi'");
        root_free(Psip.d, yleft, yright, "a pole of Psi'");
        for (std::size_t i = 0; i < chain.size(); ++i)
            root_free(chain[i].d, yzero, yright,
                      "denominator of g_" + std::to_string(i) + " in the chain");
        rep.preconditions.push_back("Psi vanishes at 0 to even order with positive coefficient");
        rep.preconditions.push_back("Psi' and the g-chain are regular on (0, y_right)");
        rep.diagnostics.push_back("hypothesis (b): balances of the g-chain on the y-side (records " +
                                  std::to_string(n + 1) + ".." + std::to_string(2 * n) + ")");
        run_suite(rep, gfam, Psi, trivial, cy, iy, options);

        rep.verdict = combine_verdict(rep.k_records);
    } catch (const PreconditionError& e) {
        rep.verdict = Verdict::PRECONDITION_FAILED;
        rep.diagnostics.push_back(e.what());
    }
    rep.total_ms = ms_since(t0);
    return rep;
}

}  // namespace ect
