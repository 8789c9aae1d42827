#include "ectcert/oracle.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <future>
#include <sstream>
#include <thread>

namespace ect {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

template <class T>
T eval_rf(const RatFunc& f, T x) {
    return eval_as<T>(f.n, x) / eval_as<T>(f.d, x);
}

// ---- tanh-sinh (double-exponential) quadrature on [a, b] ----
// Nodes x = tanh(pi/2 sinh(t)), weights (pi/2 cosh(t)) / cosh^2(pi/2 sinh(t));
// levels halve the step and reuse previous nodes. Endpoint-singular
// integrands of algebraic order are handled without substitution.
template <class T, class F>
T tanh_sinh(F&& f, T a, T b, double rel_tol, int max_levels, bool* converged = nullptr) {
    const T pi2 = T(1.5707963267948966192313216916397514L);
    const T mid = (a + b) / 2, half = (b - a) / 2;
    auto node_sum = [&](T step, bool odd_only) {
        T acc = 0;
        long j = odd_only ? 1 : 0;
        long stride = odd_only ? 2 : 1;
        for (;; j += stride) {
            T t = step * T(j);
            T u = pi2 * std::sinh(t);
            T x = std::tanh(u);
            T ch = std::cosh(u);
            T w = pi2 * std::cosh(t) / (ch * ch);
            if (w < T(1e-320)) break;
            T fx = 0;
            bool any = false;
            if (j == 0) {
                fx = f(mid);
                any = true;
            } else {
                T xp = mid + half * x, xm = mid - half * x;
                if (xp > a && xp < b) {
                    fx += f(xp);
                    any = true;
                }
                if (xm > a && xm < b) {
                    fx += f(xm);
                    any = true;
                }
            }
            if (any) acc += w * fx;
            if (j > 0 && !any) break;
            if (j > (1L << 24)) break;  // hard stop
        }
        return acc;
    };
    T step = 1;
    T sum = node_sum(step, false);
    T prev = half * step * sum;
    T result = prev;
    bool ok = false;
    for (int level = 1; level <= max_levels; ++level) {
        step /= 2;
        sum += node_sum(step, true);
        result = half * step * sum;
        T scale = std::max(T(1), std::abs(result));
        if (std::abs(result - prev) <= T(rel_tol) * scale) {
            ok = true;
            break;
        }
        prev = result;
    }
    if (converged) *converged = ok;
    return result;
}

template <class T>
T det_small(std::vector<std::vector<T>> m) {
    std::size_t n = m.size();
    T det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
        if (m[p][c] == T(0)) return T(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            T f = m[r][c] / m[c][c];
            for (std::size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return det;
}

template <class T>
T hadamard_bound(const std::vector<std::vector<T>>& m) {
    T prod = 1;
    for (const auto& row : m) {
        T s = 0;
        for (T v : row) s += v * v;
        prod *= std::sqrt(std::max(s, T(DBL_MIN)));
    }
    return prod;
}

}  // namespace

double solve_branch(const RatFunc& A, double h, double lo, double hi) {
    auto F = [&](double x) { return eval_rf<double>(A, x) - h; };
    double flo = F(lo), fhi = F(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0)) throw OracleError("solve_branch: no sign change in bracket");
    for (int it = 0; it < 200 && hi - lo > 1e-17 * std::max(1.0, std::abs(lo) + std::abs(hi));
         ++it) {
        double mid = (lo + hi) / 2;
        double fm = F(mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double x = (lo + hi) / 2;
    RatFunc Ap = derivative(A);
    for (int it = 0; it < 4; ++it) {
        double d = eval_rf<double>(Ap, x);
        if (d == 0) break;
        double step = F(x) / d;
        double nx = x - step;
        if (nx > lo - (hi - lo) && nx < hi + (hi - lo)) x = nx;
    }
    if (!(std::abs(F(x) + 0.0) < 1e-14 * std::max(1.0, std::abs(h))))
        throw OracleError("solve_branch: did not reach target accuracy");
    return x;
}

// ---------------------------------------------------------------------------

struct NumericOracle::Impl {
    // exact resolved problem
    RatFunc A, Ap;          // potential and its derivative
    std::optional<RatFunc> B;
    RatFunc Psi, Psip;      // separated mode (synthesized v^{2m}/(2m) otherwise)
    std::vector<RatFunc> fam;   // certified family
    std::vector<RatFunc> gk;    // derivative chain g_0 .. g_{n-1}
    unsigned m = 1, s = 1;
    bool separated = false;
    double x_left = 0, y_right = 0, h_max = 0;
    bool x_right_inf = false;
    double x_right = 0;
    double e = 0;  // (2s-1)/(2m)
    OracleOptions opt;

    template <class T>
    T Apot(T x) const { return eval_rf<T>(A, x); }

    // z in (x_left, 0) with A(z) = A(x); Newton seeded at -x, bisection fallback
    template <class T>
    T sigma1_T(T x) const {
        if (x == T(0)) return T(0);
        T target = Apot(x);
        T z = -x;
        bool newton_ok = false;
        for (int it = 0; it < 60; ++it) {
            T fz = Apot(z) - target;
            T dz = eval_rf<T>(Ap, z);
            if (dz == T(0)) break;
            T step = fz / dz;
            T nz = z - step;
            if (!(nz > T(x_left) && nz < T(0))) break;
            z = nz;
            if (std::abs(step) < T(1e-18) * std::max(T(1), std::abs(z))) {
                newton_ok = true;
                break;
            }
        }
        if (newton_ok) return z;
        T lo = T(x_left) * (T(1) - T(1e-15)), hi = -T(1e-300);
        for (int it = 0; it < 180; ++it) {
            T mid = (lo + hi) / 2;
            if (Apot(mid) - target > T(0))
                lo = mid;
            else
                hi = mid;
        }
        return (lo + hi) / 2;
    }

    template <class T>
    T sigma1_prime_T(T x) const {
        T z = sigma1_T(x);
        return eval_rf<T>(Ap, x) / eval_rf<T>(Ap, z);
    }

    template <class T>
    T xplus_T(T h) const {
        T hi;
        if (x_right_inf) {
            hi = 1;
            while (Apot(hi) < h) hi *= 2;
        } else {
            hi = T(x_right);
        }
        T lo = T(0);
        for (int it = 0; it < 180; ++it) {
            T mid = (lo + hi) / 2;
            if (Apot(mid) < h)
                lo = mid;
            else
                hi = mid;
        }
        return (lo + hi) / 2;
    }

    template <class T>
    T xminus_T(T h) const {
        T lo = T(x_left), hi = T(0);
        for (int it = 0; it < 180; ++it) {
            T mid = (lo + hi) / 2;
            if (Apot(mid) > h)
                lo = mid;
            else
                hi = mid;
        }
        return (lo + hi) / 2;
    }

    // Cancellation-aware h - A(x): anchored at an endpoint b where A(b) = h,
    // the difference is evaluated as a polynomial in (b - x) via a Taylor
    // shift when A is polynomial, so the endpoint-singular factors stay
    // accurate down to machine-small distances.
    template <class T>
    struct Frame {
        const Impl* im = nullptr;
        T h = 0, b = 0, resid = 0;
        std::vector<T> pc;  // coefficients of A(b) - A(b - delta), powers delta^1..
        bool poly = false;
        T operator()(T x) const { return from_delta(b - x); }
        // evaluate h - A(b - delta) from the offset itself, so positions
        // closer to b than one ulp of b remain distinguishable
        T from_delta(T delta) const {
            if (!poly) return h - im->Apot(b - delta);
            T acc = 0;
            for (std::size_t i = pc.size(); i-- > 0;) acc = acc * delta + pc[i];
            return resid + delta * acc;
        }
    };

    template <class T>
    Frame<T> make_frame(T h, T b) const {
        Frame<T> fr;
        fr.im = this;
        fr.h = h;
        fr.b = b;
        if (A.d.degree() == 0 && A.n.degree() >= 1) {
            T dc = eval_as<T>(A.d, T(0));
            std::vector<T> t;
            t.reserve(A.n.c.size());
            for (const auto& c : A.n.c) t.push_back(convert_scalar<T>(c) / dc);
            std::size_t deg = t.size() - 1;
            for (std::size_t k = 0; k <= deg; ++k)
                for (std::size_t j = deg; j-- > k;) t[j] += b * t[j + 1];
            fr.resid = h - t[0];
            for (std::size_t k = 1; k <= deg; ++k)
                fr.pc.push_back(k % 2 == 1 ? t[k] : -t[k]);
            fr.poly = true;
        }
        return fr;
    }

    // positive transformed-frame branch from the value d = h - A(x)
    template <class T>
    T v_from_d(T d) const {
        if (d <= T(0)) return T(0);
        if (!separated) return std::pow(T(2 * m) * d, T(1) / T(2 * m));
        // invert Psi on (0, y_right)
        T lo = T(0), hi = T(y_right);
        for (int it = 0; it < 180; ++it) {
            T mid = (lo + hi) / 2;
            if (eval_rf<T>(Psi, mid) < d)
                lo = mid;
            else
                hi = mid;
        }
        return (lo + hi) / 2;
    }

    template <class T>
    T vplus_T(T h, T x) const {
        return v_from_d(h - Apot(x));
    }

    // sigma_2 of the transformed frame: -v in quadratic mode; the Psi-level
    // mirror in separated mode
    template <class T>
    T sigma2_T(T v) const {
        if (!separated) return -v;
        T target = eval_rf<T>(Psi, v);
        T hi = -T(1e-300), lo = -T(y_right);
        while (eval_rf<T>(Psi, lo) < target) lo *= 2;
        for (int it = 0; it < 180; ++it) {
            T mid = (lo + hi) / 2;
            if (eval_rf<T>(Psi, mid) > target)
                lo = mid;
            else
                hi = mid;
        }
        return (lo + hi) / 2;
    }

    template <class T>
    T fhat_T(std::size_t i, T x) const {
        T v = eval_rf<T>(fam[i], x);
        if (separated) return v;
        return v * std::pow(T(2 * m) * eval_rf<T>(*B, x), -T(e));
    }

    template <class T>
    T ell_T(std::size_t i, T x) const {
        return fhat_T(i, x) - fhat_T(i, sigma1_T(x)) * sigma1_prime_T(x);
    }

    template <class T>
    T xi_T(unsigned k, T v) const {
        if (v == T(0)) return T(0);  // weight-zero endpoint guard; callers skip
        return eval_rf<T>(gk[k], v) - eval_rf<T>(gk[k], sigma2_T(v));
    }

    template <class T>
    T derivative_T(std::size_t i, unsigned k, T h, double tol, int levels) const {
        T xp = xplus_T(h);
        Frame<T> fr = make_frame(h, xp);
        auto f = [&](T x) {
            T v = v_from_d(fr(x));
            if (v == T(0)) return T(0);
            return ell_T(i, x) * xi_T(k, v);
        };
        // Integrands with a negative branch-power blow up like
        // (xp - x)^(-1 + 1/(2m)) at the right endpoint, and the rounded xp
        // sits up to half an ulp from the true branch point — enough to lose
        // ~sqrt(ulp) of singular-tail mass in x-space.  Anchor the endpoint
        // in offset space instead: solve resid + d0*P(d0) = 0 for the tiny
        // signed correction d0 (the frame resolves positions between
        // doubles), then substitute x = xp - d0 - w^2 so the branch value
        // from_delta(d0 + w^2) vanishes exactly at w = 0, where w carries
        // full relative precision.
        T cut = xp / 2;
        T left = tanh_sinh<T>(f, T(0), cut, tol, levels);
        T d0 = 0;
        if (fr.poly && !fr.pc.empty()) {
            for (int it = 0; it < 6; ++it) {
                T acc = 0;
                for (std::size_t j = fr.pc.size(); j-- > 0;) acc = acc * d0 + fr.pc[j];
                if (acc == T(0)) break;
                d0 = -fr.resid / acc;
            }
        }
        T wmax = std::sqrt(xp - cut);
        auto fw = [&](T w) {
            T d = fr.from_delta(d0 + w * w);
            if (d <= T(0)) return T(0);
            T v = v_from_d(d);
            if (v == T(0)) return T(0);
            return ell_T(i, xp - w * w) * xi_T(k, v) * T(2) * w;
        };
        T right = tanh_sinh<T>(fw, T(0), wmax, tol, levels);
        return left + right;
    }

    template <class T>
    std::vector<std::vector<T>> derivative_matrix_T(unsigned k, T h, double tol,
                                                    int levels) const {
        std::vector<std::vector<T>> M(k, std::vector<T>(k));
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) M[i][j] = derivative_T(j, i, h, tol, levels);
        return M;
    }

    // Wronskian with noise-floor escalation: a determinant within 1e3 ulps of
    // the entry scale is recomputed in extended precision
    double wronskian_T(unsigned k, double h) const {
        auto M = derivative_matrix_T<double>(k, h, opt.tol, opt.max_levels);
        double det = det_small(M);
        double floor = 1e3 * DBL_EPSILON * hadamard_bound(M);
        if (std::abs(det) < floor) {
            auto ML = derivative_matrix_T<long double>(k, static_cast<long double>(h), opt.tol,
                                                       opt.max_levels);
            det = static_cast<double>(det_small(ML));
        }
        return det;
    }
};

// ---------------------------------------------------------------------------

NumericOracle::NumericOracle(const ProblemFile& pf, OracleOptions opt) {
    auto impl = std::make_shared<Impl>();
    impl->opt = opt;
    if (!pf.H.h_max) throw OracleError("the numeric oracle needs h_max in [interval]");
    impl->A = pf.H.A;
    impl->Ap = derivative(pf.H.A);
    impl->m = pf.H.m;
    impl->separated = pf.separated;
    impl->x_left = to_double(pf.interval.x_left);
    impl->x_right_inf = !pf.interval.x_right.is_finite();
    if (!impl->x_right_inf) impl->x_right = to_double(pf.interval.x_right.value);
    impl->h_max = to_double(*pf.H.h_max);

    if (pf.separated) {
        impl->Psi = *pf.H.Psi;
        impl->fam = pf.fam.f;
        impl->s = pf.fam.s;
        impl->y_right = to_double(*pf.y_right);
        long v = valuation_at_zero(impl->Psi);
        if (v < 2 || v % 2 != 0) throw OracleError("Psi must vanish to even order at 0");
        impl->m = static_cast<unsigned>(v / 2);
        impl->gk = g_chain(*pf.fam.g, impl->Psi, pf.fam.size());
    } else {
        if (!pf.H.B) throw OracleError("quadratic mode requires B");
        impl->B = pf.H.B;
        PreprocessTrace trace;
        IntegrandFamily fin = preprocess_family(pf.fam, pf.H, pf.options.preprocess_auto, trace);
        impl->fam = fin.f;
        impl->s = fin.s;
        impl->e = static_cast<double>(2 * fin.s - 1) / (2.0 * pf.H.m);
        // transformed frame: Psi(v) = v^{2m}/(2m), g_0 = v^{2s-1}
        unsigned mm = pf.H.m;
        PolyQ var = PolyQ::variable();
        impl->Psi = make_ratfunc(pow_poly(var, 2 * mm), PolyQ(Rat(2 * static_cast<long>(mm))));
        RatFunc g0 = ratfunc_of(pow_poly(var, 2 * fin.s - 1));
        impl->gk = g_chain(g0, impl->Psi, fin.size());
    }
    impl->Psip = derivative(impl->Psi);
    fam_ = impl->fam;
    s_ = impl->s;
    h_max_ = impl->h_max;
    impl_ = std::move(impl);
}

double NumericOracle::x_plus(double h) const { return impl_->xplus_T<double>(h); }
double NumericOracle::x_minus(double h) const { return impl_->xminus_T<double>(h); }
double NumericOracle::sigma1(double x) const { return impl_->sigma1_T<double>(x); }
double NumericOracle::sigma1_prime(double x) const { return impl_->sigma1_prime_T<double>(x); }

double NumericOracle::integral_fs(const RatFunc& f, unsigned s, double h) const {
    const Impl& im = *impl_;
    if (im.separated) throw OracleError("integral_fs applies to quadratic mode");
    double xm = im.xminus_T<double>(h), xp = im.xplus_T<double>(h);
    double ee = static_cast<double>(2 * s - 1) / (2.0 * im.m);
    auto fr_m = im.make_frame<double>(h, xm);
    auto fr_p = im.make_frame<double>(h, xp);
    auto integrand = [&](const Impl::Frame<double>& fr, double x) {
        double d = fr(x) / eval_rf<double>(*im.B, x);
        if (d <= 0) return 0.0;
        return eval_rf<double>(f, x) * std::pow(d, ee);
    };
    double left = tanh_sinh<double>([&](double x) { return integrand(fr_m, x); }, xm, 0.0,
                                    im.opt.tol, im.opt.max_levels);
    double right = tanh_sinh<double>([&](double x) { return integrand(fr_p, x); }, 0.0, xp,
                                     im.opt.tol, im.opt.max_levels);
    return 2 * (left + right);
}

double NumericOracle::abelian_integral(std::size_t i, double h) const {
    const Impl& im = *impl_;
    if (i >= im.fam.size()) throw OracleError("family index out of range");
    if (!im.separated) return integral_fs(im.fam[i], im.s, h);
    return im.derivative_T<double>(i, 0, h, im.opt.tol, im.opt.max_levels);
}

double NumericOracle::derivative_Iik(std::size_t i, unsigned k, double h) const {
    const Impl& im = *impl_;
    if (i >= im.fam.size() || k >= im.gk.size())
        throw OracleError("derivative order or family index out of range");
    return im.derivative_T<double>(i, k, h, im.opt.tol, im.opt.max_levels);
}

double NumericOracle::wronskian_numeric(unsigned k, double h) const {
    if (k == 0 || k > impl_->fam.size()) throw OracleError("wronskian order out of range");
    return impl_->wronskian_T(k, h);
}

double NumericOracle::simplex_wronskian(unsigned k, double h) const {
    const Impl& im = *impl_;
    if (k == 0 || k > 3 || k > im.fam.size())
        throw OracleError("simplex representation supports k in 1..3");
    double xp = im.xplus_T<double>(h);
    auto fr = im.make_frame<double>(h, xp);
    auto ell = [&](std::size_t i, double x) { return im.ell_T<double>(i, x); };
    auto xi = [&](unsigned j, double x) {
        double v = im.v_from_d<double>(fr(x));
        return v == 0 ? 0.0 : im.xi_T<double>(j, v);
    };
    if (k == 1)
        return tanh_sinh<double>([&](double x) { return ell(0, x) * xi(0, x); }, 0.0, xp,
                                 im.opt.tol, im.opt.max_levels);
    if (k == 2) {
        auto outer = [&](double x1) {
            double l01 = ell(0, x1), l11 = ell(1, x1);
            double q01 = xi(0, x1), q11 = xi(1, x1);
            auto inner = [&](double x0) {
                double dl = ell(0, x0) * l11 - ell(1, x0) * l01;
                double dq = xi(0, x0) * q11 - xi(1, x0) * q01;
                return dl * dq;
            };
            return tanh_sinh<double>(inner, 0.0, x1, im.opt.tol * 10, 9);
        };
        return tanh_sinh<double>(outer, 0.0, xp, im.opt.tol * 10, im.opt.max_levels);
    }
    auto det3 = [](const double M[3][3]) {
        return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
               M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
               M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    };
    auto outer = [&](double x2) {
        auto mid = [&](double x1) {
            auto inner = [&](double x0) {
                double xs[3] = {x0, x1, x2};
                double L[3][3], Q[3][3];
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c) {
                        L[r][c] = ell(c, xs[r]);
                        Q[r][c] = xi(static_cast<unsigned>(c), xs[r]);
                    }
                return det3(L) * det3(Q);
            };
            return tanh_sinh<double>(inner, 0.0, x1, 1e-7, 6);
        };
        return tanh_sinh<double>(mid, 0.0, x2, 1e-8, 7);
    };
    return tanh_sinh<double>(outer, 0.0, xp, 1e-9, 8);
}

SignScanResult NumericOracle::sign_scan(unsigned N) const {
    const Impl& im = *impl_;
    unsigned n = static_cast<unsigned>(im.fam.size());
    SignScanResult res;
    res.grid = N;
    double a = 0.01 * im.h_max, b = 0.99 * im.h_max;
    double rho = N > 1 ? std::pow(b / a, 1.0 / (N - 1)) : 1.0;

    struct Point {
        std::vector<double> W;       // W[I_1..I_k], k = 1..n
        std::vector<bool> reliable;  // above noise floor
    };
    std::vector<Point> pts(N);
    auto eval_point = [&](unsigned j) {
        double h = a * std::pow(rho, static_cast<double>(j));
        auto M = im.derivative_matrix_T<double>(n, h, im.opt.tol, im.opt.max_levels);
        Point p;
        for (unsigned k = 1; k <= n; ++k) {
            std::vector<std::vector<double>> minor(k, std::vector<double>(k));
            for (unsigned r = 0; r < k; ++r)
                for (unsigned c = 0; c < k; ++c) minor[r][c] = M[r][c];
            double det = det_small(minor);
            double floor = 1e3 * DBL_EPSILON * hadamard_bound(minor);
            bool reliable = std::abs(det) >= floor;
            if (!reliable) {
                auto ML = im.derivative_matrix_T<long double>(k, static_cast<long double>(h),
                                                              im.opt.tol, im.opt.max_levels);
                long double dl = det_small(ML);
                long double fl = 1e3L * LDBL_EPSILON * hadamard_bound(ML);
                det = static_cast<double>(dl);
                reliable = std::abs(dl) >= fl;
            }
            p.W.push_back(det);
            p.reliable.push_back(reliable);
        }
        return p;
    };

    unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::vector<std::future<void>> futs;
    std::size_t chunk = (N + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk, hi = std::min<std::size_t>(N, lo + chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (std::size_t j = lo; j < hi; ++j) pts[j] = eval_point(static_cast<unsigned>(j));
        }));
    }
    for (auto& f : futs) f.get();

    for (unsigned k = 1; k <= n; ++k) {
        bool constant = true;
        int sign0 = 0;
        for (unsigned j = 0; j < N; ++j) {
            double w = pts[j].W[k - 1];
            if (!pts[j].reliable[k - 1]) {
                constant = false;
                res.violations.push_back("k=" + std::to_string(k) + ": |W| below noise floor at h=" +
                                         fmt(a * std::pow(rho, j)));
                continue;
            }
            int sg = w > 0 ? 1 : -1;
            if (sign0 == 0) sign0 = sg;
            if (sg != sign0) {
                constant = false;
                res.violations.push_back("k=" + std::to_string(k) +
                                         ": sign change at h=" + fmt(a * std::pow(rho, j)));
            }
        }
        res.sign_constant.push_back(constant);
    }
    return res;
}

OracleReport run_oracle_checks(const NumericOracle& oracle, unsigned grid, double tol) {
    OracleReport rep;
    SignScanResult scan = oracle.sign_scan(grid);
    rep.scan_grid = scan.grid;
    rep.sign_constant = scan.sign_constant;
    double pass_tol = std::max(tol, 1e-5);
    for (double frac : {0.05, 0.1, 0.2}) {
        double h = frac * (oracle.h_max() / 0.25);
        for (unsigned k = 1; k <= std::min(2u, oracle.n()); ++k) {
            OracleReport::Prop33 c;
            c.k = k;
            c.h = h;
            c.wronskian = oracle.wronskian_numeric(k, h);
            c.simplex = oracle.simplex_wronskian(k, h);
            double scale = std::max({std::abs(c.wronskian), std::abs(c.simplex), 1e-300});
            c.rel_err = std::abs(c.wronskian - c.simplex) / scale;
            c.pass = c.rel_err < pass_tol;
            rep.prop33_checks.push_back(c);
        }
    }
    return rep;
}

}  // namespace ect
