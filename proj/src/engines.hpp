// Internal: balance/derivation engines over the factored arithmetic.
// Shared by the public balance API and the certification driver.
#pragma once

#include "ectcert/balance.hpp"
#include "ectcert/chebyshev.hpp"

namespace ect::detail {

// Divide (e > 0) or multiply (e < 0) f by p^e, registering the rational-root
// factorization of p as denominator bases.
void divide_general(AlgQ& alg, FacQ& f, const PolyQ& p, long e);

// Numerator of p(rn/rd) * rd^deg(p)  (denominator-cleared composition).
PolyQ compose_homogenized(const PolyQ& p, const PolyQ& rn, const PolyQ& rd);

// Lift a univariate factored value into the bivariate algebra, substituting
// the first (second = false) or second (second = true) variable.
FacB lift_fac(const AlgQ& aq, const FacQ& f, AlgB& ab, bool second);

// Two-variable engine: balances live in (x, z) (identity plan) or (u, v)
// (radical plan); D differentiates along the level curve.
struct CurveEngine {
    AlgB alg;
    FacB S;    // multiplier of the second partial
    FacB pre;  // overall prefactor (1, or 1/(r u^{r-1}))
    std::vector<FacB> ells;

    FacB D(const FacB& f) {
        FacB t = alg.add(alg.partial(f, 0), alg.mul(S, alg.partial(f, 1)));
        return alg.mul(pre, t);
    }
};

CurveEngine build_curve_engine(const std::vector<RatFunc>& f, const RatFunc& A,
                               const SubstitutionPlan& plan);

// One-variable engine for an explicit involution rho: ell_i = phi_i - phi_i(rho),
// D = d/dx.
struct LineEngine {
    AlgQ alg;
    std::vector<FacQ> ells;

    FacQ D(const FacQ& f) { return alg.partial(f, 0); }
};

LineEngine build_line_engine(const std::vector<RatFunc>& f, const RatFunc& A,
                             const SubstitutionPlan& plan, const RatFunc& rho);

// phi = f / (A' * carrier) as a univariate factored value (identity plans);
// for radical plans the caller substitutes afterwards.
FacQ build_phi(AlgQ& alg, const RatFunc& f, const RatFunc& A, const RatFunc& carrier);

// Substitute x -> xofu in a factored value, re-registering composed bases in
// the target algebra.
FacQ subst_fac(const AlgQ& ax, const FacQ& fx, AlgQ& au, const PolyQ& xofu);

// phi composed with a rational map rho (denominator-cleared, bases re-registered).
FacQ compose_fac(AlgQ& alg, const FacQ& phi, const RatFunc& rho);

}  // namespace ect::detail
