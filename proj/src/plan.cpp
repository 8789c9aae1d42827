#include "ectcert/chebyshev.hpp"

#include <stdexcept>

namespace ect {

namespace {

// P = lc * (x + c)^k exactly, k >= 1
std::optional<std::pair<Rat, long>> shifted_monomial(const PolyQ& P) {
    long k = P.degree();
    if (k < 1) return std::nullopt;
    Rat lc = P.leading();
    Rat c = Rat(P.coeff(static_cast<std::size_t>(k - 1)) / (Rat(k) * lc));
    PolyQ xpc;
    xpc.c = {c, Rat(1)};
    if (P == lc * pow_poly(xpc, static_cast<unsigned long>(k))) return std::make_pair(c, k);
    return std::nullopt;
}

unsigned long to_ulong(const Int& n) { return n.get_ui(); }

}  // namespace

SubstitutionPlan substitution_plan(const RatFunc& B, unsigned s, unsigned m) {
    if (B.n.is_zero()) throw PreconditionError("B vanishes identically");
    SubstitutionPlan plan;
    Rat e = make_rat(Int(2L * s - 1), Int(2L * m));
    plan.exponent_e = e;
    Int p = num(e), r = den(e);

    // Identity: both parts of B are exact r-th powers (up to constants), so
    // B^e is a rational function times a constant.
    auto rn = poly_kth_root(B.n, static_cast<unsigned>(to_ulong(r)));
    auto rd = poly_kth_root(B.d, static_cast<unsigned>(to_ulong(r)));
    if (rn && rd) {
        plan.kind = SubstitutionPlan::Kind::Identity;
        plan.carrier = make_ratfunc(pow_poly(rn->first, to_ulong(p)),
                                    pow_poly(rd->first, to_ulong(p)));
        plan.r = 1;
        plan.t = 0;
        plan.c = 0;
        return plan;
    }

    // Radical: B = beta (x+c)^k, substitute u^r = x + c.
    std::optional<Rat> c;
    long k_num = 0, k_den = 0;
    if (B.n.degree() >= 1) {
        auto sm = shifted_monomial(B.n);
        if (!sm)
            throw PreconditionError(
                "unsupported B: not an exact power and not a shifted monomial");
        c = sm->first;
        k_num = sm->second;
    }
    if (B.d.degree() >= 1) {
        auto sm = shifted_monomial(B.d);
        if (!sm)
            throw PreconditionError(
                "unsupported B: not an exact power and not a shifted monomial");
        if (c && !(sm->first == *c))
            throw PreconditionError("unsupported B: numerator and denominator shifts differ");
        c = sm->first;
        k_den = sm->second;
    }
    if (!c) throw PreconditionError("unsupported B: constant handled by the identity plan");

    Rat ke = Rat(Rat(k_num - k_den) * e);
    if (den(ke) == 1) {
        // integer exponent after all: (x+c)^{ke} is rational
        plan.kind = SubstitutionPlan::Kind::Identity;
        PolyQ xpc;
        xpc.c = {*c, Rat(1)};
        long kei = static_cast<long>(num(ke).get_si());
        if (kei >= 0)
            plan.carrier = make_ratfunc(pow_poly(xpc, static_cast<unsigned long>(kei)),
                                        PolyQ(Rat(1)));
        else
            plan.carrier = make_ratfunc(PolyQ(Rat(1)),
                                        pow_poly(xpc, static_cast<unsigned long>(-kei)));
        plan.r = 1;
        plan.t = 0;
        plan.c = 0;
        return plan;
    }
    plan.kind = SubstitutionPlan::Kind::Radical;
    plan.c = *c;
    plan.r = static_cast<unsigned>(to_ulong(den(ke)));
    plan.t = static_cast<long>(num(ke).get_si());
    plan.carrier = ratfunc_of(Rat(1));
    return plan;
}

// ---------------------------------------------------------------------------
// separated-mode helpers

std::vector<RatFunc> g_chain(const RatFunc& g, const RatFunc& Psi, unsigned n) {
    RatFunc Psip = derivative(Psi);
    if (Psip.n.is_zero()) throw PreconditionError("Psi has zero derivative");
    std::vector<RatFunc> chain;
    chain.reserve(n);
    RatFunc cur = g;
    for (unsigned i = 0; i < n; ++i) {
        chain.push_back(cur);
        if (i + 1 < n) cur = derivative(cur) / Psip;
    }
    return chain;
}

bool order_condition(const RatFunc& g, unsigned m, unsigned n) {
    // odd part (g(y) - g(-y)) / 2 must vanish at 0 to order > 2m(n-2)
    PolyQ neg;
    neg.c = {Rat(0), Rat(-1)};
    RatFunc negy = ratfunc_of(neg);
    RatFunc godd = make_rat(1, 2) * (g - compose(g, negy));
    if (godd.n.is_zero()) return true;  // g even: no odd part at all
    long v = valuation_at_zero(godd);
    if (v < 0) throw PreconditionError("g has a pole at 0");
    long bound = 2L * static_cast<long>(m) * (static_cast<long>(n) - 2);
    return v > bound;
}

}  // namespace ect
