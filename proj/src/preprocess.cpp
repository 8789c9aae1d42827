#include "ectcert/chebyshev.hpp"

#include <sstream>

namespace ect {

std::pair<std::pair<RatFunc, unsigned>, std::pair<RatFunc, unsigned>>
h_multiply(const RatFunc& f, const RatFunc& A, const RatFunc& B, unsigned s, unsigned m) {
    // On the level set h = A(x) + B(x) y^{2m}:
    //   h * I(f, s) = I(A f, s) + I(B f, s + m)
    return {{A * f, s}, {B * f, s + m}};
}

RatFunc puja_raise(const RatFunc& F, const RatFunc& A, const RatFunc& B, unsigned k) {
    if (k == 0) throw std::invalid_argument("puja_raise: k must be positive");
    RatFunc Ap = derivative(A);
    if (Ap.n.is_zero()) throw PreconditionError("potential has zero derivative");
    RatFunc FA = F / Ap;
    if (!analytic_at_zero(FA))
        throw PreconditionError("power raise inapplicable: F/A' has a pole at the origin");
    RatFunc G = Rat(make_rat(2, static_cast<long>(k))) * derivative(B * FA) - derivative(B) * FA;
    return G;
}

IntegrandFamily preprocess_family(const IntegrandFamily& fam, const HamiltonianSpec& H,
                                  bool mode_auto, PreprocessTrace& trace) {
    IntegrandFamily cur = fam;
    trace.s_initial = fam.s;
    trace.s_final = fam.s;
    trace.rounds = 0;
    if (H.Psi) return cur;  // separated mode: no power raising
    if (!H.B) throw PreconditionError("quadratic mode requires B");
    long n = static_cast<long>(fam.size());
    long m = static_cast<long>(H.m);
    while (static_cast<long>(cur.s) <= m * (n - 2)) {
        if (!mode_auto)
            throw PreconditionError("family needs power raising but preprocessing is disabled");
        if (m != 1)
            throw PreconditionError("power raising unavailable for m > 1; s too small");
        unsigned s = cur.s;
        std::vector<RatFunc> next;
        next.reserve(cur.f.size());
        for (const auto& fi : cur.f) {
            // h * I(f, s) = I(A f, s) + I(B f, s+1); raise the first term.
            RatFunc G = puja_raise(H.A * fi, H.A, *H.B, 2 * s + 1);
            next.push_back(G + (*H.B) * fi);
        }
        cur.f = std::move(next);
        cur.s = s + 1;
        ++trace.rounds;
        std::ostringstream os;
        os << "h-multiplied the family and raised the integrand power: s " << s << " -> "
           << cur.s;
        trace.steps.push_back({trace.rounds, os.str()});
        trace.s_final = cur.s;
    }
    trace.s_final = cur.s;
    return cur;
}

}  // namespace ect
