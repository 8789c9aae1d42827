#pragma once
// Exact real-root counting and isolation via Sturm chains, with quadratic-surd
// and infinite interval endpoints.
#include "ectcert/poly.hpp"
#include "ectcert/surd.hpp"

namespace ect {

struct SturmChain {
    std::vector<PolyZ> seq; // seq[0] = polynomial, seq[1] = derivative, then
                            // sign-preserving pseudo-remainders, content-stripped
};

// chain of the given polynomial as-is (callers usually pass a squarefree part)
SturmChain sturm_chain(const PolyZ& p);

int sign_at(const PolyZ& p, const Endpoint& e);
long sign_variations(const SturmChain& chain, const Endpoint& e);

struct EndpointAdjustment {
    std::string endpoint;     // "left" or "right"
    std::string root;         // the divided-out root value
    long multiplicity = 0;    // multiplicity in the original polynomial
};

struct RootCount {
    long count = 0; // distinct real roots strictly inside the open interval
    std::vector<EndpointAdjustment> adjustments;
};

// Distinct real roots of p in the open interval (a, b); requires a < b and
// p nonzero. Roots landing exactly on a finite endpoint are divided out
// (recorded in adjustments) and not counted.
RootCount count_roots(const PolyZ& p, const Endpoint& a, const Endpoint& b);
RootCount count_roots(const PolyQ& p, const Endpoint& a, const Endpoint& b);

// Rational isolating intervals, one per distinct root of p inside (a, b).
// An exact rational root yields a degenerate pair (r, r).
std::vector<std::pair<Rat, Rat>> isolate_roots(const PolyZ& p, const Endpoint& a,
                                               const Endpoint& b);

} // namespace ect
