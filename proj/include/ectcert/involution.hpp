// Implicit involution curves attached to a potential A(x).
//
// For an analytic potential with a strict minimum at the origin, the level
// sets A(x) = A(z) near the origin carry an involution z = sigma(x) with
// sigma(0) = 0 and sigma'(0) = -1 (the two preimages of a level swap).  Its
// graph is a branch of the algebraic curve
//
//     C(x, z) = numerator( (A(x) - A(z)) / (x - z) ) = 0,
//
// and the certification pipeline works with the minimal polynomial factor
// q(x, z) of C whose zero set contains that branch.  This module constructs
// C, isolates q by Newton iteration on the power-series branch followed by
// exact reconstruction and division, and validates the corner conditions
// q(0,0) = 0, q_x(0,0) = q_z(0,0) != 0.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ectcert/bipoly.hpp"
#include "ectcert/ratfunc.hpp"

namespace ect {

// A structural hypothesis of the certification method failed for this input
// (as opposed to an internal error): the caller converts this into the
// PRECONDITION_FAILED verdict together with the carried diagnostic.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvolutionCurve {
    // Selected primitive factor through the origin; content-free with
    // positive lexicographic leading coefficient.
    BiQ q;
    // Full primitive numerator C(x, z) of (A(x) - A(z))/(x - z).
    BiQ full;
    // When q is linear in z (q = a(x) + b(x) z), the involution is the
    // explicit rational map sigma(x) = -a(x)/b(x).
    std::optional<RatFunc> explicit_sigma;
    // Whether q(x, z) = q(z, x); the balance construction does not require
    // symmetry, but all level-set curves of a genuine potential have it, so
    // asymmetry is surfaced as a diagnostic.
    bool symmetric = true;
};

// Primitive numerator of (A(x) - A(z))/(x - z) for rational A.
// Throws std::logic_error if (x - z) fails to divide (impossible for a
// well-formed difference quotient).
BiQ involution_numerator(const RatFunc& A);

// Construct the involution curve for A.  Throws PreconditionError when no
// factor of C passes through the origin with the required first-order
// behaviour.
InvolutionCurve find_involution(const RatFunc& A);

}  // namespace ect
