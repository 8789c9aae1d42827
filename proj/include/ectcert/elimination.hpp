#pragma once
// Resultants for eliminating one variable of a bivariate polynomial:
// Sylvester matrix with fraction-free (Bareiss) determinant evaluation,
// plus a reduce-first path that keeps the matrix small when one input
// has low degree in the eliminated variable.
#include "ectcert/bipoly.hpp"

namespace ect {

struct ResultantResult {
    PolyZ primitive; // primitive part with positive leading coefficient
    Rat content;     // resultant = content * primitive (content may be negative)
    bool zero = false;
};

// Fraction-free determinant; consumes the matrix. Entries are univariate
// integer polynomials, the result is exact.
PolyZ bareiss_det(std::vector<std::vector<PolyZ>> m);

// Resultant with respect to the second variable of a and b (a, b nonzero in
// that variable handled; constants follow Res(c, q) = c^deg(q)).
// The result is a polynomial in the first variable.
ResultantResult resultant_second(const BiQ& a, const BiQ& b);

// Same, assembled directly as the Sylvester determinant (no reduction step);
// primarily for cross-checking and small inputs.
ResultantResult resultant_second_sylvester(const BiQ& a, const BiQ& b);

// Common factor of two bivariate polynomials (trivial factor = constant).
BiQ common_factor(const BiQ& a, const BiQ& b);

} // namespace ect
