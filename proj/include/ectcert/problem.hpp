#pragma once
// Problem-file ingestion: INI-style sectioned key=value text resolved into
// the certification pipeline's input types.
//
// Format (sections and keys; all required unless marked optional):
//   [problem]     name = string
//   [hamiltonian] A = expr-in-x; B = expr-in-x (quadratic mode only);
//                 m = positive integer; Psi = expr-in-y (separated mode only)
//   [family]      s = positive integer (quadratic) | g = expr-in-y (separated);
//                 f0, f1, ..., f{n-1} = expr-in-x (n from contiguous keys)
//   [interval]    x_left = surd; x_right = surd or inf;
//                 y_right = surd (separated mode); h_max = surd (optional)
//   [options]     (optional section) q = expr-in-x-z; preprocess = auto|none;
//                 numeric_branch_filter = on|off
// Lines starting with '#' or ';' are comments. Unknown sections or keys are
// rejected.

#include "chebyshev.hpp"

#include <stdexcept>
#include <string>

namespace ect {

struct ProblemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProblemFile {
    std::string name;
    HamiltonianSpec H;
    IntegrandFamily fam;
    ProjectionInterval interval;
    std::optional<Surd> y_right;  // separated mode only
    CertifyOptions options;
    bool separated = false;  // true when Psi/g/y_right drive the two-sided check
};

// Parse problem text; `where` names the source in error messages.
ProblemFile parse_problem_text(const std::string& text, const std::string& where = "<input>");

// Read and parse a problem file. Throws ProblemError (I/O, structure) or
// ParseError (expression syntax).
ProblemFile parse_problem_file(const std::string& path);

}  // namespace ect
