#pragma once
// Command implementations behind the ectcert executable.  Each returns the
// process exit code and writes to the supplied streams, keeping main() a
// thin argument dispatcher and making the commands drivable from tests.
//
// Exit codes: 0 CERTIFIED, 1 INCONCLUSIVE, 2 PRECONDITION_FAILED,
// 3 parse/usage/IO error.

#include <ostream>
#include <string>

namespace ect {

struct CertifyFlags {
    bool json = false;            // emit the JSON report document
    bool numeric = false;         // also run the floating-point oracle checks
    int grid = 50;                // sign-scan grid size
    double tol = 1e-8;            // oracle quadrature tolerance
    bool no_preprocess = false;   // disable power-raising preprocessing
    bool quiet = false;           // suppress report output (exit code only)
};

// Certify one problem file; prints a text or JSON report.
int run_certify(const std::string& path, const CertifyFlags& flags, std::ostream& out,
                std::ostream& err);

// Certify every *.prob file in a directory concurrently; prints one summary
// line per file in name order and returns the worst exit code.
int run_certify_all(const std::string& dir, const CertifyFlags& flags, std::ostream& out,
                    std::ostream& err);

// Exact root count of a univariate polynomial on (a, b); endpoints are surd
// expressions or inf/-inf.  Requires a < b.
int run_sturm(const std::string& poly_text, const std::string& a_text,
              const std::string& b_text, std::ostream& out, std::ostream& err);

// Content-normalized resultant of two polynomials in (x, y), eliminating
// `var`; prints the human-readable form and the coefficient list.
int run_resultant(const std::string& p_text, const std::string& q_text,
                  const std::string& var, std::ostream& out, std::ostream& err);

}  // namespace ect
