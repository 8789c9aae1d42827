// ectcert — exact certification of extended-complete-Chebyshev behaviour for
// energy-level integral families, with an optional floating-point oracle.
//
//   ectcert certify <file.prob> [--json] [--numeric] [--grid N] [--tol T]
//                   [--no-preprocess] [--quiet]
//   ectcert certify --all <dir> [same flags]
//   ectcert sturm <poly> <a> <b>
//   ectcert resultant <p> <q> [--eliminate x|y]
//
// Exit codes: 0 CERTIFIED, 1 INCONCLUSIVE, 2 PRECONDITION_FAILED,
// 3 parse/usage error.

#include "ectcert/cli.hpp"
#include "ectcert/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"exact Chebyshev-system certifier for energy-level integral families"};
    app.set_version_flag("--version", std::string(ect::ECTCERT_VERSION));
    app.require_subcommand(1);

    auto* certify = app.add_subcommand("certify", "certify a problem file (or a directory with --all)");
    std::string path;
    ect::CertifyFlags flags;
    bool all = false;
    certify->add_option("path", path, "problem file (.prob), or directory with --all")->required();
    certify->add_flag("--all", all, "certify every .prob file in the directory concurrently");
    certify->add_flag("--json", flags.json, "emit the JSON report document");
    certify->add_flag("--numeric", flags.numeric, "also run the floating-point oracle checks");
    certify->add_option("--grid", flags.grid, "sign-scan grid size")->default_val(50);
    certify->add_option("--tol", flags.tol, "oracle tolerance")->default_val(1e-8);
    certify->add_flag("--no-preprocess", flags.no_preprocess, "disable power-raising preprocessing");
    certify->add_flag("--quiet", flags.quiet, "suppress report output (exit code only)");

    auto* sturm = app.add_subcommand("sturm", "exact root count of a polynomial on (a, b)");
    std::string poly_text, a_text, b_text;
    sturm->add_option("poly", poly_text, "polynomial in x")->required();
    sturm->add_option("a", a_text, "left endpoint (surd expression or -inf)")->required();
    sturm->add_option("b", b_text, "right endpoint (surd expression or inf)")->required();

    auto* resultant = app.add_subcommand("resultant", "resultant of two polynomials in (x, y)");
    std::string p_text, q_text, eliminate = "x";
    resultant->add_option("p", p_text, "first polynomial in x, y")->required();
    resultant->add_option("q", q_text, "second polynomial in x, y")->required();
    resultant->add_option("--eliminate", eliminate, "variable to eliminate (x or y)")
        ->default_val("x");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;  // help/version exit cleanly; usage errors map to 3
    }

    if (certify->parsed())
        return all ? ect::run_certify_all(path, flags, std::cout, std::cerr)
                   : ect::run_certify(path, flags, std::cout, std::cerr);
    if (sturm->parsed()) return ect::run_sturm(poly_text, a_text, b_text, std::cout, std::cerr);
    if (resultant->parsed())
        return ect::run_resultant(p_text, q_text, eliminate, std::cout, std::cerr);
    return 3;
}
