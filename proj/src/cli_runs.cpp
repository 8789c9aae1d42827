#include "ectcert/cli.hpp"

#include "ectcert/bipoly.hpp"
#include "ectcert/elimination.hpp"
#include "ectcert/oracle.hpp"
#include "ectcert/parser.hpp"
#include "ectcert/problem.hpp"
#include "ectcert/realroots.hpp"
#include "ectcert/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <vector>

namespace ect {

namespace {

int verdict_code(Verdict v) {
    switch (v) {
        case Verdict::CERTIFIED: return 0;
        case Verdict::INCONCLUSIVE: return 1;
        case Verdict::PRECONDITION_FAILED: return 2;
    }
    return 3;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CERTIFIED: return "CERTIFIED";
        case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
        case Verdict::PRECONDITION_FAILED: return "PRECONDITION_FAILED";
    }
    return "?";
}

struct CertifyOutcome {
    int code = 3;
    std::string output;      // rendered report (empty when quiet)
    std::string error;       // diagnostic for exit 3
    std::string name;        // problem name (file stem on failure)
    Verdict verdict = Verdict::INCONCLUSIVE;
    double ms = 0.0;
};

CertifyOutcome certify_one(const std::string& path, const CertifyFlags& flags) {
    CertifyOutcome res;
    res.name = std::filesystem::path(path).stem().string();
    std::string bytes;
    {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            res.error = path + ": cannot open";
            return res;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        bytes = ss.str();
    }
    try {
        ProblemFile pf = parse_problem_text(bytes, path);
        res.name = pf.name;
        if (flags.no_preprocess) pf.options.preprocess_auto = false;
        CertificationReport rep =
            pf.separated
                ? certify_theoremA(pf.H, pf.fam, pf.interval, *pf.y_right, pf.options)
                : certify_theoremB(pf.H, pf.fam, pf.interval, pf.options);
        std::optional<OracleReport> oracle;
        if (flags.numeric) {
            OracleOptions oo;
            oo.tol = std::min(flags.tol, 1e-10);
            oo.grid = flags.grid;
            NumericOracle no(pf, oo);
            oracle = run_oracle_checks(no, static_cast<unsigned>(flags.grid), flags.tol);
        }
        const OracleReport* op = oracle ? &*oracle : nullptr;
        if (!flags.quiet)
            res.output = flags.json ? render_json_report(rep, op, sha256_hex(bytes))
                                    : render_text_report(res.name, rep, op);
        res.code = verdict_code(rep.verdict);
        res.verdict = rep.verdict;
        res.ms = rep.total_ms;
    } catch (const ParseError& e) {
        res.error = e.what();
    } catch (const ProblemError& e) {
        res.error = e.what();
    } catch (const OracleError& e) {
        res.error = std::string("numeric oracle: ") + e.what();
    } catch (const std::exception& e) {
        res.error = std::string(path) + ": " + e.what();
    }
    return res;
}

}  // namespace

int run_certify(const std::string& path, const CertifyFlags& flags, std::ostream& out,
                std::ostream& err) {
    CertifyOutcome res = certify_one(path, flags);
    if (!res.error.empty()) {
        err << "error: " << res.error << "\n";
        return 3;
    }
    if (!res.output.empty()) out << res.output;
    return res.code;
}

int run_certify_all(const std::string& dir, const CertifyFlags& flags, std::ostream& out,
                    std::ostream& err) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        err << "error: " << dir << ": not a directory\n";
        return 3;
    }
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".prob")
            files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        err << "error: " << dir << ": no .prob files\n";
        return 3;
    }
    // Batch mode prints one summary line per file; per-file reports are
    // suppressed so the output stays line-oriented.
    CertifyFlags per = flags;
    per.quiet = true;
    std::vector<std::future<CertifyOutcome>> tasks;
    tasks.reserve(files.size());
    for (const auto& f : files)
        tasks.push_back(std::async(std::launch::async, certify_one, f, per));
    int worst = 0;
    for (std::size_t i = 0; i < files.size(); ++i) {
        CertifyOutcome res = tasks[i].get();
        if (!res.error.empty()) {
            out << res.name << ": ERROR (" << res.error << ")\n";
            worst = std::max(worst, 3);
            continue;
        }
        std::ostringstream line;
        line << res.name << ": " << verdict_name(res.verdict) << " ("
             << static_cast<long>(res.ms) << " ms)";
        out << line.str() << "\n";
        worst = std::max(worst, res.code);
    }
    return worst;
}

int run_sturm(const std::string& poly_text, const std::string& a_text,
              const std::string& b_text, std::ostream& out, std::ostream& err) {
    try {
        PolyQ p = parse_poly(poly_text, "x");
        if (p.is_zero()) {
            err << "error: zero polynomial has no finite root count\n";
            return 3;
        }
        auto endpoint = [](const std::string& text) {
            std::string t = text;
            t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
                    t.end());
            if (t == "inf" || t == "+inf") return Endpoint::pos_inf();
            if (t == "-inf") return Endpoint::neg_inf();
            return Endpoint::finite(parse_surd(text));
        };
        Endpoint a = endpoint(a_text), b = endpoint(b_text);
        if (!(compare(a, b) < 0)) {
            err << "error: interval endpoints must satisfy a < b\n";
            return 3;
        }
        RootCount rc = count_roots(p, a, b);
        out << rc.count << "\n";
        for (const auto& adj : rc.adjustments)
            out << "note: root at endpoint " << adj.endpoint << " excluded (multiplicity "
                << adj.multiplicity << ")\n";
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

int run_resultant(const std::string& p_text, const std::string& q_text,
                  const std::string& var, std::ostream& out, std::ostream& err) {
    try {
        if (var != "x" && var != "y") {
            err << "error: variable to eliminate must be x or y\n";
            return 3;
        }
        auto poly_in = [&](const std::string& text) {
            BiRat r = parse_birat(text, "x", "y");
            if (!(r.d == BiQ(Rat(1))))
                throw std::runtime_error("resultant inputs must be polynomials in x, y");
            return r.n;
        };
        BiQ p = poly_in(p_text), q = poly_in(q_text);
        if (var == "x") {
            // resultant_second eliminates the second variable; swap so x is
            // in that position and y survives as the first.
            p = swap_vars(p);
            q = swap_vars(q);
        }
        ResultantResult rr = resultant_second(p, q);
        std::string survivor = (var == "x") ? "y" : "x";
        if (rr.zero) {
            out << "resultant = 0\n";
            return 0;
        }
        out << "resultant = " << to_string(rr.primitive, survivor) << "\n";
        out << "coefficients (lowest degree first):";
        for (const auto& c : rr.primitive.c) out << " " << to_string(c);
        out << "\n";
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace ect
