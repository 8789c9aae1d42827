#include "ectcert/report.hpp"

#include "ectcert/oracle.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

namespace ect {

using nlohmann::json;

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
    bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) &&
              EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) &&
              EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    if (!ok) throw std::runtime_error("SHA-256 computation failed");
    std::ostringstream os;
    os << std::hex << std::setfill('0');
    for (unsigned i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(digest[i]);
    return os.str();
}

namespace {

json poly_coeffs(const PolyZ& p) {
    json arr = json::array();
    for (std::size_t i = 0; i < p.c.size(); ++i) arr.push_back(to_string(p.c[i]));
    return arr;
}

json krecord_json(const KRecord& r) {
    json jr;
    jr["k"] = r.k;
    jr["wronskian_numerator"] = r.wronskian_numerator;
    jr["resultant"] = r.resultant_zero ? json(nullptr) : poly_coeffs(r.resultant);
    jr["sturm_count"] = r.sturm_count;
    jr["partner_sturm_count"] =
        r.partner_sturm_count < 0 ? json(nullptr) : json(r.partner_sturm_count);
    jr["box_certified"] = r.box_certified;
    json adj = json::array();
    for (const auto& a : r.adjustments)
        adj.push_back({{"endpoint", a.endpoint}, {"root", a.root}, {"multiplicity", a.multiplicity}});
    jr["adjustments"] = adj;
    json dirty = json::array();
    for (const auto& [lo, hi] : r.dirty_roots)
        dirty.push_back(json::array({to_string(lo), to_string(hi)}));
    jr["dirty_roots"] = dirty;
    json reds = json::array();
    for (const auto& g : r.curve_reductions) reds.push_back(g);
    jr["curve_reductions"] = reds;
    return jr;
}

json oracle_json(const OracleReport& o) {
    json jo;
    jo["scan_grid"] = o.scan_grid;
    json sc = json::array();
    for (bool b : o.sign_constant) sc.push_back(b);
    jo["sign_constant"] = sc;
    json checks = json::array();
    for (const auto& c : o.prop33_checks)
        checks.push_back({{"k", c.k},
                          {"h", c.h},
                          {"wronskian", c.wronskian},
                          {"simplex", c.simplex},
                          {"rel_err", c.rel_err},
                          {"pass", c.pass}});
    jo["prop33_checks"] = checks;
    return jo;
}

}  // namespace

std::string render_json_report(const CertificationReport& rep, const OracleReport* oracle,
                               const std::string& input_sha256) {
    json j;
    j["verdict"] = to_string(rep.verdict);
    j["mode"] = rep.mode;
    json pre = json::array();
    for (const auto& s : rep.trace.steps) pre.push_back(s.description);
    j["preprocessing"] = pre;
    json recs = json::array();
    for (const auto& r : rep.k_records) recs.push_back(krecord_json(r));
    j["k_records"] = recs;
    j["oracle"] = oracle ? oracle_json(*oracle) : json(nullptr);
    json facts = json::array();
    for (const auto& s : rep.preconditions) facts.push_back(s);
    j["preconditions"] = facts;
    j["version"] = ECTCERT_VERSION;
    j["input_sha256"] = input_sha256;
    json timings;
    timings["total_ms"] = rep.total_ms;
    json kms = json::array();
    for (const auto& r : rep.k_records) kms.push_back(r.ms);
    timings["k_ms"] = kms;
    j["timings"] = timings;
    return j.dump(2);
}

std::string render_text_report(const std::string& name, const CertificationReport& rep,
                               const OracleReport* oracle) {
    std::ostringstream os;
    os << name << ": " << to_string(rep.verdict) << "  [" << rep.mode << "]\n";
    if (!rep.trace.steps.empty()) {
        os << "  preprocessing:\n";
        for (const auto& s : rep.trace.steps) os << "    - " << s.description << "\n";
    }
    for (const auto& r : rep.k_records) {
        os << "  k=" << r.k << ": ";
        if (r.resultant_zero) {
            os << "resultant identically zero";
        } else {
            os << "resultant degree " << r.resultant.degree() << ", Sturm count " << r.sturm_count;
            if (r.partner_sturm_count >= 0)
                os << ", partner-side count " << r.partner_sturm_count;
            if (r.box_certified) os << ", box-excluded";
            if (!r.adjustments.empty())
                os << " (" << r.adjustments.size() << " endpoint adjustment"
                   << (r.adjustments.size() == 1 ? "" : "s") << ")";
            if (!r.curve_reductions.empty())
                os << ", " << r.curve_reductions.size() << " curve reduction"
                   << (r.curve_reductions.size() == 1 ? "" : "s");
        }
        os << "  [" << std::fixed << std::setprecision(1) << r.ms << " ms]\n";
        os.unsetf(std::ios::floatfield);
    }
    for (const auto& d : rep.diagnostics) os << "  note: " << d << "\n";
    if (oracle) {
        os << "  oracle: sign scan over " << oracle->scan_grid << " levels: ";
        bool all = true;
        for (bool b : oracle->sign_constant) all = all && b;
        os << (all ? "all Wronskians sign-constant" : "SIGN INCONSISTENCY FLAGGED") << "\n";
        for (const auto& c : oracle->prop33_checks) {
            os << "  oracle: simplex identity k=" << c.k << " at h=" << c.h << ": rel "
               << std::scientific << std::setprecision(2) << c.rel_err
               << (c.pass ? " (pass)" : " (FAIL)") << "\n";
            os.unsetf(std::ios::floatfield);
        }
    }
    os << "  total " << std::fixed << std::setprecision(1) << rep.total_ms << " ms\n";
    os.unsetf(std::ios::floatfield);
    return os.str();
}

}  // namespace ect
