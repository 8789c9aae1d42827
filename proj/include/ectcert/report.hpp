#pragma once
// Report rendering: human-readable text and machine-readable JSON documents
// for a certification run, plus the input digest helper.

#include "chebyshev.hpp"

#include <string>

namespace ect {

struct OracleReport;  // defined in oracle.hpp

inline constexpr const char* ECTCERT_VERSION = "0.1.0";

// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

// JSON document (serialized, 2-space indent). Schema keys: verdict, mode,
// preprocessing[], k_records[]{k, wronskian_numerator, resultant,
// sturm_count, adjustments[], dirty_roots[], curve_reductions[]},
// oracle{scan_grid, sign_constant[], prop33_checks[]} (null unless the
// numeric oracle ran), preconditions[], version, input_sha256, timings.
// Polynomial coefficients are serialized lowest degree first as exact
// rational strings. Identical input produces identical output except for
// the timings and version fields.
std::string render_json_report(const CertificationReport& rep, const OracleReport* oracle,
                               const std::string& input_sha256);

// Terminal-facing summary of the same content.
std::string render_text_report(const std::string& name, const CertificationReport& rep,
                               const OracleReport* oracle);

}  // namespace ect
