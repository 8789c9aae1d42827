#pragma once
// Shared helpers for the test suite: coefficient-list decoding, exact
// polynomial/rational-function comparisons, fixture loading.
#include "ectcert/parser.hpp"
#include "ectcert/poly.hpp"
#include "ectcert/problem.hpp"
#include "ectcert/ratfunc.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef ECTCERT_FIXTURE_DIR
#define ECTCERT_FIXTURE_DIR "fixtures"
#endif

namespace testutil {

inline ect::PolyZ poly_z(const std::vector<std::string>& coeffs) {
    std::vector<ect::Int> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.emplace_back(s);
    return ect::PolyZ::from_coeffs(std::move(c));
}

inline ect::PolyQ poly_q(const std::vector<std::string>& coeffs) {
    std::vector<ect::Rat> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.emplace_back(ect::Int(s));
    return ect::PolyQ::from_coeffs(std::move(c));
}

// a == lambda * b for some rational lambda > 0
inline bool proportional_pos(const ect::PolyZ& a, const ect::PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    auto d = static_cast<std::size_t>(a.degree());
    if ((a.c[d] > 0) != (b.c[d] > 0)) return false;
    for (std::size_t i = 0; i < d; ++i)
        if (a.coeff(i) * b.c[d] != b.coeff(i) * a.c[d]) return false;
    return true;
}

// exact equality of f and num/den as rational functions
inline bool ratfunc_equals(const ect::RatFunc& f, const ect::PolyQ& num, const ect::PolyQ& den) {
    return f.n * den == f.d * num;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(ECTCERT_FIXTURE_DIR) + "/" + name + ".prob";
}

inline ect::ProblemFile load_fixture(const std::string& name) {
    return ect::parse_problem_file(fixture_path(name));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testutil
