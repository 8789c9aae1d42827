#pragma once
// Floating-point cross-check oracle. Evaluates the certified integrals, their
// h-derivatives, Wronskians, and the simplex (iterated-integral) identity by
// double-exponential quadrature. The oracle never upgrades a verdict: exact
// arithmetic is the authority; the oracle can only flag inconsistencies.

#include "chebyshev.hpp"
#include "problem.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace ect {

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    double tol = 1e-12;   // quadrature convergence target (relative)
    int max_levels = 11;  // tanh-sinh refinement depth
    unsigned grid = 50;   // sign_scan default grid size
};

struct SignScanResult {
    unsigned grid = 0;
    // per k = 1..n: Wronskian W[I_1..I_k] kept one sign, away from the noise
    // floor, across the whole grid
    std::vector<bool> sign_constant;
    std::vector<std::string> violations;  // empty when consistent
};

struct OracleReport {
    unsigned scan_grid = 0;
    std::vector<bool> sign_constant;
    struct Prop33 {
        unsigned k = 0;
        double h = 0;
        double wronskian = 0;  // derivative-matrix determinant
        double simplex = 0;    // iterated-integral representation
        double rel_err = 0;
        bool pass = false;
    };
    std::vector<Prop33> prop33_checks;
};

// x with |A(x) - h| < 1e-14 * max(1, h) on a bracket where A is monotone and
// straddles h; bisection followed by Newton polish.
double solve_branch(const RatFunc& A, double h, double lo, double hi);

class NumericOracle {
public:
    // Resolves the problem exactly (preprocessing, involution, plan) and
    // prepares numeric evaluators. Requires h_max. Throws OracleError or
    // PreconditionError.
    explicit NumericOracle(const ProblemFile& pf, OracleOptions opt = {});

    double h_max() const { return h_max_; }
    unsigned n() const { return static_cast<unsigned>(fam_.size()); }
    const std::vector<RatFunc>& family() const { return fam_; }
    unsigned s_final() const { return s_; }

    // oval projection endpoints and the numeric involution branch
    double x_plus(double h) const;
    double x_minus(double h) const;
    double sigma1(double x) const;
    double sigma1_prime(double x) const;

    // integral of the i-th certified integrand over the oval at level h
    // (area-positive orientation)
    double abelian_integral(std::size_t i, double h) const;
    // k-th h-derivative of the same, by the balance/chain representation
    double derivative_Iik(std::size_t i, unsigned k, double h) const;
    // det [ d^i/dh^i I_j(h) ], i,j = 0..k-1
    double wronskian_numeric(unsigned k, double h) const;
    // iterated integral over the ordered simplex 0 < x_0 < ... < x_{k-1} < x_h^+
    // of the product of discrete Wronskians (k <= 3)
    double simplex_wronskian(unsigned k, double h) const;

    // raw oval integral of f * y^{2s-1} dx on the original Hamiltonian
    // (identity checks build on this)
    double integral_fs(const RatFunc& f, unsigned s, double h) const;

    // geometric grid over (0.01 h_max, 0.99 h_max); checks every W[I_k]
    // keeps one sign away from the noise floor
    SignScanResult sign_scan(unsigned N) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    std::vector<RatFunc> fam_;
    unsigned s_ = 1;
    double h_max_ = 0;
};

// Assembled oracle section for reports: sign scan plus the simplex identity
// checks at h = {0.05, 0.1, 0.2} * (h_max / 0.25).
OracleReport run_oracle_checks(const NumericOracle& oracle, unsigned grid, double tol);

}  // namespace ect
