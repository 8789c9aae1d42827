// Certification pipeline for Chebyshev properties of Abelian-integral
// families attached to H(x, y) = A(x) + B(x) y^{2m} (quadratic-equivalent
// mode) or H(x, y) = Phi(x) + Psi(y) (separated mode).
//
// The pipeline constructs the implicit involution of the potential, forms
// balance functions ell_i, differentiates them along the involution curve,
// takes Wronskian determinants, eliminates the involution variable with
// resultants, and counts real roots with Sturm sequences.  Everything is
// exact; a CERTIFIED verdict is a proof sketch whose every step is an exact
// computation.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ectcert/bipoly.hpp"
#include "ectcert/elimination.hpp"
#include "ectcert/involution.hpp"
#include "ectcert/ratfunc.hpp"
#include "ectcert/realroots.hpp"
#include "ectcert/surd.hpp"

namespace ect {

enum class Verdict { CERTIFIED, INCONCLUSIVE, PRECONDITION_FAILED };
std::string to_string(Verdict v);

struct HamiltonianSpec {
    RatFunc A;                    // potential; Phi in separated mode
    std::optional<RatFunc> B;     // quadratic mode only
    unsigned m = 1;
    std::optional<RatFunc> Psi;   // separated mode only (function of y)
    std::optional<Surd> h_max;    // optional energy bound (numeric oracle only)
};

struct IntegrandFamily {
    std::vector<RatFunc> f;
    unsigned s = 1;               // quadratic mode: y-power parameter, g(y) = y^{2s-1}
    std::optional<RatFunc> g;     // separated mode (function of y)
    std::size_t size() const { return f.size(); }
};

struct ProjectionInterval {
    Surd x_left;                  // x_left < 0
    Endpoint x_right;             // x_right > 0; may be +infinity
};

// How B^{(2s-1)/(2m)} is realized inside the balances.
struct SubstitutionPlan {
    enum class Kind { Identity, Radical };
    Kind kind = Kind::Identity;
    // Identity: B^e equals (up to a positive constant) the rational function
    // `carrier`, and balances live in (x, z).
    RatFunc carrier;
    // Radical: B = beta (x+c)^k, and with u^r = x+c the factor B^e becomes
    // (up to a positive constant) u^t; balances live in (u, v).
    Rat c;
    unsigned r = 1;
    long t = 0;
    Rat exponent_e;               // e = (2s-1)/(2m), recorded
};

struct PreprocessStep {
    unsigned round;
    std::string description;
};

struct PreprocessTrace {
    unsigned rounds = 0;
    unsigned s_initial = 0, s_final = 0;
    std::vector<PreprocessStep> steps;
};

struct KRecord {
    unsigned k = 0;
    // Reduced Wronskian numerator: univariate on the explicit-sigma path,
    // bivariate otherwise (textual form plus coefficient serialization in
    // reports).
    std::string wronskian_numerator;
    // Content-normalized resultant r_k (primitive, positive leading
    // coefficient); on the explicit-sigma path this is the Wronskian
    // numerator itself and no elimination happens.
    PolyZ resultant;
    bool resultant_zero = false;
    long sturm_count = -1;
    // Exact second-chance count: when the first elimination has window
    // roots, the same pair is eliminated in the other variable and counted
    // over the partner window (the involution image of the counting
    // interval).  A genuine on-branch zero projects into both windows, so a
    // zero count on either side certifies the Wronskian nonvanishing; -1
    // means the partner elimination did not run.
    long partner_sturm_count = -1;
    // Exact box-exclusion refinement: when both eliminations have window
    // roots, every candidate pair of isolating intervals is shrunk until a
    // rational interval enclosure of the numerator or of the curve
    // polynomial excludes zero over the product box.  All pairs refuted
    // proves no common zero lies in the window box, with the same exactness
    // guarantees as the Sturm counts.
    bool box_certified = false;
    std::vector<EndpointAdjustment> adjustments;
    // Isolating intervals for roots found inside the counting interval.
    std::vector<std::pair<Rat, Rat>> dirty_roots;
    // Factors divided out of the transformed curve when the resultant
    // vanished identically against a reducible curve polynomial.
    std::vector<std::string> curve_reductions;
    double ms = 0.0;
};

struct CertificationReport {
    Verdict verdict = Verdict::INCONCLUSIVE;
    std::string mode;             // quadratic-implicit | quadratic-explicit-sigma |
                                  // quadratic-radical | separated
    std::vector<std::string> preconditions;   // verified facts
    PreprocessTrace trace;
    std::vector<RatFunc> family_final;
    unsigned s_final = 0;
    std::optional<InvolutionCurve> curve;
    std::optional<BiRat> sigma_prime;         // -q_x/q_z, reduced
    bool origin_certified = false;
    SubstitutionPlan plan;
    std::vector<KRecord> k_records;
    std::vector<std::string> diagnostics;
    double total_ms = 0.0;
};

struct CertifyOptions {
    bool preprocess_auto = true;
    bool numeric_branch_filter = true;
    std::optional<BiQ> q_hint;
    bool parallel_k = true;
};

// ---------------------------------------------------------------------------
// Involution interface on top of find_involution: optional hint adoption.
// The hint is verified (divides the level-set numerator, corner conditions)
// and adopted; otherwise the branch is reconstructed from scratch.
InvolutionCurve involution_from_A(const RatFunc& A, const std::optional<BiQ>& q_hint);

// -q_x/q_z, reduced.
BiRat sigma_prime(const InvolutionCurve& curve);

// ---------------------------------------------------------------------------
// Exponent plan for B^{(2s-1)/(2m)}.
SubstitutionPlan substitution_plan(const RatFunc& B, unsigned s, unsigned m);

// ---------------------------------------------------------------------------
// Preprocessing: h-multiplication and integration-by-parts power raising.
//
// h_multiply: h * I(f, s) = I(A f, s) + I(B f, s + m); returns the two
// integrand/power pairs.
std::pair<std::pair<RatFunc, unsigned>, std::pair<RatFunc, unsigned>>
h_multiply(const RatFunc& f, const RatFunc& A, const RatFunc& B, unsigned s, unsigned m);

// puja_raise: G with I(F, power k-2 over 2) = I(G, power k over 2), i.e.
// contour integral of F y^{k-2} equals that of G y^k;
// G = (2/k)(BF/A')' - B'F/A'.  Requires F/A' analytic at 0.
RatFunc puja_raise(const RatFunc& F, const RatFunc& A, const RatFunc& B, unsigned k);

// Raise s until s > m(n-2), recording the trace.  mode_auto=false only
// validates.  Throws PreconditionError when raising is needed but
// unavailable (m > 1) or inapplicable.
IntegrandFamily preprocess_family(const IntegrandFamily& fam, const HamiltonianSpec& H,
                                  bool mode_auto, PreprocessTrace& trace);

// ---------------------------------------------------------------------------
// Balances and Wronskians (reduced public forms; the pipeline internally
// uses a factored-denominator representation for speed).
//
// Two-variable balance L_i(x,z) = phi(x) - phi(z), phi = f/(A' * B^e), in
// (x,z) for identity plans and (u,v) for radical plans.
BiRat balance_ell(const RatFunc& f, const RatFunc& A, const SubstitutionPlan& plan);

// D R along the curve: identity plans D = d_x + sigma' d_z; radical plans
// D = (1/(r u^{r-1}))(d_u + S_v d_v) with S_v = -Q_u/Q_v on the transformed
// curve.  Implemented with the derivation S = A'(x)/A'(z) (resp. its radical
// analogue), which agrees with the tangent field on the curve.
BiRat derive_along_curve(const BiRat& R, const RatFunc& A, const SubstitutionPlan& plan);

// Wronskian of the first k balances of the family: determinant of
// (D^i L_j), i,j = 0..k-1, fully reduced.  When the plan collapses to one
// variable (explicit sigma), use wronskian_explicit below instead.
BiRat wronskian_curve(const std::vector<RatFunc>& f, const RatFunc& A,
                      const SubstitutionPlan& plan, unsigned k);

// One-variable Wronskian of ell_i(x) = phi_i(x) - phi_i(rho(x)) for an
// explicit involution rho (q linear in z), D = d/dx.
RatFunc wronskian_explicit(const std::vector<RatFunc>& f, const RatFunc& A,
                           const SubstitutionPlan& plan, const RatFunc& rho, unsigned k);

// ---------------------------------------------------------------------------
// Elimination + root count for one k (two-variable paths).  `numerator` is
// the reduced Wronskian numerator in (x,z) or (u,v).
KRecord eliminate_and_count(const BiQ& numerator, const BiQ& curve_poly,
                            const SubstitutionPlan& plan, const ProjectionInterval& interval,
                            unsigned k, std::vector<std::string>& diagnostics);

// ---------------------------------------------------------------------------
// Separated-mode helpers.
std::vector<RatFunc> g_chain(const RatFunc& g, const RatFunc& Psi, unsigned n);
bool order_condition(const RatFunc& g, unsigned m, unsigned n);

// ---------------------------------------------------------------------------
// Structural checks; returns the list of verified facts, throws
// PreconditionError on the first violation.
std::vector<std::string> check_preconditions(const HamiltonianSpec& H,
                                             const IntegrandFamily& fam,
                                             const ProjectionInterval& interval,
                                             const SubstitutionPlan& plan);

// ---------------------------------------------------------------------------
// Full pipelines.
CertificationReport certify_theoremB(const HamiltonianSpec& H, const IntegrandFamily& fam,
                                     const ProjectionInterval& interval,
                                     const CertifyOptions& options);

// Separated mode: hypothesis (a) on f_i/Phi' over (0, x_right), hypothesis
// (b) on the g-chain over (0, y_right), plus the order condition on g.
CertificationReport certify_theoremA(const HamiltonianSpec& H, const IntegrandFamily& fam,
                                     const ProjectionInterval& interval, const Surd& y_right,
                                     const CertifyOptions& options);

// ---------------------------------------------------------------------------
// Evaluation determinant det(f_j(x_i)) for testing interlacing properties.
double discrete_wronskian(const std::vector<RatFunc>& fs, const std::vector<double>& points);
Rat discrete_wronskian_exact(const std::vector<RatFunc>& fs, const std::vector<Rat>& points);

}  // namespace ect
