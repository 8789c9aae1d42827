// End-to-end certification runs on the bundled fixture problems, checked
// against values frozen from an independent oracle implementation: verdicts,
// preprocessed families, involution curves, resultants, and root counts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ectcert/chebyshev.hpp"
#include "frozen_data.hpp"
#include "test_util.hpp"

#include <map>
#include <string>

using namespace ect;
using testutil::load_fixture;
using testutil::poly_q;
using testutil::poly_z;
using testutil::proportional_pos;
using testutil::ratfunc_equals;

namespace {

std::map<std::string, CertificationReport>& report_cache() {
    static std::map<std::string, CertificationReport> cache;
    return cache;
}

const CertificationReport& certified(const std::string& name) {
    auto it = report_cache().find(name);
    if (it != report_cache().end()) return it->second;
    auto pf = load_fixture(name);
    REQUIRE_FALSE(pf.separated);
    auto rep = certify_theoremB(pf.H, pf.fam, pf.interval, pf.options);
    return report_cache().emplace(name, std::move(rep)).first->second;
}

void check_against_frozen(const CertificationReport& rep, const frozen::FixtureExpect& ex) {
    CAPTURE(ex.name);
    CHECK(rep.verdict == Verdict::CERTIFIED);
    CHECK(rep.s_final == ex.s_final);

    // involution curve: same primitive polynomial up to sign
    REQUIRE(rep.curve.has_value());
    BiRat qe = parse_birat(ex.q, "x", "z");
    REQUIRE(qe.d == BiQ(Rat(1)));
    BiQ want = normalize_content(qe.n);
    BiQ got = normalize_content(rep.curve->q);
    CHECK((got == want || got == Rat(-1) * want));

    // preprocessed family, exact as rational functions
    REQUIRE(rep.family_final.size() == ex.family.size());
    for (std::size_t i = 0; i < ex.family.size(); ++i) {
        CAPTURE(i);
        CHECK(ratfunc_equals(rep.family_final[i], poly_q(ex.family[i].num),
                             poly_q(ex.family[i].den)));
    }

    REQUIRE(rep.k_records.size() == ex.ks.size());
    for (std::size_t i = 0; i < ex.ks.size(); ++i) {
        CAPTURE(i);
        const KRecord& r = rep.k_records[i];
        const frozen::KExpect& ke = ex.ks[i];
        CHECK_FALSE(r.resultant_zero);
        if (ke.sturm_count >= 0) CHECK(r.sturm_count == ke.sturm_count);
        if (!ke.rk.empty()) CHECK(r.resultant == poly_z(ke.rk));
        // every record must end clean for a CERTIFIED verdict
        bool clean = r.sturm_count == 0 || r.partner_sturm_count == 0 || r.box_certified;
        CHECK(clean);
        if (ke.needs_second_chance) {
            CHECK(r.sturm_count > 0);
            CHECK((r.partner_sturm_count == 0 || r.box_certified));
        }
    }
}

}  // namespace

TEST_CASE("fixture runs reproduce frozen oracle data") {
    for (const auto* ex : frozen::fixtures()) {
        check_against_frozen(certified(ex->name), *ex);
    }
}

TEST_CASE("computed resultants for ex4_1 match the published factored forms") {
    const auto& rep = certified("ex4_1");
    const auto& pub = frozen::published_rk_ex4_1();
    REQUIRE(rep.k_records.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CAPTURE(k);
        CHECK(proportional_pos(rep.k_records[k].resultant, poly_z(pub[k])));
    }
}

TEST_CASE("ex4_1 counting window (0, sqrt(2)-1) is root-free for all three resultants") {
    const auto& rep = certified("ex4_1");
    Endpoint a = Endpoint::finite(Rat(0));
    Endpoint b = Endpoint::finite(Surd(Rat(-1), Rat(1), 2));  // -1 + sqrt(2)
    for (const auto& r : rep.k_records) {
        auto rc = count_roots(r.resultant, a, b);
        CHECK(rc.count == 0);
    }
}

TEST_CASE("rlv3 subfamily (second, third integrand) reproduces the published k=2 numerator") {
    auto pf = load_fixture("rlv3");
    IntegrandFamily pair;
    pair.s = pf.fam.s;
    pair.f = {pf.fam.f[1], pf.fam.f[2]};
    auto rep = certify_theoremB(pf.H, pair, pf.interval, pf.options);
    check_against_frozen(rep, frozen::fx_rlv3_pair());
    REQUIRE(rep.k_records.size() == 2);
    CHECK(proportional_pos(rep.k_records[1].resultant,
                           poly_z(frozen::published_w2_rlv3_pair())));
}

TEST_CASE("rlv3 full family reproduces the published k=3 numerator") {
    const auto& rep = certified("rlv3");
    REQUIRE(rep.k_records.size() == 3);
    CHECK(proportional_pos(rep.k_records[2].resultant, poly_z(frozen::published_w3_rlv3())));
    // counting window (0, 1)
    Endpoint a = Endpoint::finite(Rat(0)), b = Endpoint::finite(Rat(1));
    CHECK(count_roots(rep.k_records[2].resultant, a, b).count == 0);
    CHECK(count_roots(poly_z(frozen::published_w2_rlv3_pair()), a, b).count == 0);
}

TEST_CASE("second-chance refinements carry exact cleanliness, not numeric hints") {
    // r17: first-side count 1 at k=2, closed by the partner-side count
    const auto& r17 = certified("r17");
    const KRecord& k2 = r17.k_records[1];
    CHECK(k2.sturm_count == 1);
    CHECK(k2.partner_sturm_count == 0);
    // ex4_3: both sides dirty at k=2 and k=3, closed by box exclusion
    const auto& e43 = certified("ex4_3");
    for (std::size_t i : {std::size_t(1), std::size_t(2)}) {
        const KRecord& r = e43.k_records[i];
        CHECK(r.sturm_count > 0);
        CHECK(r.partner_sturm_count > 0);
        CHECK(r.box_certified);
    }
}

TEST_CASE("precondition violations yield PRECONDITION_FAILED, not a certificate") {
    auto pf = load_fixture("precond_s_too_small");
    auto rep = certify_theoremB(pf.H, pf.fam, pf.interval, pf.options);
    CHECK(rep.verdict == Verdict::PRECONDITION_FAILED);
    CHECK_FALSE(rep.diagnostics.empty());
}

TEST_CASE("separated-potential mode: two-member family over A + y^2/2") {
    auto p41 = load_fixture("ex4_1");
    HamiltonianSpec Hs;
    Hs.A = p41.H.A;
    Hs.m = 1;
    Hs.Psi = ratfunc_of(parse_poly("1/2*y^2", "y"));
    Hs.h_max = p41.H.h_max;
    IntegrandFamily fam;
    fam.f = {ratfunc_of(parse_poly("1", "x")), ratfunc_of(parse_poly("x^2", "x"))};
    fam.g = ratfunc_of(parse_poly("y", "y"));
    auto rep = certify_theoremA(Hs, fam, p41.interval, sqrt_of_rat(Rat(1, 2)), p41.options);
    CHECK(rep.verdict == Verdict::CERTIFIED);
    CHECK(rep.mode == "separated");
    REQUIRE(rep.k_records.size() == 4);  // x-side k=1,2 then y-side k=1,2
    for (const auto& r : rep.k_records) {
        CHECK_FALSE(r.resultant_zero);
        CHECK(r.sturm_count == 0);
    }

    // cross-path consistency: the same integrals through the quadratic-mode
    // pipeline (B = 1/2) must certify as well
    HamiltonianSpec Hq;
    Hq.A = p41.H.A;
    Hq.B = ratfunc_of(Rat(1, 2));
    Hq.m = 1;
    Hq.h_max = p41.H.h_max;
    IntegrandFamily famq;
    famq.f = fam.f;
    famq.s = 1;
    auto repq = certify_theoremB(Hq, famq, p41.interval, p41.options);
    CHECK(repq.verdict == Verdict::CERTIFIED);
}

TEST_CASE("separated-potential mode enforces the odd-order condition on g") {
    auto p41 = load_fixture("ex4_1");
    HamiltonianSpec Hs;
    Hs.A = p41.H.A;
    Hs.m = 1;
    Hs.Psi = ratfunc_of(parse_poly("1/2*y^2", "y"));
    IntegrandFamily fam;
    fam.f = p41.fam.f;  // n = 3 needs ord(g_odd) > 2m(n-2) = 2; g = y fails
    fam.g = ratfunc_of(parse_poly("y", "y"));
    auto rep = certify_theoremA(Hs, fam, p41.interval, sqrt_of_rat(Rat(1, 2)), p41.options);
    CHECK(rep.verdict == Verdict::PRECONDITION_FAILED);
}

TEST_CASE("detector property: a corrupted integrand cannot slip through") {
    // flip the sign of one coefficient in the first rlv3 integrand; at least
    // one detector (precondition, resultant, count, or oracle) must fire so
    // the mutated family is NOT certified with clean records everywhere
    auto pf = load_fixture("rlv3");
    RatFunc f0 = pf.fam.f[0];
    REQUIRE(f0.n.degree() >= 4);
    PolyQ mutated = f0.n;
    mutated.c[4] = -mutated.c[4];
    pf.fam.f[0] = make_ratfunc(mutated, f0.d);
    auto rep = certify_theoremB(pf.H, pf.fam, pf.interval, pf.options);
    CHECK(rep.verdict != Verdict::CERTIFIED);
}
