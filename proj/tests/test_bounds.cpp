#include "doctest.h"
#include "fixtures.hpp"

#include "legcalc/bounds.hpp"
#include "legcalc/io.hpp"

using namespace legcalc;
using namespace fixtures;

TEST_CASE("slice-Bennequin bounds") {
    CHECK(sb_bounds(-1, 0) == SBBounds{0, 0, 0, 0});
    SBBounds b = sb_bounds(0, 1);
    CHECK(b.tau_min == 1);
    CHECK(b.g4_min == 1);
    CHECK(b.s_min == 2);
    for (int g = 1; g <= 3; ++g)
        for (int i = 0; i <= 4; ++i) {
            CHECK(sb_bounds(0, 2 * g - 1 + 2 * i).tau_min == g + i);
            CHECK(sb_bounds(0, -(2 * g - 1 + 2 * i)).tau_min == g + i);
        }
    CHECK(sb_bounds(-5, 0).tau_min == -2);
}

TEST_CASE("operator hypothesis") {
    OperatorVerdict a = operator_hypothesis(gen_P('a'));
    CHECK(a.pass);
    CHECK(a.winding_one);
    CHECK(a.unknotted_closure);
    OperatorVerdict id = operator_hypothesis(gen_identity());
    CHECK_FALSE(id.pass);
    CHECK(id.failing.size() == 2);
    OperatorVerdict q = operator_hypothesis(gen_Q(3));
    CHECK(q.pass);
    CHECK(q.tb == 6);
    CHECK(q.rot == 0);
    CHECK_FALSE(operator_hypothesis(gen_P('b')).pass);
}

TEST_CASE("genus certification") {
    CertifiedGenus t = certify_genus(trefoil());
    CHECK(t.certified());
    CHECK(t.g == 1);
    CHECK(t.tau == 1);
    CHECK(certify_genus(unknot()).certified());
    CHECK(certify_genus(unknot()).g == 0);
    FrontDiagram ft = trefoil();
    FrontDiagram twice = stabilize(stabilize(ft, 1, ft.start_segment()), -1, 0);
    CertifiedGenus u = certify_genus(twice);
    CHECK_FALSE(u.certified());
    CHECK(u.lower == 0);
    CHECK(u.upper == 1);
    CertifiedGenus s = certify_genus(stabilized_trefoil());
    CHECK(s.certified());
    CHECK(s.g == 1);
}

TEST_CASE("ledgers") {
    auto taus = [](const std::vector<LedgerRow>& rows) {
        std::vector<int> out;
        for (const auto& r : rows) {
            CHECK(r.sb_tau == r.tau);
            CHECK(r.tb == 0);
            CHECK(r.g == r.tau);
            CHECK(r.g4 == r.tau);
            CHECK(r.g4ex == r.tau);
            out.push_back(r.tau);
        }
        return out;
    };
    CHECK(taus(ledger(gen_P('a'), 1, trefoil(), 3)) == std::vector<int>{1, 2, 3, 4});
    CHECK(taus(ledger(gen_Q(2), 2, trefoil(), 2)) == std::vector<int>{1, 3, 5});
    CHECK(taus(ledger(gen_R(0), 0, trefoil(), 5)) == std::vector<int>{1, 1, 1, 1, 1, 1});
    CHECK(taus(ledger(gen_P('a'), 1, stabilized_trefoil(), 2)) == std::vector<int>{1, 2, 3});
    CHECK(taus(ledger(gen_P('a'), 1, reverse(stabilized_trefoil()), 2)) == std::vector<int>{1, 2, 3});

    try {
        ledger(gen_identity(), 1, trefoil(), 2);
        FAIL("expected HypothesisFailed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HypothesisFailed);
    }
    FrontDiagram ft = trefoil();
    FrontDiagram twice = stabilize(stabilize(ft, 1, ft.start_segment()), -1, 0);
    CHECK_THROWS_AS(ledger(gen_P('a'), 1, twice, 2), Error);
    CHECK_THROWS_AS(ledger(gen_P('a'), 2, trefoil(), 2), Error);
}

TEST_CASE("L-space obstruction") {
    LaurentPoly d = trefoil_alexander();
    CHECK(lspace_obstruction(d, 1) == LSpaceVerdict::Inconclusive);
    CHECK(lspace_obstruction(d, 2) == LSpaceVerdict::NotLSpaceKnot);
    CHECK(lspace_obstruction(LaurentPoly(1), 0) == LSpaceVerdict::Inconclusive);
}

TEST_CASE("certificates") {
    Certificate c = certificate(gen_P('a'), trefoil(), 4);
    REQUIRE(c.conclusion.has_value());
    REQUIRE(c.rows.size() == 5);
    for (int i = 0; i <= 4; ++i) {
        CHECK(c.rows[i].tau == 1 + i);
        CHECK(c.rows[i].lspace == (i == 0 ? LSpaceVerdict::Inconclusive : LSpaceVerdict::NotLSpaceKnot));
    }
    CHECK(c.assumptions.size() == 2);

    Certificate id = certificate(gen_identity(), trefoil(), 4);
    CHECK_FALSE(id.conclusion.has_value());
    CHECK_FALSE(id.op.pass);
    CHECK(id.assumptions.size() == 2);

    Certificate slice = certificate(gen_Q(2), unknot(), 3);
    CHECK_FALSE(slice.conclusion.has_value());
    REQUIRE(slice.knot_failure.has_value());
    CHECK(*slice.knot_failure == ErrorCode::NonSliceRequired);

    Certificate q = certificate(gen_Q(2), trefoil(), 3);
    REQUIRE(q.conclusion.has_value());
    for (int i = 0; i <= 3; ++i) CHECK(q.rows[i].tau == 1 + 2 * i);
}

TEST_CASE("certificate JSON is deterministic and has the schema keys") {
    Json a = to_json(certificate(gen_P('a'), trefoil(), 2));
    Json b = to_json(certificate(gen_P('a'), trefoil(), 2));
    CHECK(a.dump() == b.dump());
    for (const char* k : {"operator", "knot", "assumptions", "ledger", "conclusion"}) CHECK(a.contains(k));
    for (const char* k : {"i", "tb", "rot", "tau", "g4", "g", "lspace"}) CHECK(a["ledger"][0].contains(k));
    CHECK(a["ledger"][1]["lspace"] == "not-lspace");
    Json none = to_json(certificate(gen_identity(), trefoil(), 1));
    CHECK(none["conclusion"].is_null());
}
