#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include "legcalc/corpus.hpp"
#include "legcalc/dsl.hpp"
#include "legcalc/satellite.hpp"
#include "legcalc/topo.hpp"

using namespace legcalc;

namespace {

Rng make_rng(std::uint64_t salt) { return Rng(seed_from_env(20240611) ^ salt); }

// Stabilizes down to tb 0 with alternating signs; nullopt when tb < 0.
std::optional<FrontDiagram> untwisted(FrontDiagram k) {
    if (k.tb() < 0) return std::nullopt;
    for (int s = 1; k.tb() > 0; s = -s) k = stabilize(k, s, k.start_segment());
    return k;
}

} // namespace

TEST_CASE("random fronts: parity, reference walk, stabilization and reversal") {
    Rng rng = make_rng(1);
    for (int n = 0; n < 1000; ++n) {
        FrontDiagram k = random_knot(rng, 16);
        CAPTURE(to_string(k.events()));
        CHECK(((k.tb() + k.rot()) % 2 + 2) % 2 == 1);
        CHECK(k.cusps() % 2 == 0);
        oracle::FrontData o = oracle::trace_knot(k.events());
        REQUIRE(o.components_ok == 1);
        CHECK(o.writhe == k.writhe());
        CHECK(o.tb == k.tb());
        CHECK(o.rot == k.rot());

        int edge = static_cast<int>(rng() % k.layout().segments());
        int sign = rng() % 2 ? 1 : -1;
        FrontDiagram s = stabilize(k, sign, edge);
        CHECK(s.tb() == k.tb() - 1);
        CHECK(s.rot() == k.rot() + sign);
        CHECK(s.events().size() == k.events().size() + 2);
        CHECK(oracle::trace_knot(s.events(), s.reversed()).rot == s.rot());

        FrontDiagram r = reverse(k);
        CHECK(r.tb() == k.tb());
        CHECK(r.rot() == -k.rot());
        CHECK(oracle::trace_knot(k.events(), true).rot == r.rot());
    }
}

TEST_CASE("random fronts: Alexander polynomial") {
    Rng rng = make_rng(2);
    for (int n = 0; n < 300; ++n) {
        FrontDiagram k = random_knot(rng, 18);
        CAPTURE(to_string(k.events()));
        PDCode pd = smooth(k);
        CHECK(writhe(pd) == k.writhe());
        LaurentPoly a = alexander(pd);
        CHECK(a.value_at_one() == 1);
        CHECK(a.palindromic());
        CHECK(a.degree() <= seifert_genus_upper(pd));
        CHECK(a == alexander(pd, DetMethod::Modular));
        if (pd.size() > 0) {
            CHECK(oracle::agrees_up_to_unit(oracle::wirtinger_minor_at(pd, 2), a, 2));
            CHECK(oracle::agrees_up_to_unit(oracle::wirtinger_minor_at(pd, 3), a, 3));
        }
        CHECK(alexander(smooth(reverse(k))) == a);
        CHECK(alexander(smooth(stabilize(k, 1, k.start_segment()))) == a);
    }
}

TEST_CASE("random patterns agree with the reference walk") {
    Rng rng = make_rng(3);
    for (int n = 0; n < 500; ++n) {
        PatternFront p = random_pattern(rng, 14, 4);
        CAPTURE(to_string(p.events()));
        oracle::FrontData o = oracle::trace_pattern(p.seams(), p.seam_orient()[0], p.events());
        REQUIRE(o.components_ok == 1);
        CHECK(o.tb == p.tb());
        CHECK(o.rot == p.rot());
        CHECK(o.writhe == p.writhe());
        int w = 0;
        for (int s : p.seam_orient()) w += s;
        CHECK(p.winding() == w);
    }
}

TEST_CASE("random satellites and compositions obey the invariant formulas") {
    Rng rng = make_rng(4);
    for (int n = 0; n < 1000; ++n) {
        FrontDiagram k = random_knot(rng, 12);
        PatternFront p = random_pattern(rng, 10, 3);
        PatternFront q = random_pattern(rng, 10, 3);
        CAPTURE(to_string(k.events()));
        CAPTURE(to_string(p.events()));
        CAPTURE(to_string(q.events()));
        int w = p.winding();

        KnotSatellite s = satellite(p, k, true);
        CHECK(s.twist == k.tb());
        CHECK(s.diagram.tb() == w * w * k.tb() + p.tb());
        CHECK(s.diagram.rot() == w * k.rot() + p.rot());
        oracle::FrontData o = oracle::trace_knot(s.diagram.events(), s.diagram.reversed());
        CHECK(o.components_ok == 1);
        CHECK(o.tb == s.diagram.tb());
        CHECK(o.rot == s.diagram.rot());

        PatternSatellite c = compose(p, q);
        CHECK(c.diagram.tb() == w * w * q.tb() + p.tb());
        CHECK(c.diagram.rot() == w * q.rot() + p.rot());
        CHECK(c.diagram.winding() == w * q.winding());
        oracle::FrontData oc = oracle::trace_pattern(c.diagram.seams(), c.diagram.seam_orient()[0], c.diagram.events());
        CHECK(oc.components_ok == 1);
        CHECK(oc.tb == c.diagram.tb());
    }
}

TEST_CASE("untwisted random satellites multiply Alexander polynomials") {
    Rng rng = make_rng(5);
    FrontDiagram st = fixtures::stabilized_trefoil();
    std::vector<FrontDiagram> companions{st, reverse(st)};
    for (int tries = 0; tries < 20000 && companions.size() < 12; ++tries)
        if (auto k = untwisted(random_knot(rng, 14))) companions.push_back(*k);
    int done = 0;
    for (int tries = 0; tries < 1000 && done < 60; ++tries) {
        const FrontDiagram* k = &companions[rng() % companions.size()];
        PatternFront p = random_pattern(rng, 8, 3);
        if (p.winding() == 0) continue;
        ++done;
        CAPTURE(to_string(k->events()));
        CAPTURE(to_string(p.events()));
        KnotSatellite s = satellite(p, *k, false);
        LaurentPoly expect = satellite_alexander(alexander(closure(p)), alexander(smooth(*k)), p.winding());
        CHECK(alexander(smooth(s.diagram)) == expect);
    }
    CHECK(done >= 40);
}

TEST_CASE("random DSL documents round trip") {
    Rng rng = make_rng(6);
    for (int n = 0; n < 200; ++n) {
        DslDocument doc = random_document(rng, 4, 14);
        std::string text = serialize(doc);
        DslDocument back = parse(text);
        CHECK(back == doc);
        CHECK(serialize(back) == text);
        for (const auto& d : back.defs) {
            if (d.kind == DefKind::Knot) CHECK(to_front(d).events() == d.events);
            else CHECK(to_pattern(d).events() == d.events);
        }
    }
}
