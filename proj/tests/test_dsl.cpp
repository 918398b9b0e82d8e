#include "doctest.h"
#include "fixtures.hpp"

#include "legcalc/corpus.hpp"
#include "legcalc/dsl.hpp"

using namespace legcalc;
using namespace fixtures;

TEST_CASE("parse a knot and a pattern") {
    DslDocument doc = parse(R"(# two definitions
knot trefoil { events: L1 L3 X2 X2 X2 R1 R1; }
pattern Pa {
  strands: 3;
  orient: + + -;   # last seam runs left
  events: L3 X2 X1 X4 R3;
}
)");
    REQUIRE(doc.defs.size() == 2);
    const Definition* k = doc.find("trefoil");
    REQUIRE(k != nullptr);
    CHECK(k->kind == DefKind::Knot);
    CHECK(to_front(*k).tb() == 1);
    const Definition* p = doc.find("Pa");
    REQUIRE(p != nullptr);
    CHECK(p->strands == 3);
    CHECK(p->orient == std::vector<int>{1, 1, -1});
    CHECK(to_pattern(*p).events() == gen_P('a').events());
    CHECK(doc.find("missing") == nullptr);
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse("knot u { events L1 R1; }");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.code() == ErrorCode::SyntaxError);
        CHECK(e.line() == 1);
        CHECK(e.col() == 17);
        CHECK(e.expected().find(':') != std::string::npos);
    }
    try {
        parse("knot u {\n  events: L1 R1\n}");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 3);
        CHECK(e.col() == 1);
    }
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(parse("knot k { events: ; }"), SyntaxError);
    CHECK_THROWS_AS(parse("knot k { events: L1 R1; } extra"), SyntaxError);
    CHECK_THROWS_AS(parse("pattern p { strands: 1; orient: ; events: ; }"), SyntaxError);
    CHECK_THROWS_AS(parse("knot k { events: L1 R1 $; }"), SyntaxError);
}

TEST_CASE("identity pattern with no events") {
    DslDocument doc = parse("pattern id { strands: 1; orient: +; events: ; }");
    PatternFront p = to_pattern(doc.defs[0]);
    CHECK(p.events().empty());
    CHECK(p.winding() == 1);
}

TEST_CASE("duplicate names and validation failures") {
    try {
        parse("knot a { events: L1 R1; }\nknot a { events: L1 R1; }");
        FAIL("expected DuplicateName");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateName);
    }
    try {
        parse("pattern p { strands: 3; orient: + + +; events: L3 X2 X1 X4 R3; }");
        FAIL("expected ValidationError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ValidationError);
        REQUIRE_FALSE(e.violations().empty());
        CHECK(e.violations()[0].code == ErrorCode::OrientMismatch);
    }
    try {
        parse("knot k { events: L1 X3 R1; }");
        FAIL("expected ValidationError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ValidationError);
        CHECK(e.violations()[0].code == ErrorCode::HeightOutOfRange);
    }
    CHECK(parse_syntax("knot k { events: L1 X3 R1; }").defs.size() == 1);
}

TEST_CASE("canonical serialization") {
    DslDocument doc = parse("knot   t{events:L1 L3\n X2 X2 X2 R1 R1;}pattern id{strands:1;orient:+;events:;}");
    CHECK(serialize(doc) ==
          "knot t {\n  events: L1 L3 X2 X2 X2 R1 R1;\n}\n\n"
          "pattern id {\n  strands: 1;\n  orient: +;\n  events:;\n}\n");
    CHECK(parse(serialize(doc)) == doc);
}

TEST_CASE("generated patterns round trip") {
    for (const PatternFront& p : {gen_Q(3), gen_R(2), gen_P('b'), gen_identity()}) {
        Definition d = definition_of(p);
        DslDocument doc{{d}};
        DslDocument back = parse(serialize(doc));
        PatternFront q = to_pattern(back.defs[0]);
        CHECK(q.events() == p.events());
        CHECK(q.seam_orient() == p.seam_orient());
        CHECK(q.tb() == p.tb());
        CHECK(q.rot() == p.rot());
    }
    CHECK(sanitize_name("P_a_of_Q2") == "P_a_of_Q2");
    CHECK(sanitize_name("a-b c") == "a_b_c");
    CHECK(sanitize_name("2x") == "_2x");
}

TEST_CASE("random documents round trip") {
    Rng rng(11);
    for (int n = 0; n < 50; ++n) {
        DslDocument doc = random_document(rng, 4, 12);
        CHECK(parse(serialize(doc)) == doc);
    }
}
