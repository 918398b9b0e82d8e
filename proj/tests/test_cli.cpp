#include "doctest.h"
#include "fixtures.hpp"

#include "legcalc/bounds.hpp"
#include "legcalc/cli.hpp"
#include "legcalc/io.hpp"

#include <cstdlib>
#include <sstream>

using namespace legcalc;
using namespace fixtures;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = dispatch(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string kTrefoil = "knot trefoil { events: L1 L3 X2 X2 X2 R1 R1; }\n";

std::string data(const std::string& name) { return std::string(LEGCALC_TEST_DATA) + "/" + name; }

} // namespace

TEST_CASE("invariants of the trefoil") {
    Run r = run({"invariants", "-"}, kTrefoil);
    CHECK(r.code == 0);
    CHECK(r.out == "{\"cusps\":4,\"rot\":0,\"tb\":1,\"writhe\":3}\n");
    Run f = run({"invariants", data("trefoil.front")});
    CHECK(f.out == r.out);
}

TEST_CASE("family output pipes into invariants") {
    Run fam = run({"family", "--type", "Q", "--j", "2"});
    REQUIRE(fam.code == 0);
    Json env = fam.json();
    CHECK(env["kind"] == "pattern");
    Run inv = run({"invariants", "-"}, fam.out);
    REQUIRE(inv.code == 0);
    Json j = inv.json();
    PatternFront q = gen_Q(2);
    CHECK(j["tb"] == q.tb());
    CHECK(j["rot"] == q.rot());
    CHECK(j["w"] == 1);
    CHECK(j["strands"] == q.seams());
    CHECK(j == env["invariants"]);
}

TEST_CASE("satellite and stabilize envelopes") {
    Run st = run({"stabilize", data("trefoil.front"), "--sign", "+"});
    REQUIRE(st.code == 0);
    CHECK(st.json()["invariants"]["tb"] == 0);
    CHECK(st.json()["invariants"]["rot"] == 1);
    Run pb = run({"family", "--type", "P", "--variant", "b"});
    REQUIRE(pb.code == 0);
    Run sat = run({"satellite", "--pattern", "-", "--knot", data("trefoil_stab.front")}, pb.out);
    REQUIRE(sat.code == 0);
    CHECK(sat.json()["invariants"]["tb"] == 0);
    CHECK(sat.json()["invariants"]["rot"] == 3);
    CHECK(sat.json()["twist"] == 0);

    Run twisted = run({"satellite", "--pattern", "-", "--knot", data("trefoil.front")}, pb.out);
    CHECK(twisted.code == 1);
    CHECK(twisted.json()["error"] == "TwistedInputRejected");
    Run allowed = run({"satellite", "--pattern", "-", "--knot", data("trefoil.front"), "--allow-twist"}, pb.out);
    CHECK(allowed.code == 0);
    CHECK(allowed.json()["twist"] == 1);
}

TEST_CASE("certificate from files") {
    Run c = run({"certificate", "--pattern", data("P_a.front"), "--knot", data("trefoil.front"), "--iterates", "3"});
    REQUIRE(c.code == 0);
    Json j = c.json();
    REQUIRE(j["ledger"].size() == 4);
    for (int i = 0; i <= 3; ++i) CHECK(j["ledger"][i]["tau"] == 1 + i);
    CHECK_FALSE(j["conclusion"].is_null());
    CHECK(j == to_json(certificate(gen_P('a'), trefoil(), 3)));
}

TEST_CASE("exit codes") {
    Run bad = run({"invariants", "-"}, "knot k { events: L1 R3; }");
    CHECK(bad.code == 1);
    Json e = bad.json();
    CHECK(e["error"] == "ValidationError");
    CHECK(e["violations"][0]["code"] == "HeightOutOfRange");
    CHECK_FALSE(bad.err.empty());

    Run syntax = run({"invariants", "-"}, "knot k { events L1 R1; }");
    CHECK(syntax.code == 1);
    CHECK(syntax.json()["error"] == "SyntaxError");

    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"invariants"}).code == 2);
    CHECK(run({"invariants", "/no/such/file"}).code == 2);
    CHECK(run({"family", "--type", "Q", "--j", "0"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("PD codes pipe into alexander and switch") {
    Run pd = run({"smooth", "-"}, kTrefoil);
    REQUIRE(pd.code == 0);
    Run a = run({"alexander", "-"}, pd.out);
    REQUIRE(a.code == 0);
    CHECK(a.json()["alexander"] == "t^-1 - 1 + t");
    CHECK(a.json()["degree"] == 1);
    for (const char* m : {"bareiss", "modular"}) CHECK(run({"alexander", "-", "--method", m}, pd.out).out == a.out);

    Run sw = run({"switch", "-", "--label", "x0"}, pd.out);
    REQUIRE(sw.code == 0);
    CHECK(run({"alexander", "-"}, sw.out).json()["alexander"] == "1");
    Run unknown = run({"switch", "-", "--label", "zz"}, pd.out);
    CHECK(unknown.code == 1);
    CHECK(unknown.json()["error"] == "UnknownLabel");
}

TEST_CASE("clasp switch through the CLI") {
    Run fam = run({"family", "--type", "R", "--j", "2"});
    REQUIRE(fam.code == 0);
    Run sw = run({"switch", "-", "--clasp"}, fam.out);
    REQUIRE(sw.code == 0);
    CHECK(run({"alexander", "-"}, sw.out).json()["alexander"] == "1");
    Run none = run({"switch", "-", "--clasp"}, run({"family", "--type", "identity"}).out);
    CHECK(none.code == 1);
    CHECK(none.json()["error"] == "NoTaggedClasp");
}

TEST_CASE("bounds and genus-bound") {
    Run b = run({"bounds", "--tb", "0", "--rot", "3"});
    REQUIRE(b.code == 0);
    CHECK(b.json()["tau_min"] == 2);
    Run g = run({"genus-bound", data("trefoil.front")});
    REQUIRE(g.code == 0);
    CHECK(g.json()["seifert_genus_upper"] == 1);
}

TEST_CASE("selftest honours the seed") {
    setenv("LEGCALC_SEED", "1234", 1);
    Run a = run({"selftest", "--count", "20"});
    Run b = run({"selftest", "--count", "20"});
    unsetenv("LEGCALC_SEED");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.json()["seed"] == 1234);
    CHECK(a.json()["failures"] == 0);
}
