#include "legcalc/bounds.hpp"

#include "legcalc/satellite.hpp"
#include "legcalc/topo.hpp"

#include <cstdlib>

namespace legcalc {

namespace {

int ceil_half(int a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

[[noreturn]] void hypothesis_failed(const std::string& clause) {
    throw Error(ErrorCode::HypothesisFailed, "HypothesisFailed: " + clause);
}

// Brings tb down to 0 by stabilizations of sign `sign`; tb must be >= 0.
FrontDiagram zero_tb(FrontDiagram k, int sign) {
    while (k.tb() > 0) k = stabilize(k, sign, k.start_segment());
    return k;
}

PatternFront zero_tb(PatternFront p, int sign) {
    while (p.tb() > 0) p = stabilize(p, sign, p.layout().initial[0]);
    return p;
}

} // namespace

SBBounds sb_bounds(int tb, int rot) {
    int s = tb + std::abs(rot) + 1;
    int half = ceil_half(s);
    return {s, half, half, half};
}

OperatorVerdict operator_hypothesis(const PatternFront& p) {
    OperatorVerdict v;
    v.tb = p.tb();
    v.rot = p.rot();
    v.w = p.winding();
    v.tb_positive = v.tb > 0;
    v.tb_rot_at_least_two = v.tb + v.rot >= 2;
    v.winding_one = v.w == 1;
    v.closure_alexander = alexander(closure(p));
    v.unknotted_closure = v.closure_alexander == LaurentPoly(1);
    if (!v.tb_positive) v.failing.push_back("tb(P) > 0");
    if (!v.tb_rot_at_least_two) v.failing.push_back("tb(P) + rot(P) >= 2");
    v.pass = v.failing.empty();
    return v;
}

CertifiedGenus certify_genus(const FrontDiagram& k) {
    CertifiedGenus c;
    c.upper = seifert_genus_upper(smooth(k));
    c.lower = sb_bounds(k.tb(), k.rot()).g4_min;
    if (c.lower == c.upper) {
        c.status = GenusStatus::Certified;
        c.g = c.g4 = c.g4ex = c.tau = c.upper;
    }
    return c;
}

LSpaceVerdict lspace_obstruction(const LaurentPoly& delta, int tau) {
    return tau != delta.degree() ? LSpaceVerdict::NotLSpaceKnot : LSpaceVerdict::Inconclusive;
}

std::string lspace_name(LSpaceVerdict v) { return v == LSpaceVerdict::NotLSpaceKnot ? "not-lspace" : "inconclusive"; }

int family_step(const PatternFront& p) {
    const std::string& n = p.name();
    if (n == "P_a" || n == "P_b") return 1;
    if (n == "identity") return 0;
    if (n.size() >= 2 && (n[0] == 'Q' || n[0] == 'R') && n.find_first_not_of("0123456789", 1) == std::string::npos)
        return std::stoi(n.substr(1));
    return (p.tb() + std::abs(p.rot())) / 2;
}

std::vector<LedgerRow> ledger(const PatternFront& p, int j, const FrontDiagram& k, int n) {
    if (n < 0) throw Error(ErrorCode::BadParameter, "BadParameter: ledger needs N >= 0");
    if (j < 0) throw Error(ErrorCode::BadParameter, "BadParameter: family step must be >= 0");
    OperatorVerdict op = operator_hypothesis(p);
    if (j > 0 && !op.pass) hypothesis_failed(op.failing.front());
    if (!op.winding_one) hypothesis_failed("w(P) = 1");
    if (p.tb() < 0) hypothesis_failed("tb(P) >= 0 for an untwisted stabilized form");
    CertifiedGenus kg = certify_genus(k);
    if (!kg.certified())
        hypothesis_failed("genus of K certified (bounds [" + std::to_string(kg.lower) + ", " +
                          std::to_string(kg.upper) + "] differ)");
    if (k.tb() < 0) hypothesis_failed("tb(K) >= 0 for an untwisted stabilized form");

    int sign = p.rot() >= 0 ? 1 : -1;
    PatternFront ps = zero_tb(p, sign);
    FrontDiagram ks = zero_tb(k.rot() * sign < 0 ? reverse(k) : k, sign);
    LaurentPoly dp = op.closure_alexander;
    LaurentPoly dk = alexander(smooth(k));

    std::vector<LedgerRow> rows;
    PatternFront acc = gen_identity();
    LaurentPoly delta = dk;
    int prev_sb = 0;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) {
            acc = compose(acc, ps).diagram;
            delta = satellite_alexander(dp, delta, 1);
        }
        FrontDiagram f = satellite(acc, ks, false).diagram;
        LedgerRow r;
        r.i = i;
        r.tb = f.tb();
        r.rot = f.rot();
        r.sb_tau = sb_bounds(r.tb, r.rot).tau_min;
        r.tau = r.g4ex = r.g4 = r.g = kg.g + i * j;
        r.alexander = delta;
        r.lspace = lspace_obstruction(delta, r.tau);
        if (r.sb_tau != r.tau)
            hypothesis_failed("row " + std::to_string(i) + ": slice-Bennequin bound " + std::to_string(r.sb_tau) +
                              " of the constructed front differs from g(K) + i*j = " + std::to_string(r.tau));
        if (i > 0 && r.sb_tau < prev_sb) throw Error(ErrorCode::Internal, "slice-Bennequin chain decreased");
        prev_sb = r.sb_tau;
        rows.push_back(std::move(r));
    }
    return rows;
}

Certificate certificate(const PatternFront& p, const FrontDiagram& k, int n) {
    Certificate c;
    c.pattern_name = p.name();
    c.j = family_step(p);
    c.op = operator_hypothesis(p);
    c.knot = certify_genus(k);
    c.knot_tb = k.tb();
    c.knot_rot = k.rot();
    c.knot_alexander = alexander(smooth(k));
    c.assumptions = {
        "injectivity: a strong winding number one pattern with tb(P) > 0 and tb(P) + rot(P) >= 2 acts injectively "
        "on C and C^ex (Theorem 5.1 of [CDR14])",
        "unknotted closure: P(U) is the unknot; evidenced here only by Alexander(P(U)) = 1",
    };
    if (!c.knot.certified())
        c.knot_failure = ErrorCode::HypothesisFailed;
    else if (c.knot.g < 1)
        c.knot_failure = ErrorCode::NonSliceRequired;

    bool ok = c.op.pass && c.op.winding_one && c.op.unknotted_closure && !c.knot_failure && c.j >= 1;
    if (ok) {
        try {
            c.rows = ledger(p, c.j, k, n);
        } catch (const Error& e) {
            c.ledger_failure = e.what();
            ok = false;
        }
    }
    if (ok)
        c.conclusion = "P^i(K) for 0 <= i <= " + std::to_string(n) +
                       " are pairwise distinct in C and C^ex: tau(P^i(K)) = " + std::to_string(c.knot.g) + " + " +
                       (c.j == 1 ? std::string() : std::to_string(c.j)) + "i";
    return c;
}

} // namespace legcalc
