#pragma once

#include "legcalc/front.hpp"
#include "legcalc/laurent.hpp"
#include "legcalc/pattern.hpp"

#include <optional>
#include <string>
#include <vector>

namespace legcalc {

struct SBBounds {
    int s_min = 0;
    int tau_min = 0;
    int g4ex_min = 0;
    int g4_min = 0;
    friend bool operator==(const SBBounds&, const SBBounds&) = default;
};

SBBounds sb_bounds(int tb, int rot);

struct OperatorVerdict {
    bool pass = false;
    int tb = 0, rot = 0, w = 0;
    bool tb_positive = false;
    bool tb_rot_at_least_two = false;
    bool winding_one = false;
    LaurentPoly closure_alexander;
    bool unknotted_closure = false; // evidence only: closure Alexander polynomial is 1
    std::vector<std::string> failing;
};

OperatorVerdict operator_hypothesis(const PatternFront& p);

enum class GenusStatus { Certified, Unknown };

struct CertifiedGenus {
    GenusStatus status = GenusStatus::Unknown;
    int g = 0, g4 = 0, g4ex = 0, tau = 0; // valid when Certified
    int lower = 0, upper = 0;             // slice-Bennequin and Seifert bounds
    bool certified() const { return status == GenusStatus::Certified; }
};

CertifiedGenus certify_genus(const FrontDiagram& k);

enum class LSpaceVerdict { NotLSpaceKnot, Inconclusive };

LSpaceVerdict lspace_obstruction(const LaurentPoly& delta, int tau);
std::string lspace_name(LSpaceVerdict v);

struct LedgerRow {
    int i = 0;
    int tb = 0, rot = 0; // of the constructed tb = 0 iterate front
    int tau = 0, g4ex = 0, g4 = 0, g = 0;
    int sb_tau = 0; // slice-Bennequin bound of that front, the second route
    LaurentPoly alexander;
    LSpaceVerdict lspace = LSpaceVerdict::Inconclusive;
};

// Step j of the family a pattern belongs to: the generator parameter for the
// named families, else (tb + |rot|) / 2.
int family_step(const PatternFront& p);

// Throws Error(HypothesisFailed) naming the failing clause.
std::vector<LedgerRow> ledger(const PatternFront& p, int j, const FrontDiagram& k, int n);

struct Certificate {
    std::string pattern_name;
    int j = 0;
    OperatorVerdict op;
    CertifiedGenus knot;
    int knot_tb = 0, knot_rot = 0;
    LaurentPoly knot_alexander;
    std::optional<ErrorCode> knot_failure; // NonSliceRequired, HypothesisFailed
    std::optional<std::string> ledger_failure;
    std::vector<LedgerRow> rows;
    std::vector<std::string> assumptions;
    std::optional<std::string> conclusion;
};

Certificate certificate(const PatternFront& p, const FrontDiagram& k, int n);

} // namespace legcalc
