#pragma once

#include "legcalc/front.hpp"
#include "legcalc/laurent.hpp"
#include "legcalc/pattern.hpp"

#include <string>
#include <vector>

namespace legcalc {

// Edge labels 1..2c name the pieces of the knot between consecutive crossing
// passes, numbered along the orientation.
struct PDCrossing {
    int under_in = 0, under_out = 0;
    int over_in = 0, over_out = 0;
    int sign = 1;
    std::string tag;
    friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

struct PDCode {
    std::vector<PDCrossing> crossings;
    std::vector<int> orientation; // edge labels in traversal order
    int size() const { return static_cast<int>(crossings.size()); }
    friend bool operator==(const PDCode&, const PDCode&) = default;
};

PDCode smooth(const FrontDiagram& f);
// P(U): the annulus closed up by planar arcs, no extra twist.
PDCode closure(const PatternFront& p);
// From any single-component oriented word, starting at segment `start`.
PDCode pd_from_word(const Oriented& w, int start);

// Throws BadPDCode when labels, orientation or component count are off.
void validate_pd(const PDCode& d);

int writhe(const PDCode& d);
int wirtinger_arcs(const PDCode& d);
int seifert_circles(const PDCode& d);
int seifert_genus_upper(const PDCode& d);

// Throws UnknownLabel, and AlreadyNegative when require_positive is set.
PDCode crossing_switch(const PDCode& d, const std::string& label, bool require_positive = false);

enum class DetMethod { Auto, Bareiss, Modular };

// Rows of a presentation matrix with entries a + b t.
struct LinEntry {
    int col;
    long a, b;
};
using LinMatrix = std::vector<std::vector<LinEntry>>;

// Wirtinger/Fox matrix with the highest arc's column and relation removed.
LinMatrix alexander_matrix(const PDCode& d);
LaurentPoly determinant(const LinMatrix& m, DetMethod method = DetMethod::Auto);

// Largest matrix the Auto method sends to exact Bareiss elimination.
inline constexpr int kBareissLimit = 24;

LaurentPoly alexander(const PDCode& d, DetMethod method = DetMethod::Auto);
LaurentPoly satellite_alexander(const LaurentPoly& dp, const LaurentPoly& dk, int w);

} // namespace legcalc
