#pragma once

#include "legcalc/front.hpp"
#include "legcalc/laurent.hpp"
#include "legcalc/topo.hpp"

#include <vector>

// Reference implementations that share no code with the library beyond the
// MorseEvent and PDCode value types.
namespace oracle {

struct FrontData {
    int writhe = 0, tb = 0, rot = 0;
    int left = 0, right = 0, up = 0, down = 0;
    int components_ok = 0; // 1 when one walk covers every strand piece
};

// Walks the front slice by slice. Knots start on the upper branch of the first
// left cusp going right (left if reversed); patterns start on seam strand 1 in
// direction first_dir.
FrontData trace_knot(const std::vector<legcalc::MorseEvent>& events, bool reversed = false);
FrontData trace_pattern(int seams, int first_dir, const std::vector<legcalc::MorseEvent>& events);

// Determinant of the Wirtinger matrix of d at t = x with the first arc's column
// and the first crossing's row removed, in exact rationals.
boost::multiprecision::cpp_rational wirtinger_minor_at(const legcalc::PDCode& d, long x);

// True when value == +-x^k * poly(x) for some integer k.
bool agrees_up_to_unit(const boost::multiprecision::cpp_rational& value, const legcalc::LaurentPoly& poly, long x);

boost::multiprecision::cpp_rational evaluate(const legcalc::LaurentPoly& p, long x);

} // namespace oracle
