#pragma once

#include "legcalc/front.hpp"
#include "legcalc/laurent.hpp"

namespace fixtures {

using namespace legcalc;

inline std::vector<MorseEvent> trefoil_word() { return {L(1), L(3), X(2), X(2), X(2), R(1), R(1)}; }
inline FrontDiagram unknot() { return FrontDiagram::make({L(1), R(1)}); }
inline FrontDiagram trefoil() { return FrontDiagram::make(trefoil_word()); }
inline FrontDiagram stabilized_trefoil() {
    FrontDiagram t = trefoil();
    return stabilize(t, 1, t.start_segment());
}
inline LaurentPoly trefoil_alexander() { return LaurentPoly::parse("t^-1 - 1 + t"); }

} // namespace fixtures
