#pragma once

#include "legcalc/front.hpp"
#include "legcalc/pattern.hpp"

#include <string>
#include <vector>

namespace legcalc {

template <class D>
struct SatelliteResult {
    D diagram;
    int twist = 0; // tb of the companion at construction time
    const std::vector<Tag>& provenance() const { return diagram.tags(); }
};

using KnotSatellite = SatelliteResult<FrontDiagram>;
using PatternSatellite = SatelliteResult<PatternFront>;

// n vertical parallels of a front, open at the cut: the pattern word is
// inserted before events[cut], acting on heights offset+1 .. offset+n.
struct CopyBundle {
    int seams = 0;
    int copies = 0;
    std::vector<MorseEvent> events;
    std::vector<Tag> tags;
    int cut = -1;
    int offset = 0;
};

CopyBundle n_copy(const FrontDiagram& f, int n);
// Pattern companions need a left cusp; compose adds a kink when there is none.
CopyBundle n_copy(const PatternFront& q, int n);

KnotSatellite satellite(const PatternFront& p, const FrontDiagram& k, bool allow_twist);
PatternSatellite compose(const PatternFront& p, const PatternFront& q);
PatternSatellite iterate(const PatternFront& p, int i);

// Legendrian Reidemeister I kink [L2, X1, R2] on seam strand 1; keeps tb and rot.
PatternFront with_left_cusp(const PatternFront& q);

} // namespace legcalc
