#pragma once

#include "legcalc/front.hpp"

#include <string>
#include <utility>
#include <vector>

namespace legcalc {

// A front in the solid torus: the word starts and ends with `seams` strands,
// whose right ends are glued to their left ends.
class PatternFront {
public:
    // Checks the word and that `orient` agrees with the traversal.
    static PatternFront make(int seams, std::vector<int> orient, std::vector<MorseEvent> events,
                             std::vector<Tag> tags = {}, std::string name = {});
    // Reads the seam orientation off the traversal that leaves seam strand 1
    // in direction `first`.
    static PatternFront derive(int seams, int first, std::vector<MorseEvent> events, std::vector<Tag> tags = {},
                               std::string name = {});

    // As derive, but seeded at the segment found at height `probe_height` just
    // before event `probe_time`.
    static PatternFront seeded(int seams, std::vector<MorseEvent> events, std::vector<Tag> tags, int probe_time,
                               int probe_height, int dir, std::string name = {});

    int seams() const { return seams_; }
    const std::vector<int>& seam_orient() const { return orient_; }
    const std::string& name() const { return name_; }
    const std::vector<MorseEvent>& events() const { return w_.events; }
    const std::vector<Tag>& tags() const { return w_.tags; }
    const Layout& layout() const { return *w_.layout; }
    const Oriented& oriented() const { return w_; }
    const std::vector<std::int8_t>& dirs() const { return w_.dirs; }
    const std::vector<std::int8_t>& signs() const { return w_.signs; }

    int writhe() const { return w_.writhe; }
    int crossings() const { return w_.crossings(); }
    int cusps() const { return w_.cusps(); }
    int tb() const { return w_.tb(); }
    int rot() const { return w_.rot(); }
    int winding() const;

    PatternFront renamed(std::string name) const;

private:
    Oriented w_;
    int seams_ = 0;
    std::vector<int> orient_;
    std::string name_;
};

int winding_number(const PatternFront& p);
std::pair<int, int> pattern_invariants(const PatternFront& p);

PatternFront gen_identity();
PatternFront gen_P(char variant);
PatternFront gen_Q(int j);
PatternFront gen_R(int j);

// Label of the designated clasp crossing; throws NoTaggedClasp.
std::string clasp_switch_target(const PatternFront& p);
int clasp_count(const PatternFront& p);

PatternFront stabilize(const PatternFront& p, int sign, int edge);
// Same word with every seam orientation flipped.
PatternFront reverse(const PatternFront& p);

} // namespace legcalc
