#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace legcalc {

enum class EventKind : std::uint8_t { LeftCusp, RightCusp, Crossing };

struct MorseEvent {
    EventKind kind;
    int height;
    friend bool operator==(const MorseEvent&, const MorseEvent&) = default;
};

inline MorseEvent L(int h) { return {EventKind::LeftCusp, h}; }
inline MorseEvent R(int h) { return {EventKind::RightCusp, h}; }
inline MorseEvent X(int h) { return {EventKind::Crossing, h}; }

std::string to_string(const MorseEvent& e);
std::string to_string(const std::vector<MorseEvent>& events);

// Provenance of one event. Cusps carry an empty tag.
struct Tag {
    std::string label;
    std::string clasp;   // clasp id for designated clasp crossings
    bool target = false; // the crossing whose switch realizes the family step
    friend bool operator==(const Tag&, const Tag&) = default;
};

enum class ErrorCode {
    HeightOutOfRange,
    OpenFront,
    MultiComponent,
    OrientMismatch,
    BadLocation,
    BadParameter,
    NoTaggedClasp,
    TwistedInputRejected,
    UnknownLabel,
    AlreadyNegative,
    BadWinding,
    BadPDCode,
    HypothesisFailed,
    NonSliceRequired,
    SyntaxError,
    ValidationError,
    DuplicateName,
    Internal,
};

std::string_view error_name(ErrorCode code);

struct Violation {
    ErrorCode code;
    long index = -1; // event index for HeightOutOfRange
    long count = 0;  // strand or component count
    std::string message;
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::vector<Violation> violations = {});
    ErrorCode code() const { return code_; }
    const std::vector<Violation>& violations() const { return violations_; }

private:
    ErrorCode code_;
    std::vector<Violation> violations_;
};

// Segments are the strand pieces between consecutive events. A segment end is
// encoded as 2*segment + side with side 0 for the left end and 1 for the right.
struct CuspRec {
    int event;
    bool left;
    int lower, upper;
};

struct CrossingRec {
    int event;
    int u, d;   // incoming at heights h (ascending) and h+1 (descending)
    int u2, d2; // continuations: u2 leaves at h+1, d2 leaves at h
};

struct Layout {
    int seams = 0;
    int max_strands = 0;
    std::vector<int> link;
    std::vector<int> birth_event;  // -1 for the initial seam segments
    std::vector<int> birth_height; // height just after birth
    std::vector<CuspRec> cusps;
    std::vector<CrossingRec> crossings;
    std::vector<int> initial, terminal;
    int probe = -1; // segment at a requested (time, height), see build_layout

    int segments() const { return static_cast<int>(birth_event.size()); }
};

// Builds segments for a word that starts and ends with `seams` strands.
// Violations are appended; the layout is only meaningful when none were added.
// If probe_time >= 0, records the segment at height probe_height just before
// event probe_time (probe_time == events.size() means after the last event).
Layout build_layout(int seams, const std::vector<MorseEvent>& events, std::vector<Violation>& errors,
                    int probe_time = -1, int probe_height = 0);

int count_components(const Layout& lay);

// Direction (+1 rightward, -1 leftward) of every segment, following the curve
// from `start` in direction `dir`. Segments off that component stay 0.
std::vector<std::int8_t> orient_from(const Layout& lay, int start, int dir);

// Oriented word data shared by knots and patterns.
struct Oriented {
    std::vector<MorseEvent> events;
    std::vector<Tag> tags; // one per event
    std::shared_ptr<const Layout> layout;
    std::vector<std::int8_t> dirs;
    std::vector<std::int8_t> signs; // per crossing record
    int writhe = 0;
    int left_cusps = 0;
    int right_cusps = 0;
    int up_cusps = 0;
    int down_cusps = 0;

    int crossings() const { return static_cast<int>(signs.size()); }
    int cusps() const { return left_cusps + right_cusps; }
    int tb() const { return writhe - right_cusps; }
    int rot() const { return (down_cusps - up_cusps) / 2; }
};

// Fills dirs, signs and cusp counts from a built layout and a seed.
void orient_word(Oriented& w, int start, int dir);

// Default crossing labels "x0", "x1", ... by crossing ordinal.
std::vector<Tag> default_tags(const std::vector<MorseEvent>& events);

class FrontDiagram {
public:
    // Throws Error(ValidationError) carrying the violations.
    static FrontDiagram make(std::vector<MorseEvent> events, std::vector<Tag> tags = {},
                             bool reversed = false);
    // Orientation fixed by the direction `dir` of the segment found at height
    // `probe_height` just before event `probe_time`.
    static FrontDiagram seeded(std::vector<MorseEvent> events, std::vector<Tag> tags, int probe_time,
                               int probe_height, int dir);

    const std::vector<MorseEvent>& events() const { return w_.events; }
    const std::vector<Tag>& tags() const { return w_.tags; }
    bool reversed() const { return reversed_; }
    const Layout& layout() const { return *w_.layout; }
    const Oriented& oriented() const { return w_; }
    const std::vector<std::int8_t>& dirs() const { return w_.dirs; }
    const std::vector<std::int8_t>& signs() const { return w_.signs; }

    int writhe() const { return w_.writhe; }
    int crossings() const { return w_.crossings(); }
    int cusps() const { return w_.cusps(); }
    int right_cusps() const { return w_.right_cusps; }
    int tb() const { return w_.tb(); }
    int rot() const { return w_.rot(); }
    // Segment where the default traversal starts.
    int start_segment() const;

private:
    Oriented w_;
    bool reversed_ = false;
    friend struct FrontAccess;
};

struct FrontCheck {
    std::optional<FrontDiagram> front;
    std::vector<Violation> errors;
    bool ok() const { return front.has_value(); }
};

FrontCheck validate_front(const std::vector<MorseEvent>& events);

int thurston_bennequin(const FrontDiagram& f);
int rotation(const FrontDiagram& f);
// Inserts a zigzag on segment `edge`; rot changes by `sign`, tb drops by 1.
FrontDiagram stabilize(const FrontDiagram& f, int sign, int edge);
FrontDiagram reverse(const FrontDiagram& f);

// Zigzag insertion shared with patterns: returns the new word. `dir` is the
// direction of the edge under the current orientation.
struct Insertion {
    std::vector<MorseEvent> events;
    std::vector<Tag> tags;
    int shift_after; // events with index > shift_after moved by 2
};
Insertion insert_zigzag(const Oriented& w, int edge, int sign);

} // namespace legcalc
