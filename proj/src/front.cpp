#include "legcalc/front.hpp"

#include <algorithm>
#include <sstream>

namespace legcalc {

std::string to_string(const MorseEvent& e) {
    char k = e.kind == EventKind::LeftCusp ? 'L' : e.kind == EventKind::RightCusp ? 'R' : 'X';
    return k + std::to_string(e.height);
}

std::string to_string(const std::vector<MorseEvent>& events) {
    std::string out;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (i) out += ' ';
        out += to_string(events[i]);
    }
    return out;
}

std::string_view error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::HeightOutOfRange: return "HeightOutOfRange";
    case ErrorCode::OpenFront: return "OpenFront";
    case ErrorCode::MultiComponent: return "MultiComponent";
    case ErrorCode::OrientMismatch: return "OrientMismatch";
    case ErrorCode::BadLocation: return "BadLocation";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NoTaggedClasp: return "NoTaggedClasp";
    case ErrorCode::TwistedInputRejected: return "TwistedInputRejected";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::AlreadyNegative: return "AlreadyNegative";
    case ErrorCode::BadWinding: return "BadWinding";
    case ErrorCode::BadPDCode: return "BadPDCode";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NonSliceRequired: return "NonSliceRequired";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<Violation> violations)
    : std::runtime_error(message), code_(code), violations_(std::move(violations)) {}

namespace {

std::string describe(const std::vector<Violation>& vs) {
    std::string out;
    for (const auto& v : vs) {
        if (!out.empty()) out += "; ";
        out += v.message;
    }
    return out;
}

inline void step(const Layout& lay, int& s, int& d) {
    int nb = lay.link[2 * s + (d > 0 ? 1 : 0)];
    s = nb >> 1;
    d = (nb & 1) ? -1 : 1;
}

} // namespace

Layout build_layout(int seams, const std::vector<MorseEvent>& events, std::vector<Violation>& errors,
                    int probe_time, int probe_height) {
    Layout lay;
    lay.seams = seams;
    std::size_t guess = 2 * events.size() + static_cast<std::size_t>(seams);
    lay.birth_event.reserve(guess);
    lay.birth_height.reserve(guess);
    lay.link.reserve(2 * guess);

    auto fresh = [&](int ev, int h) {
        int id = lay.segments();
        lay.birth_event.push_back(ev);
        lay.birth_height.push_back(h);
        lay.link.push_back(-1);
        lay.link.push_back(-1);
        return id;
    };
    auto join = [&](int a, int b) {
        lay.link[a] = b;
        lay.link[b] = a;
    };

    std::vector<int> cur;
    for (int k = 0; k < seams; ++k) cur.push_back(fresh(-1, k + 1));
    lay.initial = cur;
    lay.max_strands = seams;
    std::size_t before = errors.size();

    auto probe = [&](int time) {
        if (time == probe_time && probe_height >= 1 && probe_height <= static_cast<int>(cur.size()))
            lay.probe = cur[probe_height - 1];
    };

    for (int idx = 0; idx < static_cast<int>(events.size()); ++idx) {
        probe(idx);
        const MorseEvent& e = events[idx];
        int s = static_cast<int>(cur.size());
        int h = e.height;
        int hi = e.kind == EventKind::LeftCusp ? s + 1 : s - 1;
        if (h < 1 || h > hi) {
            std::ostringstream msg;
            msg << "HeightOutOfRange at event " << idx << " (" << to_string(e) << " with " << s << " strands)";
            errors.push_back({ErrorCode::HeightOutOfRange, idx, s, msg.str()});
            continue;
        }
        if (e.kind == EventKind::LeftCusp) {
            int a = fresh(idx, h), b = fresh(idx, h + 1);
            join(2 * a, 2 * b);
            cur.insert(cur.begin() + (h - 1), {a, b});
            lay.cusps.push_back({idx, true, a, b});
        } else if (e.kind == EventKind::RightCusp) {
            int a = cur[h - 1], b = cur[h];
            join(2 * a + 1, 2 * b + 1);
            cur.erase(cur.begin() + (h - 1), cur.begin() + (h + 1));
            lay.cusps.push_back({idx, false, a, b});
        } else {
            int u = cur[h - 1], d = cur[h];
            int u2 = fresh(idx, h + 1), d2 = fresh(idx, h);
            join(2 * u + 1, 2 * u2);
            join(2 * d + 1, 2 * d2);
            cur[h - 1] = d2;
            cur[h] = u2;
            lay.crossings.push_back({idx, u, d, u2, d2});
        }
        lay.max_strands = std::max(lay.max_strands, static_cast<int>(cur.size()));
    }
    probe(static_cast<int>(events.size()));

    if (errors.size() != before) return lay;
    if (static_cast<int>(cur.size()) != seams) {
        std::ostringstream msg;
        msg << "OpenFront: " << cur.size() << " strands at the end, expected " << seams;
        errors.push_back({ErrorCode::OpenFront, -1, static_cast<long>(cur.size()), msg.str()});
        return lay;
    }
    lay.terminal = cur;
    for (int k = 0; k < seams; ++k) join(2 * lay.terminal[k] + 1, 2 * lay.initial[k]);
    return lay;
}

int count_components(const Layout& lay) {
    int n = lay.segments();
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (int s0 = 0; s0 < n; ++s0) {
        if (seen[s0]) continue;
        ++comps;
        int s = s0, d = 1;
        while (!seen[s]) {
            seen[s] = 1;
            step(lay, s, d);
        }
    }
    return comps;
}

std::vector<std::int8_t> orient_from(const Layout& lay, int start, int dir) {
    std::vector<std::int8_t> dirs(lay.segments(), 0);
    int s = start, d = dir;
    while (dirs[s] == 0) {
        dirs[s] = static_cast<std::int8_t>(d);
        step(lay, s, d);
    }
    return dirs;
}

void orient_word(Oriented& w, int start, int dir) {
    const Layout& lay = *w.layout;
    w.dirs = orient_from(lay, start, dir);
    w.signs.assign(lay.crossings.size(), 0);
    w.writhe = 0;
    for (std::size_t i = 0; i < lay.crossings.size(); ++i) {
        const auto& c = lay.crossings[i];
        int s = w.dirs[c.u] == w.dirs[c.d] ? 1 : -1;
        w.signs[i] = static_cast<std::int8_t>(s);
        w.writhe += s;
    }
    w.left_cusps = w.right_cusps = w.up_cusps = w.down_cusps = 0;
    for (const auto& c : lay.cusps) {
        bool up;
        if (c.left) {
            ++w.left_cusps;
            up = w.dirs[c.upper] > 0;
        } else {
            ++w.right_cusps;
            up = w.dirs[c.lower] > 0;
        }
        (up ? w.up_cusps : w.down_cusps) += 1;
    }
}

std::vector<Tag> default_tags(const std::vector<MorseEvent>& events) {
    std::vector<Tag> tags(events.size());
    int k = 0;
    for (std::size_t i = 0; i < events.size(); ++i)
        if (events[i].kind == EventKind::Crossing) tags[i].label = "x" + std::to_string(k++);
    return tags;
}

namespace {

std::shared_ptr<Layout> knot_layout(const std::vector<MorseEvent>& events, int probe_time, int probe_height) {
    std::vector<Violation> errors;
    if (events.empty()) {
        errors.push_back({ErrorCode::OpenFront, -1, 0, "OpenFront: empty front (0 components)"});
        throw Error(ErrorCode::ValidationError, describe(errors), errors);
    }
    auto lay = std::make_shared<Layout>(build_layout(0, events, errors, probe_time, probe_height));
    if (!errors.empty()) throw Error(ErrorCode::ValidationError, describe(errors), errors);
    int comps = count_components(*lay);
    if (comps != 1) {
        errors.push_back({ErrorCode::MultiComponent, -1, comps,
                          "MultiComponent: " + std::to_string(comps) + " components"});
        throw Error(ErrorCode::ValidationError, describe(errors), errors);
    }
    return lay;
}

} // namespace

struct FrontAccess {
    static FrontDiagram build(std::vector<MorseEvent> events, std::vector<Tag> tags, std::shared_ptr<Layout> lay,
                              int start, int dir) {
        if (tags.empty()) tags = default_tags(events);
        if (tags.size() != events.size())
            throw Error(ErrorCode::BadParameter, "tag count differs from event count");
        FrontDiagram f;
        f.w_.events = std::move(events);
        f.w_.tags = std::move(tags);
        f.w_.layout = std::move(lay);
        orient_word(f.w_, start, dir);
        f.reversed_ = f.w_.dirs[f.start_segment()] < 0;
        return f;
    }
};

FrontDiagram FrontDiagram::make(std::vector<MorseEvent> events, std::vector<Tag> tags, bool reversed) {
    auto lay = knot_layout(events, -1, 0);
    int start = lay->cusps.front().upper;
    return FrontAccess::build(std::move(events), std::move(tags), std::move(lay), start, reversed ? -1 : 1);
}

FrontDiagram FrontDiagram::seeded(std::vector<MorseEvent> events, std::vector<Tag> tags, int probe_time,
                                  int probe_height, int dir) {
    auto lay = knot_layout(events, probe_time, probe_height);
    if (lay->probe < 0) throw Error(ErrorCode::Internal, "seed position outside the front");
    int start = lay->probe;
    return FrontAccess::build(std::move(events), std::move(tags), std::move(lay), start, dir);
}

int FrontDiagram::start_segment() const { return w_.layout->cusps.front().upper; }

FrontCheck validate_front(const std::vector<MorseEvent>& events) {
    FrontCheck out;
    try {
        out.front = FrontDiagram::make(events);
    } catch (const Error& e) {
        out.errors = e.violations();
        if (out.errors.empty()) out.errors.push_back({e.code(), -1, 0, e.what()});
    }
    return out;
}

int thurston_bennequin(const FrontDiagram& f) { return f.tb(); }

int rotation(const FrontDiagram& f) { return f.rot(); }

Insertion insert_zigzag(const Oriented& w, int edge, int sign) {
    const Layout& lay = *w.layout;
    if (edge < 0 || edge >= lay.segments())
        throw Error(ErrorCode::BadLocation, "BadLocation: no edge " + std::to_string(edge));
    if (sign != 1 && sign != -1) throw Error(ErrorCode::BadParameter, "stabilization sign must be +1 or -1");
    int e = lay.birth_event[edge];
    int h = lay.birth_height[edge];
    // On a rightward edge L(h) R(h+1) makes two down cusps; the mirror makes two up cusps.
    bool low_first = (sign * w.dirs[edge]) > 0;
    std::vector<MorseEvent> zig = low_first ? std::vector<MorseEvent>{L(h), R(h + 1)}
                                            : std::vector<MorseEvent>{L(h + 1), R(h)};
    Insertion ins;
    ins.events = w.events;
    ins.tags = w.tags;
    ins.events.insert(ins.events.begin() + (e + 1), zig.begin(), zig.end());
    ins.tags.insert(ins.tags.begin() + (e + 1), 2, Tag{});
    ins.shift_after = e;
    return ins;
}

FrontDiagram stabilize(const FrontDiagram& f, int sign, int edge) {
    Insertion ins = insert_zigzag(f.oriented(), edge, sign);
    // The first event is always the first left cusp and insertion happens after
    // an event, so the default start is unchanged.
    return FrontDiagram::make(std::move(ins.events), std::move(ins.tags), f.reversed());
}

FrontDiagram reverse(const FrontDiagram& f) { return FrontDiagram::make(f.events(), f.tags(), !f.reversed()); }

} // namespace legcalc
