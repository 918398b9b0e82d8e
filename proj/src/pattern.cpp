#include "legcalc/pattern.hpp"

#include <numeric>
#include <set>

namespace legcalc {

namespace {

std::string joined(const std::vector<Violation>& vs) {
    std::string out;
    for (const auto& v : vs) out += (out.empty() ? "" : "; ") + v.message;
    return out;
}

Oriented build(int seams, std::vector<MorseEvent> events, std::vector<Tag> tags, int probe_time = -1,
               int probe_height = 0) {
    std::vector<Violation> errors;
    if (seams < 1) throw Error(ErrorCode::BadParameter, "a pattern needs at least one seam strand");
    auto lay = std::make_shared<Layout>(build_layout(seams, events, errors, probe_time, probe_height));
    if (!errors.empty()) throw Error(ErrorCode::ValidationError, joined(errors), errors);
    int comps = count_components(*lay);
    if (comps != 1) {
        errors.push_back({ErrorCode::MultiComponent, -1, comps,
                          "MultiComponent: " + std::to_string(comps) + " components"});
        throw Error(ErrorCode::ValidationError, joined(errors), errors);
    }
    if (tags.empty()) tags = default_tags(events);
    if (tags.size() != events.size()) throw Error(ErrorCode::BadParameter, "tag count differs from event count");
    Oriented w;
    w.events = std::move(events);
    w.tags = std::move(tags);
    w.layout = std::move(lay);
    return w;
}

} // namespace

PatternFront PatternFront::make(int seams, std::vector<int> orient, std::vector<MorseEvent> events,
                                std::vector<Tag> tags, std::string name) {
    if (static_cast<int>(orient.size()) != seams)
        throw Error(ErrorCode::BadParameter, "orient has " + std::to_string(orient.size()) + " entries for " +
                                                 std::to_string(seams) + " seam strands");
    for (int o : orient)
        if (o != 1 && o != -1) throw Error(ErrorCode::BadParameter, "seam orientations must be +1 or -1");
    PatternFront p;
    p.w_ = build(seams, std::move(events), std::move(tags));
    orient_word(p.w_, p.w_.layout->initial[0], orient[0]);
    for (int k = 0; k < seams; ++k) {
        if (p.w_.dirs[p.w_.layout->initial[k]] != orient[k]) {
            Violation v{ErrorCode::OrientMismatch, k, seams,
                        "OrientMismatch: seam strand " + std::to_string(k + 1) + " is traversed the other way"};
            throw Error(ErrorCode::ValidationError, v.message, {v});
        }
    }
    p.seams_ = seams;
    p.orient_ = std::move(orient);
    p.name_ = std::move(name);
    return p;
}

PatternFront PatternFront::derive(int seams, int first, std::vector<MorseEvent> events, std::vector<Tag> tags,
                                  std::string name) {
    PatternFront p;
    p.w_ = build(seams, std::move(events), std::move(tags));
    orient_word(p.w_, p.w_.layout->initial[0], first > 0 ? 1 : -1);
    p.seams_ = seams;
    for (int s : p.w_.layout->initial) p.orient_.push_back(p.w_.dirs[s]);
    p.name_ = std::move(name);
    return p;
}

PatternFront PatternFront::seeded(int seams, std::vector<MorseEvent> events, std::vector<Tag> tags, int probe_time,
                                  int probe_height, int dir, std::string name) {
    PatternFront p;
    p.w_ = build(seams, std::move(events), std::move(tags), probe_time, probe_height);
    if (p.w_.layout->probe < 0) throw Error(ErrorCode::Internal, "seed position outside the pattern");
    orient_word(p.w_, p.w_.layout->probe, dir);
    p.seams_ = seams;
    for (int s : p.w_.layout->initial) p.orient_.push_back(p.w_.dirs[s]);
    p.name_ = std::move(name);
    return p;
}

int PatternFront::winding() const { return std::accumulate(orient_.begin(), orient_.end(), 0); }

PatternFront PatternFront::renamed(std::string name) const {
    PatternFront p = *this;
    p.name_ = std::move(name);
    return p;
}

int winding_number(const PatternFront& p) { return p.winding(); }

std::pair<int, int> pattern_invariants(const PatternFront& p) { return {p.tb(), p.rot()}; }

namespace {

struct WordBuilder {
    std::string id;
    std::vector<MorseEvent> events;
    std::vector<Tag> tags;
    int plain = 0;

    void cusp(MorseEvent e) {
        events.push_back(e);
        tags.emplace_back();
    }
    void cross(int h, std::string clasp = {}, std::string part = {}, bool target = false) {
        events.push_back(X(h));
        Tag t;
        if (clasp.empty()) {
            t.label = id + ".x" + std::to_string(plain++);
        } else {
            t.label = id + "." + clasp + "." + part;
            t.clasp = clasp;
            t.target = target;
        }
        tags.push_back(std::move(t));
    }
};

PatternFront positive_winding(int seams, WordBuilder&& b, std::string name) {
    PatternFront p = PatternFront::derive(seams, 1, b.events, b.tags, name);
    if (p.winding() < 0) p = PatternFront::derive(seams, -1, std::move(b.events), std::move(b.tags), name);
    return p;
}

WordBuilder q_word(int j, const std::string& id) {
    WordBuilder b;
    b.id = id;
    b.cusp(L(j + 2));
    b.cross(j + 1, "clasp", "a", true);
    for (int h = j; h >= 1; --h) b.cross(h);
    b.cross(j + 3, "clasp", "b");
    for (int h = j + 4; h <= 2 * j + 2; ++h) b.cross(h);
    b.cusp(R(j + 2));
    return b;
}

} // namespace

PatternFront gen_identity() { return PatternFront::make(1, {1}, {}, {}, "identity"); }

PatternFront gen_P(char variant) {
    if (variant != 'a' && variant != 'b') throw Error(ErrorCode::BadParameter, "P variant must be a or b");
    PatternFront a = positive_winding(3, q_word(1, "P"), "P_a");
    if (variant == 'a') return a;
    // Two positive stabilizations on the seam piece of strand 1.
    PatternFront b = stabilize(a, 1, a.layout().initial[0]);
    b = stabilize(b, 1, b.layout().initial[0]);
    return b.renamed("P_b");
}

PatternFront gen_Q(int j) {
    if (j < 1) throw Error(ErrorCode::BadParameter, "BadParameter: Q_j needs j >= 1");
    return positive_winding(2 * j + 1, q_word(j, "Q" + std::to_string(j)), "Q" + std::to_string(j));
}

PatternFront gen_R(int j) {
    if (j < 0) throw Error(ErrorCode::BadParameter, "BadParameter: R_j needs j >= 0");
    if (j == 0) return gen_identity();
    std::string id = "R" + std::to_string(j);
    WordBuilder b;
    b.id = id;
    for (int k = 0; k < j; ++k) {
        int o = 2 * k;
        std::string upper = "clasp" + std::to_string(2 * k + 2);
        std::string lower = "clasp" + std::to_string(2 * k + 1);
        b.cusp(L(3 + o));
        b.cross(4 + o, upper, "a", k == j - 1);
        b.cusp(L(2 + o));
        b.cross(4 + o, upper, "b");
        b.cross(1 + o, lower, "a");
        b.cross(3 + o, lower, "b");
        b.cusp(R(2 + o));
        b.cusp(R(3 + o));
    }
    return positive_winding(2 * j + 1, std::move(b), id);
}

std::string clasp_switch_target(const PatternFront& p) {
    for (const auto& t : p.tags())
        if (t.target) return t.label;
    throw Error(ErrorCode::NoTaggedClasp, "NoTaggedClasp: pattern carries no designated clasp crossing");
}

int clasp_count(const PatternFront& p) {
    std::set<std::string> ids;
    for (const auto& t : p.tags())
        if (!t.clasp.empty()) ids.insert(t.clasp);
    return static_cast<int>(ids.size());
}

PatternFront stabilize(const PatternFront& p, int sign, int edge) {
    Insertion ins = insert_zigzag(p.oriented(), edge, sign);
    return PatternFront::make(p.seams(), p.seam_orient(), std::move(ins.events), std::move(ins.tags), p.name());
}

PatternFront reverse(const PatternFront& p) {
    std::vector<int> o = p.seam_orient();
    for (int& x : o) x = -x;
    return PatternFront::make(p.seams(), std::move(o), p.events(), p.tags(), p.name());
}

} // namespace legcalc
