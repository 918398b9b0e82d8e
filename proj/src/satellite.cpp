#include "legcalc/satellite.hpp"

#include <utility>

namespace legcalc {

namespace {

struct Item {
    int copy;
    int key;
};

// Bubble sort by key, emitting one crossing per adjacent swap. Every inverted
// pair crosses exactly once, so the emitted word is reduced.
template <class Emit>
void sort_bundle(std::vector<Item>& a, int base, Emit&& emit) {
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            if (a[i].key > a[i + 1].key) {
                emit(base + static_cast<int>(i) + 1, a[i], a[i + 1]);
                std::swap(a[i], a[i + 1]);
                swapped = true;
            }
        }
    }
}

std::string pair_suffix(int a, int b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

CopyBundle copy_word(const Oriented& w, int seams, int n, const std::string& prefix) {
    if (n < 1) throw Error(ErrorCode::BadParameter, "BadParameter: n-copy needs n >= 1");
    const Layout& lay = *w.layout;
    CopyBundle out;
    out.seams = seams * n;
    out.copies = n;
    out.events.reserve(w.events.size() * static_cast<std::size_t>(n) * n);
    out.tags.reserve(out.events.capacity());

    std::size_t ci = 0;
    for (int idx = 0; idx < static_cast<int>(w.events.size()); ++idx) {
        const MorseEvent& e = w.events[idx];
        int base = (e.height - 1) * n;
        std::vector<Item> items;
        items.reserve(2 * n);
        auto cusp_crossing = [&](int pos, const Item& lo, const Item& hi) {
            out.events.push_back(X(pos));
            out.tags.push_back({prefix + "cusp" + std::to_string(idx) + pair_suffix(lo.copy, hi.copy), {}, false});
        };
        if (e.kind == EventKind::LeftCusp) {
            for (int a = 1; a <= n; ++a) {
                out.events.push_back(L(base + 2 * a - 1));
                out.tags.emplace_back();
                items.push_back({a, a});
                items.push_back({a, n + a});
            }
            sort_bundle(items, base, cusp_crossing);
            const CuspRec& c = lay.cusps[ci];
            if (out.cut < 0) {
                out.cut = static_cast<int>(out.events.size());
                out.offset = w.dirs[c.lower] > 0 ? base : base + n;
            }
            ++ci;
        } else if (e.kind == EventKind::RightCusp) {
            for (int a = 1; a <= n; ++a) items.push_back({a, 2 * a - 1});
            for (int a = 1; a <= n; ++a) items.push_back({a, 2 * a});
            sort_bundle(items, base, cusp_crossing);
            for (int a = 1; a <= n; ++a) {
                out.events.push_back(R(base + 1));
                out.tags.emplace_back();
            }
            ++ci;
        } else {
            for (int a = 1; a <= n; ++a) items.push_back({a, n + a});
            for (int b = 1; b <= n; ++b) items.push_back({b, b});
            const Tag& orig = w.tags[idx];
            sort_bundle(items, base, [&](int pos, const Item& up, const Item& down) {
                out.events.push_back(X(pos));
                Tag t{prefix + orig.label + pair_suffix(up.copy, down.copy), {}, false};
                if (n == 1) {
                    t.clasp = orig.clasp.empty() ? std::string{} : prefix + orig.clasp;
                    t.target = orig.target;
                }
                out.tags.push_back(std::move(t));
            });
        }
    }
    return out;
}

struct Spliced {
    std::vector<MorseEvent> events;
    std::vector<Tag> tags;
    int probe_time = 0;
    int probe_height = 0;
};

Spliced splice(CopyBundle b, const PatternFront& p) {
    if (b.cut < 0) throw Error(ErrorCode::Internal, "companion has no left cusp to cut at");
    if (b.copies != p.seams()) throw Error(ErrorCode::Internal, "bundle width differs from the pattern's seam count");
    Spliced s;
    s.events.reserve(b.events.size() + p.events().size());
    s.tags.reserve(s.events.capacity());
    s.events.insert(s.events.end(), b.events.begin(), b.events.begin() + b.cut);
    s.tags.insert(s.tags.end(), std::make_move_iterator(b.tags.begin()),
                  std::make_move_iterator(b.tags.begin() + b.cut));
    for (std::size_t i = 0; i < p.events().size(); ++i) {
        MorseEvent e = p.events()[i];
        e.height += b.offset;
        s.events.push_back(e);
        Tag t = p.tags()[i];
        if (!t.label.empty()) t.label = "p:" + t.label;
        if (!t.clasp.empty()) t.clasp = "p:" + t.clasp;
        s.tags.push_back(std::move(t));
    }
    s.events.insert(s.events.end(), b.events.begin() + b.cut, b.events.end());
    s.tags.insert(s.tags.end(), std::make_move_iterator(b.tags.begin() + b.cut),
                  std::make_move_iterator(b.tags.end()));
    s.probe_time = b.cut;
    s.probe_height = b.offset + 1;
    return s;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::Internal, "satellite invariant violated: " + what);
}

bool has_left_cusp(const PatternFront& q) {
    for (const auto& e : q.events())
        if (e.kind == EventKind::LeftCusp) return true;
    return false;
}

} // namespace

CopyBundle n_copy(const FrontDiagram& f, int n) { return copy_word(f.oriented(), 0, n, "k:"); }

CopyBundle n_copy(const PatternFront& q, int n) {
    if (!has_left_cusp(q)) throw Error(ErrorCode::BadParameter, "companion pattern has no left cusp");
    return copy_word(q.oriented(), q.seams(), n, "q:");
}

PatternFront with_left_cusp(const PatternFront& q) {
    std::vector<MorseEvent> events{L(2), X(1), R(2)};
    std::vector<Tag> tags{Tag{}, Tag{"kink", {}, false}, Tag{}};
    events.insert(events.end(), q.events().begin(), q.events().end());
    tags.insert(tags.end(), q.tags().begin(), q.tags().end());
    return PatternFront::make(q.seams(), q.seam_orient(), std::move(events), std::move(tags), q.name());
}

KnotSatellite satellite(const PatternFront& p, const FrontDiagram& k, bool allow_twist) {
    if (k.tb() != 0 && !allow_twist)
        throw Error(ErrorCode::TwistedInputRejected,
                    "TwistedInputRejected: companion has tb " + std::to_string(k.tb()) + "; pass allow_twist");
    Spliced s = splice(n_copy(k, p.seams()), p);
    KnotSatellite r{FrontDiagram::seeded(std::move(s.events), std::move(s.tags), s.probe_time, s.probe_height,
                                         p.seam_orient()[0]),
                    k.tb()};
    int w = p.winding();
    require(r.diagram.tb() == w * w * k.tb() + p.tb(), "tb = w^2 tb(K) + tb(P)");
    require(r.diagram.rot() == w * k.rot() + p.rot(), "rot = w rot(K) + rot(P)");
    return r;
}

PatternSatellite compose(const PatternFront& p, const PatternFront& q) {
    const PatternFront q2 = has_left_cusp(q) ? q : with_left_cusp(q);
    Spliced s = splice(n_copy(q2, p.seams()), p);
    PatternSatellite r{PatternFront::seeded(q.seams() * p.seams(), std::move(s.events), std::move(s.tags),
                                            s.probe_time, s.probe_height, p.seam_orient()[0],
                                            p.name() + "_of_" + q.name()),
                       q.tb()};
    int w = p.winding();
    require(r.diagram.tb() == w * w * q.tb() + p.tb(), "tb = w^2 tb(Q) + tb(P)");
    require(r.diagram.rot() == w * q.rot() + p.rot(), "rot = w rot(Q) + rot(P)");
    require(r.diagram.winding() == w * q.winding(), "w = w(P) w(Q)");
    return r;
}

PatternSatellite iterate(const PatternFront& p, int i) {
    if (i < 0) throw Error(ErrorCode::BadParameter, "BadParameter: iterate needs i >= 0");
    PatternSatellite acc{gen_identity(), 0};
    for (int k = 1; k <= i; ++k) acc = compose(acc.diagram, p);
    if (i > 0) acc.diagram = acc.diagram.renamed(p.name() + "_pow" + std::to_string(i));
    return acc;
}

} // namespace legcalc
