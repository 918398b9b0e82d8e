#include "legcalc/topo.hpp"

#include <algorithm>
#include <numeric>

namespace legcalc {

namespace {

[[noreturn]] void bad_pd(const std::string& what) { throw Error(ErrorCode::BadPDCode, "BadPDCode: " + what); }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

PDCode pd_from_word(const Oriented& w, int start) {
    const Layout& lay = *w.layout;
    int nx = static_cast<int>(lay.crossings.size());
    // Segment end -> 2 * crossing + strand, strand 1 being the over (descending) one.
    std::vector<int> xend(2 * static_cast<std::size_t>(lay.segments()), -1);
    for (int ci = 0; ci < nx; ++ci) {
        const CrossingRec& c = lay.crossings[ci];
        xend[2 * c.u + 1] = xend[2 * c.u2] = 2 * ci;
        xend[2 * c.d + 1] = xend[2 * c.d2] = 2 * ci + 1;
    }
    PDCode pd;
    pd.crossings.resize(nx);
    if (nx == 0) return pd;
    std::vector<int> passes;
    passes.reserve(2 * nx);
    int s = start, d = w.dirs[start];
    if (d == 0) throw Error(ErrorCode::Internal, "start segment is not oriented");
    do {
        int end = 2 * s + (d > 0 ? 1 : 0);
        if (xend[end] >= 0) passes.push_back(xend[end]);
        int nb = lay.link[end];
        s = nb >> 1;
        d = (nb & 1) ? -1 : 1;
    } while (s != start);
    if (static_cast<int>(passes.size()) != 2 * nx) throw Error(ErrorCode::MultiComponent, "word is not a knot");

    std::vector<char> filled(2 * nx, 0);
    int edges = 2 * nx;
    for (int k = 0; k < edges; ++k) {
        int x = passes[k];
        if (filled[x]) throw Error(ErrorCode::Internal, "crossing strand visited twice");
        filled[x] = 1;
        PDCrossing& c = pd.crossings[x >> 1];
        int in = k == 0 ? edges : k, out = k + 1;
        if (x & 1) {
            c.over_in = in;
            c.over_out = out;
        } else {
            c.under_in = in;
            c.under_out = out;
        }
    }
    for (int ci = 0; ci < nx; ++ci) {
        pd.crossings[ci].sign = w.signs[ci];
        pd.crossings[ci].tag = w.tags[lay.crossings[ci].event].label;
    }
    pd.orientation.resize(edges);
    std::iota(pd.orientation.begin(), pd.orientation.end(), 1);
    return pd;
}

PDCode smooth(const FrontDiagram& f) {
    if (f.crossings() == 0) return {};
    return pd_from_word(f.oriented(), f.start_segment());
}

PDCode closure(const PatternFront& p) { return pd_from_word(p.oriented(), p.layout().initial[0]); }

void validate_pd(const PDCode& d) {
    int c = d.size();
    int edges = 2 * c;
    std::vector<int> seen_in(edges + 1, 0), seen_out(edges + 1, 0);
    for (const auto& x : d.crossings) {
        for (int e : {x.under_in, x.under_out, x.over_in, x.over_out})
            if (e < 1 || e > edges) bad_pd("edge label " + std::to_string(e) + " outside 1.." + std::to_string(edges));
        if (x.sign != 1 && x.sign != -1) bad_pd("crossing sign must be +1 or -1");
        ++seen_in[x.under_in];
        ++seen_in[x.over_in];
        ++seen_out[x.under_out];
        ++seen_out[x.over_out];
    }
    for (int e = 1; e <= edges; ++e)
        if (seen_in[e] != 1 || seen_out[e] != 1)
            bad_pd("edge " + std::to_string(e) + " must enter and leave exactly one crossing");
    if (static_cast<int>(d.orientation.size()) != edges) bad_pd("orientation must list every edge once");
    std::vector<int> next(edges + 1, 0);
    for (const auto& x : d.crossings) {
        next[x.under_in] = x.under_out;
        next[x.over_in] = x.over_out;
    }
    if (edges == 0) return;
    std::vector<char> used(edges + 1, 0);
    for (int k = 0; k < edges; ++k) {
        int e = d.orientation[k];
        if (e < 1 || e > edges || used[e]) bad_pd("orientation must list every edge once");
        used[e] = 1;
        if (next[e] != d.orientation[(k + 1) % edges])
            bad_pd(k + 1 == edges ? "more than one component" : "orientation does not follow the strands");
    }
}

int writhe(const PDCode& d) {
    int w = 0;
    for (const auto& x : d.crossings) w += x.sign;
    return w;
}

int wirtinger_arcs(const PDCode& d) {
    int edges = 2 * d.size();
    if (edges == 0) return 1;
    UnionFind uf(edges + 1);
    for (const auto& x : d.crossings) uf.unite(x.over_in, x.over_out);
    int arcs = 0;
    for (int e = 1; e <= edges; ++e) arcs += uf.find(e) == e;
    return arcs;
}

int seifert_circles(const PDCode& d) {
    int edges = 2 * d.size();
    if (edges == 0) return 1;
    std::vector<int> next(edges + 1, 0);
    for (const auto& x : d.crossings) {
        next[x.under_in] = x.over_out;
        next[x.over_in] = x.under_out;
    }
    std::vector<char> seen(edges + 1, 0);
    int circles = 0;
    for (int e = 1; e <= edges; ++e) {
        if (seen[e]) continue;
        ++circles;
        for (int k = e; !seen[k]; k = next[k]) seen[k] = 1;
    }
    return circles;
}

int seifert_genus_upper(const PDCode& d) { return (d.size() - seifert_circles(d) + 1) / 2; }

PDCode crossing_switch(const PDCode& d, const std::string& label, bool require_positive) {
    PDCode out = d;
    for (auto& x : out.crossings) {
        if (x.tag != label) continue;
        if (require_positive && x.sign < 0)
            throw Error(ErrorCode::AlreadyNegative, "AlreadyNegative: crossing '" + label + "' is negative");
        std::swap(x.under_in, x.over_in);
        std::swap(x.under_out, x.over_out);
        x.sign = -x.sign;
        return out;
    }
    throw Error(ErrorCode::UnknownLabel, "UnknownLabel: no crossing labelled '" + label + "'");
}

LinMatrix alexander_matrix(const PDCode& d) {
    int c = d.size();
    int edges = 2 * c;
    if (c == 0) return {};
    UnionFind uf(edges + 1);
    for (const auto& x : d.crossings) uf.unite(x.over_in, x.over_out);
    std::vector<int> arc_of_root(edges + 1, -1), arc(edges + 1, -1);
    int arcs = 0;
    for (int e : d.orientation) {
        int r = uf.find(e);
        if (arc_of_root[r] < 0) arc_of_root[r] = arcs++;
        arc[e] = arc_of_root[r];
    }
    if (arcs != c) bad_pd("expected as many arcs as crossings");
    int last = arcs - 1;
    LinMatrix m;
    m.reserve(c - 1);
    bool dropped = false;
    for (const auto& x : d.crossings) {
        int k = arc[x.over_in], i = arc[x.under_in], j = arc[x.under_out];
        if (i == last && !dropped) {
            dropped = true;
            continue;
        }
        std::vector<LinEntry> row;
        auto add = [&](int col, long a, long b) {
            if (col == last) return;
            for (auto& e : row)
                if (e.col == col) {
                    e.a += a;
                    e.b += b;
                    return;
                }
            row.push_back({col, a, b});
        };
        add(k, 1, -1);
        if (x.sign > 0) {
            add(i, 0, 1);
            add(j, -1, 0);
        } else {
            add(i, -1, 0);
            add(j, 0, 1);
        }
        std::erase_if(row, [](const LinEntry& e) { return e.a == 0 && e.b == 0; });
        m.push_back(std::move(row));
    }
    if (!dropped) bad_pd("no crossing ends the last arc");
    return m;
}

LaurentPoly alexander(const PDCode& d, DetMethod method) {
    if (d.size() == 0) return LaurentPoly(1);
    validate_pd(d);
    LaurentPoly det = determinant(alexander_matrix(d), method);
    if (det.is_zero()) throw Error(ErrorCode::Internal, "Alexander determinant vanished for a knot");
    LaurentPoly n = normalize_alexander(det);
    if (n.value_at_one() != 1 || !n.palindromic())
        throw Error(ErrorCode::Internal, "Alexander polynomial failed its symmetry checks: " + n.to_string());
    return n;
}

LaurentPoly satellite_alexander(const LaurentPoly& dp, const LaurentPoly& dk, int w) {
    if (w == 0) throw Error(ErrorCode::BadWinding, "BadWinding: winding number 0 needs the pattern's own data");
    return normalize_alexander(dp * dk.substitute(w));
}

} // namespace legcalc
