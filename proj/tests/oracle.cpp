#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace oracle {

using legcalc::EventKind;
using legcalc::MorseEvent;
using Q = boost::multiprecision::cpp_rational;

namespace {

struct Walk {
    const std::vector<MorseEvent>& ev;
    bool periodic;
    std::vector<int> strands;

    Walk(const std::vector<MorseEvent>& e, int seams, bool p) : ev(e), periodic(p) {
        strands.push_back(seams);
        for (const auto& x : ev)
            strands.push_back(strands.back() + (x.kind == EventKind::LeftCusp    ? 2
                                                : x.kind == EventKind::RightCusp ? -2
                                                                                 : 0));
    }
    int slices() const { return static_cast<int>(ev.size()); }
};

FrontData run(const Walk& w, int t, int h, int d) {
    FrontData out;
    const int E = w.slices();
    std::map<int, std::vector<std::pair<bool, int>>> passes; // event -> (ascending, direction)
    const int slots = w.periodic ? std::max(E, 1) : E + 1;
    std::vector<long> offset(slots + 1, 0);
    for (int s = 0; s < slots; ++s) offset[s + 1] = offset[s] + w.strands[s];
    const long total = offset[slots];
    std::vector<bool> seen(total, false);
    long visited = 0;
    bool stray = false;
    const auto start = std::make_tuple(t, h, d);
    long guard = 4 * total + 16;
    do {
        int slot = w.periodic && t == E ? 0 : t;
        if (h >= 1 && h <= w.strands[slot]) {
            long at = offset[slot] + h - 1;
            if (!seen[at]) seen[at] = true, ++visited;
        } else {
            stray = true;
        }
        if (--guard < 0) break;
        if (d > 0) {
            if (t == E) {
                t = 0;
                continue;
            }
            const MorseEvent& e = w.ev[t];
            int H = e.height;
            if (e.kind == EventKind::Crossing) {
                if (h == H) {
                    passes[t].push_back({true, d});
                    h = H + 1;
                } else if (h == H + 1) {
                    passes[t].push_back({false, d});
                    h = H;
                }
                ++t;
            } else if (e.kind == EventKind::LeftCusp) {
                if (h >= H) h += 2;
                ++t;
            } else {
                if (h == H) {
                    ++out.right, ++out.up;
                    h = H + 1;
                    d = -1;
                } else if (h == H + 1) {
                    ++out.right, ++out.down;
                    h = H;
                    d = -1;
                } else {
                    if (h > H + 1) h -= 2;
                    ++t;
                }
            }
        } else {
            if (t == 0) {
                t = E;
                continue;
            }
            const MorseEvent& e = w.ev[t - 1];
            int H = e.height;
            if (e.kind == EventKind::Crossing) {
                if (h == H + 1) {
                    passes[t - 1].push_back({true, d});
                    h = H;
                } else if (h == H) {
                    passes[t - 1].push_back({false, d});
                    h = H + 1;
                }
                --t;
            } else if (e.kind == EventKind::LeftCusp) {
                if (h == H) {
                    ++out.left, ++out.up;
                    h = H + 1;
                    d = 1;
                } else if (h == H + 1) {
                    ++out.left, ++out.down;
                    h = H;
                    d = 1;
                } else {
                    if (h > H + 1) h -= 2;
                    --t;
                }
            } else {
                if (h >= H) h += 2;
                --t;
            }
        }
    } while (std::make_tuple(t, h, d) != start);

    bool all_crossings = true;
    int crossings = 0;
    for (const auto& e : w.ev) crossings += e.kind == EventKind::Crossing;
    if (static_cast<int>(passes.size()) != crossings) all_crossings = false;
    for (const auto& [ev, ps] : passes) {
        if (ps.size() != 2 || ps[0].first == ps[1].first) {
            all_crossings = false;
            continue;
        }
        out.writhe += ps[0].second * ps[1].second;
    }
    out.components_ok = guard >= 0 && !stray && all_crossings && visited == total;
    out.tb = out.writhe - out.right;
    out.rot = (out.down - out.up) / 2;
    return out;
}

Q power(long x, int k) {
    Q r = 1;
    for (int i = 0; i < std::abs(k); ++i) r *= x;
    return k < 0 ? Q(1) / r : r;
}

bool is_power_of(boost::multiprecision::cpp_int n, long x) {
    if (n <= 0) return false;
    while (n > 1) {
        if (n % x != 0) return false;
        n /= x;
    }
    return true;
}

} // namespace

FrontData trace_knot(const std::vector<MorseEvent>& events, bool reversed) {
    Walk w(events, 0, false);
    for (int t = 0; t < w.slices(); ++t)
        if (events[t].kind == EventKind::LeftCusp) return run(w, t + 1, events[t].height + 1, reversed ? -1 : 1);
    return {};
}

FrontData trace_pattern(int seams, int first_dir, const std::vector<MorseEvent>& events) {
    Walk w(events, seams, true);
    return run(w, 0, 1, first_dir);
}

Q wirtinger_minor_at(const legcalc::PDCode& d, long x) {
    int c = d.size();
    if (c == 0) return 1;
    std::map<int, int> under_out_of;
    for (int k = 0; k < c; ++k) under_out_of[d.crossings[k].under_out] = k;
    std::map<int, int> arc;
    int id = 0;
    bool started = false;
    std::vector<int> before;
    for (int e : d.orientation) {
        if (under_out_of.count(e)) {
            if (started) ++id;
            started = true;
        }
        if (!started)
            before.push_back(e);
        else
            arc[e] = id;
    }
    for (int e : before) arc[e] = id;
    int arcs = id + 1;
    std::vector<std::vector<Q>> m(c, std::vector<Q>(arcs, 0));
    Q t = x, tinv = Q(1) / x;
    for (int r = 0; r < c; ++r) {
        const auto& k = d.crossings[r];
        int o = arc[k.over_in], i = arc[k.under_in], j = arc[k.under_out];
        if (k.sign > 0) {
            // x_o x_i x_o^-1 x_j^-1
            m[r][o] += 1 - t;
            m[r][i] += t;
            m[r][j] -= 1;
        } else {
            // x_o^-1 x_i x_o x_j^-1
            m[r][o] += 1 - tinv;
            m[r][i] += tinv;
            m[r][j] -= 1;
        }
    }
    int n = c - 1;
    std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
    for (int r = 1; r < c; ++r)
        for (int col = 1; col < arcs && col - 1 < n; ++col) a[r - 1][col - 1] = m[r][col];
    Q det = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (int r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            Q f = a[r][k] / a[k][k];
            for (int col = k; col < n; ++col) a[r][col] -= f * a[k][col];
        }
    }
    return det;
}

Q evaluate(const legcalc::LaurentPoly& p, long x) {
    Q s = 0;
    for (int e = p.low(); !p.is_zero() && e <= p.high(); ++e) s += Q(p.coeff(e)) * power(x, e);
    return s;
}

bool agrees_up_to_unit(const Q& value, const legcalc::LaurentPoly& poly, long x) {
    Q pv = evaluate(poly, x);
    if (pv == 0) return value == 0;
    Q r = value / pv;
    if (r < 0) r = -r;
    auto num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    return (num == 1 && is_power_of(den, x)) || (den == 1 && is_power_of(num, x));
}

} // namespace oracle
