#include "legcalc/corpus.hpp"

#include <cstdlib>

namespace legcalc {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

} // namespace

std::vector<MorseEvent> random_word(Rng& rng, int seams, int max_events) {
    int length = uniform(rng, seams == 0 ? 2 : 0, std::max(max_events, 2));
    std::vector<MorseEvent> out;
    int s = seams;
    for (int t = 0; t < length; ++t) {
        int rem = length - t - 1;
        auto ok = [&](int next) { return next >= 0 && std::abs(next - seams) <= 2 * rem; };
        std::vector<int> kinds;
        if (ok(s + 2)) kinds.push_back(0);
        if (s >= 2 && ok(s - 2)) kinds.push_back(1);
        if (s >= 2 && ok(s)) kinds.insert(kinds.end(), {2, 2});
        if (kinds.empty()) break;
        int pick = kinds[uniform(rng, 0, static_cast<int>(kinds.size()) - 1)];
        if (pick == 0) {
            out.push_back(L(uniform(rng, 1, s + 1)));
            s += 2;
        } else if (pick == 1) {
            out.push_back(R(uniform(rng, 1, s - 1)));
            s -= 2;
        } else {
            out.push_back(X(uniform(rng, 1, s - 1)));
        }
    }
    return out;
}

FrontDiagram random_knot(Rng& rng, int max_events) {
    for (;;) {
        auto w = random_word(rng, 0, max_events);
        std::vector<Violation> errors;
        Layout lay = build_layout(0, w, errors);
        if (errors.empty() && !w.empty() && count_components(lay) == 1) return FrontDiagram::make(std::move(w));
    }
}

PatternFront random_pattern(Rng& rng, int max_events, int max_seams) {
    for (;;) {
        int seams = uniform(rng, 1, max_seams);
        auto w = random_word(rng, seams, max_events);
        std::vector<Violation> errors;
        Layout lay = build_layout(seams, w, errors);
        if (!errors.empty() || count_components(lay) != 1) continue;
        int first = uniform(rng, 0, 1) ? 1 : -1;
        return PatternFront::derive(seams, first, std::move(w), {}, "rand");
    }
}

DslDocument random_document(Rng& rng, int max_defs, int max_events) {
    DslDocument doc;
    int n = uniform(rng, 1, max_defs);
    for (int k = 0; k < n; ++k) {
        std::string name = (uniform(rng, 0, 1) ? "k" : "p_") + std::to_string(k);
        if (uniform(rng, 0, 1)) {
            doc.defs.push_back(definition_of(name, random_knot(rng, max_events)));
        } else {
            PatternFront p = random_pattern(rng, max_events, 3).renamed(name);
            doc.defs.push_back(definition_of(p));
        }
    }
    return doc;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
    const char* s = std::getenv("LEGCALC_SEED");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    return (end && *end == '\0') ? v : fallback;
}

} // namespace legcalc
