#pragma once

#include "legcalc/dsl.hpp"
#include "legcalc/front.hpp"
#include "legcalc/pattern.hpp"

#include <cstdint>
#include <random>

namespace legcalc {

using Rng = std::mt19937_64;

// Random word on `seams` strands, closed, of length at most max_events.
std::vector<MorseEvent> random_word(Rng& rng, int seams, int max_events);

// Rejection samplers for single-component fronts.
FrontDiagram random_knot(Rng& rng, int max_events);
PatternFront random_pattern(Rng& rng, int max_events, int max_seams);

DslDocument random_document(Rng& rng, int max_defs, int max_events);

// LEGCALC_SEED when set, else `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

} // namespace legcalc
