#pragma once

#include "legcalc/bounds.hpp"
#include "legcalc/topo.hpp"

#include "json.hpp"

namespace legcalc {

using Json = nlohmann::json; // std::map objects, so keys come out sorted

// Crossing arcs are [in_a, out_a, in_b, out_b] where a is the strand with the
// smaller incoming edge; "over" is the index where the over strand starts.
Json to_json(const PDCode& d);
PDCode pd_from_json(const Json& j); // throws BadPDCode

Json to_json(const SBBounds& b);
Json to_json(const CertifiedGenus& g);
Json to_json(const Certificate& c);
Json to_json(const std::vector<Tag>& tags);
std::vector<Tag> tags_from_json(const Json& j, std::size_t events);

Json invariants_json(const FrontDiagram& f);
Json invariants_json(const PatternFront& p);

Json error_json(const Error& e);

} // namespace legcalc
