#include "legcalc/io.hpp"

#include <algorithm>

namespace legcalc {

namespace {

[[noreturn]] void bad_pd(const std::string& what) { throw Error(ErrorCode::BadPDCode, "BadPDCode: " + what); }

} // namespace

Json to_json(const PDCode& d) {
    Json xs = Json::array();
    for (const auto& c : d.crossings) {
        bool over_first = c.over_in < c.under_in;
        Json arcs = over_first ? Json::array({c.over_in, c.over_out, c.under_in, c.under_out})
                               : Json::array({c.under_in, c.under_out, c.over_in, c.over_out});
        xs.push_back({{"arcs", arcs}, {"over", over_first ? 0 : 2}, {"sign", c.sign}, {"tag", c.tag}});
    }
    return {{"crossings", xs}, {"orientation", d.orientation}};
}

PDCode pd_from_json(const Json& j) {
    PDCode d;
    try {
        if (!j.is_object() || !j.contains("crossings")) bad_pd("expected an object with \"crossings\"");
        for (const auto& x : j.at("crossings")) {
            const auto& arcs = x.at("arcs");
            if (!arcs.is_array() || arcs.size() != 4) bad_pd("\"arcs\" must hold four edge labels");
            int over = x.at("over").get<int>();
            if (over != 0 && over != 2) bad_pd("\"over\" must be 0 or 2");
            PDCrossing c;
            int o = over, u = 2 - over;
            c.over_in = arcs[o].get<int>();
            c.over_out = arcs[o + 1].get<int>();
            c.under_in = arcs[u].get<int>();
            c.under_out = arcs[u + 1].get<int>();
            c.sign = x.at("sign").get<int>();
            c.tag = x.value("tag", std::string{});
            d.crossings.push_back(std::move(c));
        }
        if (j.contains("orientation")) {
            d.orientation = j.at("orientation").get<std::vector<int>>();
        } else {
            d.orientation.resize(2 * d.crossings.size());
            for (std::size_t k = 0; k < d.orientation.size(); ++k) d.orientation[k] = static_cast<int>(k) + 1;
        }
    } catch (const Json::exception& e) {
        bad_pd(e.what());
    }
    validate_pd(d);
    return d;
}

Json to_json(const SBBounds& b) {
    return {{"s_min", b.s_min}, {"tau_min", b.tau_min}, {"g4ex_min", b.g4ex_min}, {"g4_min", b.g4_min}};
}

Json to_json(const CertifiedGenus& g) {
    Json j{{"status", g.certified() ? "Certified" : "Unknown"}, {"interval", {g.lower, g.upper}}};
    if (g.certified()) {
        j["g"] = g.g;
        j["g4"] = g.g4;
        j["g4ex"] = g.g4ex;
        j["tau"] = g.tau;
    }
    return j;
}

Json to_json(const Certificate& c) {
    Json op{{"name", c.pattern_name},
            {"j", c.j},
            {"tb", c.op.tb},
            {"rot", c.op.rot},
            {"w", c.op.w},
            {"hypothesis", c.op.pass ? "pass" : "fail"},
            {"failing", c.op.failing},
            {"winding_one", c.op.winding_one},
            {"closure_alexander", c.op.closure_alexander.to_string()},
            {"unknotted_closure_evidence", c.op.unknotted_closure}};
    Json knot = to_json(c.knot);
    knot["tb"] = c.knot_tb;
    knot["rot"] = c.knot_rot;
    knot["alexander"] = c.knot_alexander.to_string();
    knot["verdict"] = c.knot_failure ? std::string(error_name(*c.knot_failure)) : std::string("pass");
    Json rows = Json::array();
    for (const auto& r : c.rows)
        rows.push_back({{"i", r.i},
                        {"tb", r.tb},
                        {"rot", r.rot},
                        {"tau", r.tau},
                        {"g4ex", r.g4ex},
                        {"g4", r.g4},
                        {"g", r.g},
                        {"lspace", lspace_name(r.lspace)}});
    Json out{{"operator", op}, {"knot", knot}, {"assumptions", c.assumptions}, {"ledger", rows}};
    out["conclusion"] = c.conclusion ? Json(*c.conclusion) : Json(nullptr);
    if (c.ledger_failure) out["ledger_failure"] = *c.ledger_failure;
    return out;
}

Json to_json(const std::vector<Tag>& tags) {
    Json out = Json::array();
    for (const auto& t : tags) {
        if (t.label.empty() && t.clasp.empty() && !t.target) {
            out.push_back(nullptr);
            continue;
        }
        Json j{{"label", t.label}};
        if (!t.clasp.empty()) j["clasp"] = t.clasp;
        if (t.target) j["target"] = true;
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<Tag> tags_from_json(const Json& j, std::size_t events) {
    if (!j.is_array() || j.size() != events)
        throw Error(ErrorCode::ValidationError, "ValidationError: tag list must have one entry per event");
    std::vector<Tag> out;
    out.reserve(events);
    for (const auto& t : j) {
        if (t.is_null()) {
            out.emplace_back();
            continue;
        }
        out.push_back({t.value("label", std::string{}), t.value("clasp", std::string{}), t.value("target", false)});
    }
    return out;
}

Json invariants_json(const FrontDiagram& f) {
    return {{"tb", f.tb()}, {"rot", f.rot()}, {"writhe", f.writhe()}, {"cusps", f.cusps()}};
}

Json invariants_json(const PatternFront& p) {
    return {{"tb", p.tb()},         {"rot", p.rot()},         {"writhe", p.writhe()},
            {"cusps", p.cusps()},   {"w", p.winding()},       {"strands", p.seams()}};
}

Json error_json(const Error& e) {
    Json vs = Json::array();
    for (const auto& v : e.violations()) {
        Json j{{"code", error_name(v.code)}, {"message", v.message}};
        if (v.index >= 0) j["index"] = v.index;
        if (v.code == ErrorCode::MultiComponent || v.code == ErrorCode::OpenFront) j["count"] = v.count;
        vs.push_back(std::move(j));
    }
    return {{"error", error_name(e.code())}, {"message", e.what()}, {"violations", vs}};
}

} // namespace legcalc
