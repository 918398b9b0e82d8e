#include "legcalc/cli.hpp"

#include "legcalc/bounds.hpp"
#include "legcalc/corpus.hpp"
#include "legcalc/dsl.hpp"
#include "legcalc/io.hpp"
#include "legcalc/satellite.hpp"
#include "legcalc/topo.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace legcalc {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::optional<DslDocument> doc;
    std::optional<PDCode> pd;
    bool reversed = false;
    Json tags = Json::object();
};

std::string read_all(const std::string& path, std::istream& in) {
    std::ostringstream s;
    if (path == "-") {
        s << in.rdbuf();
        return s.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read '" + path + "'");
    s << f.rdbuf();
    return s.str();
}

Source load(const std::string& path, std::istream& in) {
    std::string text = read_all(path, in);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    Source s;
    if (first == std::string::npos || text[first] != '{') {
        s.doc = parse(text);
        return s;
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::SyntaxError, std::string("SyntaxError: input is not valid JSON: ") + e.what());
    }
    if (j.contains("dsl")) {
        if (!j.at("dsl").is_string()) throw Error(ErrorCode::ValidationError, "ValidationError: \"dsl\" must be a string");
        s.doc = parse(j.at("dsl").get<std::string>());
        s.reversed = j.value("reversed", false);
        if (j.contains("tags")) s.tags = j.at("tags");
    } else if (j.contains("crossings")) {
        s.pd = pd_from_json(j);
    } else {
        throw Error(ErrorCode::ValidationError, "ValidationError: JSON input needs \"dsl\" or \"crossings\"");
    }
    return s;
}

const Definition& pick(const Source& s, const std::string& name) {
    if (!s.doc) throw UsageError("expected a knot or pattern document, got a PD code");
    if (name.empty()) return s.doc->defs.front();
    const Definition* d = s.doc->find(name);
    if (!d) throw UsageError("no definition named '" + name + "'");
    return *d;
}

std::vector<Tag> tags_of(const Source& s, const Definition& d) {
    if (!s.tags.is_object() || !s.tags.contains(d.name)) return {};
    return tags_from_json(s.tags.at(d.name), d.events.size());
}

FrontDiagram knot_of(const Source& s, const Definition& d) {
    if (d.kind != DefKind::Knot) throw UsageError("'" + d.name + "' is a pattern; a knot is needed");
    return to_front(d, tags_of(s, d), s.reversed);
}

PatternFront pattern_of(const Source& s, const Definition& d) {
    if (d.kind != DefKind::Pattern) throw UsageError("'" + d.name + "' is a knot; a pattern is needed");
    return to_pattern(d, tags_of(s, d));
}

Json envelope(const FrontDiagram& f, const std::string& name) {
    DslDocument doc{{definition_of(name, f)}};
    const std::string& n = doc.defs[0].name;
    Json tags = Json::object();
    tags[n] = to_json(f.tags());
    return {{"kind", "knot"},    {"name", n},           {"dsl", serialize(doc)},
            {"reversed", f.reversed()}, {"tags", tags}, {"invariants", invariants_json(f)}};
}

Json envelope(const PatternFront& p) {
    DslDocument doc{{definition_of(p)}};
    const std::string& n = doc.defs[0].name;
    Json tags = Json::object();
    tags[n] = to_json(p.tags());
    return {{"kind", "pattern"}, {"name", n}, {"dsl", serialize(doc)}, {"tags", tags}, {"invariants", invariants_json(p)}};
}

// The PD code of a source: given directly, a smoothed knot, or a pattern closure.
PDCode pd_of(const Source& s, const std::string& name) {
    if (s.pd) return *s.pd;
    const Definition& d = pick(s, name);
    return d.kind == DefKind::Knot ? smooth(knot_of(s, d)) : closure(pattern_of(s, d));
}

std::string target_label(const std::vector<Tag>& tags) {
    for (const auto& t : tags)
        if (t.target) return t.label;
    throw Error(ErrorCode::NoTaggedClasp, "NoTaggedClasp: no crossing is tagged as the clasp target");
}

int parse_sign(const std::string& v) {
    if (v == "+" || v == "+1" || v == "1" || v == "pos") return 1;
    if (v == "-" || v == "-1" || v == "neg") return -1;
    throw UsageError("--sign must be + or -");
}

DetMethod parse_method(const std::string& v) {
    if (v == "auto") return DetMethod::Auto;
    if (v == "bareiss") return DetMethod::Bareiss;
    if (v == "modular") return DetMethod::Modular;
    throw UsageError("--method must be auto, bareiss or modular");
}

std::string selftest(std::uint64_t seed, int count, int max_events, std::size_t& failures) {
    Rng rng(seed);
    std::string first;
    auto check = [&](bool ok, const std::string& what) {
        if (ok) return;
        if (failures++ == 0) first = what;
    };
    for (int c = 0; c < count; ++c) {
        std::string at = "case " + std::to_string(c) + ": ";
        FrontDiagram k = random_knot(rng, max_events);
        check(((k.tb() + k.rot()) % 2 + 2) % 2 == 1, at + "tb + rot parity");
        for (int sign : {1, -1}) {
            FrontDiagram s = stabilize(k, sign, k.start_segment());
            check(s.tb() == k.tb() - 1 && s.rot() == k.rot() + sign, at + "stabilization deltas");
        }
        FrontDiagram r = reverse(k);
        check(r.tb() == k.tb() && r.rot() == -k.rot(), at + "reverse");
        PDCode pd = smooth(k);
        LaurentPoly a = alexander(pd);
        check(a.value_at_one() == 1 && a.palindromic(), at + "Alexander normalization");
        check(a.degree() <= seifert_genus_upper(pd), at + "degree <= Seifert bound");

        PatternFront p = random_pattern(rng, max_events, 3);
        PatternFront q = random_pattern(rng, max_events, 3);
        int w = p.winding();
        KnotSatellite sat = satellite(p, k, true);
        check(sat.diagram.tb() == w * w * k.tb() + p.tb() && sat.diagram.rot() == w * k.rot() + p.rot(),
              at + "satellite formulas");
        PatternSatellite pq = compose(p, q);
        check(pq.diagram.tb() == w * w * q.tb() + p.tb() && pq.diagram.rot() == w * q.rot() + p.rot() &&
                  pq.diagram.winding() == w * q.winding(),
              at + "compose formulas");

        DslDocument doc = random_document(rng, 3, max_events);
        std::string text = serialize(doc);
        check(parse(text) == doc && serialize(parse(text)) == text, at + "DSL round trip");
    }
    return first;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Legendrian front and satellite calculator", "legcalc"};
    app.require_subcommand(1);
    std::function<void()> action;
    auto emit = [&](const Json& j) { out << j.dump() << "\n"; };

    std::string input = "-", name, pattern_in, knot_in, companion_in, pattern_name, knot_name, companion_name;

    auto* inv = app.add_subcommand("invariants", "tb, rot, writhe and cusps of a knot (plus w and strands of a pattern)");
    inv->add_option("input", input, "DSL file, JSON envelope, or - for stdin")->required();
    inv->add_option("--name", name, "definition to use (default: the first)");
    inv->callback([&] {
        action = [&] {
            Source s = load(input, in);
            const Definition& d = pick(s, name);
            emit(d.kind == DefKind::Knot ? invariants_json(knot_of(s, d)) : invariants_json(pattern_of(s, d)));
        };
    });

    bool allow_twist = false;
    auto* sat = app.add_subcommand("satellite", "Legendrian satellite P(K)");
    sat->add_option("--pattern", pattern_in, "pattern input")->required();
    sat->add_option("--knot", knot_in, "companion knot input")->required();
    sat->add_option("--pattern-name", pattern_name);
    sat->add_option("--knot-name", knot_name);
    sat->add_flag("--allow-twist", allow_twist, "accept a companion with tb != 0 (twisted satellite)");
    sat->callback([&] {
        action = [&] {
            Source ps = load(pattern_in, in), ks = load(knot_in, in);
            const Definition& pd = pick(ps, pattern_name);
            const Definition& kd = pick(ks, knot_name);
            PatternFront p = pattern_of(ps, pd);
            KnotSatellite r = satellite(p, knot_of(ks, kd), allow_twist);
            Json j = envelope(r.diagram, p.name() + "_of_" + kd.name);
            j["twist"] = r.twist;
            emit(j);
        };
    });

    auto* comp = app.add_subcommand("compose", "pattern composition P.Q (P inserted into Q)");
    comp->add_option("--pattern", pattern_in, "outer pattern P")->required();
    comp->add_option("--companion", companion_in, "companion pattern Q")->required();
    comp->add_option("--pattern-name", pattern_name);
    comp->add_option("--companion-name", companion_name);
    comp->callback([&] {
        action = [&] {
            Source ps = load(pattern_in, in), qs = load(companion_in, in);
            PatternSatellite r =
                compose(pattern_of(ps, pick(ps, pattern_name)), pattern_of(qs, pick(qs, companion_name)));
            Json j = envelope(r.diagram);
            j["twist"] = r.twist;
            emit(j);
        };
    });

    int iterations = 1;
    auto* it = app.add_subcommand("iterate", "P^i as a left fold of compose");
    it->add_option("--pattern", pattern_in, "pattern input")->required();
    it->add_option("--pattern-name", pattern_name);
    it->add_option("-i,--i", iterations, "number of factors")->required()->check(CLI::NonNegativeNumber);
    it->callback([&] {
        action = [&] {
            Source ps = load(pattern_in, in);
            PatternSatellite r = iterate(pattern_of(ps, pick(ps, pattern_name)), iterations);
            Json j = envelope(r.diagram);
            j["twist"] = r.twist;
            emit(j);
        };
    });

    std::string sign = "+";
    int edge = -1;
    auto* st = app.add_subcommand("stabilize", "insert a zigzag: tb - 1, rot + sign");
    st->add_option("input", input)->required();
    st->add_option("--name", name);
    st->add_option("--sign", sign, "+ or -");
    st->add_option("--edge", edge, "segment id (default: the traversal start)");
    st->callback([&] {
        action = [&] {
            int sg = parse_sign(sign);
            Source s = load(input, in);
            const Definition& d = pick(s, name);
            if (d.kind == DefKind::Knot) {
                FrontDiagram f = knot_of(s, d);
                emit(envelope(stabilize(f, sg, edge < 0 ? f.start_segment() : edge), d.name));
            } else {
                PatternFront p = pattern_of(s, d);
                emit(envelope(stabilize(p, sg, edge < 0 ? p.layout().initial[0] : edge)));
            }
        };
    });

    auto* sm = app.add_subcommand("smooth", "PD code of a knot, or of a pattern's closure");
    sm->add_option("input", input)->required();
    sm->add_option("--name", name);
    sm->callback([&] {
        action = [&] {
            Source s = load(input, in);
            if (s.pd) throw UsageError("smooth needs a knot or pattern, not a PD code");
            emit(to_json(pd_of(s, name)));
        };
    });

    std::string method = "auto";
    auto* al = app.add_subcommand("alexander", "normalized Alexander polynomial");
    al->add_option("input", input, "DSL, envelope or PD code JSON")->required();
    al->add_option("--name", name);
    al->add_option("--method", method, "auto, bareiss or modular");
    al->callback([&] {
        action = [&] {
            DetMethod m = parse_method(method);
            PDCode pd = pd_of(load(input, in), name);
            LaurentPoly a = alexander(pd, m);
            emit({{"alexander", a.to_string()}, {"degree", a.degree()}, {"crossings", pd.size()}});
        };
    });

    auto* gb = app.add_subcommand("genus-bound", "Seifert-circle genus bound (and certification for knots)");
    gb->add_option("input", input)->required();
    gb->add_option("--name", name);
    gb->callback([&] {
        action = [&] {
            Source s = load(input, in);
            PDCode pd = pd_of(s, name);
            Json j{{"crossings", pd.size()},
                   {"seifert_circles", seifert_circles(pd)},
                   {"seifert_genus_upper", seifert_genus_upper(pd)}};
            if (s.doc && pick(s, name).kind == DefKind::Knot) j["certified"] = to_json(certify_genus(knot_of(s, pick(s, name))));
            emit(j);
        };
    });

    std::optional<int> tb_opt, rot_opt;
    std::string bounds_in;
    auto* bd = app.add_subcommand("bounds", "slice-Bennequin lower bounds");
    bd->add_option("input", bounds_in, "knot input (or give --tb and --rot)");
    bd->add_option("--name", name);
    bd->add_option("--tb", tb_opt);
    bd->add_option("--rot", rot_opt);
    bd->callback([&] {
        action = [&] {
            int tb, rot;
            if (!bounds_in.empty()) {
                Source s = load(bounds_in, in);
                const Definition& d = pick(s, name);
                std::pair<int, int> tr;
                if (d.kind == DefKind::Knot) {
                    FrontDiagram f = knot_of(s, d);
                    tr = {f.tb(), f.rot()};
                } else {
                    PatternFront p = pattern_of(s, d);
                    tr = {p.tb(), p.rot()};
                }
                tb = tr.first;
                rot = tr.second;
            } else if (tb_opt && rot_opt) {
                tb = *tb_opt;
                rot = *rot_opt;
            } else {
                throw UsageError("bounds needs an input or both --tb and --rot");
            }
            Json j = to_json(sb_bounds(tb, rot));
            j["tb"] = tb;
            j["rot"] = rot;
            emit(j);
        };
    });

    std::string type = "P", variant = "a";
    int j_param = 1;
    auto* fam = app.add_subcommand("family", "generated patterns: P (variant a|b), Q_j, R_j, identity");
    fam->add_option("--type", type, "P, Q, R or identity");
    fam->add_option("--j", j_param, "family parameter");
    fam->add_option("--variant", variant, "a or b, for P");
    fam->callback([&] {
        action = [&] {
            PatternFront p = [&] {
                if (type == "P") {
                    if (variant.size() != 1) throw UsageError("--variant must be a or b");
                    return gen_P(variant[0]);
                }
                if (type == "Q") return gen_Q(j_param);
                if (type == "R") return gen_R(j_param);
                if (type == "identity") return gen_identity();
                throw UsageError("--type must be P, Q, R or identity");
            }();
            Json j = envelope(p);
            j["clasps"] = clasp_count(p);
            emit(j);
        };
    });

    std::string label;
    bool use_clasp = false, require_positive = false;
    auto* sw = app.add_subcommand("switch", "switch one crossing of the PD code");
    sw->add_option("input", input)->required();
    sw->add_option("--name", name);
    sw->add_option("--label", label, "crossing tag");
    sw->add_flag("--clasp", use_clasp, "switch the designated clasp crossing");
    sw->add_flag("--require-positive", require_positive, "fail with AlreadyNegative on a negative crossing");
    sw->callback([&] {
        action = [&] {
            if (use_clasp == !label.empty()) throw UsageError("give exactly one of --label and --clasp");
            Source s = load(input, in);
            std::string target = label;
            if (use_clasp) {
                if (!s.doc) throw UsageError("--clasp needs a tagged knot or pattern, not a PD code");
                const Definition& d = pick(s, name);
                target = d.kind == DefKind::Knot ? target_label(knot_of(s, d).tags())
                                                 : clasp_switch_target(pattern_of(s, d));
            }
            emit(to_json(crossing_switch(pd_of(s, name), target, require_positive || use_clasp)));
        };
    });

    int iterates = 3;
    auto* cert = app.add_subcommand("certificate", "distinctness certificate for P^i(K), i = 0..N");
    cert->add_option("--pattern", pattern_in)->required();
    cert->add_option("--knot", knot_in)->required();
    cert->add_option("--pattern-name", pattern_name);
    cert->add_option("--knot-name", knot_name);
    cert->add_option("--iterates", iterates, "N")->check(CLI::NonNegativeNumber);
    cert->callback([&] {
        action = [&] {
            Source ps = load(pattern_in, in), ks = load(knot_in, in);
            emit(to_json(certificate(pattern_of(ps, pick(ps, pattern_name)), knot_of(ks, pick(ks, knot_name)),
                                     iterates)));
        };
    });

    int count = 200, max_events = 15;
    int status = 0;
    auto* self = app.add_subcommand("selftest", "randomized property checks (seed from LEGCALC_SEED)");
    self->add_option("--count", count)->check(CLI::NonNegativeNumber);
    self->add_option("--max-events", max_events)->check(CLI::Range(2, 40));
    self->callback([&] {
        action = [&] {
            std::uint64_t seed = seed_from_env(1);
            std::size_t failures = 0;
            std::string first = selftest(seed, count, max_events, failures);
            Json j{{"seed", seed}, {"cases", count}, {"failures", failures}};
            j["first_failure"] = failures ? Json(first) : Json(nullptr);
            emit(j);
            if (failures) status = 1;
        };
    });

    std::vector<std::string> argv_store{"legcalc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << "run 'legcalc --help' for usage\n";
        return 2;
    }

    try {
        action();
        return status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        emit(error_json(e));
        return 1;
    } catch (const Json::exception& e) {
        Error wrapped(ErrorCode::ValidationError, std::string("ValidationError: ") + e.what());
        err << wrapped.what() << "\n";
        emit(error_json(wrapped));
        return 1;
    }
}

} // namespace legcalc
