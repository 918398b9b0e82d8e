#include "legcalc/bounds.hpp"
#include "legcalc/cli.hpp"
#include "legcalc/dsl.hpp"
#include "legcalc/io.hpp"
#include "legcalc/satellite.hpp"
#include "legcalc/topo.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace legcalc;

namespace {

std::vector<MorseEvent> events_from(const std::vector<std::string>& words) {
    DslDocument doc = parse_syntax("knot w { events: " + [&] {
        std::string s;
        for (const auto& w : words) s += w + " ";
        return s;
    }() + "; }");
    return doc.defs[0].events;
}

std::vector<std::string> words_of(const std::vector<MorseEvent>& events) {
    std::vector<std::string> out;
    for (const auto& e : events) out.push_back(to_string(e));
    return out;
}

py::dict raw(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Legendrian fronts, satellite operators and Alexander polynomials";

    static py::exception<Error> error(m, "LegcalcError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object cls = error;
            py::object exc = cls(e.what());
            exc.attr("code") = std::string(error_name(e.code()));
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    py::class_<FrontDiagram>(m, "FrontDiagram")
        .def(py::init([](const std::vector<std::string>& events, bool reversed) {
                 return FrontDiagram::make(events_from(events), {}, reversed);
             }),
             py::arg("events"), py::arg("reversed") = false)
        .def_property_readonly("events", [](const FrontDiagram& f) { return words_of(f.events()); })
        .def_property_readonly("tb", &FrontDiagram::tb)
        .def_property_readonly("rot", &FrontDiagram::rot)
        .def_property_readonly("writhe", &FrontDiagram::writhe)
        .def_property_readonly("cusps", &FrontDiagram::cusps)
        .def_property_readonly("crossings", &FrontDiagram::crossings)
        .def("stabilize",
             [](const FrontDiagram& f, int sign, std::optional<int> edge) {
                 return stabilize(f, sign, edge.value_or(f.start_segment()));
             },
             py::arg("sign"), py::arg("edge") = py::none())
        .def("reverse", [](const FrontDiagram& f) { return reverse(f); })
        .def("alexander", [](const FrontDiagram& f) { return alexander(smooth(f)).to_string(); })
        .def("pd_code", [](const FrontDiagram& f) { return raw(to_json(smooth(f))); })
        .def("seifert_genus_upper", [](const FrontDiagram& f) { return seifert_genus_upper(smooth(f)); })
        .def("__repr__", [](const FrontDiagram& f) { return "FrontDiagram([" + to_string(f.events()) + "])"; });

    py::class_<PatternFront>(m, "PatternFront")
        .def(py::init([](int strands, const std::vector<int>& orient, const std::vector<std::string>& events,
                         const std::string& name) {
                 return PatternFront::make(strands, orient, events_from(events), {}, name);
             }),
             py::arg("strands"), py::arg("orient"), py::arg("events"), py::arg("name") = "pattern")
        .def_property_readonly("events", [](const PatternFront& p) { return words_of(p.events()); })
        .def_property_readonly("name", &PatternFront::name)
        .def_property_readonly("strands", &PatternFront::seams)
        .def_property_readonly("orient", &PatternFront::seam_orient)
        .def_property_readonly("tb", &PatternFront::tb)
        .def_property_readonly("rot", &PatternFront::rot)
        .def_property_readonly("w", &PatternFront::winding)
        .def_property_readonly("crossings", &PatternFront::crossings)
        .def("closure_alexander", [](const PatternFront& p) { return alexander(closure(p)).to_string(); })
        .def("clasp_switch_target", &clasp_switch_target)
        .def("__repr__", [](const PatternFront& p) { return "PatternFront(" + p.name() + ")"; });

    m.def("gen_identity", &gen_identity);
    m.def("gen_P", [](const std::string& v) {
        if (v.size() != 1) throw Error(ErrorCode::BadParameter, "BadParameter: P variant must be a or b");
        return gen_P(v[0]);
    });
    m.def("gen_Q", &gen_Q);
    m.def("gen_R", &gen_R);
    m.def("satellite",
          [](const PatternFront& p, const FrontDiagram& k, bool allow_twist) {
              return satellite(p, k, allow_twist).diagram;
          },
          py::arg("pattern"), py::arg("knot"), py::arg("allow_twist") = false);
    m.def("compose", [](const PatternFront& p, const PatternFront& q) { return compose(p, q).diagram; });
    m.def("iterate", [](const PatternFront& p, int i) { return iterate(p, i).diagram; });
    m.def("sb_bounds", [](int tb, int rot) { return raw(to_json(sb_bounds(tb, rot))); });
    m.def("certificate", [](const PatternFront& p, const FrontDiagram& k, int n) {
        return raw(to_json(certificate(p, k, n)));
    });
    m.def("parse", [](const std::string& text) { return serialize(parse(text)); },
          "validate a DSL document and return its canonical form");
    m.def("run",
          [](const std::vector<std::string>& args, const std::string& input) {
              std::istringstream in(input);
              std::ostringstream out, err;
              int code = dispatch(args, in, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), py::arg("stdin") = "");
}
