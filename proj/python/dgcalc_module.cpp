#include "dgcalc/derived.hpp"
#include "dgcalc/error.hpp"
#include "dgcalc/koszul.hpp"
#include "dgcalc/linfty.hpp"
#include "dgcalc/oracle.hpp"
#include "dgcalc/parse.hpp"
#include "dgcalc/tangent.hpp"
#include "dgcalc/workspace.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dgcalc;

namespace {

Point to_point(const std::map<std::string, std::string>& values) {
    Point p;
    for (const auto& [k, v] : values) p[k] = Rational::from_string(v);
    return p;
}

py::dict tangent_dict(const CochainComplex& tc) {
    py::dict out;
    out["dims"] = tc.dims;
    out["h"] = cohomology_dims(tc);
    py::list mats;
    for (const auto& m : tc.d) {
        py::list rows;
        for (int i = 0; i < m.rows(); ++i) {
            py::list row;
            for (int j = 0; j < m.cols(); ++j) row.append(m.at(i, j).str());
            rows.append(row);
        }
        mats.append(rows);
    }
    out["d"] = mats;
    return out;
}

}  // namespace

PYBIND11_MODULE(_dgcalc, m) {
    m.doc() = "exact computation engine for dg-charts";

    py::register_exception<DgError>(m, "DgError");
    py::register_exception<ParseError>(m, "ChartParseError");

    m.def("validate_chart", [](const std::string& text) {
        ParsedChart parsed = parse_chart_text(text);
        Diagnostic d = validate_chart(parsed.chart);
        return py::make_tuple(d.ok, d.message);
    });

    m.def("classical_ideal", [](const std::string& text) {
        DgChart c = parse_chart(text);
        IdealPresentation ideal = classical_locus_ideal(c);
        std::vector<std::string> gens;
        for (const auto& g : ideal.generators) gens.push_back(g.str());
        return py::make_tuple(ideal.ambient, gens);
    });

    m.def("is_classical_point",
          [](const std::string& text, const std::map<std::string, std::string>& point) {
              return is_classical_point(parse_chart(text), to_point(point));
          });

    m.def("tangent", [](const std::string& text, const std::map<std::string, std::string>& point) {
        DgChart c = parse_chart(text);
        return tangent_dict(tangent_complex(c, to_point(point)));
    });

    m.def(
        "cohomology",
        [](const std::string& text, int max_base_degree, int window_min) {
            DgChart c = parse_chart(text);
            TruncationSpec spec;
            spec.max_base_degree = max_base_degree;
            spec.window_min = window_min;
            OracleResult r = bounded_cohomology(c, spec);
            py::dict out;
            for (const auto& row : r.per_degree)
                out[py::int_(row.degree)] = py::make_tuple(row.h, row.stable);
            return out;
        },
        py::arg("chart"), py::arg("max_base_degree") = 4, py::arg("window_min") = -3);

    m.def("koszul", [](const std::string& text, const std::vector<std::pair<std::string, std::string>>&
                                                    elements) {
        DgChart base = parse_chart(text);
        std::vector<KoszulElement> els;
        for (const auto& [expr, name] : elements) els.push_back({parse_polynomial(expr, base.table), name});
        return print_chart(koszul(base, els, base.name + "_koszul"));
    });

    m.def("factorize", [](const std::string& source_chart, const std::string& target_chart,
                          const std::string& map_text) {
        Workspace ws;
        ws.load_text(source_chart, "<source>");
        ws.load_text(target_chart, "<target>");
        ws.load_text(map_text, "<map>");
        const DgMorphism& f = ws.morphisms.begin()->second;
        FactorizationResult fact = factorize(f);
        py::dict out;
        out["middle"] = print_chart(*fact.middle);
        out["q"] = print_morphism(fact.q);
        out["r"] = print_morphism(fact.r);
        out["section"] = print_morphism(fact.section);
        return out;
    });

    m.def("is_pointwise_weq",
          [](const std::string& source_chart, const std::string& target_chart, const std::string& map_text,
             const std::vector<std::map<std::string, std::string>>& probes) {
              Workspace ws;
              ws.load_text(source_chart, "<source>");
              ws.load_text(target_chart, "<target>");
              ws.load_text(map_text, "<map>");
              std::vector<Point> pts;
              for (const auto& p : probes) pts.push_back(to_point(p));
              ProbeVerdict v = is_pointwise_weq(ws.morphisms.begin()->second, pts);
              return py::make_tuple(v.ok, v.ok ? std::string() : print_point(*v.witness));
          });

    m.def("decompose", [](const std::string& text) {
        DgChart c = parse_chart(text);
        Decomposition d = decompose(c);
        py::list stages;
        for (const auto& stage : d.stages) stages.append(print_chart(stage.chart));
        return py::make_tuple(stages, print_chart(d.rebuilt));
    });

    m.def("chart_to_linfty", [](const std::string& text) {
        return print_linfty(from_dg_chart(parse_chart(text)));
    });

    m.def("linfty_to_chart", [](const std::string& text) {
        CurvedLInfty l = parse_linfty(text);
        Diagnostic ok = l.check_structure();
        if (!ok.ok) throw DgError(ok.message);
        LInftyVerdict v = check_linfty(l);
        return py::make_tuple(print_chart(to_dg_chart(l)), v.ok, v.failing_arity);
    });
}
