#include "dgcalc/derived.hpp"
#include "dgcalc/error.hpp"
#include "dgcalc/koszul.hpp"
#include "dgcalc/linfty.hpp"
#include "dgcalc/oracle.hpp"
#include "dgcalc/parse.hpp"
#include "dgcalc/tangent.hpp"
#include "dgcalc/workspace.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace dgcalc;

namespace {

constexpr int kOk = 0;
constexpr int kCheckedFalse = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DgError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Session {
    std::vector<std::string> files;
    std::string probes_file;
    Workspace ws;

    void load() {
        ws.load_files(files);
        if (!probes_file.empty())
            for (auto& p : parse_points(read_file(probes_file))) ws.points.push_back(std::move(p));
    }

    ChartPtr pick_chart(const std::string& name) const {
        if (!name.empty()) return ws.chart(name);
        if (ws.charts.size() == 1) return ws.charts.begin()->second;
        throw DgError(ws.charts.empty() ? "no chart loaded"
                                        : "several charts loaded; pick one with --chart");
    }
    const DgMorphism& pick_map(const std::string& name) const {
        if (!name.empty()) return ws.morphism(name);
        if (ws.morphisms.size() == 1) return ws.morphisms.begin()->second;
        throw DgError(ws.morphisms.empty() ? "no map loaded" : "several maps loaded; pick one with --map");
    }
    std::vector<Point> probes(const std::vector<std::string>& point_flags) const {
        std::vector<Point> out = ws.points;
        for (const auto& s : point_flags)
            for (auto& p : parse_points("point " + s)) out.push_back(std::move(p));
        if (out.empty()) throw DgError("no probe points given (use --point or --probes)");
        return out;
    }
};

size_t oracle_cap() {
    if (const char* env = std::getenv("DGCALC_ORACLE_CAP")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<size_t>(v);
    }
    return 200000;
}

std::map<std::string, int> parse_weights(const std::string& s) {
    std::map<std::string, int> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw DgError("weights: expected name=value, got '" + item + "'");
        std::string name = item.substr(0, eq);
        while (!name.empty() && name.front() == ' ') name.erase(name.begin());
        while (!name.empty() && name.back() == ' ') name.pop_back();
        out[name] = std::stoi(item.substr(eq + 1));
    }
    return out;
}

std::string describe_point(const Point& p) {
    std::string s = print_point(p);
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation engine for dg-charts"};
    app.require_subcommand(1);

    Session session;
    std::string chart_name, map_name, left_name, right_name, section_name, linfty_name, result_name;
    std::vector<std::string> point_flags, elements, fresh_names;
    int max_base_degree = 4, window_min = -3, weight = 0;
    std::string weights_flag;

    auto add_common = [&](CLI::App* cmd, bool with_probes = false) {
        cmd->add_option("files", session.files, "input files (charts, maps, sections, linfty, points)");
        if (with_probes) cmd->add_option("--probes", session.probes_file, "point set file");
    };

    auto* c_validate = app.add_subcommand("validate", "check a chart file");
    c_validate->add_option("files", session.files)->required();

    auto* c_h0 = app.add_subcommand("h0", "classical locus presentation");
    add_common(c_h0);
    c_h0->add_option("--chart", chart_name);

    auto* c_classical = app.add_subcommand("classical", "test classical points");
    add_common(c_classical, true);
    c_classical->add_option("--chart", chart_name);
    c_classical->add_option("--point", point_flags, "inline point, e.g. \"x=0, y=1\"");

    auto* c_tangent = app.add_subcommand("tangent", "tangent complex at a classical point");
    add_common(c_tangent, true);
    c_tangent->add_option("--chart", chart_name);
    c_tangent->add_option("--point", point_flags);

    auto* c_cohomology = app.add_subcommand("cohomology", "bounded cohomology oracle");
    add_common(c_cohomology);
    c_cohomology->add_option("--chart", chart_name);
    c_cohomology->add_option("--max-base-degree", max_base_degree);
    c_cohomology->add_option("--window", window_min, "lowest cohomological degree");
    c_cohomology->add_option("--weights", weights_flag, "generator weights, e.g. \"x=1,xi=2\"");
    c_cohomology->add_option("--weight", weight, "restrict to this exact weight");

    auto* c_koszul = app.add_subcommand("koszul", "extend a chart by closed elements");
    add_common(c_koszul);
    c_koszul->add_option("--chart", chart_name);
    c_koszul->add_option("--element", elements)->required();
    c_koszul->add_option("--name", fresh_names)->required();

    auto* c_zero = app.add_subcommand("zero-locus", "shifted zero locus of a section");
    add_common(c_zero);
    c_zero->add_option("--section", section_name);

    auto* c_factorize = app.add_subcommand("factorize", "explicit factorization of a map");
    add_common(c_factorize);
    c_factorize->add_option("--map", map_name);

    auto* c_pullback = app.add_subcommand("pullback", "homotopy pullback of two maps");
    add_common(c_pullback);
    c_pullback->add_option("--left", left_name)->required();
    c_pullback->add_option("--right", right_name)->required();
    c_pullback->add_option("--name", result_name);

    auto* c_decompose = app.add_subcommand("decompose", "tower of shifted zero loci");
    add_common(c_decompose);
    c_decompose->add_option("--chart", chart_name);

    auto* c_weq = app.add_subcommand("weq", "pointwise weak equivalence test");
    add_common(c_weq, true);
    c_weq->add_option("--map", map_name);
    c_weq->add_option("--point", point_flags);

    auto* c_l2c = app.add_subcommand("linfty-to-chart", "dual dg-chart of structure constants");
    add_common(c_l2c);
    c_l2c->add_option("--linfty", linfty_name);

    auto* c_c2l = app.add_subcommand("chart-to-linfty", "structure constants of a chart");
    add_common(c_c2l);
    c_c2l->add_option("--chart", chart_name);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_validate->parsed()) {
            if (session.files.size() != 1) throw DgError("validate expects exactly one chart file");
            ParsedChart parsed = parse_chart_text(read_file(session.files[0]));
            Diagnostic d = validate_chart(parsed.chart);
            if (d.ok) {
                std::cout << "ok " << parsed.chart.name << "\n";
                return kOk;
            }
            std::cout << "invalid " << parsed.chart.name << ": " << d.message << "\n";
            return kCheckedFalse;
        }

        session.load();

        if (c_h0->parsed()) {
            ChartPtr c = session.pick_chart(chart_name);
            IdealPresentation ideal = classical_locus_ideal(*c);
            std::cout << "ambient";
            for (const auto& v : ideal.ambient) std::cout << " " << v;
            std::cout << "\n";
            for (const auto& g : ideal.generators) std::cout << "gen " << g.str() << "\n";
            return kOk;
        }
        if (c_classical->parsed()) {
            ChartPtr c = session.pick_chart(chart_name);
            bool all = true;
            for (const auto& p : session.probes(point_flags)) {
                bool yes = is_classical_point(*c, p);
                all = all && yes;
                std::cout << (yes ? "classical " : "nonclassical ") << describe_point(p) << "\n";
            }
            return all ? kOk : kCheckedFalse;
        }
        if (c_tangent->parsed()) {
            ChartPtr c = session.pick_chart(chart_name);
            for (const auto& p : session.probes(point_flags)) {
                std::cout << "at " << describe_point(p) << "\n";
                CochainComplex tc = tangent_complex(*c, p);
                std::cout << "dims";
                for (int d : tc.dims) std::cout << " " << d;
                std::cout << "\n";
                for (size_t k = 0; k < tc.d.size(); ++k) {
                    std::cout << "d" << k << " rows " << tc.d[k].rows() << " cols " << tc.d[k].cols()
                              << "\n";
                    for (int i = 0; i < tc.d[k].rows(); ++i) {
                        std::cout << "row";
                        for (int j = 0; j < tc.d[k].cols(); ++j) std::cout << " " << tc.d[k].at(i, j).str();
                        std::cout << "\n";
                    }
                }
                std::cout << "h";
                for (int h : cohomology_dims(tc)) std::cout << " " << h;
                std::cout << "\n";
            }
            return kOk;
        }
        if (c_cohomology->parsed()) {
            ChartPtr c = session.pick_chart(chart_name);
            TruncationSpec spec;
            spec.max_base_degree = max_base_degree;
            spec.window_min = window_min;
            spec.basis_cap = oracle_cap();
            if (!weights_flag.empty()) spec.weights = parse_weights(weights_flag);
            if (weight != 0) spec.selected_weight = weight;
            OracleResult r = bounded_cohomology(*c, spec);
            for (const auto& row : r.per_degree)
                std::cout << "degree " << row.degree << ": h=" << row.h
                          << (row.stable ? " stable" : " unstable") << "\n";
            return kOk;
        }
        if (c_koszul->parsed()) {
            ChartPtr c = session.pick_chart(chart_name);
            if (elements.size() != fresh_names.size())
                throw DgError("need as many --name flags as --element flags");
            std::vector<KoszulElement> els;
            for (size_t i = 0; i < elements.size(); ++i)
                els.push_back({parse_polynomial(elements[i], c->table), fresh_names[i]});
            DgChart k = koszul(*c, els, c->name + "_koszul");
            std::cout << print_chart(k);
            return kOk;
        }
        if (c_zero->parsed()) {
            const Section* s = nullptr;
            if (!section_name.empty()) {
                s = &session.ws.section(section_name);
            } else if (session.ws.sections.size() == 1) {
                s = &session.ws.sections.begin()->second;
                section_name = session.ws.sections.begin()->first;
            } else {
                throw DgError("pick a section with --section");
            }
            DgChart z = shifted_zero_locus(*s, s->chart->name + "_zero_" + section_name);
            std::cout << print_chart(z);
            return kOk;
        }
        if (c_factorize->parsed()) {
            const DgMorphism& f = session.pick_map(map_name);
            FactorizationResult fact = factorize(f);
            std::cout << print_chart(*fact.middle);
            std::cout << print_morphism(fact.q);
            std::cout << print_morphism(fact.r);
            std::cout << print_morphism(fact.section);
            for (int v = 0; v < fact.middle->table->size(); ++v)
                if (!fact.homotopy.value(v).is_zero())
                    std::cout << "gamma " << fact.middle->table->var(v).name << " = "
                              << fact.homotopy.value(v).str() << "\n";
            return kOk;
        }
        if (c_pullback->parsed()) {
            const DgMorphism& f = session.ws.morphism(left_name);
            const DgMorphism& g = session.ws.morphism(right_name);
            PullbackResult pb = homotopy_pullback(
                f, g, result_name.empty() ? f.source->name + "_x_" + g.source->name : result_name);
            std::cout << print_chart(*pb.chart);
            std::cout << print_morphism(pb.to_left);
            std::cout << print_morphism(pb.to_right);
            return kOk;
        }
        if (c_decompose->parsed()) {
            ChartPtr c = session.pick_chart(chart_name);
            Decomposition d = decompose(*c);
            std::cout << "amplitude " << c->amplitude() << "\n";
            for (size_t k = 0; k < d.stages.size(); ++k) {
                std::cout << print_chart(d.stages[k].chart);
                std::cout << print_section(c->name + "_lambda" + std::to_string(k), d.stages[k].next);
            }
            std::cout << print_chart(d.rebuilt);
            bool iso_ok = check_morphism(d.to_input).ok && check_morphism(d.from_input).ok;
            std::cout << "rebuild " << (iso_ok ? "isomorphic" : "FAILED") << "\n";
            return iso_ok ? kOk : kCheckedFalse;
        }
        if (c_weq->parsed()) {
            const DgMorphism& f = session.pick_map(map_name);
            std::vector<Point> probes = session.probes(point_flags);
            ProbeVerdict v = is_pointwise_weq(f, probes);
            std::cout << "checked tangent data at " << probes.size()
                      << " probe(s); classical-locus bijection not decided\n";
            if (v.ok) {
                std::cout << "weq yes\n";
                return kOk;
            }
            std::cout << "weq no at " << describe_point(*v.witness) << "\n";
            return kCheckedFalse;
        }
        if (c_l2c->parsed()) {
            const CurvedLInfty* l = nullptr;
            if (!linfty_name.empty()) {
                l = &session.ws.linfty_data(linfty_name);
            } else if (session.ws.linfty.size() == 1) {
                l = &session.ws.linfty.begin()->second;
            } else {
                throw DgError("pick structure constants with --linfty");
            }
            DgChart c = to_dg_chart(*l);
            LInftyVerdict v = check_linfty(*l);
            std::cout << print_chart(c);
            if (v.ok)
                std::cout << "# linfty-check: ok\n";
            else
                std::cout << "# linfty-check: fails at arity " << v.failing_arity << " on "
                          << v.generator << " (residue " << v.residue << ")\n";
            return kOk;
        }
        if (c_c2l->parsed()) {
            ChartPtr c = session.pick_chart(chart_name);
            std::cout << print_linfty(from_dg_chart(*c));
            return kOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const DgError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
