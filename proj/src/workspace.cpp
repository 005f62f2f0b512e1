#include "dgcalc/workspace.hpp"

#include "dgcalc/error.hpp"
#include "dgcalc/parse.hpp"

#include <fstream>
#include <sstream>

namespace dgcalc {

namespace {

std::string first_keyword(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string word;
        if (ls >> word) {
            if (word[0] == '#') continue;
            return word;
        }
    }
    return "";
}

}  // namespace

void Workspace::load_text(const std::string& text, const std::string& origin) {
    std::string kind = first_keyword(text);
    if (kind == "chart") {
        DgChart c = parse_chart(text);
        std::string name = c.name;
        if (charts.count(name)) throw DgError(origin + ": duplicate chart name '" + name + "'");
        charts.emplace(name, make_chart_ptr(std::move(c)));
    } else if (kind == "map") {
        DgMorphism m = parse_morphism(text, *this);
        Diagnostic ok = check_morphism(m);
        if (!ok.ok) throw DgError(origin + ": morphism '" + m.name + "' invalid: " + ok.message);
        std::string name = m.name;
        if (morphisms.count(name)) throw DgError(origin + ": duplicate map name '" + name + "'");
        morphisms.emplace(name, std::move(m));
    } else if (kind == "section") {
        NamedSection s = parse_section(text, *this);
        Diagnostic ok = check_section(s.section);
        if (!ok.ok) throw DgError(origin + ": section '" + s.name + "' invalid: " + ok.message);
        if (sections.count(s.name)) throw DgError(origin + ": duplicate section name '" + s.name + "'");
        sections.emplace(s.name, std::move(s.section));
    } else if (kind == "linfty") {
        CurvedLInfty l = parse_linfty(text);
        Diagnostic ok = l.check_structure();
        if (!ok.ok) throw DgError(origin + ": linfty '" + l.name + "' invalid: " + ok.message);
        std::string name = l.name;
        if (linfty.count(name)) throw DgError(origin + ": duplicate linfty name '" + name + "'");
        linfty.emplace(name, std::move(l));
    } else if (kind == "point") {
        for (auto& p : parse_points(text)) points.push_back(std::move(p));
    } else {
        throw DgError(origin + ": unrecognized input (expected chart/map/section/linfty/point)");
    }
}

void Workspace::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DgError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    load_text(buf.str(), path);
}

void Workspace::load_files(const std::vector<std::string>& paths) {
    std::vector<std::pair<std::string, std::string>> texts;
    for (const auto& p : paths) {
        std::ifstream in(p, std::ios::binary);
        if (!in) throw DgError("cannot open '" + p + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        texts.emplace_back(p, buf.str());
    }
    auto pass = [&](auto pred) {
        for (const auto& [path, text] : texts)
            if (pred(first_keyword(text))) load_text(text, path);
    };
    pass([](const std::string& k) { return k != "map" && k != "section"; });
    pass([](const std::string& k) { return k == "section"; });
    pass([](const std::string& k) { return k == "map"; });
}

ChartPtr Workspace::chart(const std::string& name) const {
    auto it = charts.find(name);
    if (it == charts.end()) throw DgError("no chart named '" + name + "'");
    return it->second;
}

const DgMorphism& Workspace::morphism(const std::string& name) const {
    auto it = morphisms.find(name);
    if (it == morphisms.end()) throw DgError("no map named '" + name + "'");
    return it->second;
}

const Section& Workspace::section(const std::string& name) const {
    auto it = sections.find(name);
    if (it == sections.end()) throw DgError("no section named '" + name + "'");
    return it->second;
}

const CurvedLInfty& Workspace::linfty_data(const std::string& name) const {
    auto it = linfty.find(name);
    if (it == linfty.end()) throw DgError("no linfty data named '" + name + "'");
    return it->second;
}

}  // namespace dgcalc
