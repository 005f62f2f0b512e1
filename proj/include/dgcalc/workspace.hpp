#pragma once

#include "dgcalc/chart.hpp"
#include "dgcalc/derived.hpp"
#include "dgcalc/linfty.hpp"
#include "dgcalc/morphism.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgcalc {

/// Named objects loaded from input files. Every object passes its validator
/// before registration; names are unique per kind.
struct Workspace {
    std::map<std::string, ChartPtr> charts;
    std::map<std::string, DgMorphism> morphisms;
    std::map<std::string, Section> sections;
    std::map<std::string, CurvedLInfty> linfty;
    std::vector<Point> points;

    /// Sniffs the file kind from the first keyword (chart / map / section /
    /// linfty / point). Throws ParseError or DgError on bad input.
    void load_text(const std::string& text, const std::string& origin);
    void load_file(const std::string& path);

    /// Load a batch of files in dependency order (charts, points and
    /// structure constants first, then sections and maps), so the order on
    /// the command line does not matter.
    void load_files(const std::vector<std::string>& paths);

    ChartPtr chart(const std::string& name) const;
    const DgMorphism& morphism(const std::string& name) const;
    const Section& section(const std::string& name) const;
    const CurvedLInfty& linfty_data(const std::string& name) const;
};

}  // namespace dgcalc
