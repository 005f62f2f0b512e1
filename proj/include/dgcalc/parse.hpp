#pragma once

#include "dgcalc/chart.hpp"
#include "dgcalc/derived.hpp"
#include "dgcalc/linfty.hpp"
#include "dgcalc/morphism.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgcalc {

/// Expression grammar: integers, rationals a/b, identifiers, + - * ^ and
/// parentheses; juxtaposition is not multiplication; ^ applies to a single
/// variable with a nonnegative integer exponent.
GradedPolynomial parse_polynomial(const std::string& text, const VarTablePtr& table);

struct ParsedChart {
    DgChart chart;
    std::map<std::string, int> d_lines;  // generator -> line of its `d` statement
    int header_line = 1;
};

/// Chart grammar, one statement per line, comments with '#':
///   chart <name>
///   base <id> ...
///   gen <id> : <negative-int>
///   d <id> = <poly-expr>        (omitted means 0)
ParsedChart parse_chart_text(const std::string& text);

/// parse_chart_text followed by validate_chart; validation failures are
/// reported as ParseError at the offending `d` line.
DgChart parse_chart(const std::string& text);

struct Workspace;

/// Morphism grammar:
///   map <name> : <source-chart> -> <target-chart>
///   send <target-generator> = <poly-expr>   (omitted means 0)
DgMorphism parse_morphism(const std::string& text, const Workspace& ws);

/// One probe per line: `point <id>=<rational>, ...`
std::vector<Point> parse_points(const std::string& text);

/// Section grammar:
///   section <name> over <chart>
///   slot <id> : <nonpositive-int>
///   val <id> = <poly-expr>      (omitted means 0)
struct NamedSection {
    std::string name;
    Section section;
};
NamedSection parse_section(const std::string& text, const Workspace& ws);

/// Structure-constant grammar:
///   linfty <name>
///   base <id> ...
///   elem <id> : <positive-int>
///   bracket <out> <= <in1> <in2> ... : <poly-expr>
CurvedLInfty parse_linfty(const std::string& text);

std::string print_polynomial(const GradedPolynomial& p);
std::string print_chart(const DgChart& c);
std::string print_morphism(const DgMorphism& f);
std::string print_section(const std::string& name, const Section& s);
std::string print_linfty(const CurvedLInfty& l);
std::string print_point(const Point& p);

}  // namespace dgcalc
