#pragma once

#include "dgcalc/derivation.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dgcalc {

/// A dg-manifold in split global coordinates: degree-0 base variables,
/// fiber variables of degree <= -1, and a degree +1 vector field D given on
/// generators. Construction does not force D^2 = 0; validate_chart decides.
struct DgChart {
    std::string name;
    VarTablePtr table;
    Derivation d;

    DgChart() = default;  // empty placeholder, not usable until assigned
    DgChart(std::string name, VarTablePtr table, Derivation d);

    const GradedPolynomial& d_value(int var) const { return d.value(var); }
    int amplitude() const { return table->amplitude(); }
};

using ChartPtr = std::shared_ptr<const DgChart>;

/// Convenience builder: variables plus named D-values (missing names mean 0).
DgChart make_chart(const std::string& name, std::vector<GradedVariable> vars,
                   const std::vector<std::pair<std::string, std::string>>& d_exprs = {});

ChartPtr make_chart_ptr(DgChart c);

/// First violated invariant, or ok: degree bookkeeping, then D^2 = 0.
Diagnostic validate_chart(const DgChart& c);

/// Presentation of H^0 of the chart's function algebra: the base polynomial
/// ring modulo the D-values of the degree -1 fiber variables. Never reduced
/// to a normal form.
struct IdealPresentation {
    std::vector<std::string> ambient;          // base variable names
    std::vector<GradedPolynomial> generators;  // fiber-free degree-0 polynomials
};
IdealPresentation classical_locus_ideal(const DgChart& c);

/// True iff every ideal generator vanishes at the point.
bool is_classical_point(const DgChart& c, const Point& p);

struct DgMorphism;

/// Categorical product: disjoint union of variables, sum of differentials.
/// Throws DgError on a generator name clash.
struct ProductResult {
    ChartPtr chart;
    // projections are filled by product(); see morphism.hpp for the type
    std::shared_ptr<DgMorphism> to_left, to_right;
};
ProductResult product(const ChartPtr& a, const ChartPtr& b, const std::string& name);

}  // namespace dgcalc
