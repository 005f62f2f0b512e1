#include "dgcalc/chart.hpp"

#include "dgcalc/error.hpp"
#include "dgcalc/morphism.hpp"
#include "dgcalc/parse.hpp"

namespace dgcalc {

DgChart::DgChart(std::string name_, VarTablePtr table_, Derivation d_)
    : name(std::move(name_)), table(std::move(table_)), d(std::move(d_)) {
    if (*d.table() != *table) throw DgError("chart differential lives on a different universe");
}

DgChart make_chart(const std::string& name, std::vector<GradedVariable> vars,
                   const std::vector<std::pair<std::string, std::string>>& d_exprs) {
    VarTablePtr table = make_table(std::move(vars));
    std::vector<GradedPolynomial> values(table->size(), GradedPolynomial::zero(table));
    for (const auto& [var, expr] : d_exprs) {
        auto idx = table->find(var);
        if (!idx) throw DgError("d-value for unknown generator '" + var + "'");
        values[*idx] = parse_polynomial(expr, table);
    }
    return DgChart(name, table, Derivation(table, 1, std::move(values)));
}

ChartPtr make_chart_ptr(DgChart c) { return std::make_shared<const DgChart>(std::move(c)); }

Diagnostic validate_chart(const DgChart& c) {
    if (c.d.degree() != 1)
        return Diagnostic::fail("differential has degree " + std::to_string(c.d.degree()) + ", expected +1");
    Diagnostic deg = c.d.check_degrees();
    if (!deg.ok) return Diagnostic::fail("degree violation: " + deg.message);
    CohomologicalCheck sq = is_cohomological(c.d);
    if (!sq.ok) {
        std::string msg = "not cohomological: " + sq.reason;
        if (sq.residue) msg += " (residue " + sq.residue->str() + ")";
        return Diagnostic::fail(msg);
    }
    return Diagnostic::pass();
}

IdealPresentation classical_locus_ideal(const DgChart& c) {
    IdealPresentation out;
    for (int i : c.table->base_indices()) out.ambient.push_back(c.table->var(i).name);
    for (int i : c.table->level_indices(1)) out.generators.push_back(c.d_value(i));
    return out;
}

bool is_classical_point(const DgChart& c, const Point& p) {
    for (int i : c.table->base_indices())
        if (!p.count(c.table->var(i).name))
            throw DgError("point does not assign base variable '" + c.table->var(i).name + "'");
    for (const auto& g : classical_locus_ideal(c).generators)
        if (!evaluate_at_core(g, p).is_zero()) return false;
    return true;
}

ProductResult product(const ChartPtr& a, const ChartPtr& b, const std::string& name) {
    std::vector<GradedVariable> vars;
    for (int i = 0; i < a->table->size(); ++i) vars.push_back(a->table->var(i));
    for (int i = 0; i < b->table->size(); ++i) {
        if (a->table->find(b->table->var(i).name))
            throw DgError("product: generator name clash on '" + b->table->var(i).name + "'");
        vars.push_back(b->table->var(i));
    }
    VarTablePtr table = make_table(std::move(vars));
    std::vector<GradedPolynomial> values(table->size(), GradedPolynomial::zero(table));
    for (int i = 0; i < a->table->size(); ++i)
        values[*table->find(a->table->var(i).name)] = lift(a->d_value(i), table);
    for (int i = 0; i < b->table->size(); ++i)
        values[*table->find(b->table->var(i).name)] = lift(b->d_value(i), table);
    ChartPtr chart = make_chart_ptr(DgChart(name, table, Derivation(table, 1, std::move(values))));

    auto projection = [&](const ChartPtr& tgt, const std::string& pname) {
        DgMorphism m;
        m.name = pname;
        m.source = chart;
        m.target = tgt;
        for (int i = 0; i < tgt->table->size(); ++i)
            m.images.push_back(GradedPolynomial::variable(table, *table->find(tgt->table->var(i).name)));
        return m;
    };
    ProductResult out;
    out.chart = chart;
    out.to_left = std::make_shared<DgMorphism>(projection(a, name + "_pr1"));
    out.to_right = std::make_shared<DgMorphism>(projection(b, name + "_pr2"));
    return out;
}

}  // namespace dgcalc
