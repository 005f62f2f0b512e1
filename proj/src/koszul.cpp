#include "dgcalc/koszul.hpp"

#include "dgcalc/error.hpp"

#include <set>

namespace dgcalc {

DgChart koszul(const DgChart& base, const std::vector<KoszulElement>& elements,
               const std::string& result_name) {
    std::set<std::string> names;
    for (int i = 0; i < base.table->size(); ++i) names.insert(base.table->var(i).name);

    std::vector<GradedVariable> vars;
    for (int i = 0; i < base.table->size(); ++i) vars.push_back(base.table->var(i));
    for (const auto& el : elements) {
        if (*el.element.table() != *base.table)
            throw DgError("koszul: element not over the base chart");
        Homogeneity h = homogeneous_degree(el.element);
        if (h.kind == Homogeneity::kInhomogeneous)
            throw DgError("koszul: element '" + el.element.str() + "' is not homogeneous");
        int deg = h.kind == Homogeneity::kZeroPolynomial ? 0 : h.degree;
        if (deg > 0) throw DgError("koszul: element degree must be <= 0");
        if (!base.d.apply(el.element).is_zero())
            throw DgError("koszul: element '" + el.element.str() + "' is not D-closed");
        if (!names.insert(el.fresh_name).second)
            throw DgError("koszul: generator name '" + el.fresh_name + "' already taken");
        vars.push_back({el.fresh_name, deg - 1});
    }

    VarTablePtr table = make_table(std::move(vars));
    std::vector<GradedPolynomial> values(table->size(), GradedPolynomial::zero(table));
    for (int i = 0; i < base.table->size(); ++i)
        values[*table->find(base.table->var(i).name)] = lift(base.d_value(i), table);
    for (const auto& el : elements)
        values[*table->find(el.fresh_name)] = lift(el.element, table);
    return DgChart(result_name, table, Derivation(table, 1, std::move(values)));
}

}  // namespace dgcalc
