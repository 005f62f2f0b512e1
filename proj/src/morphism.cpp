#include "dgcalc/morphism.hpp"

#include "dgcalc/error.hpp"

namespace dgcalc {

GradedPolynomial DgMorphism::image_of(const std::string& target_var_name) const {
    auto idx = target->table->find(target_var_name);
    if (!idx) throw DgError("morphism: unknown target generator '" + target_var_name + "'");
    return images[*idx];
}

DgMorphism identity_morphism(const ChartPtr& c) {
    DgMorphism m;
    m.name = "id_" + c->name;
    m.source = c;
    m.target = c;
    for (int i = 0; i < c->table->size(); ++i) m.images.push_back(GradedPolynomial::variable(c->table, i));
    return m;
}

GradedPolynomial pullback(const DgMorphism& f, const GradedPolynomial& p) {
    if (*p.table() != *f.target->table) throw DgError("pullback: polynomial not over the morphism target");
    return substitute(p, f.images, f.source->table);
}

Diagnostic check_morphism(const DgMorphism& f) {
    const VarTable& tt = *f.target->table;
    if (static_cast<int>(f.images.size()) != tt.size())
        return Diagnostic::fail("one image per target generator required");
    for (int v = 0; v < tt.size(); ++v) {
        if (*f.images[v].table() != *f.source->table)
            return Diagnostic::fail("image of '" + tt.var(v).name + "' is not over the source");
        if (!is_homogeneous_of(f.images[v], tt.var(v).degree))
            return Diagnostic::fail("degree violation on '" + tt.var(v).name + "'");
    }
    for (int v = 0; v < tt.size(); ++v) {
        GradedPolynomial lhs = pullback(f, f.target->d_value(v));
        GradedPolynomial rhs = f.source->d.apply(f.images[v]);
        if (lhs != rhs)
            return Diagnostic::fail("chain condition fails on '" + tt.var(v).name + "': pullback(D " +
                                    tt.var(v).name + ") = " + lhs.str() + " but D(image) = " + rhs.str());
    }
    return Diagnostic::pass();
}

DgMorphism compose(const DgMorphism& g, const DgMorphism& f) {
    if (*f.target->table != *g.source->table)
        throw DgError("compose: target of inner morphism is not the source of the outer one");
    DgMorphism m;
    m.name = g.name + "." + f.name;
    m.source = f.source;
    m.target = g.target;
    m.images.reserve(g.images.size());
    for (const auto& img : g.images) m.images.push_back(substitute(img, f.images, f.source->table));
    return m;
}

Point image_point(const DgMorphism& f, const Point& p) {
    Point out;
    for (int i : f.target->table->base_indices())
        out[f.target->table->var(i).name] = evaluate_at_core(f.images[i], p);
    return out;
}

}  // namespace dgcalc
