#include "dgcalc/derivation.hpp"

#include "dgcalc/error.hpp"

namespace dgcalc {

Derivation::Derivation(VarTablePtr table, int degree, std::vector<GradedPolynomial> values)
    : table_(std::move(table)), degree_(degree), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != table_->size())
        throw DgError("derivation needs one value per generator");
}

Derivation Derivation::zero(VarTablePtr table, int degree) {
    std::vector<GradedPolynomial> values(table->size(), GradedPolynomial::zero(table));
    return Derivation(std::move(table), degree, std::move(values));
}

GradedPolynomial Derivation::apply(const GradedPolynomial& p) const {
    if (*p.table() != *table_) throw DgError("derivation applied across variable universes");
    GradedPolynomial r = GradedPolynomial::zero(table_);
    for (int v = 0; v < table_->size(); ++v) {
        if (values_[v].is_zero()) continue;
        GradedPolynomial dv = left_partial(p, v);
        if (dv.is_zero()) continue;
        r = r + values_[v] * dv;
    }
    return r;
}

Diagnostic Derivation::check_degrees() const {
    for (int v = 0; v < table_->size(); ++v) {
        if (values_[v].is_zero()) continue;
        int want = table_->var(v).degree + degree_;
        if (!is_homogeneous_of(values_[v], want))
            return Diagnostic::fail("value on '" + table_->var(v).name + "' is not homogeneous of degree " +
                                    std::to_string(want));
    }
    return Diagnostic::pass();
}

bool operator==(const Derivation& a, const Derivation& b) {
    return *a.table_ == *b.table_ && a.degree_ == b.degree_ && a.values_ == b.values_;
}

Derivation commutator(const Derivation& x, const Derivation& y) {
    if (*x.table() != *y.table()) throw DgError("commutator across variable universes");
    const bool flip = x.odd() && y.odd();
    std::vector<GradedPolynomial> values;
    values.reserve(x.table()->size());
    for (int v = 0; v < x.table()->size(); ++v) {
        GradedPolynomial a = x.apply(y.value(v));
        GradedPolynomial b = y.apply(x.value(v));
        values.push_back(flip ? a + b : a - b);
    }
    return Derivation(x.table(), x.degree() + y.degree(), std::move(values));
}

Derivation lie_derivative(const Derivation& d, const Derivation& x) { return commutator(d, x); }

Derivation euler_field(VarTablePtr table) {
    std::vector<GradedPolynomial> values;
    values.reserve(table->size());
    for (int v = 0; v < table->size(); ++v)
        values.push_back(Rational(table->var(v).degree) * GradedPolynomial::variable(table, v));
    return Derivation(std::move(table), 0, std::move(values));
}

CohomologicalCheck is_cohomological(const Derivation& d) {
    CohomologicalCheck out;
    if (d.degree() != 1) {
        out.ok = false;
        out.reason = "degree is " + std::to_string(d.degree()) + ", not +1";
        return out;
    }
    Diagnostic deg = d.check_degrees();
    if (!deg.ok) {
        out.ok = false;
        out.reason = deg.message;
        return out;
    }
    for (int v = 0; v < d.table()->size(); ++v) {
        GradedPolynomial res = d.apply(d.value(v));
        if (!res.is_zero()) {
            out.ok = false;
            out.reason = "D^2 nonzero on generator '" + d.table()->var(v).name + "'";
            out.generator = d.table()->var(v).name;
            out.residue = res;
            return out;
        }
    }
    return out;
}

}  // namespace dgcalc
