#include "dgcalc/derived.hpp"

#include "dgcalc/error.hpp"

#include <set>

namespace dgcalc {

namespace {

std::string fresh_name(const std::string& candidate, std::set<std::string>& used) {
    std::string name = candidate;
    for (int n = 2; !used.insert(name).second; ++n) name = candidate + "_" + std::to_string(n);
    return name;
}

}  // namespace

Diagnostic check_section(const Section& s) {
    std::set<std::string> used;
    for (int i = 0; i < s.chart->table->size(); ++i) used.insert(s.chart->table->var(i).name);
    for (const auto& slot : s.slots) {
        if (slot.degree > 0) return Diagnostic::fail("slot '" + slot.name + "' has positive degree");
        if (!used.insert(slot.name).second)
            return Diagnostic::fail("slot name '" + slot.name + "' is not fresh");
        if (*slot.component.table() != *s.chart->table)
            return Diagnostic::fail("component of '" + slot.name + "' is not over the chart");
        if (!is_homogeneous_of(slot.component, slot.degree))
            return Diagnostic::fail("component of '" + slot.name + "' is not homogeneous of degree " +
                                    std::to_string(slot.degree));
        if (!s.chart->d.apply(slot.component).is_zero())
            return Diagnostic::fail("component of '" + slot.name + "' is not D-closed");
    }
    return Diagnostic::pass();
}

DgChart shifted_zero_locus(const Section& s, const std::string& result_name) {
    Diagnostic ok = check_section(s);
    if (!ok.ok) throw DgError("shifted_zero_locus: " + ok.message);

    std::vector<GradedVariable> vars;
    for (int i = 0; i < s.chart->table->size(); ++i) vars.push_back(s.chart->table->var(i));
    for (const auto& slot : s.slots) vars.push_back({slot.name, slot.degree - 1});
    VarTablePtr table = make_table(std::move(vars));

    std::vector<GradedPolynomial> values(table->size(), GradedPolynomial::zero(table));
    for (int i = 0; i < s.chart->table->size(); ++i)
        values[*table->find(s.chart->table->var(i).name)] = lift(s.chart->d_value(i), table);
    for (const auto& slot : s.slots) values[*table->find(slot.name)] = lift(slot.component, table);
    return DgChart(result_name, table, Derivation(table, 1, std::move(values)));
}

FactorizationResult factorize(const DgMorphism& f) {
    Diagnostic valid = check_morphism(f);
    if (!valid.ok) throw DgError("factorize: input morphism invalid: " + valid.message);
    const DgChart& a = *f.target;
    const DgChart& b = *f.source;

    std::set<std::string> used;
    std::vector<GradedVariable> vars;
    for (int i = 0; i < a.table->size(); ++i) {
        vars.push_back(a.table->var(i));
        used.insert(a.table->var(i).name);
    }
    std::vector<std::string> bar_names(a.table->size());
    for (int i = 0; i < a.table->size(); ++i) {
        bar_names[i] = fresh_name(a.table->var(i).name + "_bar", used);
        vars.push_back({bar_names[i], a.table->var(i).degree - 1});
    }
    std::map<std::string, std::string> source_names;
    for (int i = 0; i < b.table->size(); ++i) {
        std::string copy = fresh_name(b.table->var(i).name, used);
        source_names[b.table->var(i).name] = copy;
        vars.push_back({copy, b.table->var(i).degree});
    }
    VarTablePtr mid = make_table(std::move(vars));

    std::vector<GradedPolynomial> gamma_values(mid->size(), GradedPolynomial::zero(mid));
    for (int i = 0; i < a.table->size(); ++i)
        gamma_values[*mid->find(a.table->var(i).name)] =
            GradedPolynomial::variable(mid, *mid->find(bar_names[i]));
    Derivation gamma(mid, -1, std::move(gamma_values));

    std::vector<GradedPolynomial> d_values(mid->size(), GradedPolynomial::zero(mid));
    for (int i = 0; i < a.table->size(); ++i)
        d_values[*mid->find(a.table->var(i).name)] = lift(a.d_value(i), mid);
    for (int i = 0; i < b.table->size(); ++i)
        d_values[*mid->find(source_names.at(b.table->var(i).name))] =
            lift_renamed(b.d_value(i), mid, source_names);
    for (int i = 0; i < a.table->size(); ++i) {
        GradedPolynomial p_i = lift_renamed(f.images[i], mid, source_names);
        GradedPolynomial x_i = GradedPolynomial::variable(mid, *mid->find(a.table->var(i).name));
        GradedPolynomial corr = gamma.apply(lift(a.d_value(i), mid));
        d_values[*mid->find(bar_names[i])] = p_i - x_i - corr;
    }
    DgChart middle((f.name.empty() ? b.name + "_to_" + a.name : f.name) + "_mid", mid,
                   Derivation(mid, 1, std::move(d_values)));

    CohomologicalCheck sq = is_cohomological(middle.d);
    if (!sq.ok) {
        std::string msg = "factorize: the displayed differential does not square to zero (" + sq.reason +
                          "); the explicit factorization only applies when every "
                          "D-value of the target chart is linear in its generators along this map";
        throw DgError(msg);
    }

    FactorizationResult out;
    out.middle = make_chart_ptr(std::move(middle));
    out.bar_names = bar_names;
    out.source_names = source_names;
    out.homotopy = gamma;

    out.q.name = "q";
    out.q.source = out.middle;
    out.q.target = f.target;
    for (int i = 0; i < a.table->size(); ++i)
        out.q.images.push_back(GradedPolynomial::variable(mid, *mid->find(a.table->var(i).name)));

    out.r.name = "r";
    out.r.source = out.middle;
    out.r.target = f.source;
    for (int i = 0; i < b.table->size(); ++i)
        out.r.images.push_back(
            GradedPolynomial::variable(mid, *mid->find(source_names.at(b.table->var(i).name))));

    out.section.name = "phi";
    out.section.source = f.source;
    out.section.target = out.middle;
    out.section.images.assign(mid->size(), GradedPolynomial::zero(b.table));
    for (int i = 0; i < a.table->size(); ++i)
        out.section.images[*mid->find(a.table->var(i).name)] = f.images[i];
    for (int i = 0; i < b.table->size(); ++i)
        out.section.images[*mid->find(source_names.at(b.table->var(i).name))] =
            GradedPolynomial::variable(b.table, i);
    return out;
}

PullbackResult homotopy_pullback(const DgMorphism& f, const DgMorphism& g, const std::string& name) {
    if (*f.target->table != *g.target->table || !(f.target->d == g.target->d))
        throw DgError("homotopy_pullback: the two morphisms have different targets");
    FactorizationResult fact = factorize(g);
    const DgChart& l = *f.source;
    const DgChart& n = *f.target;
    const VarTable& mid = *fact.middle->table;

    // adjoined generators: everything in the middle chart except N's own
    std::set<std::string> n_names;
    for (int i = 0; i < n.table->size(); ++i) n_names.insert(n.table->var(i).name);

    std::set<std::string> used;
    std::vector<GradedVariable> vars;
    for (int i = 0; i < l.table->size(); ++i) {
        vars.push_back(l.table->var(i));
        used.insert(l.table->var(i).name);
    }
    std::map<std::string, std::string> rename;  // middle extra -> name in P
    for (int i = 0; i < mid.size(); ++i) {
        const auto& v = mid.var(i);
        if (n_names.count(v.name)) continue;
        std::string copy = fresh_name(v.name, used);
        rename[v.name] = copy;
        vars.push_back({copy, v.degree});
    }
    VarTablePtr table = make_table(std::move(vars));

    // images of every middle generator inside P
    std::vector<GradedPolynomial> mid_to_p(mid.size(), GradedPolynomial::zero(table));
    for (int i = 0; i < mid.size(); ++i) {
        const auto& v = mid.var(i);
        if (n_names.count(v.name)) {
            mid_to_p[i] = lift(f.images[*n.table->find(v.name)], table);
        } else {
            mid_to_p[i] = GradedPolynomial::variable(table, *table->find(rename.at(v.name)));
        }
    }

    std::vector<GradedPolynomial> d_values(table->size(), GradedPolynomial::zero(table));
    for (int i = 0; i < l.table->size(); ++i)
        d_values[*table->find(l.table->var(i).name)] = lift(l.d_value(i), table);
    for (int i = 0; i < mid.size(); ++i) {
        const auto& v = mid.var(i);
        if (n_names.count(v.name)) continue;
        d_values[*table->find(rename.at(v.name))] = substitute(fact.middle->d_value(i), mid_to_p, table);
    }
    DgChart p(name, table, Derivation(table, 1, std::move(d_values)));
    Diagnostic ok = validate_chart(p);
    if (!ok.ok) throw DgError("homotopy_pullback: resulting chart invalid: " + ok.message);

    PullbackResult out;
    out.chart = make_chart_ptr(std::move(p));
    out.to_left.name = name + "_prL";
    out.to_left.source = out.chart;
    out.to_left.target = f.source;
    for (int i = 0; i < l.table->size(); ++i)
        out.to_left.images.push_back(
            GradedPolynomial::variable(table, *table->find(l.table->var(i).name)));
    out.to_right.name = name + "_prR";
    out.to_right.source = out.chart;
    out.to_right.target = g.source;
    for (int i = 0; i < g.source->table->size(); ++i) {
        const std::string& in_mid = fact.source_names.at(g.source->table->var(i).name);
        out.to_right.images.push_back(
            GradedPolynomial::variable(table, *table->find(rename.at(in_mid))));
    }
    return out;
}

Decomposition decompose(const DgChart& c) {
    int amp = c.amplitude();
    Decomposition out;

    auto stage_chart = [&](int k) {
        std::vector<GradedVariable> vars;
        for (int i = 0; i < c.table->size(); ++i)
            if (-c.table->var(i).degree <= k) vars.push_back(c.table->var(i));
        VarTablePtr table = make_table(std::move(vars));
        std::vector<GradedPolynomial> values(table->size(), GradedPolynomial::zero(table));
        for (int i = 0; i < table->size(); ++i)
            values[i] = lift(c.d_value(*c.table->find(table->var(i).name)), table);
        return DgChart(c.name + "_stage" + std::to_string(k), table, Derivation(table, 1, std::move(values)));
    };

    for (int k = 0; k + 1 <= amp; ++k) {
        DecompositionStage stage{stage_chart(k), Section{}};
        ChartPtr sp = make_chart_ptr(stage.chart);
        stage.next.chart = sp;
        for (int i : c.table->level_indices(k + 1)) {
            Section::Slot slot;
            slot.name = c.table->var(i).name;
            slot.degree = -k;
            slot.component = lift(c.d_value(i), sp->table);
            stage.next.slots.push_back(std::move(slot));
        }
        out.stages.push_back(std::move(stage));
    }

    if (out.stages.empty()) {
        out.rebuilt = stage_chart(0);
    } else {
        DgChart current = out.stages.front().chart;
        for (size_t k = 0; k < out.stages.size(); ++k) {
            // resections over the running chart, so the tower composes
            Section s = out.stages[k].next;
            s.chart = make_chart_ptr(current);
            std::vector<Section::Slot> slots;
            for (const auto& slot : out.stages[k].next.slots) {
                Section::Slot re = slot;
                re.component = lift(slot.component, s.chart->table);
                slots.push_back(std::move(re));
            }
            s.slots = std::move(slots);
            current = shifted_zero_locus(s, c.name + "_stage" + std::to_string(k + 1));
        }
        out.rebuilt = std::move(current);
    }
    out.rebuilt.name = c.name + "_rebuilt";

    ChartPtr cp = make_chart_ptr(c);
    ChartPtr rp = make_chart_ptr(out.rebuilt);
    auto ident = [&](const ChartPtr& from, const ChartPtr& to, const std::string& nm) {
        DgMorphism m;
        m.name = nm;
        m.source = from;
        m.target = to;
        for (int i = 0; i < to->table->size(); ++i)
            m.images.push_back(
                GradedPolynomial::variable(from->table, *from->table->find(to->table->var(i).name)));
        return m;
    };
    out.to_input = ident(rp, cp, c.name + "_from_rebuilt");
    out.from_input = ident(cp, rp, c.name + "_to_rebuilt");
    return out;
}

}  // namespace dgcalc
