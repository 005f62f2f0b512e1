#include "dgcalc/linfty.hpp"

#include "dgcalc/error.hpp"

#include <algorithm>
#include <set>

namespace dgcalc {

VarTablePtr CurvedLInfty::base_table() const { return make_table(base); }

int CurvedLInfty::level_of(const std::string& elem) const {
    for (const auto& e : basis)
        if (e.name == elem) return e.level;
    throw DgError("linfty: unknown basis element '" + elem + "'");
}

void CurvedLInfty::add_bracket(const std::string& out, std::vector<std::string> inputs,
                               GradedPolynomial coeff) {
    level_of(out);
    // insertion sort into (level desc, name asc), counting odd-odd swaps
    std::vector<int> levels;
    levels.reserve(inputs.size());
    for (const auto& in : inputs) levels.push_back(level_of(in));
    int sign = 1;
    for (size_t i = 1; i < inputs.size(); ++i) {
        std::string name = inputs[i];
        int lv = levels[i];
        size_t j = i;
        auto before = [&](size_t k) {  // should item go before slot k-1's entry?
            if (levels[k - 1] != lv) return levels[k - 1] < lv;
            return name < inputs[k - 1];
        };
        while (j > 0 && before(j)) {
            if (lv % 2 != 0 && levels[j - 1] % 2 != 0) sign = -sign;
            inputs[j] = inputs[j - 1];
            levels[j] = levels[j - 1];
            --j;
        }
        inputs[j] = name;
        levels[j] = lv;
    }
    for (size_t i = 0; i + 1 < inputs.size(); ++i)
        if (inputs[i] == inputs[i + 1] && levels[i] % 2 != 0)
            throw DgError("linfty: bracket repeats the odd input '" + inputs[i] + "'");
    if (sign < 0) coeff = -coeff;

    BracketKey key{out, std::move(inputs)};
    auto it = brackets.find(key);
    if (it == brackets.end()) {
        if (!coeff.is_zero()) brackets.emplace(std::move(key), std::move(coeff));
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) brackets.erase(it);
}

Diagnostic CurvedLInfty::check_structure() const {
    std::set<std::string> names;
    for (const auto& v : base)
        if (!names.insert(v.name).second) return Diagnostic::fail("duplicate base name '" + v.name + "'");
    for (const auto& e : basis) {
        if (e.level < 1) return Diagnostic::fail("basis element '" + e.name + "' has level < 1");
        if (!names.insert(e.name).second) return Diagnostic::fail("duplicate name '" + e.name + "'");
    }
    for (const auto& [key, coeff] : brackets) {
        if (coeff.is_zero()) continue;
        int out_level = level_of(key.out);
        int in_sum = 0;
        for (size_t i = 0; i < key.inputs.size(); ++i) {
            int lv = level_of(key.inputs[i]);
            in_sum += lv;
            if (i + 1 < key.inputs.size() && key.inputs[i] == key.inputs[i + 1] && lv % 2 != 0)
                return Diagnostic::fail("bracket on '" + key.out +
                                        "' repeats the odd input '" + key.inputs[i] +
                                        "' (graded symmetry forces the coefficient to vanish)");
        }
        if (out_level != in_sum + 1)
            return Diagnostic::fail("bracket on '" + key.out + "' violates |out| = sum|in| + 1");
    }
    return Diagnostic::pass();
}

namespace {

VarTablePtr chart_table(const CurvedLInfty& l) {
    std::vector<GradedVariable> vars = l.base;
    for (const auto& e : l.basis) vars.push_back({e.name, -e.level});
    return make_table(std::move(vars));
}

}  // namespace

DgChart to_dg_chart(const CurvedLInfty& l) {
    Diagnostic ok = l.check_structure();
    if (!ok.ok) throw DgError("to_dg_chart: " + ok.message);
    VarTablePtr table = chart_table(l);
    std::vector<GradedPolynomial> values(table->size(), GradedPolynomial::zero(table));
    for (const auto& [key, coeff] : l.brackets) {
        if (coeff.is_zero()) continue;
        GradedPolynomial term = lift(coeff, table);
        for (const auto& in : key.inputs)
            term = term * GradedPolynomial::variable(table, *table->find(in));
        int out = *table->find(key.out);
        values[out] = values[out] + term;
    }
    return DgChart(l.name, table, Derivation(table, 1, std::move(values)));
}

CurvedLInfty from_dg_chart(const DgChart& c) {
    CurvedLInfty l;
    l.name = c.name;
    for (int i : c.table->base_indices()) l.base.push_back(c.table->var(i));
    VarTablePtr base = l.base_table();
    for (int i : c.table->fiber_indices()) l.basis.push_back({c.table->var(i).name, -c.table->var(i).degree});

    for (int i : c.table->fiber_indices()) {
        const GradedPolynomial& val = c.d_value(i);
        for (const auto& [key, coeff] : val.terms()) {
            CurvedLInfty::BracketKey bk;
            bk.out = c.table->var(i).name;
            MonoKey base_part;
            for (const auto& f : key) {
                if (c.table->var(f.first).degree < 0) {
                    for (uint32_t e = 0; e < f.second; ++e) bk.inputs.push_back(c.table->var(f.first).name);
                } else {
                    base_part.push_back(f);
                }
            }
            // key is in canonical chart order, so bk.inputs is already sorted
            MonoKey remapped;
            for (const auto& f : base_part)
                remapped.emplace_back(*base->find(c.table->var(f.first).name), f.second);
            GradedPolynomial contrib = GradedPolynomial::monomial(base, coeff, std::move(remapped));
            auto it = l.brackets.find(bk);
            if (it == l.brackets.end())
                l.brackets.emplace(std::move(bk), contrib);
            else
                it->second = it->second + contrib;
        }
    }
    return l;
}

LInftyVerdict check_linfty(const CurvedLInfty& l) {
    DgChart c = to_dg_chart(l);
    CohomologicalCheck sq = is_cohomological(c.d);
    LInftyVerdict out;
    if (sq.ok) return out;
    out.ok = false;
    if (sq.generator) {
        out.generator = *sq.generator;
        out.residue = sq.residue->str();
        out.failing_arity = min_fiber_arity(*sq.residue);
    } else {
        out.generator = "";
        out.residue = sq.reason;
        out.failing_arity = -1;
    }
    return out;
}

}  // namespace dgcalc
