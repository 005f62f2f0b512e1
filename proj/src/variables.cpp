#include "dgcalc/variables.hpp"

#include "dgcalc/error.hpp"

#include <algorithm>

namespace dgcalc {

VarTable::VarTable(std::vector<GradedVariable> vars) : vars_(std::move(vars)) {
    for (const auto& v : vars_) {
        if (v.name.empty()) throw DgError("variable with empty name");
        if (v.degree > 0) throw DgError("variable '" + v.name + "' has positive degree " + std::to_string(v.degree));
    }
    std::sort(vars_.begin(), vars_.end(), [](const GradedVariable& a, const GradedVariable& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.name < b.name;
    });
    for (int i = 0; i < static_cast<int>(vars_.size()); ++i) {
        if (!index_.emplace(vars_[i].name, i).second)
            throw DgError("duplicate variable name '" + vars_[i].name + "'");
    }
}

std::optional<int> VarTable::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> VarTable::base_indices() const { return level_indices(0); }

std::vector<int> VarTable::fiber_indices() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (vars_[i].degree < 0) out.push_back(i);
    return out;
}

std::vector<int> VarTable::level_indices(int level) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (vars_[i].degree == -level) out.push_back(i);
    return out;
}

int VarTable::amplitude() const {
    int amp = 0;
    for (const auto& v : vars_) amp = std::max(amp, -v.degree);
    return amp;
}

VarTablePtr make_table(std::vector<GradedVariable> vars) {
    return std::make_shared<VarTable>(std::move(vars));
}

}  // namespace dgcalc
