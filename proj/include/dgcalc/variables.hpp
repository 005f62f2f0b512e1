#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dgcalc {

/// A generator of the coordinate algebra. Cohomological convention:
/// base variables have degree 0, fiber variables degree <= -1.
struct GradedVariable {
    std::string name;
    int degree = 0;

    bool odd() const { return degree % 2 != 0; }
    friend bool operator==(const GradedVariable& a, const GradedVariable& b) {
        return a.name == b.name && a.degree == b.degree;
    }
};

/// Immutable ordered variable universe. The canonical total order is
/// (degree, name) ascending, so deeper fiber variables come first and the
/// base variables last; all monomial normal forms are stated in this order.
class VarTable {
public:
    explicit VarTable(std::vector<GradedVariable> vars);

    int size() const { return static_cast<int>(vars_.size()); }
    const GradedVariable& var(int i) const { return vars_[i]; }
    std::optional<int> find(const std::string& name) const;

    std::vector<int> base_indices() const;
    std::vector<int> fiber_indices() const;
    /// Fiber indices of exact degree -level; level 0 gives the base indices.
    std::vector<int> level_indices(int level) const;
    /// Largest k with a fiber variable of degree -k (0 if none).
    int amplitude() const;

    friend bool operator==(const VarTable& a, const VarTable& b) { return a.vars_ == b.vars_; }
    friend bool operator!=(const VarTable& a, const VarTable& b) { return !(a == b); }

private:
    std::vector<GradedVariable> vars_;
    std::map<std::string, int> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_table(std::vector<GradedVariable> vars);

}  // namespace dgcalc
