#pragma once

#include "dgcalc/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dgcalc {

/// Diagnostic for validators: ok, or a message naming the first violation.
struct Diagnostic {
    bool ok = true;
    std::string message;

    static Diagnostic pass() { return {}; }
    static Diagnostic fail(std::string msg) { return {false, std::move(msg)}; }
};

/// A graded derivation of fixed degree, stored by its values on generators
/// and extended by the graded Leibniz rule:
///   X(p) = sum_v values[v] * left_partial(p, v).
class Derivation {
public:
    Derivation() = default;  // empty placeholder, not usable until assigned
    Derivation(VarTablePtr table, int degree, std::vector<GradedPolynomial> values);

    /// Zero derivation of the given degree.
    static Derivation zero(VarTablePtr table, int degree);

    const VarTablePtr& table() const { return table_; }
    int degree() const { return degree_; }
    bool odd() const { return degree_ % 2 != 0; }
    const GradedPolynomial& value(int var) const { return values_[var]; }
    const std::vector<GradedPolynomial>& values() const { return values_; }

    GradedPolynomial apply(const GradedPolynomial& p) const;

    /// Degree bookkeeping: every nonzero value homogeneous of deg(v) + degree.
    Diagnostic check_degrees() const;

    friend bool operator==(const Derivation& a, const Derivation& b);

private:
    VarTablePtr table_;
    int degree_ = 0;
    std::vector<GradedPolynomial> values_;
};

/// [X, Y] = X Y - (-1)^{|X||Y|} Y X, of degree |X| + |Y|.
Derivation commutator(const Derivation& x, const Derivation& y);

/// L_D := [D, -].
Derivation lie_derivative(const Derivation& d, const Derivation& x);

/// Degree-0 derivation with E(v) = deg(v) * v; apply(E, p) = deg(p) * p for
/// homogeneous p.
Derivation euler_field(VarTablePtr table);

/// Square-zero certificate. D is cohomological iff it has degree +1 and
/// D(D v) = 0 on every generator (sufficient: D^2 is a derivation).
struct CohomologicalCheck {
    bool ok = true;
    std::string reason;                    // set on failure
    std::optional<std::string> generator;  // offending generator, when D^2 fails
    std::optional<GradedPolynomial> residue;
};
CohomologicalCheck is_cohomological(const Derivation& d);

}  // namespace dgcalc
