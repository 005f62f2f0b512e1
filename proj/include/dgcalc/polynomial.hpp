#pragma once

#include "dgcalc/rational.hpp"
#include "dgcalc/variables.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dgcalc {

/// Monomial factor list: (variable index, exponent), sorted by index,
/// exponents positive. The index order is the table's canonical order, so a
/// key is already the normal-form factor sequence.
using MonoKey = std::vector<std::pair<int, uint32_t>>;

/// Assignment of rational values to base variables, by name.
using Point = std::map<std::string, Rational>;

/// Element of the free graded-commutative algebra over Q on a VarTable:
/// polynomial coefficients in the degree-0 variables, exterior/divided
/// structure in the fiber variables via the Koszul sign rule. Values are
/// immutable normal forms: odd squares are dropped, zero coefficients erased,
/// factors stored in canonical order with all reordering signs absorbed into
/// the coefficients.
class GradedPolynomial {
public:
    GradedPolynomial() = default;
    explicit GradedPolynomial(VarTablePtr table) : table_(std::move(table)) {}

    static GradedPolynomial zero(VarTablePtr table) { return GradedPolynomial(std::move(table)); }
    static GradedPolynomial constant(VarTablePtr table, Rational c);
    static GradedPolynomial variable(VarTablePtr table, int index);
    /// coeff * product of key factors (key need not be sorted; it is
    /// normalized here, odd repeats give zero).
    static GradedPolynomial monomial(VarTablePtr table, Rational coeff, MonoKey key);

    const VarTablePtr& table() const { return table_; }
    const std::map<MonoKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend GradedPolynomial operator+(const GradedPolynomial& a, const GradedPolynomial& b);
    friend GradedPolynomial operator-(const GradedPolynomial& a, const GradedPolynomial& b);
    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
    GradedPolynomial operator-() const;
    friend GradedPolynomial operator*(const Rational& c, const GradedPolynomial& p);

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b);
    friend bool operator!=(const GradedPolynomial& a, const GradedPolynomial& b) { return !(a == b); }

    std::string str() const;

private:
    VarTablePtr table_;
    std::map<MonoKey, Rational> terms_;

    void add_term(MonoKey key, const Rational& coeff);
    static void check_same_table(const GradedPolynomial& a, const GradedPolynomial& b);

    friend GradedPolynomial left_partial(const GradedPolynomial& p, int var);
    friend GradedPolynomial lift_renamed(const GradedPolynomial& p, const VarTablePtr& to,
                                         const std::map<std::string, std::string>& rename);
};

GradedPolynomial pow(const GradedPolynomial& p, uint32_t e);

/// Left partial derivative with respect to the given variable: each factor
/// is moved to the leftmost slot (Koszul signs) and stripped, weighted by its
/// exponent.
GradedPolynomial left_partial(const GradedPolynomial& p, int var);
GradedPolynomial left_partial(const GradedPolynomial& p, const std::string& var_name);

/// Value on the core: substitute the base assignment, kill every monomial
/// containing a fiber variable. Throws DgError when a base variable of the
/// table is not assigned.
Rational evaluate_at_core(const GradedPolynomial& p, const Point& point);

struct Homogeneity {
    enum Kind { kZeroPolynomial, kHomogeneous, kInhomogeneous } kind;
    int degree = 0;  // meaningful only for kHomogeneous
};
Homogeneity homogeneous_degree(const GradedPolynomial& p);
int monomial_degree(const VarTable& table, const MonoKey& key);

/// True when p is zero or homogeneous of the given degree.
bool is_homogeneous_of(const GradedPolynomial& p, int degree);

/// Substitute images[i] for variable i of p's table; images live over a
/// common target table (pass `target` explicitly when images may be empty).
/// Images must be homogeneous of the degree of the variable they replace
/// (or zero) for the result to be well defined.
GradedPolynomial substitute(const GradedPolynomial& p, const std::vector<GradedPolynomial>& images,
                            VarTablePtr target = nullptr);

/// Transport p to a table containing at least p's variables (matched by
/// name; degrees must agree). Throws DgError on a missing or mismatched name.
GradedPolynomial lift(const GradedPolynomial& p, const VarTablePtr& to);

/// Rename variables while transporting: names mapped through `rename` when
/// present, kept otherwise.
GradedPolynomial lift_renamed(const GradedPolynomial& p, const VarTablePtr& to,
                              const std::map<std::string, std::string>& rename);

/// Largest total degree in the base (degree-0) variables over all terms.
int max_base_degree(const GradedPolynomial& p);

/// Number of fiber factors (with multiplicity) in the smallest-arity term.
int min_fiber_arity(const GradedPolynomial& p);

}  // namespace dgcalc
