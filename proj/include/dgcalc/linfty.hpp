#pragma once

#include "dgcalc/chart.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgcalc {

/// Bundle of curved L-infinity[1] structure constants over a polynomial base:
/// a graded fiber basis (level k >= 1, dualizing to a chart variable of
/// degree -k) and bracket coefficients on multiset inputs. Coefficients are
/// stored on the sorted multiset with no factorial weights; the sort order is
/// the chart's canonical variable order, so the dual differential picks up
/// each coefficient exactly once with no extra sign.
struct CurvedLInfty {
    struct BasisElem {
        std::string name;
        int level = 1;  // element of L_level
    };
    struct BracketKey {
        std::string out;
        std::vector<std::string> inputs;  // sorted canonically; may be empty (curvature)
        friend bool operator<(const BracketKey& a, const BracketKey& b) {
            if (a.out != b.out) return a.out < b.out;
            return a.inputs < b.inputs;
        }
        friend bool operator==(const BracketKey& a, const BracketKey& b) {
            return a.out == b.out && a.inputs == b.inputs;
        }
    };

    std::string name;
    std::vector<GradedVariable> base;  // degree-0 variables
    std::vector<BasisElem> basis;
    std::map<BracketKey, GradedPolynomial> brackets;  // coefficients over the base-only table

    VarTablePtr base_table() const;
    int level_of(const std::string& elem) const;  // throws on unknown name

    /// Accumulate a bracket coefficient. Inputs are normalized into the
    /// canonical order (level descending, then name), with the Koszul sign of
    /// the permutation absorbed into the coefficient; repeated odd inputs are
    /// rejected. Zero totals are erased.
    void add_bracket(const std::string& out, std::vector<std::string> inputs, GradedPolynomial coeff);

    /// Degree rule |out| = sum |inputs| + 1 plus repeated-odd-input exclusion.
    Diagnostic check_structure() const;
};

/// Dual dg-chart: one fiber variable per basis element (degree -level),
/// D(xi_out) = sum over brackets of coeff * product of input variables.
/// The result need not satisfy D^2 = 0; that is exactly check_linfty.
DgChart to_dg_chart(const CurvedLInfty& l);

/// Fiber-Taylor coefficients of D as bracket coefficients; exact two-sided
/// inverse of to_dg_chart.
CurvedLInfty from_dg_chart(const DgChart& c);

struct LInftyVerdict {
    bool ok = true;
    int failing_arity = -1;   // lowest fiber arity of the first nonzero residue
    std::string generator;    // offending dual generator
    std::string residue;
};
LInftyVerdict check_linfty(const CurvedLInfty& l);

}  // namespace dgcalc
