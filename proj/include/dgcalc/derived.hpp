#pragma once

#include "dgcalc/koszul.hpp"
#include "dgcalc/morphism.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgcalc {

/// Section of a graded vector bundle over a chart, given by one named slot
/// per bundle generator. Slot degree is the bundle generator's degree (<= 0);
/// the component must be homogeneous of that degree and D-closed.
struct Section {
    ChartPtr chart;
    struct Slot {
        std::string name;  // fresh relative to the chart; also names the shifted generator
        int degree = 0;
        GradedPolynomial component;
    };
    std::vector<Slot> slots;
};

Diagnostic check_section(const Section& s);

/// Derived intersection with the zero section: one generator per slot, of
/// degree slot.degree - 1, with D(gen) = component. This is koszul on the
/// component list.
DgChart shifted_zero_locus(const Section& s, const std::string& result_name);

/// Explicit factorization of a morphism f between quasi-free charts.
/// Writing A = f.target and B = f.source (so the pullback runs
/// functions(A) -> functions(B), sending each A-generator x_i to
/// p_i = f.images[x_i]), the middle chart carries the generators of A, a
/// shifted companion for each of them, and a copy of the generators of B,
/// with differential
///   D = D_A + D_B + (p_i - x_i - Gamma(D_A x_i)) d/d(bar x_i),
/// where Gamma is the degree -1 derivation x_i |-> bar x_i.
struct FactorizationResult {
    ChartPtr middle;
    /// middle -> target(A); pullback is the quasi-free inclusion x_i |-> x_i.
    DgMorphism q;
    /// middle -> source(B); the trivial-fibration leg, pullback y_j |-> y_j.
    DgMorphism r;
    /// source(B) -> middle; section of r, pullback x_i |-> p_i, bars |-> 0.
    DgMorphism section;
    /// Gamma on the middle chart.
    Derivation homotopy;
    std::map<std::string, std::string> source_names;  // B generator -> its name in middle
    std::vector<std::string> bar_names;               // aligned with A's generator order
};

/// Throws DgError when the displayed differential fails to square to zero,
/// which happens exactly when some D_A-value is nonlinear in the generators
/// along a non-identity f (see README notes on the factorization's domain).
FactorizationResult factorize(const DgMorphism& f);

/// Homotopy pullback of f: L -> N along g: M -> N: factorize g, then push the
/// quasi-free leg out along f. Projections to L and M are returned; the L-leg
/// is the fibration replacement.
struct PullbackResult {
    ChartPtr chart;
    DgMorphism to_left;   // P -> L
    DgMorphism to_right;  // P -> M
};
PullbackResult homotopy_pullback(const DgMorphism& f, const DgMorphism& g, const std::string& name);

/// Tower of shifted zero loci rebuilding the chart: stage k is the
/// restriction to fibers of degree >= -k, and section k's slots are the
/// D-values of the degree -(k+1) generators. Amplitude 0 gives an empty
/// tower.
struct DecompositionStage {
    DgChart chart;
    Section next;  // over this stage's chart
};
struct Decomposition {
    std::vector<DecompositionStage> stages;
    DgChart rebuilt;
    DgMorphism to_input, from_input;  // mutually inverse isomorphisms
};
Decomposition decompose(const DgChart& c);

}  // namespace dgcalc
