#pragma once

#include "dgcalc/chart.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgcalc {

/// Truncation parameters for the brute-force cohomology of a chart's
/// function algebra.
struct TruncationSpec {
    int max_base_degree = 4;  // d >= 0
    int window_min = -3;      // cohomological window [window_min, 0]
    /// Optional positive generator weights; D must preserve them. With
    /// selected_weight set, the basis is restricted to that exact weight.
    std::optional<std::map<std::string, int>> weights;
    std::optional<int> selected_weight;
    /// Guard against basis explosion; DgError diagnostic when exceeded.
    size_t basis_cap = 200000;
};

struct DegreeReport {
    int degree = 0;  // cohomological degree
    int h = 0;       // reported dimension
    bool stable = false;  // dims agree between d and d+1 truncations
};

struct OracleResult {
    std::vector<DegreeReport> per_degree;  // ordered window_min .. 0
    bool all_stable() const;
    int h_at(int degree) const;  // throws when degree outside the window
};

/// Per-degree h^k of (functions, D) computed from the monomial basis with
/// base-degree <= d. Kernels are exact on the truncation; images are taken
/// from the once-larger truncation and intersected back, and the stability
/// flag (agreement between d and d+1) is the honesty mechanism for
/// differentials that do not respect the truncation.
OracleResult bounded_cohomology(const DgChart& c, const TruncationSpec& t);

}  // namespace dgcalc
