#pragma once

#include "dgcalc/chart.hpp"

#include <string>
#include <vector>

namespace dgcalc {

/// One Koszul datum: a homogeneous D-closed element of the base chart and
/// the fresh generator name it receives.
struct KoszulElement {
    GradedPolynomial element;
    std::string fresh_name;
};

/// Extend the chart by one generator per element: deg(xi_i) = deg(a_i) - 1
/// and D(xi_i) = a_i. Elements of degree 0 are allowed (they create degree -1
/// generators). Throws DgError on a non-closed or inhomogeneous element, a
/// degree violation, or a name collision.
DgChart koszul(const DgChart& base, const std::vector<KoszulElement>& elements,
               const std::string& result_name);

}  // namespace dgcalc
