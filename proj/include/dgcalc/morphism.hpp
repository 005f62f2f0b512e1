#pragma once

#include "dgcalc/chart.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgcalc {

/// Morphism of dg-charts source -> target, stored as its pullback on
/// generators: images[v] is a polynomial over the source for every target
/// generator v. Degree and chain conditions are decided by check_morphism.
struct DgMorphism {
    std::string name;
    ChartPtr source;
    ChartPtr target;
    std::vector<GradedPolynomial> images;  // indexed by target variable index

    const GradedPolynomial& image(int target_var) const { return images[target_var]; }
    GradedPolynomial image_of(const std::string& target_var_name) const;
};

DgMorphism identity_morphism(const ChartPtr& c);

/// Pullback of a polynomial over the target along f.
GradedPolynomial pullback(const DgMorphism& f, const GradedPolynomial& p);

/// Degree condition and chain condition, generator-wise; names the first
/// offending generator.
Diagnostic check_morphism(const DgMorphism& f);

/// compose(g, f): X -> Z for f: X -> Y, g: Y -> Z (substitution of images).
DgMorphism compose(const DgMorphism& g, const DgMorphism& f);

/// Base-variable image of a source point (evaluate base images on the core).
Point image_point(const DgMorphism& f, const Point& p);

}  // namespace dgcalc
