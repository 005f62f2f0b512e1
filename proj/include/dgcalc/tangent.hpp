#pragma once

#include "dgcalc/linalg.hpp"
#include "dgcalc/morphism.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dgcalc {

/// Finite cochain complex of finite-dimensional rational vector spaces.
/// dims[k] is the dimension in slot k; d[k] maps slot k to slot k+1
/// (matrix with dims[k+1] rows, dims[k] columns).
struct CochainComplex {
    std::vector<int> dims;
    std::vector<RatMat> d;

    int length() const { return static_cast<int>(dims.size()); }
    Diagnostic check() const;  // shapes and d.d = 0
};

std::vector<int> cohomology_dims(const CochainComplex& c);
bool is_acyclic(const CochainComplex& c);

/// Linearization of D at a classical point: slot 0 is spanned by the base
/// variables, slot k by the degree -k fiber variables;
/// d[k][row l][col j] = core coefficient of generator j in D(generator l).
CochainComplex tangent_complex(const DgChart& c, const Point& p);

/// Degree-wise chain map between two tangent complexes.
struct TangentChainMap {
    CochainComplex source, target;
    std::vector<RatMat> mats;  // mats[k]: source slot k -> target slot k
    Diagnostic check() const;  // squares commute
};

/// Linearization of a morphism's images at a classical source point.
TangentChainMap tangent_chain_map(const DgMorphism& f, const Point& p);

/// Cone(F) with slot i = source_{i} (+) target_{i-1}; acyclic iff F is a
/// quasi-isomorphism.
CochainComplex mapping_cone(const TangentChainMap& f);

struct ProbeVerdict {
    bool ok = true;
    std::optional<Point> witness;  // first failing probe
    std::string detail;
    /// Tangent data is only checked at the supplied probes; the global
    /// classical-locus bijection is not decided here.
    bool probes_only = true;
};

/// True iff the mapping cone of the tangent chain map is acyclic at every
/// probe. Probes must be classical points of the source.
ProbeVerdict is_pointwise_weq(const DgMorphism& f, const std::vector<Point>& probes);

/// Submersion test at classical probes: the base Jacobian of the images and,
/// per fiber degree, the matrix of fiber-linear coefficients must each have
/// full row rank.
ProbeVerdict is_fibration_at(const DgMorphism& f, const std::vector<Point>& probes);

}  // namespace dgcalc
