#pragma once

#include "treestab/polynomial.hpp"

#include <vector>

namespace treestab {

/// Convex hull of finitely many integer points, kept as its extreme points.
struct LatticePolytope {
    std::size_t dim = 0;
    /// Extreme points in descending grlex order.
    std::vector<Exponent> vertices;
};

/// Exact hull membership: is `q` a convex combination of `points`?
/// Decided by a phase-one simplex over Q with Bland's rule.
bool in_convex_hull(const std::vector<Exponent>& points, const Exponent& q);

LatticePolytope newton_polytope(const MultiPoly& p);

struct SaturationReport {
    bool saturated = true;
    /// Integer points of the Newton polytope whose coefficient is zero, descending grlex.
    std::vector<Exponent> missing;
};

SaturationReport saturation_check(const MultiPoly& p);

}  // namespace treestab
