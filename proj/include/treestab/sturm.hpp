#pragma once

#include "treestab/polynomial.hpp"

#include <vector>

namespace treestab {

enum class RootReality { RealRooted, HasNonrealRoot };

/// Dense univariate coefficients, lowest degree first, no trailing zeros.
using DenseUnivariate = std::vector<Rational>;

DenseUnivariate to_dense(const MultiPoly& p);
MultiPoly from_dense(const DenseUnivariate& p);

/// Monic gcd; the gcd of two zero polynomials is zero.
DenseUnivariate poly_gcd(DenseUnivariate a, DenseUnivariate b);
DenseUnivariate square_free_part(const DenseUnivariate& p);

/// Number of distinct real roots over the whole line, by a Sturm chain.
int count_distinct_real_roots(const DenseUnivariate& p);

/// Decides whether every complex root of p is real. p must be a nonzero polynomial
/// with nvars == 1; throws PolyError otherwise.
RootReality sturm_real_rooted(const MultiPoly& p);

}  // namespace treestab
