#pragma once

#include "holopow/eigen_support.hpp"

namespace holopow {

/// Exact solve of a square nonsingular system A x = b over Q(i) by
/// fraction-free (Bareiss) elimination. Rows are pre-scaled to Gaussian
/// integers so intermediate entries stay integral (Sylvester identity),
/// which bounds coefficient swell. Throws SingularMatrixError naming the
/// first pivot column without a nonzero entry.
GRatVector solve_exact(GRatMatrix a, GRatVector b);

}  // namespace holopow
