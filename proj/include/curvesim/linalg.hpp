#pragma once

#include <optional>
#include <vector>

#include "curvesim/rational.hpp"

namespace curvesim {

// Exact dense linear algebra over Q, just enough for the small systems
// that come up (circle fitting, minimal polynomials of ring elements).
using QMatrix = std::vector<std::vector<Rational>>;

// Any exact solution of A x = b, or nullopt when inconsistent.
// A has rows.size() rows; all rows share b's indexing.
std::optional<std::vector<Rational>> solve_linear(QMatrix a, std::vector<Rational> b);

}  // namespace curvesim
