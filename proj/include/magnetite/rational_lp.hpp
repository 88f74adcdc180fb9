#pragma once

#include <optional>
#include <vector>

#include "magnetite/numeric.hpp"

namespace magnetite {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Decides whether {x >= 0 : a x = b} is nonempty and returns a witness.
/// Exact rational phase-1 simplex with Bland's rule, so it terminates and
/// never misclassifies. Sized for desk-scale systems.
std::optional<std::vector<Rat>> solve_nonnegative(const RatMatrix& a,
                                                  const std::vector<Rat>& b);

}  // namespace magnetite
