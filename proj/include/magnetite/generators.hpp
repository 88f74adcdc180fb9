#pragma once

#include <vector>

#include "magnetite/monoid.hpp"

namespace magnetite {

/// The unique minimal generating set of a sharp finitely generated monoid
/// (its irreducible elements). Greedy removal in a deterministic order:
/// generators sorted by grading value, then lexicographically. Throws
/// NotSharpError on non-sharp input, where minimal generating sets are not
/// unique; callers should pass sharp_quotient(m).image instead.
std::vector<GroupElement> minimal_generators(const FgMonoid& m,
                                             const Limits& limits = {});

/// Same computation but removal attempts follow the given permutation of the
/// generator list; the result is order-independent and this entry point
/// exists so tests can demonstrate that.
std::vector<GroupElement> minimal_generators_with_order(
    const FgMonoid& m, const std::vector<std::size_t>& order,
    const Limits& limits = {});

/// True iff e generates m and no proper subset of e does. Works for non-sharp
/// monoids too (it is a statement about generating sets, not about canonical
/// minimality). Throws ValidationError when some element of e is outside m.
bool is_minimal_generating(const FgMonoid& m, const std::vector<GroupElement>& e,
                           const Limits& limits = {});

}  // namespace magnetite
