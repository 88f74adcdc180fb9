#pragma once

// Independent reference implementations used only by the test suite. They
// deliberately avoid the library's Smith-form and grading-bounded search
// paths so both sides of every cross-check stay separate.

#include <optional>
#include <random>
#include <vector>

#include "magnetite/ambient.hpp"
#include "magnetite/monoid.hpp"

namespace magnetite::testref {

/// Membership of x in the subgroup of g generated by gens, decided by a
/// column-echelon (Hermite-style) solve over the integers on the lifted
/// relation matrix. No Smith form, no unimodular inverses.
bool subgroup_contains(const AmbientGroup& g, const std::vector<GroupElement>& gens,
                       const GroupElement& x);

/// Monoid membership by exhaustive coefficient enumeration with all
/// coefficients bounded by `bound`. Sound always; complete only when a
/// representation within the bound exists, which the tests arrange.
std::optional<IntVec> brute_member(const std::vector<GroupElement>& gens,
                                   const GroupElement& z, const Int& bound);

/// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& a);

struct RandomMonoidParams {
    std::size_t max_rank = 3;
    std::size_t max_torsion_factors = 2;
    std::size_t max_gens = 5;
    long entry_lo = -3;
    long entry_hi = 3;
};

AmbientGroup random_ambient(std::mt19937& rng, const RandomMonoidParams& p);
FgMonoid random_monoid(std::mt19937& rng, const RandomMonoidParams& p);
GroupElement random_element(std::mt19937& rng, const AmbientGroup& g,
                            long lo = -6, long hi = 6);

}  // namespace magnetite::testref
