#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magnetite/magnets.hpp"

namespace magnetite {

/// Distinct submonoids generated by subsets of ball(m, degree), deduplicated
/// by membership signature on ball(m, 2*degree). Representatives keep the
/// first (smallest bitmask) generating subset. ResourceLimitError when the
/// subset count exceeds the enumeration cap.
std::vector<FgMonoid> enumerate_submonoids(const FgMonoid& m, std::size_t degree,
                                           const Limits& limits = {});

/// Partition of candidate magnets by equality of their truncated attractor
/// ideals, computed directly from the defining formula (elements t + s with
/// s outside the magnet), with no use of the classification engine.
///
/// For a sharp target the signatures are exact on the region: the search
/// window is the full grading ball covering every possible summand. For a
/// non-sharp target they are sound only up to the truncation, and `exact`
/// says which situation holds. Candidates whose generators stick out of the
/// search window are flagged; their signatures are under-approximations.
struct BruteForcePartition {
    std::vector<GroupElement> region;  // ball(target, degree): signature support
    std::vector<GroupElement> search;  // summand window
    bool exact = false;
    std::vector<std::vector<bool>> member_sets;  // per candidate, over `search`
    std::vector<bool> gens_within_truncation;    // per candidate
    std::vector<std::vector<bool>> signatures;   // per candidate, over `region`
    std::vector<std::vector<std::size_t>> classes;  // candidate index groups
};

BruteForcePartition attractor_classes_bruteforce(
    const ActionSpec& spec, const std::vector<FgMonoid>& candidates,
    std::size_t degree, const Limits& limits = {});

/// Largest integer not in the monoid generated by gens (which must have
/// gcd 1); -1 when there are no gaps. Certified by finding a full run of
/// min(gens) consecutive representable values.
Int frobenius_number(const std::vector<Int>& gens);

/// For a numerical target (rank 1, no torsion, positive generators): the
/// degree beyond which truncated ideal equality implies exact equality,
/// max(gens) + gcd * (frobenius + 1). nullopt for non-numerical targets.
std::optional<Int> numerical_exactness_threshold(const FgMonoid& l);

/// Brute-force cross-check of the pure magnet classification.
///
/// Enumerates candidate submonoids, partitions them by truncated ideal
/// equality, and compares against the predicted pure magnets: (a) each
/// predicted magnet is the generator-wise minimum of its class, (b) every
/// class contains a predicted magnet, (c) class and prediction counts agree.
/// (b) is a sound falsifier at any truncation; (a) and (c) are sound once
/// the predicted signatures are pairwise distinct (`conclusive`), which the
/// numerical exactness threshold certifies in advance.
struct OracleReport {
    std::size_t degree = 0;
    std::size_t candidate_degree = 0;
    std::size_t candidate_count = 0;
    std::size_t class_count = 0;
    std::vector<FgMonoid> class_minima;
    Int predicted_count = 0;
    std::vector<FgMonoid> predicted;
    bool exactness = false;
    bool conclusive = false;
    bool check_minimum = false;
    bool check_covered = false;
    bool check_count = false;
    bool matched = false;
    std::string witness;
};

OracleReport verify_theorem(const ActionSpec& spec, std::size_t degree,
                            const Limits& limits = {}, std::uint64_t seed = 0);

}  // namespace magnetite
