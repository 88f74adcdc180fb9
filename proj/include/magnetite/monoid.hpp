#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "magnetite/ambient.hpp"
#include "magnetite/numeric.hpp"

namespace magnetite {

/// Caps that turn runaway searches into ResourceLimitError instead of wrong
/// or partial answers. MAGNETITE_BALL_CAP / --ball-cap override ball_cap.
struct Limits {
    std::size_t ball_cap = 200000;
    Int coeff_cap = 1000000;
    std::size_t enumeration_cap = 4096;
};

/// Rational linear functional on the free part of an ambient group. For a
/// sharp monoid it takes value >= 1 on every generator, which bounds all
/// membership searches.
class Grading {
public:
    Grading() = default;
    explicit Grading(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {}

    Rat value(const GroupElement& x) const;
    const std::vector<Rat>& coefficients() const { return coeffs_; }

private:
    std::vector<Rat> coeffs_;
};

struct MonoidCache;

/// A finitely generated submonoid of an ambient group, presented by a
/// normalized generator list (no zero, no duplicates, input order kept).
/// Immutable; copies share the analysis cache.
class FgMonoid {
public:
    FgMonoid(AmbientGroup group, std::vector<GroupElement> gens);

    static FgMonoid zero_monoid(const AmbientGroup& group);

    const AmbientGroup& group() const { return group_; }
    const std::vector<GroupElement>& gens() const { return gens_; }

    /// Structural equality of presentations (not submonoid equality).
    bool operator==(const FgMonoid& other) const {
        return group_ == other.group_ && gens_ == other.gens_;
    }

    MonoidCache& cache() const { return *cache_; }

private:
    AmbientGroup group_;
    std::vector<GroupElement> gens_;
    std::shared_ptr<MonoidCache> cache_;
};

/// Witness for a positive membership answer: z = sum coefficients[i]*gens[i]
/// (+ unit_adjustment, an element of the unit face).
struct MembershipCertificate {
    IntVec coefficients;
    std::optional<GroupElement> unit_adjustment;

    GroupElement recompute(const FgMonoid& m) const;
};

struct ContainsResult {
    bool contained = false;
    std::optional<MembershipCertificate> certificate;
    explicit operator bool() const { return contained; }
};

/// The projection f: M -> M/M* at group level, the unit face M*, and the
/// sharp image monoid presented by the generator images.
struct SharpQuotient {
    QuotientMap map;
    FgMonoid units;
    FgMonoid image;
    /// For each image generator, the index of a source generator mapping to it.
    std::vector<std::size_t> image_gen_source;
};

/// Drops zeros and duplicates; order otherwise preserved. All generators must
/// share one ambient group.
FgMonoid normalize(const AmbientGroup& group, std::vector<GroupElement> gens);

/// The generators lying in the unit face M* = {x in M : -x in M}. A generator
/// g_j is a unit iff some rational c >= 0 with c_j >= 1 kills the free parts:
/// scale c to integers, then multiply by the lcm of the torsion orders to kill
/// torsion, giving an integer relation that exhibits an inverse for g_j.
std::vector<GroupElement> unit_generators(const FgMonoid& m);

/// M* as a monoid: generated by the unit generators and their negatives
/// (already a group as a set, since each unit generator has an inverse inside).
FgMonoid units_subgroup(const FgMonoid& m);

bool is_sharp(const FgMonoid& m);

/// f: M -> M/M* realized as the group quotient by the unit generators; the
/// image monoid is sharp. Cached; the reference stays valid as long as any
/// copy of m lives.
const SharpQuotient& sharp_quotient(const FgMonoid& m);

/// A rational functional with value >= 1 on every generator. Exists exactly
/// when the monoid is sharp (throws NotSharpError otherwise).
Grading positive_grading(const FgMonoid& m);

/// Exact membership with certificate. Non-sharp monoids reduce through the
/// sharp quotient; the sharp case is a grading-bounded search.
ContainsResult contains(const FgMonoid& m, const GroupElement& z,
                        const Limits& limits = {});

/// All sums of at most `degree` generators, deduplicated and sorted.
std::vector<GroupElement> ball(const FgMonoid& m, std::size_t degree,
                               const Limits& limits = {});

/// All elements x of a sharp monoid with grading value <= bound, sorted by
/// (grading value, lex). Complete because partial sums only lower the value.
std::vector<GroupElement> graded_ball(const FgMonoid& m, const Grading& phi,
                                      const Rat& bound, const Limits& limits = {});

/// Mutual containment of generator sets. Requires one ambient group.
bool same_submonoid(const FgMonoid& a, const FgMonoid& b, const Limits& limits = {});

}  // namespace magnetite
