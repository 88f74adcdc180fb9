#pragma once

#include <vector>

#include "magnetite/generators.hpp"
#include "magnetite/monoid.hpp"

namespace magnetite {

/// An acting monoid M together with a target L contained in it. Magnets are
/// finitely generated submonoids of the ambient group; every attractor
/// computation factors through the trace on L, so the self-action of L
/// carries all the structure.
class ActionSpec {
public:
    static ActionSpec self_action(FgMonoid m);
    /// Validates that every generator of target belongs to acting.
    static ActionSpec action_on(FgMonoid acting, FgMonoid target,
                                const Limits& limits = {});

    const FgMonoid& acting() const { return acting_; }
    const FgMonoid& target() const { return target_; }
    bool is_self_action() const { return self_; }

private:
    ActionSpec(FgMonoid acting, FgMonoid target, bool self);

    FgMonoid acting_;
    FgMonoid target_;
    bool self_;
};

/// Is m in the monoid ideal of L generated by L \ (N cap L)? Exact: if some
/// unit generator of L escapes N the ideal is everything; otherwise the
/// question descends to the sharp quotient, where the search is bounded by
/// the grading. Throws ValidationError when m is outside L.
bool ideal_membership(const ActionSpec& spec, const FgMonoid& n,
                      const GroupElement& m, const Limits& limits = {});

/// Truncated view of the attractor ideal: its elements within ball(L, degree)
/// plus an exact membership predicate for anything in L.
class MonoidIdealView {
public:
    MonoidIdealView(ActionSpec spec, FgMonoid magnet, std::size_t degree,
                    std::vector<GroupElement> elements, Limits limits);

    const FgMonoid& carrier() const { return spec_.target(); }
    std::size_t degree() const { return degree_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    bool member(const GroupElement& m) const;

private:
    ActionSpec spec_;
    FgMonoid magnet_;
    std::size_t degree_;
    std::vector<GroupElement> elements_;
    Limits limits_;
};

MonoidIdealView attractor_ideal(const ActionSpec& spec, const FgMonoid& n,
                                std::size_t degree, const Limits& limits = {});

/// The attractor is empty exactly when some unit generator of L lies outside
/// N (equivalently, 0 lies in the attractor ideal: a unit outside N factors
/// zero as t + s with s excluded).
bool attractor_is_empty(const ActionSpec& spec, const FgMonoid& n,
                        const Limits& limits = {});

/// Full preimage f^-1(P) of a submonoid P of the sharp quotient: generated by
/// one lift per generator of P together with the unit face. Throws
/// ValidationError when a generator of P is outside the image monoid.
FgMonoid preimage(const SharpQuotient& f, const FgMonoid& p,
                  const Limits& limits = {});

/// The pure magnet with the same attractor as n. Unit generators escaping n
/// force the zero magnet; otherwise the trace of n on the minimal generators
/// of the sharp quotient determines it. One lift decides each membership test
/// because n contains the unit face in that branch.
FgMonoid classify(const ActionSpec& spec, const FgMonoid& n,
                  const Limits& limits = {});

bool is_pure(const ActionSpec& spec, const FgMonoid& n, const Limits& limits = {});

/// Exact attractor equality, decided through classify.
bool attractor_equal(const ActionSpec& spec, const FgMonoid& n1,
                     const FgMonoid& n2, const Limits& limits = {});

struct PureMagnetEntry {
    bool zero_magnet = false;
    /// Defining subset of the lifted minimal generators (empty for the zero
    /// magnet of a non-sharp target, which has no subset tag).
    std::vector<GroupElement> subset;
    FgMonoid magnet;
};

/// The set of pure magnets of the action: 2^|E| subset magnets, plus the zero
/// magnet when the target has units. Entries are generated lazily from the
/// subset index; the exact count is always available.
class PureMagnetReport {
public:
    const Int& count() const { return count_; }
    bool units_present() const { return units_present_; }
    const std::vector<GroupElement>& lifted_minimal_generators() const {
        return lifts_;
    }
    const std::vector<GroupElement>& unit_face_generators() const {
        return unit_gens_;
    }

    /// index in [0, count): 0 is the zero magnet when units are present, then
    /// subsets of the lifted generators in increasing bitmask order.
    PureMagnetEntry entry(const Int& index) const;

    /// Materializes every entry. ResourceLimitError when count exceeds the
    /// enumeration cap (the count itself is still exact).
    std::vector<PureMagnetEntry> list(const Limits& limits = {}) const;

private:
    friend PureMagnetReport pure_magnets(const ActionSpec&, const Limits&);

    AmbientGroup group_;
    bool units_present_ = false;
    std::vector<GroupElement> unit_gens_;
    std::vector<GroupElement> lifts_;
    Int count_ = 0;
};

PureMagnetReport pure_magnets(const ActionSpec& spec, const Limits& limits = {});

/// 2^|E| (plus one when units are present) without enumeration.
Int pure_magnet_count(const ActionSpec& spec, const Limits& limits = {});

/// Monomial basis of the attractor quotient up to word length `degree`: the
/// ball elements that survive the attractor ideal.
struct QuotientPresentation {
    std::size_t degree = 0;
    std::vector<GroupElement> basis;
    std::vector<GroupElement> ideal_elements;
    bool empty_scheme = false;
};

QuotientPresentation quotient_presentation(const ActionSpec& spec,
                                           const FgMonoid& n, std::size_t degree,
                                           const Limits& limits = {});

}  // namespace magnetite
