#include "magnetite/magnets.hpp"

#include <algorithm>
#include <utility>

#include "magnetite/errors.hpp"

namespace magnetite {

ActionSpec::ActionSpec(FgMonoid acting, FgMonoid target, bool self)
    : acting_(std::move(acting)), target_(std::move(target)), self_(self) {}

ActionSpec ActionSpec::self_action(FgMonoid m) {
    FgMonoid copy = m;
    return ActionSpec(std::move(m), std::move(copy), true);
}

ActionSpec ActionSpec::action_on(FgMonoid acting, FgMonoid target,
                                 const Limits& limits) {
    if (acting.group() != target.group()) {
        throw DimensionError("acting and target monoids live in different ambient groups");
    }
    for (const GroupElement& g : target.gens()) {
        if (!contains(acting, g, limits)) {
            throw ValidationError("target generator " + format_element(g) +
                                  " is not contained in the acting monoid");
        }
    }
    return ActionSpec(std::move(acting), std::move(target), false);
}

namespace {

/// Unit generators of the target that n fails to contain. Nonempty exactly
/// when n misses part of the unit face L*: the unit face equals the submonoid
/// generated by the unit generators, so containing all of them means
/// containing all of L*.
bool n_contains_unit_face(const FgMonoid& l, const FgMonoid& n, const Limits& limits) {
    for (const GroupElement& u : unit_generators(l)) {
        if (!contains(n, u, limits)) return false;
    }
    return true;
}

void check_magnet_group(const FgMonoid& l, const FgMonoid& n) {
    if (n.group() != l.group()) {
        throw DimensionError("magnet lives outside the ambient group of the target");
    }
}

}  // namespace

bool ideal_membership(const ActionSpec& spec, const FgMonoid& n,
                      const GroupElement& m, const Limits& limits) {
    const FgMonoid& l = spec.target();
    check_magnet_group(l, n);
    if (!contains(l, m, limits)) {
        throw ValidationError("element " + format_element(m) +
                              " is outside the target monoid");
    }
    if (!n_contains_unit_face(l, n, limits)) return true;  // unit ideal

    // Descend to the sharp quotient: m in MonIdeal(L \ N) iff its image is in
    // MonIdeal(image \ f(N cap L)). Both directions use that n contains the
    // unit face here.
    const SharpQuotient& sq = sharp_quotient(l);
    Grading phi = positive_grading(sq.image);
    GroupElement mbar = sq.map.map(m);
    Rat budget = phi.value(mbar);
    for (const GroupElement& sbar : graded_ball(sq.image, phi, budget, limits)) {
        if (sbar.is_zero()) continue;  // 0 is always in f(N cap L)
        if (contains(n, sq.map.lift(sbar), limits)) continue;
        if (contains(sq.image, mbar - sbar, limits)) return true;
    }
    return false;
}

MonoidIdealView::MonoidIdealView(ActionSpec spec, FgMonoid magnet,
                                 std::size_t degree,
                                 std::vector<GroupElement> elements, Limits limits)
    : spec_(std::move(spec)),
      magnet_(std::move(magnet)),
      degree_(degree),
      elements_(std::move(elements)),
      limits_(limits) {}

bool MonoidIdealView::member(const GroupElement& m) const {
    return ideal_membership(spec_, magnet_, m, limits_);
}

MonoidIdealView attractor_ideal(const ActionSpec& spec, const FgMonoid& n,
                                std::size_t degree, const Limits& limits) {
    const FgMonoid& l = spec.target();
    check_magnet_group(l, n);
    std::vector<GroupElement> elements;
    for (const GroupElement& m : ball(l, degree, limits)) {
        if (ideal_membership(spec, n, m, limits)) elements.push_back(m);
    }
    return MonoidIdealView(spec, n, degree, std::move(elements), limits);
}

bool attractor_is_empty(const ActionSpec& spec, const FgMonoid& n,
                        const Limits& limits) {
    check_magnet_group(spec.target(), n);
    return !n_contains_unit_face(spec.target(), n, limits);
}

FgMonoid preimage(const SharpQuotient& f, const FgMonoid& p, const Limits& limits) {
    if (p.group() != f.image.group()) {
        throw DimensionError("submonoid lives outside the quotient group");
    }
    std::vector<GroupElement> gens = f.units.gens();
    for (const GroupElement& g : p.gens()) {
        if (!contains(f.image, g, limits)) {
            throw ValidationError("generator " + format_element(g) +
                                  " is outside the quotient image monoid");
        }
        gens.push_back(f.map.lift(g));
    }
    return FgMonoid(f.map.source(), std::move(gens));
}

FgMonoid classify(const ActionSpec& spec, const FgMonoid& n, const Limits& limits) {
    const FgMonoid& l = spec.target();
    check_magnet_group(l, n);
    if (!n_contains_unit_face(l, n, limits)) {
        return FgMonoid::zero_monoid(l.group());
    }
    if (is_sharp(l)) {
        std::vector<GroupElement> picked;
        for (const GroupElement& e : minimal_generators(l, limits)) {
            if (contains(n, e, limits)) picked.push_back(e);
        }
        return FgMonoid(l.group(), std::move(picked));
    }
    const SharpQuotient& sq = sharp_quotient(l);
    std::vector<GroupElement> gens = sq.units.gens();
    for (const GroupElement& ebar : minimal_generators(sq.image, limits)) {
        // ebar lies in f(N cap L) iff this one lift lies in n: lifts differ
        // by unit-face elements, all of which n contains in this branch.
        GroupElement lift = sq.map.lift(ebar);
        if (contains(n, lift, limits)) gens.push_back(std::move(lift));
    }
    return FgMonoid(l.group(), std::move(gens));
}

bool is_pure(const ActionSpec& spec, const FgMonoid& n, const Limits& limits) {
    return same_submonoid(classify(spec, n, limits), n, limits);
}

bool attractor_equal(const ActionSpec& spec, const FgMonoid& n1,
                     const FgMonoid& n2, const Limits& limits) {
    return same_submonoid(classify(spec, n1, limits), classify(spec, n2, limits),
                          limits);
}

PureMagnetEntry PureMagnetReport::entry(const Int& index) const {
    if (index < 0 || index >= count_) {
        throw ValidationError("pure magnet index out of range");
    }
    Int mask = index;
    if (units_present_) {
        if (index == 0) {
            return {true, {}, FgMonoid::zero_monoid(group_)};
        }
        mask = index - 1;
    }
    std::vector<GroupElement> subset;
    for (std::size_t i = 0; i < lifts_.size(); ++i) {
        if (boost::multiprecision::bit_test(mask, static_cast<unsigned>(i))) {
            subset.push_back(lifts_[i]);
        }
    }
    std::vector<GroupElement> gens = unit_gens_;
    gens.insert(gens.end(), subset.begin(), subset.end());
    FgMonoid magnet(group_, std::move(gens));
    const bool zero = !units_present_ && subset.empty();
    return {zero, std::move(subset), std::move(magnet)};
}

std::vector<PureMagnetEntry> PureMagnetReport::list(const Limits& limits) const {
    if (count_ > Int(limits.enumeration_cap)) {
        throw ResourceLimitError("pure magnet enumeration exceeds the cap (count " +
                                 count_.str() + ")");
    }
    std::vector<PureMagnetEntry> out;
    for (Int i = 0; i < count_; ++i) out.push_back(entry(i));
    return out;
}

PureMagnetReport pure_magnets(const ActionSpec& spec, const Limits& limits) {
    const FgMonoid& l = spec.target();
    PureMagnetReport report;
    report.group_ = l.group();
    if (is_sharp(l)) {
        report.units_present_ = false;
        report.lifts_ = minimal_generators(l, limits);
        report.count_ = Int(1) << report.lifts_.size();
        return report;
    }
    const SharpQuotient& sq = sharp_quotient(l);
    report.units_present_ = true;
    report.unit_gens_ = sq.units.gens();
    for (const GroupElement& ebar : minimal_generators(sq.image, limits)) {
        report.lifts_.push_back(sq.map.lift(ebar));
    }
    report.count_ = (Int(1) << report.lifts_.size()) + 1;
    return report;
}

Int pure_magnet_count(const ActionSpec& spec, const Limits& limits) {
    return pure_magnets(spec, limits).count();
}

QuotientPresentation quotient_presentation(const ActionSpec& spec,
                                           const FgMonoid& n, std::size_t degree,
                                           const Limits& limits) {
    const FgMonoid& l = spec.target();
    check_magnet_group(l, n);
    QuotientPresentation out;
    out.degree = degree;
    out.empty_scheme = attractor_is_empty(spec, n, limits);
    for (const GroupElement& m : ball(l, degree, limits)) {
        if (ideal_membership(spec, n, m, limits)) {
            out.ideal_elements.push_back(m);
        } else {
            out.basis.push_back(m);
        }
    }
    return out;
}

}  // namespace magnetite
