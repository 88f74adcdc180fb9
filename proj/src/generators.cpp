#include "magnetite/generators.hpp"

#include <algorithm>
#include <numeric>

#include "magnetite/errors.hpp"

namespace magnetite {

namespace {

std::vector<GroupElement> greedy_removal(const FgMonoid& m,
                                         const std::vector<std::size_t>& order,
                                         const Limits& limits) {
    std::vector<GroupElement> kept = m.gens();
    // One pass suffices: when g survives its test, the surviving set only
    // shrinks afterwards, so g stays outside the span of the others.
    for (std::size_t idx : order) {
        const GroupElement& g = m.gens()[idx];
        auto it = std::find(kept.begin(), kept.end(), g);
        if (it == kept.end()) continue;
        std::vector<GroupElement> rest;
        rest.reserve(kept.size() - 1);
        for (const GroupElement& h : kept) {
            if (!(h == g)) rest.push_back(h);
        }
        if (contains(FgMonoid(m.group(), rest), g, limits)) {
            kept = std::move(rest);
        }
    }
    return kept;
}

}  // namespace

std::vector<GroupElement> minimal_generators(const FgMonoid& m, const Limits& limits) {
    Grading phi = positive_grading(m);  // throws NotSharpError if m has units
    std::vector<std::size_t> order(m.gens().size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        Rat pa = phi.value(m.gens()[a]), pb = phi.value(m.gens()[b]);
        if (pa != pb) return pa < pb;
        return m.gens()[a] < m.gens()[b];
    });
    std::vector<GroupElement> result = greedy_removal(m, order, limits);
    std::sort(result.begin(), result.end(), [&](const GroupElement& a, const GroupElement& b) {
        Rat pa = phi.value(a), pb = phi.value(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return result;
}

std::vector<GroupElement> minimal_generators_with_order(
    const FgMonoid& m, const std::vector<std::size_t>& order, const Limits& limits) {
    positive_grading(m);  // sharpness gate
    if (order.size() != m.gens().size()) {
        throw DimensionError("permutation length does not match generator count");
    }
    return greedy_removal(m, order, limits);
}

bool is_minimal_generating(const FgMonoid& m, const std::vector<GroupElement>& e,
                           const Limits& limits) {
    for (const GroupElement& x : e) {
        if (!contains(m, x, limits)) {
            throw ValidationError("candidate generator " + format_element(x) +
                                  " lies outside the monoid");
        }
    }
    FgMonoid span(m.group(), e);
    for (const GroupElement& g : m.gens()) {
        if (!contains(span, g, limits)) return false;
    }
    for (std::size_t i = 0; i < span.gens().size(); ++i) {
        std::vector<GroupElement> rest;
        for (std::size_t j = 0; j < span.gens().size(); ++j) {
            if (j != i) rest.push_back(span.gens()[j]);
        }
        if (contains(FgMonoid(m.group(), rest), span.gens()[i], limits)) {
            return false;
        }
    }
    return true;
}

}  // namespace magnetite
