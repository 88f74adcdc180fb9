#include "magnetite/monoid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <utility>

#include "magnetite/errors.hpp"
#include "magnetite/rational_lp.hpp"

namespace magnetite {

struct MonoidCache {
    std::mutex mu;
    std::optional<std::vector<std::size_t>> unit_indices;
    std::optional<Grading> grading;
    std::shared_ptr<const SharpQuotient> sharp;
};

Rat Grading::value(const GroupElement& x) const {
    const IntVec& free = x.free();
    if (coeffs_.size() != free.size()) {
        throw DimensionError("grading does not match the ambient rank");
    }
    Rat s = 0;
    for (std::size_t i = 0; i < free.size(); ++i) s += coeffs_[i] * Rat(free[i]);
    return s;
}

FgMonoid::FgMonoid(AmbientGroup group, std::vector<GroupElement> gens)
    : group_(std::move(group)), cache_(std::make_shared<MonoidCache>()) {
    gens_.reserve(gens.size());
    for (GroupElement& g : gens) {
        if (g.group() != group_) {
            throw DimensionError("generator outside the ambient group");
        }
        if (g.is_zero()) continue;
        if (std::find(gens_.begin(), gens_.end(), g) != gens_.end()) continue;
        gens_.push_back(std::move(g));
    }
}

FgMonoid FgMonoid::zero_monoid(const AmbientGroup& group) {
    return FgMonoid(group, {});
}

FgMonoid normalize(const AmbientGroup& group, std::vector<GroupElement> gens) {
    return FgMonoid(group, std::move(gens));
}

GroupElement MembershipCertificate::recompute(const FgMonoid& m) const {
    if (coefficients.size() != m.gens().size()) {
        throw DimensionError("certificate length does not match generator count");
    }
    GroupElement acc = GroupElement::zero(m.group());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i] < 0) {
            throw ValidationError("certificate coefficients must be nonnegative");
        }
        if (coefficients[i] != 0) acc = acc + m.gens()[i].scaled(coefficients[i]);
    }
    if (unit_adjustment) acc = acc + *unit_adjustment;
    return acc;
}

namespace {

const std::vector<std::size_t>& unit_indices(const FgMonoid& m) {
    MonoidCache& cache = m.cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    if (cache.unit_indices) return *cache.unit_indices;

    const std::size_t n = m.gens().size();
    const std::size_t r = m.group().rank;
    std::vector<std::size_t> units;
    // g_j is a unit iff {u >= 0 : A u = -free(g_j)} is feasible, where A is
    // the matrix of generator free parts (substituting c = e_j + u into the
    // defining relation A c = 0, c >= 0, c_j >= 1).
    RatMatrix a(r, std::vector<Rat>(n));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.gens()[j].free()[i]);
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rat> b(r);
        for (std::size_t i = 0; i < r; ++i) b[i] = -a[i][j];
        if (solve_nonnegative(a, b)) units.push_back(j);
    }
    cache.unit_indices = std::move(units);
    return *cache.unit_indices;
}

ContainsResult sharp_contains(const FgMonoid& m, const GroupElement& z,
                              const Limits& limits);

const SharpQuotient& sharp_quotient_impl(const FgMonoid& m) {
    {
        MonoidCache& cache = m.cache();
        std::lock_guard<std::mutex> lock(cache.mu);
        if (cache.sharp) return *cache.sharp;
    }
    // Build outside the lock; unit_indices takes the same mutex.
    const std::vector<std::size_t>& units = unit_indices(m);
    std::vector<GroupElement> unit_gens;
    unit_gens.reserve(units.size());
    for (std::size_t j : units) unit_gens.push_back(m.gens()[j]);

    QuotientMap q = quotient_by_subgroup(m.group(), unit_gens);

    std::vector<GroupElement> image_gens;
    std::vector<std::size_t> sources;
    for (std::size_t i = 0; i < m.gens().size(); ++i) {
        GroupElement v = q.map(m.gens()[i]);
        if (v.is_zero()) continue;
        if (std::find(image_gens.begin(), image_gens.end(), v) != image_gens.end()) {
            continue;
        }
        image_gens.push_back(std::move(v));
        sources.push_back(i);
    }
    AmbientGroup target = q.target();

    std::vector<GroupElement> closed = unit_gens;
    for (const GroupElement& u : unit_gens) closed.push_back(-u);

    auto sq = std::make_shared<SharpQuotient>(SharpQuotient{
        std::move(q),
        FgMonoid(m.group(), std::move(closed)),
        FgMonoid(target, std::move(image_gens)),
        std::move(sources)});

    MonoidCache& cache = m.cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    if (!cache.sharp) cache.sharp = std::move(sq);
    return *cache.sharp;
}

Grading positive_grading_impl(const FgMonoid& m) {
    {
        MonoidCache& cache = m.cache();
        std::lock_guard<std::mutex> lock(cache.mu);
        if (cache.grading) return *cache.grading;
    }
    if (!unit_indices(m).empty()) {
        throw NotSharpError("positive grading requires a sharp monoid");
    }
    const std::size_t n = m.gens().size();
    const std::size_t r = m.group().rank;
    Grading result;
    if (n > 0) {
        // Find phi with phi(free(g)) >= 1 for all generators: split phi into
        // positive and negative parts and add slacks, then run phase 1 on
        // [W | -W | -I] x = 1. Sharpness guarantees feasibility.
        RatMatrix a(n, std::vector<Rat>(2 * r + n));
        std::vector<Rat> b(n, Rat(1));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                Rat w = Rat(m.gens()[i].free()[j]);
                a[i][j] = w;
                a[i][r + j] = -w;
            }
            a[i][2 * r + i] = -1;
        }
        auto sol = solve_nonnegative(a, b);
        if (!sol) {
            throw Error("internal: no positive grading for a sharp monoid");
        }
        std::vector<Rat> coeffs(r);
        for (std::size_t j = 0; j < r; ++j) coeffs[j] = (*sol)[j] - (*sol)[r + j];
        result = Grading(std::move(coeffs));
    } else {
        result = Grading(std::vector<Rat>(r));
    }
    MonoidCache& cache = m.cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    if (!cache.grading) cache.grading = result;
    return *cache.grading;
}

/// Grading-bounded search for z = sum c_i g_i with c >= 0 integral.
/// Any solution satisfies sum c_i phi(g_i) = phi(z) with each phi(g_i) >= 1,
/// so coefficients are bounded by the remaining budget.
class SharpSearch {
public:
    SharpSearch(const FgMonoid& m, const Grading& phi, const Limits& limits)
        : m_(m), phi_(phi), limits_(limits) {}

    std::optional<IntVec> run(const GroupElement& z) {
        coeffs_.assign(m_.gens().size(), Int(0));
        if (search(0, z)) return coeffs_;
        return std::nullopt;
    }

private:
    bool search(std::size_t idx, const GroupElement& target) {
        if (idx == m_.gens().size()) return target.is_zero();
        auto key = std::make_pair(idx, target);
        auto it = memo_.find(key);
        if (it != memo_.end() && !it->second) return false;

        Rat budget = phi_.value(target);
        if (budget < 0) {
            memo_[key] = false;
            return false;
        }
        const GroupElement& g = m_.gens()[idx];
        Int max_c = rat_floor(budget / phi_.value(g));
        if (max_c > limits_.coeff_cap) {
            throw ResourceLimitError("membership coefficient bound exceeds the cap");
        }
        GroupElement rest = target;
        for (Int c = 0; c <= max_c; ++c) {
            if (search(idx + 1, rest)) {
                coeffs_[idx] = c;
                return true;
            }
            rest = rest - g;
        }
        memo_[key] = false;
        return false;
    }

    const FgMonoid& m_;
    const Grading& phi_;
    const Limits& limits_;
    IntVec coeffs_;
    std::map<std::pair<std::size_t, GroupElement>, bool> memo_;
};

ContainsResult sharp_contains(const FgMonoid& m, const GroupElement& z,
                              const Limits& limits) {
    if (z.is_zero()) {
        return {true, MembershipCertificate{IntVec(m.gens().size()), std::nullopt}};
    }
    if (m.gens().empty()) return {false, std::nullopt};
    Grading phi = positive_grading_impl(m);
    SharpSearch search(m, phi, limits);
    auto coeffs = search.run(z);
    if (!coeffs) return {false, std::nullopt};
    return {true, MembershipCertificate{std::move(*coeffs), std::nullopt}};
}

}  // namespace

std::vector<GroupElement> unit_generators(const FgMonoid& m) {
    std::vector<GroupElement> out;
    for (std::size_t j : unit_indices(m)) out.push_back(m.gens()[j]);
    return out;
}

FgMonoid units_subgroup(const FgMonoid& m) {
    std::vector<GroupElement> gens = unit_generators(m);
    const std::size_t n = gens.size();
    for (std::size_t i = 0; i < n; ++i) gens.push_back(-gens[i]);
    return FgMonoid(m.group(), std::move(gens));
}

bool is_sharp(const FgMonoid& m) { return unit_indices(m).empty(); }

const SharpQuotient& sharp_quotient(const FgMonoid& m) {
    return sharp_quotient_impl(m);
}

Grading positive_grading(const FgMonoid& m) { return positive_grading_impl(m); }

ContainsResult contains(const FgMonoid& m, const GroupElement& z,
                        const Limits& limits) {
    if (z.group() != m.group()) {
        throw DimensionError("query element outside the ambient group");
    }
    if (z.is_zero()) {
        return {true, MembershipCertificate{IntVec(m.gens().size()), std::nullopt}};
    }
    if (m.gens().empty()) return {false, std::nullopt};

    if (is_sharp(m)) return sharp_contains(m, z, limits);

    // z is in M iff f(z) is in M/M*: any membership upstairs transports down
    // because lifts differ by elements of M*, which M contains.
    const SharpQuotient& sq = sharp_quotient(m);
    GroupElement zq = sq.map.map(z);
    ContainsResult imres = sharp_contains(sq.image, zq, limits);
    if (!imres.contained) return {false, std::nullopt};

    IntVec coeffs(m.gens().size());
    const IntVec& image_coeffs = imres.certificate->coefficients;
    for (std::size_t k = 0; k < image_coeffs.size(); ++k) {
        coeffs[sq.image_gen_source[k]] += image_coeffs[k];
    }
    GroupElement w = GroupElement::zero(m.group());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) w = w + m.gens()[i].scaled(coeffs[i]);
    }
    GroupElement adjust = z - w;
    std::optional<GroupElement> unit;
    if (!adjust.is_zero()) unit = adjust;
    return {true, MembershipCertificate{std::move(coeffs), std::move(unit)}};
}

std::vector<GroupElement> ball(const FgMonoid& m, std::size_t degree,
                               const Limits& limits) {
    std::set<GroupElement> all;
    std::vector<GroupElement> frontier;
    all.insert(GroupElement::zero(m.group()));
    frontier.push_back(GroupElement::zero(m.group()));
    for (std::size_t d = 0; d < degree && !frontier.empty(); ++d) {
        std::vector<GroupElement> next;
        for (const GroupElement& x : frontier) {
            for (const GroupElement& g : m.gens()) {
                GroupElement y = x + g;
                if (all.insert(y).second) {
                    if (all.size() > limits.ball_cap) {
                        throw ResourceLimitError("ball size exceeds the configured cap");
                    }
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    return {all.begin(), all.end()};
}

std::vector<GroupElement> graded_ball(const FgMonoid& m, const Grading& phi,
                                      const Rat& bound, const Limits& limits) {
    std::set<GroupElement> all;
    std::vector<GroupElement> frontier;
    GroupElement zero = GroupElement::zero(m.group());
    if (bound < 0) return {};
    all.insert(zero);
    frontier.push_back(zero);
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const GroupElement& x : frontier) {
            for (const GroupElement& g : m.gens()) {
                GroupElement y = x + g;
                if (phi.value(y) > bound) continue;
                if (all.insert(y).second) {
                    if (all.size() > limits.ball_cap) {
                        throw ResourceLimitError("graded ball exceeds the configured cap");
                    }
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<GroupElement> out(all.begin(), all.end());
    std::stable_sort(out.begin(), out.end(),
                     [&](const GroupElement& a, const GroupElement& b) {
                         Rat pa = phi.value(a), pb = phi.value(b);
                         if (pa != pb) return pa < pb;
                         return a < b;
                     });
    return out;
}

bool same_submonoid(const FgMonoid& a, const FgMonoid& b, const Limits& limits) {
    if (a.group() != b.group()) {
        throw DimensionError("submonoid comparison across ambient groups");
    }
    for (const GroupElement& g : a.gens()) {
        if (!contains(b, g, limits).contained) return false;
    }
    for (const GroupElement& g : b.gens()) {
        if (!contains(a, g, limits).contained) return false;
    }
    return true;
}

}  // namespace magnetite
