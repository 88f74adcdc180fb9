#include "magnetite/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "magnetite/errors.hpp"

namespace magnetite {

namespace {

constexpr std::size_t kMaxSieve = 10000000;

/// Shared machinery for the brute-force signatures: a search window of target
/// elements with difference tables, so per-candidate membership closures and
/// ideal signatures are plain index scans.
struct BruteContext {
    std::vector<GroupElement> region;
    std::vector<GroupElement> search;
    bool exact = false;
    std::map<GroupElement, std::size_t> search_index;
    // diff_ss[x][s] = index of search[x] - search[s] in search, or npos.
    std::vector<std::vector<std::size_t>> diff_ss;
    std::vector<std::size_t> region_in_search;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BruteContext(const FgMonoid& l, std::size_t degree, const Limits& limits) {
        region = ball(l, degree, limits);
        if (is_sharp(l)) {
            Grading phi = positive_grading(l);
            Rat w = 0;
            for (const GroupElement& x : region) w = std::max(w, phi.value(x));
            search = graded_ball(l, phi, w, limits);
            exact = true;
        } else {
            // No grading bound exists; widen the window and report the
            // signatures as sound only up to the truncation.
            search = ball(l, 2 * degree + 2, limits);
            exact = false;
        }
        for (std::size_t i = 0; i < search.size(); ++i) search_index[search[i]] = i;
        diff_ss.assign(search.size(), std::vector<std::size_t>(search.size(), npos));
        for (std::size_t x = 0; x < search.size(); ++x) {
            for (std::size_t s = 0; s < search.size(); ++s) {
                auto it = search_index.find(search[x] - search[s]);
                if (it != search_index.end()) diff_ss[x][s] = it->second;
            }
        }
        region_in_search.reserve(region.size());
        for (const GroupElement& x : region) {
            auto it = search_index.find(x);
            if (it == search_index.end()) {
                throw Error("internal: truncation region escapes the search window");
            }
            region_in_search.push_back(it->second);
        }
    }

    /// Membership of the submonoid generated by `gens` on the search window,
    /// by additive closure. Exact when the window is a full grading ball and
    /// all generators are inside it.
    std::vector<bool> membership_closure(const std::vector<GroupElement>& gens,
                                         bool* gens_inside) const {
        std::vector<std::size_t> gen_idx;
        bool inside = true;
        for (const GroupElement& g : gens) {
            auto it = search_index.find(g);
            if (it == search_index.end()) {
                inside = false;
                continue;
            }
            gen_idx.push_back(it->second);
        }
        if (gens_inside) *gens_inside = inside;

        std::vector<bool> member(search.size(), false);
        for (std::size_t x = 0; x < search.size(); ++x) {
            if (search[x].is_zero()) member[x] = true;
        }
        // The search window is sorted by grading in the sharp case, so one
        // ascending pass settles everything; otherwise iterate to a fixpoint.
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t x = 0; x < search.size(); ++x) {
                if (member[x]) continue;
                for (std::size_t g : gen_idx) {
                    std::size_t d = diff_ss[x][g];
                    if (d != npos && member[d]) {
                        member[x] = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
        return member;
    }

    /// Truncated ideal signature over the region: m is flagged when m = t + s
    /// with s in the window but outside the candidate and t in the window.
    std::vector<bool> ideal_signature(const std::vector<bool>& member) const {
        std::vector<bool> sig(region.size(), false);
        for (std::size_t i = 0; i < region.size(); ++i) {
            std::size_t x = region_in_search[i];
            for (std::size_t s = 0; s < search.size(); ++s) {
                if (member[s]) continue;
                if (diff_ss[x][s] != npos) {
                    sig[i] = true;
                    break;
                }
            }
        }
        return sig;
    }
};

}  // namespace

std::vector<FgMonoid> enumerate_submonoids(const FgMonoid& m, std::size_t degree,
                                           const Limits& limits) {
    std::vector<GroupElement> b = ball(m, degree, limits);
    std::vector<GroupElement> els;
    for (const GroupElement& x : b) {
        if (!x.is_zero()) els.push_back(x);
    }
    if (els.size() >= 63 || (std::uint64_t(1) << els.size()) > limits.enumeration_cap) {
        throw ResourceLimitError("submonoid enumeration over " +
                                 std::to_string(els.size()) +
                                 " ball elements exceeds the cap");
    }

    BruteContext ctx(m, 2 * degree, limits);
    std::vector<FgMonoid> out;
    std::set<std::vector<bool>> seen;
    const std::uint64_t total = std::uint64_t(1) << els.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<GroupElement> subset;
        for (std::size_t i = 0; i < els.size(); ++i) {
            if (mask & (std::uint64_t(1) << i)) subset.push_back(els[i]);
        }
        std::vector<bool> member = ctx.membership_closure(subset, nullptr);
        std::vector<bool> sig;
        sig.reserve(ctx.region.size());
        for (std::size_t idx : ctx.region_in_search) sig.push_back(member[idx]);
        if (seen.insert(std::move(sig)).second) {
            out.emplace_back(m.group(), std::move(subset));
        }
    }
    return out;
}

BruteForcePartition attractor_classes_bruteforce(
    const ActionSpec& spec, const std::vector<FgMonoid>& candidates,
    std::size_t degree, const Limits& limits) {
    const FgMonoid& l = spec.target();
    BruteContext ctx(l, degree, limits);

    BruteForcePartition part;
    part.region = ctx.region;
    part.search = ctx.search;
    part.exact = ctx.exact;

    std::map<std::vector<bool>, std::size_t> class_of_sig;
    for (const FgMonoid& n : candidates) {
        if (n.group() != l.group()) {
            throw DimensionError("candidate magnet outside the ambient group");
        }
        bool inside = true;
        std::vector<bool> member = ctx.membership_closure(n.gens(), &inside);
        std::vector<bool> sig = ctx.ideal_signature(member);
        part.member_sets.push_back(std::move(member));
        part.gens_within_truncation.push_back(inside);

        auto [it, fresh] = class_of_sig.try_emplace(sig, part.classes.size());
        if (fresh) {
            part.classes.emplace_back();
            part.signatures.push_back(sig);
        }
        part.classes[it->second].push_back(part.member_sets.size() - 1);
    }
    return part;
}

Int frobenius_number(const std::vector<Int>& gens) {
    if (gens.empty()) throw ValidationError("frobenius number needs generators");
    Int g = 0;
    for (const Int& a : gens) {
        if (a <= 0) throw ValidationError("frobenius number needs positive generators");
        g = gcd(g, a);
    }
    if (g != 1) throw ValidationError("frobenius number needs gcd 1");

    std::vector<std::size_t> vals;
    for (const Int& a : gens) {
        if (a > Int(kMaxSieve)) {
            throw ResourceLimitError("frobenius sieve bound exceeded");
        }
        vals.push_back(static_cast<std::size_t>(a));
    }
    std::size_t amin = *std::min_element(vals.begin(), vals.end());
    std::size_t amax = *std::max_element(vals.begin(), vals.end());
    if (amin == 1) return Int(-1);

    std::size_t bound = amin * amax + amax;
    for (;;) {
        if (bound > kMaxSieve) {
            throw ResourceLimitError("frobenius sieve bound exceeded");
        }
        std::vector<bool> reach(bound + 1, false);
        reach[0] = true;
        for (std::size_t x = 1; x <= bound; ++x) {
            for (std::size_t a : vals) {
                if (a <= x && reach[x - a]) {
                    reach[x] = true;
                    break;
                }
            }
        }
        // A run of amin consecutive representable values certifies that
        // everything beyond it is representable.
        std::size_t run = 0;
        for (std::size_t x = 0; x <= bound; ++x) {
            run = reach[x] ? run + 1 : 0;
            if (run == amin) {
                std::size_t first = x + 1 - amin;
                if (first == 0) return Int(-1);
                for (std::size_t y = first; y-- > 0;) {
                    if (!reach[y]) return Int(y);
                }
                return Int(-1);
            }
        }
        bound *= 2;
    }
}

std::optional<Int> numerical_exactness_threshold(const FgMonoid& l) {
    if (l.group().rank != 1 || !l.group().torsion.empty()) return std::nullopt;
    if (l.gens().empty()) return Int(0);
    Int g = 0, maxgen = 0;
    for (const GroupElement& x : l.gens()) {
        const Int& v = x.free()[0];
        if (v <= 0) return std::nullopt;
        g = gcd(g, v);
        maxgen = std::max(maxgen, v);
    }
    std::vector<Int> scaled;
    for (const GroupElement& x : l.gens()) scaled.push_back(x.free()[0] / g);
    Int f = frobenius_number(scaled);
    return maxgen + g * (f + 1);
}

namespace {

std::string describe_monoid(const FgMonoid& m) {
    return format_elements(m.gens());
}

}  // namespace

OracleReport verify_theorem(const ActionSpec& spec, std::size_t degree,
                            const Limits& limits, std::uint64_t seed) {
    const FgMonoid& l = spec.target();
    OracleReport report;
    report.degree = degree;

    PureMagnetReport pm = pure_magnets(spec, limits);
    report.predicted_count = pm.count();
    for (const PureMagnetEntry& e : pm.list(limits)) {
        report.predicted.push_back(e.magnet);
    }

    // Largest generation degree whose subset count stays under the cap.
    std::size_t dgen = 0;
    for (std::size_t d = 1; d <= std::max<std::size_t>(degree, 1); ++d) {
        std::size_t nonzero = ball(l, d, limits).size() - 1;
        if (nonzero >= 63 ||
            (std::uint64_t(1) << nonzero) > limits.enumeration_cap) {
            break;
        }
        dgen = d;
    }
    if (dgen == 0) {
        throw ResourceLimitError("no generation degree fits the enumeration cap");
    }
    report.candidate_degree = dgen;

    std::vector<FgMonoid> candidates = enumerate_submonoids(l, dgen, limits);
    report.candidate_count = candidates.size();

    // Candidate processing order is shufflable; the partition and the report
    // are canonicalized afterwards, so the seed never changes the outcome.
    std::vector<std::size_t> order(candidates.size() + report.predicted.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    std::vector<FgMonoid> all;
    all.reserve(order.size());
    auto item = [&](std::size_t i) -> const FgMonoid& {
        return i < candidates.size() ? candidates[i]
                                     : report.predicted[i - candidates.size()];
    };
    for (std::size_t i : order) all.push_back(item(i));

    BruteForcePartition part = attractor_classes_bruteforce(spec, all, degree, limits);

    // Map back: position in `all` -> logical index.
    std::vector<std::size_t> logical(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) logical[pos] = order[pos];
    auto is_predicted = [&](std::size_t pos) {
        return logical[pos] >= candidates.size();
    };
    auto predicted_index = [&](std::size_t pos) {
        return logical[pos] - candidates.size();
    };

    report.class_count = part.classes.size();
    report.exactness = false;
    if (auto threshold = numerical_exactness_threshold(l)) {
        report.exactness = Int(degree) >= *threshold;
    }

    // Conclusive: the predicted magnets land in pairwise distinct classes.
    std::set<std::size_t> predicted_classes;
    std::vector<std::size_t> class_of(order.size());
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        for (std::size_t pos : part.classes[c]) class_of[pos] = c;
    }
    std::size_t predicted_total = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (is_predicted(pos)) {
            predicted_classes.insert(class_of[pos]);
            ++predicted_total;
        }
    }
    report.conclusive = predicted_classes.size() == predicted_total;

    auto gen_in_member = [&](const GroupElement& g, std::size_t member_pos) {
        auto it = std::find(part.search.begin(), part.search.end(), g);
        if (it != part.search.end()) {
            return static_cast<bool>(
                part.member_sets[member_pos][it - part.search.begin()]);
        }
        return contains(all[member_pos], g, limits).contained;
    };

    // (a) every predicted magnet is the generator-wise minimum of its class.
    report.check_minimum = true;
    for (std::size_t pos = 0; pos < order.size() && report.check_minimum; ++pos) {
        if (!is_predicted(pos)) continue;
        const FgMonoid& p = report.predicted[predicted_index(pos)];
        for (std::size_t member_pos : part.classes[class_of[pos]]) {
            for (const GroupElement& g : p.gens()) {
                if (!gen_in_member(g, member_pos)) {
                    report.check_minimum = false;
                    if (report.witness.empty()) {
                        report.witness = "predicted magnet " + describe_monoid(p) +
                                         " is not contained in class member " +
                                         describe_monoid(all[member_pos]);
                    }
                    break;
                }
            }
            if (!report.check_minimum) break;
        }
    }

    // (b) every brute-force class contains a predicted magnet.
    report.check_covered = true;
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        bool covered = false;
        for (std::size_t pos : part.classes[c]) {
            if (is_predicted(pos)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            report.check_covered = false;
            if (report.witness.empty()) {
                report.witness = "brute-force class of " +
                                 describe_monoid(all[part.classes[c].front()]) +
                                 " contains no predicted pure magnet";
            }
        }
    }

    // (c) counts agree (meaningful once conclusive).
    report.check_count = part.classes.size() == report.predicted.size();
    if (report.conclusive && !report.check_count && report.witness.empty()) {
        report.witness = "class count " + std::to_string(part.classes.size()) +
                         " does not match predicted count " +
                         report.predicted_count.str();
    }

    // Class minima, canonical order: by smallest logical index in the class.
    std::vector<std::size_t> class_order(part.classes.size());
    std::iota(class_order.begin(), class_order.end(), std::size_t{0});
    auto class_key = [&](std::size_t c) {
        std::size_t best = order.size();
        for (std::size_t pos : part.classes[c]) best = std::min(best, logical[pos]);
        return best;
    };
    std::sort(class_order.begin(), class_order.end(),
              [&](std::size_t a, std::size_t b) { return class_key(a) < class_key(b); });
    for (std::size_t c : class_order) {
        std::size_t min_pos = order.size();
        for (std::size_t pos : part.classes[c]) {
            bool minimal = true;
            for (std::size_t other : part.classes[c]) {
                for (const GroupElement& g : all[pos].gens()) {
                    if (!gen_in_member(g, other)) {
                        minimal = false;
                        break;
                    }
                }
                if (!minimal) break;
            }
            if (minimal) {
                min_pos = pos;
                break;
            }
        }
        if (min_pos < order.size()) {
            report.class_minima.push_back(all[min_pos]);
        } else if (report.witness.empty()) {
            report.witness = "brute-force class of " +
                             describe_monoid(all[part.classes[c].front()]) +
                             " has no generator-wise minimum";
        }
    }

    report.matched = report.conclusive
                         ? (report.check_minimum && report.check_covered &&
                            report.check_count)
                         : report.check_covered;
    if (report.class_minima.size() != part.classes.size()) report.matched = false;
    return report;
}

}  // namespace magnetite
