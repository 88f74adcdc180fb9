#include "support/reference.hpp"

#include <algorithm>

namespace magnetite::testref {

namespace {

using Column = IntVec;

// One elimination step: combine columns a and b so that b's entry at `row`
// becomes zero, using the extended gcd transform (keeps the span).
void gcd_combine(Column& a, Column& b, std::size_t row) {
    using boost::multiprecision::gcd;
    while (b[row] != 0) {
        Int q = a[row] / b[row];
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= q * b[i];
        std::swap(a, b);
    }
}

}  // namespace

bool subgroup_contains(const AmbientGroup& g, const std::vector<GroupElement>& gens,
                       const GroupElement& x) {
    const std::size_t k = g.coords();
    std::vector<Column> cols;
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        Column relation(k);
        relation[g.rank + i] = g.torsion[i];
        cols.push_back(std::move(relation));
    }
    for (const GroupElement& e : gens) cols.push_back(e.flat());

    IntVec target = x.flat();
    std::size_t used = 0;
    for (std::size_t row = 0; row < k; ++row) {
        // Sweep the remaining columns into one pivot for this row.
        std::size_t pivot = cols.size();
        for (std::size_t c = used; c < cols.size(); ++c) {
            if (cols[c][row] == 0) continue;
            if (pivot == cols.size()) {
                pivot = c;
            } else {
                gcd_combine(cols[pivot], cols[c], row);
            }
        }
        if (pivot == cols.size()) {
            if (target[row] != 0) return false;
            continue;
        }
        std::swap(cols[used], cols[pivot]);
        const Column& p = cols[used];
        if (target[row] % p[row] != 0) return false;
        Int q = target[row] / p[row];
        for (std::size_t i = 0; i < k; ++i) target[i] -= q * p[i];
        ++used;
    }
    return std::all_of(target.begin(), target.end(),
                       [](const Int& v) { return v == 0; });
}

std::optional<IntVec> brute_member(const std::vector<GroupElement>& gens,
                                   const GroupElement& z, const Int& bound) {
    IntVec coeffs(gens.size());

    // Plain odometer over all coefficient vectors in [0, bound]^n.
    std::size_t n = gens.size();
    if (n == 0) return z.is_zero() ? std::optional<IntVec>(coeffs) : std::nullopt;
    for (;;) {
        GroupElement sum = GroupElement::zero(z.group());
        for (std::size_t i = 0; i < n; ++i) {
            if (coeffs[i] != 0) sum = sum + gens[i].scaled(coeffs[i]);
        }
        if (sum == z) return coeffs;
        std::size_t pos = 0;
        while (pos < n) {
            if (coeffs[pos] < bound) {
                ++coeffs[pos];
                break;
            }
            coeffs[pos] = 0;
            ++pos;
        }
        if (pos == n) return std::nullopt;
    }
}

Int determinant(const IntMatrix& a) {
    if (a.rows != a.cols) throw DimensionError("determinant needs a square matrix");
    const std::size_t n = a.rows;
    if (n == 0) return 1;
    IntMatrix w = a;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && w.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

AmbientGroup random_ambient(std::mt19937& rng, const RandomMonoidParams& p) {
    std::uniform_int_distribution<std::size_t> rank_dist(0, p.max_rank);
    std::uniform_int_distribution<std::size_t> tcount_dist(0, p.max_torsion_factors);
    std::uniform_int_distribution<int> order_dist(0, 1);
    std::size_t rank = rank_dist(rng);
    std::size_t tcount = tcount_dist(rng);
    if (rank == 0 && tcount == 0) rank = 1;
    IntVec torsion;
    for (std::size_t i = 0; i < tcount; ++i) {
        torsion.push_back(order_dist(rng) == 0 ? 2 : 3);
    }
    return AmbientGroup(rank, std::move(torsion));
}

FgMonoid random_monoid(std::mt19937& rng, const RandomMonoidParams& p) {
    AmbientGroup g = random_ambient(rng, p);
    std::uniform_int_distribution<std::size_t> count_dist(0, p.max_gens);
    std::uniform_int_distribution<long> entry_dist(p.entry_lo, p.entry_hi);
    std::size_t count = count_dist(rng);
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < count; ++i) {
        IntVec coords(g.coords());
        for (Int& c : coords) c = entry_dist(rng);
        gens.push_back(GroupElement::from_flat(g, coords));
    }
    return FgMonoid(g, std::move(gens));
}

GroupElement random_element(std::mt19937& rng, const AmbientGroup& g, long lo,
                            long hi) {
    std::uniform_int_distribution<long> entry_dist(lo, hi);
    IntVec coords(g.coords());
    for (Int& c : coords) c = entry_dist(rng);
    return GroupElement::from_flat(g, coords);
}

}  // namespace magnetite::testref
