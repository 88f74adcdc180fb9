#include "magnetite/rational_lp.hpp"

#include <cstddef>

#include "magnetite/errors.hpp"

namespace magnetite {

std::optional<std::vector<Rat>> solve_nonnegative(const RatMatrix& a,
                                                  const std::vector<Rat>& b) {
    const std::size_t m = a.size();
    if (b.size() != m) throw DimensionError("rhs length does not match row count");
    const std::size_t n = m == 0 ? 0 : a[0].size();
    for (const auto& row : a) {
        if (row.size() != n) throw DimensionError("ragged constraint matrix");
    }
    if (m == 0) return std::vector<Rat>(n);

    // Tableau with one artificial variable per row; minimize their sum.
    const std::size_t cols = n + m;
    std::vector<std::vector<Rat>> tab(m, std::vector<Rat>(cols + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool neg = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = neg ? -a[i][j] : a[i][j];
        tab[i][n + i] = 1;
        tab[i][cols] = neg ? -b[i] : b[i];
        basis[i] = n + i;
    }

    // Reduced costs for the phase-1 objective (artificials cost 1).
    std::vector<Rat> obj(cols + 1);
    for (std::size_t j = 0; j <= cols; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < m; ++i) s += tab[i][j];
        obj[j] = (j >= n && j < cols ? Rat(1) : Rat(0)) - s;
    }

    for (;;) {
        // Bland: entering variable = lowest index with negative reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        std::size_t leave = m;
        Rat best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rat ratio = tab[i][cols] / tab[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) {
            // Phase 1 is bounded below by zero; no positive column means the
            // tableau is corrupt.
            throw Error("internal: unbounded phase-1 simplex");
        }

        Rat pivot = tab[leave][enter];
        for (std::size_t j = 0; j <= cols; ++j) tab[leave][j] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rat f = tab[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        if (obj[enter] != 0) {
            Rat f = obj[enter];
            for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }

    // Optimal value of the artificial sum.
    Rat artificial_total = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= n) artificial_total += tab[i][cols];
    }
    if (artificial_total != 0) return std::nullopt;

    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) x[basis[i]] = tab[i][cols];
    }
    // Exact sanity check; cheap at these sizes.
    for (std::size_t i = 0; i < m; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < n; ++j) s += a[i][j] * x[j];
        if (s != b[i]) throw Error("internal: simplex witness fails the system");
    }
    return x;
}

}  // namespace magnetite
