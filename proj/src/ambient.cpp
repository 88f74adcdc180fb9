#include "magnetite/ambient.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace magnetite {

namespace {

Int mod_reduce(const Int& value, const Int& order) {
    Int r = value % order;
    if (r < 0) r += order;
    return r;
}

}  // namespace

AmbientGroup::AmbientGroup(std::size_t rank_, IntVec torsion_)
    : rank(rank_), torsion(std::move(torsion_)) {
    for (const Int& d : torsion) {
        if (d < 2) {
            throw ValidationError("torsion order must be >= 2, got " + d.str());
        }
    }
}

std::string AmbientGroup::describe() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) os << " x ";
        os << "Z/" << d.str();
        first = false;
    }
    return os.str();
}

GroupElement::GroupElement(AmbientGroup group, IntVec free, IntVec tors)
    : group_(std::move(group)), free_(std::move(free)), tors_(std::move(tors)) {
    if (free_.size() != group_.rank || tors_.size() != group_.torsion.size()) {
        throw DimensionError("coordinate count does not match ambient group");
    }
    for (std::size_t i = 0; i < tors_.size(); ++i) {
        tors_[i] = mod_reduce(tors_[i], group_.torsion[i]);
    }
}

GroupElement GroupElement::zero(const AmbientGroup& group) {
    return GroupElement(group, IntVec(group.rank), IntVec(group.torsion.size()));
}

GroupElement GroupElement::from_flat(const AmbientGroup& group, const IntVec& coords) {
    if (coords.size() != group.coords()) {
        throw DimensionError("flat vector length does not match ambient group");
    }
    IntVec free(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(group.rank));
    IntVec tors(coords.begin() + static_cast<std::ptrdiff_t>(group.rank), coords.end());
    return GroupElement(group, std::move(free), std::move(tors));
}

IntVec GroupElement::flat() const {
    IntVec out = free_;
    out.insert(out.end(), tors_.begin(), tors_.end());
    return out;
}

bool GroupElement::is_zero() const {
    auto zero = [](const Int& v) { return v == 0; };
    return std::all_of(free_.begin(), free_.end(), zero) &&
           std::all_of(tors_.begin(), tors_.end(), zero);
}

void GroupElement::check_same_group(const GroupElement& other) const {
    if (group_ != other.group_) {
        throw DimensionError("elements live in different ambient groups");
    }
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
    check_same_group(other);
    IntVec free = free_;
    IntVec tors = tors_;
    for (std::size_t i = 0; i < free.size(); ++i) free[i] += other.free_[i];
    for (std::size_t i = 0; i < tors.size(); ++i) tors[i] += other.tors_[i];
    return GroupElement(group_, std::move(free), std::move(tors));
}

GroupElement GroupElement::operator-() const {
    IntVec free = free_;
    IntVec tors = tors_;
    for (Int& v : free) v = -v;
    for (Int& v : tors) v = -v;
    return GroupElement(group_, std::move(free), std::move(tors));
}

GroupElement GroupElement::operator-(const GroupElement& other) const {
    return *this + (-other);
}

GroupElement GroupElement::scaled(const Int& k) const {
    IntVec free = free_;
    IntVec tors = tors_;
    for (Int& v : free) v *= k;
    for (Int& v : tors) v *= k;
    return GroupElement(group_, std::move(free), std::move(tors));
}

bool GroupElement::operator==(const GroupElement& other) const {
    return group_ == other.group_ && free_ == other.free_ && tors_ == other.tors_;
}

bool GroupElement::operator<(const GroupElement& other) const {
    check_same_group(other);
    if (free_ != other.free_) {
        return std::lexicographical_compare(free_.begin(), free_.end(),
                                            other.free_.begin(), other.free_.end());
    }
    return std::lexicographical_compare(tors_.begin(), tors_.end(),
                                        other.tors_.begin(), other.tors_.end());
}

std::string format_element(const GroupElement& x) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const Int& v : x.free()) {
        if (!first) os << ",";
        os << v.str();
        first = false;
    }
    for (const Int& v : x.tors()) {
        if (!first) os << ",";
        os << v.str() << "~";
        first = false;
    }
    os << ")";
    return os.str();
}

std::string format_elements(const std::vector<GroupElement>& xs) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) os << ", ";
        os << format_element(xs[i]);
    }
    os << "}";
    return os.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw DimensionError("matrix shape mismatch in multiply");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return c;
}

IntVec mat_vec(const IntMatrix& a, const IntVec& x) {
    if (a.cols != x.size()) throw DimensionError("matrix/vector shape mismatch");
    IntVec y(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) {
            if (a.at(i, j) != 0) y[i] += a.at(i, j) * x[j];
        }
    }
    return y;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    if (u.rows != u.cols) throw ValidationError("unimodular inverse needs a square matrix");
    const std::size_t n = u.rows;
    // Exact Gauss-Jordan over the rationals; entries of the result must come
    // out integral when |det| = 1.
    std::vector<std::vector<Rat>> work(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work[i][j] = Rat(u.at(i, j));
        work[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work[pivot][col] == 0) ++pivot;
        if (pivot == n) throw ValidationError("matrix is singular, not unimodular");
        std::swap(work[pivot], work[col]);
        Rat p = work[col][col];
        for (std::size_t j = 0; j < 2 * n; ++j) work[col][j] /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || work[i][col] == 0) continue;
            Rat f = work[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) work[i][j] -= f * work[col][j];
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& v = work[i][n + j];
            if (denominator(v) != 1) {
                throw ValidationError("matrix inverse is not integral; input not unimodular");
            }
            inv.at(i, j) = numerator(v);
        }
    }
    IntMatrix check = mat_mul(u, inv);
    if (check != IntMatrix::identity(n)) {
        throw ValidationError("inverse check failed; input not unimodular");
    }
    return inv;
}

namespace {

struct SnfWork {
    IntMatrix d, u, v;

    void row_swap(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < d.cols; ++j) std::swap(d.at(a, j), d.at(b, j));
        for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void col_swap(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < d.rows; ++i) std::swap(d.at(i, a), d.at(i, b));
        for (std::size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row[a] -= q * row[b]
    void row_sub(std::size_t a, const Int& q, std::size_t b) {
        if (q == 0) return;
        for (std::size_t j = 0; j < d.cols; ++j) d.at(a, j) -= q * d.at(b, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(a, j) -= q * u.at(b, j);
    }
    // col[a] -= q * col[b]
    void col_sub(std::size_t a, const Int& q, std::size_t b) {
        if (q == 0) return;
        for (std::size_t i = 0; i < d.rows; ++i) d.at(i, a) -= q * d.at(i, b);
        for (std::size_t i = 0; i < v.rows; ++i) v.at(i, a) -= q * v.at(i, b);
    }
    void row_negate(std::size_t a) {
        for (std::size_t j = 0; j < d.cols; ++j) d.at(a, j) = -d.at(a, j);
        for (std::size_t j = 0; j < u.cols; ++j) u.at(a, j) = -u.at(a, j);
    }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& a) {
    SnfWork w;
    w.d = a;
    w.u = IntMatrix::identity(a.rows);
    w.v = IntMatrix::identity(a.cols);
    const std::size_t m = a.rows, n = a.cols;

    std::size_t t = 0;
    while (t < m && t < n) {
        // Find a nonzero entry of smallest magnitude in the trailing block.
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < m; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                const Int& e = w.d.at(i, j);
                if (e == 0) continue;
                Int mag = abs(e);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) break;
        if (pi != t) w.row_swap(t, pi);
        if (pj != t) w.col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.d.at(i, t) == 0) continue;
                Int q = w.d.at(i, t) / w.d.at(t, t);
                w.row_sub(i, q, t);
                if (w.d.at(i, t) != 0) {  // remainder smaller than pivot
                    w.row_swap(t, i);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.d.at(t, j) == 0) continue;
                Int q = w.d.at(t, j) / w.d.at(t, t);
                w.col_sub(j, q, t);
                if (w.d.at(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            // Pivot must divide the whole trailing block for the divisibility
            // chain; fold a bad row in and keep reducing.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i) {
                for (std::size_t j = t + 1; j < n && divides; ++j) {
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        w.row_sub(t, Int(-1), i);
                        divides = false;
                    }
                }
            }
            if (divides) break;
        }
        if (w.d.at(t, t) < 0) w.row_negate(t);
        ++t;
    }

    SmithNormalForm out{std::move(w.u), std::move(w.d), std::move(w.v)};
#ifndef NDEBUG
    if (!smith_postcondition_holds(a, out)) {
        throw Error("internal: Smith normal form postcondition failed");
    }
#endif
    return out;
}

bool smith_postcondition_holds(const IntMatrix& a, const SmithNormalForm& snf) {
    if (mat_mul(mat_mul(snf.u, a), snf.v) != snf.d) return false;
    const std::size_t k = std::min(snf.d.rows, snf.d.cols);
    for (std::size_t i = 0; i < snf.d.rows; ++i) {
        for (std::size_t j = 0; j < snf.d.cols; ++j) {
            if (i != j && snf.d.at(i, j) != 0) return false;
        }
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        const Int& cur = snf.d.at(i, i);
        const Int& next = snf.d.at(i + 1, i + 1);
        if (cur < 0 || next < 0) return false;
        if (cur == 0 && next != 0) return false;
        if (cur != 0 && next % cur != 0) return false;
    }
    return true;
}

QuotientMap::QuotientMap(AmbientGroup source, AmbientGroup target,
                         IntMatrix projection, IntMatrix section)
    : source_(std::move(source)),
      target_(std::move(target)),
      projection_(std::move(projection)),
      section_(std::move(section)) {}

GroupElement QuotientMap::map(const GroupElement& x) const {
    if (x.group() != source_) {
        throw DimensionError("element does not live in the quotient source");
    }
    IntVec y = mat_vec(projection_, x.flat());
    return GroupElement::from_flat(target_, y);
}

GroupElement QuotientMap::lift(const GroupElement& t) const {
    if (t.group() != target_) {
        throw DimensionError("element does not live in the quotient target");
    }
    IntVec x = mat_vec(section_, t.flat());
    return GroupElement::from_flat(source_, x);
}

QuotientMap quotient_by_subgroup(const AmbientGroup& g,
                                 const std::vector<GroupElement>& gens) {
    const std::size_t k = g.coords();
    const std::size_t t = g.torsion.size();
    for (const GroupElement& x : gens) {
        if (x.group() != g) {
            throw DimensionError("subgroup generator outside the ambient group");
        }
    }

    // Columns: the torsion relations d_i * e_{rank+i}, then integer lifts of
    // the generators. The quotient of Z^k by their span, read through the
    // Smith form, is the target group.
    IntMatrix b(k, t + gens.size());
    for (std::size_t i = 0; i < t; ++i) {
        b.at(g.rank + i, i) = g.torsion[i];
    }
    for (std::size_t j = 0; j < gens.size(); ++j) {
        IntVec flat = gens[j].flat();
        for (std::size_t i = 0; i < k; ++i) b.at(i, t + j) = flat[i];
    }

    SmithNormalForm snf = smith_normal_form(b);
    IntMatrix uinv = unimodular_inverse(snf.u);

    const std::size_t diag = std::min(snf.d.rows, snf.d.cols);
    auto diag_entry = [&](std::size_t i) -> Int {
        return i < diag ? snf.d.at(i, i) : Int(0);
    };

    std::vector<std::size_t> free_rows, torsion_rows;
    for (std::size_t i = 0; i < k; ++i) {
        Int d = diag_entry(i);
        if (d == 0) {
            free_rows.push_back(i);
        } else if (d >= 2) {
            torsion_rows.push_back(i);
        }
        // d == 1 rows carry no information and are dropped.
    }

    // Deterministic signs: make each free row of the projection start with a
    // positive entry (the matching column of u^-1 flips with it). Free rows
    // are zero rows of d, so u*b*v = d is preserved.
    for (std::size_t i : free_rows) {
        for (std::size_t j = 0; j < k; ++j) {
            const Int& e = snf.u.at(i, j);
            if (e == 0) continue;
            if (e < 0) {
                for (std::size_t c = 0; c < k; ++c) {
                    snf.u.at(i, c) = -snf.u.at(i, c);
                    uinv.at(c, i) = -uinv.at(c, i);
                }
            }
            break;
        }
    }

    IntVec target_torsion;
    target_torsion.reserve(torsion_rows.size());
    for (std::size_t i : torsion_rows) target_torsion.push_back(diag_entry(i));
    AmbientGroup target(free_rows.size(), std::move(target_torsion));

    std::vector<std::size_t> kept = free_rows;
    kept.insert(kept.end(), torsion_rows.begin(), torsion_rows.end());

    IntMatrix projection(kept.size(), k);
    IntMatrix section(k, kept.size());
    for (std::size_t r = 0; r < kept.size(); ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            projection.at(r, c) = snf.u.at(kept[r], c);
            section.at(c, r) = uinv.at(c, kept[r]);
        }
    }

    return QuotientMap(g, std::move(target), std::move(projection), std::move(section));
}

}  // namespace magnetite
