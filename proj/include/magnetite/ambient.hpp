#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "magnetite/errors.hpp"
#include "magnetite/numeric.hpp"

namespace magnetite {

/// The ambient abelian group Z^rank x Z/d_1 x ... x Z/d_t.
/// rank 0 with empty torsion is the zero group.
struct AmbientGroup {
    std::size_t rank = 0;
    IntVec torsion;  // each order d_i >= 2

    AmbientGroup() = default;
    AmbientGroup(std::size_t rank_, IntVec torsion_);

    std::size_t coords() const { return rank + torsion.size(); }
    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool operator==(const AmbientGroup&) const = default;

    /// Human-readable form, e.g. "Z^2 x Z/2".
    std::string describe() const;
};

/// An element of an AmbientGroup: free integer coordinates plus torsion
/// residues, the latter always stored reduced into [0, d_i).
class GroupElement {
public:
    GroupElement(AmbientGroup group, IntVec free, IntVec tors);

    static GroupElement zero(const AmbientGroup& group);
    /// Builds from a flat coordinate vector: rank free entries, then one
    /// entry per torsion factor (reduced on construction).
    static GroupElement from_flat(const AmbientGroup& group, const IntVec& coords);

    const AmbientGroup& group() const { return group_; }
    const IntVec& free() const { return free_; }
    const IntVec& tors() const { return tors_; }
    IntVec flat() const;

    bool is_zero() const;

    GroupElement operator+(const GroupElement& other) const;
    GroupElement operator-(const GroupElement& other) const;
    GroupElement operator-() const;
    GroupElement scaled(const Int& k) const;

    bool operator==(const GroupElement& other) const;
    bool operator!=(const GroupElement& other) const { return !(*this == other); }
    /// Lexicographic on (free, tors); total order within one ambient group,
    /// used for canonical sets and deterministic output.
    bool operator<(const GroupElement& other) const;

private:
    void check_same_group(const GroupElement& other) const;

    AmbientGroup group_;
    IntVec free_;
    IntVec tors_;
};

std::string format_element(const GroupElement& x);
std::string format_elements(const std::vector<GroupElement>& xs);

/// Dense integer matrix, row-major. Degenerate shapes (0 x n, n x 0) are valid.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    IntVec data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static IntMatrix identity(std::size_t n);
    bool operator==(const IntMatrix&) const = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntVec mat_vec(const IntMatrix& a, const IntVec& x);

/// Inverse of a matrix with determinant +-1; throws ValidationError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& u);

struct SmithNormalForm {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix d;  // rows x cols, diagonal, nonnegative, d_1 | d_2 | ...
    IntMatrix v;  // cols x cols, unimodular
};

/// u * a * v = d with d diagonal, entries nonnegative and each dividing the
/// next. Total on integer matrices, including degenerate shapes.
SmithNormalForm smith_normal_form(const IntMatrix& a);

/// Checks the Smith postconditions by direct multiplication; used by debug
/// builds and the test suite.
bool smith_postcondition_holds(const IntMatrix& a, const SmithNormalForm& snf);

/// A surjective homomorphism source -> target together with a deterministic
/// section (lift) satisfying map(lift(t)) = t.
class QuotientMap {
public:
    QuotientMap(AmbientGroup source, AmbientGroup target,
                IntMatrix projection, IntMatrix section);

    const AmbientGroup& source() const { return source_; }
    const AmbientGroup& target() const { return target_; }

    GroupElement map(const GroupElement& x) const;
    GroupElement lift(const GroupElement& t) const;

    const IntMatrix& projection() const { return projection_; }

private:
    AmbientGroup source_;
    AmbientGroup target_;
    IntMatrix projection_;  // coords(target) x coords(source)
    IntMatrix section_;     // coords(source) x coords(target)
};

/// Quotient of g by the subgroup generated by gens (negatives included
/// automatically). The target is presented again as Z^r' x torsion via the
/// Smith form; the kernel of the returned map is exactly that subgroup.
QuotientMap quotient_by_subgroup(const AmbientGroup& g,
                                 const std::vector<GroupElement>& gens);

}  // namespace magnetite
