#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace magnetite {

// All arithmetic is exact: arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;

inline Rat make_rat(const Int& num, const Int& den) {
    return Rat(num, den);
}

/// Largest integer n with n <= x.
inline Int rat_floor(const Rat& x) {
    Int n = numerator(x);
    Int d = denominator(x);  // always > 0 for cpp_rational
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

/// Smallest integer n with n >= x.
inline Int rat_ceil(const Rat& x) {
    return -rat_floor(-x);
}

}  // namespace magnetite
