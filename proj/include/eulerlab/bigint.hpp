#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace eulerlab {

// All counts and signed sums in the library are exact.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace eulerlab
