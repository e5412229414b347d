#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerlab {

// One-line notation: pi[0..n-1] is a bijection on {1..n}.
using Permutation = std::vector<int>;

inline bool is_permutation_of_n(const Permutation& pi) {
    const int n = static_cast<int>(pi.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : pi) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

// Descent positions i (1-based, 1 <= i <= n-1) with pi(i) > pi(i+1).
inline std::vector<int> descent_set(const Permutation& pi) {
    std::vector<int> out;
    for (size_t i = 0; i + 1 < pi.size(); ++i)
        if (pi[i] > pi[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

inline int descents(const Permutation& pi) {
    int d = 0;
    for (size_t i = 0; i + 1 < pi.size(); ++i)
        if (pi[i] > pi[i + 1]) ++d;
    return d;
}

inline Permutation identity_permutation(int n) {
    Permutation pi(static_cast<size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    return pi;
}

// Visits all of S_n in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    Permutation pi = identity_permutation(n);
    do {
        fn(const_cast<const Permutation&>(pi));
    } while (std::next_permutation(pi.begin(), pi.end()));
}

inline std::string permutation_word(const Permutation& pi) {
    const bool digits = pi.size() <= 9;
    std::string s;
    for (size_t i = 0; i < pi.size(); ++i) {
        if (!digits && i > 0) s += ' ';
        s += std::to_string(pi[i]);
    }
    return s;
}

} // namespace eulerlab
