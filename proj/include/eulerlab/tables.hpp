#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerlab/bigint.hpp"
#include "eulerlab/permutation.hpp"

namespace eulerlab {

// Thrown when an exhaustive enumeration would exceed its configured bound.
struct enumeration_bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultEnumerationBound = 10;

inline BigInt binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Eulerian number <n,k> via the recurrence
// <n,k> = (k+1)<n-1,k> + (n-k)<n-1,k-1>.
inline BigInt eulerian(int n, int k) {
    if (n < 1) throw std::invalid_argument("eulerian: n must be positive");
    if (k < 0 || k >= n) return 0;
    std::vector<BigInt> row{1};  // n = 1
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) {
            BigInt v = 0;
            if (j < m - 1) v += BigInt(j + 1) * row[static_cast<size_t>(j)];
            if (j >= 1) v += BigInt(m - j) * row[static_cast<size_t>(j - 1)];
            next[static_cast<size_t>(j)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

// Counts permutations of {1..n} with exactly k descents by generation.
// Independent oracle for eulerian() and the three alternating sums.
inline BigInt eulerian_by_enumeration(int n, int k,
                                      int bound = kDefaultEnumerationBound) {
    if (n < 1) throw std::invalid_argument("eulerian_by_enumeration: n >= 1");
    if (n > bound)
        throw enumeration_bound_error("eulerian_by_enumeration: n = " +
                                      std::to_string(n) + " exceeds bound " +
                                      std::to_string(bound));
    BigInt count = 0;
    for_each_permutation(n, [&](const Permutation& pi) {
        if (descents(pi) == k) ++count;
    });
    return count;
}

// Stirling number of the second kind, S(n+1,i+1) = (i+1)S(n,i+1) + S(n,i).
inline BigInt stirling2(int n, int k) {
    if (n < 1) throw std::invalid_argument("stirling2: n must be positive");
    if (k < 1 || k > n) return 0;
    std::vector<BigInt> row{1};  // n = 1, k = 1
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<size_t>(m));
        for (int j = 1; j <= m; ++j) {
            BigInt v = 0;
            if (j <= m - 1) v += BigInt(j) * row[static_cast<size_t>(j - 1)];
            if (j >= 2) v += row[static_cast<size_t>(j - 2)];
            next[static_cast<size_t>(j - 1)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k - 1)];
}

// An alternating sum together with its individual signed terms.
struct AlternatingSum {
    std::vector<BigInt> terms;  // signed, in summation order
    BigInt value;
};

// sum_{i=0}^{k} (-1)^i C(n+1,i) (k+1-i)^n
inline AlternatingSum eulerian_sum_powers_terms(int n, int k) {
    if (n < 1 || k < 0 || k >= n)
        throw std::invalid_argument("eulerian_sum_powers: need 0 <= k < n");
    AlternatingSum s;
    for (int i = 0; i <= k; ++i) {
        BigInt t = binomial(n + 1, i) * big_pow(k + 1 - i, static_cast<unsigned>(n));
        if (i % 2 != 0) t = -t;
        s.value += t;
        s.terms.push_back(std::move(t));
    }
    return s;
}

inline BigInt eulerian_sum_powers(int n, int k) {
    return eulerian_sum_powers_terms(n, k).value;
}

// sum_{i=1}^{k+1} (-1)^{k+1-i} C(n-i,k+1-i) S(n,i) i!
inline AlternatingSum eulerian_sum_stirling_terms(int n, int k) {
    if (n < 1 || k < 0 || k >= n)
        throw std::invalid_argument("eulerian_sum_stirling: need 0 <= k < n");
    AlternatingSum s;
    for (int i = 1; i <= k + 1; ++i) {
        BigInt t = binomial(n - i, k + 1 - i) * stirling2(n, i) * factorial(i);
        if ((k + 1 - i) % 2 != 0) t = -t;
        s.value += t;
        s.terms.push_back(std::move(t));
    }
    return s;
}

inline BigInt eulerian_sum_stirling(int n, int k) {
    return eulerian_sum_stirling_terms(n, k).value;
}

// sum_{i=0}^{k} (-1)^{k-i} C(n-i,k-i) S(n+1,i+1) i!
inline AlternatingSum eulerian_sum_stirling_shifted_terms(int n, int k) {
    if (n < 1 || k < 0 || k >= n)
        throw std::invalid_argument(
            "eulerian_sum_stirling_shifted: need 0 <= k < n");
    AlternatingSum s;
    for (int i = 0; i <= k; ++i) {
        BigInt t = binomial(n - i, k - i) * stirling2(n + 1, i + 1) * factorial(i);
        if ((k - i) % 2 != 0) t = -t;
        s.value += t;
        s.terms.push_back(std::move(t));
    }
    return s;
}

inline BigInt eulerian_sum_stirling_shifted(int n, int k) {
    return eulerian_sum_stirling_shifted_terms(n, k).value;
}

struct IdentityCheck {
    BigInt lhs;
    BigInt rhs;
    bool ok = false;
};

// (k+1)^n = sum_{i=0}^{n-1} <n,i> C(k+n-i, n)
inline IdentityCheck verify_worpitzky(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("verify_worpitzky: n >= 1, k >= 0");
    IdentityCheck c;
    c.lhs = big_pow(k + 1, static_cast<unsigned>(n));
    for (int i = 0; i < n; ++i) c.rhs += eulerian(n, i) * binomial(k + n - i, n);
    c.ok = (c.lhs == c.rhs);
    return c;
}

// k! S(n,k) = sum_{i=0}^{k-1} <n,i> C(n-1-i, k-1-i)
inline IdentityCheck verify_ordered_stirling(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("verify_ordered_stirling: need 1 <= k <= n");
    IdentityCheck c;
    c.lhs = factorial(k) * stirling2(n, k);
    for (int i = 0; i < k; ++i) c.rhs += eulerian(n, i) * binomial(n - 1 - i, k - 1 - i);
    c.ok = (c.lhs == c.rhs);
    return c;
}

enum class TableKind { eulerian, stirling2, binomial };

// Triangular table of one of the three classical arrays. Immutable after
// construction; safe to share across readers.
struct NumberTable {
    TableKind kind;
    int n_max;
    std::map<std::pair<int, int>, BigInt> rows;

    // Row n in the table's natural column range.
    std::vector<BigInt> row(int n) const {
        std::vector<BigInt> out;
        auto [lo, hi] = column_range(n);
        for (int k = lo; k <= hi; ++k) out.push_back(rows.at({n, k}));
        return out;
    }

    std::pair<int, int> column_range(int n) const {
        switch (kind) {
            case TableKind::eulerian: return {0, n - 1};
            case TableKind::stirling2: return {1, n};
            case TableKind::binomial: return {0, n};
        }
        throw std::logic_error("unreachable");
    }
};

inline NumberTable build_table(TableKind kind, int n_max) {
    if (n_max < (kind == TableKind::binomial ? 0 : 1))
        throw std::invalid_argument("build_table: n_max too small");
    NumberTable t{kind, n_max, {}};
    const int n_lo = kind == TableKind::binomial ? 0 : 1;
    for (int n = n_lo; n <= n_max; ++n) {
        auto [lo, hi] = t.column_range(n);
        for (int k = lo; k <= hi; ++k) {
            BigInt v;
            switch (kind) {
                case TableKind::eulerian: v = eulerian(n, k); break;
                case TableKind::stirling2: v = stirling2(n, k); break;
                case TableKind::binomial: v = binomial(n, k); break;
            }
            t.rows.emplace(std::make_pair(n, k), std::move(v));
        }
    }
    return t;
}

} // namespace eulerlab
