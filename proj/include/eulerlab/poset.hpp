#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulerlab/barred.hpp"
#include "eulerlab/bigint.hpp"
#include "eulerlab/permutation.hpp"
#include "eulerlab/tables.hpp"

namespace eulerlab {

struct poset_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Partial order on {1..n} stored as its Hasse (cover) relations a <_P b.
struct Poset {
    int n = 0;
    std::vector<std::pair<int, int>> covers;

    bool operator==(const Poset&) const = default;

    // All pairs (a,b) with a <_P b, by transitive closure of the covers.
    std::vector<std::pair<int, int>> relations() const {
        std::vector<std::vector<char>> below(
            static_cast<size_t>(n) + 1,
            std::vector<char>(static_cast<size_t>(n) + 1, 0));
        for (auto [a, b] : covers) below[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
        for (int m = 1; m <= n; ++m)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    if (below[static_cast<size_t>(a)][static_cast<size_t>(m)] &&
                        below[static_cast<size_t>(m)][static_cast<size_t>(b)])
                        below[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
        std::vector<std::pair<int, int>> rel;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                if (below[static_cast<size_t>(a)][static_cast<size_t>(b)])
                    rel.emplace_back(a, b);
        return rel;
    }
};

// Validates covers, rejects cycles, and reduces to a minimal Hasse set.
// With strict = true a redundant cover is an error instead of being dropped.
inline Poset make_poset(int n, std::vector<std::pair<int, int>> covers,
                        bool strict = false) {
    if (n < 1) throw poset_error("poset: n must be positive");
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : covers) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw poset_error("poset: element out of range in cover (" +
                              std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b) throw poset_error("poset: reflexive cover");
        if (!seen.insert({a, b}).second)
            throw poset_error("poset: duplicate cover (" + std::to_string(a) +
                              "," + std::to_string(b) + ")");
    }
    // cycle check: topological sort over the cover digraph
    std::vector<int> indeg(static_cast<size_t>(n) + 1, 0);
    for (auto [a, b] : covers) ++indeg[static_cast<size_t>(b)];
    std::vector<int> stack;
    for (int v = 1; v <= n; ++v)
        if (indeg[static_cast<size_t>(v)] == 0) stack.push_back(v);
    int visited = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++visited;
        for (auto [a, b] : covers)
            if (a == v && --indeg[static_cast<size_t>(b)] == 0) stack.push_back(b);
    }
    if (visited != n) throw poset_error("poset: cycle detected");

    // Hasse reduction: a cover is redundant when a path of length >= 2
    // already connects its endpoints.
    Poset all{n, covers};
    auto rel = all.relations();
    std::set<std::pair<int, int>> rel_set(rel.begin(), rel.end());
    std::vector<std::pair<int, int>> minimal;
    for (auto [a, b] : covers) {
        bool redundant = false;
        for (int m = 1; m <= n && !redundant; ++m)
            if (m != a && m != b && rel_set.count({a, m}) && rel_set.count({m, b}))
                redundant = true;
        if (redundant) {
            if (strict)
                throw poset_error("poset: redundant cover (" + std::to_string(a) +
                                  "," + std::to_string(b) + ")");
        } else {
            minimal.emplace_back(a, b);
        }
    }
    std::sort(minimal.begin(), minimal.end());
    return Poset{n, std::move(minimal)};
}

inline Poset antichain(int n) { return make_poset(n, {}); }

inline Poset chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
    return make_poset(n, covers);
}

inline Poset poset_from_json(const nlohmann::json& j, bool strict = false) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& e : j.at("covers")) {
        if (!e.is_array() || e.size() != 2)
            throw poset_error("poset: cover must be a pair");
        covers.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return make_poset(n, std::move(covers), strict);
}

inline Poset parse_poset(const std::string& source, bool strict = false) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        throw poset_error(std::string("poset: JSON parse error: ") + e.what());
    }
    return poset_from_json(j, strict);
}

inline nlohmann::json poset_to_json(const Poset& p) {
    nlohmann::json j;
    j["n"] = p.n;
    j["covers"] = nlohmann::json::array();
    for (auto [a, b] : p.covers) j["covers"].push_back({a, b});
    return j;
}

// Hasse diagram as DOT, edges directed bottom-to-top.
inline std::string hasse_dot(const Poset& p) {
    std::string s = "digraph hasse {\n  rankdir=BT;\n";
    for (int v = 1; v <= p.n; ++v) s += "  " + std::to_string(v) + ";\n";
    for (auto [a, b] : p.covers)
        s += "  " + std::to_string(a) + " -> " + std::to_string(b) + ";\n";
    s += "}\n";
    return s;
}

// Linear extensions by backtracking over minimal elements, taken in
// ascending label order; deterministic output order.
inline std::vector<Permutation> linear_extensions(
    const Poset& p, int bound = kDefaultEnumerationBound) {
    if (p.n > bound)
        throw enumeration_bound_error("linear_extensions: n exceeds bound");
    std::vector<std::vector<int>> above(static_cast<size_t>(p.n) + 1);
    std::vector<int> indeg(static_cast<size_t>(p.n) + 1, 0);
    for (auto [a, b] : p.covers) {
        above[static_cast<size_t>(a)].push_back(b);
        ++indeg[static_cast<size_t>(b)];
    }
    std::vector<Permutation> out;
    Permutation current;
    std::vector<char> placed(static_cast<size_t>(p.n) + 1, 0);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == p.n) {
            out.push_back(current);
            return;
        }
        for (int v = 1; v <= p.n; ++v) {
            if (placed[static_cast<size_t>(v)] || indeg[static_cast<size_t>(v)] != 0)
                continue;
            placed[static_cast<size_t>(v)] = 1;
            current.push_back(v);
            for (int w : above[static_cast<size_t>(v)]) --indeg[static_cast<size_t>(w)];
            self(self);
            for (int w : above[static_cast<size_t>(v)]) ++indeg[static_cast<size_t>(w)];
            current.pop_back();
            placed[static_cast<size_t>(v)] = 0;
        }
    };
    rec(rec);
    return out;
}

// <P,k>: linear extensions of P with exactly k descents.
inline BigInt p_eulerian(const Poset& p, int k,
                         int bound = kDefaultEnumerationBound) {
    BigInt count = 0;
    for (const Permutation& pi : linear_extensions(p, bound))
        if (descents(pi) == k) ++count;
    return count;
}

// Membership test for the P-partition constraints: f(i) <= f(j) when the
// relation i <_P j is naturally ordered (i < j), strict otherwise.
inline bool is_p_partition(const Poset& p, const std::vector<int>& values) {
    if (static_cast<int>(values.size()) != p.n)
        throw std::invalid_argument("is_p_partition: need one value per element");
    for (int v : values)
        if (v < 0) return false;
    for (auto [a, b] : p.relations()) {
        int fa = values[static_cast<size_t>(a - 1)];
        int fb = values[static_cast<size_t>(b - 1)];
        if (a < b ? fa > fb : fa >= fb) return false;
    }
    return true;
}

// Omega_P(k): P-partitions with all values in {0..k}, by direct enumeration.
inline BigInt omega(const Poset& p, int k,
                    int bound = kDefaultEnumerationBound) {
    if (k < 0) return 0;
    if (p.n > bound || big_pow(k + 1, static_cast<unsigned>(p.n)) > 50'000'000)
        throw enumeration_bound_error("omega: search space exceeds bound");
    auto rel = p.relations();
    BigInt count = 0;
    std::vector<int> f(static_cast<size_t>(p.n), 0);
    while (true) {
        bool ok = true;
        for (auto [a, b] : rel) {
            int fa = f[static_cast<size_t>(a - 1)];
            int fb = f[static_cast<size_t>(b - 1)];
            if (a < b ? fa > fb : fa >= fb) { ok = false; break; }
        }
        if (ok) ++count;
        int pos = p.n - 1;
        while (pos >= 0 && f[static_cast<size_t>(pos)] == k) {
            f[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++f[static_cast<size_t>(pos)];
    }
    return count;
}

// Omega_P(k) summed chain-by-chain: each linear extension pi contributes
// the number of ways to spread k - des(pi) extra bars over n+1 gaps.
inline BigInt omega_via_linext(const Poset& p, int k,
                               int bound = kDefaultEnumerationBound) {
    if (k < 0) return 0;
    BigInt total = 0;
    for (const Permutation& pi : linear_extensions(p, bound)) {
        int d = descents(pi);
        if (d <= k) total += binomial(p.n + k - d, p.n);
    }
    return total;
}

struct PeulReport {
    Poset poset;
    int k = 0;
    std::map<int, BigInt> omega_values;  // j -> Omega_P(j), j <= k
    BigInt alternating_sum;
    BigInt signed_sum;
    BigInt fixed_points;
    BigInt p_eulerian;
};

// Runs iota1 over the P-compatible anchored barred permutations with k bars
// and checks the alternating-sum identity for <P,k>.
inline PeulReport verify_die_peul(const Poset& p, int k,
                                  int bound = kDefaultEnumerationBound) {
    if (k < 0) throw std::invalid_argument("verify_die_peul: k >= 0");
    PeulReport rep;
    rep.poset = p;
    rep.k = k;

    std::vector<AnchoredBarredPermutation> elems;
    for (const Permutation& pi : linear_extensions(p, bound))
        for_each_anchored_over(pi, k, [&](AnchoredBarredPermutation beta) {
            elems.push_back(std::move(beta));
        });
    Die1Report die = detail::run_die1(p.n, k, elems);
    rep.signed_sum = die.signed_sum;
    rep.fixed_points = die.fixed_points;

    for (int j = 0; j <= k; ++j) rep.omega_values[j] = omega(p, j, bound);
    for (int i = 0; i <= k; ++i) {
        BigInt t = binomial(p.n + 1, i) * rep.omega_values[k - i];
        rep.alternating_sum += (i % 2 == 0) ? t : -t;
    }
    rep.p_eulerian = p_eulerian(p, k, bound);

    if (rep.signed_sum != rep.alternating_sum ||
        rep.signed_sum != rep.p_eulerian)
        throw involution_error("verify_die_peul: identity mismatch");
    return rep;
}

} // namespace eulerlab
