#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulerlab/bigint.hpp"
#include "eulerlab/permutation.hpp"
#include "eulerlab/tables.hpp"

namespace eulerlab {

struct involution_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A permutation with a plain bar count per gap. Gap 0 sits before pi(1),
// gap n after pi(n). Every descent gap must carry at least one bar.
struct BarredPermutation {
    Permutation pi;
    std::vector<int> bars;  // size n+1

    bool operator==(const BarredPermutation&) const = default;

    int total_bars() const {
        int t = 0;
        for (int b : bars) t += b;
        return t;
    }
};

// A barred permutation with its bars classified. Anchors are implicit:
// each descent gap of pi carries exactly one, non-descent gaps carry none.
struct AnchoredBarredPermutation {
    Permutation pi;
    std::vector<int> unnecessary;  // size n+1, per gap
    std::vector<char> floats;      // size n+1, 0 or 1 per gap

    bool operator==(const AnchoredBarredPermutation&) const = default;
    auto operator<=>(const AnchoredBarredPermutation&) const = default;

    int n() const { return static_cast<int>(pi.size()); }

    bool has_anchor(int gap) const {
        return gap >= 1 && gap < n() &&
               pi[static_cast<size_t>(gap - 1)] > pi[static_cast<size_t>(gap)];
    }

    int float_count() const {
        int c = 0;
        for (char f : floats) c += f ? 1 : 0;
        return c;
    }

    int total_bars() const {
        int t = descents(pi) + float_count();
        for (int u : unnecessary) t += u;
        return t;
    }

    int sign() const { return float_count() % 2 == 0 ? 1 : -1; }

    bool valid() const {
        if (!is_permutation_of_n(pi)) return false;
        const size_t gaps = pi.size() + 1;
        if (unnecessary.size() != gaps || floats.size() != gaps) return false;
        for (int u : unnecessary)
            if (u < 0) return false;
        for (char f : floats)
            if (f != 0 && f != 1) return false;
        return true;
    }
};

// The sign-reversing involution on anchored barred permutations: in the
// leftmost gap holding a non-anchor bar, the leftmost such bar (the float
// when present, else an unnecessary bar) switches species.
inline AnchoredBarredPermutation iota1(AnchoredBarredPermutation beta) {
    const size_t gaps = beta.pi.size() + 1;
    for (size_t g = 0; g < gaps; ++g) {
        if (beta.floats[g]) {
            beta.floats[g] = 0;
            beta.unnecessary[g] += 1;
            return beta;
        }
        if (beta.unnecessary[g] > 0) {
            beta.unnecessary[g] -= 1;
            beta.floats[g] = 1;
            return beta;
        }
    }
    return beta;  // only anchors: fixed point
}

namespace detail {

// Weak compositions of every total <= budget into `len` parts, ascending
// lexicographic order; for each, calls fn(u, total).
template <typename Fn>
void for_each_weak_composition_upto(int budget, int len, Fn&& fn) {
    std::vector<int> u(static_cast<size_t>(len), 0);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == len) {
            fn(const_cast<const std::vector<int>&>(u), used);
            return;
        }
        for (int v = 0; v <= budget - used; ++v) {
            u[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, used + v);
        }
        u[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, 0);
}

// 0/1 vectors of length `len` with exactly `ones` ones, lexicographic order.
template <typename Fn>
void for_each_binary_vector(int len, int ones, Fn&& fn) {
    if (ones < 0 || ones > len) return;
    std::vector<char> f(static_cast<size_t>(len), 0);
    auto rec = [&](auto&& self, int pos, int need) -> void {
        if (pos == len) {
            if (need == 0) fn(const_cast<const std::vector<char>&>(f));
            return;
        }
        if (len - pos - 1 >= need) {
            f[static_cast<size_t>(pos)] = 0;
            self(self, pos + 1, need);
        }
        if (need > 0) {
            f[static_cast<size_t>(pos)] = 1;
            self(self, pos + 1, need - 1);
            f[static_cast<size_t>(pos)] = 0;
        }
    };
    rec(rec, 0, ones);
}

} // namespace detail

// All anchored barred permutations over a fixed underlying permutation with
// k bars total, ordered lexicographically by (unnecessary, floats).
template <typename Fn>
void for_each_anchored_over(const Permutation& pi, int k, Fn&& fn) {
    const int n = static_cast<int>(pi.size());
    const int budget = k - descents(pi);
    if (budget < 0) return;
    detail::for_each_weak_composition_upto(
        budget, n + 1, [&](const std::vector<int>& u, int used) {
            detail::for_each_binary_vector(n + 1, budget - used,
                                           [&](const std::vector<char>& f) {
                fn(AnchoredBarredPermutation{pi, u, f});
            });
        });
}

// The full set of anchored barred permutations of size n with k bars
// (optionally restricted to a given float count), in the deterministic
// order (pi lexicographic, unnecessary, floats).
inline std::vector<AnchoredBarredPermutation> enumerate_anchored(
    int n, int k, std::optional<int> float_count = std::nullopt,
    int bound = kDefaultEnumerationBound) {
    if (n < 1) throw std::invalid_argument("enumerate_anchored: n >= 1");
    if (k < 0) throw std::invalid_argument("enumerate_anchored: k >= 0");
    if (float_count && (*float_count < 0 || *float_count > k))
        throw std::invalid_argument("enumerate_anchored: 0 <= floats <= k");
    if (n > bound)
        throw enumeration_bound_error("enumerate_anchored: n exceeds bound");
    std::vector<AnchoredBarredPermutation> out;
    for_each_permutation(n, [&](const Permutation& pi) {
        for_each_anchored_over(pi, k, [&](AnchoredBarredPermutation beta) {
            if (!float_count || beta.float_count() == *float_count)
                out.push_back(std::move(beta));
        });
    });
    return out;
}

// Builds the barred permutation for one placement of balls into boxes:
// boxes[i] is the box of ball i+1, boxes labeled 0..k.
inline BarredPermutation barred_from_boxes(const std::vector<int>& boxes, int k) {
    const int n = static_cast<int>(boxes.size());
    BarredPermutation b;
    b.bars.assign(static_cast<size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> order;  // (box, ball)
    for (int i = 0; i < n; ++i) order.emplace_back(boxes[static_cast<size_t>(i)], i + 1);
    std::sort(order.begin(), order.end());
    int prev_box = 0;
    for (int i = 0; i < n; ++i) {
        b.bars[static_cast<size_t>(i)] = order[static_cast<size_t>(i)].first - prev_box;
        prev_box = order[static_cast<size_t>(i)].first;
        b.pi.push_back(order[static_cast<size_t>(i)].second);
    }
    b.bars[static_cast<size_t>(n)] = k - prev_box;
    return b;
}

// |B_{n,k}| by exhaustive generation of all box placements.
inline BigInt count_barred(int n, int k, int bound = kDefaultEnumerationBound) {
    if (n < 1 || k < 0) throw std::invalid_argument("count_barred: n >= 1, k >= 0");
    if (n > bound || big_pow(k + 1, static_cast<unsigned>(n)) > 50'000'000)
        throw enumeration_bound_error("count_barred: search space exceeds bound");
    BigInt count = 0;
    std::vector<int> boxes(static_cast<size_t>(n), 0);
    while (true) {
        BarredPermutation b = barred_from_boxes(boxes, k);
        // every descent gap must have a bar
        for (int i : descent_set(b.pi))
            if (b.bars[static_cast<size_t>(i)] < 1)
                throw std::logic_error("count_barred: descent gap without bar");
        ++count;
        int pos = n - 1;
        while (pos >= 0 && boxes[static_cast<size_t>(pos)] == k) {
            boxes[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++boxes[static_cast<size_t>(pos)];
    }
    return count;
}

struct Die1Report {
    int n = 0;
    int k = 0;
    std::map<int, BigInt> class_counts;  // float count i -> |B^i_{n,k}|
    BigInt paired;
    BigInt fixed_points;
    BigInt signed_sum;
};

namespace detail {

template <typename Range>
Die1Report run_die1(int n, int k, const Range& elements) {
    Die1Report rep;
    rep.n = n;
    rep.k = k;
    for (const AnchoredBarredPermutation& beta : elements) {
        rep.class_counts[beta.float_count()] += 1;
        rep.signed_sum += beta.sign();
        AnchoredBarredPermutation img = iota1(beta);
        if (iota1(img) != beta)
            throw involution_error("iota1 is not an involution");
        if (img == beta) {
            if (beta.float_count() != 0)
                throw involution_error("fixed point with a float bar");
            for (int u : beta.unnecessary)
                if (u != 0) throw involution_error("fixed point with an unnecessary bar");
            rep.fixed_points += 1;
        } else {
            if (img.sign() != -beta.sign())
                throw involution_error("iota1 did not reverse sign");
            if (img.pi != beta.pi)
                throw involution_error("iota1 changed the underlying permutation");
            if (img.total_bars() != beta.total_bars())
                throw involution_error("iota1 changed the bar count");
            rep.paired += 1;
        }
    }
    if (rep.signed_sum != rep.fixed_points)
        throw involution_error("signed sum does not match fixed points");
    return rep;
}

} // namespace detail

// Runs iota1 over all anchored barred permutations of size n with k bars,
// checking the involution laws and returning the census.
inline Die1Report verify_die_eq1(int n, int k,
                                 int bound = kDefaultEnumerationBound) {
    return detail::run_die1(n, k, enumerate_anchored(n, k, std::nullopt, bound));
}

// Same verification restricted to one underlying permutation.
inline Die1Report restrict_to_permutation(int n, int k, const Permutation& pi,
                                          int bound = kDefaultEnumerationBound) {
    if (static_cast<int>(pi.size()) != n || !is_permutation_of_n(pi))
        throw std::invalid_argument("restrict_to_permutation: bad permutation");
    if (n > bound)
        throw enumeration_bound_error("restrict_to_permutation: n exceeds bound");
    std::vector<AnchoredBarredPermutation> elems;
    for_each_anchored_over(pi, k, [&](AnchoredBarredPermutation beta) {
        elems.push_back(std::move(beta));
    });
    return detail::run_die1(n, k, elems);
}

// --- text codec ---------------------------------------------------------
// Gap by gap: "f|" per float, "|" per unnecessary bar, "a|" for the anchor,
// then the element. Floats render left of unnecessary bars, which render
// left of anchors. Elements are digit-concatenated for n <= 9, otherwise
// space-separated.

inline std::string to_text(const BarredPermutation& b) {
    const bool digits = b.pi.size() <= 9;
    std::string s;
    for (size_t g = 0; g <= b.pi.size(); ++g) {
        for (int i = 0; i < b.bars[g]; ++i) s += '|';
        if (g < b.pi.size()) {
            if (!digits && !s.empty()) s += ' ';
            s += std::to_string(b.pi[g]);
        }
    }
    return s;
}

inline std::string to_text(const AnchoredBarredPermutation& beta) {
    const bool digits = beta.pi.size() <= 9;
    std::string s;
    for (size_t g = 0; g <= beta.pi.size(); ++g) {
        if (beta.floats[g]) s += "f|";
        for (int i = 0; i < beta.unnecessary[g]; ++i) s += '|';
        if (beta.has_anchor(static_cast<int>(g))) s += "a|";
        if (g < beta.pi.size()) {
            if (!digits && !s.empty() && s.back() != '|') s += ' ';
            s += std::to_string(beta.pi[g]);
        }
    }
    return s;
}

// Parses the text codec (single-digit elements, n <= 9).
inline AnchoredBarredPermutation anchored_from_text(const std::string& text) {
    AnchoredBarredPermutation beta;
    std::vector<int> unnecessary{0};
    std::vector<char> floats{0};
    std::vector<char> anchors{0};
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ') { ++i; continue; }
        if (c == 'f' || c == 'a') {
            if (i + 1 >= text.size() || text[i + 1] != '|')
                throw std::invalid_argument("anchored_from_text: expected '|' after species");
            (c == 'f' ? floats : anchors).back() = 1;
            i += 2;
        } else if (c == '|') {
            unnecessary.back() += 1;
            ++i;
        } else if (c >= '1' && c <= '9') {
            beta.pi.push_back(c - '0');
            unnecessary.push_back(0);
            floats.push_back(0);
            anchors.push_back(0);
            ++i;
        } else {
            throw std::invalid_argument("anchored_from_text: bad character");
        }
    }
    beta.unnecessary = std::move(unnecessary);
    beta.floats = std::move(floats);
    if (!beta.valid())
        throw std::invalid_argument("anchored_from_text: not a valid element");
    for (size_t g = 0; g < anchors.size(); ++g)
        if ((anchors[g] != 0) != beta.has_anchor(static_cast<int>(g)))
            throw std::invalid_argument("anchored_from_text: anchors do not match descents");
    return beta;
}

inline nlohmann::json to_json(const AnchoredBarredPermutation& beta) {
    nlohmann::json j;
    j["pi"] = beta.pi;
    j["unnecessary"] = beta.unnecessary;
    std::vector<bool> fl(beta.floats.begin(), beta.floats.end());
    j["float"] = fl;
    return j;
}

inline AnchoredBarredPermutation anchored_from_json(const nlohmann::json& j) {
    AnchoredBarredPermutation beta;
    beta.pi = j.at("pi").get<std::vector<int>>();
    beta.unnecessary = j.at("unnecessary").get<std::vector<int>>();
    for (bool f : j.at("float").get<std::vector<bool>>())
        beta.floats.push_back(f ? 1 : 0);
    if (!beta.valid())
        throw std::invalid_argument("anchored_from_json: not a valid element");
    return beta;
}

} // namespace eulerlab
