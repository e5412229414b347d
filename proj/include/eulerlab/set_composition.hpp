#pragma once

#include <algorithm>
#include <map>
#include <optional>
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

// Ordered set partition of {1..n}; elements within a block kept ascending.
// The boundary after block b is an anchor exactly when
// max(block b) > min(block b+1).
struct SetComposition {
    std::vector<std::vector<int>> blocks;

    bool operator==(const SetComposition&) const = default;
    auto operator<=>(const SetComposition&) const = default;

    int n() const {
        int t = 0;
        for (const auto& b : blocks) t += static_cast<int>(b.size());
        return t;
    }

    // Concatenated block contents; the underlying permutation.
    Permutation reading_word() const {
        Permutation w;
        for (const auto& b : blocks) w.insert(w.end(), b.begin(), b.end());
        return w;
    }

    // Anchor status of the boundary between blocks b and b+1.
    bool anchor_after(size_t b) const {
        return blocks[b].back() > blocks[b + 1].front();
    }

    bool valid() const {
        if (blocks.empty()) return false;
        std::set<int> all;
        for (const auto& b : blocks) {
            if (b.empty() || !std::is_sorted(b.begin(), b.end())) return false;
            all.insert(b.begin(), b.end());
        }
        const int m = n();
        if (static_cast<int>(all.size()) != m) return false;
        return *all.begin() == 1 && *all.rbegin() == m;
    }
};

// The descent composition of pi: block boundaries exactly at descents.
inline SetComposition descent_composition(const Permutation& pi) {
    SetComposition c;
    std::vector<int> cur;
    for (size_t i = 0; i < pi.size(); ++i) {
        cur.push_back(pi[i]);
        if (i + 1 == pi.size() || pi[i] > pi[i + 1]) {
            c.blocks.push_back(std::move(cur));
            cur.clear();
        }
    }
    return c;
}

// A set composition with a highlighted subset that must contain every
// block maximum. Highlighted non-maxima are the remarkable elements.
struct DecoratedSetComposition {
    SetComposition composition;
    std::set<int> highlighted;

    bool operator==(const DecoratedSetComposition&) const = default;

    std::set<int> remarkable() const {
        std::set<int> r = highlighted;
        for (const auto& b : composition.blocks) r.erase(b.back());
        return r;
    }

    int sign() const { return remarkable().size() % 2 == 0 ? 1 : -1; }

    bool valid() const {
        if (!composition.valid()) return false;
        for (const auto& b : composition.blocks)
            if (!highlighted.count(b.back())) return false;
        for (int h : highlighted)
            if (h < 1 || h > composition.n()) return false;
        return true;
    }
};

// All set compositions of {1..n}, ordered lexicographically by reading
// word then by refinement; optionally only those with a given block count.
inline std::vector<SetComposition> enumerate_set_compositions(
    int n, std::optional<int> block_count = std::nullopt,
    int bound = kDefaultEnumerationBound) {
    if (n < 1) throw std::invalid_argument("enumerate_set_compositions: n >= 1");
    if (n > bound)
        throw enumeration_bound_error("enumerate_set_compositions: n exceeds bound");
    std::vector<SetComposition> out;
    for_each_permutation(n, [&](const Permutation& pi) {
        // Compositions whose reading word is pi: bar subsets that contain
        // every descent position (blocks must stay ascending).
        std::vector<int> mandatory = descent_set(pi);
        std::vector<int> optional_gaps;
        for (int g = 1; g < n; ++g)
            if (!std::binary_search(mandatory.begin(), mandatory.end(), g))
                optional_gaps.push_back(g);
        const size_t m = optional_gaps.size();
        for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
            std::vector<char> bar(static_cast<size_t>(n), 0);
            for (int g : mandatory) bar[static_cast<size_t>(g)] = 1;
            for (size_t i = 0; i < m; ++i)
                if (mask & (size_t{1} << i))
                    bar[static_cast<size_t>(optional_gaps[i])] = 1;
            SetComposition c;
            std::vector<int> cur;
            for (int i = 0; i < n; ++i) {
                cur.push_back(pi[static_cast<size_t>(i)]);
                if (i + 1 == n || bar[static_cast<size_t>(i + 1)]) {
                    c.blocks.push_back(std::move(cur));
                    cur.clear();
                }
            }
            if (!block_count || static_cast<int>(c.blocks.size()) == *block_count)
                out.push_back(std::move(c));
        }
    });
    std::sort(out.begin(), out.end(), [](const SetComposition& a, const SetComposition& b) {
        auto wa = a.reading_word(), wb = b.reading_word();
        if (wa != wb) return wa < wb;
        return a.blocks < b.blocks;
    });
    return out;
}

// Exhaustive count of set compositions into the given number of blocks.
inline BigInt count_set_compositions(int n, int blocks,
                                     int bound = kDefaultEnumerationBound) {
    if (blocks < 1 || blocks > n)
        throw std::invalid_argument("count_set_compositions: 1 <= blocks <= n");
    return BigInt(enumerate_set_compositions(n, blocks, bound).size());
}

// All decorated set compositions of {1..n} with k+1 highlighted elements,
// optionally restricted to a given block count. Order: reading word,
// refinement, then highlighted set.
inline std::vector<DecoratedSetComposition> enumerate_decorated(
    int n, int k, std::optional<int> block_count = std::nullopt,
    int bound = kDefaultEnumerationBound) {
    if (k < 0 || k + 1 > n)
        throw std::invalid_argument("enumerate_decorated: need 0 <= k <= n-1");
    if (block_count && (*block_count < 1 || *block_count > k + 1))
        throw std::invalid_argument("enumerate_decorated: 1 <= blocks <= k+1");
    std::vector<DecoratedSetComposition> out;
    for (const SetComposition& c : enumerate_set_compositions(n, std::nullopt, bound)) {
        const int i = static_cast<int>(c.blocks.size());
        if (i > k + 1) continue;
        if (block_count && i != *block_count) continue;
        std::vector<int> maxima, others;
        for (const auto& b : c.blocks) maxima.push_back(b.back());
        for (int v = 1; v <= n; ++v)
            if (std::find(maxima.begin(), maxima.end(), v) == maxima.end())
                others.push_back(v);
        // choose k+1-i remarkable elements among the non-maxima, lex order
        const int need = k + 1 - i;
        std::vector<int> pick;
        auto rec = [&](auto&& self, size_t from) -> void {
            if (static_cast<int>(pick.size()) == need) {
                DecoratedSetComposition d;
                d.composition = c;
                d.highlighted.insert(maxima.begin(), maxima.end());
                d.highlighted.insert(pick.begin(), pick.end());
                out.push_back(std::move(d));
                return;
            }
            for (size_t j = from; j < others.size(); ++j) {
                pick.push_back(others[j]);
                self(self, j + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

// The leftmost highlighted element, in reading order, without an anchor
// immediately to its right; the maximum of the rightmost block never
// qualifies. Returns nothing for a fixed point.
inline std::optional<int> toggle_element(const DecoratedSetComposition& gamma) {
    const auto& blocks = gamma.composition.blocks;
    for (size_t b = 0; b < blocks.size(); ++b) {
        for (size_t p = 0; p < blocks[b].size(); ++p) {
            int e = blocks[b][p];
            if (!gamma.highlighted.count(e)) continue;
            if (p + 1 < blocks[b].size()) return e;  // next symbol is an element
            if (b + 1 == blocks.size()) continue;    // rightmost block maximum
            if (!gamma.composition.anchor_after(b)) return e;  // non-anchor bar
        }
    }
    return std::nullopt;
}

// The sign-reversing involution on decorated set compositions: the toggle
// element either splits its block just after itself or merges its block
// with the next one; the highlighted set never changes.
inline DecoratedSetComposition iota2(DecoratedSetComposition gamma) {
    auto h = toggle_element(gamma);
    if (!h) return gamma;
    auto& blocks = gamma.composition.blocks;
    for (size_t b = 0; b < blocks.size(); ++b) {
        auto it = std::find(blocks[b].begin(), blocks[b].end(), *h);
        if (it == blocks[b].end()) continue;
        if (*h != blocks[b].back()) {
            std::vector<int> right(it + 1, blocks[b].end());
            blocks[b].erase(it + 1, blocks[b].end());
            blocks.insert(blocks.begin() + static_cast<long>(b) + 1, std::move(right));
        } else {
            blocks[b].insert(blocks[b].end(), blocks[b + 1].begin(), blocks[b + 1].end());
            blocks.erase(blocks.begin() + static_cast<long>(b) + 1);
        }
        return gamma;
    }
    throw std::logic_error("iota2: toggle element not found");
}

struct Die2Report {
    int n = 0;
    int k = 0;
    std::map<int, BigInt> class_counts;  // block count i -> |C^i_{n,k}|
    BigInt paired;
    BigInt fixed_points;
    BigInt signed_sum;
};

// Runs iota2 over all decorated set compositions with k+1 highlighted
// elements, checking the involution laws and that the fixed points are
// exactly the descent compositions of permutations with k descents.
inline Die2Report verify_die_eq2(int n, int k,
                                 int bound = kDefaultEnumerationBound) {
    Die2Report rep;
    rep.n = n;
    rep.k = k;
    for (const DecoratedSetComposition& gamma : enumerate_decorated(n, k, std::nullopt, bound)) {
        rep.class_counts[static_cast<int>(gamma.composition.blocks.size())] += 1;
        rep.signed_sum += gamma.sign();
        DecoratedSetComposition img = iota2(gamma);
        if (iota2(img) != gamma)
            throw involution_error("iota2 is not an involution");
        if (img == gamma) {
            if (!gamma.remarkable().empty())
                throw involution_error("iota2 fixed point has a remarkable element");
            Permutation w = gamma.composition.reading_word();
            if (descents(w) != k ||
                gamma.composition != descent_composition(w))
                throw involution_error("iota2 fixed point is not a descent composition");
            rep.fixed_points += 1;
        } else {
            if (img.sign() != -gamma.sign())
                throw involution_error("iota2 did not reverse sign");
            if (img.highlighted != gamma.highlighted)
                throw involution_error("iota2 changed the highlighted set");
            if (img.composition.reading_word() != gamma.composition.reading_word())
                throw involution_error("iota2 changed the reading word");
            if (toggle_element(img) != toggle_element(gamma))
                throw involution_error("iota2 changed the toggle element");
            rep.paired += 1;
        }
    }
    if (rep.signed_sum != rep.fixed_points)
        throw involution_error("signed sum does not match fixed points");
    return rep;
}

// --- codecs --------------------------------------------------------------
// Text: elements space-separated, "~" appended to highlighted elements,
// "|" for a non-anchor boundary, "a|" for an anchor boundary.

inline std::string to_text(const DecoratedSetComposition& gamma) {
    std::string s;
    const auto& blocks = gamma.composition.blocks;
    for (size_t b = 0; b < blocks.size(); ++b) {
        for (size_t p = 0; p < blocks[b].size(); ++p) {
            if (!s.empty()) s += ' ';
            s += std::to_string(blocks[b][p]);
            if (gamma.highlighted.count(blocks[b][p])) s += '~';
        }
        if (b + 1 < blocks.size()) {
            s += ' ';
            s += gamma.composition.anchor_after(b) ? "a|" : "|";
        }
    }
    return s;
}

inline DecoratedSetComposition decorated_from_text(const std::string& text) {
    DecoratedSetComposition gamma;
    std::vector<int> cur;
    std::vector<std::optional<bool>> stated_anchor;  // per boundary
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ') { ++i; continue; }
        if (c == 'a' || c == '|') {
            bool anchor = (c == 'a');
            if (anchor) {
                if (i + 1 >= text.size() || text[i + 1] != '|')
                    throw std::invalid_argument("decorated_from_text: expected 'a|'");
                ++i;
            }
            ++i;
            if (cur.empty())
                throw std::invalid_argument("decorated_from_text: empty block");
            gamma.composition.blocks.push_back(cur);
            cur.clear();
            stated_anchor.push_back(anchor);
        } else if (c >= '0' && c <= '9') {
            size_t j = i;
            while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
            int v = std::stoi(text.substr(i, j - i));
            cur.push_back(v);
            i = j;
            if (i < text.size() && text[i] == '~') {
                gamma.highlighted.insert(v);
                ++i;
            }
        } else {
            throw std::invalid_argument("decorated_from_text: bad character");
        }
    }
    if (cur.empty())
        throw std::invalid_argument("decorated_from_text: empty final block");
    gamma.composition.blocks.push_back(cur);
    if (!gamma.valid())
        throw std::invalid_argument("decorated_from_text: invalid decorated composition");
    for (size_t b = 0; b < stated_anchor.size(); ++b)
        if (*stated_anchor[b] != gamma.composition.anchor_after(b))
            throw std::invalid_argument("decorated_from_text: anchor marks do not match contents");
    return gamma;
}

inline nlohmann::json to_json(const DecoratedSetComposition& gamma) {
    nlohmann::json j;
    j["blocks"] = gamma.composition.blocks;
    j["highlighted"] = gamma.highlighted;
    return j;
}

inline DecoratedSetComposition decorated_from_json(const nlohmann::json& j) {
    DecoratedSetComposition gamma;
    gamma.composition.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    for (int v : j.at("highlighted").get<std::vector<int>>())
        gamma.highlighted.insert(v);
    if (!gamma.valid())
        throw std::invalid_argument("decorated_from_json: invalid decorated composition");
    return gamma;
}

inline std::string die2_csv_row(const Die2Report& rep) {
    std::string s = std::to_string(rep.n) + "," + std::to_string(rep.k) + "," +
                    rep.fixed_points.str() + "," + rep.signed_sum.str() + "," +
                    rep.paired.str();
    return s;
}

} // namespace eulerlab
