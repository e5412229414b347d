#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerlab/bigint.hpp"
#include "eulerlab/permutation.hpp"
#include "eulerlab/simplicial.hpp"
#include "eulerlab/tables.hpp"

namespace eulerlab {

inline constexpr int kDefaultDeltaBound = 7;

// The barycentric subdivision of the full simplex on {1..n} (or of its
// boundary complex) together with the canonical partition: one interval per
// permutation, topped by the fully refined composition and anchored at the
// descent composition.
struct DeltaComplex {
    int n = 0;
    bool boundary = false;
    SimplicialComplex complex;
    IntervalPartition partition;
    std::vector<Face> base_faces;  // subdivision vertex -> subset of {1..n}
    std::map<Face, int> base_index;
};

inline DeltaComplex delta_n(int n, bool boundary,
                            int bound = kDefaultDeltaBound) {
    if (n < 1) throw std::invalid_argument("delta_n: n >= 1");
    if (n > bound) throw enumeration_bound_error("delta_n: n exceeds bound");
    if (boundary && n < 2)
        throw std::invalid_argument("delta_n: boundary variant needs n >= 2");
    DeltaComplex d;
    d.n = n;
    d.boundary = boundary;
    SimplicialComplex base = boundary ? boundary_simplex(n) : full_simplex(n);
    auto [sub, base_faces] = barycentric_with_map(base);
    d.complex = std::move(sub);
    d.base_faces = std::move(base_faces);
    for (size_t i = 0; i < d.base_faces.size(); ++i)
        d.base_index[d.base_faces[i]] = static_cast<int>(i);

    // canonical partition: block per permutation
    for_each_permutation(n, [&](const Permutation& pi) {
        auto prefix_flag = [&](const std::vector<int>& cuts) {
            Face flag = 0;
            Face prefix = 0;
            size_t c = 0;
            for (int i = 1; i <= n; ++i) {
                prefix |= Face{1} << (pi[static_cast<size_t>(i - 1)] - 1);
                if (c < cuts.size() && cuts[c] == i) {
                    flag |= Face{1} << d.base_index.at(prefix);
                    ++c;
                }
            }
            return flag;
        };
        std::vector<int> all_cuts;
        for (int i = 1; i <= (boundary ? n - 1 : n); ++i) all_cuts.push_back(i);
        Face facet = prefix_flag(all_cuts);
        Face anchor = prefix_flag(descent_set(pi));
        d.partition.blocks.emplace_back(anchor, facet);
    });
    return d;
}

// Difference encoding of a face (flag) as a set composition string:
// block contents in ascending order, "|" between blocks, and a trailing "|"
// when the final block is empty (the flag reached {1..n}).
inline std::string face_to_composition(const DeltaComplex& d, Face face) {
    if (!d.complex.is_face(face))
        throw complex_error("face_to_composition: not a face");
    std::vector<Face> chain;
    for (int v = 0; v < d.complex.vertex_count(); ++v)
        if (face & (Face{1} << v)) chain.push_back(d.base_faces[static_cast<size_t>(v)]);
    std::sort(chain.begin(), chain.end(), [](Face a, Face b) {
        return face_cardinality(a) < face_cardinality(b);
    });
    const Face full = (Face{1} << d.n) - 1;
    chain.push_back(full);
    std::string s;
    Face prev = 0;
    for (size_t i = 0; i < chain.size(); ++i) {
        Face diff = chain[i] & ~prev;
        if (i + 1 == chain.size() && diff == 0) {
            // flag already reached {1..n}: empty final block, keep the bar
            break;
        }
        for (int e = 1; e <= d.n; ++e)
            if (diff & (Face{1} << (e - 1))) s += std::to_string(e);
        if (i + 1 < chain.size()) s += '|';
        prev = chain[i];
    }
    return s;
}

// Inverse of face_to_composition.
inline Face composition_to_face(const DeltaComplex& d, const std::string& text) {
    std::vector<Face> blocks;
    Face cur = 0;
    bool trailing_bar = false;
    for (char c : text) {
        if (c == '|') {
            if (cur == 0) throw std::invalid_argument("composition: empty block");
            blocks.push_back(cur);
            cur = 0;
            trailing_bar = true;
        } else if (c >= '1' && c <= '9') {
            int e = c - '0';
            if (e > d.n) throw std::invalid_argument("composition: element out of range");
            cur |= Face{1} << (e - 1);
            trailing_bar = false;
        } else if (c != ' ') {
            throw std::invalid_argument("composition: bad character");
        }
    }
    if (cur != 0) blocks.push_back(cur);
    if (blocks.empty()) throw std::invalid_argument("composition: empty input");
    // each bar contributes the prefix up to it as a flag member
    Face face = 0;
    Face prefix = 0;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (prefix & blocks[i])
            throw std::invalid_argument("composition: repeated element");
        prefix |= blocks[i];
        bool has_bar = (i + 1 < blocks.size()) || trailing_bar;
        if (has_bar) face |= Face{1} << d.base_index.at(prefix);
    }
    const Face full = (Face{1} << d.n) - 1;
    if (prefix != full) throw std::invalid_argument("composition: does not cover {1..n}");
    if (!d.complex.is_face(face))
        throw std::invalid_argument("composition: not a face of this complex");
    return face;
}

struct FVectorFormulaReport {
    int n = 0;
    bool ok = false;
    std::string issue;
    FVector f_full;       // f(Delta_n)
    FVector f_boundary;   // f(Delta'_n)
    std::vector<BigInt> h_full;
    std::vector<BigInt> h_boundary;
};

// Checks f_i(Delta_n) = i! S(n+1,i+1), f_i(Delta'_n) = S(n,i+1)(i+1)!, and
// that both h-vectors reproduce the Eulerian row <n,.>.
inline FVectorFormulaReport verify_fvector_formulas(
    int n, int bound = kDefaultDeltaBound) {
    FVectorFormulaReport rep;
    rep.n = n;
    DeltaComplex full = delta_n(n, false, bound);
    rep.f_full = f_vector(full.complex);
    rep.h_full = h_vector(rep.f_full).h;
    for (int i = 0; i <= n; ++i) {
        if (rep.f_full.counts[static_cast<size_t>(i)] !=
            factorial(i) * stirling2(n + 1, i + 1)) {
            rep.issue = "f_" + std::to_string(i) + " mismatch for the full subdivision";
            return rep;
        }
    }
    for (int k = 0; k <= n; ++k) {
        BigInt expected = k < n ? eulerian(n, k) : BigInt(0);
        if (rep.h_full[static_cast<size_t>(k)] != expected) {
            rep.issue = "h_" + std::to_string(k) + " mismatch for the full subdivision";
            return rep;
        }
    }
    if (n >= 2) {
        DeltaComplex bd = delta_n(n, true, bound);
        rep.f_boundary = f_vector(bd.complex);
        rep.h_boundary = h_vector(rep.f_boundary).h;
        for (int i = 0; i <= n - 1; ++i) {
            if (rep.f_boundary.counts[static_cast<size_t>(i)] !=
                stirling2(n, i + 1) * factorial(i + 1)) {
                rep.issue = "f_" + std::to_string(i) + " mismatch for the boundary subdivision";
                return rep;
            }
        }
        for (int k = 0; k <= n - 1; ++k) {
            if (rep.h_boundary[static_cast<size_t>(k)] != eulerian(n, k)) {
                rep.issue = "h_" + std::to_string(k) + " mismatch for the boundary subdivision";
                return rep;
            }
        }
    }
    rep.ok = true;
    return rep;
}

} // namespace eulerlab
