#pragma once

#include <algorithm>
#include <cstdint>
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
#include "eulerlab/set_composition.hpp"
#include "eulerlab/tables.hpp"

namespace eulerlab {

struct complex_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A face is a set of vertex indices into vertex_labels, packed in a bitset.
using Face = std::uint64_t;

inline int face_cardinality(Face f) { return __builtin_popcountll(f); }

inline bool is_subset(Face a, Face b) { return (a & ~b) == 0; }

// Least set vertex index; face must be nonempty.
inline int least_vertex(Face f) { return __builtin_ctzll(f); }

// Abstract simplicial complex with a fixed vertex labeling. The face set is
// the materialized downward closure of the facets, including the empty face.
struct SimplicialComplex {
    std::vector<std::string> vertex_labels;
    std::vector<Face> facets;  // sorted
    std::vector<Face> faces;   // sorted, downward closed, contains 0

    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }

    int vertex_index(const std::string& label) const {
        auto it = std::find(vertex_labels.begin(), vertex_labels.end(), label);
        if (it == vertex_labels.end())
            throw complex_error("unknown vertex: " + label);
        return static_cast<int>(it - vertex_labels.begin());
    }

    bool is_face(Face f) const {
        return std::binary_search(faces.begin(), faces.end(), f);
    }

    bool is_facet(Face f) const {
        return std::binary_search(facets.begin(), facets.end(), f);
    }

    // dimension + 1, the cardinality of the largest face
    int d() const {
        int m = 0;
        for (Face f : facets) m = std::max(m, face_cardinality(f));
        return m;
    }

    std::string face_label(Face f) const {
        if (f == 0) return "{}";
        std::string s = "{";
        bool first = true;
        for (int v = 0; v < vertex_count(); ++v)
            if (f & (Face{1} << v)) {
                if (!first) s += ",";
                s += vertex_labels[static_cast<size_t>(v)];
                first = false;
            }
        return s + "}";
    }
};

namespace detail {

inline std::vector<Face> downward_closure(const std::vector<Face>& facets) {
    std::set<Face> all{0};
    for (Face f : facets) {
        // enumerate subsets of f
        Face sub = f;
        while (true) {
            all.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    return {all.begin(), all.end()};
}

inline SimplicialComplex complex_from_face_bitsets(
    std::vector<std::string> labels, std::vector<Face> facets) {
    std::sort(facets.begin(), facets.end());
    SimplicialComplex s;
    s.vertex_labels = std::move(labels);
    s.faces = downward_closure(facets);
    s.facets = std::move(facets);
    return s;
}

} // namespace detail

// Builds a complex from its facet list. A facet contained in another facet
// is rejected as redundant.
inline SimplicialComplex from_facets(
    std::vector<std::string> vertex_labels,
    const std::vector<std::vector<std::string>>& facet_list) {
    if (vertex_labels.size() > 64)
        throw complex_error("from_facets: at most 64 vertices supported");
    std::set<std::string> label_set(vertex_labels.begin(), vertex_labels.end());
    if (label_set.size() != vertex_labels.size())
        throw complex_error("from_facets: duplicate vertex label");
    SimplicialComplex tmp;
    tmp.vertex_labels = vertex_labels;
    std::vector<Face> facets;
    for (const auto& fl : facet_list) {
        Face f = 0;
        for (const auto& v : fl) f |= Face{1} << tmp.vertex_index(v);
        facets.push_back(f);
    }
    for (size_t i = 0; i < facets.size(); ++i)
        for (size_t j = 0; j < facets.size(); ++j)
            if (i != j && is_subset(facets[i], facets[j]))
                throw complex_error("from_facets: dominated facet");
    return detail::complex_from_face_bitsets(std::move(vertex_labels),
                                             std::move(facets));
}

// f-vector: counts[i] = number of faces of cardinality i; counts[0] = 1.
struct FVector {
    int d = 0;
    std::vector<BigInt> counts;  // size d+1

    bool operator==(const FVector&) const = default;
};

inline FVector f_vector(const SimplicialComplex& s) {
    FVector f;
    f.d = s.d();
    f.counts.assign(static_cast<size_t>(f.d) + 1, 0);
    for (Face face : s.faces) f.counts[static_cast<size_t>(face_cardinality(face))] += 1;
    return f;
}

struct HVector {
    std::vector<BigInt> h;  // h_0 .. h_d
    BigInt euler_characteristic;
    bool euler_relation_ok = false;  // h_d == (-1)^d (1 - chi)
};

// h_k = sum_{i=0}^{k} (-1)^{k-i} C(d-i, k-i) f_i
inline HVector h_vector(const FVector& f) {
    HVector out;
    out.h.assign(static_cast<size_t>(f.d) + 1, 0);
    for (int k = 0; k <= f.d; ++k)
        for (int i = 0; i <= k; ++i) {
            BigInt t = binomial(f.d - i, k - i) * f.counts[static_cast<size_t>(i)];
            out.h[static_cast<size_t>(k)] += ((k - i) % 2 == 0) ? t : -t;
        }
    for (int i = 1; i <= f.d; ++i) {
        BigInt t = f.counts[static_cast<size_t>(i)];
        out.euler_characteristic += (i % 2 == 1) ? t : -t;
    }
    BigInt expected = 1 - out.euler_characteristic;
    if (f.d % 2 != 0) expected = -expected;
    out.euler_relation_ok = (out.h[static_cast<size_t>(f.d)] == expected);
    return out;
}

inline bool is_pure(const SimplicialComplex& s) {
    for (Face f : s.facets)
        if (face_cardinality(f) != s.d()) return false;
    return true;
}

// Disjoint boolean intervals [anchor, facet] covering the whole face set.
struct IntervalPartition {
    std::vector<std::pair<Face, Face>> blocks;  // (anchor, facet)
};

struct PartitionReport {
    bool ok = false;
    std::string issue;
    std::vector<BigInt> census;  // census[k] = #blocks with |anchor| = k
};

// Checks the partition conditions and that the block census reproduces the
// h-vector of the complex.
inline PartitionReport verify_partition(const SimplicialComplex& s,
                                        const IntervalPartition& p) {
    PartitionReport rep;
    const int d = s.d();
    rep.census.assign(static_cast<size_t>(d) + 1, 0);
    std::set<Face> covered;
    for (auto [anchor, facet] : p.blocks) {
        if (!s.is_facet(facet)) {
            rep.issue = "block top " + s.face_label(facet) + " is not a facet";
            return rep;
        }
        if (!is_subset(anchor, facet)) {
            rep.issue = "anchor " + s.face_label(anchor) + " not contained in its facet";
            return rep;
        }
        Face sub = facet;
        while (true) {
            if (is_subset(anchor, sub)) {
                if (!covered.insert(sub).second) {
                    rep.issue = "face " + s.face_label(sub) + " covered twice";
                    return rep;
                }
            }
            if (sub == 0) break;
            sub = (sub - 1) & facet;
        }
        rep.census[static_cast<size_t>(face_cardinality(anchor))] += 1;
    }
    if (covered.size() != s.faces.size()) {
        rep.issue = "partition does not cover every face";
        return rep;
    }
    HVector h = h_vector(f_vector(s));
    if (rep.census != h.h) {
        rep.issue = "census differs from the h-vector";
        return rep;
    }
    rep.ok = true;
    return rep;
}

// Exact backtracking search for an interval partition: repeatedly pick an
// uncovered facet-interval assignment, preferring facets with the fewest
// viable anchors, and backtrack on conflicts.
inline std::optional<IntervalPartition> find_partition(const SimplicialComplex& s) {
    if (!is_pure(s)) throw complex_error("find_partition: complex is not pure");
    std::set<Face> uncovered(s.faces.begin(), s.faces.end());
    std::vector<Face> remaining_facets = s.facets;
    std::vector<std::pair<Face, Face>> blocks;

    auto viable_anchors = [&](Face facet) {
        std::vector<Face> anchors;
        Face sub = facet;
        while (true) {
            // [sub, facet] must be fully uncovered
            bool clear = true;
            Face g = facet;
            while (true) {
                if (is_subset(sub, g) && !uncovered.count(g)) { clear = false; break; }
                if (g == 0) break;
                g = (g - 1) & facet;
            }
            if (clear) anchors.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & facet;
        }
        std::sort(anchors.begin(), anchors.end());
        return anchors;
    };

    auto rec = [&](auto&& self) -> bool {
        if (remaining_facets.empty()) return uncovered.empty();
        // most-constrained facet first
        size_t best = 0;
        std::vector<Face> best_anchors;
        for (size_t i = 0; i < remaining_facets.size(); ++i) {
            auto anchors = viable_anchors(remaining_facets[i]);
            if (i == 0 || anchors.size() < best_anchors.size()) {
                best = i;
                best_anchors = std::move(anchors);
                if (best_anchors.empty()) break;
            }
        }
        if (best_anchors.empty()) return false;
        Face facet = remaining_facets[best];
        remaining_facets.erase(remaining_facets.begin() + static_cast<long>(best));
        for (Face anchor : best_anchors) {
            std::vector<Face> taken;
            Face g = facet;
            while (true) {
                if (is_subset(anchor, g)) {
                    uncovered.erase(g);
                    taken.push_back(g);
                }
                if (g == 0) break;
                g = (g - 1) & facet;
            }
            blocks.emplace_back(anchor, facet);
            if (self(self)) return true;
            blocks.pop_back();
            uncovered.insert(taken.begin(), taken.end());
        }
        remaining_facets.insert(remaining_facets.begin() + static_cast<long>(best), facet);
        return false;
    };

    if (!rec(rec)) return std::nullopt;
    IntervalPartition p;
    p.blocks = std::move(blocks);
    std::sort(p.blocks.begin(), p.blocks.end());
    return p;
}

// A face together with its remarkable vertex set; G lies in a unique
// interval of the fixed partition and J is disjoint from G inside its top.
struct DecoratedFace {
    Face g = 0;
    Face j = 0;

    bool operator==(const DecoratedFace&) const = default;
    auto operator<=>(const DecoratedFace&) const = default;

    int sign() const { return face_cardinality(j) % 2 == 0 ? 1 : -1; }
};

// Map from each face to the interval containing it.
inline std::map<Face, std::pair<Face, Face>> interval_of_face(
    const SimplicialComplex& s, const IntervalPartition& p) {
    std::map<Face, std::pair<Face, Face>> out;
    for (auto [anchor, facet] : p.blocks) {
        Face g = facet;
        while (true) {
            if (is_subset(anchor, g))
                if (!out.emplace(g, std::make_pair(anchor, facet)).second)
                    throw complex_error("partition intervals overlap");
            if (g == 0) break;
            g = (g - 1) & facet;
        }
    }
    if (out.size() != s.faces.size())
        throw complex_error("partition does not cover every face");
    return out;
}

// Toggle the least-index vertex of (G - anchor) union J between G and J.
inline DecoratedFace iota3(const std::pair<Face, Face>& interval, DecoratedFace df) {
    Face inner = (df.g & ~interval.first) | df.j;
    if (inner == 0) return df;
    Face v = Face{1} << least_vertex(inner);
    if (df.j & v) {
        df.j &= ~v;
        df.g |= v;
    } else {
        df.g &= ~v;
        df.j |= v;
    }
    return df;
}

struct Die3Report {
    int k = 0;
    std::map<int, BigInt> class_counts;  // |G| = i -> |C^i_{Sigma,k}|
    BigInt paired;
    BigInt fixed_points;
    BigInt signed_sum;
    BigInt h_k;
};

// Runs iota3 over all decorated faces with |G union J| = k, checking the
// involution laws and that the signed sum equals h_k.
inline Die3Report verify_die_simplicial(const SimplicialComplex& s,
                                        const IntervalPartition& p, int k) {
    Die3Report rep;
    rep.k = k;
    auto intervals = interval_of_face(s, p);
    for (Face g : s.faces) {
        const auto& iv = intervals.at(g);
        const Face top = iv.second;
        const int need = k - face_cardinality(g);
        if (need < 0) continue;
        // all J subsets of top - G with |J| = need
        Face pool = top & ~g;
        Face j = pool;
        while (true) {
            if (face_cardinality(j) == need) {
                DecoratedFace df{g, j};
                rep.class_counts[face_cardinality(g)] += 1;
                rep.signed_sum += df.sign();
                DecoratedFace img = iota3(iv, df);
                // G' stays in [anchor, top], so the same interval applies
                if (iota3(iv, img) != df)
                    throw involution_error("iota3 is not an involution");
                if (img == df) {
                    if (df.g != iv.first || df.j != 0)
                        throw involution_error("iota3 fixed point is not an anchor face");
                    rep.fixed_points += 1;
                } else {
                    if (img.sign() != -df.sign())
                        throw involution_error("iota3 did not reverse sign");
                    if (face_cardinality(img.g) + face_cardinality(img.j) != k)
                        throw involution_error("iota3 changed |G union J|");
                    if (!is_subset(iv.first, img.g) || !is_subset(img.g, top))
                        throw involution_error("iota3 left the interval");
                    rep.paired += 1;
                }
            }
            if (j == 0) break;
            j = (j - 1) & pool;
        }
    }
    HVector h = h_vector(f_vector(s));
    rep.h_k = (k >= 0 && k <= f_vector(s).d) ? h.h[static_cast<size_t>(k)] : 0;
    if (rep.signed_sum != rep.fixed_points || rep.signed_sum != rep.h_k)
        throw involution_error("verify_die_simplicial: signed sum mismatch");
    return rep;
}

// --- barycentric subdivision ---------------------------------------------

// Barycentric subdivision plus the map from subdivision vertex index back
// to the base face it represents. Subdivision vertices are the nonempty
// faces of s, ordered by cardinality then bit pattern.
inline std::pair<SimplicialComplex, std::vector<Face>> barycentric_with_map(
    const SimplicialComplex& s) {
    std::vector<Face> base;
    for (Face f : s.faces)
        if (f != 0) base.push_back(f);
    std::sort(base.begin(), base.end(), [](Face a, Face b) {
        int ca = face_cardinality(a), cb = face_cardinality(b);
        return ca != cb ? ca < cb : a < b;
    });
    if (base.size() > 64)
        throw complex_error("barycentric: more than 64 subdivision vertices");

    std::map<Face, int> index;
    std::vector<std::string> labels;
    for (size_t i = 0; i < base.size(); ++i) {
        index[base[i]] = static_cast<int>(i);
        std::string l;
        for (int v = 0; v < s.vertex_count(); ++v)
            if (base[i] & (Face{1} << v)) l += s.vertex_labels[static_cast<size_t>(v)];
        labels.push_back(l);
    }

    // Maximal flags are saturated chains: a vertex of some facet F, then one
    // new vertex of F at a time up to F itself. One per (facet, ordering).
    std::vector<Face> flag_facets;
    for (Face facet : s.facets) {
        std::vector<int> verts;
        for (int v = 0; v < s.vertex_count(); ++v)
            if (facet & (Face{1} << v)) verts.push_back(v);
        std::sort(verts.begin(), verts.end());
        do {
            Face fl = 0;
            Face prefix = 0;
            for (int v : verts) {
                prefix |= Face{1} << v;
                fl |= Face{1} << index.at(prefix);
            }
            flag_facets.push_back(fl);
        } while (std::next_permutation(verts.begin(), verts.end()));
    }
    return {detail::complex_from_face_bitsets(std::move(labels),
                                              std::move(flag_facets)),
            std::move(base)};
}

// Complex whose vertices are the nonempty faces of s and whose faces are
// flags (chains under inclusion).
inline SimplicialComplex barycentric(const SimplicialComplex& s) {
    return barycentric_with_map(s).first;
}

// The full simplex on {1..n}: all subsets are faces.
inline SimplicialComplex full_simplex(int n) {
    std::vector<std::string> labels;
    std::vector<std::string> top;
    for (int v = 1; v <= n; ++v) {
        labels.push_back(std::to_string(v));
        top.push_back(std::to_string(v));
    }
    return from_facets(std::move(labels), {top});
}

// --- codecs and exports ----------------------------------------------------

inline std::vector<std::string> face_to_labels(const SimplicialComplex& s, Face f) {
    std::vector<std::string> out;
    for (int v = 0; v < s.vertex_count(); ++v)
        if (f & (Face{1} << v)) out.push_back(s.vertex_labels[static_cast<size_t>(v)]);
    return out;
}

inline Face face_from_labels(const SimplicialComplex& s,
                             const std::vector<std::string>& labels) {
    Face f = 0;
    for (const auto& l : labels) f |= Face{1} << s.vertex_index(l);
    return f;
}

// {"vertices":[labels...], "facets":[[labels...],...]}
inline SimplicialComplex complex_from_json(const nlohmann::json& j) {
    auto vertices = j.at("vertices").get<std::vector<std::string>>();
    auto facets = j.at("facets").get<std::vector<std::vector<std::string>>>();
    return from_facets(std::move(vertices), facets);
}

inline SimplicialComplex parse_complex(const std::string& source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        throw complex_error(std::string("complex: JSON parse error: ") + e.what());
    }
    return complex_from_json(j);
}

inline nlohmann::json complex_to_json(const SimplicialComplex& s) {
    nlohmann::json j;
    j["vertices"] = s.vertex_labels;
    j["facets"] = nlohmann::json::array();
    for (Face f : s.facets) j["facets"].push_back(face_to_labels(s, f));
    return j;
}

// [{"anchor":[labels...],"facet":[labels...]},...]
inline IntervalPartition partition_from_json(const SimplicialComplex& s,
                                             const nlohmann::json& j) {
    IntervalPartition p;
    for (const auto& blk : j)
        p.blocks.emplace_back(
            face_from_labels(s, blk.at("anchor").get<std::vector<std::string>>()),
            face_from_labels(s, blk.at("facet").get<std::vector<std::string>>()));
    return p;
}

inline nlohmann::json partition_to_json(const SimplicialComplex& s,
                                        const IntervalPartition& p) {
    nlohmann::json j = nlohmann::json::array();
    for (auto [anchor, facet] : p.blocks) {
        nlohmann::json blk;
        blk["anchor"] = face_to_labels(s, anchor);
        blk["facet"] = face_to_labels(s, facet);
        j.push_back(std::move(blk));
    }
    return j;
}

// Face poset as DOT, covers directed bottom-to-top; partition blocks, when
// given, are rendered as grouped clusters.
inline std::string face_poset_dot(const SimplicialComplex& s,
                                  const IntervalPartition* partition = nullptr) {
    std::map<Face, std::string> node;
    for (size_t i = 0; i < s.faces.size(); ++i)
        node[s.faces[i]] = "f" + std::to_string(i);
    std::string out = "digraph faces {\n  rankdir=BT;\n";
    auto emit_node = [&](Face f, const std::string& indent) {
        out += indent + node[f] + " [label=\"" + s.face_label(f) + "\"];\n";
    };
    if (partition) {
        int cluster = 0;
        for (auto [anchor, facet] : partition->blocks) {
            out += "  subgraph cluster_" + std::to_string(cluster++) + " {\n";
            out += "    color=gray;\n";
            Face g = facet;
            while (true) {
                if (is_subset(anchor, g)) emit_node(g, "    ");
                if (g == 0) break;
                g = (g - 1) & facet;
            }
            out += "  }\n";
        }
    } else {
        for (Face f : s.faces) emit_node(f, "  ");
    }
    for (Face f : s.faces)
        for (Face g : s.faces)
            if (face_cardinality(g) == face_cardinality(f) + 1 && is_subset(f, g))
                out += "  " + node[f] + " -> " + node[g] + ";\n";
    out += "}\n";
    return out;
}

// The boundary complex: all proper subsets of {1..n}.
inline SimplicialComplex boundary_simplex(int n) {
    if (n < 2) throw complex_error("boundary_simplex: n >= 2");
    std::vector<std::string> labels;
    for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    std::vector<std::vector<std::string>> facets;
    for (int skip = 1; skip <= n; ++skip) {
        std::vector<std::string> f;
        for (int v = 1; v <= n; ++v)
            if (v != skip) f.push_back(std::to_string(v));
        facets.push_back(std::move(f));
    }
    return from_facets(std::move(labels), facets);
}

} // namespace eulerlab
