#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "eulerlab/delta.hpp"
#include "eulerlab/simplicial.hpp"

using namespace eulerlab;

namespace {

// A non-pure complex: one triangle and three edges hanging off it.
SimplicialComplex mixed_complex() {
    return from_facets({"a", "b", "c", "d", "e"},
                       {{"a", "b", "c"}, {"b", "d"}, {"c", "e"}, {"d", "e"}});
}

// A pure 2-dimensional strip of three triangles.
SimplicialComplex strip_complex() {
    return from_facets({"a", "b", "c", "d", "e"},
                       {{"a", "b", "c"}, {"b", "c", "d"}, {"c", "d", "e"}});
}

IntervalPartition strip_partition(const SimplicialComplex& s) {
    return partition_from_json(s, nlohmann::json::parse(R"([
        {"anchor": [],    "facet": ["a","b","c"]},
        {"anchor": ["d"], "facet": ["b","c","d"]},
        {"anchor": ["e"], "facet": ["c","d","e"]}
    ])"));
}

} // namespace

TEST_CASE("complex construction and validation") {
    SimplicialComplex s = mixed_complex();
    CHECK(s.faces.size() == 13);
    CHECK(s.is_face(face_from_labels(s, {"a", "c"})));
    CHECK_FALSE(s.is_face(face_from_labels(s, {"a", "d"})));
    CHECK(s.d() == 3);
    CHECK_FALSE(is_pure(s));

    CHECK_THROWS_AS(from_facets({"a", "a"}, {{"a"}}), complex_error);
    CHECK_THROWS_AS(from_facets({"a", "b"}, {{"a", "b"}, {"a"}}), complex_error);
    CHECK_THROWS_AS(parse_complex("not json"), complex_error);
}

TEST_CASE("f-vectors and h-vectors") {
    FVector f_mixed = f_vector(mixed_complex());
    CHECK(f_mixed.counts == std::vector<BigInt>{1, 5, 6, 1});

    SimplicialComplex strip = strip_complex();
    FVector f = f_vector(strip);
    CHECK(f.counts == std::vector<BigInt>{1, 5, 7, 3});
    HVector h = h_vector(f);
    CHECK(h.h == std::vector<BigInt>{1, 2, 0, 0});
    CHECK(h.euler_relation_ok);
    CHECK(h.euler_characteristic == 1);

    FVector f_full = f_vector(full_simplex(4));
    CHECK(f_full.counts == std::vector<BigInt>{1, 4, 6, 4, 1});
    CHECK(h_vector(f_full).h == std::vector<BigInt>{1, 0, 0, 0, 0});

    // boundary of the simplex: h-vector all ones, sphere Euler relation
    HVector hb = h_vector(f_vector(boundary_simplex(4)));
    CHECK(hb.h == std::vector<BigInt>{1, 1, 1, 1});
    CHECK(hb.euler_relation_ok);
}

TEST_CASE("interval partition verification") {
    SimplicialComplex strip = strip_complex();
    IntervalPartition good = strip_partition(strip);
    PartitionReport rep = verify_partition(strip, good);
    CHECK(rep.ok);
    CHECK(rep.census == std::vector<BigInt>{1, 2, 0, 0});

    // wrong anchor: the intervals no longer cover disjointly
    IntervalPartition bad = good;
    bad.blocks[1].first = 0;
    CHECK_FALSE(verify_partition(strip, bad).ok);

    IntervalPartition not_facet;
    not_facet.blocks.emplace_back(0, face_from_labels(strip, {"a", "b"}));
    CHECK_FALSE(verify_partition(strip, not_facet).ok);
}

TEST_CASE("partition search") {
    SimplicialComplex strip = strip_complex();
    auto found = find_partition(strip);
    REQUIRE(found.has_value());
    CHECK(verify_partition(strip, *found).ok);

    CHECK_THROWS_AS(find_partition(mixed_complex()), complex_error);

    auto simple = find_partition(full_simplex(3));
    REQUIRE(simple.has_value());
    CHECK(verify_partition(full_simplex(3), *simple).ok);

    auto sphere = find_partition(boundary_simplex(4));
    REQUIRE(sphere.has_value());
    CHECK(verify_partition(boundary_simplex(4), *sphere).ok);
}

TEST_CASE("iota3 on decorated faces verifies the h-vector sums") {
    SimplicialComplex strip = strip_complex();
    IntervalPartition p = strip_partition(strip);
    CHECK(verify_die_simplicial(strip, p, 0).signed_sum == 1);
    Die3Report rep = verify_die_simplicial(strip, p, 1);
    CHECK(rep.signed_sum == 2);
    CHECK(rep.fixed_points == 2);
    CHECK(verify_die_simplicial(strip, p, 2).signed_sum == 0);
    CHECK(verify_die_simplicial(strip, p, 3).signed_sum == 0);

    // class counts at k=1: |G|=0 contributes f_0 choices of J... i.e. the
    // alternating-sum terms C(d-i,k-i) f_i appear as class sizes
    FVector f = f_vector(strip);
    for (int i = 0; i <= 1; ++i)
        CHECK(rep.class_counts.at(i) ==
              binomial(f.d - i, 1 - i) * f.counts[static_cast<size_t>(i)]);
}

TEST_CASE("barycentric subdivision") {
    // subdividing a single triangle: 7 vertices, 12 edges, 6 triangles
    SimplicialComplex tri = full_simplex(3);
    SimplicialComplex sub = barycentric(tri);
    FVector f = f_vector(sub);
    CHECK(f.counts == std::vector<BigInt>{1, 7, 12, 6});
    CHECK(h_vector(f).h == std::vector<BigInt>{1, 4, 1, 0});
    CHECK(is_pure(sub));

    // the vertex map lists base faces by cardinality
    auto [sub2, base] = barycentric_with_map(tri);
    CHECK(base.size() == 7);
    CHECK(face_cardinality(base.front()) == 1);
    CHECK(face_cardinality(base.back()) == 3);

    // subdividing an edge gives a path with 3 vertices
    SimplicialComplex edge = full_simplex(2);
    CHECK(f_vector(barycentric(edge)).counts == std::vector<BigInt>{1, 3, 2});
}

TEST_CASE("order complexes of the full simplex and its boundary") {
    DeltaComplex d3 = delta_n(3, false);
    CHECK(f_vector(d3.complex).counts == std::vector<BigInt>{1, 7, 12, 6});
    CHECK(h_vector(f_vector(d3.complex)).h == std::vector<BigInt>{1, 4, 1, 0});
    CHECK(d3.partition.blocks.size() == 6);
    CHECK(verify_partition(d3.complex, d3.partition).ok);

    DeltaComplex b3 = delta_n(3, true);
    CHECK(f_vector(b3.complex).counts == std::vector<BigInt>{1, 6, 6});
    CHECK(h_vector(f_vector(b3.complex)).h == std::vector<BigInt>{1, 4, 1});
    CHECK(verify_partition(b3.complex, b3.partition).ok);

    DeltaComplex d1 = delta_n(1, false);
    CHECK(f_vector(d1.complex).counts == std::vector<BigInt>{1, 1});

    CHECK_THROWS_AS(delta_n(8, false), enumeration_bound_error);
    CHECK_THROWS_AS(delta_n(1, true), std::invalid_argument);
}

TEST_CASE("the canonical partition blocks read as displayed") {
    DeltaComplex d3 = delta_n(3, false);
    std::set<std::pair<std::string, std::string>> blocks;
    for (auto [anchor, facet] : d3.partition.blocks)
        blocks.emplace(face_to_composition(d3, anchor),
                       face_to_composition(d3, facet));
    std::set<std::pair<std::string, std::string>> expected{
        {"123", "1|2|3|"},   {"13|2", "1|3|2|"}, {"2|13", "2|1|3|"},
        {"23|1", "2|3|1|"},  {"3|12", "3|1|2|"}, {"3|2|1", "3|2|1|"},
    };
    CHECK(blocks == expected);

    DeltaComplex b3 = delta_n(3, true);
    std::set<std::string> tops;
    for (auto [anchor, facet] : b3.partition.blocks)
        tops.insert(face_to_composition(b3, facet));
    CHECK(tops == std::set<std::string>{"1|2|3", "1|3|2", "2|1|3", "2|3|1",
                                        "3|1|2", "3|2|1"});
}

TEST_CASE("composition encoding round trips") {
    for (int n = 1; n <= 5; ++n) {
        DeltaComplex d = delta_n(n, false);
        for (Face f : d.complex.faces)
            CHECK(composition_to_face(d, face_to_composition(d, f)) == f);
    }
    DeltaComplex d3 = delta_n(3, false);
    CHECK_THROWS_AS(composition_to_face(d3, "12|12"), std::invalid_argument);
    CHECK_THROWS_AS(composition_to_face(d3, "12"), std::invalid_argument);
    CHECK_THROWS_AS(composition_to_face(d3, "||"), std::invalid_argument);
}

TEST_CASE("face counts of the subdivided simplex match the formulas") {
    for (int n = 1; n <= 5; ++n) {
        FVectorFormulaReport rep = verify_fvector_formulas(n);
        CHECK(rep.ok);
        if (!rep.ok) UNSCOPED_INFO(rep.issue);
    }
}

TEST_CASE("iota3 over the order complex reproduces the Eulerian row") {
    DeltaComplex d4 = delta_n(4, false);
    std::vector<BigInt> sums;
    for (int k = 0; k <= 4; ++k)
        sums.push_back(verify_die_simplicial(d4.complex, d4.partition, k).signed_sum);
    CHECK(sums == std::vector<BigInt>{1, 11, 11, 1, 0});

    DeltaComplex d3 = delta_n(3, false);
    CHECK(verify_die_simplicial(d3.complex, d3.partition, 1).signed_sum == 4);

    DeltaComplex b4 = delta_n(4, true);
    for (int k = 0; k <= 3; ++k)
        CHECK(verify_die_simplicial(b4.complex, b4.partition, k).signed_sum ==
              eulerian(4, k));
}

TEST_CASE("json and dot exports") {
    SimplicialComplex strip = strip_complex();
    SimplicialComplex back = complex_from_json(complex_to_json(strip));
    CHECK(back.facets == strip.facets);
    CHECK(back.vertex_labels == strip.vertex_labels);

    IntervalPartition p = strip_partition(strip);
    IntervalPartition pback = partition_from_json(strip, partition_to_json(strip, p));
    CHECK(pback.blocks == p.blocks);

    std::string dot = face_poset_dot(strip, &p);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("cluster_2") != std::string::npos);
    CHECK(dot.find("{a,b,c}") != std::string::npos);
}
