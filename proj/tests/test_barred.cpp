#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "eulerlab/barred.hpp"

using namespace eulerlab;

TEST_CASE("plain barred permutation counts") {
    CHECK(count_barred(3, 1) == 8);
    CHECK(count_barred(2, 2) == 9);
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 4; ++k)
            CHECK(count_barred(n, k) == big_pow(k + 1, static_cast<unsigned>(n)));
    CHECK_THROWS_AS(count_barred(11, 1), enumeration_bound_error);
}

TEST_CASE("box placements reproduce the worked barred permutation") {
    // balls 1..9 into boxes 0..7
    BarredPermutation b = barred_from_boxes({5, 5, 2, 6, 3, 3, 7, 7, 7}, 7);
    CHECK(b.pi == Permutation{3, 5, 6, 1, 2, 4, 7, 8, 9});
    CHECK(to_text(b) == "||3|56||12|4|789");
    CHECK(b.total_bars() == 7);
}

TEST_CASE("anchored class sizes match the closed form") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 4; ++k) {
            BigInt total = 0;
            for (int i = 0; i <= k; ++i) {
                BigInt got(enumerate_anchored(n, k, i).size());
                CHECK(got == binomial(n + 1, i) *
                                 big_pow(k + 1 - i, static_cast<unsigned>(n)));
                total += got;
            }
            CHECK(total == BigInt(enumerate_anchored(n, k).size()));
        }
    CHECK(enumerate_anchored(3, 1, 1).size() == 4);
    CHECK(enumerate_anchored(4, 0, 0).size() == 1);  // only 1234, no bars
}

TEST_CASE("text codec round trips and matches the display convention") {
    auto beta = anchored_from_text("f||3|56|a|12f|4|789");
    CHECK(beta.pi == Permutation{3, 5, 6, 1, 2, 4, 7, 8, 9});
    CHECK(beta.float_count() == 2);
    CHECK(beta.total_bars() == 7);
    CHECK(beta.sign() == 1);
    CHECK(to_text(beta) == "f||3|56|a|12f|4|789");

    // anchors must sit exactly at descents
    CHECK_THROWS_AS(anchored_from_text("1a|23"), std::invalid_argument);
    CHECK_THROWS_AS(anchored_from_text("32|1"), std::invalid_argument);

    for (const auto& b : enumerate_anchored(4, 3)) {
        CHECK(anchored_from_text(to_text(b)) == b);
        CHECK(anchored_from_json(to_json(b)) == b);
    }
}

TEST_CASE("iota1 reproduces the displayed toggle pairs") {
    auto a1 = anchored_from_text("f||3|56|a|12f|4|789");
    auto b1 = anchored_from_text("||3|56|a|12f|4|789");
    CHECK(iota1(a1) == b1);
    CHECK(iota1(b1) == a1);

    auto a2 = anchored_from_text("3||56a|1f|24f|789||");
    auto b2 = anchored_from_text("3f||56a|1f|24f|789||");
    CHECK(iota1(a2) == b2);
    CHECK(iota1(b2) == a2);

    auto a3 = anchored_from_text("79a|3a|24|a|18|a|6a|5");
    auto b3 = anchored_from_text("79a|3a|24f|a|18|a|6a|5");
    CHECK(iota1(a3) == b3);
    CHECK(iota1(b3) == a3);
}

TEST_CASE("iota1 fixes exactly the all-anchor elements") {
    // the unique element of B_{3,2} over 321: two anchors, nothing else
    auto fixed = anchored_from_text("3a|2a|1");
    CHECK(iota1(fixed) == fixed);
    CHECK(fixed.total_bars() == 2);
}

TEST_CASE("iota1 involution laws across the full desk-scale range") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 4; ++k) {
            Die1Report rep = verify_die_eq1(n, k);
            CHECK(rep.fixed_points == eulerian(n, k));
            CHECK(rep.signed_sum == eulerian(n, k));
            CHECK(rep.paired % 2 == 0);
        }
}

TEST_CASE("die report for the worked example") {
    Die1Report rep = verify_die_eq1(5, 2);
    CHECK(rep.signed_sum == 66);
    CHECK(rep.class_counts.at(0) == 243);
    CHECK(rep.class_counts.at(1) == 192);
    CHECK(rep.class_counts.at(2) == 15);
    CHECK(verify_die_eq1(3, 1).fixed_points == 4);
    CHECK(verify_die_eq1(4, 3).fixed_points == 1);
}

TEST_CASE("per-permutation refinement") {
    CHECK(restrict_to_permutation(3, 1, {1, 3, 2}).signed_sum == 1);
    Die1Report empty = restrict_to_permutation(3, 1, {3, 2, 1});
    CHECK(empty.signed_sum == 0);
    CHECK(empty.class_counts.empty());
    CHECK(restrict_to_permutation(3, 2, {1, 2, 3}).signed_sum == 0);

    // the per-permutation sets partition the whole set
    for (int k = 0; k <= 3; ++k) {
        BigInt total = 0;
        for_each_permutation(4, [&](const Permutation& pi) {
            BigInt c = 0;
            for_each_anchored_over(pi, k, [&](const AnchoredBarredPermutation&) { ++c; });
            total += c;
        });
        CHECK(total == BigInt(enumerate_anchored(4, k).size()));
    }
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
    auto all = enumerate_anchored(4, 2);
    std::set<AnchoredBarredPermutation> unique_set(all.begin(), all.end());
    CHECK(unique_set.size() == all.size());
    CHECK(all == enumerate_anchored(4, 2));
}
