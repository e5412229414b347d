#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "eulerlab/set_composition.hpp"

using namespace eulerlab;

TEST_CASE("set composition counts match ordered Stirling numbers") {
    for (int n = 1; n <= 6; ++n)
        for (int b = 1; b <= n; ++b)
            CHECK(count_set_compositions(n, b) == stirling2(n, b) * factorial(b));
    CHECK(count_set_compositions(3, 2) == 6);
    CHECK(count_set_compositions(5, 3) == 150);
}

TEST_CASE("descent composition") {
    SetComposition c = descent_composition({3, 5, 6, 1, 2, 4});
    CHECK(c.blocks == std::vector<std::vector<int>>{{3, 5, 6}, {1, 2, 4}});
    CHECK(c.anchor_after(0));
    CHECK(descent_composition({1, 2, 3}).blocks ==
          std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("decorated class sizes and signs match the closed form") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k < n; ++k)
            for (int i = 1; i <= k + 1; ++i) {
                auto cls = enumerate_decorated(n, k, i);
                CHECK(BigInt(cls.size()) ==
                      binomial(n - i, k + 1 - i) * stirling2(n, i) * factorial(i));
                int expected_sign = (k + 1 - i) % 2 == 0 ? 1 : -1;
                for (const auto& gamma : cls) {
                    CHECK(gamma.sign() == expected_sign);
                    CHECK(gamma.valid());
                }
            }
}

TEST_CASE("the worked decorated composition") {
    auto gamma = decorated_from_text("3~ | 5 6~ a| 1~ 2~ | 4~ | 7~ 8 9~");
    CHECK(gamma.composition.blocks.size() == 5);
    CHECK(gamma.highlighted.size() == 7);
    CHECK(gamma.remarkable() == std::set<int>{1, 7});
    CHECK(gamma.sign() == 1);
    CHECK(to_text(gamma) == "3~ | 5 6~ a| 1~ 2~ | 4~ | 7~ 8 9~");
}

TEST_CASE("iota2 reproduces the displayed toggle pairs") {
    auto a1 = decorated_from_text("3 5~ 6~ a| 1~ 2 4~ | 7 8~ | 9~");
    auto b1 = decorated_from_text("3 5~ | 6~ a| 1~ 2 4~ | 7 8~ | 9~");
    CHECK(toggle_element(a1) == 5);
    CHECK(toggle_element(b1) == 5);
    CHECK(iota2(a1) == b1);
    CHECK(iota2(b1) == a1);

    auto a2 = decorated_from_text("3 5 6~ a| 1~ | 2~ 4~ 7~ | 8 9~");
    auto b2 = decorated_from_text("3 5 6~ a| 1~ 2~ 4~ 7~ | 8 9~");
    CHECK(toggle_element(a2) == 1);
    CHECK(iota2(a2) == b2);
    CHECK(iota2(b2) == a2);

    auto a3 = decorated_from_text("5 9~ a| 3~ a| 2 4~ a| 1~ 8~ a| 6 7~");
    auto b3 = decorated_from_text("5 9~ a| 3~ a| 2 4~ a| 1~ | 8~ a| 6 7~");
    CHECK(toggle_element(a3) == 1);
    CHECK(iota2(a3) == b3);
    CHECK(iota2(b3) == a3);
}

TEST_CASE("iota2 fixed points are descent compositions without remarkables") {
    // two descents, every block max highlighted, nothing else
    auto fixed = decorated_from_text("3~ a| 2~ a| 1~");
    CHECK(!toggle_element(fixed).has_value());
    CHECK(iota2(fixed) == fixed);
    CHECK(fixed.composition ==
          descent_composition(fixed.composition.reading_word()));

    // same composition with a remarkable element is moved
    auto moved = decorated_from_text("1~ 3~ a| 2~");
    CHECK(toggle_element(moved) == 1);
    CHECK(iota2(moved) != moved);
}

TEST_CASE("iota2 involution laws across the full desk-scale range") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k < n; ++k) {
            Die2Report rep = verify_die_eq2(n, k);
            CHECK(rep.fixed_points == eulerian(n, k));
            CHECK(rep.signed_sum == eulerian(n, k));
            CHECK(rep.paired % 2 == 0);
        }
}

TEST_CASE("iota2 report for the worked example") {
    Die2Report rep = verify_die_eq2(5, 2);
    CHECK(rep.signed_sum == 66);
    CHECK(rep.class_counts.at(1) == 6);
    CHECK(rep.class_counts.at(2) == 90);
    CHECK(rep.class_counts.at(3) == 150);
    CHECK(verify_die_eq2(3, 0).signed_sum == 1);
    CHECK(verify_die_eq2(4, 2).signed_sum == 11);
    CHECK(die2_csv_row(rep) == "5,2,66,66,180");
}

TEST_CASE("codecs round trip and reject malformed input") {
    for (const auto& gamma : enumerate_decorated(4, 2)) {
        CHECK(decorated_from_text(to_text(gamma)) == gamma);
        CHECK(decorated_from_json(to_json(gamma)) == gamma);
    }
    // anchor mark contradicting the block contents
    CHECK_THROWS_AS(decorated_from_text("1~ a| 2~"), std::invalid_argument);
    CHECK_THROWS_AS(decorated_from_text("2~ | 1~"), std::invalid_argument);
    // block maximum not highlighted
    CHECK_THROWS_AS(decorated_from_text("1 2 | 3~"), std::invalid_argument);
    CHECK_THROWS_AS(decorated_from_text("| 1~"), std::invalid_argument);
    CHECK_THROWS_AS(decorated_from_text("1~ 1~"), std::invalid_argument);
}

TEST_CASE("decorated enumeration is deterministic and duplicate-free") {
    auto all = enumerate_decorated(4, 2);
    std::set<std::pair<std::vector<std::vector<int>>, std::set<int>>> seen;
    for (const auto& g : all)
        CHECK(seen.emplace(g.composition.blocks, g.highlighted).second);
    CHECK(enumerate_decorated(4, 2).size() == all.size());
}
