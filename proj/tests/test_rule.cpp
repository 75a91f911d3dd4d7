#include <doctest.h>

#include <bit>
#include <dcolour/rule.hpp>

using namespace dcolour;

TEST_CASE("density-zero frozen examples") {
    auto rule = ColouringRule::density_zero();
    CHECK(rule.colour_of(1, 2) == colour_blue);
    CHECK(rule.colour_of(2, 1) == colour_red);
    CHECK(rule.colour_of(1, 3) == colour_red);
    CHECK(rule.colour_of(3, 1) == colour_blue);
    CHECK(rule.colour_count() == 2);
}

TEST_CASE("density-zero pair split and source law") {
    auto rule = ColouringRule::density_zero();
    for (Vertex m = 1; m <= 200; ++m) {
        for (Vertex n = m + 1; n <= 200; ++n) {
            const Colour mn = rule.colour_of(m, n);
            const Colour nm = rule.colour_of(n, m);
            CHECK(mn + nm == colour_red + colour_blue);
            // The red source is the endpoint with bit t-1 clear.
            const int t = std::countr_zero(m ^ n) + 1;
            const Vertex source = ((m >> (t - 1)) & 1) == 0 ? m : n;
            CHECK(rule.colour_of(source, source == m ? n : m) == colour_red);
        }
    }
}

TEST_CASE("extremal frozen examples") {
    auto rule = ColouringRule::extremal(3);
    CHECK(rule.colour_of(1, 4) == colour_blue);
    CHECK(rule.colour_of(4, 1) == colour_blue);
    CHECK(rule.colour_of(1, 3) == colour_red);
    CHECK(rule.colour_of(3, 1) == colour_blue);
    CHECK_THROWS_AS(ColouringRule::extremal(1), Error);
    CHECK_THROWS_AS(ColouringRule::extremal(0), Error);
}

TEST_CASE("extremal class laws") {
    for (int r = 2; r <= 5; ++r) {
        auto rule = ColouringRule::extremal(r);
        for (Vertex m = 1; m <= 60; ++m) {
            for (Vertex n = 1; n <= 60; ++n) {
                if (m == n)
                    continue;
                const int cm = residue_class(m, r), cn = residue_class(n, r);
                const Colour expected = cm <= cn ? colour_blue : colour_red;
                CHECK(rule.colour_of(m, n) == expected);
            }
        }
    }
}

TEST_CASE("residue classes and tuples") {
    CHECK(residue_class(7, 3) == 1);
    CHECK(residue_class(9, 3) == 0);
    CHECK_THROWS_AS(residue_class(1, 0), Error);
    CHECK(class_tuple(6, {2, 3}) == std::vector<int>{0, 0});
    CHECK(class_tuple(5, {2, 3}) == std::vector<int>{1, 2});
}

TEST_CASE("product frozen examples") {
    auto rule = ColouringRule::product_extremal({2, 3});
    CHECK(rule.colour_count() == 3);
    CHECK(rule.colour_of(5, 6) == 1);
    CHECK(rule.colour_of(6, 5) == 3);
    // Equal tuples get the unrestricted colour both ways.
    CHECK(rule.colour_of(6, 12) == 3);
    CHECK(rule.colour_of(12, 6) == 3);
}

TEST_CASE("one-modulus product agrees with extremal") {
    for (int r = 2; r <= 5; ++r) {
        auto product = ColouringRule::product_extremal({r});
        auto extremal = ColouringRule::extremal(r);
        CHECK(product.colour_count() == 2);
        for (Vertex m = 1; m <= 60; ++m)
            for (Vertex n = 1; n <= 60; ++n)
                if (m != n)
                    CHECK(product.colour_of(m, n) == extremal.colour_of(m, n));
    }
}

TEST_CASE("product anti-symmetry on distinct tuples") {
    auto rule = ColouringRule::product_extremal({2, 3});
    for (Vertex m = 1; m <= 36; ++m) {
        for (Vertex n = m + 1; n <= 36; ++n) {
            if (class_tuple(m, {2, 3}) == class_tuple(n, {2, 3}))
                continue;
            // Exactly one direction carries the unrestricted colour 3.
            const bool mn3 = rule.colour_of(m, n) == 3;
            const bool nm3 = rule.colour_of(n, m) == 3;
            CHECK(mn3 != nm3);
        }
    }
}

TEST_CASE("colouring a loop is an error") {
    CHECK_THROWS_AS(ColouringRule::density_zero().colour_of(4, 4), InvalidPairError);
    CHECK_THROWS_AS(ColouringRule::extremal(2).colour_of(1, 1), InvalidPairError);
}

TEST_CASE("explicit rule domain") {
    // 3 vertices, all blue.
    std::vector<std::uint8_t> table(9, colour_blue);
    auto rule = ColouringRule::explicit_table(3, 2, table);
    CHECK(rule.colour_of(1, 3) == colour_blue);
    CHECK_THROWS_AS(rule.colour_of(1, 4), OutOfDomainError);
}

TEST_CASE("perturbed rule overrides") {
    auto rule = ColouringRule::perturbed(ColouringRule::extremal(3), {{{1, 4}, colour_red}});
    CHECK(rule.colour_of(1, 4) == colour_red);
    CHECK(rule.colour_of(4, 1) == colour_blue);
    CHECK(rule.colour_of(1, 3) == colour_red);
}

TEST_CASE("seeded random determinism") {
    auto a = ColouringRule::seeded_random(2, 11);
    auto b = ColouringRule::seeded_random(2, 11);
    auto c = ColouringRule::seeded_random(2, 12);
    bool all_same = true;
    for (Vertex m = 1; m <= 20; ++m) {
        for (Vertex n = 1; n <= 20; ++n) {
            if (m == n)
                continue;
            CHECK(a.colour_of(m, n) == b.colour_of(m, n));
            all_same = all_same && a.colour_of(m, n) == c.colour_of(m, n);
        }
    }
    CHECK_FALSE(all_same);
}

TEST_CASE("rule spec parsing") {
    CHECK(parse_rule_spec("density-zero").colour_of(2, 1) == colour_red);
    CHECK(parse_rule_spec("extremal:3").colour_of(1, 3) == colour_red);
    CHECK(parse_rule_spec("product:2,3").colour_of(5, 6) == 1);
    CHECK(parse_rule_spec("random:2:7").colour_count() == 2);
    CHECK_THROWS_AS(parse_rule_spec("extremal"), Error);
    CHECK_THROWS_AS(parse_rule_spec("extremal:x"), Error);
    CHECK_THROWS_AS(parse_rule_spec("nope"), Error);
}
