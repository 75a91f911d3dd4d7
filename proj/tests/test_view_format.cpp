#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include <dcolour/format.hpp>
#include <dcolour/view.hpp>

using namespace dcolour;

TEST_CASE("extremal(2) prefix of four: exact red edge set") {
    auto view = materialize_prefix(ColouringRule::extremal(2), 4);
    std::set<std::pair<Vertex, Vertex>> red;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && view.colour_at(i, j) == colour_red)
                red.insert({view.vertex(i), view.vertex(j)});
    const std::set<std::pair<Vertex, Vertex>> expected{{1, 2}, {1, 4}, {3, 2}, {3, 4}};
    CHECK(red == expected);
}

TEST_CASE("single vertex view has no edges") {
    auto view = materialize(ColouringRule::density_zero(), {7});
    CHECK(view.size() == 1);
    CHECK(view.out_neighbours(colour_red, 0).empty());
    CHECK(view.out_neighbours(colour_blue, 0).empty());
}

TEST_CASE("density-zero prefix of eight: red out-degree sum") {
    auto view = materialize_prefix(ColouringRule::density_zero(), 8);
    std::size_t total = 0;
    for (int i = 0; i < 8; ++i)
        total += view.out_neighbours(colour_red, i).size();
    CHECK(total == 28);
}

TEST_CASE("adjacency lists partition the edges and transpose each other") {
    for (const auto & rule : {ColouringRule::density_zero(), ColouringRule::extremal(3),
             ColouringRule::seeded_random(2, 5)}) {
        auto view = materialize_prefix(rule, 12);
        const int n = static_cast<int>(view.size());
        for (int i = 0; i < n; ++i) {
            std::size_t out_total = 0;
            for (Colour c = 1; c <= view.colour_count(); ++c) {
                const auto & out = view.out_neighbours(c, i);
                out_total += out.size();
                CHECK(std::is_sorted(out.begin(), out.end()));
                for (int j : out) {
                    CHECK(view.colour_at(i, j) == c);
                    const auto & in = view.in_neighbours(c, j);
                    CHECK(std::binary_search(in.begin(), in.end(), i));
                }
            }
            CHECK(out_total == static_cast<std::size_t>(n - 1));
        }
    }
}

TEST_CASE("materialization is deterministic") {
    auto a = materialize_prefix(ColouringRule::seeded_random(3, 99), 10);
    auto b = materialize_prefix(ColouringRule::seeded_random(3, 99), 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            if (i != j)
                CHECK(a.colour_at(i, j) == b.colour_at(i, j));
}

TEST_CASE("materialize sorts, deduplicates and rejects bad vertices") {
    auto view = materialize(ColouringRule::density_zero(), {5, 3, 3});
    CHECK(view.vertices() == std::vector<Vertex>{3, 5});
    CHECK_THROWS_AS(materialize(ColouringRule::density_zero(), {0, 1}), Error);
    // The view constructor itself insists on sorted distinct vertices.
    CHECK_THROWS_AS(PrefixView({3, 3}, 2, std::vector<std::uint8_t>(4, 2)), Error);
}

TEST_CASE("serialize / parse round trip") {
    auto view = materialize_prefix(ColouringRule::extremal(3), 9);
    const std::string text = serialize_view(view);
    auto parsed = parse_view_string(text);
    CHECK(parsed.n == 9);
    auto back = materialize_prefix(parsed.rule, parsed.n);
    CHECK(back.colour_count() == view.colour_count());
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (i != j)
                CHECK(back.colour_at(i, j) == view.colour_at(i, j));
    CHECK(serialize_view(back) == text);
}

TEST_CASE("comments are ignored") {
    auto view = materialize_prefix(ColouringRule::extremal(2), 3);
    std::istringstream in("# banner\n" + serialize_view(view));
    auto parsed = parse_view(in);
    CHECK(parsed.n == 3);
}

TEST_CASE("parse errors name the offending line") {
    // A loop entry.
    CHECK_THROWS_WITH_AS(parse_view_string("dcolour v1 n=2 colours=2\n2 2 1\n2 1 1\n"),
        doctest::Contains("line 2"), ParseError);
    // The pair (1,2) missing entirely.
    try {
        parse_view_string("dcolour v1 n=2 colours=2\n2 1 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError & e) {
        CHECK(std::string(e.what()).find("incomplete table") != std::string::npos);
    }
    // Bad header.
    CHECK_THROWS_AS(parse_view_string("dcolour v2 n=2 colours=2\n"), ParseError);
    // Duplicate pair.
    CHECK_THROWS_AS(
        parse_view_string("dcolour v1 n=2 colours=2\n1 2 1\n1 2 2\n2 1 1\n"), ParseError);
    // Colour out of range.
    CHECK_THROWS_AS(
        parse_view_string("dcolour v1 n=2 colours=2\n1 2 3\n2 1 1\n"), ParseError);
}

TEST_CASE("only full prefixes are serializable") {
    auto view = materialize(ColouringRule::extremal(2), {2, 3, 5});
    CHECK_THROWS_AS(serialize_view(view), Error);
}

TEST_CASE("file round trip") {
    auto view = materialize_prefix(ColouringRule::density_zero(), 6);
    const std::string path = "/tmp/dcolour_test_view.txt";
    save_view_file(view, path);
    auto loaded = load_view_file(path);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j)
                CHECK(loaded.colour_at(i, j) == view.colour_at(i, j));
    CHECK_THROWS_AS(load_view_file("/tmp/dcolour_no_such_file.txt"), Error);
}
