#include <doctest.h>

#include "oracles.hpp"

#include <algorithm>
#include <dcolour/cover.hpp>
#include <dcolour/format.hpp>

using namespace dcolour;

namespace {

void check_cover_shape(const PrefixView & view, const PathCover & cover, Colour colour) {
    std::vector<Vertex> covered;
    for (auto & path : cover.paths) {
        CHECK(path.colour == colour);
        CHECK_FALSE(validate_path(view, path).has_value());
        covered.insert(covered.end(), path.vertices.begin(), path.vertices.end());
    }
    std::sort(covered.begin(), covered.end());
    CHECK(covered == view.vertices());
    CHECK(cover.ground_set == view.vertices());
    // Ordered by start vertex.
    for (std::size_t i = 0; i + 1 < cover.paths.size(); ++i)
        CHECK(cover.paths[i].vertices.front() < cover.paths[i + 1].vertices.front());
}

}

TEST_CASE("extremal(3) blue cover is a single path") {
    auto view = materialize_prefix(ColouringRule::extremal(3), 9);
    auto cover = min_path_cover_exact(view, colour_blue);
    REQUIRE(cover.size() == 1);
    check_cover_shape(view, cover, colour_blue);
    CHECK(cover.paths[0].vertices.front() == 3);
    CHECK(min_path_cover_size(view, colour_blue) == 1);
}

TEST_CASE("no edges of the colour: all singletons") {
    std::vector<std::uint8_t> table(25, colour_blue);
    auto view = materialize_prefix(ColouringRule::explicit_table(5, 2, std::move(table)), 5);
    auto cover = min_path_cover_exact(view, colour_red);
    REQUIRE(cover.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(cover.paths[i].vertices == std::vector<Vertex>{i + 1});
}

TEST_CASE("severed cross-class blue edges force three paths") {
    // Recolour every between-class blue edge of extremal(3) red; the blue
    // graph splits into the three residue classes.
    auto base = materialize_prefix(ColouringRule::extremal(3), 9);
    const Vertex n = 9;
    std::vector<std::uint8_t> table(n * n, 0);
    for (Vertex m = 1; m <= n; ++m)
        for (Vertex v = 1; v <= n; ++v) {
            if (m == v)
                continue;
            Colour c = base.colour_of(m, v);
            if (c == colour_blue && residue_class(m, 3) != residue_class(v, 3))
                c = colour_red;
            table[(m - 1) * n + (v - 1)] = static_cast<std::uint8_t>(c);
        }
    auto view = materialize_prefix(ColouringRule::explicit_table(n, 2, std::move(table)), n);
    auto cover = min_path_cover_exact(view, colour_blue);
    REQUIRE(cover.size() == 3);
    check_cover_shape(view, cover, colour_blue);
    // Canonical: least start sequence is 1, 2, 3.
    CHECK(cover.paths[0].vertices.front() == 1);
    CHECK(cover.paths[1].vertices.front() == 2);
    CHECK(cover.paths[2].vertices.front() == 3);
}

TEST_CASE("exact, any and greedy covers relate correctly") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto view = materialize_prefix(ColouringRule::seeded_random(2, 500 + seed), 8);
        for (Colour c : {colour_red, colour_blue}) {
            const int brute = oracle::brute_min_cover_size(view, c);
            auto exact = min_path_cover_exact(view, c);
            auto any = min_path_cover_any(view, c);
            auto greedy = greedy_path_cover(view, c);
            CHECK(static_cast<int>(exact.size()) == brute);
            CHECK(static_cast<int>(any.size()) == brute);
            CHECK(min_path_cover_size(view, c) == brute);
            CHECK(greedy.size() >= exact.size());
            check_cover_shape(view, exact, c);
            check_cover_shape(view, any, c);
            check_cover_shape(view, greedy, c);
        }
    }
}

TEST_CASE("exact cover is canonical among optima") {
    // All-blue on 4 vertices: the canonical Hamiltonian path is 1 2 3 4.
    std::vector<std::uint8_t> table(16, colour_blue);
    auto view = materialize_prefix(ColouringRule::explicit_table(4, 2, std::move(table)), 4);
    auto cover = min_path_cover_exact(view, colour_blue);
    REQUIRE(cover.size() == 1);
    CHECK(cover.paths[0].vertices == std::vector<Vertex>{1, 2, 3, 4});
}

TEST_CASE("greedy cover on extremal(2)") {
    auto view = materialize_prefix(ColouringRule::extremal(2), 10);
    auto cover = greedy_path_cover(view, colour_blue);
    check_cover_shape(view, cover, colour_blue);
    CHECK(cover.size() <= 2);
}

TEST_CASE("cover text form") {
    auto view = materialize_prefix(ColouringRule::extremal(3), 9);
    auto cover = min_path_cover_exact(view, colour_blue);
    const std::string lines = cover_to_lines(cover);
    CHECK(lines.find("path colour=2") != std::string::npos);
}

TEST_CASE("cover size limit") {
    auto view = materialize_prefix(ColouringRule::extremal(2), 24);
    CHECK_THROWS_AS(min_path_cover_size(view, colour_blue), Error);
}

TEST_CASE("conjecture harness r=1 forces single-path covers") {
    SearchBudget budget{.max_exact_vertices = 12};
    auto report = conjecture_harness(1, 8, 6, 42, budget);
    CHECK(report.control_cover == 1);
    CHECK(report.max_cover == 1);
    CHECK(report.exceeding_r == 0);
    REQUIRE(report.trials.size() == 6);
    for (auto & trial : report.trials) {
        CHECK(trial.cover == 1);
        CHECK(trial.rejected == 0);
    }
}

TEST_CASE("conjecture harness r=2 reproduces its trials from the seeds") {
    SearchBudget budget{.max_exact_vertices = 12};
    auto report = conjecture_harness(2, 10, 8, 7, budget);
    REQUIRE(report.trials.size() == 8);
    CHECK(report.r == 2);
    CHECK(report.n == 10);
    auto extremal = materialize_prefix(ColouringRule::extremal(2), 10);
    CHECK(report.control_cover == min_path_cover_size(extremal, colour_blue));
    int max_cover = 0;
    for (auto & trial : report.trials) {
        // The accepted colouring is recoverable from the reported seed.
        auto view = materialize_prefix(ColouringRule::seeded_random(2, trial.seed,
            {1.0 / 20, 19.0 / 20}), 10);
        CHECK_FALSE(capped_levels(view, colour_red, 2).any_cap_hit);
        auto cover = min_path_cover_any(view, colour_blue);
        CHECK(static_cast<int>(cover.size()) == trial.cover);
        check_cover_shape(view, cover, colour_blue);
        max_cover = std::max(max_cover, trial.cover);
    }
    CHECK(report.max_cover == max_cover);
    CHECK_FALSE(report.caveat.empty());
    // Deterministic end to end.
    CHECK(conjecture_harness(2, 10, 8, 7, budget).to_lines() == report.to_lines());
}

TEST_CASE("conjecture report text form") {
    SearchBudget budget{.max_exact_vertices = 12};
    auto report = conjecture_harness(2, 8, 2, 3, budget);
    const std::string lines = report.to_lines();
    CHECK(lines.find("conjecture r=2 n=8 trials=2 seed=3") != std::string::npos);
    CHECK(lines.find("trial 0 seed ") != std::string::npos);
    CHECK(lines.find("control extremal cover ") != std::string::npos);
    CHECK(lines.find("max_cover ") != std::string::npos);
}
