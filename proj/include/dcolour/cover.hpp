#pragma once

#include <string>
#include <vector>

#include <dcolour/paths.hpp>

namespace dcolour {

struct PathCover {
    std::vector<DirectedPath> paths;    // pairwise vertex-disjoint, ordered by start vertex
    std::vector<Vertex> ground_set;

    std::size_t size() const { return paths.size(); }
};

// Minimum-cardinality cover by vertex-disjoint monochromatic directed paths.
// Canonical among minima: lexicographically least sorted start-vertex
// sequence, then least path sequences. Subset DP counts; a pruned
// enumeration recovers the canonical cover.
PathCover min_path_cover_exact(const PrefixView & view, Colour colour, const SearchBudget & budget = {});

// Optimum cardinality only (no canonical reconstruction); same DP.
int min_path_cover_size(const PrefixView & view, Colour colour);

// A (not necessarily optimal) deterministic optimum-size cover from the DP,
// cheap even when the canonical enumeration would be large.
PathCover min_path_cover_any(const PrefixView & view, Colour colour);

// Deterministic upper bound: extend from the least uncovered vertex, always
// taking the least uncovered out-neighbour.
PathCover greedy_path_cover(const PrefixView & view, Colour colour);

struct ConjectureTrial {
    int index;
    std::uint64_t seed;
    int cover;
    int rejected;
};

struct ConjectureReport {
    int r;
    Vertex n;
    std::uint64_t seed;
    std::vector<ConjectureTrial> trials;
    int control_cover;          // min blue cover of the extremal colouring, or 1 for r=1
    int max_cover;
    int exceeding_r;
    std::string caveat;

    std::string to_lines() const;
};

// Seeded random 2-colourings on [1..n] conditioned (by rejection) on having
// no red path of length r; reports the min blue cover distribution. Finite
// truncations can need fewer or more paths than the infinite statement, so
// the report is a signal, never evidence.
ConjectureReport conjecture_harness(int r, Vertex n, int trials, std::uint64_t seed,
    const SearchBudget & budget = {});

std::string cover_to_lines(const PathCover & cover);

}
