#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <dcolour/view.hpp>

namespace dcolour {

// Monochromatic directed path. A single vertex is a valid path of length 0;
// length counts edges.
struct DirectedPath {
    std::vector<Vertex> vertices;
    Colour colour;

    long length() const { return static_cast<long>(vertices.size()) - 1; }
};

enum class Orientation { forward, backward };

struct OrientedPath {
    std::vector<Vertex> vertices;
    std::vector<Orientation> orientations;
};

// level(v) = exact length of the longest `colour` directed path starting at
// v inside the ground set.
struct LevelPartition {
    std::vector<Vertex> ground_set;
    std::vector<int> levels;    // aligned with ground_set
    Colour colour;

    int level_of(Vertex v) const;
    std::vector<std::vector<Vertex>> level_sets() const;
    int max_level() const;
};

struct SearchBudget {
    int max_exact_vertices = 20;
    std::optional<int> depth_cap;
    std::optional<long> time_cap_ms;
};

struct PathViolation {
    Vertex from, to;
    std::string reason;
};

// ok iff all vertices lie in the view, none repeat, and every consecutive
// edge has the path's colour. Reports the first offending edge.
std::optional<PathViolation> validate_path(const PrefixView & view, const DirectedPath & path);

// Maximum-length monochromatic directed path; among maxima, the
// lexicographically least vertex sequence. Subset DP when the view fits the
// vertex budget, else depth-limited exhaustive DFS when depth_cap is set
// (sound only when the true length is below the cap; throws BudgetError when
// the cap is reached).
DirectedPath longest_mono_path_exact(const PrefixView & view, Colour colour, const SearchBudget & budget = {});

// Exact longest `colour` path length starting at v; CapHitError when a path
// of depth_cap edges exists (the true value is >= depth_cap, uncertified).
int longest_from(const PrefixView & view, Colour colour, Vertex v, int depth_cap);

LevelPartition level_partition(const PrefixView & view, Colour colour, int depth_cap);

// Per-vertex levels clamped at cap; a vertex whose true level reaches the
// cap carries a witness path of exactly cap edges.
struct CappedLevels {
    std::vector<int> levels;                        // aligned with view indices
    std::vector<std::vector<Vertex>> witnesses;     // empty unless the cap was hit
    bool any_cap_hit = false;
};

CappedLevels capped_levels(const PrefixView & view, Colour colour, int cap);

// Levels for every vertex at once by subset DP; exact with no cap, usable
// for views of up to ~20 vertices.
LevelPartition exact_levels(const PrefixView & view, Colour colour);

struct GreedyPathResult {
    DirectedPath path;
    std::vector<Vertex> skipped;
};

// The greedy builder: start at the least target; for the least unvisited
// target either take the direct edge or detour through the least unvisited
// intermediate with both hops in `colour`; targets with neither option are
// skipped and reported.
GreedyPathResult greedy_mono_path(const PrefixView & view, Colour colour, const std::vector<Vertex> & target_set);

using Matching = std::vector<std::pair<Vertex, Vertex>>;  // edges from Q-vertices to P-vertices

// Merges two vertex-disjoint paths of one colour into a single path through a
// matching of bridge edges, consuming matching edges in increasing (k, j)
// order. Throws Error(Status::negative) carrying the partial path when the
// matching runs out early, and Error(Status::usage) when a required bridge
// edge has the wrong colour.
DirectedPath splice_via_matching(const PrefixView & view, const DirectedPath & p, const DirectedPath & q,
    const Matching & matching);

struct SpliceIncompleteError : Error {
    SpliceIncompleteError(const std::string & message, DirectedPath partial) :
        Error(Status::negative, message),
        partial(std::move(partial))
    {
    }

    DirectedPath partial;
};

// The k low-order bits of v with significance reversed.
std::uint64_t bitrev_key(Vertex v, int k);

// Vertices of the path whose in- or out-degree within the path is 0.
int count_switches(const OrientedPath & path);

// Seeded random monochromatic walk within [1..horizon]; stops early when no
// unvisited out-neighbour of the colour remains. Deterministic per seed.
DirectedPath mono_walk_sample(const ColouringRule & rule, Colour colour, Vertex start, int steps,
    Vertex horizon, std::uint64_t seed);

std::string path_to_line(const DirectedPath & path);
DirectedPath path_from_line(const std::string & line);
std::string partition_to_lines(const LevelPartition & partition);

}
