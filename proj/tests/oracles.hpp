#pragma once

// Independent brute-force oracles for cross-checking the exact searches.
// These deliberately avoid the library's DP and level machinery.

#include <dcolour/cover.hpp>
#include <dcolour/paths.hpp>

namespace dcolour::oracle {

// Longest monochromatic path by enumerating every simple path; among
// maxima, the lexicographically least vertex sequence.
DirectedPath brute_longest_path(const PrefixView & view, Colour colour);

// Longest path length starting at a fixed vertex, full enumeration.
int brute_longest_from(const PrefixView & view, Colour colour, Vertex v);

// Minimum number of vertex-disjoint monochromatic paths partitioning the
// view, by enumerating every partition into paths.
int brute_min_cover_size(const PrefixView & view, Colour colour);

}
