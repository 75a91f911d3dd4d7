#pragma once

#include <string>
#include <vector>

#include <dcolour/paths.hpp>

namespace dcolour {

struct PatternViolation {
    Vertex from, to;
    Colour expected, actual;
};

struct PatternReport {
    bool ok;
    std::vector<PatternViolation> violations;
};

struct CrStructure {
    std::vector<Vertex> exceptional;                // the finite set U, sorted
    std::vector<std::vector<Vertex>> classes;       // ordered; cover the rest
};

// Checks the extremal pattern against an ordered partition of the retained
// vertices: within a class both directions blue, lower to higher class blue,
// higher to lower red. Violations in lexicographic edge order.
PatternReport pattern_check(const PrefixView & view, const std::vector<std::vector<Vertex>> & classes,
    const std::vector<Vertex> & exclude = {});

// Recovers the extremal structure up to a finite exceptional set: red levels
// capped at r give candidate classes; a minimum vertex set covering all
// pattern violations (and all witnessed red paths of length r) is removed
// and the check repeated. Throws NotCrError when no such set of size at most
// max_exceptional exists.
CrStructure detect_cr_structure(const PrefixView & view, int r, int max_exceptional = 16);

struct Claim1Counterexample {
    Vertex vertex;
    int level;
    int red_indegree_in_level;
};

// Every vertex of level i has at most i red in-neighbours of level exactly i.
std::optional<Claim1Counterexample> claim1_check(const PrefixView & view, const LevelPartition & partition);

std::string structure_to_lines(const CrStructure & s);
std::string report_to_lines(const PatternReport & r);

// The view restricted to vertices outside `exclude`.
PrefixView subview(const PrefixView & view, const std::vector<Vertex> & exclude);

}
