#pragma once

#include <cstdint>
#include <vector>

#include <dcolour/rule.hpp>

namespace dcolour {

// A finite truncation of the coloured complete symmetric digraph: every
// ordered pair of distinct vertices carries exactly one colour. Immutable
// after construction.
class PrefixView {
public:
    PrefixView(std::vector<Vertex> vertices, int colour_count, std::vector<std::uint8_t> colours);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex> & vertices() const { return vertices_; }
    int colour_count() const { return colour_count_; }

    // Index-based accessors; indices follow the sorted vertex order.
    Vertex vertex(int i) const { return vertices_[i]; }
    int index_of(Vertex v) const;             // -1 when absent
    bool contains(Vertex v) const { return index_of(v) >= 0; }

    Colour colour_at(int i, int j) const { return colours_[i * size() + j]; }
    Colour colour_of(Vertex m, Vertex n) const;

    const std::vector<int> & out_neighbours(Colour c, int i) const;
    const std::vector<int> & in_neighbours(Colour c, int i) const;

private:
    std::vector<Vertex> vertices_;
    int colour_count_;
    std::vector<std::uint8_t> colours_;
    // [colour-1][index] -> sorted index list
    std::vector<std::vector<std::vector<int>>> out_, in_;
};

PrefixView materialize(const ColouringRule & rule, std::vector<Vertex> vertices);
PrefixView materialize_prefix(const ColouringRule & rule, Vertex n);

}
