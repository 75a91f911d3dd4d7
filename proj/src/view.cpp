#include <dcolour/view.hpp>

#include <algorithm>
#include <numeric>

namespace dcolour {

PrefixView::PrefixView(std::vector<Vertex> vertices, int colour_count, std::vector<std::uint8_t> colours) :
    vertices_(std::move(vertices)),
    colour_count_(colour_count),
    colours_(std::move(colours))
{
    auto n = vertices_.size();
    if (n == 0)
        throw Error(Status::usage, "view needs at least one vertex");
    if (! std::is_sorted(vertices_.begin(), vertices_.end()) ||
        std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error(Status::usage, "view vertices must be sorted and distinct");
    if (colours_.size() != n * n)
        throw Error(Status::usage, "colour table size mismatch");

    out_.assign(colour_count_, std::vector<std::vector<int>>(n));
    in_.assign(colour_count_, std::vector<std::vector<int>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            Colour c = colours_[i * n + j];
            if (c < 1 || c > colour_count_)
                throw Error(Status::usage, "colour out of range in view table");
            out_[c - 1][i].push_back(static_cast<int>(j));
            in_[c - 1][j].push_back(static_cast<int>(i));
        }
}

int PrefixView::index_of(Vertex v) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        return -1;
    return static_cast<int>(it - vertices_.begin());
}

Colour PrefixView::colour_of(Vertex m, Vertex n) const
{
    if (m == n)
        throw InvalidPairError("loop has no colour");
    auto i = index_of(m), j = index_of(n);
    if (i < 0 || j < 0)
        throw OutOfDomainError("vertex not in view");
    return colour_at(i, j);
}

const std::vector<int> & PrefixView::out_neighbours(Colour c, int i) const
{
    if (c < 1 || c > colour_count_)
        throw Error(Status::usage, "colour out of range");
    return out_[c - 1][i];
}

const std::vector<int> & PrefixView::in_neighbours(Colour c, int i) const
{
    if (c < 1 || c > colour_count_)
        throw Error(Status::usage, "colour out of range");
    return in_[c - 1][i];
}

PrefixView materialize(const ColouringRule & rule, std::vector<Vertex> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    auto n = vertices.size();
    if (n == 0)
        throw Error(Status::usage, "cannot materialize an empty vertex set");

    std::vector<std::uint8_t> colours(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                colours[i * n + j] = static_cast<std::uint8_t>(rule.colour_of(vertices[i], vertices[j]));

    return PrefixView{std::move(vertices), rule.colour_count(), std::move(colours)};
}

PrefixView materialize_prefix(const ColouringRule & rule, Vertex n)
{
    std::vector<Vertex> vertices(n);
    std::iota(vertices.begin(), vertices.end(), Vertex{1});
    return materialize(rule, std::move(vertices));
}

}
