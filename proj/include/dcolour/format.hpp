#pragma once

#include <iosfwd>
#include <string>

#include <dcolour/view.hpp>

namespace dcolour {

// Line-oriented colouring file:
//   dcolour v1 n=<N> colours=<K>
// followed by one "m n c" line per ordered pair of distinct vertices in
// [1..N], sorted lexicographically. Lines starting with '#' are ignored.
// Only views on a full prefix [1..N] are serializable.
void serialize_view(const PrefixView & view, std::ostream & out);
std::string serialize_view(const PrefixView & view);

struct ParsedColouring {
    ColouringRule rule;     // Explicit rule over [1..N]
    Vertex n;
};

ParsedColouring parse_view(std::istream & in);
ParsedColouring parse_view_string(const std::string & text);

void save_view_file(const PrefixView & view, const std::string & path);
PrefixView load_view_file(const std::string & path);

}
