#include <dcolour/format.hpp>

#include <fstream>
#include <sstream>

namespace dcolour {

namespace {
    constexpr Vertex default_horizon_cap = 4096;
}

void serialize_view(const PrefixView & view, std::ostream & out)
{
    auto n = static_cast<Vertex>(view.size());
    for (Vertex v = 1; v <= n; ++v)
        if (! view.contains(v))
            throw Error(Status::usage, "only views on a full prefix [1..N] are serializable");
    out << "dcolour v1 n=" << n << " colours=" << view.colour_count() << "\n";
    for (Vertex m = 1; m <= n; ++m)
        for (Vertex v = 1; v <= n; ++v)
            if (m != v)
                out << m << " " << v << " " << view.colour_of(m, v) << "\n";
}

std::string serialize_view(const PrefixView & view)
{
    std::ostringstream out;
    serialize_view(view, out);
    return out.str();
}

ParsedColouring parse_view(std::istream & in)
{
    std::string line;
    int line_number = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_number;
            if (! line.empty() && line[0] == '#')
                continue;
            return true;
        }
        return false;
    };

    if (! next_line())
        throw ParseError(1, "empty input");

    Vertex n = 0;
    int colours = 0;
    {
        std::stringstream header{line};
        std::string magic, version, nfield, cfield;
        if (! (header >> magic >> version >> nfield >> cfield) || magic != "dcolour" || version != "v1" ||
            nfield.rfind("n=", 0) != 0 || cfield.rfind("colours=", 0) != 0)
            throw ParseError(line_number, "malformed header, expected 'dcolour v1 n=<N> colours=<K>'");
        std::string rest;
        if (header >> rest)
            throw ParseError(line_number, "trailing junk in header");
        try {
            n = std::stoull(nfield.substr(2));
            colours = std::stoi(cfield.substr(8));
        }
        catch (const std::logic_error &) {
            throw ParseError(line_number, "malformed header fields");
        }
        if (n < 1 || colours < 2)
            throw ParseError(line_number, "header needs n >= 1 and colours >= 2");
        if (n > default_horizon_cap)
            throw ParseError(line_number,
                "n=" + std::to_string(n) + " exceeds the horizon cap " + std::to_string(default_horizon_cap));
    }

    std::vector<std::uint8_t> table(n * n, 0);
    std::vector<char> seen(n * n, 0);
    while (next_line()) {
        std::stringstream ss{line};
        Vertex m = 0, v = 0;
        int c = 0;
        std::string rest;
        if (! (ss >> m >> v >> c) || (ss >> rest))
            throw ParseError(line_number, "expected 'm n c'");
        if (m < 1 || m > n || v < 1 || v > n)
            throw ParseError(line_number, "vertex outside [1.." + std::to_string(n) + "]");
        if (m == v)
            throw ParseError(line_number, "loop (" + std::to_string(m) + "," + std::to_string(m) + ") forbidden");
        if (c < 1 || c > colours)
            throw ParseError(line_number, "colour outside [1.." + std::to_string(colours) + "]");
        auto idx = (m - 1) * n + (v - 1);
        if (seen[idx])
            throw ParseError(line_number, "duplicate pair (" + std::to_string(m) + "," + std::to_string(v) + ")");
        seen[idx] = 1;
        table[idx] = static_cast<std::uint8_t>(c);
    }
    for (Vertex m = 1; m <= n; ++m)
        for (Vertex v = 1; v <= n; ++v)
            if (m != v && ! seen[(m - 1) * n + (v - 1)])
                throw ParseError(line_number,
                    "incomplete table: pair (" + std::to_string(m) + "," + std::to_string(v) + ") missing");

    return ParsedColouring{ColouringRule::explicit_table(n, colours, std::move(table)), n};
}

ParsedColouring parse_view_string(const std::string & text)
{
    std::istringstream in{text};
    return parse_view(in);
}

void save_view_file(const PrefixView & view, const std::string & path)
{
    std::ofstream out{path};
    if (! out)
        throw Error(Status::io, "cannot open '" + path + "' for writing");
    serialize_view(view, out);
    if (! out)
        throw Error(Status::io, "write to '" + path + "' failed");
}

PrefixView load_view_file(const std::string & path)
{
    std::ifstream in{path};
    if (! in)
        throw Error(Status::io, "cannot open '" + path + "'");
    auto parsed = parse_view(in);
    return materialize_prefix(parsed.rule, parsed.n);
}

}
