#include <dcolour/structure.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace dcolour {

namespace {
    // Exact minimum cover of a family of vertex sets: branch and bound on
    // the first uncovered set, canonical result (least size, then least
    // lexicographic sorted vertex set).
    struct CoverSearch {
        const std::vector<std::vector<Vertex>> & sets;
        int max_size;
        std::vector<Vertex> best;
        bool found = false;
        long nodes = 0;
        static constexpr long node_cap = 5'000'000;

        CoverSearch(const std::vector<std::vector<Vertex>> & sets, int max_size) :
            sets(sets),
            max_size(max_size)
        {
            std::set<Vertex> chosen;
            branch(chosen);
        }

        // Pairwise-disjoint uncovered sets each need a distinct vertex.
        int disjoint_lower_bound(const std::set<Vertex> & chosen) const
        {
            std::set<Vertex> used;
            int bound = 0;
            for (auto & s : sets) {
                bool hit = false;
                for (auto v : s)
                    if (chosen.count(v) || used.count(v)) {
                        hit = true;
                        break;
                    }
                if (! hit) {
                    ++bound;
                    used.insert(s.begin(), s.end());
                }
            }
            return bound;
        }

        void branch(std::set<Vertex> & chosen)
        {
            if (++nodes > node_cap)
                throw NotCrError("exceptional-set search budget exhausted", static_cast<long>(sets.size()));
            if (found && chosen.size() >= best.size())
                return;
            const std::vector<Vertex> * uncovered = nullptr;
            for (auto & s : sets) {
                bool hit = false;
                for (auto v : s)
                    if (chosen.count(v)) {
                        hit = true;
                        break;
                    }
                if (! hit) {
                    uncovered = &s;
                    break;
                }
            }
            if (! uncovered) {
                std::vector<Vertex> candidate(chosen.begin(), chosen.end());
                if (! found || candidate.size() < best.size() ||
                    (candidate.size() == best.size() && candidate < best)) {
                    best = candidate;
                    found = true;
                }
                return;
            }
            if (static_cast<int>(chosen.size()) >= max_size)
                return;
            auto needed = chosen.size() + disjoint_lower_bound(chosen);
            if (static_cast<int>(needed) > max_size || (found && needed > best.size()))
                return;
            for (auto v : *uncovered) {
                if (chosen.count(v))
                    continue;
                chosen.insert(v);
                branch(chosen);
                chosen.erase(v);
            }
        }
    };

    std::map<Vertex, int> class_index(const std::vector<std::vector<Vertex>> & classes)
    {
        std::map<Vertex, int> index;
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (auto v : classes[c])
                if (! index.emplace(v, static_cast<int>(c)).second)
                    throw Error(Status::usage, "vertex " + std::to_string(v) + " appears in two classes");
        return index;
    }
}

PrefixView subview(const PrefixView & view, const std::vector<Vertex> & exclude)
{
    std::set<Vertex> out(exclude.begin(), exclude.end());
    std::vector<Vertex> keep;
    std::vector<int> keep_idx;
    for (std::size_t i = 0; i < view.size(); ++i)
        if (! out.count(view.vertex(static_cast<int>(i)))) {
            keep.push_back(view.vertex(static_cast<int>(i)));
            keep_idx.push_back(static_cast<int>(i));
        }
    auto n = keep.size();
    std::vector<std::uint8_t> colours(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                colours[i * n + j] = static_cast<std::uint8_t>(view.colour_at(keep_idx[i], keep_idx[j]));
    return PrefixView{std::move(keep), view.colour_count(), std::move(colours)};
}

PatternReport pattern_check(const PrefixView & view, const std::vector<std::vector<Vertex>> & classes,
    const std::vector<Vertex> & exclude)
{
    auto index = class_index(classes);
    std::set<Vertex> excluded(exclude.begin(), exclude.end());
    std::size_t retained = 0;
    for (auto v : view.vertices())
        if (! excluded.count(v))
            ++retained;
    if (index.size() != retained)
        throw Error(Status::usage, "classes do not partition the retained vertices");
    for (auto & [v, c] : index)
        if (! view.contains(v) || excluded.count(v))
            throw Error(Status::usage, "class vertex " + std::to_string(v) + " is not retained");

    PatternReport report{true, {}};
    for (auto & [m, cm] : index)
        for (auto & [n, cn] : index) {
            if (m == n)
                continue;
            Colour expected = cm <= cn ? colour_blue : colour_red;
            Colour actual = view.colour_of(m, n);
            if (actual != expected) {
                report.ok = false;
                report.violations.push_back({m, n, expected, actual});
            }
        }
    return report;
}

CrStructure detect_cr_structure(const PrefixView & view, int r, int max_exceptional)
{
    if (r < 1)
        throw Error(Status::usage, "r must be at least 1");

    // Obstructions found so far: pattern-violating edges (pairs) and red
    // paths of length r (vertex sets of r+1). Any valid exceptional set must
    // meet every one, so a minimum cover of the obstructions is removed and
    // the remainder re-checked; new obstructions feed the next round.
    std::set<std::vector<Vertex>> obstructions;
    std::vector<Vertex> u;
    bool saw_long_red_path = false;
    long residual = 0;

    auto solve_cover = [&]() {
        std::vector<std::vector<Vertex>> sets(obstructions.begin(), obstructions.end());
        CoverSearch search{sets, max_exceptional};
        if (! search.found) {
            if (saw_long_red_path)
                throw CapHitError("red path of length >= " + std::to_string(r) + " present", r);
            throw NotCrError("no exceptional set of size <= " + std::to_string(max_exceptional) +
                    " removes all obstructions",
                residual > 0 ? residual : static_cast<long>(obstructions.size()));
        }
        u = search.best;
    };

    for (int round = 0;; ++round) {
        if (round > 8 * max_exceptional + 16)
            throw NotCrError("structure detection did not converge", residual);

        auto rest = subview(view, u);
        auto levels = capped_levels(rest, colour_red, r);

        if (levels.any_cap_hit) {
            for (auto & witness : levels.witnesses)
                if (! witness.empty()) {
                    auto sorted = witness;
                    std::sort(sorted.begin(), sorted.end());
                    obstructions.insert(sorted);
                    saw_long_red_path = true;
                }
            solve_cover();
            continue;
        }

        std::vector<std::vector<Vertex>> classes(r);
        for (std::size_t i = 0; i < rest.size(); ++i)
            classes[levels.levels[i]].push_back(rest.vertex(static_cast<int>(i)));

        auto report = pattern_check(view, classes, u);
        if (report.ok) {
            CrStructure result;
            result.exceptional = u;
            result.classes = std::move(classes);
            return result;
        }
        residual = static_cast<long>(report.violations.size());
        for (auto & violation : report.violations) {
            std::vector<Vertex> pair{violation.from, violation.to};
            std::sort(pair.begin(), pair.end());
            obstructions.insert(pair);
        }
        solve_cover();
    }
}

std::optional<Claim1Counterexample> claim1_check(const PrefixView & view, const LevelPartition & partition)
{
    for (std::size_t i = 0; i < partition.ground_set.size(); ++i) {
        auto v = partition.ground_set[i];
        int level = partition.levels[i];
        auto vi = view.index_of(v);
        if (vi < 0)
            throw OutOfDomainError("partition vertex " + std::to_string(v) + " not in view");
        int indeg = 0;
        for (int j : view.in_neighbours(colour_red, vi)) {
            auto w = view.vertex(j);
            auto it = std::lower_bound(partition.ground_set.begin(), partition.ground_set.end(), w);
            if (it != partition.ground_set.end() && *it == w &&
                partition.levels[it - partition.ground_set.begin()] == level)
                ++indeg;
        }
        if (indeg > level)
            return Claim1Counterexample{v, level, indeg};
    }
    return std::nullopt;
}

std::string structure_to_lines(const CrStructure & s)
{
    std::string out = "U:";
    for (auto v : s.exceptional)
        out += " " + std::to_string(v);
    out += "\n";
    for (std::size_t c = 0; c < s.classes.size(); ++c) {
        out += "class " + std::to_string(c) + ":";
        for (auto v : s.classes[c])
            out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

std::string report_to_lines(const PatternReport & r)
{
    if (r.ok)
        return "ok\n";
    std::string out;
    for (auto & v : r.violations)
        out += "(" + std::to_string(v.from) + "," + std::to_string(v.to) + ") expected=" +
            std::to_string(v.expected) + " actual=" + std::to_string(v.actual) + "\n";
    return out;
}

}
