#include <dcolour/paths.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

namespace dcolour {

namespace {
    std::string edge_str(Vertex m, Vertex n)
    {
        return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    }

    // Exact per-vertex longest-path lengths under a cap. Vertices that can
    // reach a cycle of the colour digraph are searched exhaustively; the
    // rest form a DAG and are solved by memoisation. Levels of at least
    // `cap` are clamped to cap, with a witness path of cap edges attached.
    struct LevelEngine {
        const PrefixView & view;
        Colour colour;
        int cap;
        int n;
        std::vector<char> marked;   // can reach a nontrivial SCC
        std::vector<int> dag_level; // -1 = unknown, for unmarked vertices
        std::vector<int> levels;
        std::vector<std::vector<int>> witnesses;

        LevelEngine(const PrefixView & v, Colour c, int cap) :
            view(v),
            colour(c),
            cap(cap),
            n(static_cast<int>(v.size())),
            marked(n, 0),
            dag_level(n, -1),
            levels(n, 0),
            witnesses(n)
        {
            mark_cyclic_region();
            for (int i = 0; i < n; ++i)
                if (! marked[i])
                    dag_levels(i);
            for (int i = 0; i < n; ++i)
                compute(i);
        }

        void mark_cyclic_region()
        {
            // Iterative Tarjan SCC.
            std::vector<int> index(n, -1), low(n, 0), scc_of(n, -1);
            std::vector<char> on_stack(n, 0);
            std::vector<int> stack;
            std::vector<int> scc_size;
            int next_index = 0;

            struct Frame {
                int v;
                std::size_t edge;
            };
            for (int root = 0; root < n; ++root) {
                if (index[root] != -1)
                    continue;
                std::vector<Frame> frames{{root, 0}};
                index[root] = low[root] = next_index++;
                stack.push_back(root);
                on_stack[root] = 1;
                while (! frames.empty()) {
                    auto & fr = frames.back();
                    const auto & out = view.out_neighbours(colour, fr.v);
                    if (fr.edge < out.size()) {
                        int w = out[fr.edge++];
                        if (index[w] == -1) {
                            index[w] = low[w] = next_index++;
                            stack.push_back(w);
                            on_stack[w] = 1;
                            frames.push_back({w, 0});
                        }
                        else if (on_stack[w])
                            low[fr.v] = std::min(low[fr.v], index[w]);
                    }
                    else {
                        if (low[fr.v] == index[fr.v]) {
                            int id = static_cast<int>(scc_size.size());
                            int count = 0;
                            while (true) {
                                int w = stack.back();
                                stack.pop_back();
                                on_stack[w] = 0;
                                scc_of[w] = id;
                                ++count;
                                if (w == fr.v)
                                    break;
                            }
                            scc_size.push_back(count);
                        }
                        int v = fr.v;
                        frames.pop_back();
                        if (! frames.empty())
                            low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                    }
                }
            }

            // Reverse-reachability from every nontrivial SCC.
            std::vector<int> queue;
            for (int i = 0; i < n; ++i)
                if (scc_size[scc_of[i]] >= 2) {
                    marked[i] = 1;
                    queue.push_back(i);
                }
            while (! queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                for (int u : view.in_neighbours(colour, v))
                    if (! marked[u]) {
                        marked[u] = 1;
                        queue.push_back(u);
                    }
            }
        }

        int dag_levels(int v)
        {
            if (dag_level[v] >= 0)
                return dag_level[v];
            dag_level[v] = 0;   // acyclic region, no re-entry
            int best = 0;
            for (int w : view.out_neighbours(colour, v))
                best = std::max(best, 1 + dag_levels(w));
            return dag_level[v] = best;
        }

        std::vector<int> dag_witness(int v, int edges)
        {
            std::vector<int> path{v};
            while (edges > 0) {
                for (int w : view.out_neighbours(colour, path.back()))
                    if (dag_level[w] == dag_level[path.back()] - 1) {
                        path.push_back(w);
                        break;
                    }
                --edges;
            }
            return path;
        }

        // Exhaustive search through the cyclic region; on leaving it the DAG
        // value finishes the path (the acyclic region cannot re-enter the
        // cyclic one, so no collision with the prefix is possible).
        std::vector<char> visited;
        std::vector<int> current;
        int best_len = 0;
        std::vector<int> best_path;

        void dfs(int v, int depth)
        {
            if (depth > best_len) {
                best_len = depth;
                best_path = current;
            }
            if (depth >= cap)
                return;
            for (int w : view.out_neighbours(colour, v)) {
                if (! marked[w]) {
                    int total = depth + 1 + dag_level[w];
                    if (total > best_len) {
                        best_len = total;
                        best_path = current;
                        auto tail = dag_witness(w, std::min(dag_level[w], cap - depth - 1));
                        best_path.insert(best_path.end(), tail.begin(), tail.end());
                    }
                }
                else if (! visited[w]) {
                    visited[w] = 1;
                    current.push_back(w);
                    dfs(w, depth + 1);
                    current.pop_back();
                    visited[w] = 0;
                }
            }
        }

        void compute(int v)
        {
            if (! marked[v]) {
                levels[v] = std::min(dag_level[v], cap);
                if (dag_level[v] >= cap)
                    witnesses[v] = dag_witness(v, cap);
                return;
            }
            visited.assign(n, 0);
            visited[v] = 1;
            current = {v};
            best_len = 0;
            best_path = {v};
            dfs(v, 0);
            levels[v] = std::min(best_len, cap);
            if (best_len >= cap) {
                best_path.resize(cap + 1);
                witnesses[v] = best_path;
            }
        }
    };

    // f[mask * n + v] = longest `colour` path starting at v inside mask.
    struct SubsetDp {
        int n;
        std::vector<std::uint32_t> adj;
        std::vector<std::int8_t> f;

        SubsetDp(const PrefixView & view, Colour colour) :
            n(static_cast<int>(view.size())),
            adj(n, 0)
        {
            if (n > 25)
                throw BudgetError("view too large for subset DP", 0);
            for (int i = 0; i < n; ++i)
                for (int j : view.out_neighbours(colour, i))
                    adj[i] |= std::uint32_t{1} << j;
            f.assign((std::size_t{1} << n) * n, 0);
            for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
                for (std::uint32_t bits = mask; bits;) {
                    int v = std::countr_zero(bits);
                    bits &= bits - 1;
                    auto rest = mask & ~(std::uint32_t{1} << v);
                    std::int8_t best = 0;
                    for (std::uint32_t succ = adj[v] & rest; succ;) {
                        int w = std::countr_zero(succ);
                        succ &= succ - 1;
                        best = std::max<std::int8_t>(best, 1 + f[std::size_t{rest} * n + w]);
                    }
                    f[std::size_t{mask} * n + v] = best;
                }
            }
        }

        std::int8_t at(std::uint32_t mask, int v) const { return f[std::size_t{mask} * n + v]; }
    };
}

int LevelPartition::level_of(Vertex v) const
{
    auto it = std::lower_bound(ground_set.begin(), ground_set.end(), v);
    if (it == ground_set.end() || *it != v)
        throw OutOfDomainError("vertex " + std::to_string(v) + " not in partition ground set");
    return levels[it - ground_set.begin()];
}

int LevelPartition::max_level() const
{
    return *std::max_element(levels.begin(), levels.end());
}

std::vector<std::vector<Vertex>> LevelPartition::level_sets() const
{
    std::vector<std::vector<Vertex>> sets(max_level() + 1);
    for (std::size_t i = 0; i < ground_set.size(); ++i)
        sets[levels[i]].push_back(ground_set[i]);
    return sets;
}

std::optional<PathViolation> validate_path(const PrefixView & view, const DirectedPath & path)
{
    if (path.vertices.empty())
        return PathViolation{0, 0, "empty path"};
    std::set<Vertex> seen;
    for (auto v : path.vertices) {
        if (! view.contains(v))
            return PathViolation{v, v, "vertex " + std::to_string(v) + " not in view"};
        if (! seen.insert(v).second)
            return PathViolation{v, v, "vertex " + std::to_string(v) + " repeats"};
    }
    if (path.colour < 1 || path.colour > view.colour_count())
        return PathViolation{0, 0, "colour out of range"};
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        auto m = path.vertices[i], n = path.vertices[i + 1];
        auto actual = view.colour_of(m, n);
        if (actual != path.colour)
            return PathViolation{m, n,
                "edge " + edge_str(m, n) + " has colour " + std::to_string(actual) +
                    ", expected " + std::to_string(path.colour)};
    }
    return std::nullopt;
}

DirectedPath longest_mono_path_exact(const PrefixView & view, Colour colour, const SearchBudget & budget)
{
    int n = static_cast<int>(view.size());

    if (n <= budget.max_exact_vertices && n <= 25) {
        SubsetDp dp{view, colour};
        auto full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
        int best = 0;
        for (int v = 0; v < n; ++v)
            best = std::max<int>(best, dp.at(full, v));

        // Lexicographically least reconstruction: least feasible start, then
        // least feasible successor at each step.
        std::uint32_t mask = full;
        int v = 0;
        while (dp.at(full, v) != best)
            ++v;
        DirectedPath path{{view.vertex(v)}, colour};
        int remaining = best;
        while (remaining > 0) {
            auto rest = mask & ~(std::uint32_t{1} << v);
            for (int w : view.out_neighbours(colour, v))
                if ((rest >> w & 1) && dp.at(rest, w) == remaining - 1) {
                    path.vertices.push_back(view.vertex(w));
                    mask = rest;
                    v = w;
                    break;
                }
            --remaining;
        }
        return path;
    }

    if (! budget.depth_cap)
        throw BudgetError("view exceeds the exact-search vertex budget and no depth cap was given", 0);

    // Depth-limited exhaustive DFS. Starts and extensions are explored in
    // ascending order, so the first path reaching the maximum length is the
    // lexicographically least of that length.
    int cap = *budget.depth_cap;
    DirectedPath best{{view.vertex(0)}, colour};
    bool cap_hit = false;
    std::vector<char> visited(n, 0);
    std::vector<int> current;

    auto dfs = [&](auto && self, int v, int depth) -> void {
        if (depth + 1 > static_cast<int>(best.vertices.size())) {
            best.vertices.clear();
            for (int i : current)
                best.vertices.push_back(view.vertex(i));
        }
        if (depth >= cap) {
            cap_hit = true;
            return;
        }
        for (int w : view.out_neighbours(colour, v))
            if (! visited[w]) {
                visited[w] = 1;
                current.push_back(w);
                self(self, w, depth + 1);
                current.pop_back();
                visited[w] = 0;
            }
    };
    for (int v = 0; v < n; ++v) {
        visited[v] = 1;
        current = {v};
        dfs(dfs, v, 0);
        visited[v] = 0;
    }
    if (cap_hit)
        throw BudgetError("depth cap " + std::to_string(cap) + " reached; longest path is uncertified",
            best.length());
    return best;
}

CappedLevels capped_levels(const PrefixView & view, Colour colour, int cap)
{
    if (cap < 1)
        throw Error(Status::usage, "depth cap must be at least 1");
    LevelEngine engine{view, colour, cap};
    CappedLevels result;
    result.levels = engine.levels;
    result.witnesses.resize(engine.n);
    for (int i = 0; i < engine.n; ++i)
        if (! engine.witnesses[i].empty()) {
            result.any_cap_hit = true;
            for (int idx : engine.witnesses[i])
                result.witnesses[i].push_back(view.vertex(idx));
        }
    return result;
}

int longest_from(const PrefixView & view, Colour colour, Vertex v, int depth_cap)
{
    auto i = view.index_of(v);
    if (i < 0)
        throw OutOfDomainError("vertex " + std::to_string(v) + " not in view");
    auto levels = capped_levels(view, colour, depth_cap);
    if (! levels.witnesses[i].empty())
        throw CapHitError("longest path from " + std::to_string(v) + " is >= " + std::to_string(depth_cap) +
                "; cannot certify the exact value",
            depth_cap);
    return levels.levels[i];
}

LevelPartition level_partition(const PrefixView & view, Colour colour, int depth_cap)
{
    auto levels = capped_levels(view, colour, depth_cap);
    for (std::size_t i = 0; i < view.size(); ++i)
        if (! levels.witnesses[i].empty())
            throw CapHitError("longest path from " + std::to_string(view.vertex(static_cast<int>(i))) + " is >= " +
                    std::to_string(depth_cap) + "; cannot certify the level partition",
                depth_cap);
    return LevelPartition{view.vertices(), levels.levels, colour};
}

LevelPartition exact_levels(const PrefixView & view, Colour colour)
{
    SubsetDp dp{view, colour};
    int n = dp.n;
    auto full = (std::uint32_t{1} << n) - 1;
    std::vector<int> levels(n);
    for (int v = 0; v < n; ++v)
        levels[v] = dp.at(full, v);
    return LevelPartition{view.vertices(), levels, colour};
}

GreedyPathResult greedy_mono_path(const PrefixView & view, Colour colour, const std::vector<Vertex> & target_set)
{
    if (target_set.empty())
        throw Error(Status::usage, "target set must be non-empty");
    auto targets = target_set;
    std::sort(targets.begin(), targets.end());
    for (auto v : targets)
        if (! view.contains(v))
            throw OutOfDomainError("target vertex " + std::to_string(v) + " not in view");

    GreedyPathResult result;
    result.path.colour = colour;
    result.path.vertices.push_back(targets.front());
    std::set<Vertex> in_path{targets.front()};

    for (std::size_t t = 1; t < targets.size(); ++t) {
        auto target = targets[t];
        if (in_path.count(target))
            continue;
        auto last = result.path.vertices.back();
        if (view.colour_of(last, target) == colour) {
            result.path.vertices.push_back(target);
            in_path.insert(target);
            continue;
        }
        bool found = false;
        for (auto u : view.vertices()) {
            if (u == target || in_path.count(u))
                continue;
            if (view.colour_of(last, u) == colour && view.colour_of(u, target) == colour) {
                result.path.vertices.push_back(u);
                result.path.vertices.push_back(target);
                in_path.insert(u);
                in_path.insert(target);
                found = true;
                break;
            }
        }
        if (! found)
            result.skipped.push_back(target);
    }
    return result;
}

DirectedPath splice_via_matching(const PrefixView & view, const DirectedPath & p, const DirectedPath & q,
    const Matching & matching)
{
    if (p.colour != q.colour)
        throw Error(Status::usage, "paths must share a colour");
    auto colour = p.colour;
    if (auto bad = validate_path(view, p))
        throw Error(Status::usage, "first path invalid: " + bad->reason);
    if (auto bad = validate_path(view, q))
        throw Error(Status::usage, "second path invalid: " + bad->reason);
    for (auto v : q.vertices)
        if (std::find(p.vertices.begin(), p.vertices.end(), v) != p.vertices.end())
            throw Error(Status::usage, "paths are not vertex-disjoint at " + std::to_string(v));

    // Matching edges as 1-based positions (k in Q, j in P).
    std::vector<std::pair<int, int>> edges;
    std::set<Vertex> matched;
    for (auto & [qv, pv] : matching) {
        auto k = std::find(q.vertices.begin(), q.vertices.end(), qv);
        auto j = std::find(p.vertices.begin(), p.vertices.end(), pv);
        if (k == q.vertices.end() || j == p.vertices.end())
            throw Error(Status::usage, "matching edge " + edge_str(qv, pv) + " does not join Q to P");
        if (! matched.insert(qv).second || ! matched.insert(pv).second)
            throw Error(Status::usage, "matching edges share the vertex " + std::to_string(qv));
        if (view.colour_of(qv, pv) != colour)
            throw Error(Status::usage, "matching edge " + edge_str(qv, pv) + " is not colour " + std::to_string(colour));
        edges.emplace_back(static_cast<int>(k - q.vertices.begin()) + 1,
            static_cast<int>(j - p.vertices.begin()) + 1);
    }
    std::sort(edges.begin(), edges.end());

    auto pv = [&](int j) { return p.vertices[j - 1]; };
    auto qv = [&](int k) { return q.vertices[k - 1]; };
    int plen = static_cast<int>(p.vertices.size());
    int qlen = static_cast<int>(q.vertices.size());

    DirectedPath s{{pv(1)}, colour};
    int j1 = 1, k1 = 0;
    while (k1 < qlen) {
        // Least admissible matching edge: minimise k2, then j2.
        int k2 = -1, j2 = -1;
        for (auto & [k, j] : edges)
            if (k > k1 && j > j1) {
                k2 = k;
                j2 = j;
                break;
            }
        if (k2 < 0) {
            for (int j = j1 + 1; j <= plen; ++j)
                s.vertices.push_back(pv(j));
            throw SpliceIncompleteError("matching too small to absorb Q; partial path covers P only", s);
        }
        for (int j = j1 + 1; j <= j2 - 1; ++j)
            s.vertices.push_back(pv(j));
        auto bridge_from = s.vertices.back();
        if (view.colour_of(bridge_from, qv(k1 + 1)) != colour)
            throw Error(Status::usage,
                "required bridging edge " + edge_str(bridge_from, qv(k1 + 1)) + " is not colour " + std::to_string(colour));
        for (int k = k1 + 1; k <= k2; ++k)
            s.vertices.push_back(qv(k));
        s.vertices.push_back(pv(j2));
        k1 = k2;
        j1 = j2;
    }
    for (int j = j1 + 1; j <= plen; ++j)
        s.vertices.push_back(pv(j));
    return s;
}

std::uint64_t bitrev_key(Vertex v, int k)
{
    if (k < 1)
        throw Error(Status::usage, "key width must be at least 1");
    std::uint64_t key = 0;
    for (int b = 0; b < k; ++b)
        key = (key << 1) | ((v >> b) & 1);
    return key;
}

int count_switches(const OrientedPath & path)
{
    auto n = path.vertices.size();
    if (path.orientations.size() + 1 != n && ! (n == 0 && path.orientations.empty()))
        throw Error(Status::usage, "orientation list length must be one less than the vertex count");
    if (n == 0)
        return 0;
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (path.orientations[i] == Orientation::forward) {
            ++outdeg[i];
            ++indeg[i + 1];
        }
        else {
            ++indeg[i];
            ++outdeg[i + 1];
        }
    }
    int switches = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0 || outdeg[i] == 0)
            ++switches;
    return switches;
}

DirectedPath mono_walk_sample(const ColouringRule & rule, Colour colour, Vertex start, int steps,
    Vertex horizon, std::uint64_t seed)
{
    if (start < 1 || start > horizon)
        throw OutOfDomainError("start vertex outside horizon");
    std::mt19937_64 rng{seed};
    DirectedPath path{{start}, colour};
    std::unordered_set<Vertex> visited{start};

    for (int step = 0; step < steps; ++step) {
        auto cur = path.vertices.back();
        std::optional<Vertex> next;
        // Rejection sampling keeps the choice uniform over eligible
        // out-neighbours without scanning the whole horizon each step.
        for (int attempt = 0; attempt < 64 && ! next; ++attempt) {
            Vertex cand = 1 + rng() % horizon;
            if (cand != cur && ! visited.count(cand) && rule.colour_of(cur, cand) == colour)
                next = cand;
        }
        if (! next) {
            std::vector<Vertex> candidates;
            for (Vertex cand = 1; cand <= horizon; ++cand)
                if (cand != cur && ! visited.count(cand) && rule.colour_of(cur, cand) == colour)
                    candidates.push_back(cand);
            if (candidates.empty())
                break;
            next = candidates[rng() % candidates.size()];
        }
        path.vertices.push_back(*next);
        visited.insert(*next);
    }
    return path;
}

std::string path_to_line(const DirectedPath & path)
{
    std::string line = "path colour=" + std::to_string(path.colour) + " :";
    for (auto v : path.vertices)
        line += " " + std::to_string(v);
    return line;
}

DirectedPath path_from_line(const std::string & line)
{
    std::stringstream ss{line};
    std::string word;
    DirectedPath path;
    if (! (ss >> word) || word != "path")
        throw ParseError(1, "expected a 'path' line");
    if (! (ss >> word) || word.rfind("colour=", 0) != 0)
        throw ParseError(1, "expected colour=<c>");
    try {
        path.colour = std::stoi(word.substr(7));
    }
    catch (const std::logic_error &) {
        throw ParseError(1, "bad colour value '" + word + "'");
    }
    if (! (ss >> word) || word != ":")
        throw ParseError(1, "expected ':' before the vertex list");
    Vertex v;
    while (ss >> v)
        path.vertices.push_back(v);
    if (! ss.eof())
        throw ParseError(1, "trailing junk in path line");
    return path;
}

std::string partition_to_lines(const LevelPartition & partition)
{
    std::string out;
    auto sets = partition.level_sets();
    for (std::size_t level = 0; level < sets.size(); ++level) {
        out += "level " + std::to_string(level) + " :";
        for (auto v : sets[level])
            out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

}
