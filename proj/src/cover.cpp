#include <dcolour/cover.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <numeric>

namespace dcolour {

namespace {
    constexpr std::int8_t infinity = 127;

    // dp[mask * n + last] = least number of paths partitioning mask, the
    // path under construction ending at last.
    struct CoverDp {
        int n;
        std::vector<std::uint32_t> out_adj, in_adj;
        std::vector<std::int8_t> dp;

        CoverDp(const PrefixView & view, Colour colour) :
            n(static_cast<int>(view.size())),
            out_adj(n, 0),
            in_adj(n, 0)
        {
            if (n > 22)
                throw BudgetError("view too large for the exact cover DP", 0);
            for (int i = 0; i < n; ++i) {
                for (int j : view.out_neighbours(colour, i))
                    out_adj[i] |= std::uint32_t{1} << j;
                for (int j : view.in_neighbours(colour, i))
                    in_adj[i] |= std::uint32_t{1} << j;
            }
            auto full = (std::uint32_t{1} << n) - 1;
            dp.assign((std::size_t{1} << n) * n, infinity);
            for (int v = 0; v < n; ++v)
                dp[(std::size_t{1} << v) * n + v] = 1;
            for (std::uint32_t mask = 1; mask <= full; ++mask)
                for (std::uint32_t bits = mask; bits;) {
                    int last = std::countr_zero(bits);
                    bits &= bits - 1;
                    auto cur = dp[std::size_t{mask} * n + last];
                    if (cur == infinity)
                        continue;
                    for (std::uint32_t rest = full & ~mask; rest;) {
                        int w = std::countr_zero(rest);
                        rest &= rest - 1;
                        auto & extended = dp[std::size_t{mask | (std::uint32_t{1} << w)} * n + w];
                        std::int8_t via = (out_adj[last] >> w & 1) ? cur : static_cast<std::int8_t>(cur + 1);
                        extended = std::min(extended, via);
                    }
                }
        }

        int g(std::uint32_t mask) const
        {
            if (mask == 0)
                return 0;
            int best = infinity;
            for (std::uint32_t bits = mask; bits;) {
                int last = std::countr_zero(bits);
                bits &= bits - 1;
                best = std::min<int>(best, dp[std::size_t{mask} * n + last]);
            }
            return best;
        }
    };

    PathCover make_cover(const PrefixView & view, Colour colour, std::vector<std::vector<int>> index_paths)
    {
        std::sort(index_paths.begin(), index_paths.end(),
            [](const auto & a, const auto & b) { return a.front() < b.front(); });
        PathCover cover;
        cover.ground_set = view.vertices();
        for (auto & p : index_paths) {
            DirectedPath path{{}, colour};
            for (int i : p)
                path.vertices.push_back(view.vertex(i));
            cover.paths.push_back(std::move(path));
        }
        return cover;
    }

    // Canonical comparison: sorted start-vertex sequence first, then the
    // path sequences themselves.
    bool canonically_less(const std::vector<std::vector<int>> & a, const std::vector<std::vector<int>> & b)
    {
        std::vector<int> sa, sb;
        for (auto & p : a)
            sa.push_back(p.front());
        for (auto & p : b)
            sb.push_back(p.front());
        if (sa != sb)
            return sa < sb;
        return a < b;
    }
}

int min_path_cover_size(const PrefixView & view, Colour colour)
{
    CoverDp dp{view, colour};
    return dp.g((std::uint32_t{1} << dp.n) - 1);
}

PathCover min_path_cover_any(const PrefixView & view, Colour colour)
{
    CoverDp dp{view, colour};
    int n = dp.n;
    auto full = (std::uint32_t{1} << n) - 1;
    int k = dp.g(full);

    // Walk the DP backwards, building the current path end-to-start.
    std::vector<std::vector<int>> paths;
    std::uint32_t mask = full;
    int last = 0;
    while (dp.dp[std::size_t{mask} * n + last] != k)
        ++last;
    int count = k;
    std::vector<int> current{last};
    while (true) {
        auto rest = mask & ~(std::uint32_t{1} << last);
        if (rest == 0) {
            std::reverse(current.begin(), current.end());
            paths.push_back(std::move(current));
            break;
        }
        int extend = -1, fresh = -1;
        for (std::uint32_t bits = rest; bits;) {
            int w = std::countr_zero(bits);
            bits &= bits - 1;
            auto prev = dp.dp[std::size_t{rest} * n + w];
            if (extend < 0 && (dp.in_adj[last] >> w & 1) && prev == count)
                extend = w;
            if (fresh < 0 && prev == count - 1)
                fresh = w;
        }
        if (extend >= 0) {
            current.push_back(extend);
            mask = rest;
            last = extend;
        }
        else {
            std::reverse(current.begin(), current.end());
            paths.push_back(std::move(current));
            current = {fresh};
            mask = rest;
            last = fresh;
            --count;
        }
    }
    return make_cover(view, colour, std::move(paths));
}

PathCover min_path_cover_exact(const PrefixView & view, Colour colour, const SearchBudget & budget)
{
    int n = static_cast<int>(view.size());
    if (n > budget.max_exact_vertices || n > 22)
        throw BudgetError("view exceeds the exact cover budget",
            static_cast<long>(greedy_path_cover(view, colour).size()));

    CoverDp dp{view, colour};
    auto full = (std::uint32_t{1} << n) - 1;
    int k = dp.g(full);

    std::vector<std::vector<int>> best;
    bool found = false;
    long nodes = 0;
    constexpr long node_cap = 20'000'000;

    std::vector<std::vector<int>> chosen;
    std::vector<int> chain;

    // Enumerate partitions into exactly k paths: the path through the least
    // uncovered vertex is generated by extending backwards then forwards.
    auto consider = [&](std::uint32_t mask, std::uint32_t used, auto && cover_rec) -> void {
        auto rest = mask & ~used;
        if (static_cast<int>(chosen.size()) + 1 + dp.g(rest) > k)
            return;
        chosen.push_back(chain);
        auto saved_chain = chain;   // the recursion below reuses the buffer
        cover_rec(rest, cover_rec);
        chain = std::move(saved_chain);
        chosen.pop_back();
    };

    auto cover_rec = [&](std::uint32_t mask, auto && self) -> void {
        if (++nodes > node_cap)
            throw BudgetError("canonical cover enumeration budget exhausted",
                static_cast<long>(k));
        if (mask == 0) {
            if (! found || canonically_less(chosen, best)) {
                best = chosen;
                found = true;
            }
            return;
        }
        int anchor = std::countr_zero(mask);

        auto forward = [&](std::uint32_t used, auto && fwd) -> void {
            consider(mask, used, self);
            int tail = chain.back();
            for (std::uint32_t bits = dp.out_adj[tail] & mask & ~used; bits;) {
                int w = std::countr_zero(bits);
                bits &= bits - 1;
                chain.push_back(w);
                fwd(used | (std::uint32_t{1} << w), fwd);
                chain.pop_back();
            }
        };
        auto backward = [&](std::uint32_t used, auto && bwd) -> void {
            forward(used, forward);
            int head = chain.front();
            for (std::uint32_t bits = dp.in_adj[head] & mask & ~used; bits;) {
                int w = std::countr_zero(bits);
                bits &= bits - 1;
                chain.insert(chain.begin(), w);
                bwd(used | (std::uint32_t{1} << w), bwd);
                chain.erase(chain.begin());
            }
        };

        chain = {anchor};
        backward(std::uint32_t{1} << anchor, backward);
    };

    cover_rec(full, cover_rec);
    return make_cover(view, colour, std::move(best));
}

PathCover greedy_path_cover(const PrefixView & view, Colour colour)
{
    int n = static_cast<int>(view.size());
    std::vector<char> covered(n, 0);
    std::vector<std::vector<int>> paths;
    for (int v = 0; v < n; ++v) {
        if (covered[v])
            continue;
        std::vector<int> path{v};
        covered[v] = 1;
        while (true) {
            int next = -1;
            for (int w : view.out_neighbours(colour, path.back()))
                if (! covered[w]) {
                    next = w;
                    break;
                }
            if (next < 0)
                break;
            covered[next] = 1;
            path.push_back(next);
        }
        paths.push_back(std::move(path));
    }
    return make_cover(view, colour, std::move(paths));
}

ConjectureReport conjecture_harness(int r, Vertex n, int trials, std::uint64_t seed, const SearchBudget & budget)
{
    if (r < 1)
        throw Error(Status::usage, "r must be at least 1");
    if (n < 1 || trials < 1)
        throw Error(Status::usage, "n and trials must be at least 1");
    if (n > static_cast<Vertex>(budget.max_exact_vertices))
        throw BudgetError("conjecture harness needs n within the exact budget", 0);

    long time_cap_ms = budget.time_cap_ms.value_or(30'000);
    if (const char * env = std::getenv("RDL_TIME_CAP_MS"))
        time_cap_ms = std::atol(env);
    auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(time_cap_ms);

    // Red probability keeps the conditioning feasible: r=1 forces an
    // all-blue colouring, larger r tolerates a thin red layer.
    double p_red = r == 1 ? 0.0 : std::min(0.5, static_cast<double>(r - 1) / (2.0 * static_cast<double>(n)));

    ConjectureReport report;
    report.r = r;
    report.n = n;
    report.seed = seed;
    report.max_cover = 0;
    report.exceeding_r = 0;
    report.caveat = "finite truncations can need fewer or more paths than the infinite statement; "
                    "this report is not evidence about the conjecture";

    constexpr int max_attempts = 100'000;
    for (int i = 0; i < trials; ++i) {
        auto base = splitmix64(seed ^ (0x100000001b3ULL * static_cast<std::uint64_t>(i + 1)));
        int rejected = 0;
        bool done = false;
        for (int attempt = 0; attempt < max_attempts && ! done; ++attempt) {
            if (std::chrono::steady_clock::now() > deadline)
                throw BudgetError("time cap hit after " + std::to_string(i) + " trials and " +
                        std::to_string(rejected) + " rejections in the current trial",
                    report.max_cover);
            auto trial_seed = splitmix64(base + static_cast<std::uint64_t>(attempt));
            auto rule = ColouringRule::seeded_random(2, trial_seed, {p_red, 1.0 - p_red});
            auto view = materialize_prefix(rule, n);
            if (capped_levels(view, colour_red, r).any_cap_hit) {
                ++rejected;
                continue;
            }
            int cover = min_path_cover_size(view, colour_blue);
            report.trials.push_back({i, trial_seed, cover, rejected});
            report.max_cover = std::max(report.max_cover, cover);
            if (cover > r)
                ++report.exceeding_r;
            done = true;
        }
        if (! done)
            throw BudgetError("rejection sampling infeasible: " + std::to_string(max_attempts) +
                    " attempts rejected in trial " + std::to_string(i),
                report.max_cover);
    }

    // Non-random control: the extremal colouring (all-blue when r = 1).
    if (r == 1) {
        std::vector<std::uint8_t> table(n * n, colour_blue);
        auto rule = ColouringRule::explicit_table(n, 2, std::move(table));
        report.control_cover = min_path_cover_size(materialize_prefix(rule, n), colour_blue);
    }
    else
        report.control_cover = min_path_cover_size(materialize_prefix(ColouringRule::extremal(r), n), colour_blue);

    return report;
}

std::string ConjectureReport::to_lines() const
{
    std::string out = "conjecture r=" + std::to_string(r) + " n=" + std::to_string(n) +
        " trials=" + std::to_string(trials.size()) + " seed=" + std::to_string(seed) + "\n";
    for (auto & t : trials)
        out += "trial " + std::to_string(t.index) + " seed " + std::to_string(t.seed) +
            " cover " + std::to_string(t.cover) + " rejected " + std::to_string(t.rejected) + "\n";
    out += "control extremal cover " + std::to_string(control_cover) + "\n";
    out += "max_cover " + std::to_string(max_cover) + " exceeding_r " + std::to_string(exceeding_r) + "\n";
    out += "caveat: " + caveat + "\n";
    return out;
}

std::string cover_to_lines(const PathCover & cover)
{
    std::string out = "cover paths=" + std::to_string(cover.size()) + "\n";
    for (auto & path : cover.paths)
        out += path_to_line(path) + "\n";
    return out;
}

}
