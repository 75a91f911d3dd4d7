#include <dcolour.h>

#include <cstring>
#include <fstream>
#include <string>

#include <dcolour/cover.hpp>
#include <dcolour/density.hpp>
#include <dcolour/format.hpp>
#include <dcolour/structure.hpp>
#include <dcolour/verify.hpp>

using namespace dcolour;

struct dc_view {
    PrefixView view;
};

namespace {
    thread_local std::string last_error;

    char * copy_out(const std::string & s)
    {
        char * out = new char[s.size() + 1];
        std::memcpy(out, s.c_str(), s.size() + 1);
        return out;
    }

    template <typename F>
    int guarded(F && f)
    {
        try {
            last_error.clear();
            return static_cast<int>(f());
        }
        catch (const Error & e) {
            last_error = e.what();
            return static_cast<int>(e.status());
        }
        catch (const std::exception & e) {
            last_error = e.what();
            return DC_USAGE;
        }
    }

    LevelPartition red_levels(const PrefixView & view, int cap)
    {
        return level_partition(view, colour_red, cap);
    }
}

extern "C" {

int dc_view_generate(const char * rule_spec, uint64_t n, dc_view ** out)
{
    return guarded([&] {
        if (! rule_spec || ! out)
            throw Error(Status::usage, "null argument");
        auto rule = parse_rule_spec(rule_spec);
        *out = new dc_view{materialize_prefix(rule, n)};
        return Status::ok;
    });
}

int dc_view_load(const char * path, dc_view ** out)
{
    return guarded([&] {
        if (! path || ! out)
            throw Error(Status::usage, "null argument");
        *out = new dc_view{load_view_file(path)};
        return Status::ok;
    });
}

int dc_view_save(const dc_view * view, const char * path)
{
    return guarded([&] {
        if (! view || ! path)
            throw Error(Status::usage, "null argument");
        save_view_file(view->view, path);
        return Status::ok;
    });
}

void dc_view_free(dc_view * view)
{
    delete view;
}

int dc_longest(const dc_view * view, int colour, int depth_cap, char ** out)
{
    return guarded([&] {
        if (! view || ! out)
            throw Error(Status::usage, "null argument");
        SearchBudget budget;
        if (depth_cap > 0)
            budget.depth_cap = depth_cap;
        auto path = longest_mono_path_exact(view->view, colour, budget);
        *out = copy_out(path_to_line(path) + "\nlength " + std::to_string(path.length()) + "\n");
        return Status::ok;
    });
}

int dc_partition(const dc_view * view, int colour, int cap, char ** out)
{
    return guarded([&] {
        if (! view || ! out)
            throw Error(Status::usage, "null argument");
        *out = copy_out(partition_to_lines(level_partition(view->view, colour, cap)));
        return Status::ok;
    });
}

int dc_greedy(const dc_view * view, int colour, int target_level, int cap, char ** out)
{
    return guarded([&] {
        if (! view || ! out)
            throw Error(Status::usage, "null argument");
        auto partition = red_levels(view->view, cap);
        auto sets = partition.level_sets();
        if (target_level < 0 || target_level >= static_cast<int>(sets.size()) || sets[target_level].empty())
            throw Error(Status::usage, "level " + std::to_string(target_level) + " is empty");
        auto result = greedy_mono_path(view->view, colour, sets[target_level]);
        std::string text = path_to_line(result.path) + "\nskipped :";
        for (auto v : result.skipped)
            text += " " + std::to_string(v);
        *out = copy_out(text + "\n");
        return Status::ok;
    });
}

int dc_density(const dc_view * view, const char * set_spec, int cap, uint64_t window, char ** out)
{
    return guarded([&] {
        if (! view || ! set_spec || ! out)
            throw Error(Status::usage, "null argument");
        auto n = static_cast<Vertex>(view->view.size());
        std::string spec{set_spec};
        std::vector<Vertex> members;
        if (spec.rfind("level:", 0) == 0) {
            int level = std::stoi(spec.substr(6));
            auto sets = red_levels(view->view, cap).level_sets();
            if (level < 0 || level >= static_cast<int>(sets.size()))
                throw Error(Status::usage, "level " + std::to_string(level) + " is empty");
            members = sets[level];
        }
        else if (spec.rfind("path-file:", 0) == 0) {
            std::ifstream in{spec.substr(10)};
            if (! in)
                throw Error(Status::io, "cannot open '" + spec.substr(10) + "'");
            std::string line;
            std::getline(in, line);
            members = path_from_line(line).vertices;
        }
        else
            throw Error(Status::usage, "set-from must be level:I or path-file:F");

        auto p = profile(members, n);
        Vertex start = window > 0 ? window : std::max<Vertex>(1, n / 2);
        auto estimate = upper_density_estimate(p, start);
        *out = copy_out("upper_density " + estimate.str() + " window_start " + std::to_string(start) + "\n");
        return Status::ok;
    });
}

int dc_detect(const dc_view * view, int r, int max_exceptional, char ** out)
{
    return guarded([&] {
        if (! view || ! out)
            throw Error(Status::usage, "null argument");
        try {
            auto structure = detect_cr_structure(view->view, r, max_exceptional);
            *out = copy_out(structure_to_lines(structure));
            return Status::ok;
        }
        catch (const NotCrError & e) {
            *out = copy_out("not-c_r residual_violations " + std::to_string(e.residual_violations) + "\n");
            throw;
        }
    });
}

int dc_cover(const dc_view * view, int colour, int exact, char ** out)
{
    return guarded([&] {
        if (! view || ! out)
            throw Error(Status::usage, "null argument");
        auto cover = exact ? min_path_cover_exact(view->view, colour) : greedy_path_cover(view->view, colour);
        *out = copy_out(cover_to_lines(cover));
        return Status::ok;
    });
}

int dc_conjecture(int r, uint64_t n, int trials, uint64_t seed, char ** out)
{
    return guarded([&] {
        if (! out)
            throw Error(Status::usage, "null argument");
        auto report = conjecture_harness(r, n, trials, seed);
        *out = copy_out(report.to_lines());
        return Status::ok;
    });
}

int dc_verify(const char * suite, uint64_t n, char ** out)
{
    return guarded([&] {
        if (! suite || ! out)
            throw Error(Status::usage, "null argument");
        auto result = verify_suite(suite, n);
        *out = copy_out(result.log);
        return result.ok ? Status::ok : Status::negative;
    });
}

const char * dc_last_error(void)
{
    return last_error.c_str();
}

void dc_string_free(char * s)
{
    delete[] s;
}

}
