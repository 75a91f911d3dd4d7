#include <dcolour.h>

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

namespace {

struct ViewDeleter {
    void operator()(dc_view * v) const { dc_view_free(v); }
};
using ViewPtr = std::unique_ptr<dc_view, ViewDeleter>;

struct StringDeleter {
    void operator()(char * s) const { dc_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int fail(int status)
{
    std::fprintf(stderr, "error: %s\n", dc_last_error());
    return status;
}

ViewPtr load(const std::string & path, int & status)
{
    dc_view * raw = nullptr;
    status = dc_view_load(path.c_str(), &raw);
    return ViewPtr{raw};
}

int emit(int status, const StringPtr & text)
{
    if (text)
        std::fputs(text.get(), stdout);
    if (status != DC_OK && ! text)
        return fail(status);
    if (status != DC_OK)
        std::fprintf(stderr, "error: %s\n", dc_last_error());
    return status;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"edge-coloured digraph analysis"};
    app.require_subcommand(1);

    std::string rule_spec, in_file, out_file, set_from, suite = "all";
    std::uint64_t n = 0, window = 0, seed = 0;
    int colour = 1, depth = 0, cap = 8, target_level = 0, r = 2, max_u = 16, trials = 10;
    bool use_greedy = false, use_exact = false;

    auto * gen = app.add_subcommand("gen", "write a colouring file for a rule");
    gen->add_option("--rule", rule_spec, "density-zero | extremal:R | product:R1,R2,... | random:K:SEED")->required();
    gen->add_option("--n", n, "prefix size")->required();
    gen->add_option("--out", out_file, "output file")->required();

    auto * longest = app.add_subcommand("longest", "exact longest monochromatic directed path");
    longest->add_option("--in", in_file)->required();
    longest->add_option("--colour", colour)->required();
    longest->add_option("--depth", depth, "depth cap for the DFS mode (0 = subset DP)");

    auto * partition = app.add_subcommand("partition", "level partition for a colour");
    partition->add_option("--in", in_file)->required();
    partition->add_option("--colour", colour)->required();
    partition->add_option("--cap", cap, "level cap")->required();

    auto * greedy = app.add_subcommand("greedy", "greedy monochromatic path over a red-level class");
    greedy->add_option("--in", in_file)->required();
    greedy->add_option("--colour", colour)->required();
    greedy->add_option("--target-level", target_level)->required();
    greedy->add_option("--cap", cap, "red level cap");

    auto * density = app.add_subcommand("density", "windowed upper-density estimate of a vertex set");
    density->add_option("--in", in_file)->required();
    density->add_option("--set-from", set_from, "level:I or path-file:F")->required();
    density->add_option("--window", window, "window start (default n/2)");
    density->add_option("--cap", cap, "red level cap for level:I");

    auto * detect = app.add_subcommand("detect", "recover the extremal structure up to a finite set");
    detect->add_option("--in", in_file)->required();
    detect->add_option("--r", r)->required();
    detect->add_option("--max-u", max_u, "largest exceptional set to try");

    auto * cover = app.add_subcommand("cover", "vertex-disjoint monochromatic path cover");
    cover->add_option("--in", in_file)->required();
    cover->add_option("--colour", colour)->required();
    cover->add_flag("--exact", use_exact, "exact minimum cover");
    cover->add_flag("--greedy", use_greedy, "greedy upper bound");

    auto * conjecture = app.add_subcommand("conjecture", "random-colouring cover exploration");
    conjecture->add_option("--r", r)->required();
    conjecture->add_option("--n", n)->required();
    conjecture->add_option("--trials", trials)->required();
    conjecture->add_option("--seed", seed)->required();

    auto * verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("--suite", suite, "density-zero | extremal | product | claims | all")->required();
    verify->add_option("--n", n, "suite size")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return DC_USAGE;
    }

    if (gen->parsed()) {
        dc_view * raw = nullptr;
        if (auto status = dc_view_generate(rule_spec.c_str(), n, &raw))
            return fail(status);
        ViewPtr view{raw};
        if (auto status = dc_view_save(view.get(), out_file.c_str()))
            return fail(status);
        return DC_OK;
    }

    if (conjecture->parsed()) {
        char * text = nullptr;
        auto status = dc_conjecture(r, n, trials, seed, &text);
        return emit(status, StringPtr{text});
    }

    if (verify->parsed()) {
        char * text = nullptr;
        auto status = dc_verify(suite.c_str(), n, &text);
        return emit(status, StringPtr{text});
    }

    int status = 0;
    auto view = load(in_file, status);
    if (! view)
        return fail(status);

    char * text = nullptr;
    if (longest->parsed())
        status = dc_longest(view.get(), colour, depth, &text);
    else if (partition->parsed())
        status = dc_partition(view.get(), colour, cap, &text);
    else if (greedy->parsed())
        status = dc_greedy(view.get(), colour, target_level, cap, &text);
    else if (density->parsed())
        status = dc_density(view.get(), set_from.c_str(), cap, window, &text);
    else if (detect->parsed())
        status = dc_detect(view.get(), r, max_u, &text);
    else if (cover->parsed())
        status = dc_cover(view.get(), colour, use_exact || ! use_greedy, &text);
    return emit(status, StringPtr{text});
}
