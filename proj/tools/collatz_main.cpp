#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "collatz/cli_commands.hpp"

namespace {

using collatz::cli::Format;

void add_format_option(CLI::App* cmd, std::string& target) {
    cmd->add_option("--format", target, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collatz stopping-time toolkit"};
    app.require_subcommand(1);

    std::string format = "text";

    collatz::cli::StoptimeArgs stoptime;
    auto* cmd_stoptime = app.add_subcommand("stoptime", "Stopping time of one input");
    cmd_stoptime->add_option("expr", stoptime.expr, "Input, e.g. 20480 or 2^100-1")->required();
    cmd_stoptime->add_option("--algo", stoptime.algo, "fast, bitwise or oracle")
        ->check(CLI::IsMember({"fast", "bitwise", "oracle"}));
    add_format_option(cmd_stoptime, format);

    collatz::cli::ItersArgs iters;
    auto* cmd_iters = app.add_subcommand("iters", "Full instrumented report for one input");
    cmd_iters->add_option("expr", iters.expr, "Input expression")->required();
    cmd_iters->add_option("--algo", iters.algo, "fast, bitwise or oracle")
        ->check(CLI::IsMember({"fast", "bitwise", "oracle"}));
    add_format_option(cmd_iters, format);

    collatz::cli::EncodeArgs encode;
    auto* cmd_encode = app.add_subcommand("encode", "Code-word encoding of the sequence");
    cmd_encode->add_option("expr", encode.expr, "Input expression")->required();
    cmd_encode->add_option("--budget", encode.step_budget, "Step budget");
    add_format_option(cmd_encode, format);

    collatz::cli::TreeArgs tree;
    auto* cmd_tree = app.add_subcommand("tree", "Materialize the inverse tree");
    cmd_tree->add_option("--root", tree.root, "Tree root (default 1)");
    cmd_tree->add_option("--max", tree.max_value, "Largest node value")->required();
    cmd_tree->add_option("--format", tree.format, "dot, csv or json")
        ->check(CLI::IsMember({"dot", "csv", "json", "text"}));

    collatz::cli::StatsArgs stats;
    auto* cmd_stats = app.add_subcommand("stats", "Loop-iteration statistics over [2, limit]");
    cmd_stats->add_option("limit", stats.limit, "Range limit")->required();
    cmd_stats->add_option("--doublings", stats.doublings,
                          "Rows for limit, 2*limit, ... (default 1)");
    cmd_stats->add_option("--workers", stats.workers, "Worker threads (0 = all cores)");
    add_format_option(cmd_stats, format);

    collatz::cli::FitArgs fit;
    auto* cmd_fit = app.add_subcommand("fit", "Two-point fit of f(n) = a*log2(n) + b");
    cmd_fit->add_option("n1", fit.n1)->required();
    cmd_fit->add_option("f1", fit.f1)->required();
    cmd_fit->add_option("n2", fit.n2)->required();
    cmd_fit->add_option("f2", fit.f2)->required();
    add_format_option(cmd_fit, format);

    collatz::cli::CompareArgs compare;
    auto* cmd_compare = app.add_subcommand("compare", "Algorithm comparison on 2^e - 1 inputs");
    cmd_compare->add_option("--exponents", compare.exponents, "Exponent list, e.g. 100,500")
        ->required()
        ->delimiter(',');
    add_format_option(cmd_compare, format);

    collatz::cli::VerifyArgs verify;
    auto* cmd_verify = app.add_subcommand("verify", "Dual-algorithm range verification");
    auto* lo_opt = cmd_verify->add_option("--lo", verify.lo, "Range start");
    cmd_verify->add_option("--hi", verify.hi, "Range end")->needs(lo_opt);
    auto* window_opt =
        cmd_verify->add_option("--window", verify.window_exponent,
                               "Window mode: scan [2^E, 2^E + offsets]");
    cmd_verify->add_option("--offsets", verify.window_offsets, "Window width")->needs(window_opt);
    window_opt->excludes(lo_opt);
    cmd_verify->add_option("--chunk-size", verify.options.chunk_size, "Inputs per chunk");
    cmd_verify->add_option("--budget", verify.options.step_budget,
                           "Per-input loop-iteration budget");
    cmd_verify->add_option("--workers", verify.options.workers, "Worker threads (0 = all cores)");
    cmd_verify->add_option("--checkpoint", verify.options.checkpoint_path,
                           "Checkpoint file for resumable runs");
    cmd_verify->add_option("--max-chunks", verify.options.max_chunks,
                           "Pause after this many chunks (0 = run to completion)");
    auto* baseline_flag = cmd_verify->add_flag("--baseline,!--no-baseline",
                                               verify.options.baseline,
                                               "Cross-check against the bitwise baseline");
    add_format_option(cmd_verify, format);

    collatz::cli::BenchArgs bench;
    auto* cmd_bench = app.add_subcommand("bench", "Wall-time comparison of both algorithms");
    cmd_bench->add_option("--suite", bench.suite,
                          "small_random, large_random, powers_of_two, multiples_of_three, primes")
        ->required();
    cmd_bench->add_option("--count", bench.count, "Number of inputs (default 100)");
    cmd_bench->add_option("--seed", bench.seed, "Input-stream seed (default 1)");
    cmd_bench->add_option("--reps", bench.repetitions, "Timed repetitions per input (>= 3)");
    add_format_option(cmd_bench, format);

    CLI11_PARSE(app, argc, argv);

    try {
        const Format fmt = collatz::cli::format_from_name(format);
        if (cmd_stoptime->parsed()) {
            stoptime.format = fmt;
            return collatz::cli::cmd_stoptime(stoptime, std::cout);
        }
        if (cmd_iters->parsed()) {
            iters.format = fmt;
            return collatz::cli::cmd_iters(iters, std::cout);
        }
        if (cmd_encode->parsed()) {
            encode.format = fmt;
            return collatz::cli::cmd_encode(encode, std::cout);
        }
        if (cmd_tree->parsed()) {
            return collatz::cli::cmd_tree(tree, std::cout);
        }
        if (cmd_stats->parsed()) {
            stats.format = fmt;
            return collatz::cli::cmd_stats(stats, std::cout);
        }
        if (cmd_fit->parsed()) {
            fit.format = fmt;
            return collatz::cli::cmd_fit(fit, std::cout);
        }
        if (cmd_compare->parsed()) {
            compare.format = fmt;
            return collatz::cli::cmd_compare(compare, std::cout);
        }
        if (cmd_verify->parsed()) {
            verify.format = fmt;
            verify.window_mode = window_opt->count() > 0;
            verify.baseline_set = baseline_flag->count() > 0;
            if (!verify.window_mode && (verify.lo.empty() || verify.hi.empty())) {
                std::cerr << "verify needs either --lo/--hi or --window/--offsets\n";
                return 1;
            }
            if (verify.window_mode && cmd_verify->count("--offsets") == 0) {
                std::cerr << "verify --window needs --offsets\n";
                return 1;
            }
            return collatz::cli::cmd_verify(verify, std::cout);
        }
        if (cmd_bench->parsed()) {
            bench.format = fmt;
            return collatz::cli::cmd_bench(bench, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
