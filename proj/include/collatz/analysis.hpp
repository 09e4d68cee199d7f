#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace collatz {

// Loop-iteration statistics of the fast algorithm over n in [2, limit].
// n = 1 runs zero loop bodies and is excluded so that best stays 1;
// input_count keeps the range label (the upper bound), not the cardinality.
struct RangeStats {
    std::uint64_t input_count = 0;
    std::uint64_t best = 0;
    double average = 0.0;
    std::uint64_t worst = 0;
};

// workers = 0 picks the machine parallelism. The aggregation is an exact
// integer sum merged per block, so the result is identical for any worker
// count.
RangeStats range_stats(std::uint64_t limit, unsigned workers = 0);

// range_stats at start, 2*start, ..., start * 2^(steps-1).
std::vector<RangeStats> doubling_schedule(std::uint64_t start, std::uint64_t steps,
                                          unsigned workers = 0);

// Coefficients of f(n) = a * log2(n) + b.
struct LinearLogFit {
    double a = 0.0;
    double b = 0.0;

    double eval(double n) const;
};

struct FitPoint {
    double n = 0.0;
    double f = 0.0;
};

// Two-point interpolation; rejects equal abscissae and n <= 1.
LinearLogFit fit_two_point(FitPoint p1, FitPoint p2);

// (1 - proposed / benchmark) * 100, full precision. Rejects benchmark = 0.
double improvement_percent(std::uint64_t proposed, std::uint64_t benchmark);

// One row per exponent e, computed for the input 2^e - 1. The row follows
// the convention of the comparison it reproduces: stopping_time here counts
// sequence steps (StopReport.stopping_time - 1), the unit both baselines
// charge once per position. The bitwise loop body count and the encoding
// baseline's U + D both equal that number, so iters_ren = iters_bitwise =
// stopping_time.
struct ComparisonRow {
    std::string input_label;
    std::uint64_t stopping_time = 0;
    std::uint64_t iters_ren = 0;
    std::uint64_t iters_bitwise = 0;
    std::uint64_t iters_proposed = 0;
    double impr_ren = 0.0;
    double impr_bitwise = 0.0;
};

std::vector<ComparisonRow> comparison_table(std::span<const std::uint64_t> exponents);

}  // namespace collatz
