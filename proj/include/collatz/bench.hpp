#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "collatz/natural.hpp"

namespace collatz {

enum class BenchSuite {
    small_random,
    large_random,
    powers_of_two,
    multiples_of_three,
    primes,
};

const char* bench_suite_name(BenchSuite suite);
BenchSuite bench_suite_from_name(std::string_view name);  // throws std::invalid_argument

struct BenchRecord {
    std::string label;       // "<suite>[<index>]"
    std::string input_expr;  // decimal, or "2^j" for the power suite
    std::string algorithm;   // "fast" or "bitwise"
    double wall_seconds = 0.0;  // median of the timed repetitions
    std::uint64_t loop_iterations = 0;
    std::uint64_t repetitions = 0;
};

// Inputs are drawn from a seed-keyed deterministic stream: the same seed
// always produces the same input list on any platform. Each input is timed
// for both algorithms with one warm-up run plus `repetitions` measured runs
// (median reported). repetitions must be >= 3.
std::vector<BenchRecord> run_bench(BenchSuite suite, std::uint64_t count, std::uint64_t seed,
                                   std::uint64_t repetitions = 5);

// The input list a run_bench call would time, for reproducibility checks.
std::vector<Natural> bench_inputs(BenchSuite suite, std::uint64_t count, std::uint64_t seed);

}  // namespace collatz
