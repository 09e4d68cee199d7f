#pragma once

#include <cstdint>
#include <optional>

#include "collatz/natural.hpp"

namespace collatz {

// Instrumented result of a stopping-time computation. stopping_time counts
// sequence terms from the input down to 1, both endpoints included.
//
// Invariants (for every producer):
//   stopping_time  = odd_steps + division_steps + 1
//   odd_count      = odd_steps + 1
//   loop_iterations (fast) = 2k + 1 for even inputs, 2k for odd inputs > 1,
//                            0 for input 1, with k = sub_branches
//   loop_iterations (bitwise, oracle) = stopping_time - 1
struct StopReport {
    Natural input;
    std::uint64_t stopping_time = 0;
    std::uint64_t loop_iterations = 0;
    std::uint64_t odd_steps = 0;       // U: 3n+1 computations
    std::uint64_t division_steps = 0;  // D: halvings
    std::uint64_t odd_count = 0;       // N_odd: odd terms incl. the final 1
    std::uint64_t sub_branches = 0;    // k: odd terms > 1 encountered
};

// 3n + 1. Rejects even n.
Natural odd_step(const Natural& n);

struct OddRootDecomposition {
    Natural odd_root;
    std::uint64_t exponent;  // 2-adic valuation
};

// n = odd_root * 2^exponent with odd_root odd. Rejects n = 0.
OddRootDecomposition strip_trailing_zeros(const Natural& n);

// Tree-walking algorithm: one loop body per 3n+1 or per full trailing-zero
// strip. Rejects n = 0.
StopReport stop_time_fast(const Natural& n);

// Baseline: one loop body per sequence step, n >> 1 or (n << 1) + n + 1.
StopReport stop_time_bitwise(const Natural& n);

// Ground-truth for tests: literal divide-by-2 / 3n+1 arithmetic, no bit
// tricks, independent of Natural's limb machinery.
StopReport stop_time_oracle(const Natural& n);

// Budgeted variants for range verification: nullopt once loop_budget bodies
// have run without reaching 1. allow_u64_path=false forces the
// arbitrary-precision route (the two paths are bit-exact; tests compare them).
std::optional<StopReport> try_stop_time_fast(const Natural& n, std::uint64_t loop_budget,
                                             bool allow_u64_path = true);
std::optional<StopReport> try_stop_time_bitwise(const Natural& n, std::uint64_t loop_budget,
                                                bool allow_u64_path = true);

// Loop-iteration count of the fast algorithm for a word-sized input, without
// materializing a report. Bit-exact with stop_time_fast; used by range scans.
std::uint64_t fast_loop_iterations(std::uint64_t n);

}  // namespace collatz
