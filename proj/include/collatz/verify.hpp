#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "collatz/natural.hpp"

namespace collatz {

struct Mismatch {
    Natural input;
    std::uint64_t fast_stopping_time = 0;
    std::uint64_t baseline_stopping_time = 0;
};

// Input whose computation ran out of step budget. Reported separately from
// mismatches; the run continues past it.
struct BudgetIncident {
    Natural input;
};

struct VerifyReport {
    Natural range_lo;
    Natural range_hi;
    std::uint64_t checked = 0;  // inputs fully verified; excludes incidents
    std::vector<Mismatch> mismatches;              // ascending by input
    std::vector<BudgetIncident> budget_incidents;  // ascending by input
    std::uint64_t max_stopping_time = 0;
    Natural argmax_input;  // smallest input attaining the max
    double elapsed_seconds = 0.0;
    bool complete = true;  // false when paused at a chunk boundary

    bool ok() const { return mismatches.empty() && budget_incidents.empty(); }
};

struct VerifyOptions {
    std::uint64_t chunk_size = 4096;
    std::uint64_t step_budget = 10'000'000;  // per-input loop-iteration cap
    unsigned workers = 0;                    // 0 = machine parallelism
    std::string checkpoint_path;             // empty = no checkpointing
    std::uint64_t max_chunks = 0;  // pause after merging this many (0 = run to the end)
    bool baseline = true;          // cross-check against the bitwise algorithm

    // Window scans default to fast-only: above word-sized bases the
    // baseline's per-step cost dominates without adding coverage.
    static VerifyOptions window_defaults();
};

// Dual-algorithm verification of every n in [lo, hi]. Aggregates are
// independent of chunk decomposition and worker count; chunks merge in index
// order. With a checkpoint path, an interrupted run resumes at the next
// unmerged chunk and ends in the same report as an uninterrupted one
// (elapsed_seconds aside).
VerifyReport verify_range(const Natural& lo, const Natural& hi,
                          const VerifyOptions& opts = {});

// Scan of [2^base_exponent, 2^base_exponent + offset_count].
VerifyReport verify_window(std::uint64_t base_exponent, std::uint64_t offset_count,
                           const VerifyOptions& opts = VerifyOptions::window_defaults());

}  // namespace collatz
