#include "collatz/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "collatz/stopping_time.hpp"

namespace collatz {

namespace {

struct BlockAggregate {
    std::uint64_t best = UINT64_MAX;
    std::uint64_t worst = 0;
    std::uint64_t sum = 0;
};

BlockAggregate scan_block(std::uint64_t lo, std::uint64_t hi) {
    BlockAggregate agg;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        const std::uint64_t iters = fast_loop_iterations(n);
        agg.best = std::min(agg.best, iters);
        agg.worst = std::max(agg.worst, iters);
        agg.sum += iters;
    }
    return agg;
}

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace

RangeStats range_stats(std::uint64_t limit, unsigned workers) {
    if (limit < 2) throw std::invalid_argument("range_stats requires limit >= 2");
    const std::uint64_t lo = 2;
    const std::uint64_t count = limit - lo + 1;
    const unsigned w = static_cast<unsigned>(
        std::min<std::uint64_t>(resolve_workers(workers), count));

    std::vector<BlockAggregate> blocks(w);
    if (w == 1) {
        blocks[0] = scan_block(lo, limit);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(w);
        for (unsigned i = 0; i < w; ++i) {
            const std::uint64_t block_lo = lo + count * i / w;
            const std::uint64_t block_hi = lo + count * (i + 1) / w - 1;
            pool.emplace_back(
                [&blocks, i, block_lo, block_hi] { blocks[i] = scan_block(block_lo, block_hi); });
        }
        for (auto& t : pool) t.join();
    }

    BlockAggregate total;
    for (const BlockAggregate& b : blocks) {
        total.best = std::min(total.best, b.best);
        total.worst = std::max(total.worst, b.worst);
        total.sum += b.sum;
    }

    RangeStats stats;
    stats.input_count = limit;
    stats.best = total.best;
    stats.worst = total.worst;
    stats.average = static_cast<double>(total.sum) / static_cast<double>(count);
    return stats;
}

std::vector<RangeStats> doubling_schedule(std::uint64_t start, std::uint64_t steps,
                                          unsigned workers) {
    if (start < 2) throw std::invalid_argument("doubling_schedule requires start >= 2");
    if (steps < 1) throw std::invalid_argument("doubling_schedule requires steps >= 1");
    std::vector<RangeStats> rows;
    rows.reserve(steps);
    std::uint64_t limit = start;
    for (std::uint64_t i = 0; i < steps; ++i) {
        rows.push_back(range_stats(limit, workers));
        limit *= 2;
    }
    return rows;
}

double LinearLogFit::eval(double n) const { return a * std::log2(n) + b; }

LinearLogFit fit_two_point(FitPoint p1, FitPoint p2) {
    if (!(p1.n > 1.0) || !(p2.n > 1.0)) {
        throw std::invalid_argument("fit_two_point requires abscissae > 1");
    }
    if (p1.n == p2.n) throw std::invalid_argument("fit_two_point requires distinct abscissae");
    LinearLogFit fit;
    fit.a = (p2.f - p1.f) / (std::log2(p2.n) - std::log2(p1.n));
    fit.b = p1.f - fit.a * std::log2(p1.n);
    return fit;
}

double improvement_percent(std::uint64_t proposed, std::uint64_t benchmark) {
    if (benchmark == 0) throw std::invalid_argument("improvement_percent requires benchmark > 0");
    return (1.0 - static_cast<double>(proposed) / static_cast<double>(benchmark)) * 100.0;
}

std::vector<ComparisonRow> comparison_table(std::span<const std::uint64_t> exponents) {
    std::vector<ComparisonRow> rows;
    rows.reserve(exponents.size());
    for (const std::uint64_t e : exponents) {
        if (e < 2) throw std::invalid_argument("comparison_table requires exponents >= 2");
        Natural input = Natural::pow2(e);
        input -= 1;
        const StopReport report = stop_time_fast(input);
        ComparisonRow row;
        row.input_label = "2^" + std::to_string(e) + "-1";
        row.stopping_time = report.stopping_time - 1;  // steps, the table's unit
        row.iters_ren = row.stopping_time;
        row.iters_bitwise = row.stopping_time;
        row.iters_proposed = report.loop_iterations;
        row.impr_ren = improvement_percent(row.iters_proposed, row.iters_ren);
        row.impr_bitwise = improvement_percent(row.iters_proposed, row.iters_bitwise);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace collatz
