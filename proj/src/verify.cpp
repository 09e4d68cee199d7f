#include "collatz/verify.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "collatz/stopping_time.hpp"

namespace collatz {

namespace {

constexpr std::uint64_t kMaxRangeSpan = std::uint64_t{1} << 62;

struct ChunkResult {
    std::uint64_t checked = 0;
    std::uint64_t max_stopping_time = 0;
    Natural argmax_input;  // meaningful only when checked > 0
    std::vector<Mismatch> mismatches;
    std::vector<BudgetIncident> incidents;
};

struct RunGeometry {
    Natural lo;
    Natural hi;
    std::uint64_t total = 0;  // number of inputs
    std::uint64_t chunks = 0;
};

struct Progress {
    std::uint64_t next_chunk_index = 0;
    std::uint64_t checked = 0;
    std::uint64_t max_stopping_time = 0;
    Natural argmax_input;
    std::vector<Mismatch> mismatches;
    std::vector<BudgetIncident> incidents;
};

ChunkResult run_chunk(const Natural& lo, std::uint64_t first_offset, std::uint64_t count,
                      const VerifyOptions& opts) {
    ChunkResult out;
    Natural n = lo;
    n += first_offset;
    for (std::uint64_t i = 0; i < count; ++i, n += 1) {
        const auto fast = try_stop_time_fast(n, opts.step_budget);
        if (!fast) {
            out.incidents.push_back({n});
            continue;
        }
        if (opts.baseline) {
            const auto base = try_stop_time_bitwise(n, opts.step_budget);
            if (!base) {
                out.incidents.push_back({n});
                continue;
            }
            if (base->stopping_time != fast->stopping_time) {
                out.mismatches.push_back({n, fast->stopping_time, base->stopping_time});
            }
        }
        ++out.checked;
        if (fast->stopping_time > out.max_stopping_time) {
            out.max_stopping_time = fast->stopping_time;
            out.argmax_input = n;
        }
    }
    return out;
}

void merge_chunk(Progress& p, ChunkResult&& c) {
    ++p.next_chunk_index;
    p.checked += c.checked;
    if (c.checked > 0 && c.max_stopping_time > p.max_stopping_time) {
        p.max_stopping_time = c.max_stopping_time;
        p.argmax_input = std::move(c.argmax_input);
    }
    for (auto& m : c.mismatches) p.mismatches.push_back(std::move(m));
    for (auto& i : c.incidents) p.incidents.push_back(std::move(i));
}

// --- checkpoint file ------------------------------------------------------
//
// Single human-inspectable text file, rewritten atomically (tmp + rename)
// after every merged chunk.

constexpr const char* kCheckpointMagic = "collatz-verify-checkpoint v1";

void write_checkpoint(const std::string& path, const RunGeometry& geo,
                      const VerifyOptions& opts, const Progress& p) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
        out << kCheckpointMagic << '\n';
        out << "range_lo " << geo.lo.to_decimal() << '\n';
        out << "range_hi " << geo.hi.to_decimal() << '\n';
        out << "chunk_size " << opts.chunk_size << '\n';
        out << "step_budget " << opts.step_budget << '\n';
        out << "baseline " << (opts.baseline ? 1 : 0) << '\n';
        out << "chunk_count " << geo.chunks << '\n';
        out << "next_chunk_index " << p.next_chunk_index << '\n';
        out << "checked " << p.checked << '\n';
        out << "max_stopping_time " << p.max_stopping_time << '\n';
        out << "argmax_input " << (p.checked > 0 ? p.argmax_input.to_decimal() : "-") << '\n';
        out << "mismatch_count " << p.mismatches.size() << '\n';
        for (const auto& m : p.mismatches) {
            out << "mismatch " << m.input.to_decimal() << ' ' << m.fast_stopping_time << ' '
                << m.baseline_stopping_time << '\n';
        }
        out << "incident_count " << p.incidents.size() << '\n';
        for (const auto& i : p.incidents) {
            out << "incident " << i.input.to_decimal() << '\n';
        }
        out << "end\n";
        out.flush();
        if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("cannot replace checkpoint: " + path);
    }
}

std::string expect_field(std::istream& in, const std::string& key) {
    std::string k;
    if (!(in >> k) || k != key) {
        throw std::runtime_error("malformed checkpoint: expected " + key);
    }
    std::string v;
    if (!(in >> v)) throw std::runtime_error("malformed checkpoint: missing value for " + key);
    return v;
}

std::uint64_t expect_u64(std::istream& in, const std::string& key) {
    return std::stoull(expect_field(in, key));
}

Progress load_checkpoint(const std::string& path, const RunGeometry& geo,
                         const VerifyOptions& opts) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read checkpoint: " + path);
    std::string magic;
    std::getline(in, magic);
    if (magic != kCheckpointMagic) throw std::runtime_error("unrecognized checkpoint format");

    const auto check = [](bool ok, const char* what) {
        if (!ok) {
            throw std::runtime_error(std::string("checkpoint does not match this run: ") + what);
        }
    };
    check(Natural::from_decimal(expect_field(in, "range_lo")) == geo.lo, "range_lo");
    check(Natural::from_decimal(expect_field(in, "range_hi")) == geo.hi, "range_hi");
    check(expect_u64(in, "chunk_size") == opts.chunk_size, "chunk_size");
    check(expect_u64(in, "step_budget") == opts.step_budget, "step_budget");
    check(expect_u64(in, "baseline") == (opts.baseline ? 1u : 0u), "baseline");
    check(expect_u64(in, "chunk_count") == geo.chunks, "chunk_count");

    Progress p;
    p.next_chunk_index = expect_u64(in, "next_chunk_index");
    check(p.next_chunk_index <= geo.chunks, "next_chunk_index");
    p.checked = expect_u64(in, "checked");
    p.max_stopping_time = expect_u64(in, "max_stopping_time");
    const std::string argmax = expect_field(in, "argmax_input");
    if (argmax != "-") p.argmax_input = Natural::from_decimal(argmax);
    const std::uint64_t mismatches = expect_u64(in, "mismatch_count");
    for (std::uint64_t i = 0; i < mismatches; ++i) {
        Mismatch m;
        m.input = Natural::from_decimal(expect_field(in, "mismatch"));
        if (!(in >> m.fast_stopping_time >> m.baseline_stopping_time)) {
            throw std::runtime_error("malformed checkpoint: mismatch row");
        }
        p.mismatches.push_back(std::move(m));
    }
    const std::uint64_t incidents = expect_u64(in, "incident_count");
    for (std::uint64_t i = 0; i < incidents; ++i) {
        BudgetIncident inc;
        inc.input = Natural::from_decimal(expect_field(in, "incident"));
        p.incidents.push_back(std::move(inc));
    }
    std::string tail;
    if (!(in >> tail) || tail != "end") throw std::runtime_error("malformed checkpoint: no end");
    return p;
}

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace

VerifyOptions VerifyOptions::window_defaults() {
    VerifyOptions opts;
    opts.baseline = false;
    return opts;
}

VerifyReport verify_range(const Natural& lo, const Natural& hi, const VerifyOptions& opts) {
    const auto started = std::chrono::steady_clock::now();
    if (lo.is_zero()) throw std::invalid_argument("verify_range requires lo >= 1");
    if (hi < lo) throw std::invalid_argument("verify_range requires lo <= hi");
    if (opts.chunk_size == 0) throw std::invalid_argument("verify_range requires chunk_size >= 1");
    if (opts.step_budget == 0) throw std::invalid_argument("verify_range requires step_budget >= 1");

    RunGeometry geo;
    geo.lo = lo;
    geo.hi = hi;
    {
        Natural span = hi;
        span -= lo;
        if (!span.fits_u64() || span.to_u64() >= kMaxRangeSpan) {
            throw std::invalid_argument("verify_range span too large");
        }
        geo.total = span.to_u64() + 1;
    }
    geo.chunks = (geo.total + opts.chunk_size - 1) / opts.chunk_size;

    Progress progress;
    const bool checkpointing = !opts.checkpoint_path.empty();
    if (checkpointing && std::filesystem::exists(opts.checkpoint_path)) {
        progress = load_checkpoint(opts.checkpoint_path, geo, opts);
    }

    const std::uint64_t first_chunk = progress.next_chunk_index;
    const std::uint64_t stop_chunk =
        opts.max_chunks == 0 ? geo.chunks
                             : std::min(geo.chunks, first_chunk + opts.max_chunks);

    if (first_chunk < stop_chunk) {
        std::atomic<std::uint64_t> next{first_chunk};
        std::map<std::uint64_t, ChunkResult> pending;
        std::mutex mu;
        std::condition_variable cv;

        const auto worker = [&] {
            while (true) {
                const std::uint64_t idx = next.fetch_add(1);
                if (idx >= stop_chunk) return;
                const std::uint64_t first_offset = idx * opts.chunk_size;
                const std::uint64_t count =
                    std::min(opts.chunk_size, geo.total - first_offset);
                ChunkResult result = run_chunk(geo.lo, first_offset, count, opts);
                {
                    std::lock_guard<std::mutex> lock(mu);
                    pending.emplace(idx, std::move(result));
                }
                cv.notify_one();
            }
        };

        const unsigned worker_count = static_cast<unsigned>(std::min<std::uint64_t>(
            resolve_workers(opts.workers), stop_chunk - first_chunk));
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (unsigned i = 0; i < worker_count; ++i) pool.emplace_back(worker);

        // Single-threaded merge in index order keeps every aggregate
        // independent of completion order.
        std::exception_ptr merge_error;
        for (std::uint64_t idx = first_chunk; idx < stop_chunk; ++idx) {
            ChunkResult result;
            {
                std::unique_lock<std::mutex> lock(mu);
                cv.wait(lock, [&] { return pending.count(idx) != 0; });
                result = std::move(pending.at(idx));
                pending.erase(idx);
            }
            merge_chunk(progress, std::move(result));
            if (checkpointing) {
                try {
                    write_checkpoint(opts.checkpoint_path, geo, opts, progress);
                } catch (...) {
                    merge_error = std::current_exception();
                    next.store(stop_chunk);  // stop handing out chunks
                    break;
                }
            }
        }
        for (auto& t : pool) t.join();
        if (merge_error) std::rethrow_exception(merge_error);
    }

    VerifyReport report;
    report.range_lo = geo.lo;
    report.range_hi = geo.hi;
    report.checked = progress.checked;
    report.mismatches = std::move(progress.mismatches);
    report.budget_incidents = std::move(progress.incidents);
    report.max_stopping_time = progress.max_stopping_time;
    report.argmax_input = std::move(progress.argmax_input);
    report.complete = progress.next_chunk_index == geo.chunks;
    if (report.complete && checkpointing) {
        std::error_code ec;
        std::filesystem::remove(opts.checkpoint_path, ec);
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

VerifyReport verify_window(std::uint64_t base_exponent, std::uint64_t offset_count,
                           const VerifyOptions& opts) {
    if (base_exponent < 1) throw std::invalid_argument("verify_window requires base_exponent >= 1");
    if (offset_count < 1) throw std::invalid_argument("verify_window requires offset_count >= 1");
    const Natural lo = Natural::pow2(base_exponent);
    Natural hi = lo;
    hi += offset_count;
    return verify_range(lo, hi, opts);
}

}  // namespace collatz
