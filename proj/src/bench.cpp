#include "collatz/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "collatz/stopping_time.hpp"

namespace collatz {

namespace {

// Seed-keyed stream with a fixed cross-platform definition.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] by rejection.
    std::uint64_t bounded(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + v % span;
    }
};

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1u) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// Deterministic Miller-Rabin; this base set decides 64-bit inputs exactly.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (const std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                                  23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++r;
    }
    for (const std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                                  23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Natural random_wide(SplitMix64& rng, std::uint64_t bits) {
    Natural out;
    const std::uint64_t whole = bits / 64;
    for (std::uint64_t i = 0; i < whole; ++i) {
        out.shift_left(64);
        out += rng.next();
    }
    const unsigned rest = static_cast<unsigned>(bits % 64);
    if (rest != 0) {
        out.shift_left(rest);
        out += rng.next() >> (64 - rest);
    }
    // Pin the top bit so the value really has `bits` bits.
    Natural top = Natural::pow2(bits - 1);
    if (out < top) out += top;
    return out;
}

double median(std::vector<double>& samples) {
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

}  // namespace

const char* bench_suite_name(BenchSuite suite) {
    switch (suite) {
        case BenchSuite::small_random: return "small_random";
        case BenchSuite::large_random: return "large_random";
        case BenchSuite::powers_of_two: return "powers_of_two";
        case BenchSuite::multiples_of_three: return "multiples_of_three";
        case BenchSuite::primes: return "primes";
    }
    return "?";
}

BenchSuite bench_suite_from_name(std::string_view name) {
    for (const BenchSuite s :
         {BenchSuite::small_random, BenchSuite::large_random, BenchSuite::powers_of_two,
          BenchSuite::multiples_of_three, BenchSuite::primes}) {
        if (name == bench_suite_name(s)) return s;
    }
    throw std::invalid_argument("unknown bench suite: " + std::string(name));
}

std::vector<Natural> bench_inputs(BenchSuite suite, std::uint64_t count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("bench requires count >= 1");
    // Key the stream by suite so suites stay distinct under one seed.
    SplitMix64 rng{seed ^ (0x51ed270b07ull + static_cast<std::uint64_t>(suite) * 0x9e37ull)};
    std::vector<Natural> inputs;
    inputs.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        switch (suite) {
            case BenchSuite::small_random:
                inputs.emplace_back(rng.bounded(2, 1'000'000));
                break;
            case BenchSuite::large_random:
                inputs.push_back(random_wide(rng, rng.bounded(128, 512)));
                break;
            case BenchSuite::powers_of_two:
                inputs.push_back(Natural::pow2(rng.bounded(1, 2048)));
                break;
            case BenchSuite::multiples_of_three:
                inputs.emplace_back(3 * rng.bounded(1, 1'000'000));
                break;
            case BenchSuite::primes: {
                std::uint64_t candidate;
                do {
                    candidate = rng.bounded(1'000, 100'000'000);
                } while (!is_prime_u64(candidate));
                inputs.emplace_back(candidate);
                break;
            }
        }
    }
    return inputs;
}

std::vector<BenchRecord> run_bench(BenchSuite suite, std::uint64_t count, std::uint64_t seed,
                                   std::uint64_t repetitions) {
    if (repetitions < 3) throw std::invalid_argument("bench requires repetitions >= 3");
    const std::vector<Natural> inputs = bench_inputs(suite, count, seed);

    std::vector<BenchRecord> records;
    records.reserve(inputs.size() * 2);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const Natural& input = inputs[i];
        const std::string label =
            std::string(bench_suite_name(suite)) + "[" + std::to_string(i) + "]";
        const std::string expr = suite == BenchSuite::powers_of_two
                                     ? "2^" + std::to_string(input.bit_length() - 1)
                                     : input.to_decimal();
        struct Algo {
            const char* name;
            StopReport (*fn)(const Natural&);
        };
        for (const Algo algo : {Algo{"fast", &stop_time_fast}, Algo{"bitwise", &stop_time_bitwise}}) {
            StopReport report = algo.fn(input);  // warm-up; also carries the counters
            std::vector<double> samples;
            samples.reserve(repetitions);
            for (std::uint64_t rep = 0; rep < repetitions; ++rep) {
                const auto t0 = std::chrono::steady_clock::now();
                const StopReport timed = algo.fn(input);
                const auto t1 = std::chrono::steady_clock::now();
                if (timed.stopping_time != report.stopping_time) {
                    throw std::logic_error("nondeterministic stopping time");
                }
                samples.push_back(std::chrono::duration<double>(t1 - t0).count());
            }
            BenchRecord rec;
            rec.label = label;
            rec.input_expr = expr;
            rec.algorithm = algo.name;
            rec.wall_seconds = median(samples);
            rec.loop_iterations = report.loop_iterations;
            rec.repetitions = repetitions;
            records.push_back(std::move(rec));
        }
    }
    return records;
}

}  // namespace collatz
