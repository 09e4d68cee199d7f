#include "collatz/stopping_time.hpp"

#include <bit>
#include <stdexcept>

namespace collatz {

namespace {

// Largest v for which 3v + 1 still fits in 64 bits.
constexpr std::uint64_t kTripleMax = (UINT64_MAX - 1) / 3;

struct Counters {
    std::uint64_t loop = 0;
    std::uint64_t odd = 0;  // U
    std::uint64_t div = 0;  // D
};

StopReport make_report(Natural input, const Counters& c) {
    StopReport r;
    r.input = std::move(input);
    r.stopping_time = c.odd + c.div + 1;
    r.loop_iterations = c.loop;
    r.odd_steps = c.odd;
    r.division_steps = c.div;
    r.odd_count = c.odd + 1;  // odd terms incl. the final 1; only terms > 1 do a 3x+1
    r.sub_branches = c.odd;
    return r;
}

enum class LoopState { done, promote, demote, exhausted };

// One loop body per odd step or per full trailing-zero strip. Leaves n
// untouched and reports promote when 3n+1 would not fit in 64 bits.
LoopState fast_loop_u64(std::uint64_t& n, std::uint64_t budget, Counters& c) {
    while (n != 1) {
        if (c.loop == budget) return LoopState::exhausted;
        if (n & 1u) {
            if (n > kTripleMax) return LoopState::promote;
            ++c.loop;
            n = 3 * n + 1;
            ++c.odd;
        } else {
            ++c.loop;
            const unsigned e = static_cast<unsigned>(std::countr_zero(n));
            c.div += e;
            n >>= e;
        }
    }
    return LoopState::done;
}

// Demotion waits until the value is small enough that the u64 loop can take
// at least one step, otherwise a freshly promoted value would bounce back.
bool can_demote(const Natural& n) {
    return n.fits_u64() && n.to_u64() <= kTripleMax;
}

LoopState fast_loop_big(Natural& n, std::uint64_t budget, Counters& c, bool allow_u64) {
    while (!n.is_one()) {
        if (allow_u64 && can_demote(n)) return LoopState::demote;
        if (c.loop == budget) return LoopState::exhausted;
        ++c.loop;
        if (n.is_odd()) {
            n.triple_add1();
            ++c.odd;
        } else {
            const std::uint64_t e = n.trailing_zero_bits();
            c.div += e;
            n.shift_right(e);
        }
    }
    return LoopState::done;
}

// One loop body per sequence step.
LoopState bitwise_loop_u64(std::uint64_t& n, std::uint64_t budget, Counters& c) {
    while (n != 1) {
        if (c.loop == budget) return LoopState::exhausted;
        if ((n & 1u) == 0) {
            ++c.loop;
            n = n >> 1;
            ++c.div;
        } else {
            if (n > kTripleMax) return LoopState::promote;
            ++c.loop;
            n = (n << 1) + n + 1;
            ++c.odd;
        }
    }
    return LoopState::done;
}

LoopState bitwise_loop_big(Natural& n, std::uint64_t budget, Counters& c, bool allow_u64) {
    while (!n.is_one()) {
        if (allow_u64 && can_demote(n)) return LoopState::demote;
        if (c.loop == budget) return LoopState::exhausted;
        ++c.loop;
        if (n.is_even()) {
            n.shift_right(1);
            ++c.div;
        } else {
            n.triple_add1_shift_add();
            ++c.odd;
        }
    }
    return LoopState::done;
}

template <typename SmallLoop, typename BigLoop>
std::optional<StopReport> run(const Natural& input, std::uint64_t budget, bool allow_u64,
                              SmallLoop small_loop, BigLoop big_loop) {
    if (input.is_zero()) throw std::invalid_argument("stopping time undefined for 0");
    Counters c;
    Natural big;
    std::uint64_t small = 0;
    bool in_small = allow_u64 && input.fits_u64();
    if (in_small) {
        small = input.to_u64();
    } else {
        big = input;
    }
    while (true) {
        if (in_small) {
            switch (small_loop(small, budget, c)) {
                case LoopState::done: return make_report(input, c);
                case LoopState::exhausted: return std::nullopt;
                default:
                    big = Natural(small);
                    in_small = false;
                    break;
            }
        } else {
            switch (big_loop(big, budget, c, allow_u64)) {
                case LoopState::done: return make_report(input, c);
                case LoopState::exhausted: return std::nullopt;
                default:
                    small = big.to_u64();
                    in_small = true;
                    break;
            }
        }
    }
}

StopReport require(std::optional<StopReport> r) {
    if (!r) throw std::runtime_error("loop budget exhausted");
    return std::move(*r);
}

// --- brute-force oracle -------------------------------------------------
//
// Literal parity test, division by 2, and 3n+1; every counter is measured
// from the walk rather than derived. Large values use a base-10^9 digit
// vector so the oracle never touches the limb machinery it is checking.

struct OracleCounters {
    std::uint64_t terms = 1;
    std::uint64_t odd_terms = 0;  // odd terms seen, incl. a final 1
    std::uint64_t u = 0;
    std::uint64_t d = 0;
};

// Returns true when 1 is reached; false when the next 3n+1 would overflow
// (n is left on the offending term). Entry-term parity is the caller's.
bool oracle_u64(std::uint64_t& n, OracleCounters& c) {
    while (n != 1) {
        if (n % 2 == 0) {
            n = n / 2;
            ++c.d;
        } else {
            if (n > kTripleMax) return false;
            n = 3 * n + 1;
            ++c.u;
        }
        ++c.terms;
        if (n % 2 != 0) ++c.odd_terms;
    }
    return true;
}

struct DecimalNumber {
    static constexpr std::uint32_t kBase = 1'000'000'000u;

    std::vector<std::uint32_t> digits;  // little-endian base-10^9

    static DecimalNumber from_string(const std::string& s) {
        DecimalNumber out;
        for (std::size_t end = s.size(); end > 0;) {
            const std::size_t begin = end >= 9 ? end - 9 : 0;
            out.digits.push_back(
                static_cast<std::uint32_t>(std::stoul(s.substr(begin, end - begin))));
            end = begin;
        }
        while (out.digits.size() > 1 && out.digits.back() == 0) out.digits.pop_back();
        return out;
    }

    bool is_one() const { return digits.size() == 1 && digits[0] == 1; }
    bool is_odd() const { return (digits[0] & 1u) != 0; }

    void halve() {
        std::uint64_t rem = 0;
        for (std::size_t i = digits.size(); i > 0; --i) {
            const std::uint64_t cur = rem * kBase + digits[i - 1];
            digits[i - 1] = static_cast<std::uint32_t>(cur / 2);
            rem = cur % 2;
        }
        while (digits.size() > 1 && digits.back() == 0) digits.pop_back();
    }

    void triple_add1() {
        std::uint64_t carry = 0;
        for (auto& d : digits) {
            const std::uint64_t t = std::uint64_t{3} * d + carry;
            d = static_cast<std::uint32_t>(t % kBase);
            carry = t / kBase;
        }
        while (carry != 0) {
            digits.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
        carry = 1;
        for (std::size_t i = 0; i < digits.size() && carry != 0; ++i) {
            const std::uint64_t t = std::uint64_t{digits[i]} + carry;
            digits[i] = static_cast<std::uint32_t>(t % kBase);
            carry = t / kBase;
        }
        if (carry != 0) digits.push_back(static_cast<std::uint32_t>(carry));
    }

    bool value_if_small(std::uint64_t& out) const {
        if (digits.size() > 3) return false;
        unsigned __int128 v = 0;
        for (std::size_t i = digits.size(); i > 0; --i) {
            v = v * kBase + digits[i - 1];
        }
        if (v > UINT64_MAX) return false;
        out = static_cast<std::uint64_t>(v);
        return true;
    }
};

// Returns true when 1 is reached; false once the value fits the u64 loop
// again (stored in small_out).
bool oracle_decimal(DecimalNumber& n, OracleCounters& c, std::uint64_t& small_out) {
    while (!n.is_one()) {
        std::uint64_t small = 0;
        if (n.value_if_small(small) && small <= kTripleMax) {
            small_out = small;
            return false;
        }
        if (n.is_odd()) {
            n.triple_add1();
            ++c.u;
        } else {
            n.halve();
            ++c.d;
        }
        ++c.terms;
        if (n.is_odd()) ++c.odd_terms;
    }
    return true;
}

}  // namespace

Natural odd_step(const Natural& n) {
    if (!n.is_odd()) throw std::invalid_argument("odd_step requires an odd input");
    Natural out = n;
    out.triple_add1();
    return out;
}

OddRootDecomposition strip_trailing_zeros(const Natural& n) {
    if (n.is_zero()) throw std::invalid_argument("strip_trailing_zeros requires n >= 1");
    OddRootDecomposition out;
    out.exponent = n.trailing_zero_bits();
    out.odd_root = n;
    out.odd_root.shift_right(out.exponent);
    return out;
}

std::optional<StopReport> try_stop_time_fast(const Natural& n, std::uint64_t loop_budget,
                                             bool allow_u64_path) {
    return run(n, loop_budget, allow_u64_path, fast_loop_u64, fast_loop_big);
}

std::optional<StopReport> try_stop_time_bitwise(const Natural& n, std::uint64_t loop_budget,
                                                bool allow_u64_path) {
    return run(n, loop_budget, allow_u64_path, bitwise_loop_u64, bitwise_loop_big);
}

StopReport stop_time_fast(const Natural& n) {
    return require(try_stop_time_fast(n, UINT64_MAX));
}

StopReport stop_time_bitwise(const Natural& n) {
    return require(try_stop_time_bitwise(n, UINT64_MAX));
}

StopReport stop_time_oracle(const Natural& n) {
    if (n.is_zero()) throw std::invalid_argument("stopping time undefined for 0");
    OracleCounters c;
    bool in_small = n.fits_u64();
    std::uint64_t small = in_small ? n.to_u64() : 0;
    DecimalNumber big;
    if (!in_small) big = DecimalNumber::from_string(n.to_decimal());
    const bool entry_odd = in_small ? (small % 2 != 0) : big.is_odd();
    if (entry_odd) ++c.odd_terms;
    while (true) {
        if (in_small) {
            if (oracle_u64(small, c)) break;
            big = DecimalNumber::from_string(std::to_string(small));
            in_small = false;
        } else {
            if (oracle_decimal(big, c, small)) break;
            in_small = true;
        }
    }
    StopReport r;
    r.input = n;
    r.stopping_time = c.terms;
    r.loop_iterations = c.terms - 1;
    r.odd_steps = c.u;
    r.division_steps = c.d;
    r.odd_count = c.odd_terms;
    r.sub_branches = c.u;
    return r;
}

std::uint64_t fast_loop_iterations(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("stopping time undefined for 0");
    Counters c;
    std::uint64_t v = n;
    if (fast_loop_u64(v, UINT64_MAX, c) == LoopState::done) return c.loop;
    return stop_time_fast(Natural(n)).loop_iterations;
}

}  // namespace collatz
