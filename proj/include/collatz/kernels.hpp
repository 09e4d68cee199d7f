#pragma once

#include <cstddef>
#include <cstdint>

// Limb-level kernels behind Natural's arithmetic. Every kernel has a scalar
// reference implementation; the data-parallel ones (shifts, limb scan) also
// have an AVX2 variant. The active table is picked once at startup from
// cpuid, overridable with COLLATZ_KERNELS=scalar|avx2, and switchable from
// tests so both backends can be run on identical inputs.
//
// The carry-propagating kernels (triple_add1, shl1_add_self_inc) are scalar
// in every table: the carry chain serializes the limb loop.

namespace collatz::kernels {

using limb = std::uint64_t;

struct Ops {
    const char* name;

    // dst[i] = (src[i] >> shift) | (src[i+1] << (64 - shift)), top limb
    // zero-filled. shift in [1, 63]. In-place allowed (dst == src).
    void (*shr_bits)(limb* dst, const limb* src, std::size_t n, unsigned shift);

    // dst[i] = (src[i] << shift) | (src[i-1] >> (64 - shift)). Returns the
    // bits shifted out of the top limb. shift in [1, 63]. In-place allowed.
    limb (*shl_bits)(limb* dst, const limb* src, std::size_t n, unsigned shift);

    // Index of the lowest nonzero limb, or n when all are zero.
    std::size_t (*find_first_nonzero)(const limb* p, std::size_t n);

    // dst = 3 * src + 1 over n limbs, multiply route. Returns carry-out (0..2).
    limb (*triple_add1)(limb* dst, const limb* src, std::size_t n);

    // dst = (src << 1) + src + 1 over n limbs, shift-add route. Returns carry-out.
    limb (*shl1_add_self_inc)(limb* dst, const limb* src, std::size_t n);
};

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);

// Table for an explicit backend. pre: backend_supported(b).
const Ops& table(Backend b);

// Currently active table. Selection happens on first use.
const Ops& active();
Backend active_backend();

// Switches the active table; returns false (and leaves it unchanged) when the
// backend is not supported on this machine. Not safe to call concurrently
// with running kernels; intended for startup and tests.
bool set_backend(Backend b);

}  // namespace collatz::kernels
