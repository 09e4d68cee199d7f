#include "kernels_detail.hpp"

#if defined(__AVX2__) && defined(__x86_64__)

#include <immintrin.h>

namespace collatz::kernels::detail {
namespace {

// Right shift across limbs, ascending order so in-place stores never clobber
// limbs that are still to be read.
void avx2_shr_bits(limb* dst, const limb* src, std::size_t n, unsigned shift) {
    const unsigned inv = 64u - shift;
    std::size_t i = 0;
    if (n >= 5) {
        const __m128i sh = _mm_cvtsi32_si128(static_cast<int>(shift));
        const __m128i shi = _mm_cvtsi32_si128(static_cast<int>(inv));
        // Needs src[i + 4] valid, so stop at n - 5.
        for (; i + 5 <= n; i += 4) {
            const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
            const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 1));
            const __m256i out =
                _mm256_or_si256(_mm256_srl_epi64(lo, sh), _mm256_sll_epi64(hi, shi));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), out);
        }
    }
    for (; i + 1 < n; ++i) {
        dst[i] = (src[i] >> shift) | (src[i + 1] << inv);
    }
    dst[n - 1] = src[n - 1] >> shift;
}

// Left shift across limbs, descending order for in-place safety.
limb avx2_shl_bits(limb* dst, const limb* src, std::size_t n, unsigned shift) {
    const unsigned inv = 64u - shift;
    const limb carry_out = src[n - 1] >> inv;
    std::size_t i = n - 1;
    if (n >= 5) {
        const __m128i sh = _mm_cvtsi32_si128(static_cast<int>(shift));
        const __m128i shi = _mm_cvtsi32_si128(static_cast<int>(inv));
        // Block covers dst[i-3 .. i] and reads src[i-4 .. i].
        while (i >= 4) {
            const __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - 3));
            const __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - 4));
            const __m256i out =
                _mm256_or_si256(_mm256_sll_epi64(cur, sh), _mm256_srl_epi64(prev, shi));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i - 3), out);
            i -= 4;
        }
    }
    for (; i > 0; --i) {
        dst[i] = (src[i] << shift) | (src[i - 1] >> inv);
    }
    dst[0] = src[0] << shift;
    return carry_out;
}

std::size_t avx2_find_first_nonzero(const limb* p, std::size_t n) {
    std::size_t i = 0;
    const __m256i zero = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        const __m256i eq = _mm256_cmpeq_epi64(v, zero);
        const int mask = _mm256_movemask_epi8(eq);
        if (mask != -1) {
            for (std::size_t j = i; j < i + 4; ++j) {
                if (p[j] != 0) return j;
            }
        }
    }
    for (; i < n; ++i) {
        if (p[i] != 0) return i;
    }
    return n;
}

}  // namespace

const Ops* avx2_table() {
#if defined(__GNUC__) || defined(__clang__)
    if (!__builtin_cpu_supports("avx2")) return nullptr;
#endif
    static const Ops ops{
        "avx2",
        &avx2_shr_bits,
        &avx2_shl_bits,
        &avx2_find_first_nonzero,
        &scalar_triple_add1,
        &scalar_shl1_add_self_inc,
    };
    return &ops;
}

}  // namespace collatz::kernels::detail

#else

namespace collatz::kernels::detail {

const Ops* avx2_table() { return nullptr; }

}  // namespace collatz::kernels::detail

#endif
