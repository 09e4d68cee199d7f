#include "kernels_detail.hpp"

namespace collatz::kernels::detail {

void scalar_shr_bits(limb* dst, const limb* src, std::size_t n, unsigned shift) {
    const unsigned inv = 64u - shift;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        dst[i] = (src[i] >> shift) | (src[i + 1] << inv);
    }
    dst[n - 1] = src[n - 1] >> shift;
}

limb scalar_shl_bits(limb* dst, const limb* src, std::size_t n, unsigned shift) {
    const unsigned inv = 64u - shift;
    const limb carry_out = src[n - 1] >> inv;
    for (std::size_t i = n - 1; i > 0; --i) {
        dst[i] = (src[i] << shift) | (src[i - 1] >> inv);
    }
    dst[0] = src[0] << shift;
    return carry_out;
}

std::size_t scalar_find_first_nonzero(const limb* p, std::size_t n) {
    std::size_t i = 0;
    while (i < n && p[i] == 0) ++i;
    return i;
}

limb scalar_triple_add1(limb* dst, const limb* src, std::size_t n) {
    limb carry = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned __int128 t =
            static_cast<unsigned __int128>(src[i]) * 3u + carry;
        dst[i] = static_cast<limb>(t);
        carry = static_cast<limb>(t >> 64);
    }
    return carry;
}

limb scalar_shl1_add_self_inc(limb* dst, const limb* src, std::size_t n) {
    limb top_bit = 0;
    limb carry = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const limb doubled = (src[i] << 1) | top_bit;
        top_bit = src[i] >> 63;
        const unsigned __int128 t =
            static_cast<unsigned __int128>(doubled) + src[i] + carry;
        dst[i] = static_cast<limb>(t);
        carry = static_cast<limb>(t >> 64);
    }
    return carry + top_bit;
}

}  // namespace collatz::kernels::detail
