#pragma once

#include "collatz/kernels.hpp"

// Scalar reference kernels, shared between the scalar table and any SIMD
// table that keeps the carry-chain entries scalar.

namespace collatz::kernels::detail {

void scalar_shr_bits(limb* dst, const limb* src, std::size_t n, unsigned shift);
limb scalar_shl_bits(limb* dst, const limb* src, std::size_t n, unsigned shift);
std::size_t scalar_find_first_nonzero(const limb* p, std::size_t n);
limb scalar_triple_add1(limb* dst, const limb* src, std::size_t n);
limb scalar_shl1_add_self_inc(limb* dst, const limb* src, std::size_t n);

// Defined in kernels_avx2.cpp; null when the build or the CPU lacks AVX2.
const Ops* avx2_table();

}  // namespace collatz::kernels::detail
