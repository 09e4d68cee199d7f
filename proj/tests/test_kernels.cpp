#include <doctest.h>

#include <vector>

#include "collatz/kernels.hpp"
#include "test_util.hpp"

using namespace collatz;
using kernels::Backend;
using kernels::limb;

namespace {

std::vector<limb> random_limbs(test::Rng& rng, std::size_t n) {
    std::vector<limb> v(n);
    for (auto& x : v) x = rng.next();
    return v;
}

bool have_avx2() { return kernels::backend_supported(Backend::avx2); }

}  // namespace

TEST_CASE("scalar shift kernels match a 128-bit reference on two limbs") {
    test::Rng rng{7};
    const auto& ops = kernels::table(Backend::scalar);
    for (int round = 0; round < 200; ++round) {
        const limb lo = rng.next();
        const limb hi = rng.next();
        const unsigned s = static_cast<unsigned>(rng.in(1, 63));
        const unsigned __int128 v = (static_cast<unsigned __int128>(hi) << 64) | lo;

        limb src[2] = {lo, hi};
        limb dst[2];
        ops.shr_bits(dst, src, 2, s);
        const unsigned __int128 shr = v >> s;
        CHECK(dst[0] == static_cast<limb>(shr));
        CHECK(dst[1] == static_cast<limb>(shr >> 64));

        const limb carry = ops.shl_bits(dst, src, 2, s);
        // (v << s) spread over three limbs; carry holds the top one.
        const unsigned __int128 shl_low = v << s;
        CHECK(dst[0] == static_cast<limb>(shl_low));
        CHECK(dst[1] == static_cast<limb>(shl_low >> 64));
        CHECK(carry == static_cast<limb>(hi >> (64 - s)));
    }
}

TEST_CASE("triple_add1 and shl1_add_self_inc agree with each other and a reference") {
    test::Rng rng{11};
    const auto& ops = kernels::table(Backend::scalar);
    for (int round = 0; round < 500; ++round) {
        const std::size_t n = 1 + rng.below(12);
        const auto src = random_limbs(rng, n);
        std::vector<limb> mul(n);
        std::vector<limb> shift(n);
        const limb carry_mul = ops.triple_add1(mul.data(), src.data(), n);
        const limb carry_shift = ops.shl1_add_self_inc(shift.data(), src.data(), n);
        CHECK(mul == shift);
        CHECK(carry_mul == carry_shift);
    }
    // one-limb reference
    for (int round = 0; round < 200; ++round) {
        const limb x = rng.next();
        limb out;
        const limb carry = ops.triple_add1(&out, &x, 1);
        const unsigned __int128 expect = static_cast<unsigned __int128>(x) * 3 + 1;
        CHECK(out == static_cast<limb>(expect));
        CHECK(carry == static_cast<limb>(expect >> 64));
    }
}

TEST_CASE("scalar and avx2 backends compute identical results") {
    if (!have_avx2()) return;  // nothing to compare on this machine
    test::Rng rng{23};
    const auto& scalar = kernels::table(Backend::scalar);
    const auto& avx2 = kernels::table(Backend::avx2);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 1 + rng.below(97);
        const auto src = random_limbs(rng, n);
        const unsigned s = static_cast<unsigned>(rng.in(1, 63));

        std::vector<limb> a(n), b(n);
        scalar.shr_bits(a.data(), src.data(), n, s);
        avx2.shr_bits(b.data(), src.data(), n, s);
        CHECK(a == b);

        const limb ca = scalar.shl_bits(a.data(), src.data(), n, s);
        const limb cb = avx2.shl_bits(b.data(), src.data(), n, s);
        CHECK(a == b);
        CHECK(ca == cb);

        // zero a random low prefix so the scan has work to do
        auto zeroed = src;
        const std::size_t prefix = rng.below(n + 1);
        for (std::size_t i = 0; i < prefix && i < n; ++i) zeroed[i] = 0;
        CHECK(scalar.find_first_nonzero(zeroed.data(), n) ==
              avx2.find_first_nonzero(zeroed.data(), n));
    }
    // all-zero scan
    const std::vector<limb> zeros(9, 0);
    CHECK(scalar.find_first_nonzero(zeros.data(), zeros.size()) == zeros.size());
    CHECK(avx2.find_first_nonzero(zeros.data(), zeros.size()) == zeros.size());
}

TEST_CASE("shift kernels work in place") {
    test::Rng rng{31};
    for (const Backend backend : {Backend::scalar, Backend::avx2}) {
        if (!kernels::backend_supported(backend)) continue;
        const auto& ops = kernels::table(backend);
        for (int round = 0; round < 100; ++round) {
            const std::size_t n = 1 + rng.below(33);
            const auto src = random_limbs(rng, n);
            const unsigned s = static_cast<unsigned>(rng.in(1, 63));

            std::vector<limb> expect(n);
            ops.shr_bits(expect.data(), src.data(), n, s);
            auto inplace = src;
            ops.shr_bits(inplace.data(), inplace.data(), n, s);
            CHECK(inplace == expect);

            const limb carry_expect = ops.shl_bits(expect.data(), src.data(), n, s);
            inplace = src;
            const limb carry_inplace = ops.shl_bits(inplace.data(), inplace.data(), n, s);
            CHECK(inplace == expect);
            CHECK(carry_inplace == carry_expect);
        }
    }
}

TEST_CASE("backend switching is observable and reversible") {
    const Backend original = kernels::active_backend();
    CHECK(kernels::set_backend(Backend::scalar));
    CHECK(kernels::active_backend() == Backend::scalar);
    if (have_avx2()) {
        CHECK(kernels::set_backend(Backend::avx2));
        CHECK(kernels::active_backend() == Backend::avx2);
    }
    CHECK(kernels::set_backend(original));
}
