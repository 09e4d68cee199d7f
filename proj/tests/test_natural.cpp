#include <doctest.h>

#include <bit>
#include <stdexcept>

#include "collatz/kernels.hpp"
#include "collatz/natural.hpp"
#include "test_util.hpp"

using namespace collatz;

TEST_CASE("u64 round trip and predicates") {
    CHECK(Natural(0).is_zero());
    CHECK(Natural(1).is_one());
    CHECK(Natural(1).is_odd());
    CHECK(Natural(2).is_even());
    CHECK(Natural(20480).to_u64() == 20480);
    CHECK(Natural(UINT64_MAX).fits_u64());
    Natural big = Natural(UINT64_MAX);
    big += 1;
    CHECK(!big.fits_u64());
    CHECK(big.bit_length() == 65);
}

TEST_CASE("decimal round trips") {
    test::Rng rng{3};
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t v = rng.next();
        CHECK(Natural::from_decimal(std::to_string(v)).to_u64() == v);
        CHECK(Natural(v).to_decimal() == std::to_string(v));
    }
    for (int i = 0; i < 50; ++i) {
        const Natural n = test::random_natural(rng, 8);
        CHECK(Natural::from_decimal(n.to_decimal()) == n);
    }
    CHECK(Natural::from_decimal("0").is_zero());
    CHECK(Natural::from_decimal("0007").to_u64() == 7);
    CHECK_THROWS_AS(Natural::from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(Natural::from_decimal("12a"), std::invalid_argument);
}

TEST_CASE("known big decimal: 2^100 - 1") {
    Natural n = Natural::pow2(100);
    n -= 1;
    CHECK(n.to_decimal() == "1267650600228229401496703205375");
    CHECK(n.bit_length() == 100);
}

TEST_CASE("pow") {
    CHECK(Natural::pow(Natural(3), 5).to_u64() == 243);
    CHECK(Natural::pow(Natural(10), 20).to_decimal() == "100000000000000000000");
    CHECK(Natural::pow(Natural(7), 0).is_one());
    CHECK(Natural::pow(Natural(2), 100000).bit_length() == 100001);
    CHECK(Natural::pow2(0).is_one());
    CHECK(Natural::pow2(64).bit_length() == 65);
}

TEST_CASE("add, sub, mul against 128-bit references") {
    test::Rng rng{17};
    for (int i = 0; i < 400; ++i) {
        const std::uint64_t a = rng.next() >> 1;
        const std::uint64_t b = rng.next() >> 1;
        CHECK((Natural(a) + Natural(b)).to_u64() == a + b);
        if (a >= b) {
            CHECK((Natural(a) - Natural(b)).to_u64() == a - b);
        }
        const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
        Natural p = Natural(a);
        p *= b;
        Natural expect = Natural(static_cast<std::uint64_t>(prod >> 64));
        expect.shift_left(64);
        expect += static_cast<std::uint64_t>(prod);
        CHECK(p == expect);
        CHECK(Natural(a) * Natural(b) == expect);
    }
    CHECK_THROWS_AS(Natural(3) -= Natural(4), std::underflow_error);
}

TEST_CASE("subtraction borrows across limbs") {
    Natural a = Natural::pow2(192);
    Natural b = a;
    b -= 1;
    CHECK(b.bit_length() == 192);
    CHECK((a - b).is_one());
    Natural c = Natural::pow2(1000) + Natural::pow2(500);
    Natural d = c - Natural::pow2(500);
    CHECK(d == Natural::pow2(1000));
}

TEST_CASE("shifts match multiplication and division by powers of two") {
    test::Rng rng{29};
    for (int i = 0; i < 300; ++i) {
        const Natural n = test::random_natural(rng, 6);
        const std::uint64_t k = rng.in(0, 200);
        Natural up = n;
        up.shift_left(k);
        CHECK(up == n * Natural::pow2(k));
        Natural down = up;
        down.shift_right(k);
        CHECK(down == n);
    }
    Natural n(12345);
    n.shift_right(64);
    CHECK(n.is_zero());
}

TEST_CASE("trailing zero bits") {
    test::Rng rng{41};
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t v = rng.next() | 1;
        const std::uint64_t k = rng.in(0, 130);
        Natural n(v);
        n.shift_left(k);
        CHECK(n.trailing_zero_bits() == k);
    }
    CHECK_THROWS_AS(Natural(0).trailing_zero_bits(), std::invalid_argument);
}

TEST_CASE("mod and divmod") {
    test::Rng rng{43};
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t v = rng.next();
        const std::uint64_t m = 1 + rng.below(1000000);
        CHECK(Natural(v).mod_u64(m) == v % m);
        Natural q(v);
        CHECK(q.divmod_u64(m) == v % m);
        CHECK(q.to_u64() == v / m);
    }
    // multi-limb quotient check: (2^200) / 3 * 3 + r == 2^200
    Natural n = Natural::pow2(200);
    Natural q = n;
    const std::uint64_t r = q.divmod_u64(3);
    Natural back = q;
    back *= 3;
    back += r;
    CHECK(back == n);
    CHECK_THROWS_AS(Natural(5).mod_u64(0), std::invalid_argument);
}

TEST_CASE("triple_add1 routes agree on wide values") {
    test::Rng rng{47};
    for (int i = 0; i < 200; ++i) {
        const Natural n = test::random_natural(rng, 10);
        Natural a = n;
        a.triple_add1();
        Natural b = n;
        b.triple_add1_shift_add();
        CHECK(a == b);
        Natural expect = n * Natural(3) + Natural(1);
        CHECK(a == expect);
    }
}

TEST_CASE("ordering") {
    CHECK(Natural(3) < Natural(4));
    CHECK(Natural::pow2(100) > Natural(UINT64_MAX));
    CHECK(Natural(5) == Natural(5));
    Natural a = Natural::pow2(64);
    Natural b = a;
    b += 1;
    CHECK(a < b);
    CHECK(b <= b);
}

TEST_CASE("results are identical under both kernel backends") {
    if (!kernels::backend_supported(kernels::Backend::avx2)) return;
    test::Rng rng{53};
    const auto original = kernels::active_backend();
    for (int i = 0; i < 50; ++i) {
        const Natural n = test::random_natural(rng, 40);
        const std::uint64_t k = rng.in(1, 300);

        REQUIRE(kernels::set_backend(kernels::Backend::scalar));
        Natural scalar_up = n;
        scalar_up.shift_left(k);
        Natural scalar_down = n;
        scalar_down.shift_right(k);
        const std::uint64_t scalar_tz = (n.is_zero() ? 0 : n.trailing_zero_bits());

        REQUIRE(kernels::set_backend(kernels::Backend::avx2));
        Natural avx_up = n;
        avx_up.shift_left(k);
        Natural avx_down = n;
        avx_down.shift_right(k);
        const std::uint64_t avx_tz = (n.is_zero() ? 0 : n.trailing_zero_bits());

        CHECK(scalar_up == avx_up);
        CHECK(scalar_down == avx_down);
        CHECK(scalar_tz == avx_tz);
    }
    kernels::set_backend(original);
}
