#include <doctest.h>

#include "collatz/codeword.hpp"
#include "test_util.hpp"

using namespace collatz;

// The code word for 63 as printed in the comparison's worked example
// (spacing removed): 39 odd groups, 29 extra divisions, 68 symbols.
static const char* k63CodeWord =
    "------000--0---0----0-00---0--0------00----000-0-0-000-00---0000-000";

TEST_CASE("encode 7") {
    const CodeWord w = encode(Natural(7));
    CHECK(w.render() == "---0-00-000");
    CHECK(w.odd_groups() == 5);
    CHECK(w.extra_divs() == 6);
    CHECK(w.length() == 11);
}

TEST_CASE("encode 63 reproduces the printed code word; the oracle decides the split") {
    const CodeWord w = encode(Natural(63));
    CHECK(w.render() == k63CodeWord);
    CHECK(w.length() == 68);
    const StopReport oracle = stop_time_oracle(Natural(63));
    CHECK(w.odd_groups() == oracle.odd_steps);
    CHECK(w.extra_divs() == oracle.division_steps - oracle.odd_steps);
    CHECK(oracle.odd_steps == 39);
    CHECK(oracle.division_steps == 68);
    CHECK(oracle.stopping_time == 108);
}

TEST_CASE("encode edge cases") {
    CHECK(encode(Natural(1)).length() == 0);
    CHECK(encode(Natural(2)).render() == "0");
    CHECK(encode(Natural(4)).render() == "00");
    CHECK(encode(Natural(4)).odd_groups() == 0);
    CHECK_THROWS_AS(encode(Natural(0)), std::invalid_argument);
    CHECK_THROWS_AS(encode(Natural(27), 10), StepBudgetExhausted);
}

TEST_CASE("code length law against the oracle over [1, 10000]") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        const StopReport oracle = stop_time_oracle(Natural(n));
        const CodeWord w = encode(Natural(n));
        REQUIRE(w.length() == oracle.stopping_time - oracle.odd_count);
        REQUIRE(w.length() == code_length_law(oracle));
    }
}

TEST_CASE("code_length_law on reports") {
    CHECK(code_length_law(stop_time_fast(Natural(7))) == 11);
    CHECK(code_length_law(stop_time_fast(Natural(1))) == 0);
    CHECK(code_length_law(stop_time_fast(Natural(63))) == 68);
}

TEST_CASE("replaying a code word regenerates the walk down to 1") {
    test::Rng rng{71};
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t n = 1 + rng.below(200000);
        CHECK(replay_reaches_one(Natural(n), encode(Natural(n))));
    }
    // big input too
    const Natural wide = Natural::pow2(200) + 7;
    CHECK(replay_reaches_one(wide, encode(wide)));
}

TEST_CASE("replay rejects corrupted words") {
    CodeWord w = encode(Natural(7));
    w.symbols[0] = CodeSymbol::extra_div;  // 7 is odd; a plain halving is illegal
    CHECK(!replay_reaches_one(Natural(7), w));

    CodeWord truncated = encode(Natural(7));
    truncated.symbols.pop_back();
    CHECK(!replay_reaches_one(Natural(7), truncated));

    CodeWord padded = encode(Natural(7));
    padded.symbols.push_back(CodeSymbol::extra_div);
    CHECK(!replay_reaches_one(Natural(7), padded));
}
