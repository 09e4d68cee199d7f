#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/kernels.hpp"

namespace collatz {

// Arbitrary-precision unsigned integer, the sequence element type. Stored as
// little-endian 64-bit limbs with no zero high limb; the empty limb vector
// is 0. There is no fixed width: 2^100000 and beyond are represented exactly.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v);

    // Decimal digits only; throws std::invalid_argument on anything else.
    static Natural from_decimal(std::string_view digits);
    static Natural pow2(std::uint64_t exponent);
    static Natural pow(const Natural& base, std::uint64_t exponent);

    std::string to_decimal() const;

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u) != 0; }
    bool is_even() const { return !is_odd(); }

    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t to_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

    // Number of significant bits; 0 for zero.
    std::size_t bit_length() const;

    // 2-adic valuation. pre: nonzero.
    std::uint64_t trailing_zero_bits() const;

    std::uint64_t mod_u64(std::uint64_t m) const;  // pre: m != 0

    // Divides in place, returns the remainder. pre: d != 0.
    std::uint64_t divmod_u64(std::uint64_t d);

    Natural& operator+=(const Natural& rhs);
    Natural& operator+=(std::uint64_t rhs);
    Natural& operator-=(const Natural& rhs);  // throws std::underflow_error
    Natural& operator-=(std::uint64_t rhs);
    Natural& operator*=(std::uint64_t rhs);

    friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
    friend Natural operator+(Natural lhs, std::uint64_t rhs) { return lhs += rhs; }
    friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
    friend Natural operator-(Natural lhs, std::uint64_t rhs) { return lhs -= rhs; }
    friend Natural operator*(const Natural& lhs, const Natural& rhs);

    void shift_left(std::uint64_t bits);
    void shift_right(std::uint64_t bits);

    // 3n + 1, multiply route.
    void triple_add1();
    // (n << 1) + n + 1, shift-add route. Same value, independent data path.
    void triple_add1_shift_add();

    bool operator==(const Natural& rhs) const { return limbs_ == rhs.limbs_; }
    std::strong_ordering operator<=>(const Natural& rhs) const;

    std::size_t limb_count() const { return limbs_.size(); }
    std::span<const kernels::limb> limbs() const { return limbs_; }

private:
    void normalize();

    std::vector<kernels::limb> limbs_;
};

}  // namespace collatz
