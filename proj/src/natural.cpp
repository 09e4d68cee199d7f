#include "collatz/natural.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace collatz {

using kernels::limb;

namespace {

constexpr std::uint64_t kDecChunkBase = 10'000'000'000'000'000'000ull;  // 10^19
constexpr unsigned kDecChunkDigits = 19;

}  // namespace

Natural::Natural(std::uint64_t v) {
    if (v != 0) limbs_.push_back(v);
}

void Natural::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Natural Natural::from_decimal(std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("empty decimal literal");
    Natural out;
    std::size_t pos = 0;
    while (pos < digits.size()) {
        const std::size_t take = std::min<std::size_t>(kDecChunkDigits, digits.size() - pos);
        std::uint64_t chunk = 0;
        std::uint64_t scale = 1;
        for (std::size_t i = 0; i < take; ++i) {
            const char c = digits[pos + i];
            if (c < '0' || c > '9') throw std::invalid_argument("non-digit in decimal literal");
            chunk = chunk * 10 + static_cast<std::uint64_t>(c - '0');
            scale *= 10;
        }
        out *= (take == kDecChunkDigits) ? kDecChunkBase : scale;
        out += chunk;
        pos += take;
    }
    return out;
}

Natural Natural::pow2(std::uint64_t exponent) {
    Natural out;
    out.limbs_.assign(exponent / 64 + 1, 0);
    out.limbs_.back() = limb{1} << (exponent % 64);
    return out;
}

Natural Natural::pow(const Natural& base, std::uint64_t exponent) {
    if (exponent == 0) return Natural(1);
    if (base.limbs_.size() == 1 && base.limbs_[0] == 2) {
        return pow2(exponent);
    }
    Natural acc(1);
    Natural sq = base;
    std::uint64_t e = exponent;
    while (true) {
        if (e & 1u) acc = acc * sq;
        e >>= 1;
        if (e == 0) break;
        sq = sq * sq;
    }
    return acc;
}

std::string Natural::to_decimal() const {
    if (is_zero()) return "0";
    if (fits_u64()) return std::to_string(limbs_[0]);
    Natural scratch = *this;
    std::string out;
    while (!scratch.is_zero()) {
        const std::uint64_t rem = scratch.divmod_u64(kDecChunkBase);
        std::string chunk = std::to_string(rem);
        if (!scratch.is_zero()) chunk.insert(0, kDecChunkDigits - chunk.size(), '0');
        out.insert(0, chunk);
    }
    return out;
}

std::size_t Natural::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) +
           (64 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

std::uint64_t Natural::trailing_zero_bits() const {
    if (limbs_.empty()) throw std::invalid_argument("trailing_zero_bits of zero");
    const std::size_t i = kernels::active().find_first_nonzero(limbs_.data(), limbs_.size());
    return 64 * i + static_cast<std::uint64_t>(std::countr_zero(limbs_[i]));
}

std::uint64_t Natural::mod_u64(std::uint64_t m) const {
    if (m == 0) throw std::invalid_argument("mod by zero");
    unsigned __int128 r = 0;
    for (std::size_t i = limbs_.size(); i > 0; --i) {
        r = ((r << 64) | limbs_[i - 1]) % m;
    }
    return static_cast<std::uint64_t>(r);
}

Natural& Natural::operator+=(const Natural& rhs) {
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    limb carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        const limb r = i < rhs.limbs_.size() ? rhs.limbs_[i] : 0;
        const unsigned __int128 t = static_cast<unsigned __int128>(limbs_[i]) + r + carry;
        limbs_[i] = static_cast<limb>(t);
        carry = static_cast<limb>(t >> 64);
        if (carry == 0 && i >= rhs.limbs_.size()) break;
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

Natural& Natural::operator+=(std::uint64_t rhs) {
    if (rhs == 0) return *this;
    limb carry = rhs;
    for (std::size_t i = 0; i < limbs_.size() && carry != 0; ++i) {
        const unsigned __int128 t = static_cast<unsigned __int128>(limbs_[i]) + carry;
        limbs_[i] = static_cast<limb>(t);
        carry = static_cast<limb>(t >> 64);
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
    if (*this < rhs) throw std::underflow_error("Natural subtraction underflow");
    limb borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        const limb r = i < rhs.limbs_.size() ? rhs.limbs_[i] : 0;
        const limb before = limbs_[i];
        const limb sub = r + borrow;
        const limb next_borrow = (borrow != 0 && sub == 0) ? 1 : (before < sub ? 1 : 0);
        limbs_[i] = before - sub;
        borrow = next_borrow;
        if (borrow == 0 && i >= rhs.limbs_.size()) break;
    }
    normalize();
    return *this;
}

Natural& Natural::operator-=(std::uint64_t rhs) {
    return *this -= Natural(rhs);
}

Natural& Natural::operator*=(std::uint64_t rhs) {
    if (rhs == 0) {
        limbs_.clear();
        return *this;
    }
    limb carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        const unsigned __int128 t =
            static_cast<unsigned __int128>(limbs_[i]) * rhs + carry;
        limbs_[i] = static_cast<limb>(t);
        carry = static_cast<limb>(t >> 64);
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

Natural operator*(const Natural& lhs, const Natural& rhs) {
    Natural out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        limb carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            const unsigned __int128 t =
                static_cast<unsigned __int128>(lhs.limbs_[i]) * rhs.limbs_[j] +
                out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<limb>(t);
            carry = static_cast<limb>(t >> 64);
        }
        out.limbs_[i + rhs.limbs_.size()] = carry;
    }
    out.normalize();
    return out;
}

void Natural::shift_left(std::uint64_t bits) {
    if (is_zero() || bits == 0) return;
    const std::size_t limb_off = bits / 64;
    const unsigned bit_off = static_cast<unsigned>(bits % 64);
    if (bit_off != 0) {
        const limb carry =
            kernels::active().shl_bits(limbs_.data(), limbs_.data(), limbs_.size(), bit_off);
        if (carry != 0) limbs_.push_back(carry);
    }
    if (limb_off != 0) limbs_.insert(limbs_.begin(), limb_off, 0);
}

void Natural::shift_right(std::uint64_t bits) {
    if (is_zero() || bits == 0) return;
    const std::size_t limb_off = bits / 64;
    if (limb_off >= limbs_.size()) {
        limbs_.clear();
        return;
    }
    if (limb_off != 0) limbs_.erase(limbs_.begin(), limbs_.begin() + limb_off);
    const unsigned bit_off = static_cast<unsigned>(bits % 64);
    if (bit_off != 0) {
        kernels::active().shr_bits(limbs_.data(), limbs_.data(), limbs_.size(), bit_off);
    }
    normalize();
}

void Natural::triple_add1() {
    if (limbs_.empty()) {
        limbs_.push_back(1);
        return;
    }
    const limb carry = kernels::active().triple_add1(limbs_.data(), limbs_.data(), limbs_.size());
    if (carry != 0) limbs_.push_back(carry);
}

void Natural::triple_add1_shift_add() {
    if (limbs_.empty()) {
        limbs_.push_back(1);
        return;
    }
    const limb carry =
        kernels::active().shl1_add_self_inc(limbs_.data(), limbs_.data(), limbs_.size());
    if (carry != 0) limbs_.push_back(carry);
}

std::strong_ordering Natural::operator<=>(const Natural& rhs) const {
    if (limbs_.size() != rhs.limbs_.size()) {
        return limbs_.size() <=> rhs.limbs_.size();
    }
    for (std::size_t i = limbs_.size(); i > 0; --i) {
        if (limbs_[i - 1] != rhs.limbs_[i - 1]) {
            return limbs_[i - 1] <=> rhs.limbs_[i - 1];
        }
    }
    return std::strong_ordering::equal;
}

std::uint64_t Natural::divmod_u64(std::uint64_t d) {
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i > 0; --i) {
        const unsigned __int128 cur = (rem << 64) | limbs_[i - 1];
        limbs_[i - 1] = static_cast<limb>(cur / d);
        rem = cur % d;
    }
    normalize();
    return static_cast<std::uint64_t>(rem);
}

}  // namespace collatz
