#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace multigrade {

// Thrown whenever a computation would leave the 128-bit signed range.
// Power-sum identities are exact; wrapping silently is never acceptable.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// Exact signed 128-bit integer with checked arithmetic.
//
// All operators detect wraparound and throw OverflowError. raw() exposes the
// underlying __int128 for hot loops whose bounds have already been
// established with checked arithmetic.
class Int128 {
public:
    constexpr Int128() = default;
    constexpr Int128(std::int64_t v) : v_(v) {}

    static constexpr Int128 from_raw(__int128 v) {
        Int128 x;
        x.v_ = v;
        return x;
    }

    constexpr __int128 raw() const { return v_; }

    Int128& operator+=(Int128 o) {
        if (__builtin_add_overflow(v_, o.v_, &v_))
            throw OverflowError("int128 addition overflow");
        return *this;
    }
    Int128& operator-=(Int128 o) {
        if (__builtin_sub_overflow(v_, o.v_, &v_))
            throw OverflowError("int128 subtraction overflow");
        return *this;
    }
    Int128& operator*=(Int128 o) {
        if (__builtin_mul_overflow(v_, o.v_, &v_))
            throw OverflowError("int128 multiplication overflow");
        return *this;
    }

    friend Int128 operator+(Int128 a, Int128 b) { return a += b; }
    friend Int128 operator-(Int128 a, Int128 b) { return a -= b; }
    friend Int128 operator*(Int128 a, Int128 b) { return a *= b; }
    Int128 operator-() const { return Int128(0) - *this; }

    friend constexpr bool operator==(Int128 a, Int128 b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Int128 a, Int128 b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(Int128 a, Int128 b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(Int128 a, Int128 b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(Int128 a, Int128 b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(Int128 a, Int128 b) { return a.v_ >= b.v_; }

    constexpr bool fits_int64() const {
        return v_ >= INT64_MIN && v_ <= INT64_MAX;
    }
    std::int64_t to_int64() const {
        if (!fits_int64())
            throw OverflowError("int128 value does not fit in 64 bits");
        return static_cast<std::int64_t>(v_);
    }

    std::string str() const;

private:
    __int128 v_ = 0;
};

// base^exp by repeated squaring, checked. exp >= 0.
Int128 checked_pow(Int128 base, int exp);

// Checked 64-bit helpers for element-level arithmetic (chain entries stay
// 64-bit; only power sums get the full 128-bit width).
std::int64_t checked_add_i64(std::int64_t a, std::int64_t b);
std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b);

} // namespace multigrade
