#include "multigrade/int128.hpp"

#include <algorithm>

namespace multigrade {

std::string Int128::str() const {
    if (v_ == 0) return "0";
    unsigned __int128 mag;
    bool neg = v_ < 0;
    if (neg) {
        // two's complement magnitude; safe even for the minimum value
        mag = ~static_cast<unsigned __int128>(v_) + 1;
    } else {
        mag = static_cast<unsigned __int128>(v_);
    }
    std::string out;
    while (mag > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

Int128 checked_pow(Int128 base, int exp) {
    if (exp < 0)
        throw std::invalid_argument("checked_pow: negative exponent");
    Int128 result(1);
    Int128 acc = base;
    while (exp > 0) {
        if (exp & 1) result *= acc;
        exp >>= 1;
        if (exp > 0) acc *= acc;
    }
    return result;
}

std::int64_t checked_add_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("int64 addition overflow");
    return r;
}

std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("int64 multiplication overflow");
    return r;
}

} // namespace multigrade
