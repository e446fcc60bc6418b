// SPDX-License-Identifier: Apache-2.0
//
// Arbitrary-precision signed integers, sized for combinatorial counts
// (Littlewood-Richardson coefficients, tableau counts). Schoolbook
// arithmetic only; operands stay far below the point where that matters.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace satstat {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_u64(std::uint64_t v);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt operator-() const;

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    bool operator==(const BigInt& rhs) const;
    bool operator!=(const BigInt& rhs) const { return !(*this == rhs); }
    bool operator<(const BigInt& rhs) const;
    bool operator>(const BigInt& rhs) const { return rhs < *this; }
    bool operator<=(const BigInt& rhs) const { return !(rhs < *this); }
    bool operator>=(const BigInt& rhs) const { return !(*this < rhs); }

    std::string to_string() const;
    double to_double() const;

    // Throws std::overflow_error if the value does not fit (or is negative).
    std::uint64_t to_u64() const;

private:
    // Base 2^32 little-endian magnitude, no leading zero limbs.
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    void trim();
};

}  // namespace satstat
