#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pathco {

/// Signed arbitrary-precision integer, sign-magnitude with 32-bit limbs.
/// Division truncates toward zero, matching built-in integer semantics.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_string(const std::string& s);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return *this < o || *this == o; }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator>=(const BigInt& o) const { return o <= *this; }

    std::string to_string() const;

    /// True when the value fits in a signed 64-bit integer.
    bool fits_int64() const;
    long long to_int64() const;

    static BigInt gcd(BigInt a, BigInt b);

private:
    static void divmod(const BigInt& u, const BigInt& v, BigInt& q, BigInt& r);
    void trim();

    int sign_ = 0;                   // -1, 0, +1
    std::vector<uint32_t> mag_;      // little-endian limbs, empty iff zero
};

}  // namespace pathco
