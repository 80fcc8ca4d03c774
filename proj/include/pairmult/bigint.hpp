#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abgrp {

// Sign-magnitude arbitrary-precision integer, base 2^32. Only the operations
// the normal-form algorithms need: ring arithmetic, truncating division,
// comparisons, gcd. Division is binary long division; speed is irrelevant
// because this type only runs on the overflow-retry path.
class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(int64_t v);  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Truncating division (C semantics): quotient rounds toward zero,
    // remainder has the sign of the dividend.
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    BigInt abs() const;

    bool fits_int64() const;
    int64_t to_int64() const;  // throws OverflowError if it does not fit

    std::string str() const;

private:
    int sign_;                   // -1, 0, +1
    std::vector<uint32_t> mag_;  // little-endian limbs, no trailing zeros

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void trim(std::vector<uint32_t>& m);
    void divmod(const BigInt& d, BigInt& q, BigInt& r) const;
};

BigInt gcd(BigInt a, BigInt b);

} // namespace abgrp
