#include "pairmult/bigint.hpp"

#include "pairmult/checked.hpp"

#include <algorithm>
#include <cstdlib>

namespace abgrp {

BigInt::BigInt(int64_t v) {
    if (v == 0) {
        sign_ = 0;
        return;
    }
    sign_ = v > 0 ? 1 : -1;
    // avoid UB on INT64_MIN
    uint64_t u = v > 0 ? static_cast<uint64_t>(v) : ~static_cast<uint64_t>(v) + 1;
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
}

void BigInt::trim(std::vector<uint32_t>& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(x.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0u);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[x.size()] = static_cast<uint32_t>(carry);
    trim(r);
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (d < 0) {
            d += (int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(d);
    }
    trim(r);
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            uint64_t cur = r.mag_[i + j] + carry +
                           static_cast<uint64_t>(mag_[i]) * o.mag_[j];
            r.mag_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + o.mag_.size();
        while (carry) {
            uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    trim(r.mag_);
    return r;
}

void BigInt::divmod(const BigInt& d, BigInt& q, BigInt& r) const {
    if (d.sign_ == 0) throw std::domain_error("BigInt division by zero");
    int c = cmp_mag(mag_, d.mag_);
    if (sign_ == 0 || c < 0) {
        q = BigInt();
        r = *this;
        return;
    }
    // binary long division on magnitudes
    size_t nbits = mag_.size() * 32;
    std::vector<uint32_t> rem;
    std::vector<uint32_t> quo((mag_.size()), 0);
    for (size_t i = nbits; i-- > 0;) {
        // rem = rem*2 + bit_i(mag_)
        uint32_t carry = (mag_[i / 32] >> (i % 32)) & 1u;
        for (size_t k = 0; k < rem.size(); ++k) {
            uint32_t nc = rem[k] >> 31;
            rem[k] = (rem[k] << 1) | carry;
            carry = nc;
        }
        if (carry) rem.push_back(carry);
        if (cmp_mag(rem, d.mag_) >= 0) {
            rem = sub_mag(rem, d.mag_);
            quo[i / 32] |= (1u << (i % 32));
        }
    }
    trim(quo);
    trim(rem);
    q.mag_ = std::move(quo);
    q.sign_ = q.mag_.empty() ? 0 : sign_ * d.sign_;
    r.mag_ = std::move(rem);
    r.sign_ = r.mag_.empty() ? 0 : sign_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(o, q, r);
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    uint64_t u = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return u <= static_cast<uint64_t>(INT64_MAX);
    return u <= static_cast<uint64_t>(INT64_MAX) + 1;
}

int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw OverflowError("BigInt does not fit in int64: " + str());
    if (sign_ == 0) return 0;
    uint64_t u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<uint64_t>(mag_[1]) << 32;
    return sign_ > 0 ? static_cast<int64_t>(u) : -static_cast<int64_t>(u - 1) - 1;
}

std::string BigInt::str() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        // divide magnitude by 10^9 in place
        uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        trim(m);
        std::string chunk = std::to_string(rem);
        if (!m.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
        digits = chunk + digits;
    }
    return (sign_ < 0 ? "-" : "") + digits;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace abgrp
