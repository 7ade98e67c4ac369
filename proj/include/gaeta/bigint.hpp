#pragma once

#include <algorithm>
#include <cstdint>
#include <compare>
#include <string>
#include <vector>

#include "gaeta/error.hpp"

namespace gaeta {

/// Arbitrary-precision signed integer, base 2^32 little-endian magnitude.
/// Cone-edge comparisons square rationals repeatedly, so intermediate values
/// outgrow 64 bits even when the inputs are tiny.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on LLONG_MIN
        unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        mag_.push_back(static_cast<uint32_t>(u));
        if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) sign = s[i++] == '-' ? -1 : 1;
        require(i < s.size(), errc::parse_error, "empty integer literal");
        for (; i < s.size(); ++i) {
            require(s[i] >= '0' && s[i] <= '9', errc::parse_error, "bad digit in '" + s + "'");
            r.mul_small_add(10, static_cast<uint32_t>(s[i] - '0'));
        }
        if (!r.mag_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int signum() const { return sign_; }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long u = to_u64_mag();
        return sign_ >= 0 ? u <= 0x7fffffffffffffffULL : u <= 0x8000000000000000ULL;
    }
    long long to_int64() const {
        require(fits_int64(), errc::out_of_range, "BigInt does not fit in 64 bits");
        unsigned long long u = to_u64_mag();
        return sign_ >= 0 ? static_cast<long long>(u) : -static_cast<long long>(u - 1) - 1;
    }
    bool fits_uint64() const { return sign_ >= 0 && mag_.size() <= 2; }
    unsigned long long to_uint64() const {
        require(fits_uint64(), errc::out_of_range, "BigInt does not fit in u64");
        return to_u64_mag();
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return r;
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.mag_[i + b.mag_.size()] += static_cast<uint32_t>(carry);
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    /// Truncated division (C semantics): quotient toward zero, remainder has
    /// the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        require(b.sign_ != 0, errc::internal_inconsistency, "division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (a.sign_ == 0 || c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.trim();
        r.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
        return c <=> 0;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static BigInt pow2(unsigned e) {
        BigInt r;
        r.sign_ = 1;
        r.mag_.assign(e / 32 + 1, 0);
        r.mag_[e / 32] = 1u << (e % 32);
        return r;
    }

    /// Largest e with 2^e dividing *this (undefined for zero).
    unsigned two_adic_valuation() const {
        require(sign_ != 0, errc::internal_inconsistency, "valuation of zero");
        unsigned v = 0;
        size_t i = 0;
        while (mag_[i] == 0) {
            v += 32;
            ++i;
        }
        uint32_t w = mag_[i];
        while (!(w & 1)) {
            ++v;
            w >>= 1;
        }
        return v;
    }

    BigInt shifted_right(unsigned e) const { // divide by 2^e, exact or floor on magnitude
        BigInt r = *this;
        size_t limbs = e / 32;
        unsigned bits = e % 32;
        if (limbs >= r.mag_.size()) return BigInt();
        r.mag_.erase(r.mag_.begin(), r.mag_.begin() + static_cast<long>(limbs));
        if (bits) {
            for (size_t i = 0; i < r.mag_.size(); ++i) {
                r.mag_[i] >>= bits;
                if (i + 1 < r.mag_.size())
                    r.mag_[i] |= r.mag_[i + 1] << (32 - bits);
            }
        }
        r.trim();
        if (r.mag_.empty()) r.sign_ = 0;
        return r;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> tmp = mag_;
        std::string digits;
        while (!tmp.empty()) {
            uint64_t rem = 0;
            for (size_t i = tmp.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            std::string chunk = std::to_string(rem);
            if (!tmp.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
            digits = chunk + digits;
        }
        return (sign_ < 0 ? "-" : "") + digits;
    }

    double to_double() const {
        double r = 0;
        for (size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
        return sign_ < 0 ? -r : r;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    unsigned long long to_u64_mag() const {
        unsigned long long u = 0;
        if (mag_.size() > 1) u = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) u |= mag_[0];
        return u;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    void mul_small_add(uint32_t m, uint32_t add) {
        uint64_t carry = add;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
            limb = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
        if (!mag_.empty()) sign_ = 1;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + (i < small.size() ? small[i] : 0) + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            if (!carry && i >= small.size()) break;
        }
        if (carry) r.push_back(1);
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
            borrow = cur < 0;
            if (cur < 0) cur += (1LL << 32);
            r[i] = static_cast<uint32_t>(cur);
            if (!borrow && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on magnitudes; requires |a| >= |b| > 0.
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        if (b.size() == 1) {
            uint64_t d = b[0], rem = 0;
            q.assign(a.size(), 0);
            for (size_t i = a.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            r.clear();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        // normalize so the divisor's top bit is set
        unsigned shift = 0;
        for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        std::vector<uint32_t> u = shl_mag(a, shift);
        std::vector<uint32_t> v = shl_mag(b, shift);
        u.push_back(0);
        size_t n = v.size(), m = u.size() - n - 1;
        q.assign(m + 1, 0);
        uint64_t vtop = v[n - 1], vsec = v[n - 2];
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / vtop, rhat = num % vtop;
            while (qhat > 0xffffffffULL ||
                   qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += vtop;
                if (rhat > 0xffffffffULL) break;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffULL) - borrow;
                borrow = t < 0;
                if (t < 0) t += (1LL << 32);
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            bool neg = t < 0;
            u[j + n] = static_cast<uint32_t>(t);
            if (neg) { // add back
                --qhat;
                uint64_t c = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c;
                    u[i + j] = static_cast<uint32_t>(cur);
                    c = cur >> 32;
                }
                u[j + n] = static_cast<uint32_t>(u[j + n] + c);
            }
            q[j] = static_cast<uint32_t>(qhat);
        }
        u.resize(n);
        r = shr_mag(u, shift);
    }

    static std::vector<uint32_t> shl_mag(const std::vector<uint32_t>& a, unsigned s) {
        if (s == 0) return a;
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] = a[i] >> (32 - s);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static std::vector<uint32_t> shr_mag(const std::vector<uint32_t>& a, unsigned s) {
        std::vector<uint32_t> r = a;
        if (s) {
            for (size_t i = 0; i < r.size(); ++i) {
                r[i] >>= s;
                if (i + 1 < r.size()) r[i] |= r[i + 1] << (32 - s);
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

} // namespace gaeta
