#include "crystile/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crystile {

namespace {
using u32 = std::uint32_t;
using u64 = std::uint64_t;
constexpr u64 kBase = 1ull << 32;
} // namespace

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    u64 m = v < 0 ? ~static_cast<u64>(v) + 1 : static_cast<u64>(v);
    mag_.push_back(static_cast<u32>(m & 0xffffffffu));
    if (m >> 32) mag_.push_back(static_cast<u32>(m >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const {
    return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1;
}

int BigInt::compare_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::compare(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ < rhs.sign_ ? -1 : 1;
    int c = compare_mag(mag_, rhs.mag_);
    return sign_ >= 0 ? c : -c;
}

std::vector<u32> BigInt::add_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    const std::vector<u32>&x = a.size() >= b.size() ? a : b;
    const std::vector<u32>&y = a.size() >= b.size() ? b : a;
    std::vector<u32> r(x.size() + 1, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        u64 s = carry + x[i] + (i < y.size() ? y[i] : 0);
        r[i] = static_cast<u32>(s & 0xffffffffu);
        carry = s >> 32;
    }
    r[x.size()] = static_cast<u32>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u32> BigInt::sub_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    std::vector<u32> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<u32>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u32> BigInt::mul_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<u32> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        u64 ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            u64 s = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<u32>(s & 0xffffffffu);
            carry = s >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            u64 s = r[k] + carry;
            r[k] = static_cast<u32>(s & 0xffffffffu);
            carry = s >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D, base 2^32.
void BigInt::divrem_mag(const std::vector<u32>& a, const std::vector<u32>& b,
                        std::vector<u32>& q, std::vector<u32>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (compare_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        q.assign(a.size(), 0);
        u64 rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            u64 cur = (rem << 32) | a[i];
            q[i] = static_cast<u32>(cur / b[0]);
            rem = cur % b[0];
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.clear();
        if (rem) r.push_back(static_cast<u32>(rem));
        return;
    }

    // Normalize so the top limb of the divisor has its high bit set.
    int shift = 0;
    for (u32 top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    const std::size_t n = b.size();
    const std::size_t m = a.size() - n;

    std::vector<u32> v(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        v[i] = (b[i] << shift);
        if (shift && i > 0) v[i] |= static_cast<u32>(static_cast<u64>(b[i - 1]) >> (32 - shift));
    }
    std::vector<u32> u(a.size() + 1, 0);
    u[a.size()] = shift ? static_cast<u32>(static_cast<u64>(a.back()) >> (32 - shift)) : 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        u[i] = (a[i] << shift);
        if (shift && i > 0) u[i] |= static_cast<u32>(static_cast<u64>(a[i - 1]) >> (32 - shift));
    }

    q.assign(m + 1, 0);
    const u64 vtop = v[n - 1];
    const u64 vsecond = v[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
        u64 numer = (static_cast<u64>(u[j + n]) << 32) | u[j + n - 1];
        u64 qhat = numer / vtop;
        u64 rhat = numer % vtop;
        if (qhat >= kBase) {
            qhat = kBase - 1;
            rhat = numer - qhat * vtop;
        }
        while (rhat < kBase && qhat * vsecond > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }
        // u[j..j+n] -= qhat * v
        std::int64_t borrow = 0;
        u64 carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            u64 p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u[i + j]) - borrow -
                             static_cast<std::int64_t>(p & 0xffffffffu);
            if (t < 0) {
                t += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<u32>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(u[j + n]) - borrow -
                         static_cast<std::int64_t>(carry);
        if (t < 0) {
            // qhat was one too large: add v back once
            t += static_cast<std::int64_t>(kBase);
            --qhat;
            u64 c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                u64 s = static_cast<u64>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<u32>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            t += static_cast<std::int64_t>(c2);
            t &= static_cast<std::int64_t>(0xffffffffu);
        }
        u[j + n] = static_cast<u32>(t);
        q[j] = static_cast<u32>(qhat);
    }

    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = u[i] >> shift;
        if (shift && i + 1 < u.size()) r[i] |= static_cast<u32>(static_cast<u64>(u[i + 1]) << (32 - shift));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
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

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::compare_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    r.trim();
    return r;
}

void BigInt::divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<u32> qm, rm;
    divrem_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt q, r;
        divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    u64 m = (static_cast<u64>(mag_[1]) << 32) | mag_[0];
    return sign_ < 0 ? m <= (1ull << 63) : m < (1ull << 63);
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in int64");
    u64 m = 0;
    if (!mag_.empty()) m = mag_[0];
    if (mag_.size() == 2) m |= static_cast<u64>(mag_[1]) << 32;
    return sign_ < 0 ? -static_cast<std::int64_t>(m - 1) - 1 : static_cast<std::int64_t>(m);
}

double BigInt::to_double() const {
    double v = 0.0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -v : v;
}

BigInt BigInt::from_string(std::string_view s) {
    BigInt r;
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (neg) r.sign_ = -r.sign_;
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<u32> cur = mag_;
    std::string digits;
    const std::vector<u32> ten9 = {1000000000u};
    while (!cur.empty()) {
        std::vector<u32> q, r;
        divrem_mag(cur, ten9, q, r);
        u32 chunk = r.empty() ? 0 : r[0];
        cur = std::move(q);
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace crystile
