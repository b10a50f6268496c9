#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace crystile {

// Arbitrary-precision signed integer, sign-magnitude with little-endian
// 32-bit limbs. Magnitude never stores leading zero limbs; zero has empty
// magnitude and sign 0. Division truncates toward zero, matching built-in
// integer division.
class BigInt {
  public:
    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt from_string(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const;
    int sign() const { return sign_; }

    // -1, 0, +1 as *this compares to rhs.
    int compare(const BigInt& rhs) const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    // quotient truncated toward zero; remainder has the sign of the dividend
    static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    static BigInt gcd(BigInt a, BigInt b); // non-negative

    bool fits_int64() const;
    std::int64_t to_int64() const; // throws if out of range
    double to_double() const;

    std::string to_string() const;

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

  private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim();
    static int compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divrem_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

} // namespace crystile
