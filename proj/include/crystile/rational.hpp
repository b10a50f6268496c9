#pragma once

#include "crystile/bigint.hpp"

#include <string>

namespace crystile {

// Exact rational number. Always reduced, denominator > 0.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t v) : num_(v), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static Rat from_string(std::string_view s); // "num" or "num/den"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rat operator-() const;
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b); // throws on b == 0

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    int compare(const Rat& rhs) const;
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.compare(b) >= 0; }

    BigInt floor() const;
    BigInt ceil() const;
    double to_double() const { return num_.to_double() / den_.to_double(); }

    // "num/den", or just "num" when the value is an integer
    std::string to_string() const;

  private:
    BigInt num_, den_;
    void normalize();
};

} // namespace crystile
