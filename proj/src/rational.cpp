#include "crystile/rational.hpp"

#include <stdexcept>

namespace crystile {

void Rat::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

int Rat::compare(const Rat& rhs) const {
    return (num_ * rhs.den_).compare(rhs.num_ * den_);
}

BigInt Rat::floor() const {
    BigInt q, r;
    BigInt::divrem(num_, den_, q, r);
    if (!r.is_zero() && num_.is_negative()) q = q - BigInt(1);
    return q;
}

BigInt Rat::ceil() const {
    BigInt q, r;
    BigInt::divrem(num_, den_, q, r);
    if (!r.is_zero() && !num_.is_negative()) q = q + BigInt(1);
    return q;
}

Rat Rat::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(BigInt::from_string(s), BigInt(1));
    return Rat(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

std::string Rat::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

} // namespace crystile
