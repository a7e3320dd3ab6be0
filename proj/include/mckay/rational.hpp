#pragma once

// Exact rational arithmetic.
//
// Values are stored as reduced int64 numerator / positive denominator pairs.
// Every operation runs through 128-bit intermediates and the reduced result
// is range-checked back into 64 bits; out-of-range results throw
// std::overflow_error.  Nothing in the catalog comes close to that bound,
// but malformed input should fail loudly rather than wrap.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mckay {

using Int = std::int64_t;
using Wide = __int128;

namespace detail {

inline Int narrow(Wide v) {
    if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
        throw std::overflow_error("exact integer arithmetic overflowed 64 bits");
    return static_cast<Int>(v);
}

inline unsigned __int128 wide_abs(Wide v) {
    return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1
                 : static_cast<unsigned __int128>(v);
}

inline unsigned __int128 wide_gcd(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

inline Int checked_add(Int a, Int b) { return detail::narrow(Wide(a) + Wide(b)); }
inline Int checked_sub(Int a, Int b) { return detail::narrow(Wide(a) - Wide(b)); }
inline Int checked_mul(Int a, Int b) { return detail::narrow(Wide(a) * Wide(b)); }

class Rational {
  public:
    Rational() = default;
    Rational(Int n) : num_(n) {}
    Rational(Int n, Int d) { assign(Wide(n), Wide(d)); }

    static Rational from_wide(Wide n, Wide d) {
        Rational r;
        r.assign(n, d);
        return r;
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r;
        r.num_ = detail::narrow(-Wide(num_));
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                         Wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_wide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
                         Wide(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from_wide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

  private:
    void assign(Wide n, Wide d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        unsigned __int128 g = detail::wide_gcd(detail::wide_abs(n), detail::wide_abs(d));
        num_ = detail::narrow(n / Wide(g));
        den_ = detail::narrow(d / Wide(g));
    }

    Int num_ = 0;
    Int den_ = 1;
};

}  // namespace mckay
