#pragma once

// GF(p) arithmetic for primes p < 2^31.  Workspace for the finite-field
// character table computation; never part of any exported result.

#include <cstdint>
#include <stdexcept>

#include "mckay/rational.hpp"

namespace mckay {

class PrimeFieldElement {
  public:
    PrimeFieldElement() = default;
    PrimeFieldElement(Int value, Int p) : p_(p) {
        if (p < 2) throw std::domain_error("prime field modulus must be >= 2");
        value_ = value % p;
        if (value_ < 0) value_ += p;
    }

    Int value() const { return value_; }
    Int modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    friend PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b) {
        a.check(b);
        return PrimeFieldElement((a.value_ + b.value_) % a.p_, a.p_);
    }
    friend PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b) {
        a.check(b);
        return PrimeFieldElement(a.value_ - b.value_, a.p_);
    }
    friend PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b) {
        a.check(b);
        return PrimeFieldElement((a.value_ * b.value_) % a.p_, a.p_);
    }
    friend PrimeFieldElement operator/(PrimeFieldElement a, PrimeFieldElement b) {
        return a * b.inverse();
    }

    PrimeFieldElement pow(Int e) const {
        Int base = value_, acc = 1 % p_;
        Int exp = e % (p_ - 1);
        if (exp < 0) exp += p_ - 1;
        while (exp > 0) {
            if (exp & 1) acc = acc * base % p_;
            base = base * base % p_;
            exp >>= 1;
        }
        return PrimeFieldElement(acc, p_);
    }

    PrimeFieldElement inverse() const {
        if (value_ == 0) throw std::domain_error("inverse of zero in GF(p)");
        return pow(p_ - 2);
    }

    friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        return a.p_ == b.p_ && a.value_ == b.value_;
    }
    friend bool operator!=(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        return !(a == b);
    }

  private:
    void check(const PrimeFieldElement& other) const {
        if (p_ != other.p_)
            throw std::invalid_argument("prime field modulus mismatch");
    }

    Int value_ = 0;
    Int p_ = 2;
};

}  // namespace mckay
