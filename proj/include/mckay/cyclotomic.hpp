#pragma once

// Exact elements of the cyclotomic fields Q(zeta_m).
//
// An element is a polynomial in zeta_m over Q, stored on the power basis
// 1, zeta, ..., zeta^(phi(m)-1) as the unique remainder modulo the m-th
// cyclotomic polynomial Phi_m.  Structural equality of (order, coefficients)
// therefore decides field equality.  The reduction data for each order is
// computed once and cached process-wide.
//
// Conventions:
//   * operations between two elements require equal orders; embed() moves an
//     element into a larger field (order must divide the target order),
//   * conj() is the Galois map zeta -> zeta^(m-1), i.e. complex conjugation
//     on every embedding,
//   * to_complex() evaluates at zeta_m = exp(2*pi*i/m) and exists for
//     numerical sanity checks only, never for equality decisions.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mckay/rational.hpp"

namespace mckay {

long euler_phi(long m);

// Phi_m as integer coefficients, ascending degree, monic of degree phi(m).
// Computed by dividing x^m - 1 by the product of Phi_d over proper divisors d.
std::vector<Int> cyclotomic_polynomial(long m);

class Cyclotomic {
  public:
    Cyclotomic();                                   // zero in Q(zeta_1) = Q
    explicit Cyclotomic(const Rational& r, long m = 1);
    Cyclotomic(Int n) : Cyclotomic(Rational(n)) {}

    static Cyclotomic zero(long m);
    static Cyclotomic one(long m);
    // zeta_m^k in canonical form, k taken mod m.
    static Cyclotomic root_of_unity(long m, long k);
    // Reduce an arbitrary-degree coefficient vector modulo Phi_m.
    static Cyclotomic from_polynomial(long m, const std::vector<Rational>& raw);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const;  // throws std::domain_error when irrational

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a);

    // Multiplicative inverse via the extended gcd of the representing
    // polynomial with Phi_m (Phi_m is irreducible, so any nonzero element
    // is invertible).  Throws std::domain_error on zero.
    Cyclotomic inverse() const;
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    // Galois action zeta -> zeta^k for gcd(k, m) = 1; conj() is k = m-1.
    Cyclotomic galois(long k) const;
    Cyclotomic conj() const;

    // Same element written in Q(zeta_target); order() must divide m_target.
    Cyclotomic embed(long m_target) const;

    // Equal orders compare structurally; distinct orders are first embedded
    // into the lcm, so == is equality of field elements.
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Total order used only to fix deterministic layouts (class ordering,
    // character-row ordering): lexicographic on the coefficient vector.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

    // Compact canonical text form, e.g. "z4[0:1/2,1:-3]".  Equal strings
    // iff equal (order, coefficients).
    std::string key() const;
    std::string to_string() const;  // human-readable, e.g. "1/2 - 3*z^3"

    std::complex<double> to_complex() const;

  private:
    long order_ = 1;
    std::vector<Rational> coeffs_;  // length phi(order_)
};

}  // namespace mckay
