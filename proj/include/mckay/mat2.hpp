#pragma once

// 2x2 matrices over a cyclotomic field, the elements of our groups.
// All four entries share one order; unimodularity is enforced where groups
// are built, not here.

#include <array>
#include <string>

#include "mckay/cyclotomic.hpp"

namespace mckay {

class Mat2 {
  public:
    Mat2() : e_{Cyclotomic(1), Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)} {}
    Mat2(Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d)
        : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
        long m = e_[0].order();
        for (const Cyclotomic& x : e_)
            if (x.order() != m)
                throw std::invalid_argument("matrix entries must share one cyclotomic order");
    }

    static Mat2 identity(long m) {
        return Mat2(Cyclotomic::one(m), Cyclotomic::zero(m), Cyclotomic::zero(m),
                    Cyclotomic::one(m));
    }

    const Cyclotomic& at(int r, int c) const { return e_[2 * r + c]; }
    long order() const { return e_[0].order(); }

    Cyclotomic det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
    Cyclotomic trace() const { return e_[0] + e_[3]; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2(x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2],
                    x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
                    x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2],
                    x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]);
    }

    // Inverse of a unimodular matrix is its adjugate.
    Mat2 inverse_unimodular() const { return Mat2(e_[3], -e_[1], -e_[2], e_[0]); }

    Mat2 embed(long m_target) const {
        return Mat2(e_[0].embed(m_target), e_[1].embed(m_target), e_[2].embed(m_target),
                    e_[3].embed(m_target));
    }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.e_[0] == y.e_[0] && x.e_[1] == y.e_[1] && x.e_[2] == y.e_[2] &&
               x.e_[3] == y.e_[3];
    }

    // Canonical serialization of the four entries; element identity in groups.
    std::string key() const {
        return e_[0].key() + "|" + e_[1].key() + "|" + e_[2].key() + "|" + e_[3].key();
    }

  private:
    std::array<Cyclotomic, 4> e_;
};

}  // namespace mckay
