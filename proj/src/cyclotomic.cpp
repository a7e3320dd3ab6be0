#include "mckay/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mckay {

long euler_phi(long m) {
    if (m < 1) throw std::domain_error("euler_phi of non-positive argument");
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

constexpr long kMaxOrder = 1000;

// Exact division of integer polynomials (ascending coefficients), used for
// (x^m - 1) / prod Phi_d.  The divisor is monic so no fractions appear.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    if (den.empty() || den.back() != 1)
        throw std::logic_error("cyclotomic division expects a monic divisor");
    if (num.size() < den.size()) throw std::logic_error("bad cyclotomic division");
    std::vector<Int> quot(num.size() - den.size() + 1, 0);
    for (size_t i = quot.size(); i-- > 0;) {
        Int c = num[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j)
            num[i + j] = checked_sub(num[i + j], checked_mul(c, den[j]));
    }
    for (Int c : num)
        if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
    return quot;
}

std::vector<Int> phi_poly_uncached(long m, const std::map<long, std::vector<Int>>& lower) {
    // x^m - 1
    std::vector<Int> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d)
        if (m % d == 0) num = divide_exact(std::move(num), lower.at(d));
    return num;
}

// All reduction data for one order, built once.
struct Basis {
    long m = 1;
    long phi = 1;
    std::vector<Int> poly;  // Phi_m, ascending, degree phi
    // power[e] = coefficients of x^e mod Phi_m for 0 <= e < power.size().
    // Covers exponents up to max(m, 2*phi - 1) so that products and Galois
    // images reduce by table lookup.
    std::vector<std::vector<Int>> power;
};

class BasisRegistry {
  public:
    static const Basis& get(long m) {
        static BasisRegistry instance;
        return instance.fetch(m);
    }

  private:
    const Basis& fetch(long m) {
        if (m < 1) throw std::domain_error("cyclotomic order must be positive");
        if (m > kMaxOrder) throw std::domain_error("cyclotomic order above supported range");
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = bases_.find(m);
        if (it != bases_.end()) return it->second;

        // Phi_d for every divisor d of m, recursively (all cached).
        for (long d = 1; d < m; ++d)
            if (m % d == 0 && !polys_.count(d)) polys_[d] = phi_poly_uncached(d, polys_);
        if (!polys_.count(m)) polys_[m] = phi_poly_uncached(m, polys_);

        Basis b;
        b.m = m;
        b.poly = polys_[m];
        b.phi = static_cast<long>(b.poly.size()) - 1;
        long limit = std::max<long>(m, 2 * b.phi - 1);
        b.power.resize(limit);
        for (long e = 0; e < limit; ++e) {
            std::vector<Int> row(b.phi, 0);
            if (e < b.phi) {
                row[e] = 1;
            } else {
                // x^e = x * x^(e-1) reduced: shift then subtract the overflow
                // coefficient times Phi_m (monic, degree phi).
                const std::vector<Int>& prev = b.power[e - 1];
                Int top = prev[b.phi - 1];
                for (long i = b.phi - 1; i > 0; --i) row[i] = prev[i - 1];
                row[0] = 0;
                if (top != 0)
                    for (long i = 0; i < b.phi; ++i)
                        row[i] = checked_sub(row[i], checked_mul(top, b.poly[i]));
            }
            b.power[e] = std::move(row);
        }
        return bases_.emplace(m, std::move(b)).first->second;
    }

    std::mutex mutex_;
    std::map<long, Basis> bases_;
    std::map<long, std::vector<Int>> polys_;
};

const Basis& basis(long m) { return BasisRegistry::get(m); }

}  // namespace

std::vector<Int> cyclotomic_polynomial(long m) { return basis(m).poly; }

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& r, long m) : order_(m) {
    const Basis& b = basis(m);
    coeffs_.assign(b.phi, Rational(0));
    coeffs_[0] = r;
}

Cyclotomic Cyclotomic::zero(long m) { return Cyclotomic(Rational(0), m); }
Cyclotomic Cyclotomic::one(long m) { return Cyclotomic(Rational(1), m); }

Cyclotomic Cyclotomic::root_of_unity(long m, long k) {
    const Basis& b = basis(m);
    k %= m;
    if (k < 0) k += m;
    Cyclotomic z;
    z.order_ = m;
    z.coeffs_.assign(b.phi, Rational(0));
    const std::vector<Int>& row = b.power[k];
    for (long i = 0; i < b.phi; ++i) z.coeffs_[i] = Rational(row[i]);
    return z;
}

Cyclotomic Cyclotomic::from_polynomial(long m, const std::vector<Rational>& raw) {
    const Basis& b = basis(m);
    Cyclotomic z;
    z.order_ = m;
    z.coeffs_.assign(b.phi, Rational(0));
    for (size_t e = 0; e < raw.size(); ++e) {
        if (raw[e].is_zero()) continue;
        if (static_cast<long>(e) < b.phi) {
            z.coeffs_[e] += raw[e];
        } else {
            if (static_cast<long>(e) >= static_cast<long>(b.power.size()))
                throw std::logic_error("cyclotomic reduction exponent out of range");
            const std::vector<Int>& row = b.power[e];
            for (long i = 0; i < b.phi; ++i)
                if (row[i] != 0) z.coeffs_[i] += raw[e] * Rational(row[i]);
        }
    }
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const Rational& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic z = *this;
    for (Rational& c : z.coeffs_) c = -c;
    return z;
}

namespace {
void require_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("cyclotomic order mismatch; embed() first");
}
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_order(a, b);
    Cyclotomic z = a;
    for (size_t i = 0; i < z.coeffs_.size(); ++i) z.coeffs_[i] += b.coeffs_[i];
    return z;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_order(a, b);
    Cyclotomic z = a;
    for (size_t i = 0; i < z.coeffs_.size(); ++i) z.coeffs_[i] -= b.coeffs_[i];
    return z;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_order(a, b);
    size_t n = a.coeffs_.size();
    std::vector<Rational> conv(2 * n - 1, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Cyclotomic::from_polynomial(a.order_, conv);
}

Cyclotomic operator*(const Rational& s, const Cyclotomic& a) {
    Cyclotomic z = a;
    for (Rational& c : z.coeffs_) c *= s;
    return z;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
    // Extended Euclid over Q[x] for (this, Phi_m): u*a + v*Phi = g with g a
    // nonzero constant, so a^{-1} = u/g.  Remainders are kept monic at every
    // step; the plain remainder sequence swells exponentially.
    const Basis& b = basis(order_);
    std::vector<Rational> r0(b.poly.size());
    for (size_t i = 0; i < b.poly.size(); ++i) r0[i] = Rational(b.poly[i]);
    std::vector<Rational> r1 = coeffs_;
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    auto make_monic = [&](std::vector<Rational>& r, std::vector<Rational>& u) {
        trim(r);
        if (r.empty()) return;
        Rational lead = r.back();
        if (lead == Rational(1)) return;
        for (Rational& c : r) c /= lead;
        for (Rational& c : u) c /= lead;
    };
    std::vector<Rational> u0{}, u1{Rational(1)};  // coefficients of `a` only
    make_monic(r1, u1);
    while (true) {
        if (r1.empty()) throw std::logic_error("Phi_m divided a nonzero element");
        if (r1.size() == 1) break;
        // r0 = q*r1 + r2 with r1 monic
        std::vector<Rational> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0,
                                Rational(0));
        std::vector<Rational> r2 = r0;
        for (size_t i = q.size(); i-- > 0;) {
            if (r2.size() < i + r1.size()) continue;
            Rational c = r2[i + r1.size() - 1];
            q[i] = c;
            if (c.is_zero()) continue;
            for (size_t j = 0; j < r1.size(); ++j)
                r2[i + j] -= c * r1[j];
        }
        // u2 = u0 - q*u1
        std::vector<Rational> u2 = u0;
        u2.resize(std::max(u0.size(), q.size() + u1.size()), Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < u1.size(); ++j)
                u2[i + j] -= q[i] * u1[j];
        }
        make_monic(r2, u2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    Rational g = r1[0];  // 1 unless the loop ended on the first pass
    std::vector<Rational> inv = u1;
    for (Rational& c : inv) c /= g;
    return from_polynomial(order_, inv);
}

Cyclotomic Cyclotomic::galois(long k) const {
    k %= order_;
    if (k < 0) k += order_;
    if (std::gcd(k, order_) != 1)
        throw std::invalid_argument("galois exponent not coprime to the order");
    const Basis& b = basis(order_);
    std::vector<Rational> raw(b.m, Rational(0));
    // Power-basis exponent i maps to k*i mod m; x^(k*i) reduces by table.
    Cyclotomic z = zero(order_);
    for (long i = 0; i < b.phi; ++i) {
        if (coeffs_[i].is_zero()) continue;
        long e = (k * i) % b.m;
        const std::vector<Int>& row = b.power[e];
        for (long t = 0; t < b.phi; ++t)
            if (row[t] != 0) z.coeffs_[t] += coeffs_[i] * Rational(row[t]);
    }
    return z;
}

Cyclotomic Cyclotomic::conj() const {
    if (order_ == 1) return *this;
    return galois(order_ - 1);
}

Cyclotomic Cyclotomic::embed(long m_target) const {
    if (m_target == order_) return *this;
    if (m_target % order_ != 0)
        throw std::invalid_argument("embed target order not divisible by source order");
    long scale = m_target / order_;
    const Basis& b = basis(m_target);
    Cyclotomic z = zero(m_target);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        long e = (static_cast<long>(i) * scale) % m_target;
        const std::vector<Int>& row = b.power[e];
        for (long t = 0; t < b.phi; ++t)
            if (row[t] != 0) z.coeffs_[t] += coeffs_[i] * Rational(row[t]);
    }
    return z;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    long l = std::lcm(a.order_, b.order_);
    return a.embed(l).coeffs_ == b.embed(l).coeffs_;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
        long l = std::lcm(a.order_, b.order_);
        return compare(a.embed(l), b.embed(l));
    }
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] < b.coeffs_[i]) return -1;
        if (b.coeffs_[i] < a.coeffs_[i]) return 1;
    }
    return 0;
}

std::string Cyclotomic::key() const {
    std::string s = "z" + std::to_string(order_) + "[";
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) s += ",";
        first = false;
        s += std::to_string(i) + ":" + coeffs_[i].to_string();
    }
    s += "]";
    return s;
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        std::string term;
        if (i == 0) {
            term = coeffs_[i].to_string();
        } else {
            std::string var = "z" + std::to_string(order_);
            if (i > 1) var += "^" + std::to_string(i);
            if (coeffs_[i] == Rational(1))
                term = var;
            else if (coeffs_[i] == Rational(-1))
                term = "-" + var;
            else
                term = coeffs_[i].to_string() + "*" + var;
        }
        if (!s.empty() && term[0] != '-') s += "+";
        s += term;
    }
    return s;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc = 0.0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        double arg = 2.0 * std::numbers::pi * static_cast<double>(i) /
                     static_cast<double>(order_);
        acc += coeffs_[i].to_double() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return acc;
}

}  // namespace mckay
