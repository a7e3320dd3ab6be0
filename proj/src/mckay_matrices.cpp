#include "mckay/mckay_matrices.hpp"

#include <stdexcept>

namespace mckay {

namespace {

Int integer_inner(const ClassFunction& f1, const ClassFunction& f2, bool allow_negative) {
    Cyclotomic ip = inner_product(f1, f2);
    if (!ip.is_rational() || !ip.to_rational().is_integer())
        throw std::domain_error("inner product is not a rational integer");
    Int v = ip.to_rational().num();
    if (!allow_negative && v < 0)
        throw std::domain_error("negative multiplicity in a McKay matrix");
    return v;
}

}  // namespace

McKayMatrix mckay_matrix(const CharacterTable& table, const ClassFunction& chi_nat,
                         bool include_trivial) {
    if (chi_nat.group() != table.group)
        throw std::invalid_argument("chi_nat is not on the table's group");
    McKayMatrix result;
    result.includes_trivial = include_trivial;
    for (int t = 0; t < static_cast<int>(table.size()); ++t)
        if (include_trivial || t != static_cast<int>(table.trivial_index))
            result.irr_indices.push_back(t);

    const std::size_t n = result.irr_indices.size();
    result.a.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        ClassFunction product = tensor(chi_nat, table.irreducibles[result.irr_indices[i]]);
        for (std::size_t j = 0; j < n; ++j)
            result.a[i][j] =
                integer_inner(product, table.irreducibles[result.irr_indices[j]], false);
    }
    return result;
}

IntMatrix intersection_matrix_b(const CharacterTable& table, const ClassFunction& chi_nat) {
    ClassFunction shifted = chi_nat.minus_constant(Rational(2));
    std::vector<int> indices;
    for (int t = 0; t < static_cast<int>(table.size()); ++t)
        if (t != static_cast<int>(table.trivial_index)) indices.push_back(t);

    const std::size_t n = indices.size();
    IntMatrix b(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        ClassFunction product = tensor(shifted, table.irreducibles[indices[i]]);
        for (std::size_t j = 0; j < n; ++j)
            b[i][j] = integer_inner(product, table.irreducibles[indices[j]], true);
    }
    return b;
}

IntMatrix two_i_minus(const IntMatrix& a) {
    IntMatrix m = a;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = -m[i][j];
        m[i][i] += 2;
    }
    return m;
}

namespace {

// Bareiss elimination on a working copy; returns the determinant and leaves
// the augmented part holding det * inverse when requested.
Int bareiss_determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    Int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot == k) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = checked_sub(checked_mul(m[i][j], m[k][k]),
                                    checked_mul(m[i][k], m[k][j]));
                m[i][j] = t / prev;  // exact by Bareiss
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

Int determinant(const IntMatrix& m) { return bareiss_determinant(m); }

RatMatrix dual_basis(const IntMatrix& b) {
    const std::size_t n = b.size();
    // Gauss-Jordan over Q on [B | I].
    RatMatrix m(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(b[i][j]);
        m[i][n + i] = Rational(1);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c].is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("intersection matrix is singular");
        std::swap(m[c], m[pivot]);
        Rational inv = Rational(1) / m[c][c];
        for (std::size_t j = 0; j < 2 * n; ++j) m[c][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    RatMatrix x(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x[i][j] = m[i][n + j];
    return x;
}

bool is_negative_definite(const IntMatrix& m) {
    // Leading principal minors of a negative definite matrix satisfy
    // sign(det_k) = (-1)^k.
    for (std::size_t k = 1; k <= m.size(); ++k) {
        IntMatrix lead(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
        Int d = determinant(lead);
        if (k % 2 == 1 && d >= 0) return false;
        if (k % 2 == 0 && d <= 0) return false;
    }
    return true;
}

IntMatrix transpose(const IntMatrix& m) {
    if (m.empty()) return {};
    IntMatrix t(m[0].size(), std::vector<Int>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (Int v : m[i]) r[i].push_back(Rational(v));
    return r;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.empty() || b.empty()) return {};
    RatMatrix c(a.size(), std::vector<Rational>(b[0].size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

}  // namespace mckay
