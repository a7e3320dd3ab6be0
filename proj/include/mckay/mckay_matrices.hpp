#pragma once

// The McKay matrix A, the intersection matrix B = A - 2I over the nontrivial
// irreducibles, and exact rational matrix inverses for the dual basis.

#include <vector>

#include "mckay/characters.hpp"

namespace mckay {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rational>>;

struct McKayMatrix {
    bool includes_trivial = false;
    std::vector<int> irr_indices;  // table rows indexing the matrix
    IntMatrix a;                   // a[t1][t2] = <chi_nat * chi_t1, chi_t2>
};

// Decomposition numbers of chi_nat (x) tau over the table.  Throws
// std::domain_error if any multiplicity fails to be a nonnegative integer.
McKayMatrix mckay_matrix(const CharacterTable& table, const ClassFunction& chi_nat,
                         bool include_trivial);

// B = <(chi_nat - 2) chi_t1, chi_t2> over the nontrivial irreducibles,
// which equals A - 2I entrywise.
IntMatrix intersection_matrix_b(const CharacterTable& table, const ClassFunction& chi_nat);

IntMatrix two_i_minus(const IntMatrix& a);

// Exact inverse of B over Q via fraction-free (Bareiss) elimination; columns
// are the coordinates of the dual basis elements.  Throws std::domain_error
// on a singular matrix.
RatMatrix dual_basis(const IntMatrix& b);

// Fraction-free determinant.
Int determinant(const IntMatrix& m);

// All leading principal minors alternate in sign starting negative
// (negative definiteness for a symmetric integer matrix).
bool is_negative_definite(const IntMatrix& m);

IntMatrix transpose(const IntMatrix& m);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix to_rational(const IntMatrix& m);

}  // namespace mckay
