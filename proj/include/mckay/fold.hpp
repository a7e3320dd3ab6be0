#pragma once

// Folding the intersection lattice of a normal pair H <| G.
//
// The lattice has basis Irr+(H) (standing for the exceptional curve classes
// E_tau), pairing B_{t1,t2} = <(chi_H - 2) chi_t1, chi_t2>, and a G/H action
// permuting the basis the way conjugation permutes Irr+(H).  Pushing a basis
// vector forward along the degree-n quotient weights it by f = n / orbit
// size, and for orbit representatives e_i, e_j the pushforward pairing is
//
//     P[O_i][O_j] = (1/n) (sum_g sigma_g e_i)^T B (sum_g sigma_g e_j),
//
// an integer.  Two weighted variants are kept because the weighting side is
// a convention choice:
//     D_row[i][j]   = P[i][j] / f_j   (weight by the row orbit's f)
//     D_paper[i][j] = P[i][j] / f_i   (literal f_{E_2} weighting)
// verify_pair() records which of the two satisfies 2I - C = -D.

#include <optional>
#include <string>
#include <vector>

#include "mckay/cartan.hpp"
#include "mckay/characters.hpp"
#include "mckay/mckay_matrices.hpp"

namespace mckay {

struct IntersectionLattice {
    std::vector<int> basis;                    // table indices of Irr+(H)
    IntMatrix pairing;                         // B over the basis
    std::vector<std::vector<int>> action;      // one basis permutation per coset rep
    std::vector<std::vector<int>> quotient_mult;
};

// B from the character formula plus the conjugation permutations.  Verifies
// that each permutation preserves the pairing and that the assignment
// coset -> permutation respects the quotient multiplication.
IntersectionLattice lattice_from_characters(const NormalPair& pair,
                                            const CharacterTable& table_h,
                                            const ClassFunction& chi_nat_h);

std::vector<std::vector<int>> lattice_orbits(const IntersectionLattice& lat);

// P over orbits; throws std::domain_error if an entry fails to be an integer.
IntMatrix pushforward_pairing(const IntersectionLattice& lat,
                              const std::vector<std::vector<int>>& orbits);

// f(O) = n / |O|; throws std::logic_error when |O| does not divide n.
std::vector<Int> orbit_weights(const std::vector<std::vector<int>>& orbits, Int n);

IntMatrix weighted_d(const IntMatrix& p, const std::vector<Int>& f, bool row_convention);

// c[O1][O2] = sum over tau' in O2 of a_{tau1, tau'}; checked over every
// representative tau1 in O1.
IntMatrix slodowy_c(const McKayMatrix& a_plus, const std::vector<std::vector<int>>& orbits);

struct FoldVerdicts {
    bool main_identity = false;       // P entry == <(chi_G-2) chi_Ind1, chi_Ind2>
    std::string d_convention = "fail";  // "row", "paper", "both" or "fail"
    bool cartan_finite = false;       // 2I - C matched a finite type
    bool mackey = false;              // Res Ind tau == sum of conjugates
    bool frobenius = false;           // <Ind tau, rho>_G == <tau, Res rho>_H
    bool representative_independent = false;
    bool weights_integral = false;
    bool pairing_action_invariant = false;
    std::vector<std::string> failures;  // offending identities, empty when clean

    bool identities_hold() const {
        return main_identity && d_convention != "fail" && mackey && frobenius &&
               representative_independent && weights_integral && pairing_action_invariant;
    }
};

struct FoldResult {
    std::vector<std::vector<int>> orbits;  // table indices of Irr+(H)
    Int n = 1;                             // |G/H|
    std::vector<Int> f;
    IntMatrix b;        // pairing on the unfolded lattice
    IntMatrix p;
    IntMatrix d_row;
    IntMatrix d_paper;
    IntMatrix c;
    CartanClassification cartan;  // of 2I - C
    FoldVerdicts verdicts;

    // degree of a representative character per orbit, for node labels
    std::vector<Int> orbit_degrees;
};

// Assemble orbits, P, f, D, C for the pair and machine-check the identities.
// Identity failures are reported in the verdicts, not thrown.
FoldResult verify_pair(const NormalPair& pair, const CharacterTable& table_h,
                       const CharacterTable& table_g);

}  // namespace mckay
