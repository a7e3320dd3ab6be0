#pragma once

// Exact character theory for finite matrix groups.
//
// Tables are computed by Dixon's finite-field method: the class-sum matrices
// built from structure constants commute and are simultaneously diagonalized
// over GF(p) for the smallest prime p = 1 (mod m) with p > 2*sqrt(|G|)
// (m the field order of the group); eigenvalue multiplicity counting then
// lifts every value exactly into Q(zeta_m).  Rows are ordered trivial first,
// then by ascending degree, then lexicographically by canonical values.

#include <memory>
#include <vector>

#include "mckay/group.hpp"

namespace mckay {

class ClassFunction {
  public:
    ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

    const GroupPtr& group() const { return group_; }
    const std::vector<Cyclotomic>& values() const { return values_; }
    const Cyclotomic& value(int class_index) const { return values_[class_index]; }
    std::size_t num_classes() const { return values_.size(); }

    // Value at the identity class (class 0 by the class ordering).
    const Cyclotomic& degree_value() const { return values_[0]; }

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
    ClassFunction scaled(const Rational& s) const;
    // Subtract a rational constant from every value (chi - 2 and friends).
    ClassFunction minus_constant(const Rational& c) const;

    friend bool operator==(const ClassFunction& a, const ClassFunction& b);
    friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

  private:
    GroupPtr group_;
    std::vector<Cyclotomic> values_;
};

struct CharacterTable {
    GroupPtr group;
    std::vector<ClassFunction> irreducibles;
    std::size_t trivial_index = 0;
    std::vector<long> degrees;
    long dixon_prime = 0;

    std::size_t size() const { return irreducibles.size(); }
};

// Trace of a class representative, exactly.
ClassFunction natural_character(const GroupPtr& group);

ClassFunction trivial_character(const GroupPtr& group);

CharacterTable character_table(const GroupPtr& group);

// (1/|G|) sum over classes of |C| f1(C) conj(f2(C)), exact.
Cyclotomic inner_product(const ClassFunction& f1, const ClassFunction& f2);

// Pointwise product (character of the tensor product).
ClassFunction tensor(const ClassFunction& f1, const ClassFunction& f2);

struct VirtualCharacter {
    std::vector<Int> multiplicities;  // one per irreducible, possibly negative
};

// Multiplicities <f, chi_i>; throws std::domain_error when any inner product
// is not a rational integer.
VirtualCharacter decompose(const ClassFunction& f, const CharacterTable& table);
ClassFunction recompose(const VirtualCharacter& v, const CharacterTable& table);

// Frobenius induction along a normal pair: the induced character extends tau
// by zero off H and averages over G.
ClassFunction induce(const NormalPair& pair, const ClassFunction& tau);

// Restriction of a class function on G to H.
ClassFunction restrict(const NormalPair& pair, const ClassFunction& rho);

// tau^g(h) = tau(g h g^-1) for the coset representative with the given index.
ClassFunction conjugate_character(const NormalPair& pair, const ClassFunction& tau,
                                  int coset_index);

// Permutation of table rows induced by conjugation with each coset rep:
// action[c][t] = index of (irr_t)^{g_c}.
std::vector<std::vector<int>> conjugation_action(const NormalPair& pair,
                                                 const CharacterTable& table_h);

// Orbits of the action restricted to the nontrivial irreducibles, ordered by
// smallest member index; members ascending.
std::vector<std::vector<int>> irr_orbits(const NormalPair& pair,
                                         const CharacterTable& table_h);

}  // namespace mckay
