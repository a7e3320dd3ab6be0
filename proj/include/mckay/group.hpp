#pragma once

// Finite subgroups of SL2(C) as explicit element lists.
//
// closure() enumerates the group generated by unimodular matrices by
// breadth-first multiplication, then re-embeds every entry into
// Q(zeta_M) where M = lcm(exponent, construction order).  For every group
// in the shipped catalog M equals the group exponent.  Elements are
// identified by the canonical serialization of their entries.
//
// Conjugacy classes are computed at construction and ordered by
// (size, order of representative, canonical serialization of representative)
// with the representative being the lexicographically smallest member, so
// every matrix downstream is reproducible bit for bit.

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "mckay/mat2.hpp"

namespace mckay {

struct ClassData {
    std::vector<std::vector<int>> members;  // partition of element indices
    std::vector<int> representative;
    std::vector<long> size;
    std::vector<int> class_of;       // element index -> class index
    std::vector<int> inverse_class;  // involution on classes
    std::vector<long> rep_order;
    // power_class[c][j] = class of rep^j for 0 <= j < rep_order[c]
    std::vector<std::vector<int>> power_class;

    std::size_t count() const { return members.size(); }
};

class FiniteMatrixGroup;
using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

class FiniteMatrixGroup {
  public:
    // Breadth-first closure of the generated group.  Throws std::domain_error
    // on a non-unimodular generator and std::runtime_error when the closure
    // exceeds `cap` elements.
    static GroupPtr closure(const std::vector<Mat2>& generators, std::size_t cap = 10000);

    // Wrap an already-closed set of elements (used for subgroups of a closed
    // group).  Elements keep the given order; index 0 must be the identity.
    static GroupPtr from_closed_elements(std::vector<Mat2> elements);

    std::size_t order() const { return elements_.size(); }
    const Mat2& element(int i) const { return elements_[i]; }
    int identity() const { return 0; }
    const std::vector<int>& generator_indices() const { return generator_indices_; }

    // Multiplication oracle: product then canonical lookup.
    int product(int i, int j) const;
    int inverse(int i) const { return inverse_[i]; }
    long element_order(int i) const { return element_order_[i]; }
    int power(int i, long e) const;

    // Index of a matrix, or -1 when it does not belong to the group.  The
    // matrix order must equal field_order() for the lookup to succeed.
    int find(const Mat2& m) const;

    long exponent() const { return exponent_; }
    // Common cyclotomic order of all entries and all character values.
    long field_order() const { return field_order_; }

    const ClassData& classes() const { return classes_; }

  private:
    FiniteMatrixGroup() = default;
    void index_elements();
    void compute_orders_and_exponent();
    void compute_classes();

    std::vector<Mat2> elements_;
    std::vector<int> generator_indices_;
    std::vector<int> inverse_;
    std::vector<long> element_order_;
    std::unordered_map<std::string, int> index_;
    long exponent_ = 1;
    long field_order_ = 1;
    ClassData classes_;
};

// The deterministic class partition computed at construction.
inline const ClassData& conjugacy_classes(const FiniteMatrixGroup& g) { return g.classes(); }

// a_{ijk} = #{(x,y) in C_i x C_j : xy = z} for the stored representative z of
// C_k; independent of the choice of z.
long structure_constant(const FiniteMatrixGroup& g, int i, int j, int k);

// Same count against an explicit z in C_k (for representative-independence
// tests).
long structure_constant_at(const FiniteMatrixGroup& g, int i, int j, int z_element);

// Full tensor a[i][j][k], computed in O(|G| * #classes) products.
std::vector<std::vector<std::vector<long>>> structure_constant_tensor(
    const FiniteMatrixGroup& g);

bool is_subgroup(const FiniteMatrixGroup& g, const std::vector<int>& h_indices);

// True iff h is a subgroup with g h g^-1 = h for every generator.  Throws
// std::invalid_argument when h_indices is not a subgroup.
bool is_normal_subgroup(const FiniteMatrixGroup& g, const std::vector<int>& h_indices);

// All normal subgroups (including the trivial one and the whole group) as
// ascending element-index sets, found as multiplicatively closed unions of
// conjugacy classes containing the identity.  Requires |G| <= 1000.
std::vector<std::vector<int>> normal_subgroups(const FiniteMatrixGroup& g);

// A normal pair H <| G: the subgroup re-packaged as a group of its own plus
// coset representatives (smallest element index per coset) and the quotient
// multiplication table.
class NormalPair {
  public:
    NormalPair(GroupPtr g, std::vector<int> h_indices);

    const GroupPtr& G() const { return g_; }
    const GroupPtr& H() const { return h_; }
    std::size_t quotient_order() const { return coset_reps_.size(); }

    const std::vector<int>& h_indices() const { return h_indices_; }
    int h_to_g(int h_index) const { return h_to_g_[h_index]; }
    int g_to_h(int g_index) const { return g_to_h_[g_index]; }  // -1 if outside H
    bool contains(int g_index) const { return g_to_h_[g_index] >= 0; }

    const std::vector<int>& coset_reps() const { return coset_reps_; }
    int quotient_mult(int i, int j) const { return quotient_mult_[i][j]; }

  private:
    GroupPtr g_;
    GroupPtr h_;
    std::vector<int> h_indices_;
    std::vector<int> h_to_g_;
    std::vector<int> g_to_h_;
    std::vector<int> coset_reps_;
    std::vector<std::vector<int>> quotient_mult_;
};

}  // namespace mckay
