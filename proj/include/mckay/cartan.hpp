#pragma once

// Recognition of Cartan matrices of finite type A-G and affine type
// A~/D~/E~, up to simultaneous row/column permutation.
//
// Matrices use the row convention: M[i][j] counts the edge multiplicity from
// node i to node j, so the node whose row carries an entry of magnitude >= 2
// is the short-root side of that edge.  B_n carries the -2 in the
// second-to-last row, C_n is its transpose; G2 is [[2,-1],[-3,2]] (the
// transpose matches the same family under the node swap).

#include <string>
#include <vector>

#include "mckay/mckay_matrices.hpp"

namespace mckay {

struct DynkinType {
    std::string family = "unknown";  // "A".."G" or "unknown"
    int rank = 0;
    bool affine = false;

    bool known() const { return family != "unknown"; }
    std::string name() const;  // "E6", "A3~", "unknown"

    friend bool operator==(const DynkinType& a, const DynkinType& b) {
        return a.family == b.family && a.rank == b.rank && a.affine == b.affine;
    }
};

struct CartanClassification {
    DynkinType type;
    // permutation[i] = node of the catalog matrix matched to input node i;
    // empty when unknown.
    std::vector<int> permutation;
};

// The catalog matrix of a type in the conventions above.  Affine types are
// the simply-laced A~_n (n>=1), D~_n (n>=4), E~_6..E~_8.
IntMatrix cartan_matrix(const DynkinType& type);

bool is_cartan_shape(const IntMatrix& m);

// Match against every finite then affine catalog entry of the right size;
// families are tried in alphabetical order so ties (B2 vs C2) resolve
// deterministically.  Non-Cartan input yields family "unknown".
CartanClassification classify_cartan(const IntMatrix& m);

// Text diagram with nodes numbered in input order; multiple edges render as
// = / three-bar lines with the arrow toward the short root.  One legend line
// per node when labels are given.
std::string ascii_dynkin(const IntMatrix& m, const std::vector<std::string>& labels = {});

}  // namespace mckay
