#pragma once

// The standard finite subgroups of SL2(C) with explicit generators, and the
// normal pairs the folding pipeline runs on.
//
// Naming: "C:n" is the cyclic group of order n; "BD:m" is the binary
// dihedral group of order m (m = 4n, n >= 2), so BD:8 is the quaternion
// group; "2T", "2O", "2I" are the binary tetrahedral, octahedral and
// icosahedral groups.

#include <optional>
#include <string>
#include <vector>

#include "mckay/cartan.hpp"
#include "mckay/group.hpp"

namespace mckay {

struct CatalogEntry {
    std::string name;
    std::vector<Mat2> generators;
    long expected_order = 0;
    int expected_classes = 0;
    DynkinType expected_type;  // finite type of 2I - A over Irr+
};

// The groups exercised by the verification suite.
std::vector<std::string> catalog_names();

// Parses any "C:n" (n >= 1), "BD:4n" (n >= 2), "2T", "2O", "2I"; throws
// std::invalid_argument on anything else.
CatalogEntry catalog_entry(const std::string& name);

// Build and validate (closure order and class count); results are cached, so
// repeated lookups are cheap.  Throws std::runtime_error on validation
// failure.
GroupPtr build_catalog_group(const std::string& name);

struct PairEntry {
    std::string g_name;
    std::string h_name;
    std::vector<Mat2> h_generators;     // matrices inside G
    std::string expected_family;        // "BC", "G", "F" or "" when open
    int expected_rank = 0;              // 0 when open
    bool named = false;                 // one of the four classical families
};

// The four classical folding families instantiated over the catalog plus
// every further normal pair discovered on the catalog groups (trivial
// subgroup and full group excluded).  Deterministic order: named entries
// first, then by group and subgroup.
std::vector<PairEntry> standard_pairs();

// Resolve the generators inside G (membership and normality are checked) and
// return the realized pair.
NormalPair realize_pair(const PairEntry& entry);

}  // namespace mckay
