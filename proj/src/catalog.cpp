#include "mckay/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mckay {

namespace {

Cyclotomic zeta(long m, long k) { return Cyclotomic::root_of_unity(m, k); }

Mat2 diagonal(long m, long k1, long k2) {
    return Mat2(zeta(m, k1), Cyclotomic::zero(m), Cyclotomic::zero(m), zeta(m, k2));
}

// a + b i + c j + d k as a unimodular matrix, i realized as zeta_m^(m/4).
Mat2 quaternion(long m, const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c,
                const Cyclotomic& d) {
    Cyclotomic i = zeta(m, m / 4);
    return Mat2(a + b * i, c + d * i, -c + d * i, a - b * i);
}

std::vector<Mat2> tetrahedral_generators(long m) {
    const Rational half(1, 2);
    Cyclotomic h(half, m);
    Cyclotomic zero = Cyclotomic::zero(m);
    return {quaternion(m, zero, Cyclotomic::one(m), zero, zero),
            quaternion(m, h, h, h, h)};
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (int n = 2; n <= 12; ++n) names.push_back("C:" + std::to_string(n));
    for (int n = 2; n <= 6; ++n) names.push_back("BD:" + std::to_string(4 * n));
    names.push_back("2T");
    names.push_back("2O");
    names.push_back("2I");
    return names;
}

CatalogEntry catalog_entry(const std::string& name) {
    CatalogEntry e;
    e.name = name;
    auto parse_suffix = [&](const std::string& prefix) -> std::optional<long> {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
            return std::nullopt;
        long value = 0;
        for (char c : name.substr(prefix.size())) {
            if (c < '0' || c > '9') return std::nullopt;
            value = value * 10 + (c - '0');
        }
        return value;
    };

    if (auto n = parse_suffix("C:")) {
        if (*n < 1) throw std::invalid_argument("cyclic order must be positive");
        e.generators = {diagonal(*n, 1, *n - 1)};
        e.expected_order = *n;
        e.expected_classes = static_cast<int>(*n);
        e.expected_type = DynkinType{"A", static_cast<int>(*n - 1), false};
        return e;
    }
    if (auto m = parse_suffix("BD:")) {
        if (*m % 4 != 0 || *m < 8)
            throw std::invalid_argument("binary dihedral order must be 4n with n >= 2");
        long n = *m / 4;
        e.generators = {diagonal(2 * n, 1, 2 * n - 1),
                        Mat2(Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1), Cyclotomic(0))};
        e.expected_order = 4 * n;
        e.expected_classes = static_cast<int>(n + 3);
        e.expected_type = DynkinType{"D", static_cast<int>(n + 2), false};
        return e;
    }
    if (name == "2T") {
        e.generators = tetrahedral_generators(4);
        e.expected_order = 24;
        e.expected_classes = 7;
        e.expected_type = DynkinType{"E", 6, false};
        return e;
    }
    if (name == "2O") {
        e.generators = tetrahedral_generators(8);
        e.generators.push_back(diagonal(8, 1, 7));
        e.expected_order = 48;
        e.expected_classes = 8;
        e.expected_type = DynkinType{"E", 7, false};
        return e;
    }
    if (name == "2I") {
        // golden ratio phi = -zeta5^2 - zeta5^3 in Q(zeta20)
        const long m = 20;
        Cyclotomic phi = -(zeta(m, 8) + zeta(m, 12));
        Cyclotomic phi_inv = phi - Cyclotomic::one(m);  // 1/phi = phi - 1
        const Rational half(1, 2);
        Cyclotomic h(half, m);
        e.generators = {quaternion(m, Cyclotomic::zero(m), Cyclotomic::one(m),
                                   Cyclotomic::zero(m), Cyclotomic::zero(m)),
                        quaternion(m, h * phi_inv, h * phi, h, Cyclotomic::zero(m))};
        e.expected_order = 120;
        e.expected_classes = 9;
        e.expected_type = DynkinType{"E", 8, false};
        return e;
    }
    throw std::invalid_argument("unknown catalog name: " + name);
}

GroupPtr build_catalog_group(const std::string& name) {
    static std::mutex mutex;
    static std::map<std::string, GroupPtr> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(name);
        if (it != cache.end()) return it->second;
    }
    CatalogEntry entry = catalog_entry(name);
    GroupPtr group = FiniteMatrixGroup::closure(entry.generators);
    if (static_cast<long>(group->order()) != entry.expected_order)
        throw std::runtime_error("catalog group " + name + " has wrong order");
    if (static_cast<int>(group->classes().count()) != entry.expected_classes)
        throw std::runtime_error("catalog group " + name + " has wrong class count");
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(name, std::move(group)).first->second;
}

namespace {

PairEntry named_pair(std::string g, std::string h, std::vector<Mat2> gens,
                     std::string family, int rank) {
    PairEntry e;
    e.g_name = std::move(g);
    e.h_name = std::move(h);
    e.h_generators = std::move(gens);
    e.expected_family = std::move(family);
    e.expected_rank = rank;
    e.named = true;
    return e;
}

std::vector<int> subgroup_indices(const FiniteMatrixGroup& g, const std::vector<Mat2>& gens) {
    std::vector<int> seeds;
    for (const Mat2& mat : gens) {
        int idx = g.find(mat.embed(g.field_order()));
        if (idx < 0) throw std::invalid_argument("subgroup generator is not an element of G");
        seeds.push_back(idx);
    }
    std::set<int> members{g.identity()};
    std::vector<int> queue{g.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int s : seeds) {
            int next = g.product(queue[head], s);
            if (members.insert(next).second) queue.push_back(next);
        }
    return std::vector<int>(members.begin(), members.end());
}

}  // namespace

std::vector<PairEntry> standard_pairs() {
    std::vector<PairEntry> pairs;

    // A_{2n-1} folds: C_{2n} inside BD_{4n}
    for (long n = 2; n <= 6; ++n)
        pairs.push_back(named_pair("BD:" + std::to_string(4 * n),
                                   "C:" + std::to_string(2 * n),
                                   {diagonal(2 * n, 1, 2 * n - 1)}, "BC",
                                   static_cast<int>(n)));
    // D_{n+2} folds: BD_{4n} inside BD_{8n}
    for (long n = 2; n <= 3; ++n)
        pairs.push_back(named_pair(
            "BD:" + std::to_string(8 * n), "BD:" + std::to_string(4 * n),
            {diagonal(4 * n, 2, 4 * n - 2),
             Mat2(Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1), Cyclotomic(0))},
            "BC", static_cast<int>(n + 1)));
    // D4 -> G2: the quaternion group inside 2T
    {
        std::vector<Mat2> q8 = {
            diagonal(4, 1, 3),
            Mat2(Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1), Cyclotomic(0))};
        pairs.push_back(named_pair("2T", "BD:8", std::move(q8), "G", 2));
    }
    // E6 -> F4: 2T inside 2O
    pairs.push_back(named_pair("2O", "2T", tetrahedral_generators(8), "F", 4));

    // Everything else normal_subgroups() finds on the catalog groups.
    std::set<std::pair<std::string, std::vector<int>>> seen;
    for (PairEntry& e : pairs) {
        GroupPtr g = build_catalog_group(e.g_name);
        seen.insert({e.g_name, subgroup_indices(*g, e.h_generators)});
    }
    for (const std::string& g_name : catalog_names()) {
        GroupPtr g = build_catalog_group(g_name);
        std::map<std::size_t, int> ordinal;
        for (const std::vector<int>& sub : normal_subgroups(*g)) {
            if (sub.size() <= 1 || sub.size() == g->order()) continue;
            int nth = ++ordinal[sub.size()];
            if (!seen.insert({g_name, sub}).second) continue;
            PairEntry e;
            e.g_name = g_name;
            e.h_name = "sub" + std::to_string(sub.size()) +
                       (nth > 1 ? "." + std::to_string(nth) : "");
            for (int idx : sub) e.h_generators.push_back(g->element(idx));
            pairs.push_back(std::move(e));
        }
    }
    return pairs;
}

NormalPair realize_pair(const PairEntry& entry) {
    GroupPtr g = build_catalog_group(entry.g_name);
    return NormalPair(g, subgroup_indices(*g, entry.h_generators));
}

}  // namespace mckay
