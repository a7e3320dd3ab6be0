#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mckay/catalog.hpp"
#include "mckay/group.hpp"

using namespace mckay;

namespace {

Mat2 j_matrix() {
    return Mat2(Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1), Cyclotomic(0));
}

Mat2 zeta_diag(long m, long k) {
    return Mat2(Cyclotomic::root_of_unity(m, k), Cyclotomic::zero(m), Cyclotomic::zero(m),
                Cyclotomic::root_of_unity(m, -k));
}

}  // namespace

TEST_CASE("closure of small cyclic and quaternion groups") {
    GroupPtr c3 = FiniteMatrixGroup::closure({zeta_diag(3, 1)});
    CHECK(c3->order() == 3);
    CHECK(c3->exponent() == 3);

    GroupPtr q8 = FiniteMatrixGroup::closure({zeta_diag(4, 1), j_matrix()});
    CHECK(q8->order() == 8);
    CHECK(q8->classes().count() == 5);
    std::multiset<long> sizes(q8->classes().size.begin(), q8->classes().size.end());
    CHECK(sizes == std::multiset<long>{1, 1, 2, 2, 2});
}

TEST_CASE("closure validates generators and caps runaway input") {
    Mat2 not_unimodular(Cyclotomic(2), Cyclotomic(0), Cyclotomic(0), Cyclotomic(1));
    CHECK_THROWS_AS(FiniteMatrixGroup::closure({not_unimodular}), std::domain_error);

    Mat2 shear(Cyclotomic(1), Cyclotomic(1), Cyclotomic(0), Cyclotomic(1));  // infinite order
    CHECK_THROWS_AS(FiniteMatrixGroup::closure({shear}, 100), std::runtime_error);
}

TEST_CASE("binary polyhedral closures match the known census") {
    GroupPtr tt = build_catalog_group("2T");
    CHECK(tt->order() == 24);
    CHECK(tt->classes().count() == 7);
    CHECK(tt->exponent() == 12);

    GroupPtr ii = build_catalog_group("2I");
    CHECK(ii->order() == 120);
    CHECK(ii->classes().count() == 9);
    CHECK(ii->exponent() == 60);
}

TEST_CASE("group structure invariants") {
    for (const std::string& name : {"C:6", "BD:8", "BD:12", "2T"}) {
        GroupPtr g = build_catalog_group(name);
        const ClassData& cls = g->classes();
        long total = 0;
        for (long s : cls.size) {
            CHECK(g->order() % s == 0);  // Lagrange
            total += s;
        }
        CHECK(total == static_cast<long>(g->order()));
        CHECK(cls.class_of[g->identity()] == 0);
        for (int i = 0; i < static_cast<int>(g->order()); ++i) {
            CHECK(g->inverse(g->inverse(i)) == i);
            for (int gi : g->generator_indices()) CHECK(g->product(i, gi) >= 0);
        }
        for (std::size_t c = 0; c < cls.count(); ++c)
            CHECK(cls.inverse_class[cls.inverse_class[c]] == static_cast<int>(c));
    }
}

TEST_CASE("structure constants") {
    GroupPtr c2 = build_catalog_group("C:2");
    CHECK(structure_constant(*c2, 0, 0, 0) == 1);  // identity class times itself
    CHECK(structure_constant(*c2, 1, 1, 0) == 1);  // (-1)(-1) = 1

    GroupPtr q8 = build_catalog_group("BD:8");
    const ClassData& cls = q8->classes();
    const int k = static_cast<int>(cls.count());
    // mass check: |C_i||C_j| = sum_k a_ijk |C_k|
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            long mass = 0;
            for (int m = 0; m < k; ++m) mass += structure_constant(*q8, i, j, m) * cls.size[m];
            CHECK(mass == cls.size[i] * cls.size[j]);
        }
}

TEST_CASE("structure constants do not depend on the chosen representative") {
    for (const std::string& name : {"BD:8", "BD:12", "2T"}) {
        GroupPtr g = build_catalog_group(name);
        const ClassData& cls = g->classes();
        const int k = static_cast<int>(cls.count());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                for (int m = 0; m < k; ++m) {
                    long reference = structure_constant(*g, i, j, m);
                    for (int z : cls.members[m])
                        CHECK(structure_constant_at(*g, i, j, z) == reference);
                }
    }
}

TEST_CASE("normality checks") {
    GroupPtr q8 = build_catalog_group("BD:8");
    // center {1, -1}
    std::vector<int> center;
    for (int i = 0; i < 8; ++i)
        if (q8->element_order(i) <= 2) center.push_back(i);
    CHECK(center.size() == 2);
    CHECK(is_normal_subgroup(*q8, center));

    // index-2 cyclic subgroup
    std::vector<int> c4;
    Mat2 a = zeta_diag(4, 1).embed(q8->field_order());
    int ai = q8->find(a);
    REQUIRE(ai >= 0);
    for (int acc = 0, step = 0; step < 4; ++step, acc = q8->product(acc, ai)) c4.push_back(acc);
    std::sort(c4.begin(), c4.end());
    c4.erase(std::unique(c4.begin(), c4.end()), c4.end());
    CHECK(c4.size() == 4);
    CHECK(is_normal_subgroup(*q8, c4));

    // {identity, a} is not closed, so not a subgroup
    CHECK_THROWS_AS(is_normal_subgroup(*q8, std::vector<int>{0, ai}), std::invalid_argument);
}

TEST_CASE("2O contains a non-normal cyclic subgroup of order 4") {
    // (the only order-2 element of SL2(C) is -I, which is central, so order 4
    // is the smallest interesting case)
    GroupPtr oo = build_catalog_group("2O");
    bool found_non_normal = false;
    for (int i = 0; i < static_cast<int>(oo->order()) && !found_non_normal; ++i) {
        if (oo->element_order(i) != 4) continue;
        std::vector<int> cyclic;
        for (int acc = 0, step = 0; step < 4; ++step, acc = oo->product(acc, i))
            cyclic.push_back(acc);
        std::sort(cyclic.begin(), cyclic.end());
        if (!is_normal_subgroup(*oo, cyclic)) found_non_normal = true;
    }
    CHECK(found_non_normal);
}

TEST_CASE("normal pairs and quotient tables") {
    GroupPtr q8 = build_catalog_group("BD:8");
    std::vector<int> c4;
    int ai = q8->find(zeta_diag(4, 1).embed(q8->field_order()));
    for (int acc = 0, step = 0; step < 4; ++step, acc = q8->product(acc, ai)) c4.push_back(acc);
    std::sort(c4.begin(), c4.end());
    NormalPair p1(q8, c4);
    CHECK(p1.quotient_order() == 2);
    CHECK(p1.H()->order() == 4);

    PairEntry e;
    e.g_name = "2T";
    e.h_name = "BD:8";
    e.h_generators = catalog_entry("BD:8").generators;
    NormalPair p2 = realize_pair(e);
    CHECK(p2.quotient_order() == 3);
    // quotient of order 3 is cyclic: some coset generates
    bool cyclic = false;
    for (int c = 0; c < 3; ++c)
        if (p2.quotient_mult(c, c) != c && p2.quotient_mult(c, p2.quotient_mult(c, c)) == 0)
            cyclic = true;
    CHECK(cyclic);

    PairEntry e2;
    e2.g_name = "2O";
    e2.h_name = "2T";
    e2.h_generators = catalog_entry("2T").generators;
    NormalPair p3 = realize_pair(e2);
    CHECK(p3.quotient_order() == 2);

    // group axioms of the quotient table
    for (const NormalPair* pair : {&p1, &p2, &p3}) {
        const int n = static_cast<int>(pair->quotient_order());
        for (int i = 0; i < n; ++i) {
            CHECK(pair->quotient_mult(0, i) == i);
            CHECK(pair->quotient_mult(i, 0) == i);
            bool has_inverse = false;
            for (int j = 0; j < n; ++j)
                if (pair->quotient_mult(i, j) == 0) has_inverse = true;
            CHECK(has_inverse);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    CHECK(pair->quotient_mult(pair->quotient_mult(i, j), k) ==
                          pair->quotient_mult(i, pair->quotient_mult(j, k)));
        }
        // coset representatives are the smallest members of their cosets
        for (int c = 0; c < n; ++c) {
            int rep = pair->coset_reps()[c];
            for (int h : pair->h_indices())
                CHECK(pair->G()->product(rep, h) >= rep);
        }
    }
}

TEST_CASE("normal subgroup enumeration") {
    GroupPtr c4 = build_catalog_group("C:4");
    CHECK(normal_subgroups(*c4).size() == 3);  // {1}, {+-1}, C4

    GroupPtr q8 = build_catalog_group("BD:8");
    auto subs = normal_subgroups(*q8);
    CHECK(subs.size() == 6);  // {1}, center, three C4's, Q8
    std::multiset<std::size_t> orders;
    for (const auto& s : subs) orders.insert(s.size());
    CHECK(orders == std::multiset<std::size_t>{1, 2, 4, 4, 4, 8});
    for (const auto& s : subs) CHECK(is_normal_subgroup(*q8, s));

    GroupPtr ii = build_catalog_group("2I");
    auto subs_i = normal_subgroups(*ii);
    CHECK(subs_i.size() == 3);  // {1}, center, 2I: the quotient is simple
    CHECK(subs_i[0].size() == 1);
    CHECK(subs_i[1].size() == 2);
    CHECK(subs_i[2].size() == 120);
}
