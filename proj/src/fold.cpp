#include "mckay/fold.hpp"

#include <algorithm>
#include <stdexcept>

namespace mckay {

IntersectionLattice lattice_from_characters(const NormalPair& pair,
                                            const CharacterTable& table_h,
                                            const ClassFunction& chi_nat_h) {
    IntersectionLattice lat;
    for (int t = 0; t < static_cast<int>(table_h.size()); ++t)
        if (t != static_cast<int>(table_h.trivial_index)) lat.basis.push_back(t);
    lat.pairing = intersection_matrix_b(table_h, chi_nat_h);

    // table index -> basis position
    std::vector<int> pos(table_h.size(), -1);
    for (std::size_t i = 0; i < lat.basis.size(); ++i) pos[lat.basis[i]] = static_cast<int>(i);

    const auto action_on_table = conjugation_action(pair, table_h);
    for (const std::vector<int>& sigma : action_on_table) {
        std::vector<int> perm(lat.basis.size());
        for (std::size_t i = 0; i < lat.basis.size(); ++i) {
            int img = sigma[lat.basis[i]];
            if (img == static_cast<int>(table_h.trivial_index))
                throw std::logic_error("conjugation moved a nontrivial character to trivial");
            perm[i] = pos[img];
        }
        lat.action.push_back(std::move(perm));
    }

    const int q = static_cast<int>(pair.quotient_order());
    lat.quotient_mult.assign(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) lat.quotient_mult[i][j] = pair.quotient_mult(i, j);
    return lat;
}

std::vector<std::vector<int>> lattice_orbits(const IntersectionLattice& lat) {
    const int n = static_cast<int>(lat.basis.size());
    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < n; ++i) {
        if (orbit_of[i] >= 0) continue;
        std::vector<int> orbit{i};
        orbit_of[i] = static_cast<int>(orbits.size());
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (const std::vector<int>& sigma : lat.action) {
                int img = sigma[orbit[head]];
                if (orbit_of[img] < 0) {
                    orbit_of[img] = static_cast<int>(orbits.size());
                    orbit.push_back(img);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

namespace {

// sum over cosets of sigma_g(e_i), as an integer vector on the basis
std::vector<Int> orbit_sum_vector(const IntersectionLattice& lat, int basis_index) {
    std::vector<Int> v(lat.basis.size(), 0);
    for (const std::vector<int>& sigma : lat.action) v[sigma[basis_index]] += 1;
    return v;
}

Rational quadratic_form(const IntMatrix& b, const std::vector<Int>& x,
                        const std::vector<Int>& y) {
    Rational acc(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            acc += Rational(checked_mul(checked_mul(x[i], b[i][j]), y[j]));
        }
    }
    return acc;
}

Int pushforward_entry(const IntersectionLattice& lat, int rep_i, int rep_j) {
    const Int n = static_cast<Int>(lat.action.size());
    Rational value =
        quadratic_form(lat.pairing, orbit_sum_vector(lat, rep_i), orbit_sum_vector(lat, rep_j)) /
        Rational(n);
    if (!value.is_integer())
        throw std::domain_error("pushforward pairing entry is not an integer");
    return value.num();
}

}  // namespace

IntMatrix pushforward_pairing(const IntersectionLattice& lat,
                              const std::vector<std::vector<int>>& orbits) {
    const std::size_t r = orbits.size();
    IntMatrix p(r, std::vector<Int>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            p[i][j] = pushforward_entry(lat, orbits[i][0], orbits[j][0]);
    return p;
}

std::vector<Int> orbit_weights(const std::vector<std::vector<int>>& orbits, Int n) {
    std::vector<Int> f;
    for (const std::vector<int>& orbit : orbits) {
        Int r = static_cast<Int>(orbit.size());
        if (r == 0 || n % r != 0)
            throw std::logic_error("orbit size does not divide the quotient order");
        f.push_back(n / r);
    }
    return f;
}

IntMatrix weighted_d(const IntMatrix& p, const std::vector<Int>& f, bool row_convention) {
    const std::size_t r = p.size();
    IntMatrix d(r, std::vector<Int>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Int w = row_convention ? f[j] : f[i];
            if (p[i][j] % w != 0)
                throw std::domain_error("weighted intersection entry is not an integer");
            d[i][j] = p[i][j] / w;
        }
    return d;
}

IntMatrix slodowy_c(const McKayMatrix& a_plus, const std::vector<std::vector<int>>& orbits) {
    if (a_plus.includes_trivial)
        throw std::invalid_argument("slodowy_c expects the McKay matrix over Irr+");
    // positions in the Irr+ matrix are the lattice basis positions
    const std::size_t r = orbits.size();
    IntMatrix c(r, std::vector<Int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            Int value = 0;
            bool first = true;
            for (int rep : orbits[i]) {
                Int sum = 0;
                for (int member : orbits[j]) sum += a_plus.a[rep][member];
                if (first) {
                    value = sum;
                    first = false;
                } else if (sum != value) {
                    throw std::logic_error("orbit sums of A depend on the representative");
                }
            }
            c[i][j] = value;
        }
    }
    return c;
}

FoldResult verify_pair(const NormalPair& pair, const CharacterTable& table_h,
                       const CharacterTable& table_g) {
    if (table_h.group != pair.H() || table_g.group != pair.G())
        throw std::invalid_argument("tables do not match the pair");

    FoldResult res;
    FoldVerdicts& v = res.verdicts;
    auto fail = [&](std::string what) { v.failures.push_back(std::move(what)); };

    const ClassFunction chi_h = natural_character(pair.H());
    const ClassFunction chi_g = natural_character(pair.G());
    IntersectionLattice lat = lattice_from_characters(pair, table_h, chi_h);

    res.n = static_cast<Int>(pair.quotient_order());
    res.orbits = lattice_orbits(lat);
    res.b = lat.pairing;

    // --- structural checks on the action -----------------------------------
    v.pairing_action_invariant = true;
    for (const std::vector<int>& sigma : lat.action)
        for (std::size_t i = 0; i < lat.basis.size(); ++i)
            for (std::size_t j = 0; j < lat.basis.size(); ++j)
                if (lat.pairing[sigma[i]][sigma[j]] != lat.pairing[i][j]) {
                    v.pairing_action_invariant = false;
                    fail("pairing not invariant under coset " + std::to_string(i));
                }
    // sigma respects the quotient table: tau^(g_i g_j) = (tau^(g_i))^(g_j)
    for (std::size_t i = 0; i < lat.action.size() && v.pairing_action_invariant; ++i)
        for (std::size_t j = 0; j < lat.action.size(); ++j) {
            const std::vector<int>& left = lat.action[lat.quotient_mult[i][j]];
            for (std::size_t t = 0; t < lat.basis.size(); ++t)
                if (left[t] != lat.action[j][lat.action[i][t]]) {
                    v.pairing_action_invariant = false;
                    fail("action is not compatible with the quotient table");
                }
        }

    // --- fold data ----------------------------------------------------------
    try {
        res.f = orbit_weights(res.orbits, res.n);
        v.weights_integral = true;
    } catch (const std::exception&) {
        fail("orbit size does not divide n");
        return res;
    }
    res.p = pushforward_pairing(lat, res.orbits);
    res.d_row = weighted_d(res.p, res.f, true);
    res.d_paper = weighted_d(res.p, res.f, false);

    McKayMatrix a_plus = mckay_matrix(table_h, chi_h, false);
    res.c = slodowy_c(a_plus, res.orbits);
    res.cartan = classify_cartan(two_i_minus(res.c));
    v.cartan_finite = res.cartan.type.known() && !res.cartan.type.affine;

    for (const std::vector<int>& orbit : res.orbits)
        res.orbit_degrees.push_back(table_h.degrees[lat.basis[orbit[0]]]);

    // --- representative independence of P and C ------------------------------
    v.representative_independent = true;
    for (std::size_t i = 0; i < res.orbits.size(); ++i)
        for (std::size_t j = 0; j < res.orbits.size(); ++j)
            for (int ri : res.orbits[i])
                for (int rj : res.orbits[j]) {
                    Int entry;
                    try {
                        entry = pushforward_entry(lat, ri, rj);
                    } catch (const std::exception&) {
                        entry = res.p[i][j] + 1;  // any mismatch marker
                    }
                    if (entry != res.p[i][j]) {
                        v.representative_independent = false;
                        fail("P depends on orbit representatives at (" + std::to_string(i) +
                             "," + std::to_string(j) + ")");
                    }
                }
    // slodowy_c already throws on representative dependence of C

    // --- main identity: lattice side vs character side ----------------------
    // Ind tau per orbit (induction is constant on orbits)
    std::vector<ClassFunction> induced;
    for (const std::vector<int>& orbit : res.orbits)
        induced.push_back(induce(pair, table_h.irreducibles[lat.basis[orbit[0]]]));
    const ClassFunction chi_g_shifted = chi_g.minus_constant(Rational(2));

    v.main_identity = true;
    for (std::size_t i = 0; i < res.orbits.size(); ++i)
        for (std::size_t j = 0; j < res.orbits.size(); ++j) {
            Cyclotomic rhs = inner_product(tensor(chi_g_shifted, induced[i]), induced[j]);
            Cyclotomic lhs(Rational(res.p[i][j]), pair.G()->field_order());
            if (!(lhs == rhs)) {
                v.main_identity = false;
                fail("main identity fails at orbits (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
            }
        }

    // --- 2I - C = -D under exactly one convention ----------------------------
    IntMatrix lhs = two_i_minus(res.c);
    auto negated = [](IntMatrix m) {
        for (auto& row : m)
            for (Int& x : row) x = -x;
        return m;
    };
    bool row_ok = lhs == negated(res.d_row);
    bool paper_ok = lhs == negated(res.d_paper);
    v.d_convention = row_ok && paper_ok ? "both"
                     : row_ok           ? "row"
                     : paper_ok         ? "paper"
                                        : "fail";
    if (v.d_convention == "fail") fail("2I - C matches neither -D convention");

    // --- Mackey and Frobenius reciprocity ------------------------------------
    v.mackey = true;
    for (int t = 0; t < static_cast<int>(table_h.size()); ++t) {
        ClassFunction ind = induce(pair, table_h.irreducibles[t]);
        ClassFunction back = restrict(pair, ind);
        ClassFunction conj_sum = conjugate_character(pair, table_h.irreducibles[t], 0);
        for (int c = 1; c < static_cast<int>(pair.quotient_order()); ++c)
            conj_sum = conj_sum + conjugate_character(pair, table_h.irreducibles[t], c);
        if (!(back == conj_sum)) {
            v.mackey = false;
            fail("Mackey fails for irreducible " + std::to_string(t));
        }
    }
    v.frobenius = true;
    for (int t = 0; t < static_cast<int>(table_h.size()); ++t) {
        ClassFunction ind = induce(pair, table_h.irreducibles[t]);
        for (int u = 0; u < static_cast<int>(table_g.size()); ++u) {
            Cyclotomic left = inner_product(ind, table_g.irreducibles[u]);
            Cyclotomic right =
                inner_product(table_h.irreducibles[t], restrict(pair, table_g.irreducibles[u]));
            if (!(left == right)) {
                v.frobenius = false;
                fail("Frobenius reciprocity fails at (" + std::to_string(t) + "," +
                     std::to_string(u) + ")");
            }
        }
    }

    return res;
}

}  // namespace mckay
