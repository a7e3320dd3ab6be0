#include "mckay/characters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mckay/prime_field.hpp"

namespace mckay {

namespace {

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
    if (a.group() != b.group())
        throw std::invalid_argument("class functions live on different groups");
}

// ---- GF(p) linear algebra -------------------------------------------------

using ModVec = std::vector<Int>;
using ModMat = std::vector<ModVec>;

Int mod_pow(Int base, Int exp, Int p) {
    base %= p;
    if (base < 0) base += p;
    Int acc = 1 % p;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

Int mod_inv(Int a, Int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::logic_error("inverse of zero mod p");
    return mod_pow(a, p - 2, p);
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int find_dixon_prime(Int m, std::size_t group_order) {
    const Int bound = 1000000;
    double low = 2.0 * std::sqrt(static_cast<double>(group_order));
    for (Int p = m + 1; p <= bound; p += m)
        if (static_cast<double>(p) > low && is_prime(p)) return p;
    throw std::runtime_error("no suitable Dixon prime below 10^6");
}

Int primitive_root(Int p) {
    std::vector<Int> prime_factors;
    Int n = p - 1;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            prime_factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) prime_factors.push_back(n);
    for (Int g = 2; g < p; ++g) {
        bool ok = true;
        for (Int q : prime_factors)
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(ModMat& m, Int p) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        Int inv = mod_inv(m[r][c], p);
        for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Int f = m[i][c];
            for (int j = c; j < cols; ++j) {
                m[i][j] = (m[i][j] - f * m[r][j]) % p;
                if (m[i][j] < 0) m[i][j] += p;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(pivots.size());
    return pivots;
}

// Nullspace basis (rows) of a square matrix, deterministic RREF construction.
ModMat nullspace(ModMat m, Int p) {
    const int n = static_cast<int>(m.size());
    std::vector<int> pivots = rref(m, p);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    ModMat basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        ModVec v(n, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            Int coeff = m[r][c];
            if (coeff != 0) v[pivots[r]] = (p - coeff) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Characteristic polynomial (monic, ascending coefficients) via Hessenberg
// reduction; works over GF(p) for any p > 1.
ModVec characteristic_polynomial(ModMat h, Int p) {
    const int n = static_cast<int>(h.size());
    // Similarity reduction to upper Hessenberg form with pivoting.
    for (int c = 0; c + 2 < n; ++c) {
        int pivot = -1;
        for (int r = c + 1; r < n; ++r)
            if (h[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != c + 1) {
            std::swap(h[pivot], h[c + 1]);
            for (int r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][c + 1]);
        }
        Int inv = mod_inv(h[c + 1][c], p);
        for (int r = c + 2; r < n; ++r) {
            Int f = h[r][c] * inv % p;
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                h[r][j] = (h[r][j] - f * h[c + 1][j]) % p;
                if (h[r][j] < 0) h[r][j] += p;
            }
            for (int j = 0; j < n; ++j) h[j][c + 1] = (h[j][c + 1] + f * h[j][r]) % p;
        }
    }
    // p_k(x) = (x - h_kk) p_{k-1}(x) - sum_i h_ik (prod subdiagonals) p_{i-1}(x)
    std::vector<ModVec> minors(n + 1);
    minors[0] = {1};
    for (int k = 1; k <= n; ++k) {
        ModVec poly(k + 1, 0);
        const ModVec& prev = minors[k - 1];
        Int diag = h[k - 1][k - 1];
        for (int t = 0; t < k; ++t) {
            poly[t + 1] = (poly[t + 1] + prev[t]) % p;
            poly[t] = (poly[t] - diag * prev[t]) % p;
            if (poly[t] < 0) poly[t] += p;
        }
        Int sub = 1;
        for (int i = k - 1; i >= 1; --i) {
            sub = sub * h[i][i - 1] % p;
            if (sub == 0) break;
            Int f = sub * h[i - 1][k - 1] % p;
            if (f == 0) continue;
            const ModVec& lower = minors[i - 1];
            for (int t = 0; t < i; ++t) {
                poly[t] = (poly[t] - f * lower[t]) % p;
                if (poly[t] < 0) poly[t] += p;
            }
        }
        minors[k] = std::move(poly);
    }
    return minors[n];
}

std::vector<Int> polynomial_roots(const ModVec& poly, Int p) {
    std::vector<Int> roots;
    for (Int x = 0; x < p; ++x) {
        Int acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % p;
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

// One invariant subspace during the simultaneous diagonalization, kept as an
// RREF row basis with its pivot columns.
struct Subspace {
    ModMat basis;
    std::vector<int> pivots;
};

Subspace make_subspace(ModMat rows, Int p) {
    Subspace s;
    s.pivots = rref(rows, p);
    s.basis = std::move(rows);
    return s;
}

}  // namespace

// ---- ClassFunction --------------------------------------------------------

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
    if (!group_) throw std::invalid_argument("class function needs a group");
    if (values_.size() != group_->classes().count())
        throw std::invalid_argument("one value per conjugacy class required");
    long m = group_->field_order();
    for (Cyclotomic& v : values_)
        if (v.order() != m) v = v.embed(m);
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    std::vector<Cyclotomic> vals = a.values_;
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] += b.values_[i];
    return ClassFunction(a.group_, std::move(vals));
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    require_same_group(a, b);
    std::vector<Cyclotomic> vals = a.values_;
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] -= b.values_[i];
    return ClassFunction(a.group_, std::move(vals));
}

ClassFunction ClassFunction::scaled(const Rational& s) const {
    std::vector<Cyclotomic> vals = values_;
    for (Cyclotomic& v : vals) v = s * v;
    return ClassFunction(group_, std::move(vals));
}

ClassFunction ClassFunction::minus_constant(const Rational& c) const {
    std::vector<Cyclotomic> vals = values_;
    Cyclotomic k(c, group_->field_order());
    for (Cyclotomic& v : vals) v -= k;
    return ClassFunction(group_, std::move(vals));
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
}

ClassFunction natural_character(const GroupPtr& group) {
    const ClassData& cls = group->classes();
    std::vector<Cyclotomic> vals;
    vals.reserve(cls.count());
    for (std::size_t c = 0; c < cls.count(); ++c)
        vals.push_back(group->element(cls.representative[c]).trace());
    return ClassFunction(group, std::move(vals));
}

ClassFunction trivial_character(const GroupPtr& group) {
    std::vector<Cyclotomic> vals(group->classes().count(),
                                 Cyclotomic::one(group->field_order()));
    return ClassFunction(group, std::move(vals));
}

// ---- Dixon ------------------------------------------------------------------

CharacterTable character_table(const GroupPtr& group) {
    const ClassData& cls = group->classes();
    const int k = static_cast<int>(cls.count());
    const Int m = group->field_order();
    const Int p = find_dixon_prime(m, group->order());
    const Int w = mod_pow(primitive_root(p), (p - 1) / m, p);

    const auto tensor = structure_constant_tensor(*group);

    // Class-sum matrices N_i[j][m] = a_{ijm}; each central character vector
    // (omega_c) is a common eigenvector: N_i omega = omega_i omega.
    auto class_matrix = [&](int i) {
        ModMat n(k, ModVec(k, 0));
        for (int j = 0; j < k; ++j)
            for (int c = 0; c < k; ++c) n[j][c] = tensor[i][j][c] % p;
        return n;
    };

    std::vector<Subspace> spaces;
    {
        ModMat full(k, ModVec(k, 0));
        for (int i = 0; i < k; ++i) full[i][i] = 1;
        spaces.push_back(make_subspace(std::move(full), p));
    }
    for (int i = 1; i < k; ++i) {
        bool all_split = true;
        for (const Subspace& s : spaces)
            if (s.basis.size() > 1) all_split = false;
        if (all_split) break;

        ModMat n = class_matrix(i);
        std::vector<Subspace> next;
        for (Subspace& s : spaces) {
            const int r = static_cast<int>(s.basis.size());
            if (r == 1) {
                next.push_back(std::move(s));
                continue;
            }
            // Restriction of N to the subspace: the coordinate of a vector in
            // an RREF basis is its entry at the pivot columns.
            std::vector<ModVec> images(r, ModVec(k, 0));
            for (int t = 0; t < r; ++t)
                for (int row = 0; row < k; ++row) {
                    Int acc = 0;
                    for (int c = 0; c < k; ++c) acc = (acc + n[row][c] * s.basis[t][c]) % p;
                    images[t][row] = acc;
                }
            ModMat restricted(r, ModVec(r, 0));
            for (int t = 0; t < r; ++t)
                for (int u = 0; u < r; ++u) restricted[u][t] = images[t][s.pivots[u]];

            ModVec poly = characteristic_polynomial(restricted, p);
            std::vector<Int> roots = polynomial_roots(poly, p);
            for (Int lambda : roots) {
                ModMat shifted = restricted;
                for (int t = 0; t < r; ++t) {
                    shifted[t][t] = (shifted[t][t] - lambda) % p;
                    if (shifted[t][t] < 0) shifted[t][t] += p;
                }
                ModMat coords = nullspace(std::move(shifted), p);
                if (coords.empty()) continue;
                ModMat rows;
                for (const ModVec& c : coords) {
                    ModVec v(k, 0);
                    for (int t = 0; t < r; ++t) {
                        if (c[t] == 0) continue;
                        for (int col = 0; col < k; ++col)
                            v[col] = (v[col] + c[t] * s.basis[t][col]) % p;
                    }
                    rows.push_back(std::move(v));
                }
                next.push_back(make_subspace(std::move(rows), p));
            }
        }
        spaces = std::move(next);
    }

    for (const Subspace& s : spaces)
        if (s.basis.size() != 1)
            throw std::logic_error("class-sum matrices failed to separate characters");
    if (static_cast<int>(spaces.size()) != k)
        throw std::logic_error("wrong number of central characters");

    // Normalize at the identity class (class 0), recover degrees, lift.
    const Int order_mod = static_cast<Int>(group->order()) % p;
    std::vector<std::vector<Int>> theta;  // theta[t][c]: mod-p character values
    std::vector<long> degrees;
    for (const Subspace& s : spaces) {
        ModVec omega = s.basis[0];
        if (omega[0] == 0) throw std::logic_error("central character vanishes at identity");
        Int scale = mod_inv(omega[0], p);
        for (Int& x : omega) x = x * scale % p;

        Int sum = 0;
        for (int c = 0; c < k; ++c) {
            Int inv_size = mod_inv(cls.size[c] % p, p);
            sum = (sum + omega[c] * omega[cls.inverse_class[c]] % p * inv_size) % p;
        }
        Int d2 = order_mod * mod_inv(sum, p) % p;
        long degree = 0;
        for (long d = 1; static_cast<std::size_t>(d) * d <= group->order(); ++d)
            if (d * d % p == d2) {
                degree = d;
                break;
            }
        if (degree == 0) throw std::logic_error("degree recovery failed");
        degrees.push_back(degree);

        std::vector<Int> row(k, 0);
        for (int c = 0; c < k; ++c)
            row[c] = degree % p * omega[c] % p * mod_inv(cls.size[c] % p, p) % p;
        theta.push_back(std::move(row));
    }

    // Lift: multiplicities of the eigenvalues of a representative g among the
    // o(g)-th roots of unity, read off by a discrete Fourier sum over GF(p).
    auto lift_value = [&](int t, int c) {
        const long o = cls.rep_order[c];
        const PrimeFieldElement z(mod_pow(w, m / o, p), p);
        const PrimeFieldElement inv_o = PrimeFieldElement(o, p).inverse();
        Cyclotomic value = Cyclotomic::zero(m);
        Int total = 0;
        for (long s = 0; s < o; ++s) {
            PrimeFieldElement acc(0, p);
            for (long j = 0; j < o; ++j) {
                PrimeFieldElement th(theta[t][cls.power_class[c][j]], p);
                acc = acc + th * z.pow(-(j * s));
            }
            Int mult = (acc * inv_o).value();
            total += mult;
            if (mult != 0)
                value += Rational(mult) * Cyclotomic::root_of_unity(m, s * (m / o));
        }
        if (total != degrees[t])
            throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
        return value;
    };

    std::vector<std::vector<Cyclotomic>> rows(k);
    for (int t = 0; t < k; ++t) {
        rows[t].reserve(k);
        for (int c = 0; c < k; ++c) rows[t].push_back(lift_value(t, c));
    }

    // Order: trivial first, then ascending degree, then lexicographic values.
    std::vector<int> perm(k);
    for (int t = 0; t < k; ++t) perm[t] = t;
    auto is_trivial = [&](int t) {
        for (int c = 0; c < k; ++c)
            if (!(rows[t][c] == Cyclotomic::one(m))) return false;
        return true;
    };
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
        for (int c = 0; c < k; ++c) {
            int cmp = Cyclotomic::compare(rows[a][c], rows[b][c]);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    });
    if (!is_trivial(perm[0])) throw std::logic_error("trivial character missing");

    CharacterTable table;
    table.group = group;
    table.trivial_index = 0;
    table.dixon_prime = p;
    for (int t : perm) {
        table.irreducibles.emplace_back(group, rows[t]);
        table.degrees.push_back(degrees[t]);
    }
    return table;
}

// ---- products and adjunctions ----------------------------------------------

Cyclotomic inner_product(const ClassFunction& f1, const ClassFunction& f2) {
    require_same_group(f1, f2);
    const GroupPtr& g = f1.group();
    const ClassData& cls = g->classes();
    Cyclotomic acc = Cyclotomic::zero(g->field_order());
    for (std::size_t c = 0; c < cls.count(); ++c)
        acc += Rational(cls.size[c]) * (f1.value(c) * f2.value(c).conj());
    return Rational(1, static_cast<Int>(g->order())) * acc;
}

ClassFunction tensor(const ClassFunction& f1, const ClassFunction& f2) {
    require_same_group(f1, f2);
    std::vector<Cyclotomic> vals;
    vals.reserve(f1.num_classes());
    for (std::size_t c = 0; c < f1.num_classes(); ++c)
        vals.push_back(f1.value(c) * f2.value(c));
    return ClassFunction(f1.group(), std::move(vals));
}

VirtualCharacter decompose(const ClassFunction& f, const CharacterTable& table) {
    if (f.group() != table.group)
        throw std::invalid_argument("class function is not on the table's group");
    VirtualCharacter v;
    for (const ClassFunction& chi : table.irreducibles) {
        Cyclotomic ip = inner_product(f, chi);
        if (!ip.is_rational() || !ip.to_rational().is_integer())
            throw std::domain_error("class function is not a virtual character");
        v.multiplicities.push_back(ip.to_rational().num());
    }
    return v;
}

ClassFunction recompose(const VirtualCharacter& v, const CharacterTable& table) {
    if (v.multiplicities.size() != table.size())
        throw std::invalid_argument("multiplicity count does not match the table");
    const GroupPtr& g = table.group;
    std::vector<Cyclotomic> vals(g->classes().count(), Cyclotomic::zero(g->field_order()));
    for (std::size_t t = 0; t < table.size(); ++t) {
        if (v.multiplicities[t] == 0) continue;
        Rational mult(v.multiplicities[t]);
        for (std::size_t c = 0; c < vals.size(); ++c)
            vals[c] += mult * table.irreducibles[t].value(c);
    }
    return ClassFunction(g, std::move(vals));
}

ClassFunction induce(const NormalPair& pair, const ClassFunction& tau) {
    if (tau.group() != pair.H())
        throw std::invalid_argument("induce expects a class function on the pair's subgroup");
    const GroupPtr& g = pair.G();
    const GroupPtr& h = pair.H();
    const ClassData& gcls = g->classes();
    const ClassData& hcls = h->classes();
    const long m = g->field_order();

    std::vector<Cyclotomic> vals;
    vals.reserve(gcls.count());
    for (std::size_t c = 0; c < gcls.count(); ++c) {
        int rep = gcls.representative[c];
        Cyclotomic acc = Cyclotomic::zero(m);
        for (int x = 0; x < static_cast<int>(g->order()); ++x) {
            int conj = g->product(g->product(x, rep), g->inverse(x));
            int hi = pair.g_to_h(conj);
            if (hi >= 0) acc += tau.value(hcls.class_of[hi]);
        }
        vals.push_back(Rational(1, static_cast<Int>(h->order())) * acc);
    }
    return ClassFunction(g, std::move(vals));
}

ClassFunction restrict(const NormalPair& pair, const ClassFunction& rho) {
    if (rho.group() != pair.G())
        throw std::invalid_argument("restrict expects a class function on the pair's group");
    const GroupPtr& g = pair.G();
    const GroupPtr& h = pair.H();
    const ClassData& gcls = g->classes();
    const ClassData& hcls = h->classes();
    std::vector<Cyclotomic> vals;
    vals.reserve(hcls.count());
    for (std::size_t c = 0; c < hcls.count(); ++c) {
        int g_index = pair.h_to_g(hcls.representative[c]);
        vals.push_back(rho.value(gcls.class_of[g_index]));
    }
    return ClassFunction(h, std::move(vals));
}

ClassFunction conjugate_character(const NormalPair& pair, const ClassFunction& tau,
                                  int coset_index) {
    if (tau.group() != pair.H())
        throw std::invalid_argument("conjugate_character expects a class function on H");
    const GroupPtr& g = pair.G();
    const GroupPtr& h = pair.H();
    const ClassData& hcls = h->classes();
    const int rep_g = pair.coset_reps()[coset_index];

    std::vector<Cyclotomic> vals;
    vals.reserve(hcls.count());
    for (std::size_t c = 0; c < hcls.count(); ++c) {
        int x = pair.h_to_g(hcls.representative[c]);
        int conj = g->product(g->product(rep_g, x), g->inverse(rep_g));
        int hi = pair.g_to_h(conj);
        if (hi < 0) throw std::logic_error("conjugation left the normal subgroup");
        vals.push_back(tau.value(hcls.class_of[hi]));
    }
    return ClassFunction(h, std::move(vals));
}

std::vector<std::vector<int>> conjugation_action(const NormalPair& pair,
                                                 const CharacterTable& table_h) {
    if (table_h.group != pair.H())
        throw std::invalid_argument("table does not belong to the pair's subgroup");
    const int k = static_cast<int>(table_h.size());
    const int q = static_cast<int>(pair.quotient_order());
    std::vector<std::vector<int>> action(q, std::vector<int>(k, -1));
    for (int c = 0; c < q; ++c) {
        for (int t = 0; t < k; ++t) {
            ClassFunction img = conjugate_character(pair, table_h.irreducibles[t], c);
            for (int u = 0; u < k; ++u)
                if (img == table_h.irreducibles[u]) {
                    action[c][t] = u;
                    break;
                }
            if (action[c][t] < 0)
                throw std::logic_error("conjugate of an irreducible is not in the table");
        }
    }
    return action;
}

std::vector<std::vector<int>> irr_orbits(const NormalPair& pair,
                                         const CharacterTable& table_h) {
    const auto action = conjugation_action(pair, table_h);
    const int k = static_cast<int>(table_h.size());
    std::vector<int> orbit_of(k, -1);
    std::vector<std::vector<int>> orbits;
    for (int t = 0; t < k; ++t) {
        if (t == static_cast<int>(table_h.trivial_index) || orbit_of[t] >= 0) continue;
        std::vector<int> orbit{t};
        orbit_of[t] = static_cast<int>(orbits.size());
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (const std::vector<int>& sigma : action) {
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

}  // namespace mckay
