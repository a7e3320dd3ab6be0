// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria run against the full shipped catalog.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "mckay/catalog.hpp"
#include "mckay/fold.hpp"
#include "mckay/json_io.hpp"

using namespace mckay;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct PairData {
    PairEntry entry;
    NormalPair pair;
    CharacterTable table_h;
    CharacterTable table_g;
    FoldResult fold;
};

std::vector<PairData> realize_all_pairs() {
    std::vector<PairData> out;
    for (const PairEntry& entry : standard_pairs()) {
        NormalPair pair = realize_pair(entry);
        CharacterTable th = character_table(pair.H());
        CharacterTable tg = character_table(pair.G());
        FoldResult fold = verify_pair(pair, th, tg);
        out.push_back(PairData{entry, std::move(pair), std::move(th), std::move(tg),
                               std::move(fold)});
    }
    return out;
}

bool integer_value(const Cyclotomic& v, Int expected) {
    return v.is_rational() && v.to_rational() == Rational(expected);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    // ---- criterion 1: ADE recovery -----------------------------------------
    {
        auto start = Clock::now();
        bool ok = true;
        std::string detail;
        for (const std::string& name : catalog_names()) {
            CatalogEntry entry = catalog_entry(name);
            GroupPtr g = build_catalog_group(name);
            CharacterTable t = character_table(g);
            McKayMatrix a = mckay_matrix(t, natural_character(g), false);
            IntMatrix m = two_i_minus(a.a);
            CartanClassification cls = classify_cartan(m);
            bool match = cls.type == entry.expected_type;
            if (match) {
                IntMatrix target = cartan_matrix(cls.type);
                for (std::size_t i = 0; i < m.size(); ++i)
                    for (std::size_t j = 0; j < m.size(); ++j)
                        if (m[i][j] != target[cls.permutation[i]][cls.permutation[j]])
                            match = false;
            }
            if (!match) {
                ok = false;
                detail = name + " classified as " + cls.type.name() + ", expected " +
                         entry.expected_type.name();
                break;
            }
        }
        double elapsed = seconds_since(start);
        if (elapsed >= 5.0) {
            ok = false;
            detail = "took " + std::to_string(elapsed) + " s";
        }
        std::ostringstream d;
        d.setf(std::ios::fixed);
        d.precision(2);
        d << elapsed << " s";
        report(1, "ADE recovery over Irr+ for the whole catalog", ok,
               detail.empty() ? d.str() : detail);
    }

    // ---- criterion 2: affine null vector ------------------------------------
    {
        bool ok = true;
        for (const std::string& name : catalog_names()) {
            GroupPtr g = build_catalog_group(name);
            CharacterTable t = character_table(g);
            McKayMatrix a = mckay_matrix(t, natural_character(g), true);
            IntMatrix m = two_i_minus(a.a);
            for (std::size_t i = 0; i < m.size(); ++i) {
                Int acc = 0;
                for (std::size_t j = 0; j < m.size(); ++j)
                    acc += m[i][j] * t.degrees[a.irr_indices[j]];
                if (acc != 0) ok = false;
            }
        }
        report(2, "affine null vector (2I-A) * degrees = 0 with trivial included", ok);
    }

    // ---- criterion 3: character-table correctness ---------------------------
    {
        bool ok = true;
        std::string detail;
        for (const std::string& name : catalog_names()) {
            GroupPtr g = build_catalog_group(name);
            CharacterTable t = character_table(g);
            long sum_d2 = 0;
            for (long d : t.degrees) sum_d2 += d * d;
            if (sum_d2 != static_cast<long>(g->order())) ok = false;
            for (std::size_t i = 0; i < t.size() && ok; ++i)
                for (std::size_t j = 0; j < t.size(); ++j)
                    if (!integer_value(inner_product(t.irreducibles[i], t.irreducibles[j]),
                                       i == j ? 1 : 0))
                        ok = false;
            const ClassData& cls = g->classes();
            for (std::size_t a = 0; a < cls.count() && ok; ++a)
                for (std::size_t b = 0; b < cls.count(); ++b) {
                    Cyclotomic acc = Cyclotomic::zero(g->field_order());
                    for (std::size_t i = 0; i < t.size(); ++i)
                        acc += t.irreducibles[i].value(a) * t.irreducibles[i].value(b).conj();
                    Int expected =
                        a == b ? static_cast<Int>(g->order()) / cls.size[a] : 0;
                    if (!integer_value(acc, expected)) ok = false;
                }
        }
        auto start = Clock::now();
        CharacterTable big = character_table(build_catalog_group("2I"));
        double elapsed = seconds_since(start);
        std::vector<long> degrees = big.degrees;
        std::sort(degrees.begin(), degrees.end());
        if (degrees != std::vector<long>{1, 2, 2, 3, 3, 4, 4, 5, 6}) {
            ok = false;
            detail = "wrong 2I degrees";
        }
        if (elapsed >= 10.0) {
            ok = false;
            detail = "2I table took " + std::to_string(elapsed) + " s";
        }
        report(3, "exact orthogonality and degree sums; 2I table in time", ok, detail);
    }

    std::vector<PairData> pairs = realize_all_pairs();

    // ---- criterion 4: Mackey and Frobenius reciprocity -----------------------
    {
        bool ok = true;
        std::string detail;
        for (const PairData& pd : pairs) {
            for (std::size_t i = 0; i < pd.table_h.size(); ++i) {
                ClassFunction ind = induce(pd.pair, pd.table_h.irreducibles[i]);
                ClassFunction back = restrict(pd.pair, ind);
                ClassFunction conj_sum =
                    conjugate_character(pd.pair, pd.table_h.irreducibles[i], 0);
                for (int c = 1; c < static_cast<int>(pd.pair.quotient_order()); ++c)
                    conj_sum =
                        conj_sum + conjugate_character(pd.pair, pd.table_h.irreducibles[i], c);
                if (!(back == conj_sum)) ok = false;
                for (std::size_t u = 0; u < pd.table_g.size(); ++u) {
                    Cyclotomic lhs = inner_product(ind, pd.table_g.irreducibles[u]);
                    Cyclotomic rhs = inner_product(
                        pd.table_h.irreducibles[i],
                        restrict(pd.pair, pd.table_g.irreducibles[u]));
                    if (!(lhs == rhs)) ok = false;
                }
            }
            if (!ok) {
                detail = pd.entry.g_name + "/" + pd.entry.h_name;
                break;
            }
        }
        report(4, "Mackey and Frobenius reciprocity on every catalog pair", ok, detail);
    }

    // ---- criterion 5: main identity ------------------------------------------
    {
        bool ok = true;
        std::string detail;
        for (const PairData& pd : pairs) {
            const ClassFunction chi_g_shifted =
                natural_character(pd.pair.G()).minus_constant(Rational(2));
            std::vector<int> basis;  // table rows of Irr+, as the lattice uses them
            for (int t = 0; t < static_cast<int>(pd.table_h.size()); ++t)
                if (t != static_cast<int>(pd.table_h.trivial_index)) basis.push_back(t);
            std::vector<ClassFunction> induced;
            for (const auto& orbit : pd.fold.orbits)
                induced.push_back(induce(pd.pair, pd.table_h.irreducibles[basis[orbit[0]]]));
            for (std::size_t i = 0; i < induced.size() && ok; ++i)
                for (std::size_t j = 0; j < induced.size(); ++j) {
                    Cyclotomic rhs =
                        inner_product(tensor(chi_g_shifted, induced[i]), induced[j]);
                    if (!integer_value(rhs, pd.fold.p[i][j])) ok = false;
                }
            if (!pd.fold.verdicts.main_identity) ok = false;
            if (!ok) {
                detail = pd.entry.g_name + "/" + pd.entry.h_name;
                break;
            }
        }
        report(5, "pushforward pairing equals the induced-character inner product", ok,
               detail);
    }

    // ---- criterion 6: folding identity and BCFG classification ---------------
    {
        bool ok = true;
        std::string detail;
        for (const PairData& pd : pairs) {
            const std::string& conv = pd.fold.verdicts.d_convention;
            if (conv == "fail") {
                ok = false;
            } else if (pd.fold.d_row != pd.fold.d_paper && conv == "both") {
                ok = false;  // distinct candidates must single out one convention
            }
            if (!pd.entry.expected_family.empty()) {
                const DynkinType& type = pd.fold.cartan.type;
                bool match = type.known() && !type.affine &&
                             type.rank == pd.entry.expected_rank;
                if (pd.entry.expected_family == "BC")
                    match = match && (type.family == "B" || type.family == "C");
                else
                    match = match && type.family == pd.entry.expected_family;
                if (!match) ok = false;
            }
            if (!ok && detail.empty()) detail = pd.entry.g_name + "/" + pd.entry.h_name;
        }
        // frozen hand-derived oracle for the D4 -> G2 instance
        for (const PairData& pd : pairs) {
            if (pd.entry.g_name != "2T" || !pd.entry.named) continue;
            if (pd.fold.p != IntMatrix{{-2, 3}, {3, -6}} ||
                pd.fold.c != IntMatrix{{0, 1}, {3, 0}} ||
                pd.fold.d_row != IntMatrix{{-2, 1}, {3, -2}} ||
                pd.fold.verdicts.d_convention != "row" ||
                !(pd.fold.cartan.type == DynkinType{"G", 2, false})) {
                ok = false;
                detail = "2T/BD:8 worked values";
            }
        }
        report(6, "2I-C = -D under one recorded convention; BCFG types as expected", ok,
               detail);
    }

    // ---- criterion 7: invariance suite ----------------------------------------
    {
        bool ok = true;
        std::string detail;
        for (const PairData& pd : pairs) {
            const FoldVerdicts& v = pd.fold.verdicts;
            if (!v.pairing_action_invariant || !v.representative_independent ||
                !v.weights_integral) {
                ok = false;
                detail = pd.entry.g_name + "/" + pd.entry.h_name;
                break;
            }
            for (std::size_t i = 0; i < pd.fold.orbits.size(); ++i) {
                if (pd.fold.n % static_cast<Int>(pd.fold.orbits[i].size()) != 0) ok = false;
                for (std::size_t j = 0; j < pd.fold.orbits.size(); ++j)
                    if (pd.fold.p[i][j] != pd.fold.p[j][i]) ok = false;
            }
            // D integrality is enforced by construction; recheck the division
            for (std::size_t i = 0; i < pd.fold.orbits.size() && ok; ++i)
                for (std::size_t j = 0; j < pd.fold.orbits.size(); ++j) {
                    if (pd.fold.p[i][j] % pd.fold.f[j] != 0) ok = false;
                    if (pd.fold.d_row[i][j] * pd.fold.f[j] != pd.fold.p[i][j]) ok = false;
                }
            if (!ok && detail.empty()) detail = pd.entry.g_name + "/" + pd.entry.h_name;
        }
        report(7, "action invariance, representative independence, weight divisibility",
               ok, detail);
    }

    // ---- criterion 8: byte-identical verify-all -------------------------------
    {
        bool ok = true;
        std::string detail;
#ifdef MCKAY_CLI_PATH
        const std::string cli = MCKAY_CLI_PATH;
        const std::string dir = "acceptance_tmp";
        std::system(("mkdir -p " + dir).c_str());
        std::string cmd1 = cli + " verify-all --json " + dir + "/run1.json > " + dir +
                           "/run1.txt 2>/dev/null";
        std::string cmd2 = cli + " verify-all --json " + dir + "/run2.json > " + dir +
                           "/run2.txt 2>/dev/null";
        int rc1 = std::system(cmd1.c_str());
        int rc2 = std::system(cmd2.c_str());
        if (rc1 != 0 || rc2 != 0) {
            ok = false;
            detail = "verify-all exited nonzero";
        } else {
            std::string out1 = slurp(dir + "/run1.txt"), out2 = slurp(dir + "/run2.txt");
            std::string json1 = slurp(dir + "/run1.json"), json2 = slurp(dir + "/run2.json");
            if (out1.empty() || out1 != out2) {
                ok = false;
                detail = "stdout differs between runs";
            }
            if (json1.empty() || json1 != json2) {
                ok = false;
                detail = "JSON differs between runs";
            }
        }
#else
        ok = false;
        detail = "CLI path not configured";
#endif
        report(8, "two consecutive verify-all runs are byte-identical", ok, detail);
    }

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed" << std::endl;
    return 1;
}
