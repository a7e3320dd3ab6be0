// Command-line front end: character tables, McKay matrices, folds, and the
// full catalog verification run.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "mckay/json_io.hpp"

namespace {

using namespace mckay;

struct Output {
    std::string json_path;
    bool ascii_dynkin = false;

    void emit(const Json& doc) const {
        if (json_path.empty()) return;
        std::ofstream out(json_path);
        out << doc.dump(2) << "\n";
    }
};

GroupPtr load_group(const std::string& spec) {
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        Json j = Json::parse(in);
        return group_from_json(j);
    }
    return build_catalog_group(spec);
}

std::vector<Mat2> subgroup_generators(const std::string& spec) {
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        Json j = Json::parse(in);
        GroupPtr h = group_from_json(j);
        std::vector<Mat2> gens;
        for (int i : h->generator_indices()) gens.push_back(h->element(i));
        return gens;
    }
    return catalog_entry(spec).generators;
}

std::string matrix_text(const IntMatrix& m) {
    std::ostringstream out;
    for (const auto& row : m) {
        out << "  [";
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? ", " : "") << row[j];
        out << "]\n";
    }
    return out.str();
}

bool expected_matches(const PairEntry& entry, const CartanClassification& cartan) {
    if (entry.expected_family.empty()) return true;
    if (!cartan.type.known() || cartan.type.affine) return false;
    if (entry.expected_family == "BC")
        return (cartan.type.family == "B" || cartan.type.family == "C") &&
               cartan.type.rank == entry.expected_rank;
    return cartan.type.family == entry.expected_family &&
           cartan.type.rank == entry.expected_rank;
}

int run_catalog(const Output& out) {
    Json doc{{"groups", Json::array()}, {"pairs", Json::array()}};
    std::cout << "groups:\n";
    for (const std::string& name : catalog_names()) {
        CatalogEntry e = catalog_entry(name);
        std::cout << "  " << name << " order=" << e.expected_order
                  << " classes=" << e.expected_classes << " type=" << e.expected_type.name()
                  << "\n";
        doc["groups"].push_back({{"name", name},
                                 {"order", e.expected_order},
                                 {"classes", e.expected_classes},
                                 {"type", e.expected_type.name()}});
    }
    std::cout << "pairs:\n";
    for (const PairEntry& p : standard_pairs()) {
        std::cout << "  " << p.g_name << " / " << p.h_name;
        if (!p.expected_family.empty())
            std::cout << " expected=" << p.expected_family << p.expected_rank;
        if (p.named) std::cout << " (named)";
        std::cout << "\n";
        doc["pairs"].push_back({{"G", p.g_name},
                                {"H", p.h_name},
                                {"expected_family", p.expected_family},
                                {"expected_rank", p.expected_rank},
                                {"named", p.named}});
    }
    out.emit(doc);
    return 0;
}

int run_chartable(const std::string& name, const Output& out) {
    GroupPtr g = load_group(name);
    CharacterTable table = character_table(g);
    const ClassData& cls = g->classes();
    std::cout << "group " << name << ": order=" << g->order() << " classes=" << cls.count()
              << " exponent=" << g->exponent() << " m=" << g->field_order()
              << " p=" << table.dixon_prime << "\n";
    std::cout << "class sizes:";
    for (std::size_t c = 0; c < cls.count(); ++c) std::cout << " " << cls.size[c];
    std::cout << "\nrep orders: ";
    for (std::size_t c = 0; c < cls.count(); ++c) std::cout << " " << cls.rep_order[c];
    std::cout << "\n";
    for (std::size_t t = 0; t < table.size(); ++t) {
        std::cout << "chi_" << t << " (deg " << table.degrees[t] << "):";
        for (const Cyclotomic& v : table.irreducibles[t].values())
            std::cout << "  " << v.to_string();
        std::cout << "\n";
    }
    out.emit(table_to_json(table));
    return 0;
}

int run_mckay(const std::string& name, bool affine, const Output& out) {
    GroupPtr g = load_group(name);
    CharacterTable table = character_table(g);
    McKayMatrix a = mckay_matrix(table, natural_character(g), affine);
    IntMatrix cartan = two_i_minus(a.a);
    CartanClassification cls = classify_cartan(cartan);

    std::cout << "group " << name << (affine ? " (trivial included)" : " (over Irr+)")
              << "\n";
    std::cout << "A =\n" << matrix_text(a.a);
    std::cout << "2I - A =\n" << matrix_text(cartan);
    std::cout << "type: " << cls.type.name() << "\n";
    std::vector<std::string> labels;
    for (int idx : a.irr_indices)
        labels.push_back("degree " + std::to_string(table.degrees[idx]));
    if (out.ascii_dynkin) std::cout << ascii_dynkin(cartan, labels);

    Json doc = matrix_to_json(a.a, labels);
    doc["two_I_minus_A"] = matrix_to_json(cartan, labels)["matrix"];
    doc["cartan"] = classification_to_json(cls);
    if (!affine) {
        IntMatrix b = intersection_matrix_b(table, natural_character(g));
        RatMatrix dual = dual_basis(b);
        Json dual_rows = Json::array();
        for (const auto& row : dual) {
            Json r = Json::array();
            for (const Rational& x : row) r.push_back(x.to_string());
            dual_rows.push_back(std::move(r));
        }
        doc["B"] = matrix_to_json(b, labels)["matrix"];
        doc["dual_basis"] = std::move(dual_rows);
    }
    out.emit(doc);
    return 0;
}

int run_fold(const std::string& g_name, const std::string& h_name, const Output& out) {
    GroupPtr g = load_group(g_name);
    PairEntry entry;
    entry.g_name = g_name;
    entry.h_name = h_name;
    entry.h_generators = subgroup_generators(h_name);
    NormalPair pair = realize_pair(entry);
    CharacterTable table_h = character_table(pair.H());
    CharacterTable table_g = character_table(pair.G());
    FoldResult fold = verify_pair(pair, table_h, table_g);

    std::cout << "fold " << g_name << " / " << h_name << ": n=" << fold.n << "\n";
    std::cout << "orbits:";
    for (const auto& orbit : fold.orbits) {
        std::cout << " {";
        for (std::size_t i = 0; i < orbit.size(); ++i)
            std::cout << (i ? "," : "") << orbit[i];
        std::cout << "}";
    }
    std::cout << "\nf:";
    for (Int f : fold.f) std::cout << " " << f;
    std::cout << "\nP =\n" << matrix_text(fold.p);
    std::cout << "C =\n" << matrix_text(fold.c);
    std::cout << "D (row convention) =\n" << matrix_text(fold.d_row);
    std::cout << "2I - C type: " << fold.cartan.type.name()
              << "  convention: " << fold.verdicts.d_convention << "\n";
    std::cout << "identities: " << (fold.verdicts.identities_hold() ? "ok" : "FAIL") << "\n";
    for (const std::string& f : fold.verdicts.failures) std::cout << "  ! " << f << "\n";
    if (out.ascii_dynkin) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < fold.orbits.size(); ++i)
            labels.push_back("degree " + std::to_string(fold.orbit_degrees[i]) + ", f=" +
                             std::to_string(fold.f[i]));
        std::cout << ascii_dynkin(two_i_minus(fold.c), labels);
    }
    out.emit(fold_to_json(fold));
    return fold.verdicts.identities_hold() ? 0 : 1;
}

int run_group(const std::string& path, const Output& out) {
    GroupPtr g = load_group(path);
    CharacterTable table = character_table(g);
    McKayMatrix a = mckay_matrix(table, natural_character(g), false);
    CartanClassification cls = classify_cartan(two_i_minus(a.a));
    std::cout << "order=" << g->order() << " classes=" << g->classes().count()
              << " exponent=" << g->exponent() << " type=" << cls.type.name() << "\n";
    Json doc = table_to_json(table);
    doc["cartan"] = classification_to_json(cls);
    out.emit(doc);
    return 0;
}

int run_verify_all(const Output& out) {
    bool all_ok = true;
    Json doc{{"groups", Json::array()}, {"pairs", Json::array()}};

    for (const std::string& name : catalog_names()) {
        CatalogEntry entry = catalog_entry(name);
        GroupPtr g = build_catalog_group(name);
        CharacterTable table = character_table(g);
        ClassFunction nat = natural_character(g);
        McKayMatrix a_plus = mckay_matrix(table, nat, false);
        CartanClassification cls = classify_cartan(two_i_minus(a_plus.a));
        bool type_ok = cls.type == entry.expected_type;

        // affine null vector: (2I - A) over full Irr kills the degree vector
        McKayMatrix a_full = mckay_matrix(table, nat, true);
        IntMatrix affine = two_i_minus(a_full.a);
        bool null_ok = true;
        for (std::size_t i = 0; i < affine.size(); ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < affine.size(); ++j)
                acc += affine[i][j] * table.degrees[a_full.irr_indices[j]];
            if (acc != 0) null_ok = false;
        }

        bool ok = type_ok && null_ok;
        all_ok = all_ok && ok;
        std::cout << "group " << name << " order=" << g->order()
                  << " classes=" << g->classes().count() << " type=" << cls.type.name()
                  << " affine_null=" << (null_ok ? "ok" : "FAIL") << " "
                  << (ok ? "ok" : "FAIL") << "\n";
        doc["groups"].push_back({{"name", name},
                                 {"order", g->order()},
                                 {"classes", g->classes().count()},
                                 {"type", cls.type.name()},
                                 {"affine_null", null_ok},
                                 {"ok", ok}});
    }

    for (const PairEntry& entry : standard_pairs()) {
        NormalPair pair = realize_pair(entry);
        CharacterTable table_h = character_table(pair.H());
        CharacterTable table_g = character_table(pair.G());
        FoldResult fold = verify_pair(pair, table_h, table_g);
        bool ok = fold.verdicts.identities_hold() && expected_matches(entry, fold.cartan) &&
                  (!entry.named || fold.verdicts.cartan_finite);
        all_ok = all_ok && ok;
        std::cout << "pair " << entry.g_name << " / " << entry.h_name << " n=" << fold.n
                  << " type=" << fold.cartan.type.name()
                  << " conv=" << fold.verdicts.d_convention << " "
                  << (ok ? "ok" : "FAIL") << "\n";
        Json p = fold_to_json(fold);
        p["G"] = entry.g_name;
        p["H"] = entry.h_name;
        p["ok"] = ok;
        doc["pairs"].push_back(std::move(p));
    }

    std::cout << "verify-all: " << (all_ok ? "PASS" : "FAIL") << "\n";
    doc["pass"] = all_ok;
    out.emit(doc);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"McKay-Slodowy correspondence toolkit"};
    app.require_subcommand(1);

    Output out;
    long seed = 0;
    app.add_option("--json", out.json_path, "write the JSON result to this path");
    app.add_flag("--ascii-dynkin", out.ascii_dynkin, "print the Dynkin diagram");
    app.add_option("--seed", seed,
                   "reserved; no randomized tie-break exists, the flag is accepted and ignored");

    auto* catalog_cmd = app.add_subcommand("catalog", "list shipped groups and pairs");

    std::string chartable_name;
    auto* chartable_cmd = app.add_subcommand("chartable", "character table of a group");
    chartable_cmd->add_option("group", chartable_name, "catalog name or JSON file")
        ->required();

    std::string mckay_name;
    bool affine = false;
    auto* mckay_cmd = app.add_subcommand("mckay", "McKay matrix and Dynkin type");
    mckay_cmd->add_option("group", mckay_name, "catalog name or JSON file")->required();
    mckay_cmd->add_flag("--affine", affine, "include the trivial character");

    std::string fold_g, fold_h;
    auto* fold_cmd = app.add_subcommand("fold", "fold a normal pair and verify");
    fold_cmd->add_option("G", fold_g, "catalog name or JSON file")->required();
    fold_cmd->add_option("H", fold_h, "catalog name or JSON file of the normal subgroup")
        ->required();

    std::string group_path;
    auto* group_cmd = app.add_subcommand("group", "inspect a user-supplied group");
    group_cmd->add_option("json", group_path, "group JSON file");

    auto* verify_cmd = app.add_subcommand("verify-all", "verify the whole catalog");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // `group --json file.json` reads the file; with a positional input the
    // --json flag is the output path as everywhere else.
    if (group_cmd->parsed() && group_path.empty()) {
        if (out.json_path.empty()) {
            std::cerr << "error: group needs a JSON file\n";
            return 2;
        }
        group_path = std::exchange(out.json_path, std::string{});
    }

    try {
        if (catalog_cmd->parsed()) return run_catalog(out);
        if (chartable_cmd->parsed()) return run_chartable(chartable_name, out);
        if (mckay_cmd->parsed()) return run_mckay(mckay_name, affine, out);
        if (fold_cmd->parsed()) return run_fold(fold_g, fold_h, out);
        if (group_cmd->parsed()) return run_group(group_path, out);
        if (verify_cmd->parsed()) return run_verify_all(out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
