#include "mckay/json_io.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace mckay {

Json cyclotomic_to_json(const Cyclotomic& z) {
    Json terms = Json::array();
    for (std::size_t e = 0; e < z.coeffs().size(); ++e) {
        const Rational& c = z.coeffs()[e];
        if (!c.is_zero()) terms.push_back({e, c.num(), c.den()});
    }
    return Json{{"m", z.order()}, {"terms", std::move(terms)}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
    if (j.is_number_integer()) return Cyclotomic(Rational(j.get<Int>()));
    long m = 1;
    const Json* terms = nullptr;
    if (j.is_object()) {
        m = j.at("m").get<long>();
        terms = &j.at("terms");
    } else if (j.is_array()) {
        terms = &j;
    } else {
        throw std::invalid_argument("malformed cyclotomic value");
    }
    std::vector<Rational> coeffs;
    for (const Json& t : *terms) {
        long e = t.at(0).get<long>();
        Int num = t.at(1).get<Int>();
        Int den = t.size() > 2 ? t.at(2).get<Int>() : 1;
        if (e < 0) throw std::invalid_argument("negative exponent in cyclotomic term");
        if (static_cast<std::size_t>(e) >= coeffs.size()) coeffs.resize(e + 1, Rational(0));
        coeffs[e] += Rational(num, den);
    }
    return Cyclotomic::from_polynomial(m, coeffs);
}

GroupPtr group_from_json(const Json& j) {
    long m = j.at("m").get<long>();
    std::vector<Mat2> generators;
    for (const Json& g : j.at("generators")) {
        if (!g.is_array() || g.size() != 4)
            throw std::invalid_argument("each generator needs 4 entries");
        std::array<Cyclotomic, 4> e;
        long common = m;
        for (int t = 0; t < 4; ++t) {
            e[t] = g[t].is_array() ? cyclotomic_from_json(Json{{"m", m}, {"terms", g[t]}})
                                   : cyclotomic_from_json(g[t]);
            common = std::lcm(common, e[t].order());
        }
        for (Cyclotomic& v : e)
            if (v.order() != common) v = v.embed(common);
        generators.emplace_back(e[0], e[1], e[2], e[3]);
    }
    return FiniteMatrixGroup::closure(generators);
}

Json table_to_json(const CharacterTable& table) {
    const ClassData& cls = table.group->classes();
    Json sizes = Json::array(), orders = Json::array();
    for (std::size_t c = 0; c < cls.count(); ++c) {
        sizes.push_back(cls.size[c]);
        orders.push_back(cls.rep_order[c]);
    }
    Json irreducibles = Json::array();
    for (const ClassFunction& chi : table.irreducibles) {
        Json row = Json::array();
        for (const Cyclotomic& v : chi.values()) row.push_back(cyclotomic_to_json(v));
        irreducibles.push_back(std::move(row));
    }
    return Json{{"order", table.group->order()},
                {"m", table.group->field_order()},
                {"classes", Json::array({std::move(sizes), std::move(orders)})},
                {"irreducibles", std::move(irreducibles)},
                {"degrees", table.degrees}};
}

Json matrix_to_json(const IntMatrix& m, const std::vector<std::string>& labels) {
    Json rows = Json::array();
    for (const auto& row : m) rows.push_back(row);
    return Json{{"labels", labels}, {"matrix", std::move(rows)}};
}

Json classification_to_json(const CartanClassification& c) {
    return Json{{"family", c.type.family},
                {"rank", c.type.rank},
                {"affine", c.type.affine},
                {"known", c.type.known()},
                {"permutation", c.permutation}};
}

namespace {

Json int_matrix(const IntMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) rows.push_back(row);
    return rows;
}

}  // namespace

Json fold_to_json(const FoldResult& fold) {
    Json orbits = Json::array();
    for (const auto& orbit : fold.orbits) orbits.push_back(orbit);
    const IntMatrix& matched_d =
        fold.verdicts.d_convention == "paper" ? fold.d_paper : fold.d_row;
    Json verdicts{{"main_identity", fold.verdicts.main_identity},
                  {"two_I_minus_C_eq_minus_D", fold.verdicts.d_convention},
                  {"cartan_finite", fold.verdicts.cartan_finite},
                  {"mackey", fold.verdicts.mackey},
                  {"frobenius", fold.verdicts.frobenius},
                  {"representative_independence", fold.verdicts.representative_independent},
                  {"weights_integral", fold.verdicts.weights_integral},
                  {"pairing_action_invariant", fold.verdicts.pairing_action_invariant},
                  {"failures", fold.verdicts.failures}};
    return Json{{"n", fold.n},
                {"orbits", std::move(orbits)},
                {"f", fold.f},
                {"B", int_matrix(fold.b)},
                {"P", int_matrix(fold.p)},
                {"D", int_matrix(matched_d)},
                {"D_row", int_matrix(fold.d_row)},
                {"D_paper", int_matrix(fold.d_paper)},
                {"C", int_matrix(fold.c)},
                {"cartan", Json{{"family", fold.cartan.type.family},
                                {"rank", fold.cartan.type.rank}}},
                {"verdicts", std::move(verdicts)}};
}

}  // namespace mckay
