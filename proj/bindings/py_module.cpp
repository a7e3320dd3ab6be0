// Python bindings for the main pipeline: groups, character tables, McKay
// matrices, folds, and the catalog verification.  Structured results cross
// the boundary as plain dicts/lists mirroring the JSON schemas.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mckay/json_io.hpp"

namespace py = pybind11;
using namespace mckay;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null:
            return py::none();
        case Json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case Json::value_t::number_integer:
        case Json::value_t::number_unsigned:
            return py::int_(j.get<long long>());
        case Json::value_t::number_float:
            return py::float_(j.get<double>());
        case Json::value_t::string:
            return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const Json& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            throw std::runtime_error("unsupported JSON value");
    }
}

IntMatrix matrix_from_py(const std::vector<std::vector<Int>>& rows) { return rows; }

// Handle for the immutable group object (the C++ side shares const pointers,
// which pybind11 cannot hold directly).
struct PyGroup {
    GroupPtr ptr;
};

NormalPair make_pair(const std::string& g_name, const std::string& h_name) {
    PairEntry entry;
    entry.g_name = g_name;
    entry.h_name = h_name;
    entry.h_generators = catalog_entry(h_name).generators;
    return realize_pair(entry);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact McKay-Slodowy correspondence computations";

    py::class_<Cyclotomic>(m, "Cyclotomic")
        .def(py::init([](Int n) { return Cyclotomic(Rational(n)); }))
        .def_static("root_of_unity", &Cyclotomic::root_of_unity, py::arg("m"), py::arg("k"))
        .def_property_readonly("order", &Cyclotomic::order)
        .def("conj", &Cyclotomic::conj)
        .def("embed", &Cyclotomic::embed)
        .def("inverse", &Cyclotomic::inverse)
        .def("is_rational", &Cyclotomic::is_rational)
        .def("__add__", [](const Cyclotomic& a, const Cyclotomic& b) { return a + b; })
        .def("__sub__", [](const Cyclotomic& a, const Cyclotomic& b) { return a - b; })
        .def("__mul__", [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; })
        .def("__neg__", [](const Cyclotomic& a) { return -a; })
        .def("__eq__", [](const Cyclotomic& a, const Cyclotomic& b) { return a == b; })
        .def("__repr__", [](const Cyclotomic& a) { return a.to_string(); })
        .def("__complex__", &Cyclotomic::to_complex);

    py::class_<PyGroup>(m, "Group")
        .def_property_readonly("order", [](const PyGroup& g) { return g.ptr->order(); })
        .def_property_readonly("exponent",
                               [](const PyGroup& g) { return g.ptr->exponent(); })
        .def_property_readonly("field_order",
                               [](const PyGroup& g) { return g.ptr->field_order(); })
        .def_property_readonly("num_classes",
                               [](const PyGroup& g) { return g.ptr->classes().count(); })
        .def("class_sizes", [](const PyGroup& g) { return g.ptr->classes().size; })
        .def("__len__", [](const PyGroup& g) { return g.ptr->order(); })
        .def("__repr__", [](const PyGroup& g) {
            return "<Group order=" + std::to_string(g.ptr->order()) + ">";
        });

    m.def("catalog_names", &catalog_names, "names of the shipped groups");
    m.def(
        "build_group",
        [](const std::string& name) { return PyGroup{build_catalog_group(name)}; },
        py::arg("name"), "build a catalog group by name (e.g. 'BD:8', '2T')");
    m.def(
        "group_from_json",
        [](const std::string& text) { return PyGroup{group_from_json(Json::parse(text))}; },
        py::arg("json_text"), "build a group from its JSON description");

    m.def(
        "character_table",
        [](const PyGroup& g) { return json_to_py(table_to_json(character_table(g.ptr))); },
        py::arg("group"), "exact character table as a dict");

    m.def(
        "mckay_matrix",
        [](const PyGroup& g, bool include_trivial) {
            CharacterTable table = character_table(g.ptr);
            McKayMatrix a = mckay_matrix(table, natural_character(g.ptr), include_trivial);
            CartanClassification cls = classify_cartan(two_i_minus(a.a));
            Json doc{{"matrix", Json::array()},
                     {"two_I_minus_A", Json::array()},
                     {"cartan", classification_to_json(cls)}};
            for (const auto& row : a.a) doc["matrix"].push_back(row);
            for (const auto& row : two_i_minus(a.a)) doc["two_I_minus_A"].push_back(row);
            return json_to_py(doc);
        },
        py::arg("group"), py::arg("include_trivial") = false,
        "McKay matrix, Cartan candidate and its classification");

    m.def(
        "classify_cartan",
        [](const std::vector<std::vector<Int>>& rows) {
            return json_to_py(classification_to_json(classify_cartan(matrix_from_py(rows))));
        },
        py::arg("matrix"), "classify an integer matrix against the Dynkin catalog");

    m.def(
        "fold",
        [](const std::string& g_name, const std::string& h_name) {
            NormalPair pair = make_pair(g_name, h_name);
            CharacterTable th = character_table(pair.H());
            CharacterTable tg = character_table(pair.G());
            return json_to_py(fold_to_json(verify_pair(pair, th, tg)));
        },
        py::arg("g"), py::arg("h"),
        "fold the named pair and verify the identities; returns the fold dict");

    m.def(
        "standard_pairs",
        []() {
            py::list out;
            for (const PairEntry& e : standard_pairs()) {
                py::dict d;
                d["G"] = e.g_name;
                d["H"] = e.h_name;
                d["expected_family"] = e.expected_family;
                d["expected_rank"] = e.expected_rank;
                d["named"] = e.named;
                out.append(std::move(d));
            }
            return out;
        },
        "the shipped normal pairs");
}
