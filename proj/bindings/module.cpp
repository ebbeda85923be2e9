#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gamechrom/classifier.hpp"
#include "gamechrom/constructions.hpp"
#include "gamechrom/enumeration.hpp"
#include "gamechrom/solver.hpp"
#include "gamechrom/strategies.hpp"
#include "gamechrom/structure.hpp"
#include "gamechrom/textio.hpp"

namespace py = pybind11;
using namespace gamechrom;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact solver and classifier for the vertex coloring game on forests";

    py::class_<Forest>(m, "Forest")
        .def_static("build", &Forest::build, py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Forest::order)
        .def_property_readonly("edge_count", &Forest::edge_count)
        .def("edges", &Forest::edges)
        .def("neighbors", &Forest::neighbors, py::arg("v"))
        .def("degree", &Forest::degree, py::arg("v"))
        .def("max_degree", &Forest::max_degree)
        .def("has_edge", &Forest::has_edge, py::arg("u"), py::arg("v"))
        .def("__eq__", [](const Forest& a, const Forest& b) { return a == b; })
        .def("__repr__", [](const Forest& f) {
            return "Forest(order=" + std::to_string(f.order()) + ", edges=" +
                   std::to_string(f.edge_count()) + ")";
        });

    py::class_<Position>(m, "Position")
        .def_static("uncolored", &Position::uncolored, py::arg("forest"))
        .def_readonly("forest", &Position::forest)
        .def_readwrite("color", &Position::color)
        .def_readwrite("external", &Position::external)
        .def_property_readonly("order", &Position::order)
        .def("colored", &Position::colored, py::arg("v"))
        .def("legal", &Position::legal, py::arg("v"), py::arg("c"));

    py::enum_<Player>(m, "Player").value("Alice", Player::Alice).value("Bob", Player::Bob);
    py::enum_<Winner>(m, "Winner").value("Alice", Winner::Alice).value("Bob", Winner::Bob);

    py::class_<Ruleset>(m, "Ruleset")
        .def_static("standard", &Ruleset::standard, py::arg("t"))
        .def_static("mcg", &Ruleset::mcg, py::arg("t"))
        .def_static("ecg", &Ruleset::ecg, py::arg("t"))
        .def_static("rcg", &Ruleset::rcg, py::arg("t"), py::arg("k"))
        .def_readonly("palette", &Ruleset::palette)
        .def("hash", &Ruleset::hash);

    py::class_<GameState>(m, "GameState")
        .def_static("initial", &GameState::initial, py::arg("forest"), py::arg("rules"))
        .def_static("from_position", &GameState::from_position, py::arg("position"),
                    py::arg("rules"), py::arg("to_move") = std::nullopt)
        .def_readonly("position", &GameState::position)
        .def_readonly("to_move", &GameState::to_move);

    m.def("solve", [](const GameState& s) { return solve(s); }, py::arg("state"));
    m.def("bob_wins_within",
          [](const GameState& s, int moves) { return bob_wins_within(s, moves); },
          py::arg("state"), py::arg("bob_moves"));
    m.def("game_chromatic_number",
          [](const Forest& f) {
              ChiG c = game_chromatic_number(f);
              return py::make_tuple(c.value, c.theorem_capped);
          },
          py::arg("forest"), "Returns (value, theorem_capped).");

    m.def("is_chi_g_2", &is_chi_g_2, py::arg("forest"));
    m.def("b_vertex_search", &b_vertex_search, py::arg("forest"));
    m.def("classify", [](const Forest& f) {
        Classification c = classify(f);
        py::dict d;
        d["value"] = c.value;
        d["method"] = name(c.method);
        d["rule"] = c.rule;
        d["b_vertex"] = c.b_vertex;
        return d;
    }, py::arg("forest"));

    m.def("longest_path_length", &longest_path_length, py::arg("forest"));
    m.def("canonical_form", &canonical_form, py::arg("forest"));
    m.def("trees_of_order", &trees_of_order, py::arg("n"));
    m.def("forests_of_order", &forests_of_order, py::arg("n"));

    m.def("parse_position", &parse_position_text, py::arg("text"));
    m.def("position_text", &position_text, py::arg("position"));
    m.def("load_position", &load_position, py::arg("path"));

    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("star", &star, py::arg("leaves"));
    m.def("caterpillar", &caterpillar, py::arg("spine_degrees"));
    m.def("spider", &spider, py::arg("legs"), py::arg("leg_length"));
    m.def("t_prime", &t_prime);
    m.def("twelve_vertex_example", &twelve_vertex_example);

    py::register_exception<ForestError>(m, "ForestBuildError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);
}
