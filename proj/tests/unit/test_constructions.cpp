#include <doctest.h>

#include "gamechrom/classifier.hpp"
#include "gamechrom/constructions.hpp"
#include "gamechrom/solver.hpp"

using namespace gamechrom;

TEST_CASE("parametric builders") {
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(star(4).order() == 5);
    CHECK(spider(4, 3).order() == 13);
    Forest cat = caterpillar({3, 3, 3});
    CHECK(cat.order() == 8);
    for (Vertex v : {0, 1, 2}) CHECK(cat.degree(v) == 3);
    CHECK_THROWS_AS(static_cast<void>(caterpillar({0, 0})), ConstructionError);
}

TEST_CASE("pendant P4 gadget") {
    Forest f = p4_plus();
    CHECK(f.order() == 5);
    CHECK(longest_path_length(f) == 3);
    CHECK(!is_chi_g_2(f).first);
}

TEST_CASE("double-branch gadget positions") {
    Position base = fig3_position(std::nullopt);
    CHECK(base.order() == 8);
    int colored = 0;
    for (Vertex v = 0; v < base.order(); ++v) colored += base.colored(v);
    CHECK(colored == 2);

    Position with_leaf = fig3_position(Fig3Site::X1Prime);
    CHECK(with_leaf.order() == 9);
    CHECK(with_leaf.color[8] == 1);
    CHECK(with_leaf.forest.has_edge(fig3_vertex("x1'"), 8));

    CHECK(fig3_vertex("x2''") == 7);
    CHECK_THROWS_AS(static_cast<void>(fig3_vertex("nope")), ConstructionError);
}

TEST_CASE("extremal 14-vertex tree") {
    Forest f = t_prime();
    CHECK(f.order() == 14);
    CHECK(classify(f).value == 4);
    for (Vertex v = 0; v < 14; ++v) CHECK(f.degree(v) != 3);
}

TEST_CASE("twelve-vertex example") {
    Forest f = twelve_vertex_example();
    CHECK(f.order() == 12);
    CHECK(!b_vertex_search(f).has_value());
}

TEST_CASE("gluing copies at a shared vertex") {
    Forest g = glue_at_vertex(path_graph(3), 0, 3);
    CHECK(g.order() == 7);
    CHECK(g.degree(0) == 3);
    CHECK_THROWS_AS(static_cast<void>(glue_at_vertex(path_graph(3), 5, 2)), ConstructionError);
}

TEST_CASE("maximum-degree-3 gadget suite") {
    Deg3GadgetSuite s = deg3_gadget_suite();
    CHECK(s.t1.order() == 7);
    CHECK(s.t3.order() == 20);
    CHECK(s.t4.forest == s.t3.forest);
    CHECK(s.t5.order() == 32);
    CHECK(s.t5.forest.degree(s.t5_u) == 1);
    CHECK(s.h.order() == 8);
    CHECK(s.t_double_prime.order() == 22);
    CHECK(s.t.order() == 94);
    CHECK(s.t.max_degree() == 3);

    // the double-danger trap closes within two Bob moves
    GameState trap = GameState::from_position(s.t1, Ruleset::standard(3), Player::Bob);
    CHECK(bob_wins_within(trap, 2));
}

TEST_CASE("surrounded P4 trap") {
    Position p = surrounded_p4_trap();
    CHECK(p.order() == 8);
    int colored = 0;
    for (Vertex v = 0; v < p.order(); ++v) colored += p.colored(v);
    CHECK(colored == 4);
    for (Vertex v : {0, 1, 2, 3}) CHECK(!p.colored(v));
}
