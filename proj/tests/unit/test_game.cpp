#include <doctest.h>

#include <algorithm>

#include "gamechrom/constructions.hpp"
#include "gamechrom/game.hpp"

using namespace gamechrom;

TEST_CASE("ruleset factories carry the variant flags") {
    Ruleset std2 = Ruleset::standard(2);
    CHECK(std2.first_mover == Player::Alice);
    CHECK(!std2.alice_may_pass);
    CHECK(!std2.bob_may_pass);
    CHECK(!std2.alice_may_add_leaf);

    Ruleset m = Ruleset::mcg(3);
    CHECK(m.first_mover == Player::Bob);
    CHECK(m.bob_may_pass);
    CHECK(!m.alice_may_pass);

    Ruleset e = Ruleset::ecg(3);
    CHECK(e.first_mover == Player::Alice);
    CHECK(e.alice_may_pass);
    CHECK(e.alice_may_add_leaf);

    Ruleset r = Ruleset::rcg(3, 3);
    CHECK(r.first_mover == Player::Bob);
    CHECK(r.bob_may_pass);
    CHECK(r.alice_min_degree == 3);
    CHECK(r.win_condition == WinCondition::AllDegreeAtLeast);
    CHECK(r.win_degree == 3);

    CHECK(std2.hash() != m.hash());
    CHECK(m.hash() != e.hash());
    CHECK(Ruleset::standard(2).hash() != Ruleset::standard(3).hash());
}

TEST_CASE("legal move generation") {
    SUBCASE("standard game lists every vertex-color pair") {
        GameState s = GameState::initial(path_graph(2), Ruleset::standard(2));
        CHECK(legal_moves(s).size() == 4);
    }
    SUBCASE("no moves once every vertex is blocked") {
        Position p = Position::uncolored(path_graph(3));
        p.color[1] = 0;
        GameState s = GameState::from_position(p, Ruleset::standard(1));
        CHECK(legal_moves(s).empty());
    }
    SUBCASE("pass is available to Bob in the modified game") {
        GameState s = GameState::initial(Forest::build(1, {}), Ruleset::mcg(2));
        auto ms = legal_moves(s);
        REQUIRE(ms.size() == 3);
        CHECK(ms.back() == Move::pass());
    }
    SUBCASE("duplicate external colors are collapsed") {
        GameState s = GameState::initial(path_graph(2), Ruleset::ecg(2));
        auto ms = legal_moves(s);
        int adds = 0;
        for (const Move& m : ms) adds += m.kind == Move::Kind::AddExternal;
        CHECK(adds == 4);

        GameState s2 = apply_move(s, Move::add_external(0, 1));
        s2.to_move = Player::Alice;  // inspect Alice's options again
        auto ms2 = legal_moves(s2);
        CHECK(std::find(ms2.begin(), ms2.end(), Move::add_external(0, 1)) == ms2.end());
        CHECK(std::find(ms2.begin(), ms2.end(), Move::add_external(0, 0)) != ms2.end());
        CHECK_THROWS_AS(static_cast<void>(apply_move(s2, Move::add_external(0, 1))),
                        IllegalMoveError);
    }
    SUBCASE("degree restriction limits Alice but not Bob") {
        GameState s = GameState::initial(star(3), Ruleset::rcg(3, 3));
        s.to_move = Player::Alice;
        for (const Move& m : legal_moves(s))
            if (m.kind == Move::Kind::ColorVertex) CHECK(m.vertex == 0);
        s.to_move = Player::Bob;
        bool bob_leaf = false;
        for (const Move& m : legal_moves(s))
            bob_leaf |= m.kind == Move::Kind::ColorVertex && m.vertex != 0;
        CHECK(bob_leaf);
    }
}

TEST_CASE("apply_move transitions") {
    GameState s = GameState::initial(path_graph(2), Ruleset::mcg(2));
    GameState s2 = apply_move(s, Move::pass());
    CHECK(s2.to_move == Player::Alice);
    CHECK(s2.position == s.position);
    CHECK(s.to_move == Player::Bob);  // input unchanged

    CHECK_THROWS_AS(static_cast<void>(apply_move(s2, Move::pass())),
                    IllegalMoveError);  // Alice has no pass right here
    GameState s3 = apply_move(s2, Move::color_vertex(0, 1));
    CHECK(s3.position.color[0] == 1);
    CHECK(s3.to_move == Player::Bob);
    CHECK_THROWS_AS(static_cast<void>(apply_move(s3, Move::color_vertex(0, 0))),
                    IllegalMoveError);
    CHECK_THROWS_AS(static_cast<void>(apply_move(s3, Move::color_vertex(1, 1))),
                    IllegalMoveError);
}

TEST_CASE("terminal detection") {
    SUBCASE("dead vertex loses for Alice") {
        Position p = Position::uncolored(path_graph(2));
        p.color[0] = 0;
        GameState s = GameState::from_position(p, Ruleset::standard(1));
        auto w = terminal(s);
        REQUIRE(w.has_value());
        CHECK(*w == Winner::Bob);
    }
    SUBCASE("fully colored forest wins for Alice") {
        Position p = Position::uncolored(path_graph(2));
        p.color[0] = 0;
        p.color[1] = 1;
        auto w = terminal(GameState::from_position(p, Ruleset::standard(2)));
        REQUIRE(w.has_value());
        CHECK(*w == Winner::Alice);
    }
    SUBCASE("degree-threshold win condition ignores low-degree vertices") {
        Position p = Position::uncolored(star(4));
        p.color[0] = 0;
        auto w = terminal(GameState::from_position(p, Ruleset::rcg(3, 3)));
        REQUIRE(w.has_value());
        CHECK(*w == Winner::Alice);
    }
}

TEST_CASE("canonical keys quotient out color permutations") {
    Position a = Position::uncolored(path_graph(4));
    a.color[0] = 0;
    a.color[2] = 1;
    Position b = Position::uncolored(path_graph(4));
    b.color[0] = 1;
    b.color[2] = 0;
    Ruleset r = Ruleset::standard(3);
    CHECK(canonical_key(GameState::from_position(a, r)) ==
          canonical_key(GameState::from_position(b, r)));

    CHECK(canonical_key(GameState::from_position(a, r, Player::Alice)) !=
          canonical_key(GameState::from_position(a, r, Player::Bob)));

    Ruleset e = Ruleset::ecg(3);
    Position c = a, d = a;
    c.external[1] = 0b001;
    d.external[1] = 0b000;
    CHECK(canonical_key(GameState::from_position(c, e)) !=
          canonical_key(GameState::from_position(d, e)));
}

TEST_CASE("winning move detection") {
    SUBCASE("killing the middle of a P3") {
        Position p = Position::uncolored(path_graph(3));
        p.color[0] = 0;
        GameState s = GameState::from_position(p, Ruleset::standard(2), Player::Bob);
        auto wm = find_winning_moves(s);
        REQUIRE(wm.size() == 1);
        CHECK(wm[0] == Move::color_vertex(2, 1));
    }
    SUBCASE("no winning first move on an uncolored forest") {
        GameState s = GameState::initial(path_graph(5), Ruleset::standard(2));
        CHECK(find_winning_moves(s).empty());
    }
    SUBCASE("two disjoint winning moves on a P5 colored in the middle") {
        Position p = Position::uncolored(path_graph(5));
        p.color[2] = 0;
        GameState s = GameState::from_position(p, Ruleset::standard(2), Player::Bob);
        auto wm = find_winning_moves(s);
        Move a = Move::color_vertex(0, 1), b = Move::color_vertex(4, 1);
        CHECK(std::find(wm.begin(), wm.end(), a) != wm.end());
        CHECK(std::find(wm.begin(), wm.end(), b) != wm.end());
        CHECK(disjoint_winning_moves(p.forest, a, b));
        CHECK(!disjoint_winning_moves(p.forest, a, Move::color_vertex(2, 1)));
    }
}
