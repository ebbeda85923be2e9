#include <doctest.h>

#include <random>

#include "gamechrom/constructions.hpp"
#include "gamechrom/enumeration.hpp"
#include "gamechrom/structure.hpp"

using namespace gamechrom;

namespace {

// Deterministic proper partial colorings of a forest for property tests.
std::vector<Position> sample_positions(const Forest& f, int palette, int samples,
                                       unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Position> out;
    out.push_back(Position::uncolored(f));
    for (int s = 0; s < samples; ++s) {
        Position p = Position::uncolored(f);
        for (Vertex v = 0; v < f.order(); ++v) {
            if (rng() % 3 == 0) continue;
            Color c = static_cast<Color>(rng() % palette);
            if (p.legal(v, c)) p.color[v] = c;
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

TEST_CASE("trunks of simple positions") {
    SUBCASE("uncolored forest: trunks are the components") {
        Forest f = Forest::build(5, {{0, 1}, {3, 4}});
        auto ts = trunks(Position::uncolored(f));
        REQUIRE(ts.size() == 3);
        CHECK(ts[0].vertices == std::vector<Vertex>{0, 1});
        CHECK(ts[1].vertices == std::vector<Vertex>{2});
        CHECK(ts[2].vertices == std::vector<Vertex>{3, 4});
    }
    SUBCASE("colored middle of a P3 appears in both trunks") {
        Position p = Position::uncolored(Forest::build(3, {{0, 1}, {1, 2}}));
        p.color[1] = 0;
        auto ts = trunks(p);
        REQUIRE(ts.size() == 2);
        CHECK(ts[0].vertices == std::vector<Vertex>{0, 1});
        CHECK(ts[1].vertices == std::vector<Vertex>{1, 2});
    }
    SUBCASE("two adjacent colored vertices form their own trunk") {
        Position p = Position::uncolored(Forest::build(2, {{0, 1}}));
        p.color[0] = 0;
        p.color[1] = 1;
        auto ts = trunks(p);
        REQUIRE(ts.size() == 1);
        CHECK(ts[0].vertices == std::vector<Vertex>{0, 1});
        CHECK(ts[0].edges.size() == 1);
    }
}

TEST_CASE("trunk membership counts over sampled positions") {
    for (const Forest& f : forests_up_to(1, 10)) {
        for (const Position& p : sample_positions(f, 3, 2, 7)) {
            auto ts = trunks(p);
            std::vector<int> count(f.order(), 0);
            for (const Trunk& t : ts)
                for (Vertex v : t.vertices) ++count[v];
            for (Vertex v = 0; v < f.order(); ++v) {
                if (!p.colored(v))
                    CHECK(count[v] == 1);
                else
                    CHECK(count[v] == f.degree(v));
            }
        }
    }
}

TEST_CASE("reduced graph of simple positions") {
    CHECK(reduced_graph(Position::uncolored(path_graph(5))).edges.empty());
    CHECK(reduced_graph(Position::uncolored(star(4))).edges.size() == 4);

    Position tp = Position::uncolored(t_prime());
    ReducedGraph r = reduced_graph(tp);
    CHECK(r.edges.size() == tp.forest.edge_count());
    auto ts = r.trunks();
    REQUIRE(ts.size() == 1);
    CHECK(r.e_gg2(ts[0]) ==
          std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("reduced graph invariants over sampled positions") {
    for (const Forest& f : forests_up_to(1, 10)) {
        for (const Position& p : sample_positions(f, 3, 2, 11)) {
            ReducedGraph r = reduced_graph(p);
            auto deg = r.degrees();
            for (auto [u, v] : r.edges) {
                CHECK(f.has_edge(u, v));
                CHECK(!(p.colored(u) && p.colored(v)));
                CHECK((deg[u] > 2 || deg[v] > 2));
            }
        }
    }
}

TEST_CASE("covering vertex search") {
    SUBCASE("no strong edges means trivially covered") {
        ReducedGraph r = reduced_graph(Position::uncolored(star(4)));
        auto ts = r.trunks();
        REQUIRE(ts.size() == 1);
        CHECK(covering_vertex(r, ts[0]).kind == CoverResult::Kind::TriviallyCovered);
    }
    SUBCASE("double star has a covering center") {
        // two adjacent centers of degree 4, leaves elsewhere
        Forest f = Forest::build(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}, {0, 7}});
        ReducedGraph r = reduced_graph(Position::uncolored(f));
        auto ts = r.trunks();
        REQUIRE(ts.size() == 1);
        auto res = covering_vertex(r, ts[0]);
        CHECK(res.kind == CoverResult::Kind::Covered);
        CHECK((*res.vertex == 0 || *res.vertex == 1));
    }
    SUBCASE("two disjoint strong edges have no cover") {
        ReducedGraph r = reduced_graph(Position::uncolored(t_prime()));
        auto ts = r.trunks();
        REQUIRE(ts.size() == 1);
        CHECK(covering_vertex(r, ts[0]).kind == CoverResult::Kind::None);
    }
}

TEST_CASE("splitter choice on named trees") {
    CHECK(find_splitter(path_graph(13)) == 6);
    CHECK(find_splitter(star(12)) == 0);
    CHECK(find_splitter(path_graph(7)) == 3);
}

TEST_CASE("splitter bound on all trees of 7 to 13 vertices") {
    for (const Forest& f : trees_up_to(7, 13)) {
        Vertex v = find_splitter(f);
        std::vector<std::pair<Vertex, Vertex>> kept;
        for (auto [a, b] : f.edges())
            if (a != v && b != v) kept.emplace_back(a, b);
        Forest cut = Forest::build(f.order(), kept);
        std::size_t largest = 0;
        for (const auto& comp : components(cut))
            if (!(comp.size() == 1 && comp[0] == v)) largest = std::max(largest, comp.size());
        CHECK(largest <= 6);
    }
}

TEST_CASE("small trees have few high-degree vertices") {
    for (const Forest& f : trees_up_to(1, 7)) {
        int over2 = 0, over3 = 0;
        for (Vertex v = 0; v < f.order(); ++v) {
            over2 += f.degree(v) > 2;
            over3 += f.degree(v) > 3;
        }
        CHECK(over2 <= 2);
        CHECK(over3 <= 1);
    }
}

TEST_CASE("dangerous vertex detection") {
    CHECK(dangerous_vertices(Position::uncolored(star(3)), 3) == std::vector<Vertex>{0});
    CHECK(dangerous_vertices(Position::uncolored(path_graph(5)), 3).empty());

    Position p = Position::uncolored(star(3));
    p.color[1] = 0;
    // center: two uncolored neighbors, two legal colors left
    CHECK(dangerous_vertices(p, 3) == std::vector<Vertex>{0});
}
