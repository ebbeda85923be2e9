#include <doctest.h>

#include <set>

#include "gamechrom/constructions.hpp"
#include "gamechrom/enumeration.hpp"
#include "oracles.hpp"

using namespace gamechrom;

TEST_CASE("tree counts match the known sequence") {
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n)
        CHECK(trees_of_order(n).size() == (std::size_t)expected[n - 1]);
}

TEST_CASE("forest counts on tiny orders") {
    CHECK(forests_of_order(0).size() == 1);
    CHECK(forests_of_order(3).size() == 3);
    CHECK(forests_of_order(4).size() == 6);
}

TEST_CASE("tree streams cover every labeled tree exactly once") {
    for (int n = 1; n <= 8; ++n) {
        std::set<std::string> labeled;
        for (const Forest& f : oracle::labeled_trees(n)) labeled.insert(oracle::iso_key(f));
        std::set<std::string> streamed;
        for (const Forest& f : trees_of_order(n)) {
            CHECK(f.order() == n);
            CHECK(streamed.insert(oracle::iso_key(f)).second);  // no duplicates
        }
        CHECK(streamed == labeled);
    }
}

TEST_CASE("forest streams cover every labeled forest exactly once") {
    for (int n = 0; n <= 6; ++n) {
        std::set<std::string> labeled;
        for (const Forest& f : oracle::labeled_forests(n)) labeled.insert(oracle::iso_key(f));
        std::set<std::string> streamed;
        for (const Forest& f : forests_of_order(n))
            CHECK(streamed.insert(oracle::iso_key(f)).second);
        CHECK(streamed == labeled);
    }
}

TEST_CASE("canonical forms separate isomorphism classes") {
    Forest p4 = path_graph(4);
    Forest p4r = Forest::build(4, {{3, 1}, {1, 0}, {0, 2}});
    CHECK(canonical_form(p4) == canonical_form(p4r));
    CHECK(canonical_form(p4) != canonical_form(star(3)));

    // a relabeling of the 14-vertex extremal tree
    Forest tp = t_prime();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [a, b] : tp.edges()) edges.emplace_back(13 - a, 13 - b);
    CHECK(canonical_form(tp) == canonical_form(Forest::build(14, edges)));
}

TEST_CASE("canonical decode round-trips") {
    for (const Forest& f : forests_up_to(0, 7)) {
        std::string c = canonical_form(f);
        Forest g = forest_from_canonical(c);
        CHECK(g.order() == f.order());
        CHECK(canonical_form(g) == c);
    }
}

TEST_CASE("streams are ordered by canonical form") {
    for (int n = 1; n <= 7; ++n) {
        std::string prev;
        for (const Forest& f : forests_of_order(n)) {
            std::string c = canonical_form(f);
            CHECK(prev < c);
            prev = c;
        }
    }
}
