#include <ehf/canonical.hh>
#include <ehf/detectors.hh>

#include "support/graphs.hh"
#include "support/iso_oracle.hh"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace ehf;

namespace
{
    auto permuted(const Graph & g, const std::vector<int> & p) -> Graph
    {
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back(p[u], p[v]);
        return Graph::from_edges(g.size(), edges);
    }

    auto all_canonical(int n) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        for_each_canonical_graph(n, [&] (const Graph & g) { out.push_back(g); return true; });
        return out;
    }
}

TEST_CASE("canonical form is invariant under relabelling")
{
    std::mt19937_64 rng(5);
    for (int round = 0 ; round < 400 ; ++round) {
        int n = 1 + static_cast<int>(rng() % 9);
        auto g = test::random_graph(n, rng);
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        auto h = permuted(g, p);
        auto cg = canonical_form(g), ch = canonical_form(h);
        CHECK(cg.graph == ch.graph);
        CHECK(permuted(g, cg.labelling) == cg.graph);
        CHECK(canonical_key(g) == canonical_key(h));
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs")
{
    std::mt19937_64 rng(9);
    for (int round = 0 ; round < 300 ; ++round) {
        int n = 2 + static_cast<int>(rng() % 6);
        auto g = test::random_graph(n, rng), h = test::random_graph(n, rng);
        CHECK(are_isomorphic(g, h) == oracle::isomorphic(g, h));
    }
    CHECK_FALSE(are_isomorphic(test::cycle(6), test::prism()));
    CHECK(are_isomorphic(test::petersen(), test::petersen()));
}

TEST_CASE("symmetric graphs")
{
    for (int n : { 9, 12 }) {
        CHECK(canonical_form(Graph(n)).graph == Graph(n));
        CHECK(canonical_form(test::complete(n)).graph == test::complete(n));
    }
    CHECK(same_orbit(test::petersen(), 0, 9));
    auto pendant = test::cycle(5).with_vertex(VertexSet{ 0 });
    CHECK(same_orbit(pendant, 1, 4));
    CHECK_FALSE(same_orbit(pendant, 1, 2));
    CHECK_FALSE(same_orbit(pendant, 0, 5));
}

TEST_CASE("unlabelled graph counts")
{
    std::vector<int> expected{ 1, 1, 2, 4, 11, 34, 156, 1044 };
    for (int n = 0 ; n <= 7 ; ++n) {
        auto reps = all_canonical(n);
        CHECK(static_cast<int>(reps.size()) == expected[n]);
        if (n >= 1 && n <= 6)
            CHECK(oracle::is_transversal(n, reps));
    }
    int ehf4 = 0;
    for_each_canonical_graph(4, [&] (const Graph &) { ++ehf4; return true; }, is_even_hole_free);
    CHECK(ehf4 == 10);
}

TEST_CASE("hereditary pruning keeps every member")
{
    for (int n = 1 ; n <= 6 ; ++n) {
        int pruned = 0, filtered = 0;
        for_each_canonical_graph(n, [&] (const Graph &) { ++pruned; return true; }, is_even_hole_free);
        for_each_canonical_graph(n, [&] (const Graph & g) { filtered += is_even_hole_free(g); return true; });
        CHECK(pruned == filtered);
    }
}

TEST_CASE("enumeration bounds")
{
    CHECK_THROWS_AS(for_each_canonical_graph(17, [] (const Graph &) { return true; }), GraphError);
    int seen = 0;
    for_each_canonical_graph(5, [&] (const Graph &) { return ++seen < 3; });
    CHECK(seen == 3);
}
