#include <ehf/graph.hh>

#include <support/graphs.hh>

#include <doctest.h>

#include <random>

using namespace ehf;
using namespace ehf::test;

TEST_CASE("vertex sets")
{
    VertexSet s{ 1, 5, 63 };
    CHECK(s.count() == 3);
    CHECK(s.first() == 1);
    CHECK(s.next(1) == 5);
    CHECK(s.next(5) == 63);
    CHECK(s.next(63) == -1);
    CHECK(s.to_vector() == std::vector<Vertex>{ 1, 5, 63 });
    CHECK((s - VertexSet{ 5 }) == VertexSet{ 1, 63 });
    CHECK(VertexSet::range(3) == VertexSet{ 0, 1, 2 });
    CHECK(VertexSet::range(0).empty());
    CHECK(to_string(VertexSet{ 2, 0 }) == "{0,2}");
}

TEST_CASE("graph construction rejects bad input")
{
    CHECK_THROWS_AS(Graph::from_edges(3, { { 0, 0 } }), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, { { 0, 3 } }), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, { { 0, 1 }, { 1, 0 } }), GraphError);
    CHECK_THROWS_AS(Graph(max_vertices + 1), GraphError);
    CHECK_THROWS_AS(Graph::from_rows({ VertexSet{ 1 }, VertexSet{} }), GraphError);
}

TEST_CASE("induced subgraphs")
{
    auto c5 = cycle(5);
    CHECK(induced(c5, c5.vertices()).graph == c5);

    auto k3 = induced(complete(4), VertexSet{ 0, 2, 3 });
    CHECK(k3.graph == complete(3));
    CHECK(k3.to_parent == std::vector<Vertex>{ 0, 2, 3 });

    auto spread = induced(path(5), VertexSet{ 0, 2, 4 });
    CHECK(spread.graph.edge_count() == 0);
    CHECK(spread.graph.size() == 3);
}

TEST_CASE("components")
{
    auto c5 = cycle(5);
    CHECK(components(c5, c5.vertices()) == std::vector<VertexSet>{ c5.vertices() });

    auto p5 = path(5);
    CHECK(components(p5, p5.vertices().without(2)) == std::vector<VertexSet>{ VertexSet{ 0, 1 }, VertexSet{ 3, 4 } });
    CHECK(components(p5, VertexSet{}).empty());
    CHECK(is_connected(p5, VertexSet{}));
    CHECK(! is_connected(p5, VertexSet{ 0, 2 }));
}

TEST_CASE("cliques")
{
    CHECK(is_clique(complete(4), VertexSet{ 0, 1, 3 }));
    CHECK(is_clique(cycle(5), VertexSet{ 1, 2 }));
    CHECK(! is_clique(cycle(5), VertexSet{ 1, 3 }));
    CHECK(is_clique(cycle(5), VertexSet{}));
    CHECK(is_clique(cycle(5), VertexSet{ 4 }));
}

TEST_CASE("adjacency between sets")
{
    CHECK(adjacency_between(complete(4), VertexSet{ 0 }, VertexSet{ 1, 2 }) == Adjacency::Complete);
    CHECK(adjacency_between(cycle(5), VertexSet{ 1 }, VertexSet{ 3 }) == Adjacency::Anticomplete);
    auto p3 = path(3);
    CHECK(adjacency_between(p3, VertexSet{ 0, 2 }, VertexSet{ 1 }) == Adjacency::Complete);
    CHECK(adjacency_between(p3, VertexSet{ 0 }, VertexSet{ 2 }) == Adjacency::Anticomplete);
    CHECK(adjacency_between(p3, VertexSet{ 0, 1 }, VertexSet{ 2 }) == Adjacency::Mixed);
    CHECK(adjacency_between(p3, VertexSet{}, VertexSet{ 2 }) == Adjacency::VacuouslyBoth);
    CHECK_THROWS_AS(adjacency_between(p3, VertexSet{ 0, 1 }, VertexSet{ 1 }), GraphError);
}

TEST_CASE("induced path enumeration")
{
    SUBCASE("adjacent ends give only the edge")
    {
        auto c5 = cycle(5);
        auto ps = induced_paths(c5, 0, 1, c5.vertices());
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].verts == std::vector<Vertex>{ 0, 1 });
    }

    SUBCASE("non-adjacent ends on C5 give both ways round")
    {
        auto c5 = cycle(5);
        auto ps = induced_paths(c5, 0, 2, c5.vertices());
        std::sort(ps.begin(), ps.end());
        REQUIRE(ps.size() == 2);
        CHECK(ps[0].verts == std::vector<Vertex>{ 0, 1, 2 });
        CHECK(ps[1].verts == std::vector<Vertex>{ 0, 4, 3, 2 });
    }

    SUBCASE("K2,3")
    {
        auto k = complete_bipartite(2, 3);
        auto ps = induced_paths(k, 0, 1, k.vertices());
        CHECK(ps.size() == 3);
        for (auto & p : ps)
            CHECK(p.length() == 2);
    }

    SUBCASE("nothing allowed")
    {
        CHECK(induced_paths(path(5), 0, 4, VertexSet{}).empty());
    }

    SUBCASE("budget is reported")
    {
        auto k = complete_bipartite(2, 3);
        int seen = 0;
        auto status = enumerate_induced_paths(k, 0, 1, k.vertices(), Budget{ 0, 2 }, [&] (const Path &) { ++seen; return true; });
        CHECK(status == SearchStatus::BudgetHit);
        CHECK(seen == 2);
        CHECK(enumerate_induced_paths(k, 0, 1, k.vertices(), Budget::unlimited(), [] (const Path &) { return true; })
                == SearchStatus::Exhausted);
    }

    CHECK_THROWS_AS(induced_paths(path(3), 1, 1, VertexSet{}), GraphError);
}

TEST_CASE("holes and paths")
{
    auto c5 = cycle(5);
    CHECK(is_hole(c5, { 0, 1, 2, 3, 4 }));
    CHECK(! is_hole(c5, { 0, 1, 2 }));
    CHECK(! is_hole(c5.with_edge_toggled(0, 2), { 0, 1, 2, 3, 4 }));
    CHECK(is_induced_path(c5, Path{ { 0, 1, 2 } }));
    CHECK(! is_induced_path(c5, Path{ { 0, 1, 2, 3, 4 } }));
    CHECK(is_path(c5, Path{ { 0, 1, 2, 3, 4 } }));
}

TEST_CASE("trees")
{
    Tree t(5, { { 0, 1 }, { 1, 2 }, { 1, 3 }, { 3, 4 } });
    CHECK(t.leaves() == std::vector<int>{ 0, 2, 4 });
    CHECK(t.path_between(0, 4) == std::vector<int>{ 0, 1, 3, 4 });
    CHECK(t.two_colouring() == std::vector<int>{ 0, 1, 0, 0, 1 });
    CHECK(t.edge_between(3, 1) == 2);
    CHECK(t.edge_between(0, 4) == -1);
    CHECK_THROWS_AS(Tree(3, { { 0, 1 } }), GraphError);
    CHECK_THROWS_AS(Tree(3, { { 0, 1 }, { 1, 0 } }), GraphError);
}

TEST_CASE("properties on random graphs")
{
    std::mt19937_64 rng(20261016);
    for (int round = 0 ; round < 300 ; ++round) {
        int n = 1 + int(rng() % 12);
        auto g = random_graph(n, rng);
        auto pick = [&] { return VertexSet::from_word(rng()) & g.vertices(); };
        auto a = pick(), b = pick() - a;

        CHECK(adjacency_between(g, a, b) == adjacency_between(g, b, a));

        auto s = pick();
        auto comps = components(g, s);
        VertexSet all;
        for (std::size_t i = 0 ; i < comps.size() ; ++i) {
            CHECK(is_connected(g, comps[i]));
            all |= comps[i];
            for (std::size_t j = i + 1 ; j < comps.size() ; ++j)
                CHECK(is_anticomplete_to(g, comps[i], comps[j]));
        }
        CHECK(all == s);

        auto sub = induced(g, s).graph;
        CHECK(induced(sub, sub.vertices()).graph == sub);

        if (n >= 2) {
            Vertex u = int(rng() % n), v = int(rng() % n);
            if (u != v)
                for (auto & p : induced_paths(g, u, v, pick()))
                    CHECK(is_induced_path(g, p));
        }
    }
}
