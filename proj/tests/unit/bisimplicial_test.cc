#include <ehf/bisimplicial.hh>
#include <ehf/detectors.hh>

#include <support/graphs.hh>
#include <support/oracles.hh>

#include <doctest.h>

#include <random>

using namespace ehf;
using namespace ehf::test;

TEST_CASE("bisimplicial vertices of small graphs")
{
    for (Vertex v = 0 ; v < 5 ; ++v)
        CHECK(is_bisimplicial(cycle(5), v));
    CHECK(! is_bisimplicial(wheel(5), 5));
    for (Vertex v = 0 ; v < 6 ; ++v)
        CHECK(is_bisimplicial(complete(6), v));

    CHECK(bisimplicial_vertices(cycle(5)) == VertexSet::range(5));
    CHECK(bisimplicial_vertices(wheel(5)) == VertexSet::range(5));
    for (Vertex v = 0 ; v < 6 ; ++v)
        CHECK(is_bisimplicial(wheel(5), v) == oracle::is_bisimplicial(wheel(5), v));
    CHECK(bisimplicial_vertices(Graph(0)).empty());
    CHECK_THROWS_AS(is_bisimplicial(cycle(5), 5), GraphError);
}

TEST_CASE("main theorem checker")
{
    auto c5 = cycle(5);
    auto whole = check_main_theorem(c5, VertexSet{});
    CHECK(whole.holds());
    CHECK(whole.set_m == c5.vertices());
    CHECK(whole.witness == 0);

    auto edge = check_main_theorem(c5, VertexSet{ 0, 1 });
    CHECK(edge.holds());
    CHECK(edge.set_m == VertexSet{ 3 });
    CHECK(edge.witness == 3);

    CHECK(check_main_theorem(cycle(4), VertexSet{}).outcome == Outcome::Inapplicable);
    CHECK(check_main_theorem(c5, VertexSet{ 0, 2 }).outcome == Outcome::Inapplicable);
    CHECK(check_main_theorem(complete(3), VertexSet{ 0 }).outcome == Outcome::Inapplicable);
    CHECK(check_main_theorem(complete(4), VertexSet{ 0, 1, 2 }).outcome == Outcome::Inapplicable);
}

TEST_CASE("agreement with the two-clique oracle")
{
    std::mt19937_64 rng(99);
    for (int round = 0 ; round < 2000 ; ++round) {
        int n = 1 + int(rng() % 8);
        auto g = random_graph(n, rng);
        Vertex v = int(rng() % n);
        CHECK(is_bisimplicial(g, v) == oracle::is_bisimplicial(g, v));
        if (is_clique(g, g.neighbours(v)))
            CHECK(is_bisimplicial(g, v));
    }
}

TEST_CASE("empty K reduces to the existence of a bisimplicial vertex")
{
    std::mt19937_64 rng(5);
    for (int round = 0 ; round < 500 ; ++round) {
        auto g = random_graph(1 + int(rng() % 7), rng);
        if (! is_even_hole_free(g))
            continue;
        CHECK(check_main_theorem(g, VertexSet{}).holds() == bisimplicial_vertices(g).any());
    }
}
