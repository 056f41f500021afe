#include <ehf/cutsets.hh>

#include <support/graphs.hh>

#include <doctest.h>

#include <random>

using namespace ehf;
using namespace ehf::test;

TEST_CASE("cutsets")
{
    auto p5 = path(5);
    auto split = is_cutset(p5, VertexSet{ 2 });
    REQUIRE(split);
    CHECK(split->first == VertexSet{ 0, 1 });
    CHECK(split->second == VertexSet{ 3, 4 });
    for (Vertex v = 0 ; v < 5 ; ++v)
        CHECK(! is_cutset(cycle(5), VertexSet{ v }));
    CHECK(! is_cutset(p5, p5.vertices()));

    auto three = is_cutset(Graph(3), VertexSet{});
    REQUIRE(three);
    CHECK(three->first == VertexSet{ 0 });
    CHECK(three->second == VertexSet{ 1, 2 });
}

TEST_CASE("full star cutsets")
{
    auto w = find_full_star_cutset(path(5));
    REQUIRE(w);
    CHECK(w->centre == 2);
    CHECK(validate_star_cutset(path(5), *w));
    CHECK(! find_full_star_cutset(cycle(5)));
    CHECK(! find_full_star_cutset(cycle(6)));
}

TEST_CASE("star cutsets")
{
    auto p4 = path(4);
    auto w = find_star_cutset(p4, 1);
    REQUIRE(w);
    CHECK(w->cutset == VertexSet{ 1 });
    CHECK(w->sides.first == VertexSet{ 0 });
    CHECK(w->sides.second == VertexSet{ 2, 3 });

    CHECK(! find_star_cutset(complete(4)));

    auto hub = find_star_cutset(wheel(5), 5);
    auto hub_oracle = find_star_cutset_exhaustive(wheel(5), 5);
    REQUIRE(hub_oracle);
    REQUIRE(hub);
    CHECK(validate_star_cutset(wheel(5), *hub));
    CHECK(hub_oracle->cutset == VertexSet{ 0, 2, 5 });

    CHECK_THROWS_AS(find_star_cutset_exhaustive(complete(6), 0, 3), DegreeBoundError);
}

TEST_CASE("component criterion agrees with subset search")
{
    std::mt19937_64 rng(3);
    for (int round = 0 ; round < 3000 ; ++round) {
        int n = 1 + int(rng() % 7);
        auto g = random_graph(n, rng);
        Vertex v = int(rng() % n);
        auto fast = find_star_cutset(g, v);
        auto slow = find_star_cutset_exhaustive(g, v);
        CHECK(fast.has_value() == slow.has_value());
        if (fast)
            CHECK(validate_star_cutset(g, *fast));

        bool none = ! find_full_star_cutset(g);
        bool every = true;
        for (Vertex u = 0 ; u < n ; ++u)
            every = every && ! is_cutset(g, g.closed_neighbours(u));
        CHECK(none == every);

        auto s = is_splendid(g, v);
        CHECK(s.ok == ! s.failed_clause.has_value());
        if (s.ok)
            CHECK(! is_cutset(g, g.closed_neighbours(v)));
    }
}

TEST_CASE("splendid vertices")
{
    for (Vertex v = 0 ; v < 5 ; ++v)
        CHECK(is_splendid(cycle(5), v).ok);

    auto k4 = is_splendid(complete(4), 0);
    CHECK(! k4.ok);
    CHECK(k4.failed_clause == SplendidClause::NotConnectedOutside);
    CHECK(k4.outside_empty);

    auto pyr = Graph::from_edges(6, { { 0, 1 }, { 0, 2 }, { 1, 2 }, { 3, 2 }, { 3, 4 }, { 4, 0 }, { 3, 5 }, { 5, 1 } });
    auto s = is_splendid(pyr, 3);
    CHECK(s.failed_clause == SplendidClause::ShortPyramidApex);
    REQUIRE(s.witness);
    CHECK(std::holds_alternative<PyramidCertificate>(*s.witness));

    // pendant vertex 5 hanging off the C5 vertex 0 is trapped for 0's clause
    auto g = cycle(5).with_vertex(VertexSet{ 0 });
    auto t = is_splendid(g, 0);
    CHECK(t.failed_clause == SplendidClause::NeighbourTrapped);
    CHECK(std::get<Vertex>(*t.witness) == 5);

    auto split = is_splendid(path(5), 2);
    CHECK(split.failed_clause == SplendidClause::NotConnectedOutside);
    CHECK(! split.outside_empty);
}

TEST_CASE("hole neighbourhood trichotomy")
{
    CHECK(check_hole_neighbourhood_trichotomy(wheel(5), { 0, 1, 2, 3, 4 }, 5) == Outcome::Holds);
    auto c6 = cycle(6).with_vertex(VertexSet{});
    CHECK(check_hole_neighbourhood_trichotomy(c6, { 0, 1, 2, 3, 4, 5 }, 6) == Outcome::Holds);

    // a = 6 sees 0 and 3 on a C6; x = 7 keeps the rest of the hole connected
    auto two = cycle(6).with_vertex(VertexSet{ 0, 3 }).with_vertex(VertexSet{ 1, 2, 4, 5 });
    CHECK(check_hole_neighbourhood_trichotomy(two, { 0, 1, 2, 3, 4, 5 }, 6) == Outcome::Violated);

    // without x, N[a] separates {1,2} from {4,5}
    auto cut = cycle(6).with_vertex(VertexSet{ 0, 3 });
    CHECK(check_hole_neighbourhood_trichotomy(cut, { 0, 1, 2, 3, 4, 5 }, 6) == Outcome::Inapplicable);

    auto three = cycle(5).with_vertex(VertexSet{ 0, 1, 3 }).with_vertex(VertexSet{ 2, 4 });
    CHECK(check_hole_neighbourhood_trichotomy(three, { 0, 1, 2, 3, 4 }, 5) == Outcome::Holds);

    CHECK_THROWS_AS(check_hole_neighbourhood_trichotomy(wheel(5), { 0, 1, 2 }, 5), GraphError);
    CHECK_THROWS_AS(check_hole_neighbourhood_trichotomy(wheel(5), { 0, 1, 2, 3, 4 }, 0), GraphError);
}
