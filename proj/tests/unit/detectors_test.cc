#include <ehf/detectors.hh>

#include <support/graphs.hh>
#include <support/oracles.hh>

#include <doctest.h>

#include <random>

using namespace ehf;
using namespace ehf::test;

namespace
{
    // triangle 0,1,2 = b1,b2,b3; apex 3 adjacent to b3; 3-4-0 and 3-5-1
    auto short_pyramid() -> Graph
    {
        return Graph::from_edges(6, { { 0, 1 }, { 0, 2 }, { 1, 2 }, { 3, 2 }, { 3, 4 }, { 4, 0 }, { 3, 5 }, { 5, 1 } });
    }

    // theta with ends 0,1 and paths of lengths 2, 2, 3
    auto theta_223() -> Graph
    {
        return Graph::from_edges(7, { { 0, 2 }, { 2, 1 }, { 0, 3 }, { 3, 1 }, { 0, 4 }, { 4, 5 }, { 5, 1 } });
    }

    // triangles {6,0,1} and {6,2,3}; paths 0-4-2 and 1-5-3
    auto degenerate_near_prism() -> Graph
    {
        return Graph::from_edges(7, { { 6, 0 }, { 6, 1 }, { 0, 1 }, { 6, 2 }, { 6, 3 }, { 2, 3 }, { 0, 4 }, { 4, 2 }, { 1, 5 }, { 5, 3 } });
    }

    // prism with the first two matching edges subdivided by 6 and 7, plus the edge 6-7
    auto subdivided_prism_with_cross_edge() -> Graph
    {
        return Graph::from_edges(8, { { 0, 1 }, { 0, 2 }, { 1, 2 }, { 3, 4 }, { 3, 5 }, { 4, 5 },
                { 0, 6 }, { 6, 3 }, { 1, 7 }, { 7, 4 }, { 2, 5 }, { 6, 7 } });
    }
}

TEST_CASE("even holes")
{
    auto c4 = find_even_hole(cycle(4));
    REQUIRE(c4.hole);
    CHECK(c4.hole->cycle == std::vector<Vertex>{ 0, 1, 2, 3 });
    CHECK(c4.hole->even);

    auto c5 = find_even_hole(cycle(5));
    CHECK(! c5.hole);
    CHECK(c5.certified_absent());

    auto c6 = find_even_hole(cycle(6));
    REQUIRE(c6.hole);
    CHECK(c6.hole->cycle.size() == 6);

    CHECK(is_even_hole_free(complete(5)));
    CHECK(is_even_hole_free(petersen()) == ! oracle::has_even_hole(petersen()));
    CHECK(! is_even_hole_free(petersen()));

    auto tiny = find_even_hole(cycle(8), Budget::nodes(2));
    CHECK(tiny.status == SearchStatus::BudgetHit);
    CHECK(! tiny.certified_absent());
}

TEST_CASE("shortest hole wins, ties broken lexicographically")
{
    // C6 with the chord 0-3 has two 4-holes: 0,1,2,3 and 0,3,4,5 (written 0,3,4,5 canonically)
    auto g = cycle(6).with_edge_toggled(0, 3);
    auto r = find_even_hole(g);
    REQUIRE(r.hole);
    CHECK(r.hole->cycle == std::vector<Vertex>{ 0, 1, 2, 3 });
    CHECK(find_hole(cycle(7), HoleParity::Odd).hole->cycle.size() == 7);
    CHECK(! find_hole(cycle(6), HoleParity::Odd).hole);
}

TEST_CASE("every hole is visited once")
{
    int count = 0;
    for_each_hole(complete_bipartite(3, 3), 4, 0, Budget::unlimited(), [&] (const std::vector<Vertex> & c) {
        CHECK(c.size() == 4);
        ++count;
        return true;
    });
    CHECK(count == 9);
}

TEST_CASE("theta")
{
    auto k23 = find_theta(complete_bipartite(2, 3));
    REQUIRE(k23);
    CHECK(k23->s == 0);
    CHECK(k23->t == 1);
    CHECK(verify_certificate(complete_bipartite(2, 3), *k23));

    CHECK(! find_theta(cycle(6)));

    auto t = find_theta(theta_223());
    REQUIRE(t);
    CHECK(verify_certificate(theta_223(), *t));
    CHECK(! verify_certificate(cycle(6), *k23));
}

TEST_CASE("pyramid")
{
    auto g = short_pyramid();
    auto p = find_pyramid(g);
    REQUIRE(p);
    CHECK(p->apex == 3);
    CHECK(p->is_short());
    CHECK(verify_certificate(g, *p));
    CHECK(find_pyramid(g, 3, true));

    CHECK(! find_pyramid(cycle(5)));

    CHECK(! find_pyramid(g, 0));
    CHECK(! oracle::has_pyramid(g, 0));
}

TEST_CASE("near-prism")
{
    auto p = find_near_prism(prism());
    REQUIRE(p);
    CHECK(p->is_prism());
    CHECK(verify_certificate(prism(), *p));

    CHECK(! find_near_prism(complete(4)));

    auto d = find_near_prism(degenerate_near_prism());
    REQUIRE(d);
    CHECK(! d->is_prism());
    CHECK(d->triangle_a[2] == 6);
    CHECK(d->paths[2].verts == std::vector<Vertex>{ 6 });
    CHECK(verify_certificate(degenerate_near_prism(), *d));
}

TEST_CASE("wheels")
{
    auto w5 = find_wheel(wheel(5));
    REQUIRE(w5);
    CHECK(w5->centre == 5);
    CHECK(w5->spokes.count() == 5);
    CHECK(verify_certificate(wheel(5), *w5));
    CHECK(! find_wheel(wheel(5), true));

    auto g = cycle(6).with_vertex(VertexSet{ 0, 1, 3, 4 });
    auto w = find_wheel(g, true);
    REQUIRE(w);
    CHECK(w->spokes.count() == 4);
    CHECK(verify_certificate(g, *w));

    CHECK(! find_wheel(cycle(5).with_vertex(VertexSet{ 1, 2, 3 })));
}

TEST_CASE("extended near-prism")
{
    // the left-hand drawing with every dashed path of length two
    // a1=0 a2=1 a3=2 b1=3 b2=4 b3=5 d1=6 d2=7
    auto fig = Graph::from_edges(13, { { 0, 1 }, { 0, 2 }, { 1, 2 }, { 3, 4 }, { 3, 5 }, { 4, 5 }, { 6, 7 },
            { 0, 8 }, { 8, 6 }, { 6, 9 }, { 9, 3 }, { 1, 10 }, { 10, 7 }, { 7, 11 }, { 11, 4 }, { 2, 12 }, { 12, 5 } });
    auto e = find_extended_near_prism(fig);
    REQUIRE(e);
    CHECK(verify_certificate(fig, *e));

    CHECK(! find_extended_near_prism(prism()));

    auto g = subdivided_prism_with_cross_edge();
    auto x = find_extended_near_prism(g, Edge{ 6, 7 });
    REQUIRE(x);
    CHECK(x->cross_a == 6);
    CHECK(x->cross_b == 7);
    CHECK(verify_certificate(g, *x));
    auto y = find_extended_near_prism(g, Edge{ 7, 6 });
    REQUIRE(y);
    CHECK(y->cross_a == 7);

    CHECK_THROWS_AS(find_extended_near_prism(g, Edge{ 6, 5 }), GraphError);
    CHECK(! find_extended_near_prism(g, Edge{ 0, 1 }));

    auto at = find_extended_near_prism_at(g, 7);
    REQUIRE(at);
    CHECK(at->cross_a == 7);
    CHECK(verify_certificate(g, *at));
}

TEST_CASE("verification catches broken certificates")
{
    HoleCertificate chorded{ { 0, 1, 2, 3, 4 }, false };
    CHECK(verify_certificate(cycle(5), chorded));
    CHECK(! verify_certificate(cycle(5).with_edge_toggled(0, 2), chorded));
    CHECK(! verify_certificate(cycle(5), HoleCertificate{ { 0, 1, 2, 3, 4 }, true }));
    CHECK(! verify_certificate(cycle(5), HoleCertificate{ { 0, 1, 2, 3, 9 }, false }));
}

TEST_CASE("detectors agree with brute force on every graph up to five vertices")
{
    for (int n = 1 ; n <= 5 ; ++n)
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << (n * (n - 1) / 2)) ; ++mask) {
            auto g = graph_from_mask(n, mask);
            CHECK(find_even_hole(g).hole.has_value() == oracle::has_even_hole(g));
            CHECK(find_theta(g).has_value() == oracle::has_theta(g));
            CHECK(find_wheel(g, false).has_value() == oracle::has_wheel(g, false));
        }
}

TEST_CASE("detectors agree with brute force on random graphs")
{
    std::mt19937_64 rng(7);
    for (int round = 0 ; round < 400 ; ++round) {
        int n = 6 + int(rng() % 3);
        auto g = random_graph(n, rng);
        auto check = [&] (const auto & found, bool expected) {
            CHECK(found.has_value() == expected);
            if (found)
                CHECK(verify_certificate(g, *found));
        };
        check(find_even_hole(g).hole, oracle::has_even_hole(g));
        check(find_theta(g), oracle::has_theta(g));
        check(find_pyramid(g), oracle::has_pyramid(g));
        check(find_pyramid(g, 0, true), oracle::has_pyramid(g, 0, true));
        check(find_near_prism(g), oracle::has_near_prism(g));
        check(find_wheel(g, false), oracle::has_wheel(g, false));
        check(find_wheel(g, true), oracle::has_wheel(g, true));
        check(find_extended_near_prism(g), oracle::has_extended_near_prism(g));
        check(find_extended_near_prism_at(g, 1), oracle::has_extended_near_prism(g, -1, -1, 1));
    }
}

TEST_CASE("single-edge mutations inside a certificate are caught")
{
    std::mt19937_64 rng(11);
    int probes = 0;
    for (int round = 0 ; round < 300 ; ++round) {
        auto g = random_graph(7, rng);
        std::vector<Certificate> certs;
        if (auto c = find_theta(g)) certs.push_back(*c);
        if (auto c = find_pyramid(g)) certs.push_back(*c);
        if (auto c = find_near_prism(g)) certs.push_back(*c);
        if (auto c = find_wheel(g)) certs.push_back(*c);
        if (auto c = find_even_hole(g).hole) certs.push_back(*c);
        for (auto & c : certs) {
            auto span = certificate_span(c).to_vector();
            for (std::size_t i = 0 ; i < span.size() ; ++i)
                for (std::size_t j = i + 1 ; j < span.size() ; ++j) {
                    ++probes;
                    CHECK(! verify_certificate(g.with_edge_toggled(span[i], span[j]), c));
                }
        }
    }
    CHECK(probes > 1000);
}

TEST_CASE("extended near-prism detection agrees with brute force near a known instance")
{
    std::mt19937_64 rng(23);
    int present = 0;
    for (int round = 0 ; round < 200 ; ++round) {
        auto g = subdivided_prism_with_cross_edge();
        if (round % 2)
            g = g.with_vertex(VertexSet::from_word(rng()) & g.vertices());
        int toggles = int(rng() % 3);
        for (int t = 0 ; t < toggles ; ++t) {
            Vertex u = int(rng() % g.size()), v = int(rng() % g.size());
            if (u != v)
                g = g.with_edge_toggled(u, v);
        }
        auto any = find_extended_near_prism(g);
        CHECK(any.has_value() == oracle::has_extended_near_prism(g));
        if (any) {
            ++present;
            CHECK(verify_certificate(g, *any));
        }
        auto at = find_extended_near_prism_at(g, 6);
        CHECK(at.has_value() == oracle::has_extended_near_prism(g, -1, -1, 6));
        if (at) {
            CHECK(at->cross_a == 6);
            CHECK(verify_certificate(g, *at));
        }
        if (g.adjacent(6, 7)) {
            auto fixed = find_extended_near_prism(g, Edge{ 6, 7 });
            CHECK(fixed.has_value() == oracle::has_extended_near_prism(g, 6, 7, -1));
            if (fixed)
                CHECK(verify_certificate(g, *fixed));
        }
    }
    CHECK(present > 20);
}
