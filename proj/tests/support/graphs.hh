#ifndef EHF_TESTS_GRAPHS_HH
#define EHF_TESTS_GRAPHS_HH

#include <ehf/graph.hh>

#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

namespace ehf::test
{
    inline auto cycle(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0 ; i < n ; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph::from_edges(n, edges);
    }

    inline auto path(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0 ; i + 1 < n ; ++i)
            edges.emplace_back(i, i + 1);
        return Graph::from_edges(n, edges);
    }

    inline auto complete(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                edges.emplace_back(i, j);
        return Graph::from_edges(n, edges);
    }

    /// Parts {0..m-1} and {m..m+k-1}.
    inline auto complete_bipartite(int m, int k) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0 ; i < m ; ++i)
            for (int j = 0 ; j < k ; ++j)
                edges.emplace_back(i, m + j);
        return Graph::from_edges(m + k, edges);
    }

    /// Rim 0..n-1, hub n adjacent to all of it.
    inline auto wheel(int n) -> Graph
    {
        return cycle(n).with_vertex(VertexSet::range(n));
    }

    inline auto petersen() -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0 ; i < 5 ; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph::from_edges(10, edges);
    }

    /// Triangle {0,1,2} and {3,4,5} with the matching 0-3, 1-4, 2-5.
    inline auto prism() -> Graph
    {
        return Graph::from_edges(6, { { 0, 1 }, { 0, 2 }, { 1, 2 }, { 3, 4 }, { 3, 5 }, { 4, 5 }, { 0, 3 }, { 1, 4 }, { 2, 5 } });
    }

    /// Each edge present independently with probability 1/2, decided by raw generator bits.
    inline auto random_graph(int n, std::mt19937_64 & rng) -> Graph
    {
        std::vector<Edge> edges;
        std::uint64_t bits = 0;
        int left = 0;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j) {
                if (left == 0) {
                    bits = rng();
                    left = 64;
                }
                if (bits & 1)
                    edges.emplace_back(i, j);
                bits >>= 1;
                --left;
            }
        return Graph::from_edges(n, edges);
    }

    /// Labelled graph number `mask` on n vertices, bit i of mask for the i-th pair in (0,1),(0,2),..,(1,2),...
    inline auto graph_from_mask(int n, std::uint64_t mask) -> Graph
    {
        std::vector<Edge> edges;
        int bit = 0;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j, ++bit)
                if ((mask >> bit) & 1)
                    edges.emplace_back(i, j);
        return Graph::from_edges(n, edges);
    }
}

namespace doctest
{
    template <>
    struct StringMaker<ehf::VertexSet>
    {
        static auto convert(const ehf::VertexSet & s) -> String { return ehf::to_string(s).c_str(); }
    };
}

#endif
