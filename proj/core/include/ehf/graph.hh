#ifndef EHF_GRAPH_HH
#define EHF_GRAPH_HH

#include <ehf/vertex_set.hh>

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ehf
{
    class GraphError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    using Edge = std::pair<Vertex, Vertex>;

    /**
     * Immutable simple undirected graph on vertices 0..n-1, stored as one
     * bit row per vertex.
     */
    class Graph
    {
        private:
            int _n = 0;
            std::vector<VertexSet> _adj;

            Graph(int n, std::vector<VertexSet> adj);

        public:
            Graph() = default;

            /// Edgeless graph on n vertices.
            explicit Graph(int n);

            /// Throws GraphError on self-loops, out-of-range ends or duplicate edges.
            static auto from_edges(int n, const std::vector<Edge> & edges) -> Graph;

            /// Rows must be symmetric and loop-free; throws GraphError otherwise.
            static auto from_rows(std::vector<VertexSet> rows) -> Graph;

            auto size() const -> int { return _n; }
            auto vertices() const -> VertexSet { return VertexSet::range(_n); }

            auto adjacent(Vertex u, Vertex v) const -> bool { return _adj[u].test(v); }
            auto neighbours(Vertex v) const -> const VertexSet & { return _adj[v]; }
            auto closed_neighbours(Vertex v) const -> VertexSet { return _adj[v].with(v); }
            auto degree(Vertex v) const -> int { return _adj[v].count(); }

            /// N(S): vertices outside S with a neighbour in S.
            auto neighbours(const VertexSet & s) const -> VertexSet;

            /// N[S] = N(S) ∪ S.
            auto closed_neighbours(const VertexSet & s) const -> VertexSet;

            auto edge_count() const -> int;
            auto edges() const -> std::vector<Edge>;

            /// Returns a new graph with the edge uv toggled.
            auto with_edge_toggled(Vertex u, Vertex v) const -> Graph;

            /// Returns a new graph with one extra vertex adjacent to exactly `nbrs`.
            auto with_vertex(const VertexSet & nbrs) const -> Graph;

            friend auto operator==(const Graph &, const Graph &) -> bool = default;
    };

    struct InducedSubgraph
    {
        Graph graph;
        std::vector<Vertex> to_parent;
    };

    /// G[S], with vertex i of the result mapped to the i-th smallest member of S.
    auto induced(const Graph & g, const VertexSet & s) -> InducedSubgraph;

    /// Partition of S into the vertex sets of the components of G[S], ordered by least member.
    auto components(const Graph & g, const VertexSet & s) -> std::vector<VertexSet>;

    /// The empty set counts as connected.
    auto is_connected(const Graph & g, const VertexSet & s) -> bool;

    /// The component of G[S] containing v (v must be in S).
    auto component_of(const Graph & g, const VertexSet & s, Vertex v) -> VertexSet;

    auto is_clique(const Graph & g, const VertexSet & s) -> bool;

    /// True when no two members of S are adjacent.
    auto is_stable(const Graph & g, const VertexSet & s) -> bool;

    enum class Adjacency
    {
        Complete,
        Anticomplete,
        Mixed,
        VacuouslyBoth
    };

    auto to_string(Adjacency) -> std::string;

    /// Throws GraphError if A and B overlap.
    auto adjacency_between(const Graph & g, const VertexSet & a, const VertexSet & b) -> Adjacency;

    auto is_complete_to(const Graph & g, const VertexSet & a, const VertexSet & b) -> bool;
    auto is_anticomplete_to(const Graph & g, const VertexSet & a, const VertexSet & b) -> bool;

    /// An ordered vertex sequence. Whether it is a path or an induced path of a
    /// particular graph is checked by the functions below, not stored.
    struct Path
    {
        std::vector<Vertex> verts;

        auto length() const -> int { return static_cast<int>(verts.size()) - 1; }
        auto front() const -> Vertex { return verts.front(); }
        auto back() const -> Vertex { return verts.back(); }
        auto vertex_set() const -> VertexSet { return VertexSet::from(verts); }

        /// Vertices other than the two ends.
        auto interior() const -> VertexSet;

        friend auto operator==(const Path &, const Path &) -> bool = default;
        friend auto operator<(const Path & a, const Path & b) -> bool { return a.verts < b.verts; }
    };

    /// Distinct vertices, consecutive ones adjacent.
    auto is_path(const Graph & g, const Path & p) -> bool;

    /// A path with no edges between non-consecutive vertices.
    auto is_induced_path(const Graph & g, const Path & p) -> bool;

    /// The sequence, closed up, is an induced cycle of length at least four.
    auto is_hole(const Graph & g, const std::vector<Vertex> & cycle) -> bool;

    /// Search limits. A limit of zero means unlimited.
    struct Budget
    {
        std::uint64_t max_nodes = 0;
        std::uint64_t max_results = 0;

        static auto unlimited() -> Budget { return {}; }
        static auto nodes(std::uint64_t n) -> Budget { return { n, 0 }; }
    };

    enum class SearchStatus
    {
        Exhausted,
        Stopped,
        BudgetHit
    };

    auto to_string(SearchStatus) -> std::string;

    /// Visitor returns false to stop the enumeration early.
    using PathVisitor = std::function<bool (const Path &)>;

    /**
     * Every induced path of G from u to v whose interior lies in `allowed`, each
     * exactly once. Search is a DFS that refuses any vertex adjacent to an
     * earlier non-predecessor vertex of the current path.
     */
    auto enumerate_induced_paths(const Graph & g, Vertex u, Vertex v, const VertexSet & allowed,
            const Budget & budget, const PathVisitor & visit) -> SearchStatus;

    /// Convenience: collect everything (subject to the budget).
    auto induced_paths(const Graph & g, Vertex u, Vertex v, const VertexSet & allowed,
            const Budget & budget = Budget::unlimited()) -> std::vector<Path>;

    /// Shortest path from u to some vertex of `targets`, moving through `allowed`
    /// (u itself need not be in allowed). Shortest paths are induced.
    auto shortest_path_to(const Graph & g, Vertex u, const VertexSet & targets, const VertexSet & allowed)
        -> std::vector<Vertex>;

    /**
     * An abstract tree. Vertex ids are 0..size()-1 and are not vertices of any
     * graph; edges are indexed in insertion order.
     */
    class Tree
    {
        private:
            int _n = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<int>> _incident;

        public:
            Tree() = default;

            /// Throws GraphError unless the edges form a tree on n vertices.
            Tree(int n, std::vector<Edge> edges);

            auto size() const -> int { return _n; }
            auto edge_count() const -> int { return static_cast<int>(_edges.size()); }
            auto edges() const -> const std::vector<Edge> & { return _edges; }
            auto edge(int e) const -> const Edge & { return _edges[e]; }
            auto degree(int v) const -> int { return static_cast<int>(_incident[v].size()); }

            /// Indices of the edges at v.
            auto incident(int v) const -> const std::vector<int> & { return _incident[v]; }

            auto other_end(int e, int v) const -> int;
            auto neighbours(int v) const -> std::vector<int>;
            auto leaves() const -> std::vector<int>;
            auto is_leaf(int v) const -> bool { return degree(v) == 1; }

            /// Edge index joining u and v, or -1.
            auto edge_between(int u, int v) const -> int;

            /// Vertices of the tree path from u to v, inclusive.
            auto path_between(int u, int v) const -> std::vector<int>;

            /// 0/1 colouring with vertex 0 coloured 0.
            auto two_colouring() const -> std::vector<int>;

            auto as_graph() const -> Graph;
    };
}

#endif
