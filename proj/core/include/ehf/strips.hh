#ifndef EHF_STRIPS_HH
#define EHF_STRIPS_HH

#include <ehf/bisimplicial.hh>
#include <ehf/graph.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ehf
{
    /// (A, B, C) with A, B nonempty and C disjoint from both.
    struct Strip
    {
        VertexSet a, b, c;

        auto vertices() const -> VertexSet { return a | b | c; }
        auto is_proper() const -> bool { return ! a.intersects(b); }

        friend auto operator==(const Strip &, const Strip &) -> bool = default;
    };

    /// Induced path p_1..p_k of G[A∪B∪C], p_1 ∈ A, p_k ∈ B, interior in C, and
    /// for k > 1 also p_1 ∉ B and p_k ∉ A. A single vertex of A∩B is a rung.
    auto is_rung(const Graph & g, const Strip & s, const Path & p) -> bool;

    /// Every rung of the strip, subject to the budget.
    auto strip_rungs(const Graph & g, const Strip & s, const Budget & budget = Budget::unlimited()) -> std::vector<Path>;

    struct StripValidation
    {
        bool ok = false;
        VertexSet uncovered;
    };

    /// Throws GraphError if A or B is empty or C meets A∪B.
    auto validate_strip(const Graph & g, const Strip & s, bool require_proper = false) -> StripValidation;

    /// First failing clause of a structural check, with a witness.
    struct Report
    {
        bool ok = true;
        std::string failed;
        std::string witness;

        static auto pass() -> Report { return {}; }
        static auto fail(std::string what, std::string witness = "") -> Report
        {
            return Report{ false, std::move(what), std::move(witness) };
        }
    };

    struct JStripSystem
    {
        Tree j;
        std::vector<VertexSet> m_edge;     ///< indexed by edge of J
        std::vector<VertexSet> m_vertex;   ///< indexed by vertex of J

        /// V(M), the union of the edge sets.
        auto vertices() const -> VertexSet;

        /// (M_uv ∩ M_u, M_uv ∩ M_v, M_uv \ (M_u ∪ M_v)) for edge e = uv, u the first end.
        auto edge_strip(int e) const -> Strip;
    };

    auto validate_jstrip(const Graph & g, const JStripSystem & m) -> Report;

    struct CrossEdgeContext
    {
        JStripSystem system;
        Vertex a = -1, b = -1;
        std::vector<int> alpha, beta;   ///< leaves of J

        auto alpha_hubs() const -> VertexSet;
        auto beta_hubs() const -> VertexSet;

        /// Common neighbours of a and b.
        auto z(const Graph & g) const -> VertexSet;
    };

    /// The four cross-edge bullets, plus ab ∈ E(G) and (α, β) partitioning the leaves.
    auto validate_cross_edge(const Graph & g, const CrossEdgeContext & ctx) -> Report;

    struct ExtendedTreeLineGraph
    {
        Graph graph;              ///< vertex i < |E(T)| is tree edge i; then a, then b
        CrossEdgeContext context;
    };

    /**
     * H(T) for a tree T with at least three vertices and three leaves, where
     * side[v] in {0, 1} is a proper 2-colouring (0 meaning A'). Every vertex v
     * must leave at most one component of T\v without an A'-leaf and at most
     * one without a B'-leaf. Violations throw GraphError naming the condition.
     */
    auto build_extended_tree_line_graph(const Tree & t, const std::vector<int> & side) -> ExtendedTreeLineGraph;

    /// The conditions above, without building anything.
    auto valid_bipartition(const Tree & t, const std::vector<int> & side) -> bool;

    /// Throws GraphError unless X ⊆ V(M) ∪ {a, b}.
    auto is_local(const VertexSet & x, const CrossEdgeContext & ctx) -> bool;

    /// A two-element subset of X that is not local; none when X is local or contains both a and b.
    auto nonlocal_pair(const VertexSet & x, const CrossEdgeContext & ctx) -> std::optional<std::pair<Vertex, Vertex>>;

    enum class Maximality
    {
        Unknown,
        LocallyMaximal,
        CertifiedOptimal
    };

    auto to_string(Maximality) -> std::string;

    struct TreeStripSearchResult
    {
        std::optional<CrossEdgeContext> context;
        Maximality maximality = Maximality::Unknown;
        std::uint64_t nodes = 0;
        bool budget_hit = false;
    };

    /**
     * A cross-edge context for ab, optimal in the two-stage sense: J with as
     * many edges as any extended tree line-graph through ab allows, then V(M)
     * as large as possible. CertifiedOptimal only when the exhaustive search
     * finished inside the budget; otherwise the best system found is improved
     * by single-vertex additions and path absorptions and marked
     * LocallyMaximal. Throws GraphError when ab is not an edge.
     */
    auto search_tree_strip_system(const Graph & g, Vertex a, Vertex b, const Budget & budget = Budget::unlimited())
        -> TreeStripSearchResult;

    /// Outcome of a theorem checker. A Violated outcome with caveat set was
    /// obtained against a system that is not certified optimal.
    struct CheckResult
    {
        Outcome outcome = Outcome::Inapplicable;
        bool caveat = false;
        std::string witness;
        std::string detail;
    };

    /// Vertices of V(M) with a neighbour in F.
    auto attachment_set(const Graph & g, const CrossEdgeContext & ctx, const VertexSet & f) -> VertexSet;

    struct LocalityVerdict
    {
        CheckResult check;
        VertexSet x;                  ///< X(F)
        int touches = 0;              ///< |{a, b} ∩ N(F)|
        std::optional<int> leaf;      ///< the leaf t with X(F) ⊆ M_t, when both a and b touch F
    };

    /**
     * Checks the conclusion for a connected F avoiding Z ∪ V(M) ∪ {a, b}: X(F) is
     * local when F misses a or b, else X(F) ⊆ M_t for a leaf t. An empty F is
     * Inapplicable; any other precondition failure throws GraphError.
     */
    auto classify_small_subgraph(const Graph & g, const CrossEdgeContext & ctx, const VertexSet & f,
            Maximality maximality = Maximality::CertifiedOptimal) -> LocalityVerdict;

    /// Members of Z that are both a-external and b-external.
    auto major_vertices(const Graph & g, const CrossEdgeContext & ctx) -> VertexSet;

    auto check_major_clique(const Graph & g, const CrossEdgeContext & ctx, Maximality maximality) -> CheckResult;

    /// One result per component of G \ (V(M) ∪ Z ∪ {a, b}) with a neighbour in Z \ Y.
    auto check_funnies(const Graph & g, const CrossEdgeContext & ctx, Maximality maximality) -> std::vector<CheckResult>;

    /// Inapplicable unless a is splendid; otherwise every clause of the splendid refinement.
    auto check_splendid_refinements(const Graph & g, const CrossEdgeContext & ctx, Maximality maximality) -> CheckResult;

    /**
     * hole = h_1 .. h_n. Inapplicable unless a, b lie off the hole, each has at
     * least three neighbours on it, both see h_1 and h_n, a and b are
     * nonadjacent, and G is even-hole-free (skipped when ehf_known).
     */
    auto check_skewpyr(const Graph & g, const std::vector<Vertex> & hole, Vertex a, Vertex b, bool ehf_known = false)
        -> Outcome;

    /// Calls f on every connected subset of S of size at most max_size (0: no cap).
    auto for_each_connected_subset(const Graph & g, const VertexSet & s, int max_size,
            const std::function<bool (const VertexSet &)> & f) -> void;
}

#endif
