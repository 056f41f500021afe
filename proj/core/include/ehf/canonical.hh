#ifndef EHF_CANONICAL_HH
#define EHF_CANONICAL_HH

#include <ehf/graph.hh>

#include <cstdint>
#include <functional>
#include <vector>

namespace ehf
{
    struct CanonicalForm
    {
        Graph graph;                    ///< the relabelled graph, equal for isomorphic inputs
        std::vector<Vertex> labelling;  ///< old vertex -> new vertex
        std::vector<Vertex> order;      ///< new vertex -> old vertex
    };

    /**
     * Canonical labelling by individualisation and colour refinement, pruned
     * by the automorphisms met along the way. `colours`, when non-empty, is an
     * ordered initial colouring that isomorphisms must respect.
     */
    auto canonical_form(const Graph & g, const std::vector<int> & colours = {}) -> CanonicalForm;

    /// Upper-triangle bits of the canonical graph, row by row; equal exactly for isomorphic graphs.
    auto canonical_key(const Graph & g) -> std::vector<std::uint64_t>;

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool;

    /// True when some automorphism of G maps u to v.
    auto same_orbit(const Graph & g, Vertex u, Vertex v) -> bool;

    /// Visitor returns false to stop.
    using GraphVisitor = std::function<bool (const Graph &)>;

    /**
     * One canonically labelled graph per isomorphism class on n vertices, by
     * canonical augmentation: a child P + v of canonical parent P is kept
     * when v lies in the orbit of the child's canonically last vertex. With a
     * `keep` predicate that is closed under induced subgraphs, rejected
     * graphs are not extended. Deterministic order.
     */
    auto for_each_canonical_graph(int n, const GraphVisitor & visit,
            const std::function<bool (const Graph &)> & keep = {}) -> void;

    /// Canonical children of the canonical graph P (one vertex more), in the order the enumeration visits them.
    auto canonical_children(const Graph & p, const std::function<bool (const Graph &)> & keep = {})
        -> std::vector<Graph>;
}

#endif
