#ifndef EHF_BISIMPLICIAL_HH
#define EHF_BISIMPLICIAL_HH

#include <ehf/graph.hh>

#include <optional>

namespace ehf
{
    enum class Outcome
    {
        Holds,
        Violated,
        Inapplicable
    };

    auto to_string(Outcome) -> std::string;

    /// N(v) is the union of two cliques.
    auto is_bisimplicial(const Graph & g, Vertex v) -> bool;

    auto bisimplicial_vertices(const Graph & g) -> VertexSet;

    struct MainTheoremVerdict
    {
        Outcome outcome = Outcome::Inapplicable;
        VertexSet clique_k;
        VertexSet set_m;                  ///< vertices outside K with no neighbour in K
        std::optional<Vertex> witness;    ///< least bisimplicial vertex of M
        std::optional<Graph> violation_graph;
        std::string reason;               ///< why the instance is inapplicable

        auto holds() const -> bool { return outcome == Outcome::Holds; }
    };

    /**
     * Checks that some vertex of M is bisimplicial. Instances that are not
     * even-hole-free, whose K is not a clique of size at most two, or whose M
     * is empty come back Inapplicable.
     */
    auto check_main_theorem(const Graph & g, const VertexSet & k) -> MainTheoremVerdict;

    /// As above, with even-hole-freeness already established by the caller.
    auto check_main_theorem_unchecked(const Graph & g, const VertexSet & k) -> MainTheoremVerdict;
}

#endif
