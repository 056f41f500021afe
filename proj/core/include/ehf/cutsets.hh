#ifndef EHF_CUTSETS_HH
#define EHF_CUTSETS_HH

#include <ehf/bisimplicial.hh>
#include <ehf/detectors.hh>
#include <ehf/graph.hh>

#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace ehf
{
    class DegreeBoundError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    using Split = std::pair<VertexSet, VertexSet>;

    /// V(G)\C as two nonempty anticomplete parts: the first component of
    /// G\C against the union of the others.
    auto is_cutset(const Graph & g, const VertexSet & c) -> std::optional<Split>;

    struct StarCutsetWitness
    {
        Vertex centre = -1;
        VertexSet cutset;
        Split sides;
    };

    /// Shape, nonempty halves, anticompleteness and coverage.
    auto validate_star_cutset(const Graph & g, const StarCutsetWitness & w) -> bool;

    /// Some v with N[v] a cutset (only v = centre, if given).
    auto find_full_star_cutset(const Graph & g, std::optional<Vertex> centre = std::nullopt)
        -> std::optional<StarCutsetWitness>;

    /**
     * Some star cutset, found by trying {v} and then {v} ∪ (N(v) ∩ N(X)) for
     * each component X of G\N[v]. When N[v] is everything, a star cutset at v
     * exists exactly when N(v) is not a clique.
     */
    auto find_star_cutset(const Graph & g, std::optional<Vertex> centre = std::nullopt)
        -> std::optional<StarCutsetWitness>;

    /// Tries every subset of N(v); throws DegreeBoundError above max_degree.
    auto find_star_cutset_exhaustive(const Graph & g, std::optional<Vertex> centre = std::nullopt, int max_degree = 20)
        -> std::optional<StarCutsetWitness>;

    enum class SplendidClause
    {
        NotConnectedOutside,
        NeighbourTrapped,
        ShortPyramidApex
    };

    auto to_string(SplendidClause) -> std::string;

    struct SplendidVerdict
    {
        Vertex vertex = -1;
        bool ok = false;
        std::optional<SplendidClause> failed_clause;
        std::optional<std::variant<Vertex, PyramidCertificate>> witness;
        bool outside_empty = false;   ///< the outside was empty, which alone fails the first clause
    };

    auto is_splendid(const Graph & g, Vertex a) -> SplendidVerdict;

    /**
     * For a hole H and a vertex a outside it: a is complete or anticomplete
     * to H, or its neighbours on H induce a path, or it has exactly three
     * neighbours there, two of them adjacent. Inapplicable when N[a] is a
     * cutset. Throws GraphError for an invalid hole or a on the hole.
     */
    auto check_hole_neighbourhood_trichotomy(const Graph & g, const std::vector<Vertex> & hole, Vertex a) -> Outcome;
}

#endif
