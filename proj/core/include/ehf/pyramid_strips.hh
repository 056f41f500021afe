#ifndef EHF_PYRAMID_STRIPS_HH
#define EHF_PYRAMID_STRIPS_HH

#include <ehf/detectors.hh>
#include <ehf/strips.hh>

#include <map>

namespace ehf
{
    struct PyramidStripSystem
    {
        Vertex apex = -1;
        std::vector<Strip> strips;

        /// V(𝒮): the apex together with every strip.
        auto vertices() const -> VertexSet;

        /// B_1 ∪ ... ∪ B_k.
        auto all_b() const -> VertexSet;
    };

    /// The k = 3 single-rung system of a pyramid whose paths all have length at least two.
    auto pyramid_system_from(const PyramidCertificate & p) -> PyramidStripSystem;

    auto validate_pyramid_system(const Graph & g, const PyramidStripSystem & s) -> Report;

    /// Every A_i ∪ C_i is connected.
    auto is_indecomposable(const Graph & g, const PyramidStripSystem & s) -> bool;

    struct PyramidSearchResult
    {
        std::optional<PyramidStripSystem> system;
        Maximality maximality = Maximality::Unknown;
        std::uint64_t nodes = 0;
        bool budget_hit = false;
        std::string inapplicable;   ///< the failed hypothesis, when there is no system
    };

    /**
     * An indecomposable pyramid strip system with apex a and V(𝒮) as large as
     * possible. Hypotheses (a splendid, no extended near-prism with a at its
     * cross-edge, a pyramid at a) are checked unless check_hypotheses is false.
     * Without an exhaustive finish the result is closed under adding single
     * vertices and absorbing induced paths, and marked LocallyMaximal.
     */
    auto search_pyramid_strip_system(const Graph & g, Vertex a, const Budget & budget = Budget::unlimited(),
            bool check_hypotheses = true) -> PyramidSearchResult;

    /// 𝒮(F). Throws GraphError if F meets V(𝒮).
    auto attachments(const Graph & g, const PyramidStripSystem & s, const VertexSet & f) -> VertexSet;

    /// D_i: components F of G \ (V(𝒮) ∪ N[a]) with 𝒮(F) meeting A_i ∪ C_i.
    auto d_set(const Graph & g, const PyramidStripSystem & s, int i) -> VertexSet;

    /// One result per component of G \ (V(𝒮) ∪ N[a]).
    auto check_pyramid_attachment_theorem(const Graph & g, const PyramidStripSystem & s, Maximality maximality)
        -> std::vector<CheckResult>;

    enum class ApexNeighbourType
    {
        Alpha,
        AlphaPrime,
        Beta,
        Gamma,
        Unclassified
    };

    auto to_string(ApexNeighbourType) -> std::string;

    struct ApexNeighbourClass
    {
        ApexNeighbourType type = ApexNeighbourType::Unclassified;
        int index = -1;                   ///< the strip i for α′, β and γ
        std::optional<Path> private_path; ///< γ only, from v to q
    };

    /// Throws GraphError unless v ∈ N(a) \ V(𝒮).
    auto classify_apex_neighbour(const Graph & g, const PyramidStripSystem & s, Vertex v) -> ApexNeighbourClass;

    /// One result per vertex of N(a) \ V(𝒮); Violated when it has none of the four types.
    auto check_apex_neighbour_types(const Graph & g, const PyramidStripSystem & s, Maximality maximality)
        -> std::vector<CheckResult>;

    auto check_apex_clique(const Graph & g, const PyramidStripSystem & s, Maximality maximality) -> CheckResult;

    struct CompletedStrip
    {
        Strip strip;
        Vertex a = -1;
        VertexSet d, z;
        std::map<Vertex, Path> backdoors;   ///< from z to b
    };

    /// Components of G \ (V(S) ∪ N[a]) not anticomplete to A ∪ C.
    auto completion_d(const Graph & g, const Strip & s, Vertex a) -> VertexSet;

    /// Vertices outside V(S), adjacent or equal to a, with a neighbour in A ∪ C ∪ D.
    auto completion_z(const Graph & g, const Strip & s, Vertex a, const VertexSet & d) -> VertexSet;

    /// D and Z from their definitions and a shortest backdoor for each z; none if some z has no backdoor.
    auto complete_strip(const Graph & g, const Strip & s, Vertex a) -> std::optional<CompletedStrip>;

    auto check_completed_strip(const Graph & g, const CompletedStrip & cs) -> Report;

    /**
     * Inapplicable unless cs is a completed strip, at least three vertices lie
     * outside A ∪ C ∪ D with no neighbour there, and G is even-hole-free
     * (skipped when ehf_known). Holds when A ∪ C ∪ D has a bisimplicial vertex.
     */
    auto check_striptobip(const Graph & g, const CompletedStrip & cs, bool ehf_known = false) -> CheckResult;
}

#endif
