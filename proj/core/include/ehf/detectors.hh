#ifndef EHF_DETECTORS_HH
#define EHF_DETECTORS_HH

#include <ehf/graph.hh>

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ehf
{
    /// An induced cycle of length at least four, listed in cyclic order.
    struct HoleCertificate
    {
        std::vector<Vertex> cycle;
        bool even = false;   ///< verification also demands even length

        friend auto operator==(const HoleCertificate &, const HoleCertificate &) -> bool = default;
    };

    /// Three induced s-t paths of length at least two with disjoint, anticomplete interiors.
    struct ThetaCertificate
    {
        Vertex s = -1, t = -1;
        std::array<Path, 3> paths;

        friend auto operator==(const ThetaCertificate &, const ThetaCertificate &) -> bool = default;
    };

    /// paths[i] runs from the apex to base[i]; the base is a triangle.
    struct PyramidCertificate
    {
        Vertex apex = -1;
        std::array<Vertex, 3> base{ -1, -1, -1 };
        std::array<Path, 3> paths;

        auto is_short() const -> bool;

        friend auto operator==(const PyramidCertificate &, const PyramidCertificate &) -> bool = default;
    };

    /// paths[i] runs from triangle_a[i] to triangle_b[i]. When the triangles share
    /// a vertex it is triangle_a[2] == triangle_b[2] and paths[2] is that vertex alone.
    struct NearPrismCertificate
    {
        std::array<Vertex, 3> triangle_a{ -1, -1, -1 }, triangle_b{ -1, -1, -1 };
        std::array<Path, 3> paths;

        auto is_prism() const -> bool { return triangle_a[2] != triangle_b[2]; }

        friend auto operator==(const NearPrismCertificate &, const NearPrismCertificate &) -> bool = default;
    };

    struct WheelCertificate
    {
        Vertex centre = -1;
        std::vector<Vertex> hole;
        VertexSet spokes;
        bool even = false;   ///< verification also demands an even spoke count

        friend auto operator==(const WheelCertificate &, const WheelCertificate &) -> bool = default;
    };

    /// A near-prism plus the edge cross_a–cross_b, cross_a interior to paths[0]
    /// and cross_b interior to paths[1].
    struct ExtendedNearPrismCertificate
    {
        NearPrismCertificate near_prism;
        Vertex cross_a = -1, cross_b = -1;

        friend auto operator==(const ExtendedNearPrismCertificate &, const ExtendedNearPrismCertificate &) -> bool = default;
    };

    using Certificate = std::variant<HoleCertificate, ThetaCertificate, PyramidCertificate,
          NearPrismCertificate, WheelCertificate, ExtendedNearPrismCertificate>;

    auto kind_name(const Certificate &) -> std::string;

    /// Every vertex mentioned by the certificate.
    auto certificate_span(const Certificate &) -> VertexSet;

    enum class HoleParity
    {
        Any,
        Even,
        Odd
    };

    /**
     * Visits every hole of length in [min_length, max_length] exactly once
     * (max_length 0 means no cap). Each cycle starts at its least vertex and
     * continues towards the smaller of that vertex's two cycle neighbours.
     */
    auto for_each_hole(const Graph & g, int min_length, int max_length, const Budget & budget,
            const std::function<bool (const std::vector<Vertex> &)> & visit) -> SearchStatus;

    struct HoleSearchResult
    {
        std::optional<HoleCertificate> hole;
        SearchStatus status = SearchStatus::Exhausted;

        /// Absence is only conclusive when the search ran to completion.
        auto certified_absent() const -> bool { return ! hole && status == SearchStatus::Exhausted; }
    };

    /// Shortest hole of the given parity, ties broken by least vertex sequence.
    auto find_hole(const Graph & g, HoleParity parity, const Budget & budget = Budget::unlimited()) -> HoleSearchResult;

    auto find_even_hole(const Graph & g, const Budget & budget = Budget::unlimited()) -> HoleSearchResult;

    auto is_even_hole_free(const Graph & g) -> bool;

    auto find_theta(const Graph & g) -> std::optional<ThetaCertificate>;

    auto find_pyramid(const Graph & g, std::optional<Vertex> apex = std::nullopt, bool short_only = false)
        -> std::optional<PyramidCertificate>;

    auto find_near_prism(const Graph & g) -> std::optional<NearPrismCertificate>;

    auto find_wheel(const Graph & g, bool even_only = false) -> std::optional<WheelCertificate>;

    /// With a cross edge given (it must be an edge; GraphError otherwise) the
    /// returned structure has exactly that cross edge, first end in paths[0].
    auto find_extended_near_prism(const Graph & g, std::optional<Edge> cross_edge = std::nullopt)
        -> std::optional<ExtendedNearPrismCertificate>;

    /// Some extended near-prism having `end` as one end of its cross edge
    /// (reported as cross_a).
    auto find_extended_near_prism_at(const Graph & g, Vertex end) -> std::optional<ExtendedNearPrismCertificate>;

    /// Re-derives every clause of the relevant definition from G alone.
    auto verify_certificate(const Graph & g, const Certificate & c) -> bool;
}

#endif
