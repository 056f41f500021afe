#ifndef EHF_IO_HH
#define EHF_IO_HH

#include <ehf/detectors.hh>
#include <ehf/graph.hh>
#include <ehf/pyramid_strips.hh>
#include <ehf/strips.hh>

#include <optional>
#include <string>
#include <vector>

namespace ehf
{
    enum class GraphFormat
    {
        Graph6,
        EdgeList,
        Json
    };

    auto to_string(GraphFormat) -> std::string;

    /// "graph6", "edgelist" or "json"; throws GraphError otherwise.
    auto parse_format(const std::string & name) -> GraphFormat;

    /// JSON when the first non-blank character is '{', an edge list when the
    /// first line holds two integers, graph6 otherwise.
    auto guess_format(const std::string & text) -> GraphFormat;

    struct GraphDocument
    {
        GraphFormat format = GraphFormat::Graph6;
        Graph graph;
        std::vector<std::string> labels;   ///< empty unless the JSON carried them
    };

    /// Throws GraphError with a message naming the problem.
    auto parse_graph(const std::string & text, GraphFormat format) -> GraphDocument;

    auto serialize_graph(const Graph & g, GraphFormat format) -> std::string;

    auto to_graph6(const Graph & g) -> std::string;
    auto from_graph6(const std::string & text) -> Graph;

    /// "n m" then one "u v" line per edge, u < v, sorted.
    auto to_edgelist(const Graph & g) -> std::string;
    auto from_edgelist(const std::string & text) -> Graph;

    /// {"edges": [[u, v], ...], "n": n} plus "labels" when given.
    auto to_json(const Graph & g, const std::vector<std::string> & labels = {}) -> std::string;

    // JSON renderings for the command line. Keys are sorted and vertex arrays
    // ascending wherever order carries no meaning; `indent` < 0 means compact.

    auto certificate_json(const Certificate & c, int indent = -1) -> std::string;
    auto cross_edge_json(const CrossEdgeContext & ctx, int indent = -1) -> std::string;
    auto pyramid_system_json(const PyramidStripSystem & s, int indent = -1) -> std::string;
    auto vertex_set_json(const VertexSet & s) -> std::string;
}

#endif
