#include <ehf/io.hh>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

using nlohmann::json;
using std::string;
using std::vector;

namespace ehf
{
    auto to_string(GraphFormat f) -> string
    {
        switch (f) {
            case GraphFormat::Graph6: return "graph6";
            case GraphFormat::EdgeList: return "edgelist";
            case GraphFormat::Json: return "json";
        }
        return "?";
    }

    auto parse_format(const string & name) -> GraphFormat
    {
        for (auto f : { GraphFormat::Graph6, GraphFormat::EdgeList, GraphFormat::Json })
            if (to_string(f) == name)
                return f;
        throw GraphError("unknown graph format '" + name + "' (expected graph6, edgelist or json)");
    }

    auto guess_format(const string & text) -> GraphFormat
    {
        auto start = text.find_first_not_of(" \t\r\n");
        if (start != string::npos && text[start] == '{')
            return GraphFormat::Json;
        std::istringstream first(text.substr(0, text.find('\n')));
        long n, m;
        string rest;
        if (first >> n >> m && ! (first >> rest))
            return GraphFormat::EdgeList;
        return GraphFormat::Graph6;
    }

    auto to_graph6(const Graph & g) -> string
    {
        int n = g.size();
        string out;
        if (n <= 62)
            out += static_cast<char>(63 + n);
        else {
            out += static_cast<char>(126);
            for (int shift : { 12, 6, 0 })
                out += static_cast<char>(63 + ((n >> shift) & 63));
        }
        int bits = 0, acc = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i) {
                acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++bits == 6) {
                    out += static_cast<char>(63 + acc);
                    bits = acc = 0;
                }
            }
        if (bits > 0)
            out += static_cast<char>(63 + (acc << (6 - bits)));
        return out;
    }

    auto from_graph6(const string & raw) -> Graph
    {
        auto text = raw;
        while (! text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
            text.pop_back();
        if (text.rfind(">>graph6<<", 0) == 0)
            text = text.substr(10);
        if (text.empty())
            throw GraphError("graph6: empty input");
        for (char c : text)
            if (c < 63 || c > 126)
                throw GraphError("graph6: byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c)))
                        + " outside the printable range 63..126");
        std::size_t pos = 0;
        int n = text[pos++] - 63;
        if (n == 63) {
            if (text.size() < 4)
                throw GraphError("graph6: truncated vertex count");
            if (text[1] == 126)
                throw GraphError("graph6: vertex counts above 258047 are not supported");
            n = 0;
            for (int k = 0 ; k < 3 ; ++k)
                n = (n << 6) | (text[pos++] - 63);
        }
        if (n > max_vertices)
            throw GraphError("graph6: " + std::to_string(n) + " vertices exceeds the limit of " + std::to_string(max_vertices));
        std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
        std::size_t want = (pairs + 5) / 6;
        if (text.size() - pos != want)
            throw GraphError("graph6: expected " + std::to_string(want) + " data bytes for " + std::to_string(n)
                    + " vertices, found " + std::to_string(text.size() - pos));
        vector<Edge> edges;
        std::size_t bit = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i, ++bit) {
                int byte = text[pos + bit / 6] - 63;
                if ((byte >> (5 - bit % 6)) & 1)
                    edges.emplace_back(i, j);
            }
        return Graph::from_edges(n, edges);
    }

    auto to_edgelist(const Graph & g) -> string
    {
        std::ostringstream out;
        out << g.size() << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
        return out.str();
    }

    auto from_edgelist(const string & text) -> Graph
    {
        std::istringstream in(text);
        string line;
        auto next_line = [&] () -> bool {
            while (std::getline(in, line))
                if (line.find_first_not_of(" \t\r") != string::npos)
                    return true;
            return false;
        };
        long n = -1, m = -1;
        {
            string extra;
            std::istringstream header(next_line() ? line : string{});
            if (! (header >> n >> m) || (header >> extra) || n < 0 || m < 0)
                throw GraphError("edgelist: malformed header (expected two non-negative integers \"n m\")");
        }
        if (n > max_vertices)
            throw GraphError("edgelist: " + std::to_string(n) + " vertices exceeds the limit of " + std::to_string(max_vertices));
        Graph g(static_cast<int>(n));
        vector<Edge> edges;
        vector<VertexSet> seen(n);
        for (long k = 0 ; k < m ; ++k) {
            if (! next_line())
                throw GraphError("edgelist: header promises " + std::to_string(m) + " edges, found " + std::to_string(k));
            std::istringstream row(line);
            long u, v;
            string extra;
            if (! (row >> u >> v) || (row >> extra))
                throw GraphError("edgelist: malformed edge line " + std::to_string(k + 1) + ": '" + line + "'");
            for (long x : { u, v })
                if (x < 0 || x >= n)
                    throw GraphError("edgelist: vertex " + std::to_string(x) + " out of range 0.." + std::to_string(n - 1));
            if (u == v)
                throw GraphError("edgelist: self-loop at vertex " + std::to_string(u));
            if (seen[u].test(static_cast<int>(v)))
                throw GraphError("edgelist: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            seen[u].set(static_cast<int>(v));
            seen[v].set(static_cast<int>(u));
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        if (next_line())
            throw GraphError("edgelist: more than the " + std::to_string(m) + " promised edges");
        return Graph::from_edges(static_cast<int>(n), edges);
    }

    auto to_json(const Graph & g, const vector<string> & labels) -> string
    {
        json j;
        j["n"] = g.size();
        j["edges"] = json::array();
        for (auto [u, v] : g.edges())
            j["edges"].push_back({ u, v });
        if (! labels.empty())
            j["labels"] = labels;
        return j.dump();
    }

    namespace
    {
        auto graph_from_json(const string & text) -> GraphDocument
        {
            json j;
            try {
                j = json::parse(text);
            }
            catch (const json::parse_error & e) {
                throw GraphError(string("json: malformed document: ") + e.what());
            }
            if (! j.is_object() || ! j.contains("n") || ! j["n"].is_number_integer())
                throw GraphError("json: missing integer field \"n\"");
            long n = j["n"].get<long>();
            if (n < 0 || n > max_vertices)
                throw GraphError("json: vertex count " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
            GraphDocument doc;
            doc.format = GraphFormat::Json;
            vector<Edge> edges;
            if (j.contains("edges")) {
                if (! j["edges"].is_array())
                    throw GraphError("json: \"edges\" must be an array");
                for (auto & e : j["edges"]) {
                    if (! e.is_array() || e.size() != 2 || ! e[0].is_number_integer() || ! e[1].is_number_integer())
                        throw GraphError("json: malformed edge " + e.dump());
                    long u = e[0].get<long>(), v = e[1].get<long>();
                    for (long x : { u, v })
                        if (x < 0 || x >= n)
                            throw GraphError("json: vertex " + std::to_string(x) + " out of range 0.." + std::to_string(n - 1));
                    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
                }
            }
            if (j.contains("labels")) {
                if (! j["labels"].is_array() || static_cast<long>(j["labels"].size()) != n)
                    throw GraphError("json: \"labels\" must be an array of " + std::to_string(n) + " strings");
                for (auto & l : j["labels"]) {
                    if (! l.is_string())
                        throw GraphError("json: labels must be strings");
                    doc.labels.push_back(l.get<string>());
                }
            }
            try {
                doc.graph = Graph::from_edges(static_cast<int>(n), edges);
            }
            catch (const GraphError & e) {
                throw GraphError(string("json: ") + e.what());
            }
            return doc;
        }
    }

    auto parse_graph(const string & text, GraphFormat format) -> GraphDocument
    {
        switch (format) {
            case GraphFormat::Json:
                return graph_from_json(text);
            case GraphFormat::EdgeList:
                return GraphDocument{ format, from_edgelist(text), {} };
            case GraphFormat::Graph6:
                break;
        }
        return GraphDocument{ format, from_graph6(text), {} };
    }

    auto serialize_graph(const Graph & g, GraphFormat format) -> string
    {
        switch (format) {
            case GraphFormat::Json: return to_json(g);
            case GraphFormat::EdgeList: return to_edgelist(g);
            case GraphFormat::Graph6: break;
        }
        return to_graph6(g);
    }

    namespace
    {
        auto set_json(const VertexSet & s) -> json
        {
            return s.to_vector();
        }

        auto path_json(const Path & p) -> json
        {
            return p.verts;
        }

        auto near_prism_json(const NearPrismCertificate & c) -> json
        {
            json j;
            j["triangle_a"] = c.triangle_a;
            j["triangle_b"] = c.triangle_b;
            j["paths"] = json::array();
            for (auto & p : c.paths)
                j["paths"].push_back(path_json(p));
            j["prism"] = c.is_prism();
            return j;
        }

        auto dump(const json & j, int indent) -> string
        {
            return j.dump(indent);
        }

        auto strip_json(const Strip & s) -> json
        {
            return json{ { "a", set_json(s.a) }, { "b", set_json(s.b) }, { "c", set_json(s.c) } };
        }
    }

    auto certificate_json(const Certificate & c, int indent) -> string
    {
        json j;
        j["kind"] = kind_name(c);
        std::visit([&] (const auto & x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, HoleCertificate>) {
                j["cycle"] = x.cycle;
                j["length"] = x.cycle.size();
            }
            else if constexpr (std::is_same_v<T, ThetaCertificate>) {
                j["s"] = x.s;
                j["t"] = x.t;
                j["paths"] = json::array();
                for (auto & p : x.paths)
                    j["paths"].push_back(path_json(p));
            }
            else if constexpr (std::is_same_v<T, PyramidCertificate>) {
                j["apex"] = x.apex;
                j["base"] = x.base;
                j["paths"] = json::array();
                for (auto & p : x.paths)
                    j["paths"].push_back(path_json(p));
                j["short"] = x.is_short();
            }
            else if constexpr (std::is_same_v<T, NearPrismCertificate>) {
                j.update(near_prism_json(x));
            }
            else if constexpr (std::is_same_v<T, WheelCertificate>) {
                j["centre"] = x.centre;
                j["hole"] = x.hole;
                j["spokes"] = set_json(x.spokes);
            }
            else {
                j.update(near_prism_json(x.near_prism));
                j["cross_edge"] = { x.cross_a, x.cross_b };
            }
        }, c);
        j["span"] = set_json(certificate_span(c));
        return dump(j, indent);
    }

    auto cross_edge_json(const CrossEdgeContext & ctx, int indent) -> string
    {
        json j;
        j["a"] = ctx.a;
        j["b"] = ctx.b;
        j["alpha"] = ctx.alpha;
        j["beta"] = ctx.beta;
        auto & m = ctx.system;
        j["tree"] = { { "n", m.j.size() }, { "edges", json::array() } };
        for (auto [u, v] : m.j.edges())
            j["tree"]["edges"].push_back({ u, v });
        j["m_edge"] = json::array();
        for (auto & s : m.m_edge)
            j["m_edge"].push_back(set_json(s));
        j["m_vertex"] = json::array();
        for (auto & s : m.m_vertex)
            j["m_vertex"].push_back(set_json(s));
        j["vertices"] = set_json(m.vertices());
        return dump(j, indent);
    }

    auto pyramid_system_json(const PyramidStripSystem & s, int indent) -> string
    {
        json j;
        j["apex"] = s.apex;
        j["strips"] = json::array();
        for (auto & st : s.strips)
            j["strips"].push_back(strip_json(st));
        j["vertices"] = set_json(s.vertices());
        return dump(j, indent);
    }

    auto vertex_set_json(const VertexSet & s) -> string
    {
        return set_json(s).dump();
    }
}
