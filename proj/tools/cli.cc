#include "cli.hh"

#include <ehf/bisimplicial.hh>
#include <ehf/cutsets.hh>
#include <ehf/detectors.hh>
#include <ehf/harness.hh>
#include <ehf/io.hh>
#include <ehf/pyramid_strips.hh>
#include <ehf/strips.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using nlohmann::json;
using std::string;
using std::vector;

namespace ehf::cli
{
    namespace
    {
        /// Input problems detected after argument parsing.
        struct InputError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        struct Common
        {
            string graph_path;
            string format = "auto";
            bool pretty = false;
            bool require = false;
            std::optional<std::uint64_t> budget;
        };

        auto read_all(std::istream & s) -> string
        {
            std::ostringstream buf;
            buf << s.rdbuf();
            return buf.str();
        }

        auto load(const Common & c, std::istream & in) -> Graph
        {
            string text;
            if (c.graph_path == "-")
                text = read_all(in);
            else {
                std::ifstream f(c.graph_path);
                if (! f)
                    throw InputError("cannot open graph file '" + c.graph_path + "'");
                text = read_all(f);
            }
            auto format = c.format == "auto" ? guess_format(text) : parse_format(c.format);
            return parse_graph(text, format).graph;
        }

        /// --budget, else EHL_BUDGET, else the command's default.
        auto budget_for(const Common & c, std::uint64_t fallback) -> Budget
        {
            if (c.budget)
                return Budget::nodes(*c.budget);
            if (const char * env = std::getenv("EHL_BUDGET")) {
                char * end = nullptr;
                auto v = std::strtoull(env, &end, 10);
                if (end == env || *end != '\0')
                    throw InputError(string("EHL_BUDGET is not a node count: '") + env + "'");
                return Budget::nodes(v);
            }
            return Budget::nodes(fallback);
        }

        auto parse_vertex(const Graph & g, const string & text, const string & what) -> Vertex
        {
            try {
                std::size_t used = 0;
                int v = std::stoi(text, &used);
                if (used == text.size() && v >= 0 && v < g.size())
                    return v;
            }
            catch (const std::exception &) {
            }
            throw InputError(what + " '" + text + "' is not a vertex of the " + std::to_string(g.size()) + "-vertex graph");
        }

        auto parse_vertex_list(const Graph & g, const string & text, const string & what) -> vector<Vertex>
        {
            vector<Vertex> vs;
            std::stringstream ss(text);
            string item;
            while (std::getline(ss, item, ','))
                if (! item.empty())
                    vs.push_back(parse_vertex(g, item, what));
            return vs;
        }

        auto emit(std::ostream & out, const json & j, bool pretty) -> void
        {
            out << j.dump(pretty ? 2 : -1) << "\n";
        }

        auto detect(const Common & c, const string & structure, const string & cross_edge, const string & apex,
                std::istream & in, std::ostream & out) -> int
        {
            auto g = load(c, in);
            std::optional<Certificate> found;
            bool budget_hit = false;
            auto holes = [&] (HoleParity parity) {
                auto r = find_hole(g, parity, budget_for(c, 50'000'000));
                if (r.hole)
                    found = *r.hole;
                budget_hit = r.status == SearchStatus::BudgetHit;
            };
            if (structure == "even-hole")
                holes(HoleParity::Even);
            else if (structure == "odd-hole")
                holes(HoleParity::Odd);
            else if (structure == "hole")
                holes(HoleParity::Any);
            else if (structure == "theta") {
                if (auto t = find_theta(g))
                    found = *t;
            }
            else if (structure == "pyramid") {
                std::optional<Vertex> a;
                if (! apex.empty())
                    a = parse_vertex(g, apex, "apex");
                if (auto p = find_pyramid(g, a))
                    found = *p;
            }
            else if (structure == "near-prism") {
                if (auto p = find_near_prism(g))
                    found = *p;
            }
            else if (structure == "wheel" || structure == "even-wheel") {
                if (auto w = find_wheel(g, structure == "even-wheel"))
                    found = *w;
            }
            else if (structure == "extended-near-prism") {
                std::optional<Edge> e;
                if (! cross_edge.empty()) {
                    auto ends = parse_vertex_list(g, cross_edge, "cross-edge end");
                    if (ends.size() != 2)
                        throw InputError("--cross-edge takes two vertices a,b");
                    if (! g.adjacent(ends[0], ends[1]))
                        throw InputError("--cross-edge " + cross_edge + " is not an edge");
                    e = Edge{ ends[0], ends[1] };
                }
                if (auto x = find_extended_near_prism(g, e))
                    found = *x;
            }
            if (found) {
                out << certificate_json(*found, c.pretty ? 2 : -1) << "\n";
                return ok;
            }
            if (budget_hit) {
                out << "absent:budget-exceeded\n";
                return budget_exceeded;
            }
            out << "absent:certified\n";
            return c.require ? absent : ok;
        }

        auto bisimplicial(const Common & c, const std::optional<string> & clique, bool trusted, std::istream & in, std::ostream & out) -> int
        {
            auto g = load(c, in);
            if (! clique) {
                auto b = bisimplicial_vertices(g);
                emit(out, { { "bisimplicial", b.to_vector() } }, c.pretty);
                return b.empty() && c.require ? absent : ok;
            }
            auto k = VertexSet::from(parse_vertex_list(g, *clique, "clique vertex"));
            auto v = trusted ? check_main_theorem_unchecked(g, k) : check_main_theorem(g, k);
            json j{
                { "clique", k.to_vector() },
                { "m", v.set_m.to_vector() },
                { "outcome", to_string(v.outcome) },
                { "witness", v.witness ? json(*v.witness) : json(nullptr) },
                { "reason", v.reason },
            };
            emit(out, j, c.pretty);
            if (v.outcome == Outcome::Violated)
                return falsified;
            return ! v.witness && c.require ? absent : ok;
        }

        auto splendid(const Common & c, const string & vertex, std::istream & in, std::ostream & out) -> int
        {
            auto g = load(c, in);
            auto a = parse_vertex(g, vertex, "vertex");
            auto v = is_splendid(g, a);
            json j{
                { "vertex", a },
                { "splendid", v.ok },
                { "failed_clause", v.failed_clause ? json(to_string(*v.failed_clause)) : json(nullptr) },
                { "witness", nullptr },
            };
            if (v.witness) {
                if (auto * x = std::get_if<Vertex>(&*v.witness))
                    j["witness"] = *x;
                else
                    j["witness"] = json::parse(certificate_json(std::get<PyramidCertificate>(*v.witness)));
            }
            emit(out, j, c.pretty);
            return ! v.ok && c.require ? absent : ok;
        }

        auto decompose(const Common & c, const string & kind, const string & edge, const string & apex,
                std::istream & in, std::ostream & out) -> int
        {
            auto g = load(c, in);
            auto budget = budget_for(c, 2'000'000);
            json j;
            bool have = false, budget_hit = false;
            if (kind == "tree-strip") {
                auto ends = parse_vertex_list(g, edge, "edge end");
                if (ends.size() != 2)
                    throw InputError("tree-strip needs --edge a,b");
                if (! g.adjacent(ends[0], ends[1]))
                    throw InputError("--edge " + edge + " is not an edge");
                auto r = search_tree_strip_system(g, ends[0], ends[1], budget);
                have = r.context.has_value();
                budget_hit = r.budget_hit;
                j = {
                    { "kind", kind },
                    { "maximality", to_string(r.maximality) },
                    { "nodes", r.nodes },
                    { "budget_hit", r.budget_hit },
                    { "system", have ? json::parse(cross_edge_json(*r.context)) : json(nullptr) },
                };
                if (have)
                    j["valid"] = validate_cross_edge(g, *r.context).ok;
            }
            else {
                if (apex.empty())
                    throw InputError("pyramid-strip needs --apex v");
                auto a = parse_vertex(g, apex, "apex");
                auto r = search_pyramid_strip_system(g, a, budget);
                have = r.system.has_value();
                budget_hit = r.budget_hit;
                j = {
                    { "kind", kind },
                    { "maximality", to_string(r.maximality) },
                    { "nodes", r.nodes },
                    { "budget_hit", r.budget_hit },
                    { "system", have ? json::parse(pyramid_system_json(*r.system)) : json(nullptr) },
                    { "inapplicable", r.inapplicable },
                };
                if (have)
                    j["valid"] = validate_pyramid_system(g, *r.system).ok;
            }
            emit(out, j, c.pretty);
            if (! have && budget_hit)
                return budget_exceeded;
            return ! have && c.require ? absent : ok;
        }

        auto convert(const Common & c, const string & to, std::istream & in, std::ostream & out) -> int
        {
            auto text = serialize_graph(load(c, in), parse_format(to));
            out << text;
            if (text.empty() || text.back() != '\n')
                out << "\n";
            return ok;
        }

        struct VerifyArgs
        {
            string suite;
            std::optional<int> n, min_n;
            std::optional<string> mode, filter;
            std::optional<std::uint64_t> count, seed;
            unsigned jobs = 1;
            bool probe = false;
        };

        auto verify(const Common & c, const VerifyArgs & v, std::ostream & out) -> int
        {
            auto suite = parse_suite(v.suite);
            auto spec = default_spec(suite, v.n);
            if (v.min_n)
                spec.min_n = *v.min_n;
            if (v.mode)
                spec.mode = parse_mode(*v.mode);
            if (v.filter)
                spec.filter = parse_filter(*v.filter);
            if (v.count)
                spec.count = *v.count;
            if (v.seed)
                spec.seed = *v.seed;
            SuiteOptions opts;
            opts.jobs = std::max(1u, v.jobs);
            opts.budget = budget_for(c, 2'000'000);
            opts.probe_certificates = v.probe;
            auto r = run_suite(suite, spec, opts);
            if (c.pretty)
                out << report_table(r);
            else
                out << report_json(r) << "\n";
            if (r.caveat_free_fails() > 0 || r.counters.count("certificate_failures"))
                return falsified;
            return r.budget_hits > 0 ? budget_exceeded : ok;
        }
    }

    auto run(const vector<string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Even-hole-free graph structure toolkit" };
        app.name("ehf");
        app.require_subcommand(1);

        Common common;
        auto add_common = [&] (CLI::App * sub, bool graph) {
            if (graph)
                sub->add_option("graph", common.graph_path, "graph file, or - for stdin")->required();
            sub->add_option("--format", common.format, "graph6, edgelist, json or auto")
                ->check(CLI::IsMember({ "auto", "graph6", "edgelist", "json" }));
            sub->add_flag("--pretty", common.pretty, "human-readable output");
            sub->add_option("--budget", common.budget, "search-node budget (default: EHL_BUDGET, else per command)");
        };

        string structure, cross_edge, apex;
        auto * det = app.add_subcommand("detect", "find an induced structure and print its certificate");
        det->add_option("structure", structure)->required()->check(CLI::IsMember({ "even-hole", "odd-hole", "hole",
                    "theta", "pyramid", "near-prism", "wheel", "even-wheel", "extended-near-prism" }));
        add_common(det, true);
        det->add_option("--cross-edge", cross_edge, "a,b (extended-near-prism)");
        det->add_option("--apex", apex, "apex vertex (pyramid)");
        det->add_flag("--require", common.require, "exit 1 when the structure is absent");

        std::optional<string> clique;
        auto * bis = app.add_subcommand("bisimplicial", "bisimplicial vertices, or the main-theorem check for a clique");
        add_common(bis, true);
        bis->add_option("--clique", clique, "comma-separated clique K, possibly empty");
        bis->add_flag("--require", common.require, "exit 1 when no bisimplicial vertex is found");
        bool trusted = false;
        bis->add_flag("--trust-even-hole-free", trusted, "skip the even-hole test of the --clique check");

        string vertex;
        auto * spl = app.add_subcommand("splendid", "test whether a vertex is splendid");
        spl->add_option("vertex", vertex)->required();
        add_common(spl, true);
        spl->add_flag("--require", common.require, "exit 1 when the vertex is not splendid");

        string kind, edge;
        auto * dec = app.add_subcommand("decompose", "search for a maximal strip system");
        dec->add_option("kind", kind)->required()->check(CLI::IsMember({ "tree-strip", "pyramid-strip" }));
        add_common(dec, true);
        dec->add_option("--edge", edge, "cross edge a,b (tree-strip)");
        dec->add_option("--apex", apex, "apex (pyramid-strip)");
        dec->add_flag("--require", common.require, "exit 1 when no system exists");

        string to = "json";
        auto * conv = app.add_subcommand("convert", "re-encode a graph");
        add_common(conv, true);
        conv->add_option("--to", to, "graph6, edgelist or json")->check(CLI::IsMember({ "graph6", "edgelist", "json" }));

        VerifyArgs va;
        auto * ver = app.add_subcommand("verify", "run a verification suite");
        ver->add_option("suite", va.suite)->required();
        add_common(ver, false);
        ver->add_option("--n", va.n, "vertex count, or the family bound");
        ver->add_option("--min-n", va.min_n, "smallest vertex count (enumeration suites)");
        ver->add_option("--mode", va.mode)->check(CLI::IsMember({ "all-labeled", "canonical", "random" }));
        ver->add_option("--filter", va.filter)->check(CLI::IsMember({ "none", "even-hole-free", "connected" }));
        ver->add_option("--count", va.count, "instances for random mode");
        ver->add_option("--seed", va.seed, "seed for random mode");
        ver->add_option("--jobs", va.jobs, "worker threads");
        ver->add_flag("--probe", va.probe, "mutation-probe every certificate");

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            return app.exit(e, out, err) == 0 ? ok : input_error;
        }

        try {
            if (det->parsed())
                return detect(common, structure, cross_edge, apex, in, out);
            if (bis->parsed())
                return bisimplicial(common, clique, trusted, in, out);
            if (spl->parsed())
                return splendid(common, vertex, in, out);
            if (dec->parsed())
                return decompose(common, kind, edge, apex, in, out);
            if (conv->parsed())
                return convert(common, to, in, out);
            return verify(common, va, out);
        }
        catch (const InputError & e) {
            err << "ehf: " << e.what() << "\n";
        }
        catch (const GraphError & e) {
            err << "ehf: " << e.what() << "\n";
        }
        return input_error;
    }
}
