#include <ehf/strips.hh>

#include <ehf/cutsets.hh>
#include <ehf/detectors.hh>

#include "small_csp.hh"

#include <algorithm>
#include <map>
#include <set>

using std::optional;
using std::string;
using std::vector;

namespace ehf
{
    auto is_rung(const Graph & g, const Strip & s, const Path & p) -> bool
    {
        if (p.verts.empty() || ! p.vertex_set().is_subset_of(s.vertices()))
            return false;
        if (! s.a.test(p.front()) || ! s.b.test(p.back()))
            return false;
        if (p.verts.size() > 1 && (s.b.test(p.front()) || s.a.test(p.back())))
            return false;
        if (! p.interior().is_subset_of(s.c))
            return false;
        return is_induced_path(g, p);
    }

    namespace
    {
        auto check_strip_shape(const Graph & g, const Strip & s) -> void
        {
            if (s.a.empty() || s.b.empty())
                throw GraphError("strip: A and B must be nonempty");
            if (s.c.intersects(s.a | s.b))
                throw GraphError("strip: C meets A ∪ B");
            if (! s.vertices().is_subset_of(g.vertices()))
                throw GraphError("strip: vertex out of range");
        }

        /// Runs over rungs until the visitor returns false.
        auto for_each_rung(const Graph & g, const Strip & s, const Budget & budget,
                const std::function<bool (const Path &)> & visit) -> SearchStatus
        {
            auto both = s.a & s.b;
            for (Vertex x = both.first() ; x != -1 ; x = both.next(x))
                if (! visit(Path{ { x } }))
                    return SearchStatus::Stopped;
            auto starts = s.a - s.b, ends = s.b - s.a;
            for (Vertex x = starts.first() ; x != -1 ; x = starts.next(x))
                for (Vertex y = ends.first() ; y != -1 ; y = ends.next(y)) {
                    auto status = enumerate_induced_paths(g, x, y, s.c, budget, visit);
                    if (status != SearchStatus::Exhausted)
                        return status;
                }
            return SearchStatus::Exhausted;
        }
    }

    auto strip_rungs(const Graph & g, const Strip & s, const Budget & budget) -> vector<Path>
    {
        check_strip_shape(g, s);
        vector<Path> result;
        for_each_rung(g, s, budget, [&] (const Path & p) {
            result.push_back(p);
            return budget.max_results == 0 || result.size() < budget.max_results;
        });
        return result;
    }

    auto validate_strip(const Graph & g, const Strip & s, bool require_proper) -> StripValidation
    {
        check_strip_shape(g, s);
        if (require_proper && ! s.is_proper())
            return { false, s.a & s.b };
        auto all = s.vertices();
        VertexSet covered;
        for_each_rung(g, s, Budget::unlimited(), [&] (const Path & p) {
            covered |= p.vertex_set();
            return covered != all;
        });
        return { covered == all, all - covered };
    }

    auto JStripSystem::vertices() const -> VertexSet
    {
        VertexSet result;
        for (auto & m : m_edge)
            result |= m;
        return result;
    }

    auto JStripSystem::edge_strip(int e) const -> Strip
    {
        auto [u, v] = j.edge(e);
        auto & m = m_edge[e];
        return Strip{ m & m_vertex[u], m & m_vertex[v], m - (m_vertex[u] | m_vertex[v]) };
    }

    namespace
    {
        auto edge_name(const Tree & j, int e) -> string
        {
            return "edge " + std::to_string(e) + " (" + std::to_string(j.edge(e).first) + "-"
                + std::to_string(j.edge(e).second) + ")";
        }

        auto shared_end(const Tree & j, int e, int f) -> int
        {
            auto [a, b] = j.edge(e);
            auto [c, d] = j.edge(f);
            if (a == c || a == d)
                return a;
            if (b == c || b == d)
                return b;
            return -1;
        }
    }

    auto validate_jstrip(const Graph & g, const JStripSystem & m) -> Report
    {
        auto & j = m.j;
        if (static_cast<int>(m.m_edge.size()) != j.edge_count() || static_cast<int>(m.m_vertex.size()) != j.size())
            return Report::fail("shape", "set counts do not match J");
        if (j.size() < 3)
            return Report::fail("J has fewer than three vertices");
        for (auto & s : m.m_edge)
            if (! s.is_subset_of(g.vertices()))
                return Report::fail("range", to_string(s - g.vertices()));

        VertexSet seen;
        for (int e = 0 ; e < j.edge_count() ; ++e) {
            if (auto clash = seen & m.m_edge[e] ; clash.any())
                return Report::fail("edge sets pairwise disjoint", std::to_string(clash.first()));
            seen |= m.m_edge[e];
        }

        for (int u = 0 ; u < j.size() ; ++u) {
            VertexSet around;
            for (int e : j.incident(u))
                around |= m.m_edge[e];
            if (auto stray = m.m_vertex[u] - around ; stray.any())
                return Report::fail("M_u inside the union of M_uv", "vertex " + std::to_string(u) + ": "
                        + std::to_string(stray.first()));
        }

        for (int e = 0 ; e < j.edge_count() ; ++e) {
            auto s = m.edge_strip(e);
            if (s.a.empty() || s.b.empty())
                return Report::fail("edge strip", edge_name(j, e) + ": empty end");
            if (auto v = validate_strip(g, s) ; ! v.ok)
                return Report::fail("edge strip", edge_name(j, e) + ": not on a rung " + to_string(v.uncovered));
        }

        for (int e = 0 ; e < j.edge_count() ; ++e)
            for (int f = e + 1 ; f < j.edge_count() ; ++f) {
                int w = shared_end(j, e, f);
                auto & me = m.m_edge[e];
                auto & mf = m.m_edge[f];
                for (Vertex x = me.first() ; x != -1 ; x = me.next(x)) {
                    auto nbrs = g.neighbours(x) & mf;
                    auto expected = (w != -1 && m.m_vertex[w].test(x)) ? mf & m.m_vertex[w] : VertexSet{};
                    if (nbrs != expected) {
                        auto bad = nbrs ^ expected;
                        auto witness = std::to_string(x) + "-" + std::to_string(bad.first());
                        if (w == -1)
                            return Report::fail("disjoint edges anticomplete", witness);
                        return Report::fail("edges sharing an end meet only through M_u", witness);
                    }
                }
            }
        return Report::pass();
    }

    auto CrossEdgeContext::alpha_hubs() const -> VertexSet
    {
        VertexSet r;
        for (int u : alpha)
            r |= system.m_vertex[u];
        return r;
    }

    auto CrossEdgeContext::beta_hubs() const -> VertexSet
    {
        VertexSet r;
        for (int u : beta)
            r |= system.m_vertex[u];
        return r;
    }

    auto CrossEdgeContext::z(const Graph & g) const -> VertexSet
    {
        return g.neighbours(a) & g.neighbours(b);
    }

    auto validate_cross_edge(const Graph & g, const CrossEdgeContext & ctx) -> Report
    {
        if (auto r = validate_jstrip(g, ctx.system) ; ! r.ok)
            return r;
        auto & j = ctx.system.j;
        if (ctx.a < 0 || ctx.b < 0 || ctx.a >= g.size() || ctx.b >= g.size() || ctx.a == ctx.b)
            return Report::fail("cross edge ends out of range");
        if (! g.adjacent(ctx.a, ctx.b))
            return Report::fail("ab is an edge", std::to_string(ctx.a) + "-" + std::to_string(ctx.b));

        vector<int> side(j.size(), -1);
        for (int u : ctx.alpha)
            if (u >= 0 && u < j.size())
                side[u] = side[u] == -1 ? 0 : 2;
        for (int u : ctx.beta)
            if (u >= 0 && u < j.size())
                side[u] = side[u] == -1 ? 1 : 2;
        if (ctx.alpha.size() + ctx.beta.size() != j.leaves().size())
            return Report::fail("alpha and beta partition the leaves");
        for (int u = 0 ; u < j.size() ; ++u)
            if (j.is_leaf(u) != (side[u] == 0 || side[u] == 1))
                return Report::fail("alpha and beta partition the leaves", "vertex " + std::to_string(u));

        for (int u = 0 ; u < j.size() ; ++u)
            if (j.degree(u) == 2)
                return Report::fail("J has no vertex of degree two", "vertex " + std::to_string(u));

        for (int s = 0 ; s < j.size() ; ++s) {
            int in_alpha = 0, in_beta = 0;
            for (int t : j.neighbours(s)) {
                in_alpha += side[t] == 0;
                in_beta += side[t] == 1;
            }
            if (in_alpha > 1 || in_beta > 1)
                return Report::fail("at most one neighbour in alpha and one in beta", "vertex " + std::to_string(s));
        }

        auto vm = ctx.system.vertices();
        if (vm.test(ctx.a) || vm.test(ctx.b))
            return Report::fail("a, b outside V(M)");

        auto check_end = [&] (Vertex x, const VertexSet & hubs, const char * name) -> Report {
            auto nbrs = g.neighbours(x) & vm;
            if (nbrs != hubs) {
                auto bad = nbrs ^ hubs;
                return Report::fail(string(name) + " sees exactly its hubs in V(M)", std::to_string(bad.first()));
            }
            return Report::pass();
        };
        if (auto r = check_end(ctx.a, ctx.alpha_hubs(), "a") ; ! r.ok)
            return r;
        return check_end(ctx.b, ctx.beta_hubs(), "b");
    }

    namespace
    {
        auto bipartition_problem(const Tree & t, const vector<int> & side) -> optional<string>
        {
            if (t.size() < 3)
                return "tree has fewer than three vertices";
            if (t.leaves().size() < 3)
                return "tree has fewer than three leaves";
            if (static_cast<int>(side.size()) != t.size())
                return "bipartition does not cover the tree";
            for (int v = 0 ; v < t.size() ; ++v)
                if (side[v] != 0 && side[v] != 1)
                    return "bipartition labels must be 0 or 1";
            for (auto [u, v] : t.edges())
                if (side[u] == side[v])
                    return "bipartition is not a proper 2-colouring";

            for (int v = 0 ; v < t.size() ; ++v) {
                int missing[2] = { 0, 0 };
                for (int w : t.neighbours(v)) {
                    bool has[2] = { false, false };
                    vector<int> stack{ w };
                    vector<char> seen(t.size(), 0);
                    seen[v] = seen[w] = 1;
                    while (! stack.empty()) {
                        int x = stack.back();
                        stack.pop_back();
                        if (t.is_leaf(x))
                            has[side[x]] = true;
                        for (int y : t.neighbours(x))
                            if (! seen[y]) {
                                seen[y] = 1;
                                stack.push_back(y);
                            }
                    }
                    missing[0] += ! has[0];
                    missing[1] += ! has[1];
                }
                if (missing[0] > 1)
                    return "vertex " + std::to_string(v) + " has two components without an A' leaf";
                if (missing[1] > 1)
                    return "vertex " + std::to_string(v) + " has two components without a B' leaf";
            }
            return std::nullopt;
        }

        struct Shape
        {
            Tree j;
            vector<int> t_of_j;
            vector<vector<int>> branches;   ///< tree edges of each J edge
        };

        auto shape_of(const Tree & t) -> Shape
        {
            vector<int> j_of_t(t.size(), -1), t_of_j;
            for (int v = 0 ; v < t.size() ; ++v)
                if (t.degree(v) != 2) {
                    j_of_t[v] = static_cast<int>(t_of_j.size());
                    t_of_j.push_back(v);
                }
            vector<Edge> edges;
            vector<vector<int>> branches;
            for (int u : t_of_j)
                for (int e0 : t.incident(u)) {
                    vector<int> branch{ e0 };
                    int cur = t.other_end(e0, u), last = e0;
                    while (t.degree(cur) == 2) {
                        int next = t.incident(cur)[0] == last ? t.incident(cur)[1] : t.incident(cur)[0];
                        branch.push_back(next);
                        cur = t.other_end(next, cur);
                        last = next;
                    }
                    if (j_of_t[u] < j_of_t[cur]) {
                        edges.emplace_back(j_of_t[u], j_of_t[cur]);
                        branches.push_back(std::move(branch));
                    }
                }
            int size = static_cast<int>(t_of_j.size());
            return Shape{ Tree(size, std::move(edges)), std::move(t_of_j), std::move(branches) };
        }

        auto tree_context(const Tree & t, const vector<int> & side, const vector<Vertex> & vertex_of_edge,
                Vertex a, Vertex b) -> CrossEdgeContext
        {
            auto shape = shape_of(t);
            CrossEdgeContext ctx;
            ctx.a = a;
            ctx.b = b;
            ctx.system.j = shape.j;
            for (auto & branch : shape.branches) {
                VertexSet m;
                for (int e : branch)
                    m.set(vertex_of_edge[e]);
                ctx.system.m_edge.push_back(m);
            }
            for (int u = 0 ; u < shape.j.size() ; ++u) {
                VertexSet m;
                for (int e : t.incident(shape.t_of_j[u]))
                    m.set(vertex_of_edge[e]);
                ctx.system.m_vertex.push_back(m);
                if (shape.j.is_leaf(u))
                    (side[shape.t_of_j[u]] == 0 ? ctx.alpha : ctx.beta).push_back(u);
            }
            return ctx;
        }
    }

    auto valid_bipartition(const Tree & t, const vector<int> & side) -> bool
    {
        return ! bipartition_problem(t, side);
    }

    auto build_extended_tree_line_graph(const Tree & t, const vector<int> & side) -> ExtendedTreeLineGraph
    {
        if (auto problem = bipartition_problem(t, side))
            throw GraphError("build_extended_tree_line_graph: " + *problem);
        int m = t.edge_count();
        if (m + 2 > max_vertices)
            throw GraphError("build_extended_tree_line_graph: tree too large");
        Vertex a = m, b = m + 1;
        vector<Edge> edges{ { a, b } };
        for (int e = 0 ; e < m ; ++e)
            for (int f = e + 1 ; f < m ; ++f) {
                auto [p, q] = t.edge(e);
                auto [r, s] = t.edge(f);
                if (p == r || p == s || q == r || q == s)
                    edges.emplace_back(e, f);
            }
        for (int v : t.leaves())
            edges.emplace_back(t.incident(v)[0], side[v] == 0 ? a : b);
        vector<Vertex> identity(m);
        for (int e = 0 ; e < m ; ++e)
            identity[e] = e;
        return { Graph::from_edges(m + 2, edges), tree_context(t, side, identity, a, b) };
    }

    auto is_local(const VertexSet & x, const CrossEdgeContext & ctx) -> bool
    {
        auto & m = ctx.system;
        if (! x.is_subset_of(m.vertices().with(ctx.a).with(ctx.b)))
            throw GraphError("is_local: X must lie in V(M) ∪ {a, b}");
        for (auto & me : m.m_edge)
            if (x.is_subset_of(me))
                return true;
        for (auto & mu : m.m_vertex)
            if (x.is_subset_of(mu))
                return true;
        auto end_clause = [&] (Vertex in, Vertex out, const vector<int> & leaves) {
            if (! x.test(in) || x.test(out))
                return false;
            auto rest = x.without(in);
            return std::any_of(leaves.begin(), leaves.end(), [&] (int u) { return rest.is_subset_of(m.m_vertex[u]); });
        };
        return end_clause(ctx.a, ctx.b, ctx.alpha) || end_clause(ctx.b, ctx.a, ctx.beta);
    }

    auto nonlocal_pair(const VertexSet & x, const CrossEdgeContext & ctx) -> optional<std::pair<Vertex, Vertex>>
    {
        if ((x.test(ctx.a) && x.test(ctx.b)) || is_local(x, ctx))
            return std::nullopt;
        for (Vertex u = x.first() ; u != -1 ; u = x.next(u))
            for (Vertex v = x.next(u) ; v != -1 ; v = x.next(v))
                if (! is_local(VertexSet{ u, v }, ctx))
                    return std::pair{ u, v };
        return std::nullopt;
    }

    auto to_string(Maximality m) -> string
    {
        switch (m) {
            case Maximality::Unknown: return "unknown";
            case Maximality::LocallyMaximal: return "locally-maximal";
            case Maximality::CertifiedOptimal: return "certified-optimal";
        }
        return "?";
    }

    namespace
    {
        struct LineTree
        {
            Tree t;
            vector<Vertex> vertex_of_edge;
        };

        /// The tree T with L(T) = G[W], if there is one.
        auto line_graph_tree(const Graph & g, const VertexSet & w) -> optional<LineTree>
        {
            if (w.empty() || ! is_connected(g, w))
                return std::nullopt;
            vector<VertexSet> cliques;
            for (Vertex x = w.first() ; x != -1 ; x = w.next(x)) {
                auto later = g.neighbours(x) & w;
                for (Vertex y = later.next(x) ; y != -1 ; y = later.next(y)) {
                    auto k = (g.neighbours(x) & g.neighbours(y) & w).with(x).with(y);
                    if (std::find(cliques.begin(), cliques.end(), k) != cliques.end())
                        continue;
                    if (! is_clique(g, k))
                        return std::nullopt;
                    cliques.push_back(k);
                }
            }
            for (size_t i = 0 ; i < cliques.size() ; ++i)
                for (size_t k = i + 1 ; k < cliques.size() ; ++k)
                    if ((cliques[i] & cliques[k]).count() > 1)
                        return std::nullopt;

            int nodes = static_cast<int>(cliques.size());
            vector<Edge> edges;
            vector<Vertex> vertex_of_edge;
            for (Vertex x = w.first() ; x != -1 ; x = w.next(x)) {
                vector<int> ends;
                for (int c = 0 ; c < static_cast<int>(cliques.size()) ; ++c)
                    if (cliques[c].test(x))
                        ends.push_back(c);
                if (ends.size() > 2)
                    return std::nullopt;
                while (ends.size() < 2)
                    ends.push_back(nodes++);
                edges.emplace_back(ends[0], ends[1]);
                vertex_of_edge.push_back(x);
            }
            if (nodes != w.count() + 1)
                return std::nullopt;
            return LineTree{ Tree(nodes, std::move(edges)), std::move(vertex_of_edge) };
        }

        /// The cross-edge context if G[W ∪ {a, b}] is an extended tree line-graph with cross-edge ab.
        auto extended_tree_at(const Graph & g, const VertexSet & w, Vertex a, Vertex b) -> optional<CrossEdgeContext>
        {
            auto lt = line_graph_tree(g, w);
            if (! lt)
                return std::nullopt;
            auto & t = lt->t;
            if (t.size() < 3)
                return std::nullopt;
            auto colour = t.two_colouring();
            int colour_a = -1, colour_b = -1;
            VertexSet leaf_edges;
            for (int leaf : t.leaves()) {
                Vertex x = lt->vertex_of_edge[t.incident(leaf)[0]];
                leaf_edges.set(x);
                bool sa = g.adjacent(x, a), sb = g.adjacent(x, b);
                if (sa == sb)
                    return std::nullopt;
                int & slot = sa ? colour_a : colour_b;
                if (slot != -1 && slot != colour[leaf])
                    return std::nullopt;
                slot = colour[leaf];
            }
            if (colour_a != -1 && colour_a == colour_b)
                return std::nullopt;
            if ((g.neighbours(a) | g.neighbours(b)).intersects(w - leaf_edges))
                return std::nullopt;
            if (colour_a == -1)
                colour_a = 1 - colour_b;
            vector<int> side(t.size());
            for (int v = 0 ; v < t.size() ; ++v)
                side[v] = colour[v] == colour_a ? 0 : 1;
            if (bipartition_problem(t, side))
                return std::nullopt;
            return tree_context(t, side, lt->vertex_of_edge, a, b);
        }

        auto rooted_code(const Tree & t, int v, int parent) -> string
        {
            vector<string> kids;
            for (int w : t.neighbours(v))
                if (w != parent)
                    kids.push_back(rooted_code(t, w, v));
            std::sort(kids.begin(), kids.end());
            string r = "(";
            for (auto & k : kids)
                r += k;
            return r + ")";
        }

        auto tree_code(const Tree & t) -> string
        {
            string best;
            for (int v = 0 ; v < t.size() ; ++v) {
                auto c = rooted_code(t, v, -1);
                if (best.empty() || c < best)
                    best = c;
            }
            return best;
        }

        struct TreeCspSetup
        {
            const Graph & g;
            Vertex a, b;
            const Tree & j;
            vector<int> alpha, beta;
            vector<Vertex> vars;
        };

        /// Value 1 + 4e + p: edge e, p bit 0 for M_u, bit 1 for M_v (u, v the ends of e).
        auto in_hub(const Tree & j, int value, int t) -> bool
        {
            if (value == 0)
                return false;
            int e = (value - 1) / 4, p = (value - 1) % 4;
            auto [u, v] = j.edge(e);
            return (t == u && (p & 1)) || (t == v && (p & 2));
        }

        auto context_from(const TreeCspSetup & s, const vector<int> & val) -> CrossEdgeContext
        {
            CrossEdgeContext ctx;
            ctx.a = s.a;
            ctx.b = s.b;
            ctx.alpha = s.alpha;
            ctx.beta = s.beta;
            ctx.system.j = s.j;
            ctx.system.m_edge.assign(s.j.edge_count(), VertexSet{});
            ctx.system.m_vertex.assign(s.j.size(), VertexSet{});
            for (size_t i = 0 ; i < s.vars.size() ; ++i) {
                if (val[i] <= 0)
                    continue;
                int e = (val[i] - 1) / 4, p = (val[i] - 1) % 4;
                auto [u, v] = s.j.edge(e);
                ctx.system.m_edge[e].set(s.vars[i]);
                if (p & 1)
                    ctx.system.m_vertex[u].set(s.vars[i]);
                if (p & 2)
                    ctx.system.m_vertex[v].set(s.vars[i]);
            }
            return ctx;
        }

        auto make_tree_csp(const TreeCspSetup & s) -> detail::SmallCsp
        {
            detail::SmallCsp csp;
            int edges = s.j.edge_count(), values = 1 + 4 * edges;
            auto touches = [&] (int value, const vector<int> & leaves) {
                return std::any_of(leaves.begin(), leaves.end(), [&] (int t) { return in_hub(s.j, value, t); });
            };

            int n = static_cast<int>(s.vars.size());
            csp.adjacent.assign(n, vector<char>(n, 0));
            for (int i = 0 ; i < n ; ++i)
                for (int k = 0 ; k < n ; ++k)
                    csp.adjacent[i][k] = s.g.adjacent(s.vars[i], s.vars[k]);

            for (int i = 0 ; i < n ; ++i) {
                detail::SmallCsp::Mask d = 1;
                bool sa = s.g.adjacent(s.vars[i], s.a), sb = s.g.adjacent(s.vars[i], s.b);
                for (int x = 1 ; x < values ; ++x)
                    if (touches(x, s.alpha) == sa && touches(x, s.beta) == sb)
                        d |= detail::SmallCsp::Mask{ 1 } << x;
                csp.domain.push_back(d);
            }

            for (int adj = 0 ; adj < 2 ; ++adj) {
                csp.compat[adj].assign(values, 0);
                for (int x = 0 ; x < values ; ++x)
                    for (int y = 0 ; y < values ; ++y) {
                        bool ok = true;
                        if (x != 0 && y != 0) {
                            int e = (x - 1) / 4, f = (y - 1) / 4;
                            if (e != f) {
                                int w = shared_end(s.j, e, f);
                                ok = w == -1 ? ! adj : bool(adj) == (in_hub(s.j, x, w) && in_hub(s.j, y, w));
                            }
                        }
                        if (ok)
                            csp.compat[adj][x] |= detail::SmallCsp::Mask{ 1 } << y;
                    }
            }
            return csp;
        }

        /// Fixed move set: add one vertex anywhere, or thread an induced path through outside vertices into a strip.
        auto improve_locally(const Graph & g, CrossEdgeContext ctx) -> CrossEdgeContext
        {
            auto & j = ctx.system.j;
            auto try_accept = [&] (const CrossEdgeContext & next) {
                if (validate_cross_edge(g, next).ok) {
                    ctx = next;
                    return true;
                }
                return false;
            };
            for (bool changed = true ; changed ; ) {
                changed = false;
                auto outside = g.vertices() - ctx.system.vertices() - ctx.z(g);
                outside.reset(ctx.a);
                outside.reset(ctx.b);
                for (Vertex v = outside.first() ; v != -1 && ! changed ; v = outside.next(v))
                    for (int e = 0 ; e < j.edge_count() && ! changed ; ++e)
                        for (int p = 0 ; p < 4 && ! changed ; ++p) {
                            auto next = ctx;
                            next.system.m_edge[e].set(v);
                            if (p & 1)
                                next.system.m_vertex[j.edge(e).first].set(v);
                            if (p & 2)
                                next.system.m_vertex[j.edge(e).second].set(v);
                            changed = try_accept(next);
                        }
                for (int e = 0 ; e < j.edge_count() && ! changed ; ++e) {
                    auto & me = ctx.system.m_edge[e];
                    for (Vertex x = me.first() ; x != -1 && ! changed ; x = me.next(x)) {
                        auto starts = g.neighbours(x) & outside;
                        for (Vertex s = starts.first() ; s != -1 && ! changed ; s = starts.next(s)) {
                            auto path = shortest_path_to(g, s, me.without(x) & g.neighbours(outside), outside);
                            if (path.size() < 2)
                                continue;
                            auto next = ctx;
                            for (size_t i = 0 ; i + 1 < path.size() ; ++i)
                                next.system.m_edge[e].set(path[i]);
                            changed = try_accept(next);
                        }
                    }
                }
            }
            return ctx;
        }
    }

    auto search_tree_strip_system(const Graph & g, Vertex a, Vertex b, const Budget & budget) -> TreeStripSearchResult
    {
        if (a < 0 || b < 0 || a >= g.size() || b >= g.size() || a == b || ! g.adjacent(a, b))
            throw GraphError("search_tree_strip_system: ab must be an edge");

        TreeStripSearchResult result;
        auto spend = [&] {
            ++result.nodes;
            if (budget.max_nodes != 0 && result.nodes > budget.max_nodes)
                result.budget_hit = true;
            return ! result.budget_hit;
        };

        auto z = g.neighbours(a) & g.neighbours(b);
        auto pool = (g.vertices() - z).without(a).without(b);
        auto pool_list = pool.to_vector();
        constexpr int exhaustive_pool = 22;

        int best_edges = -1;
        optional<CrossEdgeContext> seed;
        std::map<string, CrossEdgeContext> shapes;
        bool stage_one_complete = false;

        if (static_cast<int>(pool_list.size()) <= exhaustive_pool) {
            std::uint64_t subsets = std::uint64_t{ 1 } << pool_list.size();
            auto ab_nbrs = g.neighbours(a) | g.neighbours(b);
            stage_one_complete = true;
            for (std::uint64_t mask = 1 ; mask < subsets ; ++mask) {
                if (! spend()) {
                    stage_one_complete = false;
                    break;
                }
                VertexSet w;
                for (size_t i = 0 ; i < pool_list.size() ; ++i)
                    if (mask >> i & 1)
                        w.set(pool_list[i]);
                if ((w & ab_nbrs).count() < 3)
                    continue;
                auto ctx = extended_tree_at(g, w, a, b);
                if (! ctx)
                    continue;
                int edges = ctx->system.j.edge_count();
                if (edges > best_edges) {
                    best_edges = edges;
                    shapes.clear();
                    seed.reset();
                }
                if (edges == best_edges) {
                    if (! seed || ctx->system.vertices().count() > seed->system.vertices().count())
                        seed = *ctx;
                    shapes.emplace(tree_code(ctx->system.j), *ctx);
                }
            }
        }

        if (! seed) {
            if (stage_one_complete)
                return result;
            auto enp = find_extended_near_prism(g, Edge{ a, b });
            if (! enp)
                return result;
            auto span = certificate_span(Certificate{ *enp }).without(a).without(b);
            seed = extended_tree_at(g, span, a, b);
            if (! seed)
                return result;
            shapes.emplace(tree_code(seed->system.j), *seed);
        }

        CrossEdgeContext best = *seed;
        bool certified = stage_one_complete && ! result.budget_hit;

        for (auto & [code, proto] : shapes) {
            if (! certified)
                break;
            auto & j = proto.system.j;
            if (1 + 4 * j.edge_count() > 64) {
                certified = false;
                break;
            }
            auto leaves = j.leaves();
            for (std::uint32_t mask = 0 ; mask < (1u << leaves.size()) && certified ; ++mask) {
                TreeCspSetup setup{ g, a, b, j, {}, {}, pool_list };
                for (size_t i = 0 ; i < leaves.size() ; ++i)
                    (mask >> i & 1 ? setup.alpha : setup.beta).push_back(leaves[i]);
                bool ok = true;
                for (int s = 0 ; s < j.size() && ok ; ++s) {
                    int na = 0, nb = 0;
                    for (int t : j.neighbours(s)) {
                        na += std::find(setup.alpha.begin(), setup.alpha.end(), t) != setup.alpha.end();
                        nb += std::find(setup.beta.begin(), setup.beta.end(), t) != setup.beta.end();
                    }
                    ok = na <= 1 && nb <= 1;
                }
                if (! ok)
                    continue;

                auto csp = make_tree_csp(setup);
                csp.best = best.system.vertices().count();
                csp.accept = [&] (const vector<int> & val) {
                    return validate_cross_edge(g, context_from(setup, val)).ok;
                };
                if (budget.max_nodes != 0)
                    csp.max_nodes = budget.max_nodes > result.nodes ? budget.max_nodes - result.nodes : 1;
                csp.run();
                result.nodes += csp.nodes;
                if (csp.budget_hit) {
                    result.budget_hit = true;
                    certified = false;
                }
                if (! csp.best_assignment.empty())
                    best = context_from(setup, csp.best_assignment);
            }
        }

        if (certified)
            result.maximality = Maximality::CertifiedOptimal;
        else {
            best = improve_locally(g, best);
            result.maximality = Maximality::LocallyMaximal;
        }
        result.context = std::move(best);
        return result;
    }

    auto attachment_set(const Graph & g, const CrossEdgeContext & ctx, const VertexSet & f) -> VertexSet
    {
        return g.neighbours(f) & ctx.system.vertices();
    }

    namespace
    {
        auto small_region(const Graph & g, const CrossEdgeContext & ctx) -> VertexSet
        {
            return (g.vertices() - ctx.system.vertices() - ctx.z(g)).without(ctx.a).without(ctx.b);
        }

        auto leaf_containing(const CrossEdgeContext & ctx, const VertexSet & x, const vector<int> & leaves)
            -> optional<int>
        {
            for (int t : leaves)
                if (x.is_subset_of(ctx.system.m_vertex[t]))
                    return t;
            return std::nullopt;
        }

        auto all_leaves(const CrossEdgeContext & ctx) -> vector<int>
        {
            return ctx.system.j.leaves();
        }

        auto verdict(bool holds, Maximality maximality, string witness = "", string detail = "") -> CheckResult
        {
            CheckResult r;
            r.outcome = holds ? Outcome::Holds : Outcome::Violated;
            r.caveat = ! holds && maximality != Maximality::CertifiedOptimal;
            if (! holds) {
                r.witness = std::move(witness);
                r.detail = std::move(detail);
            }
            return r;
        }
    }

    auto classify_small_subgraph(const Graph & g, const CrossEdgeContext & ctx, const VertexSet & f,
            Maximality maximality) -> LocalityVerdict
    {
        LocalityVerdict v;
        if (f.empty())
            return v;
        if (! f.is_subset_of(g.vertices()))
            throw GraphError("classify_small_subgraph: vertex out of range");
        if (! f.is_subset_of(small_region(g, ctx)))
            throw GraphError("classify_small_subgraph: F meets Z ∪ V(M) ∪ {a, b}");
        if (! is_connected(g, f))
            throw GraphError("classify_small_subgraph: F is not connected");

        auto nf = g.neighbours(f);
        v.x = attachment_set(g, ctx, f);
        v.touches = int(nf.test(ctx.a)) + int(nf.test(ctx.b));
        if (v.touches < 2)
            v.check = verdict(is_local(v.x, ctx), maximality, to_string(f), "X(F) = " + to_string(v.x) + " is not local");
        else {
            v.leaf = leaf_containing(ctx, v.x, all_leaves(ctx));
            v.check = verdict(v.leaf.has_value(), maximality, to_string(f),
                    "X(F) = " + to_string(v.x) + " is in no leaf hub");
        }
        return v;
    }

    auto major_vertices(const Graph & g, const CrossEdgeContext & ctx) -> VertexSet
    {
        auto vm = ctx.system.vertices();
        auto external = [&] (Vertex y, Vertex end) {
            auto blocked = g.closed_neighbours(end);
            return ! shortest_path_to(g, y, vm - blocked, g.vertices() - blocked).empty();
        };
        VertexSet y;
        auto z = ctx.z(g);
        for (Vertex v = z.first() ; v != -1 ; v = z.next(v))
            if (external(v, ctx.a) && external(v, ctx.b))
                y.set(v);
        return y;
    }

    auto check_major_clique(const Graph & g, const CrossEdgeContext & ctx, Maximality maximality) -> CheckResult
    {
        auto y = major_vertices(g, ctx);
        for (Vertex u = y.first() ; u != -1 ; u = y.next(u)) {
            auto non = y - g.closed_neighbours(u);
            if (non.any())
                return verdict(false, maximality, std::to_string(u) + "," + std::to_string(non.first()),
                        "major vertices " + to_string(y) + " are not a clique");
        }
        return verdict(true, maximality);
    }

    auto check_funnies(const Graph & g, const CrossEdgeContext & ctx, Maximality maximality) -> vector<CheckResult>
    {
        auto minor = ctx.z(g) - major_vertices(g, ctx);
        vector<CheckResult> results;
        for (auto & f : components(g, small_region(g, ctx))) {
            if (! g.neighbours(f).intersects(minor))
                continue;
            auto x = attachment_set(g, ctx, f);
            results.push_back(verdict(leaf_containing(ctx, x, all_leaves(ctx)).has_value(), maximality,
                        to_string(f), "X(F) = " + to_string(x) + " is in no leaf hub"));
        }
        return results;
    }

    auto for_each_connected_subset(const Graph & g, const VertexSet & s, int max_size,
            const std::function<bool (const VertexSet &)> & f) -> void
    {
        bool stop = false;
        std::function<void (const VertexSet &, VertexSet, VertexSet)> grow =
            [&] (const VertexSet & sub, VertexSet ext, VertexSet forbidden) {
                if (stop)
                    return;
                if (! f(sub)) {
                    stop = true;
                    return;
                }
                if (max_size != 0 && sub.count() >= max_size)
                    return;
                while (ext.any() && ! stop) {
                    Vertex w = ext.first();
                    ext.reset(w);
                    auto next_sub = sub.with(w);
                    grow(next_sub, ext | ((g.neighbours(w) & s) - next_sub - forbidden), forbidden.with(w));
                    forbidden.set(w);
                }
            };
        VertexSet below;
        for (Vertex v = s.first() ; v != -1 && ! stop ; v = s.next(v)) {
            below.set(v);
            grow(VertexSet{ v }, (g.neighbours(v) & s) - below, below);
        }
    }

    auto check_splendid_refinements(const Graph & g, const CrossEdgeContext & ctx, Maximality maximality) -> CheckResult
    {
        if (! is_splendid(g, ctx.a).ok)
            return {};
        auto & m = ctx.system;
        auto & j = m.j;
        auto z = ctx.z(g);
        auto minor = z - major_vertices(g, ctx);
        auto region = small_region(g, ctx);

        if (auto seen = g.neighbours(ctx.a) & region ; seen.any())
            return verdict(false, maximality, std::to_string(seen.first()), "a has a neighbour in a small subgraph");

        auto vm = m.vertices();
        for (Vertex x = vm.first() ; x != -1 ; x = vm.next(x))
            if (g.neighbours(x).intersects(minor) && ! leaf_containing(ctx, VertexSet{ x }, ctx.beta))
                return verdict(false, maximality, std::to_string(x),
                        "vertex of V(M) with a neighbour in Z \\ Y is in no beta hub");

        for (int t : ctx.alpha) {
            int e = j.incident(t)[0];
            int s = j.other_end(e, t);
            if (auto both = m.m_vertex[s] & m.m_vertex[t] ; both.any())
                return verdict(false, maximality, std::to_string(both.first()), "M_s and M_t meet at an alpha leaf edge");
        }

        vector<int> not_alpha;
        for (int t = 0 ; t < j.size() ; ++t)
            if (std::find(ctx.alpha.begin(), ctx.alpha.end(), t) == ctx.alpha.end())
                not_alpha.push_back(t);
        auto touchers = minor.with(ctx.b);
        constexpr int subset_cap = 8;

        CheckResult failure;
        bool failed = false;
        for (auto & comp : components(g, region))
            for_each_connected_subset(g, comp, comp.count() <= 12 ? 0 : subset_cap, [&] (const VertexSet & f) {
                auto x = attachment_set(g, ctx, f);
                bool ok;
                if (g.neighbours(f).intersects(touchers))
                    ok = leaf_containing(ctx, x, ctx.beta).has_value();
                else
                    ok = std::any_of(m.m_edge.begin(), m.m_edge.end(), [&] (const VertexSet & me) { return x.is_subset_of(me); })
                        || leaf_containing(ctx, x, not_alpha).has_value();
                if (! ok) {
                    failed = true;
                    failure = verdict(false, maximality, to_string(f), "X = " + to_string(x) + " violates the small subgraph clause");
                }
                return ok;
            });
        return failed ? failure : verdict(true, maximality);
    }

    auto check_skewpyr(const Graph & g, const vector<Vertex> & hole, Vertex a, Vertex b, bool ehf_known) -> Outcome
    {
        for (auto v : { a, b })
            if (v < 0 || v >= g.size())
                throw GraphError("check_skewpyr: vertex out of range");
        if (! is_hole(g, hole))
            throw GraphError("check_skewpyr: not a hole");
        auto h = VertexSet::from(hole);
        if (h.test(a) || h.test(b) || a == b || g.adjacent(a, b))
            return Outcome::Inapplicable;
        auto n = hole.size();
        VertexSet ends{ hole.front(), hole.back() };
        auto na = g.neighbours(a) & h, nb = g.neighbours(b) & h;
        if (na.count() < 3 || nb.count() < 3 || ! ends.is_subset_of(na) || ! ends.is_subset_of(nb))
            return Outcome::Inapplicable;
        if (! ehf_known && ! is_even_hole_free(g))
            return Outcome::Inapplicable;
        VertexSet left{ hole[n - 2], hole[n - 1], hole[0] }, right{ hole[n - 1], hole[0], hole[1] };
        bool holds = (na == left && nb == right) || (na == right && nb == left);
        return holds ? Outcome::Holds : Outcome::Violated;
    }
}
