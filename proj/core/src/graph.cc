#include <ehf/graph.hh>

#include <algorithm>
#include <deque>
#include <sstream>

using std::string;
using std::to_string;
using std::vector;

namespace ehf
{
    auto to_string(const VertexSet & s) -> string
    {
        string result = "{";
        bool first = true;
        s.for_each([&] (Vertex v) {
            if (! first)
                result += ",";
            first = false;
            result += std::to_string(v);
        });
        return result + "}";
    }

    Graph::Graph(int n, vector<VertexSet> adj) :
        _n(n),
        _adj(std::move(adj))
    {
    }

    Graph::Graph(int n) :
        _n(n),
        _adj(n)
    {
        if (n < 0 || n > max_vertices)
            throw GraphError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    }

    auto Graph::from_edges(int n, const vector<Edge> & edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw GraphError("edge " + std::to_string(u) + " " + std::to_string(v) + " has an out-of-range vertex");
            if (u == v)
                throw GraphError("self-loop at vertex " + std::to_string(u));
            if (g._adj[u].test(v))
                throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            g._adj[u].set(v);
            g._adj[v].set(u);
        }
        return g;
    }

    auto Graph::from_rows(vector<VertexSet> rows) -> Graph
    {
        int n = static_cast<int>(rows.size());
        Graph g(n);
        auto all = VertexSet::range(n);
        for (int v = 0 ; v < n ; ++v) {
            if (rows[v].test(v))
                throw GraphError("self-loop at vertex " + std::to_string(v));
            if (! rows[v].is_subset_of(all))
                throw GraphError("row " + std::to_string(v) + " has an out-of-range vertex");
            rows[v].for_each([&] (Vertex u) {
                if (! rows[u].test(v))
                    throw GraphError("asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
            });
        }
        return Graph(n, std::move(rows));
    }

    auto Graph::neighbours(const VertexSet & s) const -> VertexSet
    {
        VertexSet result;
        s.for_each([&] (Vertex v) { result |= _adj[v]; });
        return result - s;
    }

    auto Graph::closed_neighbours(const VertexSet & s) const -> VertexSet
    {
        return neighbours(s) | s;
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (auto & row : _adj)
            twice += row.count();
        return twice / 2;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (int u = 0 ; u < _n ; ++u)
            _adj[u].for_each([&] (Vertex v) {
                if (u < v)
                    result.emplace_back(u, v);
            });
        return result;
    }

    auto Graph::with_edge_toggled(Vertex u, Vertex v) const -> Graph
    {
        if (u == v || u < 0 || v < 0 || u >= _n || v >= _n)
            throw GraphError("cannot toggle pair " + std::to_string(u) + " " + std::to_string(v));
        auto adj = _adj;
        adj[u].toggle(v);
        adj[v].toggle(u);
        return Graph(_n, std::move(adj));
    }

    auto Graph::with_vertex(const VertexSet & nbrs) const -> Graph
    {
        if (_n + 1 > max_vertices)
            throw GraphError("vertex cap exceeded");
        if (! nbrs.is_subset_of(vertices()))
            throw GraphError("new vertex attaches outside the graph");
        auto adj = _adj;
        adj.push_back(nbrs);
        nbrs.for_each([&] (Vertex v) { adj[v].set(_n); });
        return Graph(_n + 1, std::move(adj));
    }

    auto induced(const Graph & g, const VertexSet & s) -> InducedSubgraph
    {
        if (! s.is_subset_of(g.vertices()))
            throw GraphError("induced: vertex set " + to_string(s) + " is not inside the graph");
        auto to_parent = s.to_vector();
        int k = static_cast<int>(to_parent.size());
        vector<int> to_child(g.size(), -1);
        for (int i = 0 ; i < k ; ++i)
            to_child[to_parent[i]] = i;

        vector<VertexSet> rows(k);
        for (int i = 0 ; i < k ; ++i)
            (g.neighbours(to_parent[i]) & s).for_each([&] (Vertex u) { rows[i].set(to_child[u]); });

        return InducedSubgraph{ Graph::from_rows(std::move(rows)), std::move(to_parent) };
    }

    auto component_of(const Graph & g, const VertexSet & s, Vertex v) -> VertexSet
    {
        VertexSet seen, frontier;
        seen.set(v);
        frontier.set(v);
        while (frontier.any()) {
            VertexSet next;
            frontier.for_each([&] (Vertex u) { next |= g.neighbours(u); });
            next &= s;
            next -= seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    auto components(const Graph & g, const VertexSet & s) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        auto remaining = s;
        while (remaining.any()) {
            auto c = component_of(g, s, remaining.first());
            result.push_back(c);
            remaining -= c;
        }
        return result;
    }

    auto is_connected(const Graph & g, const VertexSet & s) -> bool
    {
        if (s.empty())
            return true;
        return component_of(g, s, s.first()) == s;
    }

    auto is_clique(const Graph & g, const VertexSet & s) -> bool
    {
        bool ok = true;
        s.for_each([&] (Vertex v) {
            if (ok && ! (s.without(v)).is_subset_of(g.neighbours(v)))
                ok = false;
        });
        return ok;
    }

    auto is_stable(const Graph & g, const VertexSet & s) -> bool
    {
        bool ok = true;
        s.for_each([&] (Vertex v) {
            if (ok && g.neighbours(v).intersects(s))
                ok = false;
        });
        return ok;
    }

    auto to_string(Adjacency a) -> string
    {
        switch (a) {
            case Adjacency::Complete:      return "complete";
            case Adjacency::Anticomplete:  return "anticomplete";
            case Adjacency::Mixed:         return "mixed";
            case Adjacency::VacuouslyBoth: return "vacuously-both";
        }
        return "?";
    }

    auto is_complete_to(const Graph & g, const VertexSet & a, const VertexSet & b) -> bool
    {
        bool ok = true;
        a.for_each([&] (Vertex v) {
            if (ok && ! b.is_subset_of(g.neighbours(v)))
                ok = false;
        });
        return ok;
    }

    auto is_anticomplete_to(const Graph & g, const VertexSet & a, const VertexSet & b) -> bool
    {
        bool ok = true;
        a.for_each([&] (Vertex v) {
            if (ok && g.neighbours(v).intersects(b))
                ok = false;
        });
        return ok;
    }

    auto adjacency_between(const Graph & g, const VertexSet & a, const VertexSet & b) -> Adjacency
    {
        if (a.intersects(b))
            throw GraphError("adjacency_between: sets " + to_string(a) + " and " + to_string(b) + " overlap");
        if (a.empty() || b.empty())
            return Adjacency::VacuouslyBoth;
        if (is_complete_to(g, a, b))
            return Adjacency::Complete;
        if (is_anticomplete_to(g, a, b))
            return Adjacency::Anticomplete;
        return Adjacency::Mixed;
    }

    auto Path::interior() const -> VertexSet
    {
        VertexSet result;
        for (std::size_t i = 1 ; i + 1 < verts.size() ; ++i)
            result.set(verts[i]);
        return result;
    }

    auto is_path(const Graph & g, const Path & p) -> bool
    {
        if (p.verts.empty())
            return false;
        VertexSet seen;
        for (std::size_t i = 0 ; i < p.verts.size() ; ++i) {
            auto v = p.verts[i];
            if (v < 0 || v >= g.size() || seen.test(v))
                return false;
            seen.set(v);
            if (i > 0 && ! g.adjacent(p.verts[i - 1], v))
                return false;
        }
        return true;
    }

    auto is_induced_path(const Graph & g, const Path & p) -> bool
    {
        if (! is_path(g, p))
            return false;
        auto span = p.vertex_set();
        for (std::size_t i = 0 ; i < p.verts.size() ; ++i) {
            VertexSet expected;
            if (i > 0)
                expected.set(p.verts[i - 1]);
            if (i + 1 < p.verts.size())
                expected.set(p.verts[i + 1]);
            if ((g.neighbours(p.verts[i]) & span) != expected)
                return false;
        }
        return true;
    }

    auto is_hole(const Graph & g, const vector<Vertex> & cycle) -> bool
    {
        auto k = cycle.size();
        if (k < 4)
            return false;
        VertexSet span;
        for (auto v : cycle) {
            if (v < 0 || v >= g.size() || span.test(v))
                return false;
            span.set(v);
        }
        for (std::size_t i = 0 ; i < k ; ++i) {
            VertexSet expected{ cycle[(i + k - 1) % k], cycle[(i + 1) % k] };
            if ((g.neighbours(cycle[i]) & span) != expected)
                return false;
        }
        return true;
    }

    auto to_string(SearchStatus s) -> string
    {
        switch (s) {
            case SearchStatus::Exhausted: return "exhausted";
            case SearchStatus::Stopped:   return "stopped";
            case SearchStatus::BudgetHit: return "budget";
        }
        return "?";
    }

    namespace
    {
        struct InducedPathSearch
        {
            const Graph & g;
            Vertex target;
            VertexSet allowed;
            const Budget & budget;
            const PathVisitor & visit;
            Path path;
            std::uint64_t nodes = 0, results = 0;

            // blocked holds N[p_0..p_{k-1}], i.e. everything adjacent to or on the
            // path except via the last vertex.
            auto go(const VertexSet & blocked) -> SearchStatus
            {
                if (budget.max_nodes && ++nodes > budget.max_nodes)
                    return SearchStatus::BudgetHit;

                Vertex last = path.verts.back();
                auto candidates = g.neighbours(last) - blocked;
                if (candidates.test(target)) {
                    path.verts.push_back(target);
                    bool keep_going = visit(path);
                    path.verts.pop_back();
                    if (! keep_going)
                        return SearchStatus::Stopped;
                    if (budget.max_results && ++results >= budget.max_results)
                        return SearchStatus::BudgetHit;
                    // any longer path would have target adjacent to a non-final vertex
                    return SearchStatus::Exhausted;
                }

                candidates &= allowed;
                auto next_blocked = blocked | g.closed_neighbours(last);
                if (next_blocked.test(target))
                    return SearchStatus::Exhausted;

                for (Vertex w = candidates.first() ; w != -1 ; w = candidates.next(w)) {
                    path.verts.push_back(w);
                    auto status = go(next_blocked);
                    path.verts.pop_back();
                    if (status != SearchStatus::Exhausted)
                        return status;
                }
                return SearchStatus::Exhausted;
            }
        };
    }

    auto enumerate_induced_paths(const Graph & g, Vertex u, Vertex v, const VertexSet & allowed,
            const Budget & budget, const PathVisitor & visit) -> SearchStatus
    {
        if (u == v)
            throw GraphError("enumerate_induced_paths: ends must differ");
        if (u < 0 || v < 0 || u >= g.size() || v >= g.size())
            throw GraphError("enumerate_induced_paths: end out of range");

        InducedPathSearch search{ g, v, (allowed & g.vertices()).without(u).without(v), budget, visit, {}, 0, 0 };
        search.path.verts.push_back(u);
        return search.go(VertexSet{});
    }

    auto induced_paths(const Graph & g, Vertex u, Vertex v, const VertexSet & allowed, const Budget & budget)
        -> vector<Path>
    {
        vector<Path> result;
        enumerate_induced_paths(g, u, v, allowed, budget, [&] (const Path & p) {
            result.push_back(p);
            return true;
        });
        return result;
    }

    auto shortest_path_to(const Graph & g, Vertex u, const VertexSet & targets, const VertexSet & allowed)
        -> vector<Vertex>
    {
        if (targets.test(u))
            return { u };
        vector<Vertex> parent(g.size(), -1);
        VertexSet seen{ u };
        std::deque<Vertex> queue{ u };
        while (! queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            auto next = g.neighbours(x) - seen;
            for (Vertex y = next.first() ; y != -1 ; y = next.next(y)) {
                if (targets.test(y)) {
                    vector<Vertex> path{ y };
                    for (Vertex z = x ; z != -1 ; z = parent[z])
                        path.push_back(z);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (allowed.test(y)) {
                    seen.set(y);
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        return {};
    }

    Tree::Tree(int n, vector<Edge> edges) :
        _n(n),
        _edges(std::move(edges)),
        _incident(n)
    {
        if (n < 1)
            throw GraphError("a tree needs at least one vertex");
        if (static_cast<int>(_edges.size()) != n - 1)
            throw GraphError("a tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) + " edges");
        for (int e = 0 ; e < edge_count() ; ++e) {
            auto [u, v] = _edges[e];
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw GraphError("bad tree edge " + std::to_string(u) + " " + std::to_string(v));
            _incident[u].push_back(e);
            _incident[v].push_back(e);
        }
        // connected + n-1 edges => tree
        vector<bool> seen(n, false);
        vector<int> stack{ 0 };
        seen[0] = true;
        int count = 1;
        while (! stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int e : _incident[x]) {
                int y = other_end(e, x);
                if (! seen[y]) {
                    seen[y] = true;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
        if (count != n)
            throw GraphError("tree edges do not connect all vertices");
    }

    auto Tree::other_end(int e, int v) const -> int
    {
        auto [x, y] = _edges[e];
        return x == v ? y : x;
    }

    auto Tree::neighbours(int v) const -> vector<int>
    {
        vector<int> result;
        for (int e : _incident[v])
            result.push_back(other_end(e, v));
        return result;
    }

    auto Tree::leaves() const -> vector<int>
    {
        vector<int> result;
        for (int v = 0 ; v < _n ; ++v)
            if (is_leaf(v))
                result.push_back(v);
        return result;
    }

    auto Tree::edge_between(int u, int v) const -> int
    {
        for (int e : _incident[u])
            if (other_end(e, u) == v)
                return e;
        return -1;
    }

    auto Tree::path_between(int u, int v) const -> vector<int>
    {
        vector<int> parent(_n, -1);
        vector<bool> seen(_n, false);
        std::deque<int> queue{ u };
        seen[u] = true;
        while (! queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (x == v)
                break;
            for (int y : neighbours(x))
                if (! seen[y]) {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push_back(y);
                }
        }
        vector<int> path;
        for (int x = v ; x != -1 ; x = parent[x])
            path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
    }

    auto Tree::two_colouring() const -> vector<int>
    {
        vector<int> colour(_n, -1);
        colour[0] = 0;
        vector<int> stack{ 0 };
        while (! stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : neighbours(x))
                if (colour[y] == -1) {
                    colour[y] = 1 - colour[x];
                    stack.push_back(y);
                }
        }
        return colour;
    }

    auto Tree::as_graph() const -> Graph
    {
        return Graph::from_edges(_n, _edges);
    }
}
