#include <ehf/canonical.hh>

#include <algorithm>
#include <numeric>
#include <set>

using std::vector;

namespace ehf
{
    namespace
    {
        /// Refines an ordered partition (cell[v] = rank of v's cell) to the
        /// coarsest equitable one below it. Returns the number of cells.
        auto refine(const Graph & g, vector<int> & cell) -> int
        {
            int n = g.size();
            int k = n == 0 ? 0 : *std::max_element(cell.begin(), cell.end()) + 1;
            vector<vector<int>> sig(n);
            vector<int> idx(n);
            while (true) {
                for (int v = 0 ; v < n ; ++v) {
                    sig[v].assign(k + 1, 0);
                    sig[v][0] = cell[v];
                    g.neighbours(v).for_each([&] (Vertex u) { ++sig[v][1 + cell[u]]; });
                }
                std::iota(idx.begin(), idx.end(), 0);
                std::sort(idx.begin(), idx.end(), [&] (int x, int y) { return sig[x] < sig[y]; });
                int next = 0;
                for (int i = 0 ; i < n ; ++i) {
                    if (i > 0 && sig[idx[i]] != sig[idx[i - 1]])
                        ++next;
                    cell[idx[i]] = next;
                }
                int newk = n == 0 ? 0 : next + 1;
                if (newk == k)
                    return k;
                k = newk;
            }
        }

        auto initial_cells(int n, const vector<int> & colours) -> vector<int>
        {
            vector<int> cell(n, 0);
            if (colours.empty())
                return cell;
            if (static_cast<int>(colours.size()) != n)
                throw GraphError("colouring has " + std::to_string(colours.size()) + " entries for "
                        + std::to_string(n) + " vertices");
            auto sorted = colours;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (int v = 0 ; v < n ; ++v)
                cell[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), colours[v]) - sorted.begin());
            return cell;
        }

        struct UnionFind
        {
            vector<int> parent;

            explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

            auto find(int x) -> int
            {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            }

            auto unite(int x, int y) -> void { parent[find(x)] = find(y); }
        };

        class Canoniser
        {
            private:
                const Graph & _g;
                int _n;
                bool _have = false;
                vector<VertexSet> _best;
                vector<int> _best_order;
                vector<vector<int>> _autos;
                vector<int> _fixed;

                auto leaf(const vector<int> & cell) -> void
                {
                    vector<int> order(_n);
                    for (int v = 0 ; v < _n ; ++v)
                        order[cell[v]] = v;
                    vector<VertexSet> cert(_n);
                    for (int i = 0 ; i < _n ; ++i)
                        _g.neighbours(order[i]).for_each([&] (Vertex u) { cert[i].set(cell[u]); });
                    if (! _have || cert < _best) {
                        _have = true;
                        _best = std::move(cert);
                        _best_order = std::move(order);
                    }
                    else if (cert == _best) {
                        vector<int> perm(_n);
                        for (int i = 0 ; i < _n ; ++i)
                            perm[_best_order[i]] = order[i];
                        _autos.push_back(std::move(perm));
                    }
                }

                auto pruned(int v, const vector<int> & tried) -> bool
                {
                    if (tried.empty() || _autos.empty())
                        return false;
                    UnionFind uf(_n);
                    for (auto & p : _autos) {
                        bool fixes = std::all_of(_fixed.begin(), _fixed.end(), [&] (int x) { return p[x] == x; });
                        if (fixes)
                            for (int x = 0 ; x < _n ; ++x)
                                uf.unite(x, p[x]);
                    }
                    return std::any_of(tried.begin(), tried.end(), [&] (int w) { return uf.find(w) == uf.find(v); });
                }

            public:
                Canoniser(const Graph & g) : _g(g), _n(g.size()) {}

                auto search(const vector<int> & cell, int k) -> void
                {
                    if (k == _n) {
                        leaf(cell);
                        return;
                    }
                    vector<int> size(k, 0);
                    for (int c : cell)
                        ++size[c];
                    int target = static_cast<int>(std::find_if(size.begin(), size.end(), [] (int s) { return s > 1; }) - size.begin());
                    vector<int> tried;
                    for (int v = 0 ; v < _n ; ++v) {
                        if (cell[v] != target || pruned(v, tried))
                            continue;
                        tried.push_back(v);
                        auto child = cell;
                        for (int u = 0 ; u < _n ; ++u)
                            if (child[u] > target || (child[u] == target && u != v))
                                ++child[u];
                        int ck = refine(_g, child);
                        _fixed.push_back(v);
                        search(child, ck);
                        _fixed.pop_back();
                    }
                }

                auto best_order() const -> const vector<int> & { return _best_order; }
        };

        auto relabel(const Graph & g, const vector<int> & order) -> CanonicalForm
        {
            int n = g.size();
            CanonicalForm cf;
            cf.order = order;
            cf.labelling.assign(n, -1);
            for (int i = 0 ; i < n ; ++i)
                cf.labelling[order[i]] = i;
            vector<VertexSet> rows(n);
            for (int i = 0 ; i < n ; ++i)
                g.neighbours(order[i]).for_each([&] (Vertex u) { rows[i].set(cf.labelling[u]); });
            cf.graph = Graph::from_rows(std::move(rows));
            return cf;
        }

        auto pack(const Graph & g) -> vector<std::uint64_t>
        {
            int n = g.size();
            vector<std::uint64_t> key(1, static_cast<std::uint64_t>(n));
            int bit = 64;
            for (int j = 1 ; j < n ; ++j)
                for (int i = 0 ; i < j ; ++i) {
                    if (bit == 64) {
                        key.push_back(0);
                        bit = 0;
                    }
                    if (g.adjacent(i, j))
                        key.back() |= std::uint64_t{ 1 } << bit;
                    ++bit;
                }
            return key;
        }
    }

    auto canonical_form(const Graph & g, const vector<int> & colours) -> CanonicalForm
    {
        auto cell = initial_cells(g.size(), colours);
        int k = refine(g, cell);
        Canoniser c(g);
        c.search(cell, k);
        return relabel(g, c.best_order());
    }

    auto canonical_key(const Graph & g) -> vector<std::uint64_t>
    {
        return pack(canonical_form(g).graph);
    }

    auto are_isomorphic(const Graph & g, const Graph & h) -> bool
    {
        if (g.size() != h.size() || g.edge_count() != h.edge_count())
            return false;
        return canonical_form(g).graph == canonical_form(h).graph;
    }

    auto same_orbit(const Graph & g, Vertex u, Vertex v) -> bool
    {
        if (u == v)
            return true;
        if (g.degree(u) != g.degree(v))
            return false;
        vector<int> cu(g.size(), 1), cv(g.size(), 1);
        cu[u] = 0;
        cv[v] = 0;
        return canonical_form(g, cu).graph == canonical_form(g, cv).graph;
    }

    auto canonical_children(const Graph & p, const std::function<bool (const Graph &)> & keep) -> vector<Graph>
    {
        int m = p.size();
        if (m >= 16)
            throw GraphError("canonical enumeration is limited to 16 vertices");
        vector<Graph> children;
        std::set<vector<std::uint64_t>> seen;
        for (std::uint64_t s = 0 ; s < (std::uint64_t{ 1 } << m) ; ++s) {
            auto child = p.with_vertex(VertexSet::from_word(s));
            if (keep && ! keep(child))
                continue;
            Vertex fresh = m;
            auto cell = initial_cells(m + 1, {});
            int k = refine(child, cell);
            Canoniser c(child);
            c.search(cell, k);
            Vertex last = c.best_order().back();
            if (last != fresh && (cell[last] != cell[fresh] || ! same_orbit(child, fresh, last)))
                continue;
            auto cf = relabel(child, c.best_order());
            if (seen.insert(pack(cf.graph)).second)
                children.push_back(std::move(cf.graph));
        }
        return children;
    }

    namespace
    {
        auto descend(const Graph & p, int n, const GraphVisitor & visit, const std::function<bool (const Graph &)> & keep) -> bool
        {
            if (p.size() == n)
                return visit(p);
            for (auto & c : canonical_children(p, keep))
                if (! descend(c, n, visit, keep))
                    return false;
            return true;
        }
    }

    auto for_each_canonical_graph(int n, const GraphVisitor & visit, const std::function<bool (const Graph &)> & keep) -> void
    {
        if (n < 0 || n > 16)
            throw GraphError("canonical enumeration supports 0..16 vertices, not " + std::to_string(n));
        Graph empty(0);
        if (keep && ! keep(empty))
            return;
        descend(empty, n, visit, keep);
    }
}
