#include <ehf/canonical.hh>
#include <ehf/generators.hh>

#include <map>
#include <mutex>

using std::vector;

namespace ehf
{
    auto unlabelled_trees(int edges) -> vector<Tree>
    {
        vector<Tree> out;
        auto acyclic = [] (const Graph & g) {
            return g.edge_count() + static_cast<int>(components(g, g.vertices()).size()) == g.size();
        };
        for_each_canonical_graph(edges + 1, [&] (const Graph & g) {
            if (g.edge_count() == edges)
                out.emplace_back(g.size(), g.edges());
            return true;
        }, acyclic);
        return out;
    }

    auto random_tree(int n, std::mt19937_64 & rng) -> Tree
    {
        if (n < 2)
            throw GraphError("random trees need at least two vertices");
        if (n == 2)
            return Tree(2, { { 0, 1 } });
        vector<int> prufer(n - 2), degree(n, 1);
        for (auto & x : prufer) {
            x = static_cast<int>(rng() % n);
            ++degree[x];
        }
        vector<Edge> edges;
        for (int x : prufer)
            for (int leaf = 0 ; leaf < n ; ++leaf)
                if (degree[leaf] == 1) {
                    edges.emplace_back(leaf, x);
                    --degree[leaf];
                    --degree[x];
                    break;
                }
        vector<int> last;
        for (int v = 0 ; v < n ; ++v)
            if (degree[v] == 1)
                last.push_back(v);
        edges.emplace_back(last[0], last[1]);
        return Tree(n, edges);
    }

    auto tree_colourings(int max_edges) -> vector<TreeColouring>
    {
        static std::mutex lock;
        static std::map<int, vector<TreeColouring>> cache;
        std::lock_guard<std::mutex> guard(lock);
        if (auto it = cache.find(max_edges) ; it != cache.end())
            return it->second;
        auto & out = cache[max_edges];
        for (int e = 2 ; e <= max_edges ; ++e)
            for (auto & t : unlabelled_trees(e)) {
                if (t.leaves().size() < 3)
                    continue;
                auto side = t.two_colouring();
                out.push_back({ t, side });
                for (auto & s : side)
                    s = 1 - s;
                out.push_back({ t, side });
            }
        return out;
    }

    auto extended_tree_family(int max_edges) -> vector<ExtendedTreeLineGraph>
    {
        vector<ExtendedTreeLineGraph> out;
        for (auto & tc : tree_colourings(max_edges))
            if (valid_bipartition(tc.tree, tc.side))
                out.push_back(build_extended_tree_line_graph(tc.tree, tc.side));
        return out;
    }

    auto pyramid_instance(std::array<int, 3> lengths) -> PyramidInstance
    {
        int ones = 0;
        for (int l : lengths) {
            if (l < 1)
                throw GraphError("pyramid paths need length at least one");
            ones += l == 1;
        }
        if (ones > 1)
            throw GraphError("at most one pyramid path may have length one");
        PyramidInstance p;
        p.pyramid.apex = 0;
        int n = 1;
        vector<Edge> edges;
        for (int i = 0 ; i < 3 ; ++i) {
            vector<Vertex> path{ 0 };
            for (int s = 0 ; s < lengths[i] ; ++s) {
                edges.emplace_back(path.back(), n);
                path.push_back(n++);
            }
            p.pyramid.base[i] = path.back();
            p.pyramid.paths[i] = Path{ path };
        }
        auto & b = p.pyramid.base;
        edges.emplace_back(b[0], b[1]);
        edges.emplace_back(b[1], b[2]);
        edges.emplace_back(b[0], b[2]);
        p.graph = Graph::from_edges(n, edges);
        return p;
    }

    auto random_graph(int n, std::mt19937_64 & rng) -> Graph
    {
        vector<VertexSet> rows(n);
        std::uint64_t bits = 0;
        int left = 0;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j) {
                if (left == 0) {
                    bits = rng();
                    left = 64;
                }
                if (bits & 1) {
                    rows[i].set(j);
                    rows[j].set(i);
                }
                bits >>= 1;
                --left;
            }
        return Graph::from_rows(std::move(rows));
    }

    auto instance_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t
    {
        // splitmix64 finaliser over the pair
        std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + index + 0x632be59bd9b4e019ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
}
