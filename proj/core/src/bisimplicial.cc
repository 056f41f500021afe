#include <ehf/bisimplicial.hh>
#include <ehf/detectors.hh>

#include <deque>
#include <vector>

namespace ehf
{
    auto to_string(Outcome o) -> std::string
    {
        switch (o) {
            case Outcome::Holds:        return "holds";
            case Outcome::Violated:     return "violated";
            case Outcome::Inapplicable: return "inapplicable";
        }
        return "?";
    }

    auto is_bisimplicial(const Graph & g, Vertex v) -> bool
    {
        if (v < 0 || v >= g.size())
            throw GraphError("is_bisimplicial: vertex out of range");

        // 2-colour the complement of G[N(v)]
        auto nbrs = g.neighbours(v);
        std::vector<int> colour(g.size(), -1);
        for (Vertex s = nbrs.first() ; s != -1 ; s = nbrs.next(s)) {
            if (colour[s] != -1)
                continue;
            colour[s] = 0;
            std::deque<Vertex> queue{ s };
            while (! queue.empty()) {
                auto x = queue.front();
                queue.pop_front();
                auto non_nbrs = nbrs - g.closed_neighbours(x);
                for (Vertex y = non_nbrs.first() ; y != -1 ; y = non_nbrs.next(y)) {
                    if (colour[y] == -1) {
                        colour[y] = 1 - colour[x];
                        queue.push_back(y);
                    }
                    else if (colour[y] == colour[x])
                        return false;
                }
            }
        }
        return true;
    }

    auto bisimplicial_vertices(const Graph & g) -> VertexSet
    {
        VertexSet result;
        for (Vertex v = 0 ; v < g.size() ; ++v)
            if (is_bisimplicial(g, v))
                result.set(v);
        return result;
    }

    auto check_main_theorem_unchecked(const Graph & g, const VertexSet & k) -> MainTheoremVerdict
    {
        MainTheoremVerdict verdict;
        verdict.clique_k = k;
        if (! k.is_subset_of(g.vertices()) || k.count() > 2 || ! is_clique(g, k)) {
            verdict.reason = "K is not a clique of at most two vertices";
            return verdict;
        }
        verdict.set_m = g.vertices() - g.closed_neighbours(k);
        if (verdict.set_m.empty()) {
            verdict.reason = "M is empty";
            return verdict;
        }
        for (Vertex v = verdict.set_m.first() ; v != -1 ; v = verdict.set_m.next(v))
            if (is_bisimplicial(g, v)) {
                verdict.outcome = Outcome::Holds;
                verdict.witness = v;
                return verdict;
            }
        verdict.outcome = Outcome::Violated;
        verdict.violation_graph = g;
        return verdict;
    }

    auto check_main_theorem(const Graph & g, const VertexSet & k) -> MainTheoremVerdict
    {
        if (! is_even_hole_free(g)) {
            MainTheoremVerdict verdict;
            verdict.clique_k = k;
            verdict.reason = "G has an even hole";
            return verdict;
        }
        return check_main_theorem_unchecked(g, k);
    }
}
