#include <ehf/cutsets.hh>

using std::optional;
using std::vector;

namespace ehf
{
    auto is_cutset(const Graph & g, const VertexSet & c) -> optional<Split>
    {
        auto rest = g.vertices() - c;
        if (rest.empty())
            return std::nullopt;
        auto first = component_of(g, rest, rest.first());
        if (first == rest)
            return std::nullopt;
        return Split{ first, rest - first };
    }

    auto validate_star_cutset(const Graph & g, const StarCutsetWitness & w) -> bool
    {
        if (w.centre < 0 || w.centre >= g.size() || ! w.cutset.test(w.centre))
            return false;
        if (! w.cutset.without(w.centre).is_subset_of(g.neighbours(w.centre)))
            return false;
        auto & [x, y] = w.sides;
        if (x.empty() || y.empty() || x.intersects(y) || (x | y) != g.vertices() - w.cutset)
            return false;
        return is_anticomplete_to(g, x, y);
    }

    namespace
    {
        auto witness(const Graph & g, Vertex v, const VertexSet & c) -> optional<StarCutsetWitness>
        {
            if (auto split = is_cutset(g, c))
                return StarCutsetWitness{ v, c, *split };
            return std::nullopt;
        }

        auto check_centre(const Graph & g, optional<Vertex> centre, const char * who) -> void
        {
            if (centre && (*centre < 0 || *centre >= g.size()))
                throw GraphError(std::string(who) + ": centre out of range");
        }

        template <typename F_>
        auto over_centres(const Graph & g, optional<Vertex> centre, F_ && f) -> optional<StarCutsetWitness>
        {
            for (Vertex v = centre ? *centre : 0 ; v < (centre ? *centre + 1 : g.size()) ; ++v)
                if (auto w = f(v))
                    return w;
            return std::nullopt;
        }
    }

    auto find_full_star_cutset(const Graph & g, optional<Vertex> centre) -> optional<StarCutsetWitness>
    {
        check_centre(g, centre, "find_full_star_cutset");
        return over_centres(g, centre, [&] (Vertex v) { return witness(g, v, g.closed_neighbours(v)); });
    }

    auto find_star_cutset(const Graph & g, optional<Vertex> centre) -> optional<StarCutsetWitness>
    {
        check_centre(g, centre, "find_star_cutset");
        return over_centres(g, centre, [&] (Vertex v) -> optional<StarCutsetWitness> {
            if (auto w = witness(g, v, VertexSet{ v }))
                return w;
            auto outside = g.vertices() - g.closed_neighbours(v);
            if (outside.empty()) {
                auto nbrs = g.neighbours(v);
                for (Vertex x = nbrs.first() ; x != -1 ; x = nbrs.next(x)) {
                    auto non = nbrs - g.closed_neighbours(x);
                    if (non.any())
                        return witness(g, v, (nbrs - VertexSet{ x, non.first() }).with(v));
                }
                return std::nullopt;
            }
            for (auto & x : components(g, outside))
                if (auto w = witness(g, v, (g.neighbours(v) & g.neighbours(x)).with(v)))
                    return w;
            return std::nullopt;
        });
    }

    auto find_star_cutset_exhaustive(const Graph & g, optional<Vertex> centre, int max_degree) -> optional<StarCutsetWitness>
    {
        check_centre(g, centre, "find_star_cutset_exhaustive");
        return over_centres(g, centre, [&] (Vertex v) -> optional<StarCutsetWitness> {
            auto nbrs = g.neighbours(v).to_vector();
            int d = int(nbrs.size());
            if (d > max_degree)
                throw DegreeBoundError("vertex " + std::to_string(v) + " has degree " + std::to_string(d)
                        + ", above the exhaustive bound " + std::to_string(max_degree));
            for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << d) ; ++mask) {
                VertexSet c{ v };
                for (int i = 0 ; i < d ; ++i)
                    if ((mask >> i) & 1)
                        c.set(nbrs[i]);
                if (auto w = witness(g, v, c))
                    return w;
            }
            return std::nullopt;
        });
    }

    auto to_string(SplendidClause c) -> std::string
    {
        switch (c) {
            case SplendidClause::NotConnectedOutside: return "NotConnectedOutside";
            case SplendidClause::NeighbourTrapped:    return "NeighbourTrapped";
            case SplendidClause::ShortPyramidApex:    return "ShortPyramidApex";
        }
        return "?";
    }

    auto is_splendid(const Graph & g, Vertex a) -> SplendidVerdict
    {
        if (a < 0 || a >= g.size())
            throw GraphError("is_splendid: vertex out of range");
        SplendidVerdict verdict;
        verdict.vertex = a;
        auto outside = g.vertices() - g.closed_neighbours(a);
        verdict.outside_empty = outside.empty();
        if (outside.empty() || ! is_connected(g, outside)) {
            verdict.failed_clause = SplendidClause::NotConnectedOutside;
            return verdict;
        }
        auto nbrs = g.neighbours(a);
        for (Vertex u = nbrs.first() ; u != -1 ; u = nbrs.next(u))
            if (! g.neighbours(u).intersects(outside)) {
                verdict.failed_clause = SplendidClause::NeighbourTrapped;
                verdict.witness = u;
                return verdict;
            }
        if (auto p = find_pyramid(g, a, true)) {
            verdict.failed_clause = SplendidClause::ShortPyramidApex;
            verdict.witness = *p;
            return verdict;
        }
        verdict.ok = true;
        return verdict;
    }

    auto check_hole_neighbourhood_trichotomy(const Graph & g, const vector<Vertex> & hole, Vertex a) -> Outcome
    {
        for (auto v : hole)
            if (v < 0 || v >= g.size())
                throw GraphError("trichotomy: hole vertex out of range");
        if (a < 0 || a >= g.size())
            throw GraphError("trichotomy: vertex out of range");
        if (! is_hole(g, hole))
            throw GraphError("trichotomy: not a hole");
        auto h = VertexSet::from(hole);
        if (h.test(a))
            throw GraphError("trichotomy: vertex lies on the hole");

        if (find_full_star_cutset(g, a))
            return Outcome::Inapplicable;

        auto spokes = g.neighbours(a) & h;
        int k = spokes.count();
        if (k == 0 || spokes == h)
            return Outcome::Holds;
        if (is_connected(g, spokes))
            return Outcome::Holds;
        if (k == 3 && ! is_stable(g, spokes))
            return Outcome::Holds;
        return Outcome::Violated;
    }
}
