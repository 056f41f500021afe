#include <ehf/detectors.hh>

#include <algorithm>
#include <numeric>

using std::array;
using std::optional;
using std::string;
using std::vector;

namespace ehf
{
    auto PyramidCertificate::is_short() const -> bool
    {
        return std::any_of(paths.begin(), paths.end(), [] (const Path & p) { return p.length() == 1; });
    }

    auto kind_name(const Certificate & c) -> string
    {
        struct Visitor
        {
            auto operator()(const HoleCertificate & h) const -> string { return h.even ? "even-hole" : "hole"; }
            auto operator()(const ThetaCertificate &) const -> string { return "theta"; }
            auto operator()(const PyramidCertificate &) const -> string { return "pyramid"; }
            auto operator()(const NearPrismCertificate &) const -> string { return "near-prism"; }
            auto operator()(const WheelCertificate & w) const -> string { return w.even ? "even-wheel" : "wheel"; }
            auto operator()(const ExtendedNearPrismCertificate &) const -> string { return "extended-near-prism"; }
        };
        return std::visit(Visitor{}, c);
    }

    namespace
    {
        auto paths_span(const array<Path, 3> & paths) -> VertexSet
        {
            VertexSet result;
            for (auto & p : paths)
                result |= p.vertex_set();
            return result;
        }

        auto near_prism_span(const NearPrismCertificate & c) -> VertexSet
        {
            auto result = paths_span(c.paths);
            for (int i = 0 ; i < 3 ; ++i) {
                result.set(c.triangle_a[i]);
                result.set(c.triangle_b[i]);
            }
            return result;
        }
    }

    auto certificate_span(const Certificate & c) -> VertexSet
    {
        struct Visitor
        {
            auto operator()(const HoleCertificate & h) const -> VertexSet { return VertexSet::from(h.cycle); }
            auto operator()(const ThetaCertificate & t) const -> VertexSet { return paths_span(t.paths).with(t.s).with(t.t); }
            auto operator()(const PyramidCertificate & p) const -> VertexSet
            {
                return paths_span(p.paths).with(p.apex).with(p.base[0]).with(p.base[1]).with(p.base[2]);
            }
            auto operator()(const NearPrismCertificate & n) const -> VertexSet { return near_prism_span(n); }
            auto operator()(const WheelCertificate & w) const -> VertexSet { return VertexSet::from(w.hole).with(w.centre) | w.spokes; }
            auto operator()(const ExtendedNearPrismCertificate & e) const -> VertexSet
            {
                return near_prism_span(e.near_prism).with(e.cross_a).with(e.cross_b);
            }
        };
        return std::visit(Visitor{}, c);
    }

    namespace
    {
        struct HoleSearch
        {
            const Graph & g;
            int min_length, max_length;
            std::uint64_t max_nodes;
            std::uint64_t & nodes;
            const std::function<bool (const vector<Vertex> &)> & visit;
            vector<Vertex> cycle;
            VertexSet allowed;

            // cycle = p_0 .. p_k with k >= 1; blocked = N[p_1 .. p_{k-1}]
            auto go(const VertexSet & blocked) -> SearchStatus
            {
                if (max_nodes && ++nodes > max_nodes)
                    return SearchStatus::BudgetHit;

                int k = static_cast<int>(cycle.size()) - 1;
                Vertex s = cycle[0], last = cycle[k];
                auto candidates = (g.neighbours(last) & allowed) - blocked;
                auto next_blocked = blocked | g.closed_neighbours(last);

                for (Vertex w = candidates.first() ; w != -1 ; w = candidates.next(w)) {
                    int closed_length = k + 2;
                    if (g.adjacent(w, s)) {
                        if (k >= 2 && cycle[1] < w && closed_length >= min_length
                                && (max_length == 0 || closed_length <= max_length)) {
                            cycle.push_back(w);
                            bool keep_going = visit(cycle);
                            cycle.pop_back();
                            if (! keep_going)
                                return SearchStatus::Stopped;
                        }
                        continue;
                    }
                    if (max_length != 0 && closed_length + 1 > max_length)
                        continue;
                    cycle.push_back(w);
                    auto status = go(next_blocked);
                    cycle.pop_back();
                    if (status != SearchStatus::Exhausted)
                        return status;
                }
                return SearchStatus::Exhausted;
            }
        };

        auto hole_search(const Graph & g, int min_length, int max_length, std::uint64_t max_nodes, std::uint64_t & nodes,
                const std::function<bool (const vector<Vertex> &)> & visit) -> SearchStatus
        {
            HoleSearch search{ g, std::max(min_length, 4), max_length, max_nodes, nodes, visit, {}, {} };
            for (Vertex s = 0 ; s < g.size() ; ++s) {
                search.allowed = g.vertices() - VertexSet::range(s + 1);
                auto firsts = g.neighbours(s) & search.allowed;
                for (Vertex p1 = firsts.first() ; p1 != -1 ; p1 = firsts.next(p1)) {
                    search.cycle = { s, p1 };
                    auto status = search.go(VertexSet{});
                    if (status != SearchStatus::Exhausted)
                        return status;
                }
            }
            return SearchStatus::Exhausted;
        }
    }

    auto for_each_hole(const Graph & g, int min_length, int max_length, const Budget & budget,
            const std::function<bool (const vector<Vertex> &)> & visit) -> SearchStatus
    {
        std::uint64_t nodes = 0, results = 0;
        bool budget_hit = false;
        auto status = hole_search(g, min_length, max_length, budget.max_nodes, nodes, [&] (const vector<Vertex> & c) {
            if (! visit(c))
                return false;
            if (budget.max_results && ++results >= budget.max_results) {
                budget_hit = true;
                return false;
            }
            return true;
        });
        return budget_hit ? SearchStatus::BudgetHit : status;
    }

    auto find_hole(const Graph & g, HoleParity parity, const Budget & budget) -> HoleSearchResult
    {
        HoleSearchResult result;
        int step = parity == HoleParity::Any ? 1 : 2;
        int start = parity == HoleParity::Odd ? 5 : 4;
        std::uint64_t nodes = 0;
        for (int length = start ; length <= g.size() ; length += step) {
            optional<vector<Vertex>> best;
            auto status = hole_search(g, length, length, budget.max_nodes, nodes, [&] (const vector<Vertex> & c) {
                if (! best || c < *best)
                    best = c;
                return true;
            });
            if (best)
                result.hole = HoleCertificate{ *best, parity == HoleParity::Even };
            if (status == SearchStatus::BudgetHit) {
                result.status = SearchStatus::BudgetHit;
                return result;
            }
            if (best)
                return result;
        }
        return result;
    }

    auto find_even_hole(const Graph & g, const Budget & budget) -> HoleSearchResult
    {
        return find_hole(g, HoleParity::Even, budget);
    }

    auto is_even_hole_free(const Graph & g) -> bool
    {
        bool found = false;
        for_each_hole(g, 4, 0, Budget::unlimited(), [&] (const vector<Vertex> & c) {
            if (c.size() % 2 == 0) {
                found = true;
                return false;
            }
            return true;
        });
        return ! found;
    }

    namespace
    {
        struct PathInfo
        {
            Path path;
            VertexSet interior;
            VertexSet closed;   // N[interior]
        };

        auto path_infos(const Graph & g, Vertex u, Vertex v, const VertexSet & allowed) -> vector<PathInfo>
        {
            vector<PathInfo> result;
            enumerate_induced_paths(g, u, v, allowed, Budget::unlimited(), [&] (const Path & p) {
                auto in = p.interior();
                result.push_back(PathInfo{ p, in, g.closed_neighbours(in) });
                return true;
            });
            return result;
        }

        auto compatible(const PathInfo & p, const PathInfo & q) -> bool
        {
            return ! p.interior.intersects(q.closed);
        }

        auto edges_between(const Graph & g, const VertexSet & a, const VertexSet & b) -> int
        {
            int result = 0;
            a.for_each([&] (Vertex v) { result += (g.neighbours(v) & b).count(); });
            return result;
        }

        /// Interiors disjoint with exactly one edge between them.
        auto single_cross_edge(const Graph & g, const PathInfo & p, const PathInfo & q) -> optional<Edge>
        {
            if (p.interior.intersects(q.interior))
                return std::nullopt;
            if (edges_between(g, p.interior, q.interior) != 1)
                return std::nullopt;
            for (Vertex v = p.interior.first() ; v != -1 ; v = p.interior.next(v)) {
                auto w = (g.neighbours(v) & q.interior).first();
                if (w != -1)
                    return Edge{ v, w };
            }
            return std::nullopt;
        }

        /// First pairwise-compatible triple, in lexicographic index order.
        auto compatible_triple(const array<vector<PathInfo>, 3> & lists) -> optional<array<int, 3>>
        {
            for (int i = 0 ; i < int(lists[0].size()) ; ++i)
                for (int j = 0 ; j < int(lists[1].size()) ; ++j) {
                    if (! compatible(lists[0][i], lists[1][j]))
                        continue;
                    for (int k = 0 ; k < int(lists[2].size()) ; ++k)
                        if (compatible(lists[0][i], lists[2][k]) && compatible(lists[1][j], lists[2][k]))
                            return array<int, 3>{ i, j, k };
                }
            return std::nullopt;
        }

        auto triangles(const Graph & g) -> vector<array<Vertex, 3>>
        {
            vector<array<Vertex, 3>> result;
            for (Vertex x = 0 ; x < g.size() ; ++x) {
                auto ys = g.neighbours(x) - VertexSet::range(x + 1);
                ys.for_each([&] (Vertex y) {
                    auto zs = (g.neighbours(x) & g.neighbours(y)) - VertexSet::range(y + 1);
                    zs.for_each([&] (Vertex z) { result.push_back({ x, y, z }); });
                });
            }
            return result;
        }

        auto triangle_set(const array<Vertex, 3> & t) -> VertexSet
        {
            return VertexSet{ t[0], t[1], t[2] };
        }

        /// A near-prism frame: paths[i] must join a[i] to b[i], with interior in allowed[i].
        struct Frame
        {
            array<Vertex, 3> a, b;
            array<VertexSet, 3> allowed;
            bool degenerate;
        };

        /// Calls f on every frame; f returns true to stop.
        template <typename F_>
        auto for_each_near_prism_frame(const Graph & g, F_ && f) -> bool
        {
            auto ts = triangles(g);
            static const array<array<int, 3>, 6> perms{ { { 0, 1, 2 }, { 0, 2, 1 }, { 1, 0, 2 }, { 1, 2, 0 }, { 2, 0, 1 }, { 2, 1, 0 } } };
            for (int x = 0 ; x < int(ts.size()) ; ++x)
                for (int y = x + 1 ; y < int(ts.size()) ; ++y) {
                    auto sx = triangle_set(ts[x]), sy = triangle_set(ts[y]);
                    auto common = sx & sy;
                    int shared = common.count();
                    if (shared >= 2)
                        continue;
                    auto outside = g.vertices() - sx - sy;

                    if (shared == 0) {
                        for (auto & perm : perms) {
                            Frame fr;
                            fr.degenerate = false;
                            for (int i = 0 ; i < 3 ; ++i) {
                                fr.a[i] = ts[x][i];
                                fr.b[i] = ts[y][perm[i]];
                            }
                            bool ok = true;
                            for (int i = 0 ; i < 3 && ok ; ++i)
                                for (int j = 0 ; j < 3 && ok ; ++j)
                                    if (i != j && g.adjacent(fr.a[i], fr.b[j]))
                                        ok = false;
                            if (! ok)
                                continue;
                            for (int i = 0 ; i < 3 ; ++i) {
                                fr.allowed[i] = outside;
                                for (int j = 0 ; j < 3 ; ++j)
                                    if (j != i)
                                        fr.allowed[i] -= g.neighbours(fr.a[j]) | g.neighbours(fr.b[j]);
                            }
                            if (f(fr))
                                return true;
                        }
                    }
                    else {
                        Vertex c = common.first();
                        auto xs = sx.without(c).to_vector(), ys = sy.without(c).to_vector();
                        for (int flip = 0 ; flip < 2 ; ++flip) {
                            Frame fr;
                            fr.degenerate = true;
                            fr.a = { xs[0], xs[1], c };
                            fr.b = { ys[flip], ys[1 - flip], c };
                            if (g.adjacent(fr.a[0], fr.b[1]) || g.adjacent(fr.a[1], fr.b[0]))
                                continue;
                            for (int i = 0 ; i < 2 ; ++i)
                                fr.allowed[i] = outside - g.neighbours(c) - g.neighbours(fr.a[1 - i]) - g.neighbours(fr.b[1 - i]);
                            if (f(fr))
                                return true;
                        }
                    }
                }
            return false;
        }

        auto frame_paths(const Graph & g, const Frame & fr) -> array<vector<PathInfo>, 3>
        {
            array<vector<PathInfo>, 3> lists;
            for (int i = 0 ; i < 3 ; ++i) {
                if (fr.degenerate && i == 2)
                    lists[i].push_back(PathInfo{ Path{ { fr.a[2] } }, VertexSet{}, VertexSet{} });
                else
                    lists[i] = path_infos(g, fr.a[i], fr.b[i], fr.allowed[i]);
            }
            return lists;
        }
    }

    auto find_theta(const Graph & g) -> optional<ThetaCertificate>
    {
        for (Vertex s = 0 ; s < g.size() ; ++s) {
            if (g.degree(s) < 3)
                continue;
            for (Vertex t = s + 1 ; t < g.size() ; ++t) {
                if (g.degree(t) < 3 || g.adjacent(s, t))
                    continue;
                auto paths = path_infos(g, s, t, g.vertices());
                if (paths.size() < 3)
                    continue;
                for (int i = 0 ; i < int(paths.size()) ; ++i)
                    for (int j = i + 1 ; j < int(paths.size()) ; ++j) {
                        if (! compatible(paths[i], paths[j]))
                            continue;
                        for (int k = j + 1 ; k < int(paths.size()) ; ++k)
                            if (compatible(paths[i], paths[k]) && compatible(paths[j], paths[k]))
                                return ThetaCertificate{ s, t, { paths[i].path, paths[j].path, paths[k].path } };
                    }
            }
        }
        return std::nullopt;
    }

    auto find_pyramid(const Graph & g, optional<Vertex> apex, bool short_only) -> optional<PyramidCertificate>
    {
        if (apex && (*apex < 0 || *apex >= g.size()))
            throw GraphError("find_pyramid: apex out of range");
        auto ts = triangles(g);
        for (Vertex a = apex ? *apex : 0 ; a < (apex ? *apex + 1 : g.size()) ; ++a) {
            for (auto & t : ts) {
                auto base = triangle_set(t);
                if (base.test(a))
                    continue;
                int touching = (g.neighbours(a) & base).count();
                if (touching > 1 || (short_only && touching != 1))
                    continue;
                array<vector<PathInfo>, 3> lists;
                bool empty = false;
                for (int i = 0 ; i < 3 && ! empty ; ++i) {
                    auto allowed = g.vertices() - base;
                    allowed.reset(a);
                    for (int j = 0 ; j < 3 ; ++j)
                        if (j != i)
                            allowed -= g.neighbours(t[j]);
                    lists[i] = path_infos(g, a, t[i], allowed);
                    empty = lists[i].empty();
                }
                if (empty)
                    continue;
                if (auto triple = compatible_triple(lists))
                    return PyramidCertificate{ a, t, { lists[0][(*triple)[0]].path, lists[1][(*triple)[1]].path,
                        lists[2][(*triple)[2]].path } };
            }
        }
        return std::nullopt;
    }

    auto find_near_prism(const Graph & g) -> optional<NearPrismCertificate>
    {
        optional<NearPrismCertificate> result;
        for_each_near_prism_frame(g, [&] (const Frame & fr) {
            auto lists = frame_paths(g, fr);
            if (auto triple = compatible_triple(lists)) {
                result = NearPrismCertificate{ fr.a, fr.b, { lists[0][(*triple)[0]].path, lists[1][(*triple)[1]].path,
                    lists[2][(*triple)[2]].path } };
                return true;
            }
            return false;
        });
        return result;
    }

    auto find_wheel(const Graph & g, bool even_only) -> optional<WheelCertificate>
    {
        optional<WheelCertificate> result;
        for_each_hole(g, 4, 0, Budget::unlimited(), [&] (const vector<Vertex> & cycle) {
            auto hole = VertexSet::from(cycle);
            for (Vertex v = 0 ; v < g.size() ; ++v) {
                if (hole.test(v))
                    continue;
                auto spokes = g.neighbours(v) & hole;
                int k = spokes.count();
                if (k < 3 || (k == 3 && ! is_stable(g, spokes)) || (even_only && k % 2 != 0))
                    continue;
                result = WheelCertificate{ v, cycle, spokes, even_only };
                return false;
            }
            return true;
        });
        return result;
    }

    namespace
    {
        /// Calls f(cert) for each extended near-prism found frame by frame; f returns true to stop.
        template <typename F_>
        auto search_extended_near_prisms(const Graph & g, F_ && f) -> optional<ExtendedNearPrismCertificate>
        {
            optional<ExtendedNearPrismCertificate> result;
            for_each_near_prism_frame(g, [&] (const Frame & fr) {
                auto lists = frame_paths(g, fr);
                for (int x = 0 ; x < 3 ; ++x)
                    for (int y = 0 ; y < 3 ; ++y) {
                        if (x == y)
                            continue;
                        int z = 3 - x - y;
                        for (auto & p : lists[x]) {
                            if (p.interior.empty())
                                continue;
                            for (auto & q : lists[y]) {
                                if (q.interior.empty())
                                    continue;
                                auto cross = single_cross_edge(g, p, q);
                                if (! cross)
                                    continue;
                                for (auto & r : lists[z]) {
                                    if (! compatible(p, r) || ! compatible(q, r))
                                        continue;
                                    // relabel so that the cross edge joins paths[0] and paths[1]
                                    ExtendedNearPrismCertificate c;
                                    c.near_prism.triangle_a = { fr.a[x], fr.a[y], fr.a[z] };
                                    c.near_prism.triangle_b = { fr.b[x], fr.b[y], fr.b[z] };
                                    c.near_prism.paths = { p.path, q.path, r.path };
                                    c.cross_a = cross->first;
                                    c.cross_b = cross->second;
                                    if (f(c)) {
                                        result = c;
                                        return true;
                                    }
                                }
                            }
                        }
                    }
                return false;
            });
            return result;
        }

        auto swap_sides(ExtendedNearPrismCertificate c) -> ExtendedNearPrismCertificate
        {
            auto & np = c.near_prism;
            std::swap(np.triangle_a[0], np.triangle_a[1]);
            std::swap(np.triangle_b[0], np.triangle_b[1]);
            std::swap(np.paths[0], np.paths[1]);
            std::swap(c.cross_a, c.cross_b);
            return c;
        }
    }

    auto find_extended_near_prism(const Graph & g, optional<Edge> cross_edge) -> optional<ExtendedNearPrismCertificate>
    {
        if (! cross_edge)
            return search_extended_near_prisms(g, [] (const ExtendedNearPrismCertificate &) { return true; });

        auto [u, v] = *cross_edge;
        if (u < 0 || v < 0 || u >= g.size() || v >= g.size() || u == v || ! g.adjacent(u, v))
            throw GraphError("find_extended_near_prism: cross edge " + std::to_string(u) + " " + std::to_string(v) + " is not an edge");
        auto found = search_extended_near_prisms(g, [&] (const ExtendedNearPrismCertificate & c) {
            return c.cross_a == u && c.cross_b == v;
        });
        return found;
    }

    auto find_extended_near_prism_at(const Graph & g, Vertex end) -> optional<ExtendedNearPrismCertificate>
    {
        if (end < 0 || end >= g.size())
            throw GraphError("find_extended_near_prism_at: vertex out of range");
        auto found = search_extended_near_prisms(g, [&] (const ExtendedNearPrismCertificate & c) {
            return c.cross_a == end || c.cross_b == end;
        });
        if (found && found->cross_a != end)
            return swap_sides(*found);
        return found;
    }

    namespace
    {
        using EdgeRows = vector<VertexSet>;

        auto add_edge(EdgeRows & rows, Vertex u, Vertex v) -> void
        {
            rows[u].set(v);
            rows[v].set(u);
        }

        auto add_path_edges(EdgeRows & rows, const Path & p) -> void
        {
            for (int i = 0 ; i + 1 < int(p.verts.size()) ; ++i)
                add_edge(rows, p.verts[i], p.verts[i + 1]);
        }

        auto in_range(const Graph & g, Vertex v) -> bool
        {
            return v >= 0 && v < g.size();
        }

        auto path_in_range(const Graph & g, const Path & p) -> bool
        {
            if (p.verts.empty())
                return false;
            return std::all_of(p.verts.begin(), p.verts.end(), [&] (Vertex v) { return in_range(g, v); });
        }

        auto distinct(const vector<Vertex> & vs) -> bool
        {
            return VertexSet::from(vs).count() == int(vs.size());
        }

        /// G[span] has exactly the expected edges.
        auto matches(const Graph & g, const VertexSet & span, const EdgeRows & expected) -> bool
        {
            for (Vertex v = span.first() ; v != -1 ; v = span.next(v))
                if ((g.neighbours(v) & span) != expected[v])
                    return false;
            return true;
        }

        auto shape_ok(const Graph & g, const Path & p, Vertex from, Vertex to) -> bool
        {
            return path_in_range(g, p) && distinct(p.verts) && p.front() == from && p.back() == to;
        }

        auto verify_near_prism_shape(const Graph & g, const NearPrismCertificate & c, EdgeRows & expected) -> bool
        {
            for (int i = 0 ; i < 3 ; ++i)
                if (! in_range(g, c.triangle_a[i]) || ! in_range(g, c.triangle_b[i]))
                    return false;
            auto ta = triangle_set(c.triangle_a), tb = triangle_set(c.triangle_b);
            if (ta.count() != 3 || tb.count() != 3)
                return false;
            auto common = ta & tb;
            if (c.is_prism() ? common.any() : common != VertexSet{ c.triangle_a[2] })
                return false;
            VertexSet used;
            for (int i = 0 ; i < 3 ; ++i) {
                if (! shape_ok(g, c.paths[i], c.triangle_a[i], c.triangle_b[i]))
                    return false;
                if (c.paths[i].vertex_set().intersects(used))
                    return false;
                used |= c.paths[i].vertex_set();
                add_path_edges(expected, c.paths[i]);
            }
            for (int i = 0 ; i < 3 ; ++i)
                for (int j = i + 1 ; j < 3 ; ++j) {
                    add_edge(expected, c.triangle_a[i], c.triangle_a[j]);
                    add_edge(expected, c.triangle_b[i], c.triangle_b[j]);
                }
            return true;
        }

        struct Verifier
        {
            const Graph & g;

            auto rows() const -> EdgeRows { return EdgeRows(g.size()); }

            auto operator()(const HoleCertificate & h) const -> bool
            {
                if (! std::all_of(h.cycle.begin(), h.cycle.end(), [&] (Vertex v) { return in_range(g, v); }))
                    return false;
                if (h.even && h.cycle.size() % 2 != 0)
                    return false;
                return is_hole(g, h.cycle);
            }

            auto operator()(const ThetaCertificate & t) const -> bool
            {
                if (! in_range(g, t.s) || ! in_range(g, t.t) || t.s == t.t)
                    return false;
                auto expected = rows();
                VertexSet interiors;
                for (auto & p : t.paths) {
                    if (! shape_ok(g, p, t.s, t.t) || p.length() < 2)
                        return false;
                    if (p.interior().intersects(interiors))
                        return false;
                    interiors |= p.interior();
                    add_path_edges(expected, p);
                }
                return matches(g, certificate_span(t), expected);
            }

            auto operator()(const PyramidCertificate & p) const -> bool
            {
                if (! in_range(g, p.apex))
                    return false;
                for (auto b : p.base)
                    if (! in_range(g, b))
                        return false;
                auto base = triangle_set(p.base);
                if (base.count() != 3 || base.test(p.apex))
                    return false;
                auto expected = rows();
                VertexSet used;
                int long_paths = 0;
                for (int i = 0 ; i < 3 ; ++i) {
                    auto & r = p.paths[i];
                    if (! shape_ok(g, r, p.apex, p.base[i]))
                        return false;
                    auto rest = r.vertex_set().without(p.apex);
                    if (rest.intersects(used))
                        return false;
                    used |= rest;
                    if (r.length() >= 2)
                        ++long_paths;
                    add_path_edges(expected, r);
                }
                if (long_paths < 2)
                    return false;
                add_edge(expected, p.base[0], p.base[1]);
                add_edge(expected, p.base[0], p.base[2]);
                add_edge(expected, p.base[1], p.base[2]);
                return matches(g, certificate_span(p), expected);
            }

            auto operator()(const NearPrismCertificate & c) const -> bool
            {
                auto expected = rows();
                if (! verify_near_prism_shape(g, c, expected))
                    return false;
                return matches(g, certificate_span(c), expected);
            }

            auto operator()(const WheelCertificate & w) const -> bool
            {
                if (! in_range(g, w.centre) || w.hole.size() < 4 || ! distinct(w.hole))
                    return false;
                if (! std::all_of(w.hole.begin(), w.hole.end(), [&] (Vertex v) { return in_range(g, v); }))
                    return false;
                auto hole = VertexSet::from(w.hole);
                if (hole.test(w.centre) || ! w.spokes.is_subset_of(hole))
                    return false;
                int k = w.spokes.count();
                if (k < 3 || (w.even && k % 2 != 0))
                    return false;
                auto expected = rows();
                for (int i = 0 ; i < int(w.hole.size()) ; ++i)
                    add_edge(expected, w.hole[i], w.hole[(i + 1) % w.hole.size()]);
                w.spokes.for_each([&] (Vertex v) { add_edge(expected, w.centre, v); });
                if (k == 3) {
                    bool adjacent_pair = false;
                    w.spokes.for_each([&] (Vertex v) { adjacent_pair = adjacent_pair || (expected[v] & w.spokes).any(); });
                    if (adjacent_pair)
                        return false;
                }
                return matches(g, certificate_span(w), expected);
            }

            auto operator()(const ExtendedNearPrismCertificate & e) const -> bool
            {
                auto expected = rows();
                if (! verify_near_prism_shape(g, e.near_prism, expected))
                    return false;
                if (! in_range(g, e.cross_a) || ! in_range(g, e.cross_b))
                    return false;
                if (! e.near_prism.paths[0].interior().test(e.cross_a) || ! e.near_prism.paths[1].interior().test(e.cross_b))
                    return false;
                add_edge(expected, e.cross_a, e.cross_b);
                return matches(g, certificate_span(e), expected);
            }
        };
    }

    auto verify_certificate(const Graph & g, const Certificate & c) -> bool
    {
        return std::visit(Verifier{ g }, c);
    }
}
