#include <ehf/pyramid_strips.hh>

#include <ehf/cutsets.hh>

#include "small_csp.hh"

#include <algorithm>

using std::optional;
using std::string;
using std::vector;

namespace ehf
{
    auto PyramidStripSystem::vertices() const -> VertexSet
    {
        VertexSet r{ apex };
        for (auto & s : strips)
            r |= s.vertices();
        return r;
    }

    auto PyramidStripSystem::all_b() const -> VertexSet
    {
        VertexSet r;
        for (auto & s : strips)
            r |= s.b;
        return r;
    }

    auto pyramid_system_from(const PyramidCertificate & p) -> PyramidStripSystem
    {
        PyramidStripSystem s;
        s.apex = p.apex;
        for (auto & path : p.paths) {
            if (path.length() < 2)
                throw GraphError("pyramid_system_from: every path needs length at least two");
            Strip strip;
            strip.a.set(path.verts[1]);
            strip.b.set(path.back());
            for (size_t i = 2 ; i + 1 < path.verts.size() ; ++i)
                strip.c.set(path.verts[i]);
            s.strips.push_back(strip);
        }
        return s;
    }

    auto validate_pyramid_system(const Graph & g, const PyramidStripSystem & s) -> Report
    {
        if (s.apex < 0 || s.apex >= g.size())
            return Report::fail("apex out of range");
        if (s.strips.size() < 3)
            return Report::fail("at least three strips");
        int k = static_cast<int>(s.strips.size());
        for (int i = 0 ; i < k ; ++i) {
            auto & st = s.strips[i];
            auto name = "strip " + std::to_string(i);
            if (st.a.empty() || st.b.empty() || st.c.intersects(st.a | st.b) || ! st.vertices().is_subset_of(g.vertices()))
                return Report::fail("strip shape", name);
            if (! st.is_proper())
                return Report::fail("strips are proper", name);
            if (auto v = validate_strip(g, st) ; ! v.ok)
                return Report::fail("every vertex on a rung", name + ": " + to_string(v.uncovered));
        }
        for (int i = 0 ; i < k ; ++i)
            for (int j = i + 1 ; j < k ; ++j)
                if (auto both = s.strips[i].vertices() & s.strips[j].vertices() ; both.any())
                    return Report::fail("strips pairwise disjoint", std::to_string(both.first()));
        for (int i = 0 ; i < k ; ++i)
            if (s.strips[i].vertices().test(s.apex))
                return Report::fail("apex outside the strips", "strip " + std::to_string(i));

        for (int i = 0 ; i < k ; ++i)
            for (int j = i + 1 ; j < k ; ++j) {
                auto & si = s.strips[i];
                auto & sj = s.strips[j];
                auto vi = si.vertices();
                for (Vertex x = vi.first() ; x != -1 ; x = vi.next(x)) {
                    auto nbrs = g.neighbours(x) & sj.vertices();
                    auto expected = si.b.test(x) ? sj.b : VertexSet{};
                    if (nbrs != expected)
                        return Report::fail("B_i complete to B_j and no other edges between strips",
                                std::to_string(x) + "-" + std::to_string((nbrs ^ expected).first()));
                }
            }
        auto na = g.neighbours(s.apex);
        for (int i = 0 ; i < k ; ++i) {
            auto & st = s.strips[i];
            if (! st.a.is_subset_of(na) || na.intersects(st.b | st.c))
                return Report::fail("apex complete to A_i and anticomplete to B_i ∪ C_i", "strip " + std::to_string(i));
        }
        return Report::pass();
    }

    auto is_indecomposable(const Graph & g, const PyramidStripSystem & s) -> bool
    {
        return std::all_of(s.strips.begin(), s.strips.end(), [&] (const Strip & st) { return is_connected(g, st.a | st.c); });
    }

    namespace
    {
        auto sound(const Graph & g, const PyramidStripSystem & s) -> bool
        {
            return validate_pyramid_system(g, s).ok && is_indecomposable(g, s);
        }

        auto improve_locally(const Graph & g, PyramidStripSystem s) -> PyramidStripSystem
        {
            for (bool changed = true ; changed ; ) {
                changed = false;
                auto outside = g.vertices() - s.vertices();
                for (Vertex v = outside.first() ; v != -1 && ! changed ; v = outside.next(v))
                    for (size_t i = 0 ; i < s.strips.size() && ! changed ; ++i)
                        for (int part = 0 ; part < 3 && ! changed ; ++part) {
                            auto next = s;
                            (part == 0 ? next.strips[i].a : part == 1 ? next.strips[i].b : next.strips[i].c).set(v);
                            if (sound(g, next)) {
                                s = next;
                                changed = true;
                            }
                        }
                auto free = outside - g.neighbours(s.apex);
                for (size_t i = 0 ; i < s.strips.size() && ! changed ; ++i) {
                    auto vs = s.strips[i].vertices();
                    for (Vertex x = vs.first() ; x != -1 && ! changed ; x = vs.next(x)) {
                        auto starts = g.neighbours(x) & free;
                        for (Vertex st = starts.first() ; st != -1 && ! changed ; st = starts.next(st)) {
                            auto path = shortest_path_to(g, st, vs.without(x), free);
                            if (path.size() < 2)
                                continue;
                            auto next = s;
                            for (size_t p = 0 ; p + 1 < path.size() ; ++p)
                                next.strips[i].c.set(path[p]);
                            if (sound(g, next)) {
                                s = next;
                                changed = true;
                            }
                        }
                    }
                }
            }
            return s;
        }
    }

    auto search_pyramid_strip_system(const Graph & g, Vertex a, const Budget & budget, bool check_hypotheses)
        -> PyramidSearchResult
    {
        if (a < 0 || a >= g.size())
            throw GraphError("search_pyramid_strip_system: apex out of range");
        PyramidSearchResult result;
        if (check_hypotheses) {
            if (! is_splendid(g, a).ok) {
                result.inapplicable = "apex is not splendid";
                return result;
            }
            if (find_extended_near_prism_at(g, a)) {
                result.inapplicable = "apex is an end of an extended near-prism cross-edge";
                return result;
            }
        }
        auto pyramid = find_pyramid(g, a);
        if (! pyramid) {
            result.inapplicable = "no pyramid with this apex";
            return result;
        }
        if (std::any_of(pyramid->paths.begin(), pyramid->paths.end(), [] (const Path & p) { return p.length() < 2; })) {
            result.inapplicable = "pyramid at the apex is short";
            return result;
        }
        auto best = pyramid_system_from(*pyramid);

        auto na = g.neighbours(a);
        vector<Vertex> vars;
        for (Vertex v = na.first() ; v != -1 ; v = na.next(v))
            vars.push_back(v);
        auto rest = g.vertices().without(a) - na;
        for (Vertex v = rest.first() ; v != -1 ; v = rest.next(v))
            vars.push_back(v);

        int k_max = na.count();
        bool exhaustive = 1 + 3 * k_max <= 64;
        if (exhaustive) {
            int values = 1 + 3 * k_max, n = static_cast<int>(vars.size());
            using Mask = detail::SmallCsp::Mask;
            detail::SmallCsp csp;
            csp.mrv = false;
            csp.adjacent.assign(n, vector<char>(n, 0));
            for (int i = 0 ; i < n ; ++i)
                for (int j = 0 ; j < n ; ++j)
                    csp.adjacent[i][j] = g.adjacent(vars[i], vars[j]);
            for (int i = 0 ; i < n ; ++i) {
                Mask d = 1;
                for (int x = 1 ; x < values ; ++x)
                    if (((x - 1) % 3 == 0) == na.test(vars[i]))
                        d |= Mask{ 1 } << x;
                csp.domain.push_back(d);
            }
            for (int adj = 0 ; adj < 2 ; ++adj) {
                csp.compat[adj].assign(values, 0);
                for (int x = 0 ; x < values ; ++x)
                    for (int y = 0 ; y < values ; ++y) {
                        bool ok = true;
                        if (x != 0 && y != 0 && (x - 1) / 3 != (y - 1) / 3)
                            ok = bool(adj) == ((x - 1) % 3 == 1 && (y - 1) % 3 == 1);
                        if (ok)
                            csp.compat[adj][x] |= Mask{ 1 } << y;
                    }
            }
            auto opened = [] (const vector<int> & val) {
                int top = -1;
                for (int x : val)
                    if (x > 0)
                        top = std::max(top, (x - 1) / 3);
                return top;
            };
            csp.dynamic = [&] (const vector<int> & val, int var) {
                int limit = opened(val) + (na.test(vars[var]) ? 1 : 0);
                Mask m = 0;
                for (int x = 1 ; x < values && (x - 1) / 3 <= limit ; ++x)
                    m |= Mask{ 1 } << x;
                return m;
            };
            auto build = [&] (const vector<int> & val) {
                PyramidStripSystem s;
                s.apex = a;
                s.strips.assign(opened(val) + 1, Strip{});
                for (int i = 0 ; i < n ; ++i)
                    if (val[i] > 0) {
                        auto & st = s.strips[(val[i] - 1) / 3];
                        int part = (val[i] - 1) % 3;
                        (part == 0 ? st.a : part == 1 ? st.b : st.c).set(vars[i]);
                    }
                return s;
            };
            csp.accept = [&] (const vector<int> & val) {
                auto s = build(val);
                if (s.strips.size() < 3)
                    return false;
                for (auto & st : s.strips)
                    if (st.a.empty() || st.b.empty())
                        return false;
                return sound(g, s);
            };
            csp.best = best.vertices().count() - 1;
            csp.max_nodes = budget.max_nodes;
            csp.run();
            result.nodes = csp.nodes;
            result.budget_hit = csp.budget_hit;
            if (! csp.best_assignment.empty())
                best = build(csp.best_assignment);
        }

        if (exhaustive && ! result.budget_hit)
            result.maximality = Maximality::CertifiedOptimal;
        else {
            best = improve_locally(g, best);
            result.maximality = Maximality::LocallyMaximal;
        }
        result.system = std::move(best);
        return result;
    }

    auto attachments(const Graph & g, const PyramidStripSystem & s, const VertexSet & f) -> VertexSet
    {
        auto vs = s.vertices();
        if (f.intersects(vs))
            throw GraphError("attachments: F meets V(S)");
        return g.neighbours(f) & vs;
    }

    namespace
    {
        auto outer_components(const Graph & g, const PyramidStripSystem & s) -> vector<VertexSet>
        {
            return components(g, g.vertices() - s.vertices() - g.closed_neighbours(s.apex));
        }

        auto all_d(const Graph & g, const PyramidStripSystem & s) -> vector<VertexSet>
        {
            vector<VertexSet> d(s.strips.size());
            for (auto & f : outer_components(g, s)) {
                auto att = attachments(g, s, f);
                for (size_t i = 0 ; i < s.strips.size() ; ++i)
                    if (att.intersects(s.strips[i].a | s.strips[i].c))
                        d[i] |= f;
            }
            return d;
        }

        auto verdict(bool holds, Maximality maximality, string witness, string detail) -> CheckResult
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

    auto d_set(const Graph & g, const PyramidStripSystem & s, int i) -> VertexSet
    {
        if (i < 0 || i >= static_cast<int>(s.strips.size()))
            throw GraphError("d_set: strip index out of range");
        return all_d(g, s)[i];
    }

    auto check_pyramid_attachment_theorem(const Graph & g, const PyramidStripSystem & s, Maximality maximality)
        -> vector<CheckResult>
    {
        vector<CheckResult> results;
        auto bs = s.all_b();
        for (auto & f : outer_components(g, s)) {
            auto att = attachments(g, s, f);
            bool holds = att.any() && att.is_subset_of(bs);
            for (auto & st : s.strips)
                holds = holds || (att.is_subset_of(st.vertices()) && att.intersects(st.b | st.c));
            results.push_back(verdict(holds, maximality, to_string(f), "attachments " + to_string(att)));
        }
        return results;
    }

    auto to_string(ApexNeighbourType t) -> string
    {
        switch (t) {
            case ApexNeighbourType::Alpha: return "alpha";
            case ApexNeighbourType::AlphaPrime: return "alpha-prime";
            case ApexNeighbourType::Beta: return "beta";
            case ApexNeighbourType::Gamma: return "gamma";
            case ApexNeighbourType::Unclassified: return "unclassified";
        }
        return "?";
    }

    auto classify_apex_neighbour(const Graph & g, const PyramidStripSystem & s, Vertex v) -> ApexNeighbourClass
    {
        if (v < 0 || v >= g.size() || ! g.adjacent(v, s.apex) || s.vertices().test(v))
            throw GraphError("classify_apex_neighbour: v must be in N(a) \\ V(S)");
        int k = static_cast<int>(s.strips.size());
        auto nv = g.neighbours(v);
        auto d = all_d(g, s);
        auto sees = [&] (const VertexSet & x) { return nv.intersects(x); };
        auto & st = s.strips;

        bool alpha = true;
        for (int i = 0 ; i < k ; ++i)
            alpha = alpha && (sees(st[i].b | st[i].c) || st[i].a.is_subset_of(nv));
        if (alpha)
            return { ApexNeighbourType::Alpha, -1, std::nullopt };

        for (int i = 0 ; i < k ; ++i) {
            bool ok = sees(d[i]) && ! sees(st[i].b | st[i].c);
            for (int j = 0 ; j < k && ok ; ++j)
                if (j != i)
                    ok = st[j].a.is_subset_of(nv) && ! sees(st[j].b | st[j].c | d[j]);
            if (ok)
                return { ApexNeighbourType::AlphaPrime, i, std::nullopt };
        }

        for (int i = 0 ; i < k ; ++i) {
            bool ok = ! sees(st[i].vertices());
            for (int j = 0 ; j < k && ok ; ++j)
                if (j != i)
                    ok = sees(st[j].b | st[j].c);
            if (ok)
                return { ApexNeighbourType::Beta, i, std::nullopt };
        }

        auto vs = s.vertices();
        auto bs = s.all_b();
        auto beyond = g.vertices() - vs - g.closed_neighbours(s.apex);
        auto quiet = beyond - g.neighbours(vs);
        for (int i = 0 ; i < k ; ++i) {
            bool ok = true;
            for (int j = 0 ; j < k && ok ; ++j)
                ok = ! sees(st[j].b | st[j].c | d[j]) && (j == i || st[j].a.is_subset_of(nv));
            if (! ok)
                continue;
            auto others = bs - st[i].b;
            VertexSet ends;
            for (Vertex q = beyond.first() ; q != -1 ; q = beyond.next(q)) {
                auto nq = g.neighbours(q);
                if ((nq & vs).is_subset_of(bs) && nq.intersects(bs)
                        && (others.is_subset_of(nq) || ! nq.intersects(others)))
                    ends.set(q);
            }
            auto path = shortest_path_to(g, v, ends, quiet);
            if (! path.empty())
                return { ApexNeighbourType::Gamma, i, Path{ path } };
        }
        return {};
    }

    auto check_apex_neighbour_types(const Graph & g, const PyramidStripSystem & s, Maximality maximality)
        -> vector<CheckResult>
    {
        vector<CheckResult> results;
        auto rest = g.neighbours(s.apex) - s.vertices();
        for (Vertex v = rest.first() ; v != -1 ; v = rest.next(v)) {
            auto c = classify_apex_neighbour(g, s, v);
            results.push_back(verdict(c.type != ApexNeighbourType::Unclassified, maximality, std::to_string(v),
                        "apex neighbour of no type"));
        }
        return results;
    }

    auto check_apex_clique(const Graph & g, const PyramidStripSystem & s, Maximality maximality) -> CheckResult
    {
        auto rest = g.closed_neighbours(s.apex) - s.vertices();
        for (Vertex u = rest.first() ; u != -1 ; u = rest.next(u))
            if (auto non = rest - g.closed_neighbours(u) ; non.any())
                return verdict(false, maximality, std::to_string(u) + "," + std::to_string(non.first()),
                        "N[a] \\ V(S) is not a clique");
        return verdict(true, maximality, "", "");
    }

    auto completion_d(const Graph & g, const Strip & s, Vertex a) -> VertexSet
    {
        VertexSet d;
        auto ac = s.a | s.c;
        for (auto & f : components(g, g.vertices() - s.vertices() - g.closed_neighbours(a)))
            if (g.neighbours(f).intersects(ac))
                d |= f;
        return d;
    }

    auto completion_z(const Graph & g, const Strip & s, Vertex a, const VertexSet & d) -> VertexSet
    {
        auto core = s.a | s.c | d;
        VertexSet z;
        auto candidates = g.closed_neighbours(a) - s.vertices();
        for (Vertex v = candidates.first() ; v != -1 ; v = candidates.next(v))
            if (g.neighbours(v).intersects(core))
                z.set(v);
        return z;
    }

    namespace
    {
        auto backdoor_ends(const Graph & g, const Strip & s, const VertexSet & d) -> VertexSet
        {
            auto core = s.a | s.c | d;
            VertexSet ends;
            auto pool = g.vertices() - s.vertices() - d;
            for (Vertex x = pool.first() ; x != -1 ; x = pool.next(x))
                if (s.b.is_subset_of(g.neighbours(x)) && ! g.neighbours(x).intersects(core))
                    ends.set(x);
            return ends;
        }

        auto is_backdoor(const Graph & g, const CompletedStrip & cs, Vertex z, const Path & r) -> bool
        {
            if (r.verts.empty() || r.front() != z || ! is_induced_path(g, r))
                return false;
            auto blocked = cs.strip.vertices() | cs.d;
            auto star = r.interior();
            if (star.intersects(blocked) || ! is_anticomplete_to(g, star, blocked))
                return false;
            return backdoor_ends(g, cs.strip, cs.d).test(r.back());
        }
    }

    auto complete_strip(const Graph & g, const Strip & s, Vertex a) -> optional<CompletedStrip>
    {
        CompletedStrip cs;
        cs.strip = s;
        cs.a = a;
        cs.d = completion_d(g, s, a);
        cs.z = completion_z(g, s, a, cs.d);
        auto blocked = s.vertices() | cs.d;
        auto quiet = g.vertices() - g.closed_neighbours(blocked);
        auto ends = backdoor_ends(g, s, cs.d);
        for (Vertex z = cs.z.first() ; z != -1 ; z = cs.z.next(z)) {
            auto path = shortest_path_to(g, z, ends, quiet);
            if (path.empty())
                return std::nullopt;
            cs.backdoors.emplace(z, Path{ path });
        }
        return cs;
    }

    auto check_completed_strip(const Graph & g, const CompletedStrip & cs) -> Report
    {
        auto & s = cs.strip;
        if (cs.a < 0 || cs.a >= g.size() || s.vertices().test(cs.a) || ! s.vertices().is_subset_of(g.vertices()))
            return Report::fail("a outside the strip");
        if (! s.a.is_subset_of(g.neighbours(cs.a)) || g.neighbours(cs.a).intersects(s.b | s.c))
            return Report::fail("a complete to A and anticomplete to B ∪ C");
        if (s.a.empty() || s.b.empty() || s.c.intersects(s.a | s.b))
            return Report::fail("strip shape");
        if (! s.is_proper())
            return Report::fail("S is proper", to_string(s.a & s.b));
        if (auto v = validate_strip(g, s) ; ! v.ok)
            return Report::fail("every vertex on a rung", to_string(v.uncovered));
        if (auto d = completion_d(g, s, cs.a) ; d != cs.d)
            return Report::fail("D matches its definition", to_string(d ^ cs.d));
        if (auto z = completion_z(g, s, cs.a, cs.d) ; z != cs.z)
            return Report::fail("Z matches its definition", to_string(z ^ cs.z));
        for (Vertex u = cs.z.first() ; u != -1 ; u = cs.z.next(u))
            if (auto non = cs.z - g.closed_neighbours(u) ; non.any())
                return Report::fail("Z is a clique", std::to_string(u) + "," + std::to_string(non.first()));
        for (Vertex z = cs.z.first() ; z != -1 ; z = cs.z.next(z)) {
            auto it = cs.backdoors.find(z);
            if (it == cs.backdoors.end() || ! is_backdoor(g, cs, z, it->second))
                return Report::fail("every vertex in Z has a backdoor", std::to_string(z));
        }
        return Report::pass();
    }

    auto check_striptobip(const Graph & g, const CompletedStrip & cs, bool ehf_known) -> CheckResult
    {
        if (! check_completed_strip(g, cs).ok)
            return {};
        auto core = cs.strip.a | cs.strip.c | cs.d;
        auto far = g.vertices() - g.closed_neighbours(core);
        if (far.count() < 3)
            return {};
        if (! ehf_known && ! is_even_hole_free(g))
            return {};
        CheckResult r;
        for (Vertex v = core.first() ; v != -1 ; v = core.next(v))
            if (is_bisimplicial(g, v)) {
                r.outcome = Outcome::Holds;
                r.witness = std::to_string(v);
                return r;
            }
        r.outcome = Outcome::Violated;
        r.witness = to_string(core);
        r.detail = "no bisimplicial vertex in A ∪ C ∪ D";
        return r;
    }
}
