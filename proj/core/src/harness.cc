#include <ehf/bisimplicial.hh>
#include <ehf/canonical.hh>
#include <ehf/cutsets.hh>
#include <ehf/generators.hh>
#include <ehf/harness.hh>
#include <ehf/io.hh>
#include <ehf/pyramid_strips.hh>
#include <ehf/strips.hh>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

using nlohmann::json;
using std::string;
using std::uint64_t;
using std::vector;

namespace ehf
{
    auto to_string(EnumerationMode m) -> string
    {
        switch (m) {
            case EnumerationMode::AllLabeled: return "all-labeled";
            case EnumerationMode::CanonicalOnly: return "canonical";
            case EnumerationMode::RandomSample: return "random";
        }
        return "?";
    }

    auto to_string(GraphFilter f) -> string
    {
        switch (f) {
            case GraphFilter::None: return "none";
            case GraphFilter::EvenHoleFree: return "even-hole-free";
            case GraphFilter::Connected: return "connected";
        }
        return "?";
    }

    auto parse_mode(const string & s) -> EnumerationMode
    {
        for (auto m : { EnumerationMode::AllLabeled, EnumerationMode::CanonicalOnly, EnumerationMode::RandomSample })
            if (to_string(m) == s)
                return m;
        throw GraphError("unknown mode '" + s + "' (expected all-labeled, canonical or random)");
    }

    auto parse_filter(const string & s) -> GraphFilter
    {
        for (auto f : { GraphFilter::None, GraphFilter::EvenHoleFree, GraphFilter::Connected })
            if (to_string(f) == s)
                return f;
        throw GraphError("unknown filter '" + s + "' (expected none, even-hole-free or connected)");
    }

    auto all_suites() -> vector<SuiteId>
    {
        return { SuiteId::Subgraphs, SuiteId::Main, SuiteId::HtEhf, SuiteId::GetLocal, SuiteId::TreeStruct,
            SuiteId::SkewPyr, SuiteId::MajorClique, SuiteId::Funnies, SuiteId::SplendidPrism, SuiteId::PyrStrip,
            SuiteId::GrowStrips, SuiteId::GetClique, SuiteId::Trichotomy, SuiteId::StripToBip };
    }

    auto to_string(SuiteId s) -> string
    {
        switch (s) {
            case SuiteId::Subgraphs: return "SUBGRAPHS";
            case SuiteId::Main: return "MAIN";
            case SuiteId::HtEhf: return "HT_EHF";
            case SuiteId::GetLocal: return "GETLOCAL";
            case SuiteId::TreeStruct: return "TREESTRUCT";
            case SuiteId::SkewPyr: return "SKEWPYR";
            case SuiteId::MajorClique: return "MAJORCLIQUE";
            case SuiteId::Funnies: return "FUNNIES";
            case SuiteId::SplendidPrism: return "SPLENDIDPRISM";
            case SuiteId::PyrStrip: return "PYRSTRIP";
            case SuiteId::GrowStrips: return "GROWSTRIPS";
            case SuiteId::GetClique: return "GETCLIQUE";
            case SuiteId::Trichotomy: return "TRICHOTOMY";
            case SuiteId::StripToBip: return "STRIPTOBIP";
        }
        return "?";
    }

    auto parse_suite(const string & s) -> SuiteId
    {
        auto upper = s;
        std::transform(upper.begin(), upper.end(), upper.begin(), [] (unsigned char c) { return std::toupper(c); });
        for (auto id : all_suites())
            if (to_string(id) == upper)
                return id;
        throw GraphError("unknown suite '" + s + "'");
    }

    namespace
    {
        enum class Family
        {
            Graphs,
            TreeLineGraphs,
            Pyramids
        };

        auto family_of(SuiteId s) -> Family
        {
            switch (s) {
                case SuiteId::Subgraphs:
                case SuiteId::Main:
                case SuiteId::SkewPyr:
                case SuiteId::Trichotomy:
                    return Family::Graphs;
                case SuiteId::HtEhf:
                case SuiteId::GetLocal:
                case SuiteId::TreeStruct:
                case SuiteId::MajorClique:
                case SuiteId::Funnies:
                case SuiteId::SplendidPrism:
                    return Family::TreeLineGraphs;
                default:
                    return Family::Pyramids;
            }
        }
    }

    auto default_spec(SuiteId suite, std::optional<int> n) -> EnumerationSpec
    {
        EnumerationSpec spec;
        spec.min_n = 1;
        switch (suite) {
            case SuiteId::Subgraphs:
                spec.n = n.value_or(6);
                spec.mode = EnumerationMode::AllLabeled;
                break;
            case SuiteId::Main:
                spec.n = n.value_or(6);
                break;
            case SuiteId::SkewPyr:
            case SuiteId::Trichotomy:
                spec.n = n.value_or(7);
                break;
            case SuiteId::HtEhf:
                spec.n = n.value_or(8);
                spec.min_n = 0;
                break;
            case SuiteId::GetLocal:
                spec.n = n.value_or(10);
                spec.min_n = 0;
                spec.mode = EnumerationMode::RandomSample;
                spec.count = 10'000;
                break;
            case SuiteId::TreeStruct:
            case SuiteId::MajorClique:
            case SuiteId::Funnies:
            case SuiteId::SplendidPrism:
                spec.n = n.value_or(10);
                spec.min_n = 0;
                spec.mode = EnumerationMode::RandomSample;
                spec.count = 500;
                break;
            default:
                spec.n = n.value_or(4);
                spec.min_n = 0;
                spec.mode = EnumerationMode::RandomSample;
                spec.count = 1'000;
                break;
        }
        return spec;
    }

    auto VerificationReport::caveat_free_fails() const -> uint64_t
    {
        auto it = counters.find("caveat_free_fails");
        return it == counters.end() ? 0 : it->second;
    }

    auto probe_certificate(const Graph & g, const Certificate & c) -> ProbeResult
    {
        ProbeResult r;
        auto span = certificate_span(c).to_vector();
        for (std::size_t i = 0 ; i < span.size() ; ++i)
            for (std::size_t j = i + 1 ; j < span.size() ; ++j) {
                ++r.probes;
                if (! verify_certificate(g.with_edge_toggled(span[i], span[j]), c))
                    ++r.caught;
            }
        return r;
    }

    namespace
    {
        struct Tally
        {
            const SuiteOptions * options = nullptr;
            uint64_t tested = 0, inapplicable = 0, passes = 0, fails = 0, budget_hits = 0;
            vector<Violation> violations;
            std::map<string, uint64_t> counters;

            auto bump(const string & key, uint64_t by = 1) -> void { counters[key] += by; }

            auto pass() -> void { ++tested; ++passes; }
            auto skip() -> void { ++tested; ++inapplicable; }
            auto budget() -> void { ++tested; ++budget_hits; }

            auto fail(const Graph & g, string witness, bool caveat, string detail = "") -> void
            {
                ++tested;
                ++fails;
                if (! caveat)
                    bump("caveat_free_fails");
                if (violations.size() < options->max_violations)
                    violations.push_back({ to_graph6(g), std::move(witness), caveat, std::move(detail) });
            }

            auto outcome(const Graph & g, Outcome o, const string & witness, bool caveat = false, const string & detail = "") -> void
            {
                switch (o) {
                    case Outcome::Holds: pass(); break;
                    case Outcome::Inapplicable: skip(); break;
                    case Outcome::Violated: fail(g, witness, caveat, detail); break;
                }
            }

            /// Verifies (and optionally probes) a detector certificate.
            auto certificate(const Graph & g, const Certificate & c) -> bool
            {
                bump("certificates_verified");
                bool ok = verify_certificate(g, c);
                if (! ok)
                    bump("certificate_failures");
                if (options->probe_certificates) {
                    auto p = probe_certificate(g, c);
                    bump("mutation_probes", p.probes);
                    bump("mutations_caught", p.caught);
                }
                return ok;
            }

            auto merge(Tally && o) -> void
            {
                tested += o.tested;
                inapplicable += o.inapplicable;
                passes += o.passes;
                fails += o.fails;
                budget_hits += o.budget_hits;
                for (auto & v : o.violations)
                    if (violations.size() < options->max_violations)
                        violations.push_back(std::move(v));
                for (auto & [k, v] : o.counters)
                    counters[k] += v;
            }
        };

        using Unit = std::function<void (Tally &)>;

        auto run_units(const vector<Unit> & units, const SuiteOptions & options) -> Tally
        {
            vector<Tally> tallies(units.size());
            for (auto & t : tallies)
                t.options = &options;
            std::atomic<std::size_t> next{ 0 };
            auto worker = [&] {
                for (std::size_t i ; (i = next++) < units.size() ; )
                    units[i](tallies[i]);
            };
            unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(units.size())));
            if (jobs == 1)
                worker();
            else {
                vector<std::thread> pool;
                for (unsigned j = 0 ; j < jobs ; ++j)
                    pool.emplace_back(worker);
                for (auto & t : pool)
                    t.join();
            }
            Tally total;
            total.options = &options;
            for (auto & t : tallies)
                total.merge(std::move(t));
            return total;
        }

        using GraphCheck = std::function<void (const Graph &, Tally &)>;
        using Keep = std::function<bool (const Graph &)>;

        auto graph_from_mask(int n, uint64_t mask) -> Graph
        {
            vector<VertexSet> rows(n);
            int bit = 0;
            for (int j = 1 ; j < n ; ++j)
                for (int i = 0 ; i < j ; ++i, ++bit)
                    if ((mask >> bit) & 1) {
                        rows[i].set(j);
                        rows[j].set(i);
                    }
            return Graph::from_rows(std::move(rows));
        }

        auto keep_for(GraphFilter f) -> Keep
        {
            switch (f) {
                case GraphFilter::EvenHoleFree: return [] (const Graph & g) { return is_even_hole_free(g); };
                case GraphFilter::Connected: return [] (const Graph & g) { return is_connected(g, g.vertices()); };
                case GraphFilter::None: break;
            }
            return {};
        }

        auto check_bounds(const EnumerationSpec & spec) -> void
        {
            int lo = spec.min_n == 0 ? spec.n : spec.min_n;
            if (spec.n < 0 || lo < 0 || lo > spec.n)
                throw GraphError("vertex range " + std::to_string(lo) + ".." + std::to_string(spec.n) + " is empty or negative");
            if (spec.mode == EnumerationMode::AllLabeled && spec.n > max_labeled_n)
                throw GraphError("labeled enumeration is bounded by n = " + std::to_string(max_labeled_n));
            if (spec.mode == EnumerationMode::CanonicalOnly && spec.n > max_canonical_n)
                throw GraphError("canonical enumeration is bounded by n = " + std::to_string(max_canonical_n));
            if (spec.mode == EnumerationMode::RandomSample && spec.n > max_vertices)
                throw GraphError("random graphs are bounded by n = " + std::to_string(max_vertices));
        }

        /// Work units covering the enumeration's graphs; `extra` (hereditary) is applied on top of its filter.
        auto graph_units(const EnumerationSpec & spec, const Keep & hereditary, const GraphCheck & check) -> vector<Unit>
        {
            check_bounds(spec);
            auto filter = keep_for(spec.filter);
            bool filter_hereditary = spec.filter == GraphFilter::EvenHoleFree;
            Keep prune = [=] (const Graph & g) {
                return (! hereditary || hereditary(g)) && (! filter_hereditary || filter(g));
            };
            auto accept = [=] (const Graph & g) {
                return (! hereditary || hereditary(g)) && (! filter || filter(g));
            };
            int lo = spec.min_n == 0 ? spec.n : spec.min_n;
            vector<Unit> units;
            switch (spec.mode) {
                case EnumerationMode::AllLabeled:
                    for (int n = lo ; n <= spec.n ; ++n) {
                        uint64_t total = uint64_t{ 1 } << (n * (n - 1) / 2);
                        uint64_t chunk = std::max<uint64_t>(1, total / 256);
                        for (uint64_t start = 0 ; start < total ; start += chunk)
                            units.push_back([=] (Tally & t) {
                                for (uint64_t m = start ; m < std::min(total, start + chunk) ; ++m) {
                                    auto g = graph_from_mask(n, m);
                                    if (accept(g))
                                        check(g, t);
                                }
                            });
                    }
                    break;
                case EnumerationMode::CanonicalOnly:
                    for (int n = lo ; n <= spec.n ; ++n) {
                        vector<Graph> roots;
                        int level = std::max(0, n - 2);
                        for_each_canonical_graph(level, [&] (const Graph & g) { roots.push_back(g); return true; }, prune);
                        for (auto & root : roots)
                            units.push_back([=] (Tally & t) {
                                std::function<void (const Graph &)> descend = [&] (const Graph & g) {
                                    if (g.size() == n) {
                                        if (accept(g))
                                            check(g, t);
                                        return;
                                    }
                                    for (auto & c : canonical_children(g, prune))
                                        descend(c);
                                };
                                descend(root);
                            });
                    }
                    break;
                case EnumerationMode::RandomSample: {
                    uint64_t chunk = 256;
                    for (uint64_t start = 0 ; start < spec.count ; start += chunk)
                        units.push_back([=] (Tally & t) {
                            for (uint64_t i = start ; i < std::min(spec.count, start + chunk) ; ++i) {
                                std::mt19937_64 rng(instance_seed(spec.seed, i));
                                int n = lo + static_cast<int>(rng() % static_cast<uint64_t>(spec.n - lo + 1));
                                auto g = random_graph(n, rng);
                                if (accept(g))
                                    check(g, t);
                            }
                        });
                    break;
                }
            }
            return units;
        }

        auto describe_hole(const vector<Vertex> & h) -> string
        {
            string s = "hole=";
            for (std::size_t i = 0 ; i < h.size() ; ++i)
                s += (i ? "," : "") + std::to_string(h[i]);
            return s;
        }

        auto collect_holes(const Graph & g) -> vector<vector<Vertex>>
        {
            vector<vector<Vertex>> holes;
            for_each_hole(g, 4, 0, Budget::unlimited(), [&] (const vector<Vertex> & h) { holes.push_back(h); return true; });
            return holes;
        }

        // ---- per-graph checks ------------------------------------------------

        auto check_subgraphs(const Graph & g, Tally & t) -> void
        {
            auto theta = find_theta(g);
            auto near_prism = find_near_prism(g);
            auto wheel = find_wheel(g, true);
            bool bad = false;
            if (theta)
                bad |= ! t.certificate(g, *theta);
            if (near_prism)
                bad |= ! t.certificate(g, *near_prism);
            if (wheel)
                bad |= ! t.certificate(g, *wheel);
            if (! theta && ! near_prism && ! wheel) {
                t.skip();
                return;
            }
            auto hole = find_even_hole(g);
            if (hole.hole)
                bad |= ! t.certificate(g, *hole.hole);
            string found = theta ? "theta" : near_prism ? "near-prism" : "even wheel";
            if (! hole.hole)
                t.fail(g, found, false, "no even hole found");
            else if (bad)
                t.fail(g, found, false, "certificate failed verification");
            else
                t.pass();
        }

        auto check_main(const Graph & g, Tally & t) -> void
        {
            vector<VertexSet> cliques{ VertexSet{} };
            for (Vertex v = 0 ; v < g.size() ; ++v)
                cliques.push_back(VertexSet{ v });
            for (auto [u, v] : g.edges())
                cliques.push_back(VertexSet{ u, v });
            for (auto & k : cliques) {
                auto verdict = check_main_theorem_unchecked(g, k);
                if (verdict.outcome == Outcome::Holds)
                    t.bump("clique_size_" + std::to_string(k.count()) + "_holds");
                t.outcome(g, verdict.outcome, "K=" + to_string(k), false, "no bisimplicial vertex in M=" + to_string(verdict.set_m));
            }
        }

        auto check_skewpyr_graph(const Graph & g, Tally & t) -> void
        {
            for (auto & hole : collect_holes(g)) {
                int len = static_cast<int>(hole.size());
                auto off = g.vertices() - VertexSet::from(hole);
                for (int start = 0 ; start < len ; ++start)
                    for (int dir : { 1, -1 }) {
                        vector<Vertex> h;
                        for (int k = 0 ; k < len ; ++k)
                            h.push_back(hole[((start + dir * k) % len + len) % len]);
                        for (Vertex a = off.first() ; a != -1 ; a = off.next(a))
                            for (Vertex b = off.first() ; b != -1 ; b = off.next(b)) {
                                if (a == b)
                                    continue;
                                auto o = check_skewpyr(g, h, a, b, true);
                                t.outcome(g, o, describe_hole(h) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
                            }
                    }
            }
        }

        auto check_trichotomy_graph(const Graph & g, Tally & t) -> void
        {
            for (auto & hole : collect_holes(g)) {
                auto off = g.vertices() - VertexSet::from(hole);
                for (Vertex a = off.first() ; a != -1 ; a = off.next(a))
                    t.outcome(g, check_hole_neighbourhood_trichotomy(g, hole, a), describe_hole(hole) + " a=" + std::to_string(a));
            }
        }

        // ---- aggregated checker results --------------------------------------

        auto aggregate(const Graph & g, Tally & t, const vector<CheckResult> & results) -> void
        {
            const CheckResult * worst = nullptr;
            bool holds = false;
            for (auto & r : results) {
                if (r.outcome == Outcome::Violated && (! worst || (worst->caveat && ! r.caveat)))
                    worst = &r;
                holds |= r.outcome == Outcome::Holds;
            }
            if (worst)
                t.fail(g, worst->witness, worst->caveat, worst->detail);
            else if (holds)
                t.pass();
            else
                t.skip();
        }

        // ---- H(T) family -----------------------------------------------------

        auto check_ht(const TreeColouring & tc, Tally & t) -> void
        {
            if (! valid_bipartition(tc.tree, tc.side)) {
                t.skip();
                return;
            }
            auto h = build_extended_tree_line_graph(tc.tree, tc.side);
            auto hole = find_even_hole(h.graph);
            if (hole.hole) {
                t.certificate(h.graph, *hole.hole);
                t.fail(h.graph, describe_hole(hole.hole->cycle), false, "even hole");
                return;
            }
            auto jr = validate_jstrip(h.graph, h.context.system);
            if (! jr.ok) {
                t.fail(h.graph, jr.witness, false, "J-strip system: " + jr.failed);
                return;
            }
            auto cr = validate_cross_edge(h.graph, h.context);
            if (! cr.ok) {
                t.fail(h.graph, cr.witness, false, "cross edge: " + cr.failed);
                return;
            }
            t.pass();
        }

        auto check_getlocal(const ExtendedTreeLineGraph & h, const VertexSet & x, Tally & t) -> void
        {
            auto & ctx = h.context;
            if ((x.contains(ctx.a) && x.contains(ctx.b)) || is_local(x, ctx)) {
                t.skip();
                return;
            }
            auto pair = nonlocal_pair(x, ctx);
            if (! pair) {
                t.fail(h.graph, "X=" + to_string(x), false, "no pair returned");
                return;
            }
            auto [p, q] = *pair;
            VertexSet pq{ p, q };
            if (p == q || ! pq.is_subset_of(x) || is_local(pq, ctx))
                t.fail(h.graph, "X=" + to_string(x), false, "returned pair " + to_string(pq) + " is local or outside X");
            else
                t.pass();
        }

        /// Extra vertices for the H(T) family: random, Z-like (seeing a and b),
        /// seeing one of a and b, hanging off the previous extra, or a Z-like
        /// vertex together with a pendant.
        auto augment_tree_instance(const ExtendedTreeLineGraph & h, std::mt19937_64 & rng) -> Graph
        {
            auto g = h.graph;
            int base = g.size();
            int extras = 1 + static_cast<int>(rng() % 4);
            auto m = h.context.system.vertices();
            auto some_of_m = [&] (VertexSet & nbrs, unsigned density) {
                m.for_each([&] (Vertex v) { if (rng() % density == 0) nbrs.set(v); });
            };
            for (int k = 0 ; k < extras ; ++k) {
                VertexSet nbrs;
                auto kind = rng() % 5;
                if (kind == 4) {
                    // a Z-vertex with a pendant vertex hanging off it
                    VertexSet z{ h.context.a, h.context.b };
                    some_of_m(z, 3);
                    VertexSet f;
                    some_of_m(f, 6);
                    auto next = g.with_vertex(z);
                    next = next.with_vertex(f.with(next.size() - 1));
                    if (is_even_hole_free(next))
                        g = std::move(next);
                    continue;
                }
                switch (kind) {
                    case 0:
                        for (Vertex v = 0 ; v < g.size() ; ++v)
                            if (rng() % 4 == 0)
                                nbrs.set(v);
                        break;
                    case 1:
                        nbrs = VertexSet{ h.context.a, h.context.b };
                        some_of_m(nbrs, 3);
                        break;
                    case 2:
                        nbrs.set(rng() % 2 ? h.context.a : h.context.b);
                        some_of_m(nbrs, 4);
                        break;
                    default:
                        if (g.size() > base)
                            nbrs.set(g.size() - 1);
                        some_of_m(nbrs, 5);
                        break;
                }
                auto next = g.with_vertex(nbrs);
                if (is_even_hole_free(next))
                    g = std::move(next);
            }
            return g;
        }

        /// Extra vertices for the pyramid family, each seeing a few path
        /// vertices (often the second vertex of a path) and possibly the apex
        /// or the previous extra.
        auto augment_pyramid_instance(const PyramidInstance & p, std::mt19937_64 & rng) -> Graph
        {
            auto g = p.graph;
            int extras = 1 + static_cast<int>(rng() % 4);
            for (int k = 0 ; k < extras ; ++k) {
                VertexSet nbrs;
                auto kind = rng() % 4;
                for (auto & path : p.pyramid.paths) {
                    if (rng() % 3 == 0)
                        continue;
                    auto & vs = path.verts;
                    std::size_t at = rng() % 2 ? 1 : 1 + rng() % (vs.size() - 1);
                    nbrs.set(vs[at]);
                    if (rng() % 4 == 0)
                        nbrs.set(vs[1 + rng() % (vs.size() - 1)]);
                }
                if (kind == 0 || kind == 1)
                    nbrs.set(0);
                if (kind >= 2 && g.size() > p.graph.size() && rng() % 2)
                    nbrs.set(g.size() - 1);
                if (kind == 3)
                    nbrs = VertexSet{ g.size() - 1 }.with(static_cast<Vertex>(1 + rng() % static_cast<unsigned>(p.graph.size() - 1)));
                auto next = g.with_vertex(nbrs);
                if (is_even_hole_free(next))
                    g = std::move(next);
            }
            return g;
        }

        auto check_tree_system(SuiteId suite, const Graph & g, Vertex a, Vertex b, const SuiteOptions & opts, Tally & t) -> void
        {
            auto r = search_tree_strip_system(g, a, b, opts.budget);
            if (! r.context) {
                if (r.budget_hit)
                    t.budget();
                else
                    t.skip();
                return;
            }
            if (r.maximality == Maximality::CertifiedOptimal)
                t.bump("certified_systems");
            else
                t.bump("locally_maximal_systems");
            auto & ctx = *r.context;
            switch (suite) {
                case SuiteId::TreeStruct: {
                    auto region = (g.vertices() - ctx.system.vertices() - ctx.z(g)).without(a).without(b);
                    vector<CheckResult> results;
                    int cap = region.count() <= 10 ? 0 : 6;
                    for_each_connected_subset(g, region, cap, [&] (const VertexSet & f) {
                        results.push_back(classify_small_subgraph(g, ctx, f, r.maximality).check);
                        return true;
                    });
                    aggregate(g, t, results);
                    break;
                }
                case SuiteId::MajorClique:
                    aggregate(g, t, { check_major_clique(g, ctx, r.maximality) });
                    break;
                case SuiteId::Funnies:
                    aggregate(g, t, check_funnies(g, ctx, r.maximality));
                    break;
                default:
                    aggregate(g, t, { check_splendid_refinements(g, ctx, r.maximality) });
                    break;
            }
        }

        auto tree_units(SuiteId suite, const EnumerationSpec & spec, const SuiteOptions & opts) -> vector<Unit>
        {
            if (spec.n < 0 || spec.n > 10)
                throw GraphError("the H(T) family is bounded by 10 tree edges");
            vector<Unit> units;
            bool sampled = spec.mode == EnumerationMode::RandomSample;
            if (suite == SuiteId::HtEhf) {
                if (! sampled) {
                    for (auto & tc : tree_colourings(spec.n))
                        units.push_back([tc] (Tally & t) { check_ht(tc, t); });
                    return units;
                }
                for (uint64_t start = 0 ; start < spec.count ; start += 64)
                    units.push_back([=] (Tally & t) {
                        for (uint64_t i = start ; i < std::min(spec.count, start + 64) ; ++i) {
                            std::mt19937_64 rng(instance_seed(spec.seed, i));
                            int edges = 3 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, spec.n - 2)));
                            auto tree = random_tree(edges + 1, rng);
                            auto side = tree.two_colouring();
                            if (rng() % 2)
                                for (auto & s : side)
                                    s = 1 - s;
                            if (tree.leaves().size() < 3)
                                t.skip();
                            else
                                check_ht({ tree, side }, t);
                        }
                    });
                return units;
            }
            auto family = std::make_shared<vector<ExtendedTreeLineGraph>>(extended_tree_family(spec.n));
            if (family->empty())
                return units;
            if (suite == SuiteId::GetLocal) {
                if (! sampled) {
                    for (std::size_t i = 0 ; i < family->size() ; ++i)
                        units.push_back([family, i] (Tally & t) {
                            auto & h = (*family)[i];
                            auto pool = h.context.system.vertices().with(h.context.a).with(h.context.b).to_vector();
                            if (pool.size() > 20)
                                return;
                            for (uint64_t m = 0 ; m < (uint64_t{ 1 } << pool.size()) ; ++m) {
                                VertexSet x;
                                for (std::size_t k = 0 ; k < pool.size() ; ++k)
                                    if ((m >> k) & 1)
                                        x.set(pool[k]);
                                check_getlocal(h, x, t);
                            }
                        });
                    return units;
                }
                for (uint64_t start = 0 ; start < spec.count ; start += 1024)
                    units.push_back([=] (Tally & t) {
                        for (uint64_t i = start ; i < std::min(spec.count, start + 1024) ; ++i) {
                            std::mt19937_64 rng(instance_seed(spec.seed, i));
                            auto & h = (*family)[rng() % family->size()];
                            VertexSet x;
                            h.context.system.vertices().with(h.context.a).with(h.context.b).for_each([&] (Vertex v) {
                                if (rng() % 2)
                                    x.set(v);
                            });
                            check_getlocal(h, x, t);
                        }
                    });
                return units;
            }
            if (! sampled) {
                for (std::size_t i = 0 ; i < family->size() ; ++i)
                    units.push_back([=] (Tally & t) {
                        auto & h = (*family)[i];
                        auto a = h.context.a, b = h.context.b;
                        check_tree_system(suite, h.graph, a, b, opts, t);
                        int n = h.graph.size();
                        for (uint64_t m = 0 ; m < (uint64_t{ 1 } << n) ; ++m) {
                            auto g = h.graph.with_vertex(VertexSet::from_word(m));
                            if (is_even_hole_free(g))
                                check_tree_system(suite, g, a, b, opts, t);
                        }
                    });
                return units;
            }
            for (uint64_t start = 0 ; start < spec.count ; start += 16)
                units.push_back([=] (Tally & t) {
                    for (uint64_t i = start ; i < std::min(spec.count, start + 16) ; ++i) {
                        std::mt19937_64 rng(instance_seed(spec.seed, i));
                        auto & h = (*family)[rng() % family->size()];
                        auto g = augment_tree_instance(h, rng);
                        check_tree_system(suite, g, h.context.a, h.context.b, opts, t);
                    }
                });
            return units;
        }

        // ---- pyramid family --------------------------------------------------

        auto check_pyramid_instance(SuiteId suite, const Graph & g, const SuiteOptions & opts, Tally & t) -> void
        {
            if (auto p = find_pyramid(g, 0))
                t.certificate(g, *p);
            auto r = search_pyramid_strip_system(g, 0, opts.budget);
            if (! r.system) {
                if (r.budget_hit)
                    t.budget();
                else {
                    t.bump("hypothesis failed: " + r.inapplicable);
                    t.skip();
                }
                return;
            }
            if (r.maximality == Maximality::CertifiedOptimal)
                t.bump("certified_systems");
            else
                t.bump("locally_maximal_systems");
            auto & sys = *r.system;
            switch (suite) {
                case SuiteId::PyrStrip:
                    aggregate(g, t, check_pyramid_attachment_theorem(g, sys, r.maximality));
                    break;
                case SuiteId::GrowStrips: {
                    auto results = check_apex_neighbour_types(g, sys, r.maximality);
                    for (Vertex v = (g.neighbours(0) - sys.vertices()).first() ; v != -1 ; v = (g.neighbours(0) - sys.vertices()).next(v))
                        t.bump("apex_neighbour_" + to_string(classify_apex_neighbour(g, sys, v).type));
                    aggregate(g, t, results);
                    break;
                }
                case SuiteId::GetClique:
                    aggregate(g, t, { check_apex_clique(g, sys, r.maximality) });
                    break;
                default: {
                    vector<CheckResult> results;
                    for (auto & strip : sys.strips) {
                        auto cs = complete_strip(g, strip, sys.apex);
                        if (! cs)
                            continue;
                        auto res = check_striptobip(g, *cs, true);
                        if (res.outcome != Outcome::Inapplicable)
                            t.bump("completed_strips_applicable");
                        results.push_back(std::move(res));
                    }
                    aggregate(g, t, results);
                    break;
                }
            }
        }

        auto pyramid_units(SuiteId suite, const EnumerationSpec & spec, const SuiteOptions & opts) -> vector<Unit>
        {
            if (spec.n < 2 || spec.n > 8)
                throw GraphError("the pyramid family takes path lengths 2..8");
            vector<Unit> units;
            if (spec.mode != EnumerationMode::RandomSample) {
                for (int x = 2 ; x <= spec.n ; ++x)
                    for (int y = x ; y <= spec.n ; ++y)
                        for (int z = y ; z <= spec.n ; ++z)
                            units.push_back([=] (Tally & t) {
                                auto p = pyramid_instance({ x, y, z });
                                check_pyramid_instance(suite, p.graph, opts, t);
                                int n = p.graph.size();
                                if (n > 16)
                                    return;
                                for (uint64_t m = 1 ; m < (uint64_t{ 1 } << n) ; ++m) {
                                    auto g = p.graph.with_vertex(VertexSet::from_word(m));
                                    if (is_even_hole_free(g))
                                        check_pyramid_instance(suite, g, opts, t);
                                }
                            });
                return units;
            }
            for (uint64_t start = 0 ; start < spec.count ; start += 16)
                units.push_back([=] (Tally & t) {
                    for (uint64_t i = start ; i < std::min(spec.count, start + 16) ; ++i) {
                        std::mt19937_64 rng(instance_seed(spec.seed, i));
                        std::array<int, 3> lengths;
                        for (auto & l : lengths)
                            l = 2 + static_cast<int>(rng() % static_cast<uint64_t>(spec.n - 1));
                        auto p = pyramid_instance(lengths);
                        auto g = augment_pyramid_instance(p, rng);
                        check_pyramid_instance(suite, g, opts, t);
                    }
                });
            return units;
        }
    }

    auto enumerate_graphs(const EnumerationSpec & spec, const std::function<bool (const Graph &)> & visit) -> void
    {
        SuiteOptions opts;
        bool stop = false;
        auto units = graph_units(spec, {}, [&] (const Graph & g, Tally &) {
            if (! stop && ! visit(g))
                stop = true;
        });
        Tally t;
        t.options = &opts;
        for (auto & u : units) {
            if (stop)
                break;
            u(t);
        }
    }

    auto run_suite(SuiteId suite, const EnumerationSpec & spec, const SuiteOptions & options) -> VerificationReport
    {
        auto start = std::chrono::steady_clock::now();
        vector<Unit> units;
        Keep ehf = [] (const Graph & g) { return is_even_hole_free(g); };
        switch (family_of(suite)) {
            case Family::Graphs:
                switch (suite) {
                    case SuiteId::Subgraphs: units = graph_units(spec, {}, check_subgraphs); break;
                    case SuiteId::Main: units = graph_units(spec, ehf, check_main); break;
                    case SuiteId::SkewPyr: units = graph_units(spec, ehf, check_skewpyr_graph); break;
                    default: units = graph_units(spec, ehf, check_trichotomy_graph); break;
                }
                break;
            case Family::TreeLineGraphs:
                units = tree_units(suite, spec, options);
                break;
            case Family::Pyramids:
                units = pyramid_units(suite, spec, options);
                break;
        }
        auto total = run_units(units, options);
        VerificationReport r;
        r.suite = to_string(suite);
        r.spec = spec;
        r.instances_tested = total.tested;
        r.inapplicable = total.inapplicable;
        r.passes = total.passes;
        r.fails = total.fails;
        r.budget_hits = total.budget_hits;
        r.violations = std::move(total.violations);
        r.counters = std::move(total.counters);
        r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }

    auto report_json(const VerificationReport & r, int indent, bool timing) -> string
    {
        json j;
        j["suite"] = r.suite;
        j["spec"] = {
            { "n", r.spec.n },
            { "min_n", r.spec.min_n },
            { "mode", to_string(r.spec.mode) },
            { "count", r.spec.count },
            { "seed", r.spec.seed },
            { "filter", to_string(r.spec.filter) },
        };
        j["instances_tested"] = r.instances_tested;
        j["inapplicable"] = r.inapplicable;
        j["passes"] = r.passes;
        j["fails"] = r.fails;
        j["budget_hits"] = r.budget_hits;
        j["caveat_free_fails"] = r.caveat_free_fails();
        j["accounting_ok"] = r.accounting_holds();
        j["counters"] = json::object();
        for (auto & [k, v] : r.counters)
            j["counters"][k] = v;
        j["violations"] = json::array();
        for (auto & v : r.violations)
            j["violations"].push_back({ { "graph", v.graph }, { "witness", v.witness }, { "caveat", v.caveat }, { "detail", v.detail } });
        if (timing)
            j["wall_seconds"] = r.wall_seconds;
        return j.dump(indent);
    }

    auto report_table(const VerificationReport & r) -> string
    {
        std::ostringstream out;
        out << r.suite << "  n=" << r.spec.n;
        if (r.spec.min_n != 0 && r.spec.min_n != r.spec.n)
            out << " (from " << r.spec.min_n << ")";
        out << "  mode=" << to_string(r.spec.mode);
        if (r.spec.mode == EnumerationMode::RandomSample)
            out << "  count=" << r.spec.count << "  seed=" << r.spec.seed;
        if (r.spec.filter != GraphFilter::None)
            out << "  filter=" << to_string(r.spec.filter);
        out << "\n";
        auto row = [&] (const string & k, uint64_t v) { out << "  " << std::left << std::setw(28) << k << " " << v << "\n"; };
        row("instances tested", r.instances_tested);
        row("inapplicable", r.inapplicable);
        row("passes", r.passes);
        row("fails", r.fails);
        row("  without caveat", r.caveat_free_fails());
        row("budget hits", r.budget_hits);
        for (auto & [k, v] : r.counters)
            if (k != "caveat_free_fails")
                row(k, v);
        out << "  " << std::left << std::setw(28) << "wall time" << " " << std::fixed << std::setprecision(2) << r.wall_seconds << " s\n";
        for (auto & v : r.violations)
            out << "  violation " << v.graph << (v.caveat ? " (caveat)" : "") << ": " << v.witness
                << (v.detail.empty() ? "" : " -- " + v.detail) << "\n";
        return out.str();
    }
}
