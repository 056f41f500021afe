#include <ehf/bisimplicial.hh>
#include <ehf/canonical.hh>
#include <ehf/detectors.hh>
#include <ehf/generators.hh>
#include <ehf/harness.hh>
#include <ehf/pyramid_strips.hh>

#include <benchmark/benchmark.h>

#include <random>

using namespace ehf;

namespace
{
    auto sample(int n, int count, std::uint64_t seed) -> std::vector<Graph>
    {
        std::mt19937_64 rng(seed);
        std::vector<Graph> gs;
        for (int i = 0 ; i < count ; ++i)
            gs.push_back(random_graph(n, rng));
        return gs;
    }

    auto even_hole_free_sample(int n, int count, std::uint64_t seed) -> std::vector<Graph>
    {
        std::mt19937_64 rng(seed);
        std::vector<Graph> gs;
        while (static_cast<int>(gs.size()) < count)
            if (auto g = random_graph(n, rng) ; is_even_hole_free(g))
                gs.push_back(g);
        return gs;
    }
}

static void canonical_form_random(benchmark::State & state)
{
    auto gs = sample(static_cast<int>(state.range(0)), 64, 1);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(gs[i++ % gs.size()]));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(canonical_form_random)->Arg(8)->Arg(16)->Arg(32);

static void canonical_generation(benchmark::State & state)
{
    for (auto _ : state) {
        std::size_t k = 0;
        for_each_canonical_graph(static_cast<int>(state.range(0)), [&] (const Graph &) { ++k; return true; });
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(canonical_generation)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void even_hole_search(benchmark::State & state)
{
    auto gs = sample(static_cast<int>(state.range(0)), 64, 2);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(find_even_hole(gs[i++ % gs.size()]));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(even_hole_search)->Arg(8)->Arg(12)->Arg(16);

static void even_hole_free_recognition(benchmark::State & state)
{
    // the worst case for the search: it has to exhaust every hole
    auto gs = even_hole_free_sample(static_cast<int>(state.range(0)), 16, 3);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(is_even_hole_free(gs[i++ % gs.size()]));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(even_hole_free_recognition)->Arg(8)->Arg(10);

static void bisimplicial_scan(benchmark::State & state)
{
    auto gs = sample(static_cast<int>(state.range(0)), 64, 4);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(bisimplicial_vertices(gs[i++ % gs.size()]));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bisimplicial_scan)->Arg(8)->Arg(16)->Arg(32);

static void pyramid_strip_search(benchmark::State & state)
{
    auto p = pyramid_instance({ 2, 3, 4 });
    for (auto _ : state)
        benchmark::DoNotOptimize(search_pyramid_strip_system(p.graph, p.pyramid.apex));
}
BENCHMARK(pyramid_strip_search);

static void suite_throughput(benchmark::State & state)
{
    auto suite = static_cast<SuiteId>(state.range(0));
    auto spec = default_spec(suite);
    if (spec.mode == EnumerationMode::RandomSample)
        spec.count = 200;
    std::uint64_t instances = 0;
    for (auto _ : state)
        instances += run_suite(suite, spec).instances_tested;
    state.SetLabel(to_string(suite));
    state.counters["instances/s"] = benchmark::Counter(static_cast<double>(instances), benchmark::Counter::kIsRate);
}
BENCHMARK(suite_throughput)
    ->Arg(static_cast<int>(SuiteId::Main))
    ->Arg(static_cast<int>(SuiteId::GetLocal))
    ->Arg(static_cast<int>(SuiteId::PyrStrip))
    ->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
