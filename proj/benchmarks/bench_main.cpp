#include <benchmark/benchmark.h>

#include <random>

#include "ecctree/constructors.hpp"
#include "ecctree/metrics.hpp"
#include "ecctree/oracle.hpp"

namespace {

ecc::Tree random_tree(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<ecc::Edge> edges;
    for (ecc::Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<ecc::Vertex> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return ecc::Tree::from_edges(n, edges);
}

void BM_ecc_profile_sweeps(benchmark::State& state) {
    ecc::Tree tree = ecc::path(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto profile = ecc::ecc_profile(tree);
        benchmark::DoNotOptimize(profile.total);
    }
}
BENCHMARK(BM_ecc_profile_sweeps)->Arg(100)->Arg(1000);

void BM_eccentricities_two_sweep(benchmark::State& state) {
    ecc::Tree tree = ecc::path(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto ecc_values = ecc::eccentricities(tree);
        benchmark::DoNotOptimize(ecc_values.data());
    }
}
BENCHMARK(BM_eccentricities_two_sweep)->Arg(100)->Arg(1000);

void BM_canonical_form(benchmark::State& state) {
    ecc::Tree tree = random_tree(static_cast<int>(state.range(0)), 91);
    for (auto _ : state) {
        auto form = ecc::canonical_form(tree);
        benchmark::DoNotOptimize(form.data());
    }
}
BENCHMARK(BM_canonical_form)->Arg(50)->Arg(200);

void BM_order_scan(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    ecc::SearchOptions options;
    options.jobs = 1;
    options.count_iso = false;
    for (auto _ : state) {
        auto report = ecc::extremal_search(ecc::TreeClassSpec::all_of_order(n),
                                           {ecc::Objective::Kind::total_ecc, 0}, options);
        benchmark::DoNotOptimize(report.class_size_labeled);
    }
    state.SetItemsProcessed(state.iterations() * ecc::count_labeled_trees(n));
}
BENCHMARK(BM_order_scan)->Arg(6)->Arg(7)->Arg(8);

void BM_greedy_tree(benchmark::State& state) {
    std::vector<int> degrees{4, 4, 4, 3, 3, 3, 3, 3, 3, 3, 2, 2};
    while (degrees.size() < 27) degrees.push_back(1);
    ecc::DegreeSequence ds(degrees);
    for (auto _ : state) {
        auto tree = ecc::greedy_tree(ds);
        benchmark::DoNotOptimize(tree.root);
    }
}
BENCHMARK(BM_greedy_tree);

} // namespace

BENCHMARK_MAIN();
