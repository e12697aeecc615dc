// OpenMP kernels against their serial reference versions.

#include <map>

#include <benchmark/benchmark.h>

#include "tecs/corpus.hpp"
#include "tecs/instances.hpp"
#include "tecs/oracle.hpp"
#include "tecs/rng.hpp"
#include "tecs/separation.hpp"

namespace {

using namespace tecs;

struct Fixture {
    Instance inst;
    std::vector<double> x;
};

const Fixture& knn_fixture(int n) {
    static std::map<int, Fixture> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    InstanceSpec spec{SparsifiedKnn{n, 4, 0.5}, 11};
    Fixture f{generate(spec), {}};
    Xoshiro256 rng(5);
    for (int e = 0; e < f.inst.graph.edge_count(); ++e) f.x.push_back(rng.uniform01());
    return cache.emplace(n, std::move(f)).first->second;
}

void BM_AsymmetricParallel(benchmark::State& state) {
    const Fixture& f = knn_fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(separate_asymmetric(f.inst.graph, f.x));
}

void BM_AsymmetricSerial(benchmark::State& state) {
    const Fixture& f = knn_fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::separate_asymmetric(f.inst.graph, f.x));
}

void BM_ConnectivityParallel(benchmark::State& state) {
    const Fixture& f = knn_fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(separate_connectivity(f.inst.graph, f.x));
}

void BM_ConnectivitySerial(benchmark::State& state) {
    const Fixture& f = knn_fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::separate_connectivity(f.inst.graph, f.x));
}

struct FaceFixture {
    Graph g = complete_graph(6);
    VertexSet2EC set;
    std::vector<LinearInequality> rows;
    int dim = 0;

    FaceFixture() {
        set = enumerate_2ec(g);
        dim = affine_dimension(set);
        for (EdgeId e = 0; e < g.edge_count(); ++e) rows.push_back(make_box_upper(g, e));
        for (auto& r : enumerate_odd_stars(g)) rows.push_back(std::move(r));
    }
};

const FaceFixture& face_fixture() {
    static const FaceFixture f;
    return f;
}

void BM_FaceReportsParallel(benchmark::State& state) {
    const FaceFixture& f = face_fixture();
    for (auto _ : state) benchmark::DoNotOptimize(face_reports(f.set, f.rows, f.dim));
}

void BM_FaceReportsSerial(benchmark::State& state) {
    const FaceFixture& f = face_fixture();
    for (auto _ : state) benchmark::DoNotOptimize(reference::face_reports(f.set, f.rows, f.dim));
}

}  // namespace

BENCHMARK(BM_AsymmetricParallel)->Arg(60)->Arg(150)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AsymmetricSerial)->Arg(60)->Arg(150)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConnectivityParallel)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConnectivitySerial)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FaceReportsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FaceReportsSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
