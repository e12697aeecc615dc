#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "support.hpp"
#include "tecs/corpus.hpp"
#include "tecs/instances.hpp"
#include "tecs/rng.hpp"
#include "tecs/separation.hpp"

using namespace tecs;
using testing_oracle::bit;

namespace {

struct BruteMax {
    double asymmetric = 0.0;
    double connectivity = 0.0;
};

// Largest violation of each cut family over every vertex subset.
BruteMax brute_max(const Graph& g, const std::vector<double>& x) {
    BruteMax out;
    const int n = g.vertex_count();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        double cut_sum = 0.0;
        double best_cut_edge = 0.0;
        double best_in = -1.0, best_out = -1.0;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const bool a = bit(mask, g.edge(e).u), b = bit(mask, g.edge(e).v);
            const double xe = x[static_cast<std::size_t>(e)];
            if (a != b) {
                cut_sum += xe;
                best_cut_edge = std::max(best_cut_edge, xe);
            } else if (a) {
                best_in = std::max(best_in, xe);
            } else {
                best_out = std::max(best_out, xe);
            }
        }
        out.asymmetric = std::max(out.asymmetric, 2 * best_cut_edge - cut_sum);
        if (best_in >= 0 && best_out >= 0)
            out.connectivity = std::max(out.connectivity, 2 * best_in + 2 * best_out - cut_sum - 2);
    }
    return out;
}

std::vector<double> random_point(const Graph& g, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    std::vector<double> x(static_cast<std::size_t>(g.edge_count()));
    for (double& v : x) {
        const auto pick = rng.uniform_int(0, 5);
        v = pick >= 4 ? 1.0 : static_cast<double>(pick) / 4.0;
    }
    return x;
}

std::vector<double> indicator(const Graph& g, std::uint64_t mask) {
    std::vector<double> x(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) x[static_cast<std::size_t>(e)] = bit(mask, e) ? 1.0 : 0.0;
    return x;
}

void check_rows(const Graph& g, const std::vector<double>& x, const SeparationResult& res) {
    for (const auto& v : res.violated) {
        CHECK(v.violation > 1e-6);
        CHECK(v.row.violation(x) == doctest::Approx(v.violation));
    }
    for (std::size_t i = 1; i < res.violated.size(); ++i) CHECK(res.violated[i - 1].violation >= res.violated[i].violation - 1e-12);
    CHECK(res.exhausted == res.violated.empty());
    (void)g;
}

bool same_result(const SeparationResult& a, const SeparationResult& b) {
    if (a.exhausted != b.exhausted || a.violated.size() != b.violated.size()) return false;
    for (std::size_t i = 0; i < a.violated.size(); ++i)
        if (!a.violated[i].row.same_row(b.violated[i].row) || a.violated[i].violation != b.violated[i].violation) return false;
    return true;
}

std::vector<Graph> sample_graphs() {
    std::vector<Graph> out{cycle_graph(5), complete_graph(5), example_cci().graph, example_cpci().graph,
                           example_bridge().graph};
    for (std::uint64_t seed = 0; seed < 12; ++seed) out.push_back(random_2ec_graph(5 + static_cast<int>(seed % 5), 3, seed).graph);
    return out;
}

}  // namespace

TEST_CASE("asymmetric examples") {
    const Graph c4 = cycle_graph(4);
    const std::vector<double> x{1, 0, 0, 0};
    const auto res = separate_asymmetric(c4, x);
    REQUIRE_FALSE(res.violated.empty());
    CHECK(res.violated.front().violation == doctest::Approx(1.0));
    CHECK(res.violated.front().row.coefficient(0) == 1);

    const CciExample ex = example_cci();
    std::vector<double> y(static_cast<std::size_t>(ex.graph.edge_count()), 1.0);
    y[static_cast<std::size_t>(ex.f1)] = y[static_cast<std::size_t>(ex.f2)] = 0.0;
    CHECK(separate_asymmetric(ex.graph, y).exhausted);
}

TEST_CASE("connectivity examples") {
    const CciExample ex = example_cci();
    const int m = ex.graph.edge_count();
    std::vector<double> y(static_cast<std::size_t>(m), 1.0);
    y[static_cast<std::size_t>(ex.f1)] = y[static_cast<std::size_t>(ex.f2)] = 0.0;
    for (bool heuristic : {false, true}) {
        SeparationOptions opts;
        opts.connectivity_heuristic = heuristic;
        const auto res = separate_connectivity(ex.graph, y, opts);
        REQUIRE_FALSE(res.violated.empty());
        CHECK(res.violated.front().violation == doctest::Approx(2.0));
    }
    const std::vector<double> ones(static_cast<std::size_t>(m), 1.0);
    CHECK(separate_connectivity(ex.graph, ones).exhausted);
    const std::vector<double> zeros(static_cast<std::size_t>(m), 0.0);
    CHECK(separate_connectivity(ex.graph, zeros).exhausted);
}

TEST_CASE("coparallel examples") {
    const CpciExample ex = example_cpci();
    const auto cp = coparallel_partition(ex.graph);
    std::vector<double> y(static_cast<std::size_t>(ex.graph.edge_count()), 0.5);
    for (EdgeId f : ex.f) y[static_cast<std::size_t>(f)] = 0.0;
    const auto res = separate_coparallel(ex.graph, cp, y);
    REQUIRE(res.violated.size() == 1);
    CHECK(res.violated.front().violation == doctest::Approx(0.5));
    CHECK(res.violated.front().row.family() == Family::CoparallelClass);

    const std::vector<double> ones(static_cast<std::size_t>(ex.graph.edge_count()), 1.0);
    CHECK(separate_coparallel(ex.graph, cp, ones).exhausted);

    const Graph k4 = complete_graph(4);
    const std::vector<double> half(6, 0.5);
    const auto none = separate_coparallel(k4, coparallel_partition(k4), half);
    CHECK(none.exhausted);
    CHECK(none.violated.empty());

    const Graph path(3, {{0, 1}, {1, 2}});
    const std::vector<double> x2(2, 0.5);
    CHECK_THROWS_AS(separate_coparallel(path, coparallel_partition(path), x2), std::invalid_argument);
}

TEST_CASE("coparallel separation picks the most violated choice") {
    const CpciExample ex = example_cpci();
    const auto cp = coparallel_partition(ex.graph);
    const int c = cp.class_of[static_cast<std::size_t>(ex.f[0])];
    const auto comps = edge_components_after_class_removal(ex.graph, cp, c);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto x = random_point(ex.graph, seed);
        double best = 0.0;
        for (EdgeId f : cp.classes[static_cast<std::size_t>(c)])
            for (EdgeId a : comps[0].edges)
                for (EdgeId b : comps[1].edges)
                    for (EdgeId d : comps[2].edges) {
                        const std::array<EdgeId, 3> pick{a, b, d};
                        best = std::max(best, make_coparallel_class(ex.graph, cp, c, f, pick).violation(x));
                    }
        const auto res = separate_coparallel(ex.graph, cp, x);
        if (best > 1e-6) {
            REQUIRE_FALSE(res.violated.empty());
            CHECK(res.violated.front().violation == doctest::Approx(best));
        } else {
            CHECK(res.exhausted);
        }
    }
}

TEST_CASE("exact separation matches brute force") {
    std::uint64_t seed = 100;
    for (const Graph& g : sample_graphs()) {
        for (int trial = 0; trial < 6; ++trial) {
            const auto x = random_point(g, seed++);
            const BruteMax expected = brute_max(g, x);
            const auto asym = separate_asymmetric(g, x);
            check_rows(g, x, asym);
            if (expected.asymmetric > 1e-6) {
                REQUIRE_FALSE(asym.violated.empty());
                CHECK(asym.violated.front().violation == doctest::Approx(expected.asymmetric));
            } else {
                CHECK(asym.exhausted);
            }
            const auto conn = separate_connectivity(g, x);
            check_rows(g, x, conn);
            if (expected.connectivity > 1e-6) {
                REQUIRE_FALSE(conn.violated.empty());
                CHECK(conn.violated.front().violation == doctest::Approx(expected.connectivity));
            } else {
                CHECK(conn.exhausted);
            }
            SeparationOptions heuristic;
            heuristic.connectivity_heuristic = true;
            heuristic.seed = seed;
            const auto quick = separate_connectivity(g, x, heuristic);
            check_rows(g, x, quick);
            CHECK(quick.exhausted == conn.exhausted);
        }
    }
}

TEST_CASE("separated rows use minimal cuts") {
    for (const Graph& g : sample_graphs()) {
        const auto x = random_point(g, 7);
        for (const auto& v : separate_asymmetric(g, x).violated)
            CHECK(std::get<AsymmetricWitness>(v.row.provenance()).cut.minimal);
        for (const auto& v : separate_connectivity(g, x).violated)
            CHECK(std::get<ConnectivityWitness>(v.row.provenance()).cut.minimal);
    }
}

TEST_CASE("separation beats the row of a non-minimal cut") {
    // Square 0-1-2-3 with S = {0, 2}: G[S] has no edges, so delta(S) is all four edges.
    const Graph c4 = cycle_graph(4);
    VertexSet s{1, 0, 1, 0};
    const CutSet wide = delta(c4, s);
    REQUIRE_FALSE(wide.minimal);
    const std::vector<double> x{1.0, 0.25, 0.25, 0.25};
    const double wide_violation = make_asymmetric(c4, wide, 0).violation(x);
    const auto res = separate_asymmetric(c4, x);
    REQUIRE_FALSE(res.violated.empty());
    CHECK(res.violated.front().violation >= wide_violation);
    CHECK(res.violated.front().violation == doctest::Approx(0.75));
}

TEST_CASE("integral points are separated exactly when they are not 2-edge-connected") {
    for (const Graph& g : sample_graphs()) {
        if (g.edge_count() > 12) continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
            const auto x = indicator(g, mask);
            const bool cut_off = !separate_asymmetric(g, x).exhausted || !separate_connectivity(g, x).exhausted;
            if (cut_off == testing_oracle::two_edge_connected(g, mask)) {
                FAIL_CHECK("mask " << mask << " misclassified");
            }
        }
    }
}

TEST_CASE("parallel kernels match the serial reference") {
    std::uint64_t seed = 500;
    std::vector<Graph> graphs = sample_graphs();
    graphs.push_back(generate(InstanceSpec{SparsifiedKnn{40, 4, 0.5}, 3}).graph);
    for (const Graph& g : graphs) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto x = random_point(g, seed++);
            CHECK(same_result(separate_asymmetric(g, x), reference::separate_asymmetric(g, x)));
            CHECK(same_result(separate_connectivity(g, x), reference::separate_connectivity(g, x)));
            SeparationOptions opts;
            opts.connectivity_heuristic = true;
            opts.seed = seed;
            CHECK(same_result(separate_connectivity(g, x, opts), reference::separate_connectivity(g, x, opts)));
        }
    }
}
