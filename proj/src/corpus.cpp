#include "tecs/corpus.hpp"

#include <stdexcept>

#include "tecs/instances.hpp"
#include "tecs/rng.hpp"

namespace tecs {

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph complete_minus_edge(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u != 0 || v != 1) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

CciExample example_cci() {
    // 0 (0,0), 1 (1,0), 2 (0,1), 3 (1,1), 4 left apex, 5 right apex.
    std::vector<Edge> edges{{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 4}, {2, 4}, {1, 5}, {3, 5}};
    CciExample ex{Graph(6, std::move(edges)), {1, 0, 1, 0, 1, 0}, 1, 0, 2, 3};
    return ex;
}

CpciExample example_cpci() {
    // Corners 0, 1, 2; bottom side 0-3-4-1, right side 1-5-6-2, left side 0-7-8-2.
    std::vector<Edge> edges{{0, 3}, {3, 4}, {4, 1}, {1, 5}, {5, 6}, {6, 2}, {0, 7}, {7, 8}, {8, 2},
                            {3, 7}, {4, 5}, {6, 8}};
    return {Graph(9, std::move(edges)), {7, 1, 4}, {9, 10, 11}};
}

BridgeExample example_bridge() {
    // S: triangle 0-1-2 and pendant 3 via f = {2,3}. Outside: triangle 4-5-6.
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {4, 5}, {5, 6}, {4, 6}, {0, 4}, {3, 5}, {3, 6}};
    return {Graph(7, std::move(edges)), {1, 1, 1, 1, 0, 0, 0}, 0, 4, 3, {8, 9}};
}

std::vector<NamedGraph> verification_corpus(int random_count, std::uint64_t seed) {
    std::vector<NamedGraph> out;
    for (int n = 3; n <= 8; ++n) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
    for (int n = 4; n <= 7; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
    out.push_back({"K5-e", complete_minus_edge(5)});
    out.push_back({"cci-example", example_cci().graph});
    out.push_back({"cpci-example", example_cpci().graph});
    out.push_back({"bridge-example", example_bridge().graph});

    std::uint64_t state = seed;
    for (int i = 0; i < random_count;) {
        Xoshiro256 rng(splitmix64(state));
        const int n = static_cast<int>(rng.uniform_int(4, 8));
        const int chords = static_cast<int>(rng.uniform_int(0, 3));
        Instance inst = random_2ec_graph(n, chords, rng());
        if (inst.graph.edge_count() > 14) continue;
        out.push_back({"random-" + std::to_string(i), std::move(inst.graph)});
        ++i;
    }
    return out;
}

}  // namespace tecs
