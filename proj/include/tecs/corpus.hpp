#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tecs/graph.hpp"

namespace tecs {

Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_n without the edge {0, 1}.
Graph complete_minus_edge(int n);

/// Unit square with a triangle glued to its left and right side. S is the
/// left triangle and delta(S) = {f1, f2}.
struct CciExample {
    Graph graph;
    VertexSet s;
    EdgeId f1, f2;
    EdgeId e1, e2;
};
CciExample example_cci();

/// Triangle whose sides are split into three edges each, plus one chord at
/// every corner. The middle edges f1, f2, f3 form one coparallel class and the
/// rest falls apart into three triangles; e_i is the chord of triangle i.
struct CpciExample {
    Graph graph;
    std::array<EdgeId, 3> f;
    std::array<EdgeId, 3> e;
};
CpciExample example_cpci();

/// Two triangles joined by three cut edges, where S = first triangle plus a
/// pendant vertex hanging off it by the edge f. f is a bridge of G[S] and the
/// two cut edges at the pendant vertex form delta(S,f).
struct BridgeExample {
    Graph graph;
    VertexSet s;
    EdgeId e1, e2, f;
    std::vector<EdgeId> far_cut_edges;
};
BridgeExample example_bridge();

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Cycles C3..C8, K4..K7, K5 - e, the three examples above and
/// `random_count` random 2-edge-connected graphs with 4..8 vertices and at
/// most 14 edges.
std::vector<NamedGraph> verification_corpus(int random_count = 20, std::uint64_t seed = 1);

}  // namespace tecs
