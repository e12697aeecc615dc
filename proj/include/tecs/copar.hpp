#pragma once

#include <vector>

#include "tecs/graph.hpp"

namespace tecs {

/// Partition CP(G) of the non-bridge edges into coparallel classes. Classes
/// are ordered by their smallest edge id, edges inside a class ascending.
struct CoparallelPartition {
    std::vector<std::vector<EdgeId>> classes;
    /// Class index per edge, -1 for bridges.
    std::vector<int> class_of;

    int size() const { return static_cast<int>(classes.size()); }
};

/// A connected component of G - C: its vertices and the edges among them.
struct Component {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

/// Two non-bridge edges e, f are merged iff f is a bridge of G - B - e, where
/// B is the set of bridges of G.
CoparallelPartition coparallel_partition(const Graph& g);

/// Connected components of G - C, including edgeless single vertices,
/// ordered by smallest vertex. Throws std::invalid_argument unless g is
/// 2-edge-connected.
std::vector<Component> components_after_class_removal(const Graph& g, const CoparallelPartition& cp,
                                                      int class_index);

/// Only the components of G - C that contain edges.
std::vector<Component> edge_components_after_class_removal(const Graph& g, const CoparallelPartition& cp,
                                                           int class_index);

/// |CP(G)|, which is the dimension of the polytope of 2-edge-connected subgraphs.
int dimension(const Graph& g);

}  // namespace tecs
