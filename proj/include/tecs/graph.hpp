#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tecs {

using VertexId = int;
using EdgeId = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool touches(VertexId w) const { return w == u || w == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    VertexId neighbor;
    EdgeId edge;
};

/// Simple undirected graph. Edge ids are dense in [0, edge_count()) and fixed
/// at construction; the graph is immutable afterwards.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    /// Throws std::invalid_argument on self-loops, duplicate pairs or
    /// out-of-range endpoints.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Incidence> incident(VertexId v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }
    int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
    bool is_complete() const;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// Integer weight per edge id.
using EdgeWeights = std::vector<std::int64_t>;

/// Membership flag per vertex.
using VertexSet = std::vector<char>;

/// Membership flag per edge; used to restrict queries to a subgraph G[F].
using EdgeMask = std::vector<char>;

struct VertexPartition {
    std::vector<int> component_of;
    std::vector<std::vector<VertexId>> parts;

    int count() const { return static_cast<int>(parts.size()); }
};

/// delta(S) together with its side and a minimality certificate.
struct CutSet {
    VertexSet side;
    std::vector<EdgeId> edges;
    /// G - delta(S) has exactly two connected components.
    bool minimal = false;

    bool contains_vertex(VertexId v) const { return side[static_cast<std::size_t>(v)] != 0; }
    bool contains_edge(EdgeId e) const;
};

/// Edge subgraph H = G[F]; its vertex set is the set of endpoints of F.
struct EdgeSubgraph {
    std::vector<EdgeId> edges;

    std::vector<std::uint8_t> incidence(const Graph& g) const;
    std::vector<VertexId> vertices(const Graph& g) const;
    static EdgeSubgraph from_incidence(std::span<const std::uint8_t> chi);
};

VertexPartition connected_components(const Graph& g);
/// Components of (V, F) for the edges F flagged in `active`.
VertexPartition connected_components(const Graph& g, std::span<const char> active);

/// Bridges via one low-link depth-first traversal. Sorted ascending.
std::vector<EdgeId> bridges(const Graph& g);
std::vector<EdgeId> bridges(const Graph& g, std::span<const char> active);

/// Connected and bridgeless. The empty graph and a single vertex qualify.
bool is_two_edge_connected(const Graph& g);
/// Whether the edge subgraph G[F] is 2-edge-connected (isolated vertices of G
/// are not part of G[F]).
bool is_two_edge_connected(const Graph& g, std::span<const EdgeId> subgraph_edges);

/// Throws std::invalid_argument unless the side is a proper nonempty subset.
CutSet delta(const Graph& g, const VertexSet& side);

/// Shrinks an s-t separating side to one whose cut is inclusion-minimal and a
/// subset of the original: keep the component of s in G[S], then grow it by
/// everything outside the component of t. Requires s in side, t not in side,
/// and g connected.
VertexSet minimal_side(const Graph& g, const VertexSet& side, VertexId s, VertexId t);

/// Edges with both endpoints inside `side` (E(G[S])).
std::vector<EdgeId> induced_edges(const Graph& g, const VertexSet& side);

struct MultiEdge {
    VertexId u;
    VertexId v;
    std::int64_t weight;
};

/// Result of replacing parallel edges by paths of length two.
struct SimplifiedGraph {
    Graph graph;
    EdgeWeights weights;
    /// For each original multi-edge, the simple edges that represent it.
    std::vector<std::vector<EdgeId>> carriers;

    /// Original multi-edges selected by a subgraph of the simplified graph.
    std::vector<int> recover(const EdgeSubgraph& h) const;
};

/// First copy of a vertex pair stays a simple edge; every further copy becomes
/// u - x - v through a fresh vertex x, weight on the first half, 0 on the
/// second. Throws std::invalid_argument on self-loops.
SimplifiedGraph simplify_multigraph(int vertex_count, std::span<const MultiEdge> edges);

}  // namespace tecs
