#include "tecs/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace tecs {

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(vertex_count_));
    std::set<std::pair<VertexId, VertexId>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= vertex_count_)
            throw std::invalid_argument("edge endpoint out of range");
        if (!seen.emplace(e.u, e.v).second)
            throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}");
        const auto id = static_cast<EdgeId>(i);
        adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
        adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
    }
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
    if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) return std::nullopt;
    const VertexId from = degree(a) <= degree(b) ? a : b;
    const VertexId to = from == a ? b : a;
    for (const Incidence& inc : incident(from))
        if (inc.neighbor == to) return inc.edge;
    return std::nullopt;
}

bool Graph::is_complete() const {
    const long n = vertex_count_;
    return static_cast<long>(edges_.size()) == n * (n - 1) / 2;
}

bool CutSet::contains_edge(EdgeId e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<std::uint8_t> EdgeSubgraph::incidence(const Graph& g) const {
    std::vector<std::uint8_t> chi(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : edges) chi[static_cast<std::size_t>(e)] = 1;
    return chi;
}

std::vector<VertexId> EdgeSubgraph::vertices(const Graph& g) const {
    std::vector<VertexId> out;
    for (EdgeId e : edges) {
        out.push_back(g.edge(e).u);
        out.push_back(g.edge(e).v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EdgeSubgraph EdgeSubgraph::from_incidence(std::span<const std::uint8_t> chi) {
    EdgeSubgraph h;
    for (std::size_t e = 0; e < chi.size(); ++e)
        if (chi[e]) h.edges.push_back(static_cast<EdgeId>(e));
    return h;
}

namespace {

bool is_active(std::span<const char> active, EdgeId e) {
    return active.empty() || active[static_cast<std::size_t>(e)] != 0;
}

}  // namespace

VertexPartition connected_components(const Graph& g, std::span<const char> active) {
    VertexPartition out;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    out.component_of.assign(n, -1);
    std::vector<VertexId> stack;
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (out.component_of[static_cast<std::size_t>(root)] != -1) continue;
        const int label = out.count();
        out.parts.emplace_back();
        out.component_of[static_cast<std::size_t>(root)] = label;
        stack.push_back(root);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            out.parts.back().push_back(v);
            for (const Incidence& inc : g.incident(v)) {
                if (!is_active(active, inc.edge)) continue;
                int& c = out.component_of[static_cast<std::size_t>(inc.neighbor)];
                if (c == -1) {
                    c = label;
                    stack.push_back(inc.neighbor);
                }
            }
        }
        std::sort(out.parts.back().begin(), out.parts.back().end());
    }
    return out;
}

VertexPartition connected_components(const Graph& g) { return connected_components(g, {}); }

std::vector<EdgeId> bridges(const Graph& g, std::span<const char> active) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> order(n, -1), low(n, 0);
    std::vector<EdgeId> out;

    struct Frame {
        VertexId v;
        EdgeId via;
        std::size_t next;
    };
    std::vector<Frame> stack;
    int clock = 0;
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (order[static_cast<std::size_t>(root)] != -1) continue;
        order[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto adj = g.incident(f.v);
            if (f.next < adj.size()) {
                const Incidence inc = adj[f.next++];
                if (inc.edge == f.via || !is_active(active, inc.edge)) continue;
                const auto w = static_cast<std::size_t>(inc.neighbor);
                if (order[w] == -1) {
                    order[w] = low[w] = clock++;
                    stack.push_back({inc.neighbor, inc.edge, 0});
                } else {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], order[w]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            const auto parent = static_cast<std::size_t>(stack.back().v);
            const auto child = static_cast<std::size_t>(done.v);
            low[parent] = std::min(low[parent], low[child]);
            if (low[child] > order[parent]) out.push_back(done.via);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeId> bridges(const Graph& g) { return bridges(g, {}); }

bool is_two_edge_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return connected_components(g).count() == 1 && bridges(g).empty();
}

bool is_two_edge_connected(const Graph& g, std::span<const EdgeId> subgraph_edges) {
    if (subgraph_edges.empty()) return true;
    EdgeMask active(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : subgraph_edges) active[static_cast<std::size_t>(e)] = 1;
    if (!bridges(g, active).empty()) return false;

    // Every touched vertex must land in the component of the first edge.
    const VertexPartition comps = connected_components(g, active);
    const int label = comps.component_of[static_cast<std::size_t>(g.edge(subgraph_edges[0]).u)];
    for (EdgeId e : subgraph_edges)
        if (comps.component_of[static_cast<std::size_t>(g.edge(e).u)] != label) return false;
    return true;
}

namespace {

// Vertices reachable from `start` while staying inside `allowed`.
VertexSet reach_within(const Graph& g, const VertexSet& allowed, VertexId start) {
    VertexSet seen(allowed.size(), 0);
    std::vector<VertexId> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (const Incidence& inc : g.incident(v)) {
            const auto w = static_cast<std::size_t>(inc.neighbor);
            if (allowed[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(inc.neighbor);
            }
        }
    }
    return seen;
}

}  // namespace

VertexSet minimal_side(const Graph& g, const VertexSet& side, VertexId s, VertexId t) {
    if (!side[static_cast<std::size_t>(s)] || side[static_cast<std::size_t>(t)])
        throw std::invalid_argument("minimal_side: side must contain s and not t");
    const VertexSet source = reach_within(g, side, s);
    VertexSet rest(side.size(), 0);
    for (std::size_t v = 0; v < side.size(); ++v) rest[v] = source[v] ? 0 : 1;
    const VertexSet sink = reach_within(g, rest, t);
    VertexSet out(side.size(), 0);
    for (std::size_t v = 0; v < side.size(); ++v) out[v] = sink[v] ? 0 : 1;
    return out;
}

std::vector<EdgeId> induced_edges(const Graph& g, const VertexSet& side) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (side[static_cast<std::size_t>(ed.u)] && side[static_cast<std::size_t>(ed.v)])
            out.push_back(e);
    }
    return out;
}

CutSet delta(const Graph& g, const VertexSet& side) {
    if (static_cast<int>(side.size()) != g.vertex_count())
        throw std::invalid_argument("delta: side has wrong length");
    const auto inside = std::count_if(side.begin(), side.end(), [](char c) { return c != 0; });
    if (inside == 0 || inside == g.vertex_count())
        throw std::invalid_argument("delta: side must be a proper nonempty subset");

    CutSet cut;
    cut.side = side;
    EdgeMask active(static_cast<std::size_t>(g.edge_count()), 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if ((side[static_cast<std::size_t>(ed.u)] != 0) != (side[static_cast<std::size_t>(ed.v)] != 0)) {
            cut.edges.push_back(e);
            active[static_cast<std::size_t>(e)] = 0;
        }
    }
    cut.minimal = connected_components(g, active).count() == 2;
    return cut;
}

std::vector<int> SimplifiedGraph::recover(const EdgeSubgraph& h) const {
    std::vector<char> chosen(static_cast<std::size_t>(graph.edge_count()), 0);
    for (EdgeId e : h.edges) chosen[static_cast<std::size_t>(e)] = 1;
    std::vector<int> out;
    for (std::size_t i = 0; i < carriers.size(); ++i) {
        // Both halves of a path are coparallel, so checking the first suffices
        // for 2-edge-connected subgraphs.
        if (chosen[static_cast<std::size_t>(carriers[i].front())]) out.push_back(static_cast<int>(i));
    }
    return out;
}

SimplifiedGraph simplify_multigraph(int vertex_count, std::span<const MultiEdge> edges) {
    std::vector<Edge> simple;
    EdgeWeights weights;
    std::vector<std::vector<EdgeId>> carriers;
    std::set<std::pair<VertexId, VertexId>> seen;
    int next_vertex = vertex_count;
    for (const MultiEdge& me : edges) {
        if (me.u == me.v) throw std::invalid_argument("simplify_multigraph: self-loop");
        if (me.u < 0 || me.v < 0 || me.u >= vertex_count || me.v >= vertex_count)
            throw std::invalid_argument("simplify_multigraph: endpoint out of range");
        const auto key = std::minmax(me.u, me.v);
        if (seen.insert(key).second) {
            carriers.push_back({static_cast<EdgeId>(simple.size())});
            simple.push_back({key.first, key.second});
            weights.push_back(me.weight);
            continue;
        }
        const VertexId x = next_vertex++;
        const auto first = static_cast<EdgeId>(simple.size());
        simple.push_back({std::min(me.u, x), std::max(me.u, x)});
        weights.push_back(me.weight);
        simple.push_back({std::min(me.v, x), std::max(me.v, x)});
        weights.push_back(0);
        carriers.push_back({first, first + 1});
    }
    return {Graph(next_vertex, std::move(simple)), std::move(weights), std::move(carriers)};
}

}  // namespace tecs
