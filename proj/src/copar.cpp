#include "tecs/copar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tecs {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

}  // namespace

CoparallelPartition coparallel_partition(const Graph& g) {
    const int m = g.edge_count();
    EdgeMask active(static_cast<std::size_t>(m), 1);
    for (EdgeId b : bridges(g)) active[static_cast<std::size_t>(b)] = 0;

    DisjointSets sets(m);
    for (EdgeId e = 0; e < m; ++e) {
        if (!active[static_cast<std::size_t>(e)]) continue;
        active[static_cast<std::size_t>(e)] = 0;
        for (EdgeId f : bridges(g, active)) sets.unite(e, f);
        active[static_cast<std::size_t>(e)] = 1;
    }

    CoparallelPartition cp;
    cp.class_of.assign(static_cast<std::size_t>(m), -1);
    std::map<int, int> index_of_root;
    for (EdgeId e = 0; e < m; ++e) {
        if (!active[static_cast<std::size_t>(e)]) continue;
        const int root = sets.find(e);
        auto [it, fresh] = index_of_root.emplace(root, cp.size());
        if (fresh) cp.classes.emplace_back();
        cp.classes[static_cast<std::size_t>(it->second)].push_back(e);
        cp.class_of[static_cast<std::size_t>(e)] = it->second;
    }
    return cp;
}

std::vector<Component> components_after_class_removal(const Graph& g, const CoparallelPartition& cp,
                                                      int class_index) {
    if (class_index < 0 || class_index >= cp.size())
        throw std::invalid_argument("components_after_class_removal: class index out of range");
    if (!is_two_edge_connected(g))
        throw std::invalid_argument("components_after_class_removal: graph is not 2-edge-connected");

    EdgeMask active(static_cast<std::size_t>(g.edge_count()), 1);
    for (EdgeId e : cp.classes[static_cast<std::size_t>(class_index)]) active[static_cast<std::size_t>(e)] = 0;
    const VertexPartition parts = connected_components(g, active);

    std::vector<Component> out(static_cast<std::size_t>(parts.count()));
    for (int c = 0; c < parts.count(); ++c) out[static_cast<std::size_t>(c)].vertices = parts.parts[static_cast<std::size_t>(c)];
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!active[static_cast<std::size_t>(e)]) continue;
        const int c = parts.component_of[static_cast<std::size_t>(g.edge(e).u)];
        out[static_cast<std::size_t>(c)].edges.push_back(e);
    }
    return out;
}

std::vector<Component> edge_components_after_class_removal(const Graph& g, const CoparallelPartition& cp,
                                                           int class_index) {
    auto all = components_after_class_removal(g, cp, class_index);
    std::erase_if(all, [](const Component& c) { return c.edges.empty(); });
    return all;
}

int dimension(const Graph& g) { return coparallel_partition(g).size(); }

}  // namespace tecs
