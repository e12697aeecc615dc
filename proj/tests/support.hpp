#pragma once

// Independent brute-force oracles used only by the tests. None of them calls
// into the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "tecs/graph.hpp"

namespace testing_oracle {

using tecs::Edge;
using tecs::EdgeId;
using tecs::Graph;

inline bool bit(std::uint64_t mask, int i) { return ((mask >> i) & 1U) != 0; }

// Number of vertices reachable from `start` using edges in `mask`.
inline int reach_count(const Graph& g, std::uint64_t mask, int start, std::vector<char>& seen) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int count = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++count;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (!bit(mask, e) || !g.edge(e).touches(v)) continue;
            const int w = g.edge(e).other(v);
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return count;
}

// Edge subgraph is connected and stays connected after deleting any one edge.
inline bool two_edge_connected(const Graph& g, std::uint64_t mask) {
    if (mask == 0) return true;
    std::vector<char> touched(static_cast<std::size_t>(g.vertex_count()), 0);
    int start = -1;
    int vertices = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!bit(mask, e)) continue;
        for (int v : {g.edge(e).u, g.edge(e).v}) {
            if (!touched[static_cast<std::size_t>(v)]) {
                touched[static_cast<std::size_t>(v)] = 1;
                ++vertices;
            }
            start = v;
        }
    }
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()));
    if (reach_count(g, mask, start, seen) != vertices) return false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!bit(mask, e)) continue;
        if (reach_count(g, mask & ~(std::uint64_t{1} << e), start, seen) != vertices) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> all_2ec(const Graph& g) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask)
        if (two_edge_connected(g, mask)) out.push_back(mask);
    return out;
}

inline std::int64_t best_weight(const Graph& g, const std::vector<std::int64_t>& w) {
    std::int64_t best = 0;
    for (std::uint64_t mask : all_2ec(g)) {
        std::int64_t sum = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (bit(mask, e)) sum += w[static_cast<std::size_t>(e)];
        best = std::max(best, sum);
    }
    return best;
}

using Q = boost::rational<long long>;

// Rank of a rational matrix by plain Gaussian elimination.
inline int rank(std::vector<std::vector<Q>> rows) {
    int r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        std::size_t p = static_cast<std::size_t>(r);
        while (p < rows.size() && rows[p][c].numerator() == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[static_cast<std::size_t>(r)]);
        for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
            if (rows[i][c].numerator() == 0) continue;
            const Q f = rows[i][c] / rows[static_cast<std::size_t>(r)][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[static_cast<std::size_t>(r)][k];
        }
        ++r;
    }
    return r;
}

// Affine dimension of 0/1 vectors over m coordinates.
inline int affine_rank(const std::vector<std::uint64_t>& vectors, int m) {
    if (vectors.empty()) return -1;
    std::vector<std::vector<Q>> rows;
    for (std::size_t i = 1; i < vectors.size(); ++i) {
        std::vector<Q> row(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) row[static_cast<std::size_t>(k)] = Q(int{bit(vectors[i], k)} - int{bit(vectors[0], k)});
        rows.push_back(std::move(row));
    }
    return rank(std::move(rows));
}

// Smallest cut capacity over all vertex sets containing s but not t.
inline double min_cut_value(const Graph& g, const std::vector<double>& cap, int s, int t) {
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t side = 0; side < (std::uint64_t{1} << g.vertex_count()); ++side) {
        if (!bit(side, s) || bit(side, t)) continue;
        double value = 0.0;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (bit(side, g.edge(e).u) != bit(side, g.edge(e).v)) value += cap[static_cast<std::size_t>(e)];
        best = std::min(best, value);
    }
    return best;
}

// Edges e, f (e != f) are coparallel iff G - e - f is disconnected while
// neither is a bridge of G.
inline bool disconnects(const Graph& g, std::uint64_t removed) {
    const std::uint64_t all = (g.edge_count() == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << g.edge_count()) - 1;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()));
    return reach_count(g, all & ~removed, 0, seen) != g.vertex_count();
}

}  // namespace testing_oracle
