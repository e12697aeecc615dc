#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "tecs/graph.hpp"
#include "tecs/rational.hpp"

namespace tecs {

/// Highest-label push-relabel on an undirected network (each edge becomes two
/// opposite arcs of equal capacity). Only the first phase runs: the result is
/// a maximum preflow, which is enough for the flow value and a minimum cut.
template <class Cap>
class PushRelabel {
public:
    explicit PushRelabel(int vertex_count, Cap epsilon = Cap{})
        : n_(vertex_count), eps_(epsilon), first_(static_cast<std::size_t>(vertex_count), -1) {}

    void add_undirected(VertexId a, VertexId b, Cap capacity) {
        add_arc(a, b, capacity);
        add_arc(b, a, capacity);
        rev_.push_back(static_cast<int>(to_.size()) - 1);
        rev_.push_back(static_cast<int>(to_.size()) - 2);
    }

    /// Returns the excess collected at t.
    Cap run(VertexId s, VertexId t) {
        const auto n = static_cast<std::size_t>(n_);
        height_.assign(n, 0);
        excess_.assign(n, Cap{});
        current_.assign(first_.begin(), first_.end());
        buckets_.assign(2 * n + 1, {});
        s_ = s;
        t_ = t;
        global_relabel();
        height_[static_cast<std::size_t>(s)] = n_;
        for (int a = first_[static_cast<std::size_t>(s)]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
            const Cap c = res_[static_cast<std::size_t>(a)];
            if (c > eps_) push(a, c, s);
        }
        top_ = n_ - 1;
        while (top_ >= 0) {
            auto& bucket = buckets_[static_cast<std::size_t>(top_)];
            if (bucket.empty()) {
                --top_;
                continue;
            }
            const VertexId v = bucket.back();
            bucket.pop_back();
            if (height_[static_cast<std::size_t>(v)] != top_ || !(excess_[static_cast<std::size_t>(v)] > eps_))
                continue;
            discharge(v);
            const int h = height_[static_cast<std::size_t>(v)];
            if (excess_[static_cast<std::size_t>(v)] > eps_ && h < n_) activate(v);
        }
        return excess_[static_cast<std::size_t>(t)];
    }

    /// Vertices that cannot reach t in the residual network; contains s.
    VertexSet source_side() const {
        const auto n = static_cast<std::size_t>(n_);
        VertexSet reaches(n, 0);
        std::vector<VertexId> stack{t_};
        reaches[static_cast<std::size_t>(t_)] = 1;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (int a = first_[static_cast<std::size_t>(v)]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
                // Arc a: v -> w; w reaches v iff the reverse arc w -> v has residual.
                const int back = rev_[static_cast<std::size_t>(a)];
                const VertexId w = to_[static_cast<std::size_t>(a)];
                if (!reaches[static_cast<std::size_t>(w)] && res_[static_cast<std::size_t>(back)] > eps_) {
                    reaches[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        VertexSet side(n, 0);
        for (std::size_t v = 0; v < n; ++v) side[v] = reaches[v] ? 0 : 1;
        return side;
    }

private:
    void add_arc(VertexId from, VertexId to, Cap capacity) {
        to_.push_back(to);
        res_.push_back(capacity);
        next_.push_back(first_[static_cast<std::size_t>(from)]);
        first_[static_cast<std::size_t>(from)] = static_cast<int>(to_.size()) - 1;
    }

    void push(int arc, Cap amount, VertexId from) {
        const VertexId w = to_[static_cast<std::size_t>(arc)];
        res_[static_cast<std::size_t>(arc)] -= amount;
        res_[static_cast<std::size_t>(rev_[static_cast<std::size_t>(arc)])] += amount;
        excess_[static_cast<std::size_t>(from)] -= amount;
        const bool was_active = excess_[static_cast<std::size_t>(w)] > eps_;
        excess_[static_cast<std::size_t>(w)] += amount;
        if (!was_active && w != s_ && w != t_ && excess_[static_cast<std::size_t>(w)] > eps_ &&
            height_[static_cast<std::size_t>(w)] < n_)
            activate(w);
    }

    // A relabeled vertex can push to a vertex above the bucket being scanned,
    // so the scan position follows every activation.
    void activate(VertexId v) {
        const int h = height_[static_cast<std::size_t>(v)];
        buckets_[static_cast<std::size_t>(h)].push_back(v);
        top_ = std::max(top_, h);
    }

    void discharge(VertexId v) {
        const auto vi = static_cast<std::size_t>(v);
        while (excess_[vi] > eps_) {
            int& a = current_[vi];
            if (a == -1) {
                relabel(v);
                if (height_[vi] >= n_) return;
                a = first_[vi];
                continue;
            }
            const auto ai = static_cast<std::size_t>(a);
            const VertexId w = to_[ai];
            if (res_[ai] > eps_ && height_[vi] == height_[static_cast<std::size_t>(w)] + 1) {
                push(a, std::min(excess_[vi], res_[ai]), v);
                if (!(excess_[vi] > eps_)) return;
            }
            a = next_[ai];
        }
    }

    void relabel(VertexId v) {
        int best = 2 * n_;
        for (int a = first_[static_cast<std::size_t>(v)]; a != -1; a = next_[static_cast<std::size_t>(a)])
            if (res_[static_cast<std::size_t>(a)] > eps_)
                best = std::min(best, height_[static_cast<std::size_t>(to_[static_cast<std::size_t>(a)])] + 1);
        height_[static_cast<std::size_t>(v)] = best;
    }

    // Exact distance-to-sink labels; unreachable vertices start at n.
    void global_relabel() {
        std::fill(height_.begin(), height_.end(), n_);
        std::vector<VertexId> queue{t_};
        height_[static_cast<std::size_t>(t_)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const VertexId v = queue[head];
            for (int a = first_[static_cast<std::size_t>(v)]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
                const VertexId w = to_[static_cast<std::size_t>(a)];
                const int back = rev_[static_cast<std::size_t>(a)];
                if (height_[static_cast<std::size_t>(w)] == n_ && w != s_ &&
                    res_[static_cast<std::size_t>(back)] > eps_) {
                    height_[static_cast<std::size_t>(w)] = height_[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    int n_;
    Cap eps_;
    VertexId s_ = 0;
    VertexId t_ = 0;
    int top_ = 0;
    std::vector<int> first_, next_, rev_, current_, height_;
    std::vector<VertexId> to_;
    std::vector<Cap> res_, excess_;
    std::vector<std::vector<VertexId>> buckets_;
};

template <class Value>
struct StCut {
    Value value{};
    CutSet cut;
};

/// Minimum s-t cut under floating-point capacities (solver path). The side
/// contains s; `value` is recomputed from the returned cut edges.
StCut<double> min_st_cut(const Graph& g, std::span<const double> capacities, VertexId s, VertexId t);

/// Exact variant: capacities are scaled to a common denominator and the flow
/// runs on 64-bit integers (oracle path).
StCut<Rational> min_st_cut(const Graph& g, std::span<const Rational> capacities, VertexId s, VertexId t);

}  // namespace tecs
