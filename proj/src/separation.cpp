#include "tecs/separation.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

#include "tecs/maxflow.hpp"
#include "tecs/rng.hpp"

namespace tecs {

namespace {

double at(std::span<const double> x, EdgeId e) { return x[static_cast<std::size_t>(e)]; }

void check_point(const Graph& g, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("separation: point has wrong length");
}

// Minimum cut separating s from t under `caps`, shrunk to a minimal cut.
CutSet minimal_cut(const Graph& g, std::span<const double> caps, VertexId s, VertexId t) {
    const StCut<double> raw = min_st_cut(g, caps, s, t);
    return delta(g, minimal_side(g, raw.cut.side, s, t));
}

std::optional<ViolatedRow> asymmetric_for_edge(const Graph& g, std::span<const double> x, EdgeId e, double tol) {
    if (at(x, e) <= tol) return std::nullopt;
    std::vector<double> caps(x.begin(), x.end());
    caps[static_cast<std::size_t>(e)] = 0.0;
    const Edge& ed = g.edge(e);
    CutSet cut = minimal_cut(g, caps, ed.u, ed.v);
    LinearInequality row = make_asymmetric(g, cut, e);
    const double violation = row.violation(x);
    if (violation <= tol) return std::nullopt;
    return ViolatedRow{std::move(row), violation};
}

std::optional<ViolatedRow> connectivity_for_pair(const Graph& g, std::span<const double> x, EdgeId e1, EdgeId e2,
                                                 double tol) {
    const Edge& a = g.edge(e1);
    const Edge& b = g.edge(e2);
    if (a.touches(b.u) || a.touches(b.v)) return std::nullopt;
    // The violation is at most 2(x1 + x2 - 1).
    if (2.0 * (at(x, e1) + at(x, e2) - 1.0) <= tol) return std::nullopt;
    std::vector<double> caps(x.begin(), x.end());
    const double big = 2.0 * static_cast<double>(g.edge_count()) + 2.0;
    caps[static_cast<std::size_t>(e1)] = big;
    caps[static_cast<std::size_t>(e2)] = big;
    CutSet cut = minimal_cut(g, caps, a.u, b.u);
    // A cut of capacity >= big would have to cross e1 or e2; such a pair has
    // no violated row.
    if (cut.contains_edge(e1) || cut.contains_edge(e2)) return std::nullopt;
    LinearInequality row = make_connectivity(g, cut, e1, e2);
    const double violation = row.violation(x);
    if (violation <= tol) return std::nullopt;
    return ViolatedRow{std::move(row), violation};
}

SeparationResult merge(std::vector<std::optional<ViolatedRow>>& slots) {
    SeparationResult out;
    for (auto& slot : slots)
        if (slot) out.violated.push_back(std::move(*slot));
    std::sort(out.violated.begin(), out.violated.end(), [](const ViolatedRow& a, const ViolatedRow& b) {
        if (a.violation != b.violation) return a.violation > b.violation;
        return a.row.canonical_less(b.row);
    });
    auto last = std::unique(out.violated.begin(), out.violated.end(),
                            [](const ViolatedRow& a, const ViolatedRow& b) { return a.row.same_row(b.row); });
    out.violated.erase(last, out.violated.end());
    out.exhausted = out.violated.empty();
    return out;
}

SeparationResult run_asymmetric(const Graph& g, std::span<const double> x, const SeparationOptions& opts,
                                bool parallel) {
    check_point(g, x);
    const int m = g.edge_count();
    std::vector<std::optional<ViolatedRow>> slots(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int e = 0; e < m; ++e) slots[static_cast<std::size_t>(e)] = asymmetric_for_edge(g, x, e, opts.tolerance);
    return merge(slots);
}

// One pair per pair of support components: the largest x in each, ties broken
// by a seeded shuffle of the tied edges.
std::vector<std::pair<EdgeId, EdgeId>> heuristic_pairs(const Graph& g, std::span<const double> x, double tol,
                                                       std::uint64_t seed) {
    EdgeMask support(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) support[static_cast<std::size_t>(e)] = at(x, e) > tol ? 1 : 0;
    const VertexPartition comps = connected_components(g, support);

    std::vector<std::vector<EdgeId>> best(static_cast<std::size_t>(comps.count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!support[static_cast<std::size_t>(e)]) continue;
        auto& list = best[static_cast<std::size_t>(comps.component_of[static_cast<std::size_t>(g.edge(e).u)])];
        if (!list.empty() && at(x, list.front()) < at(x, e)) list.clear();
        if (list.empty() || at(x, list.front()) == at(x, e)) list.push_back(e);
    }
    Xoshiro256 rng(seed);
    std::vector<EdgeId> reps;
    for (const auto& list : best)
        if (!list.empty()) reps.push_back(list[rng.below(list.size())]);

    std::vector<std::pair<EdgeId, EdgeId>> out;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) out.emplace_back(reps[i], reps[j]);
    return out;
}

SeparationResult run_connectivity(const Graph& g, std::span<const double> x, const SeparationOptions& opts,
                                  bool parallel) {
    check_point(g, x);
    if (opts.connectivity_heuristic) {
        const auto pairs = heuristic_pairs(g, x, opts.tolerance, opts.seed);
        std::vector<std::optional<ViolatedRow>> slots(pairs.size());
        const auto count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long i = 0; i < count; ++i) {
            const auto& [e1, e2] = pairs[static_cast<std::size_t>(i)];
            slots[static_cast<std::size_t>(i)] = connectivity_for_pair(g, x, e1, e2, opts.tolerance);
        }
        SeparationResult quick = merge(slots);
        if (!quick.violated.empty()) {
            quick.exhausted = false;
            return quick;
        }
    }

    std::vector<std::pair<EdgeId, EdgeId>> pairs;
    for (EdgeId e1 = 0; e1 < g.edge_count(); ++e1)
        for (EdgeId e2 = e1 + 1; e2 < g.edge_count(); ++e2)
            if (2.0 * (at(x, e1) + at(x, e2) - 1.0) > opts.tolerance) pairs.emplace_back(e1, e2);
    std::vector<std::optional<ViolatedRow>> slots(pairs.size());
    const auto count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < count; ++i) {
        const auto& [e1, e2] = pairs[static_cast<std::size_t>(i)];
        slots[static_cast<std::size_t>(i)] = connectivity_for_pair(g, x, e1, e2, opts.tolerance);
    }
    return merge(slots);
}

}  // namespace

SeparationResult separate_asymmetric(const Graph& g, std::span<const double> x, const SeparationOptions& opts) {
    return run_asymmetric(g, x, opts, true);
}

SeparationResult separate_connectivity(const Graph& g, std::span<const double> x, const SeparationOptions& opts) {
    return run_connectivity(g, x, opts, true);
}

SeparationResult separate_coparallel(const Graph& g, const CoparallelPartition& cp, std::span<const double> x,
                                     const SeparationOptions& opts) {
    check_point(g, x);
    if (!is_two_edge_connected(g)) throw std::invalid_argument("separate_coparallel: graph is not 2-edge-connected");
    std::vector<std::optional<ViolatedRow>> slots(static_cast<std::size_t>(cp.size()));
    for (int c = 0; c < cp.size(); ++c) {
        const auto comps = edge_components_after_class_removal(g, cp, c);
        if (comps.size() < 3) continue;
        std::vector<EdgeId> chosen;
        for (const Component& comp : comps) {
            EdgeId best = comp.edges.front();
            for (EdgeId e : comp.edges)
                if (at(x, e) > at(x, best)) best = e;
            chosen.push_back(best);
        }
        const auto& members = cp.classes[static_cast<std::size_t>(c)];
        EdgeId f = members.front();
        for (EdgeId e : members)
            if (at(x, e) < at(x, f)) f = e;
        LinearInequality row = make_coparallel_class(g, cp, c, f, chosen);
        const double violation = row.violation(x);
        if (violation > opts.tolerance) slots[static_cast<std::size_t>(c)] = ViolatedRow{std::move(row), violation};
    }
    return merge(slots);
}

namespace reference {

SeparationResult separate_asymmetric(const Graph& g, std::span<const double> x, const SeparationOptions& opts) {
    return run_asymmetric(g, x, opts, false);
}

SeparationResult separate_connectivity(const Graph& g, std::span<const double> x, const SeparationOptions& opts) {
    return run_connectivity(g, x, opts, false);
}

}  // namespace reference

}  // namespace tecs
