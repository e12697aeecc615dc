#include "tecs/maxflow.hpp"

#include <numeric>
#include <stdexcept>

namespace tecs {

namespace {

void check_terminals(const Graph& g, std::size_t capacity_count, VertexId s, VertexId t) {
    if (s == t) throw std::invalid_argument("min_st_cut: s and t must differ");
    if (s < 0 || t < 0 || s >= g.vertex_count() || t >= g.vertex_count())
        throw std::invalid_argument("min_st_cut: terminal out of range");
    if (capacity_count != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("min_st_cut: one capacity per edge required");
}

}  // namespace

StCut<double> min_st_cut(const Graph& g, std::span<const double> capacities, VertexId s, VertexId t) {
    check_terminals(g, capacities.size(), s, t);
    PushRelabel<double> flow(g.vertex_count(), 1e-12);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        flow.add_undirected(g.edge(e).u, g.edge(e).v, std::max(0.0, capacities[static_cast<std::size_t>(e)]));
    flow.run(s, t);

    StCut<double> out;
    out.cut = delta(g, flow.source_side());
    for (EdgeId e : out.cut.edges) out.value += capacities[static_cast<std::size_t>(e)];
    return out;
}

StCut<Rational> min_st_cut(const Graph& g, std::span<const Rational> capacities, VertexId s, VertexId t) {
    check_terminals(g, capacities.size(), s, t);
    std::int64_t scale = 1;
    for (const Rational& c : capacities) {
        if (c.numerator() < 0) throw std::invalid_argument("min_st_cut: negative capacity");
        const std::int64_t d = c.denominator();
        const std::int64_t q = scale / std::gcd(scale, d);
        if (__builtin_mul_overflow(q, d, &scale)) throw std::overflow_error("min_st_cut: denominator overflow");
    }
    PushRelabel<std::int64_t> flow(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Rational& c = capacities[static_cast<std::size_t>(e)];
        std::int64_t scaled = 0;
        if (__builtin_mul_overflow(c.numerator(), scale / c.denominator(), &scaled))
            throw std::overflow_error("min_st_cut: capacity overflow");
        flow.add_undirected(g.edge(e).u, g.edge(e).v, scaled);
    }
    flow.run(s, t);

    StCut<Rational> out;
    out.cut = delta(g, flow.source_side());
    for (EdgeId e : out.cut.edges) out.value += capacities[static_cast<std::size_t>(e)];
    return out;
}

}  // namespace tecs
