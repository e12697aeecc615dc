#include "tecs/inequality.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace tecs {

std::string to_string(Family f) {
    switch (f) {
    case Family::BoxLower: return "box_lower";
    case Family::BoxUpper: return "box_upper";
    case Family::AsymmetricCut: return "asymmetric";
    case Family::ConnectivityCut: return "connectivity";
    case Family::CoparallelClass: return "coparallel";
    case Family::OddStar: return "odd_star";
    }
    return "unknown";
}

LinearInequality::LinearInequality(Family family, std::vector<Term> terms, std::int64_t rhs, Provenance provenance)
    : family_(family), rhs_(rhs), provenance_(std::move(provenance)) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.edge < b.edge; });
    for (const Term& t : terms) {
        if (!terms_.empty() && terms_.back().edge == t.edge)
            terms_.back().coef += t.coef;
        else
            terms_.push_back(t);
    }
    std::erase_if(terms_, [](const Term& t) { return t.coef == 0; });
}

std::int64_t LinearInequality::coefficient(EdgeId e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, EdgeId id) { return t.edge < id; });
    return it != terms_.end() && it->edge == e ? it->coef : 0;
}

double LinearInequality::activity(std::span<const double> x) const {
    double sum = 0.0;
    for (const Term& t : terms_) sum += static_cast<double>(t.coef) * x[static_cast<std::size_t>(t.edge)];
    return sum;
}

Rational LinearInequality::activity(std::span<const Rational> x) const {
    Rational sum(0);
    for (const Term& t : terms_) sum += Rational(t.coef) * x[static_cast<std::size_t>(t.edge)];
    return sum;
}

std::int64_t LinearInequality::activity(std::span<const std::uint8_t> chi) const {
    std::int64_t sum = 0;
    for (const Term& t : terms_)
        if (chi[static_cast<std::size_t>(t.edge)]) sum += t.coef;
    return sum;
}

bool LinearInequality::canonical_less(const LinearInequality& other) const {
    const auto cmp = std::lexicographical_compare_three_way(
        terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(), [](const Term& a, const Term& b) {
            if (a.edge != b.edge) return a.edge <=> b.edge;
            return a.coef <=> b.coef;
        });
    if (cmp != 0) return cmp < 0;
    return rhs_ < other.rhs_;
}

std::size_t LinearInequality::canonical_hash() const {
    std::size_t h = std::hash<std::int64_t>{}(rhs_);
    for (const Term& t : terms_) {
        h ^= std::hash<std::int64_t>{}(t.edge) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<std::int64_t>{}(t.coef) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::string LinearInequality::to_string() const {
    std::ostringstream out;
    out << tecs::to_string(family_) << ":";
    for (const Term& t : terms_) out << " " << (t.coef >= 0 ? "+" : "") << t.coef << "*x" << t.edge;
    out << " <= " << rhs_;
    return out.str();
}

namespace {

void check_edge(const Graph& g, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge id out of range");
}

bool inside(const Graph& g, const CutSet& cut, EdgeId e, bool side) {
    const Edge& ed = g.edge(e);
    return (cut.contains_vertex(ed.u) == side) && (cut.contains_vertex(ed.v) == side);
}

}  // namespace

LinearInequality make_box_lower(const Graph& g, EdgeId e) {
    check_edge(g, e);
    return {Family::BoxLower, {{e, -1}}, 0, BoxWitness{e}};
}

LinearInequality make_box_upper(const Graph& g, EdgeId e) {
    check_edge(g, e);
    return {Family::BoxUpper, {{e, 1}}, 1, BoxWitness{e}};
}

LinearInequality make_asymmetric(const Graph& g, const CutSet& cut, EdgeId e) {
    check_edge(g, e);
    if (!cut.contains_edge(e)) throw std::invalid_argument("make_asymmetric: edge is not in the cut");
    std::vector<Term> terms;
    for (EdgeId f : cut.edges) terms.push_back({f, f == e ? 1 : -1});
    return {Family::AsymmetricCut, std::move(terms), 0, AsymmetricWitness{cut, e}};
}

LinearInequality make_connectivity(const Graph& g, const CutSet& cut, EdgeId e1, EdgeId e2) {
    check_edge(g, e1);
    check_edge(g, e2);
    if (!inside(g, cut, e1, true)) throw std::invalid_argument("make_connectivity: e1 must lie in G[S]");
    if (!inside(g, cut, e2, false)) throw std::invalid_argument("make_connectivity: e2 must lie in G[V \\ S]");
    std::vector<Term> terms{{e1, 2}, {e2, 2}};
    for (EdgeId f : cut.edges) terms.push_back({f, -1});
    return {Family::ConnectivityCut, std::move(terms), 2, ConnectivityWitness{cut, e1, e2}};
}

LinearInequality make_coparallel_class(const Graph& g, const CoparallelPartition& cp, int class_index, EdgeId f,
                                       std::span<const EdgeId> e_choices) {
    check_edge(g, f);
    if (class_index < 0 || class_index >= cp.size())
        throw std::invalid_argument("make_coparallel_class: class index out of range");
    if (cp.class_of[static_cast<std::size_t>(f)] != class_index)
        throw std::invalid_argument("make_coparallel_class: f is not in the class");

    const auto comps = edge_components_after_class_removal(g, cp, class_index);
    if (e_choices.size() != comps.size())
        throw std::invalid_argument("make_coparallel_class: need one edge per edge-containing component");
    std::vector<char> used(comps.size(), 0);
    for (EdgeId e : e_choices) {
        check_edge(g, e);
        bool found = false;
        for (std::size_t c = 0; c < comps.size() && !found; ++c) {
            if (!std::binary_search(comps[c].edges.begin(), comps[c].edges.end(), e)) continue;
            if (used[c]) throw std::invalid_argument("make_coparallel_class: two edges from one component");
            used[c] = 1;
            found = true;
        }
        if (!found) throw std::invalid_argument("make_coparallel_class: edge outside every component of G - C");
    }

    const auto r = static_cast<std::int64_t>(comps.size());
    std::vector<Term> terms;
    for (EdgeId e : e_choices) terms.push_back({e, 1});
    terms.push_back({f, -(r - 1)});
    return {Family::CoparallelClass, std::move(terms), 1,
            CoparallelWitness{class_index, f, std::vector<EdgeId>(e_choices.begin(), e_choices.end())}};
}

LinearInequality make_odd_star(const Graph& g, VertexId v, std::optional<std::pair<EdgeId, EdgeId>> witness) {
    const int n = g.vertex_count();
    if (!g.is_complete()) throw std::invalid_argument("make_odd_star: graph is not complete");
    if (n < 4) throw std::invalid_argument("make_odd_star: need n >= 4");
    if (v < 0 || v >= n) throw std::invalid_argument("make_odd_star: center out of range");
    const bool odd = n % 2 == 1;
    if (odd != witness.has_value())
        throw std::invalid_argument(odd ? "make_odd_star: odd n needs (h, f)" : "make_odd_star: even n takes no witness");

    EdgeId h = -1;
    EdgeId f = -1;
    if (witness) {
        std::tie(h, f) = *witness;
        check_edge(g, h);
        check_edge(g, f);
        const Edge& he = g.edge(h);
        const Edge& fe = g.edge(f);
        if (he.touches(v) || !fe.touches(v) || !he.touches(fe.other(v)))
            throw std::invalid_argument("make_odd_star: need h = {w1, w2} and f = {v, w1}");
    }

    std::vector<Term> terms;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e == h) continue;
        if (e == f) {
            terms.push_back({e, -1});
            continue;
        }
        terms.push_back({e, g.edge(e).touches(v) ? 1 : -1});
    }
    const std::int64_t rhs = odd ? (n - 3) / 2 : (n - 2) / 2;
    return {Family::OddStar, std::move(terms), rhs, OddStarWitness{v, witness}};
}

std::vector<LinearInequality> enumerate_odd_stars(const Graph& g) {
    const int n = g.vertex_count();
    if (!g.is_complete()) throw std::invalid_argument("enumerate_odd_stars: graph is not complete");
    if (n < 4) throw std::invalid_argument("enumerate_odd_stars: need n >= 4");
    std::vector<LinearInequality> out;
    for (VertexId v = 0; v < n; ++v) {
        if (n % 2 == 0) {
            out.push_back(make_odd_star(g, v, std::nullopt));
            continue;
        }
        for (VertexId w1 = 0; w1 < n; ++w1) {
            if (w1 == v) continue;
            for (VertexId w2 = 0; w2 < n; ++w2) {
                if (w2 == v || w2 == w1) continue;
                out.push_back(make_odd_star(g, v, std::pair{*g.find_edge(w1, w2), *g.find_edge(v, w1)}));
            }
        }
    }
    const std::size_t expected = n % 2 == 0 ? static_cast<std::size_t>(n)
                                            : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) *
                                                  static_cast<std::size_t>(n - 2);
    if (out.size() != expected) throw std::logic_error("enumerate_odd_stars: unexpected row count");
    return out;
}

bool CutPool::insert(LinearInequality row) {
    auto& bucket = by_hash_[row.canonical_hash()];
    for (std::size_t i : bucket)
        if (rows_[i].same_row(row)) return false;
    bucket.push_back(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

}  // namespace tecs
