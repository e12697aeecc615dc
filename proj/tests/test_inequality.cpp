#include <doctest.h>

#include <stdexcept>

#include "support.hpp"
#include "tecs/corpus.hpp"
#include "tecs/inequality.hpp"
#include "tecs/instances.hpp"

using namespace tecs;
using testing_oracle::bit;

namespace {

VertexSet side_of(int n, std::initializer_list<int> members) {
    VertexSet s(static_cast<std::size_t>(n), 0);
    for (int v : members) s[static_cast<std::size_t>(v)] = 1;
    return s;
}

std::vector<std::uint8_t> chi_of(const Graph& g, std::uint64_t mask) {
    std::vector<std::uint8_t> chi(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) chi[static_cast<std::size_t>(e)] = bit(mask, e) ? 1 : 0;
    return chi;
}

std::vector<Rational> rational_point(std::initializer_list<std::pair<EdgeId, Rational>> overrides, int m, Rational fill) {
    std::vector<Rational> x(static_cast<std::size_t>(m), fill);
    for (const auto& [e, v] : overrides) x[static_cast<std::size_t>(e)] = v;
    return x;
}

// Every row of every family on g, cuts over all proper subsets.
std::vector<LinearInequality> all_rows(const Graph& g) {
    std::vector<LinearInequality> rows;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        rows.push_back(make_box_lower(g, e));
        rows.push_back(make_box_upper(g, e));
    }
    const int n = g.vertex_count();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); mask += 2) {
        VertexSet s(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) s[static_cast<std::size_t>(v)] = bit(mask, v);
        const CutSet cut = delta(g, s);
        for (EdgeId e : cut.edges) rows.push_back(make_asymmetric(g, cut, e));
        for (EdgeId e1 : induced_edges(g, s)) {
            VertexSet rest(s.size());
            for (std::size_t v = 0; v < s.size(); ++v) rest[v] = s[v] ? 0 : 1;
            for (EdgeId e2 : induced_edges(g, rest)) rows.push_back(make_connectivity(g, cut, e1, e2));
        }
    }
    const auto cp = coparallel_partition(g);
    for (int c = 0; c < cp.size(); ++c) {
        const auto comps = edge_components_after_class_removal(g, cp, c);
        if (comps.empty()) continue;
        std::vector<EdgeId> pick(comps.size());
        for (std::size_t i = 0; i < comps.size(); ++i) pick[i] = comps[i].edges.back();
        for (EdgeId f : cp.classes[static_cast<std::size_t>(c)]) rows.push_back(make_coparallel_class(g, cp, c, f, pick));
    }
    if (g.is_complete() && n >= 4)
        for (auto& row : enumerate_odd_stars(g)) rows.push_back(std::move(row));
    return rows;
}

}  // namespace

TEST_CASE("box rows") {
    const Graph g = complete_graph(4);
    const auto lo = make_box_lower(g, 2);
    CHECK(lo.family() == Family::BoxLower);
    CHECK(lo.coefficient(2) == -1);
    CHECK(lo.rhs() == 0);
    const auto hi = make_box_upper(g, 2);
    CHECK(hi.coefficient(2) == 1);
    CHECK(hi.rhs() == 1);
    CHECK_THROWS_AS(make_box_upper(g, 6), std::invalid_argument);
}

TEST_CASE("asymmetric rows") {
    const Graph c4 = cycle_graph(4);
    const CutSet cut = delta(c4, side_of(4, {0}));
    REQUIRE(cut.edges.size() == 2);
    const auto row = make_asymmetric(c4, cut, cut.edges[0]);
    CHECK(row.coefficient(cut.edges[0]) == 1);
    CHECK(row.coefficient(cut.edges[1]) == -1);
    CHECK(row.terms().size() == 2);
    CHECK(row.rhs() == 0);

    const Graph k4 = complete_graph(4);
    const CutSet star = delta(k4, side_of(4, {3}));
    const auto row3 = make_asymmetric(k4, star, star.edges[1]);
    CHECK(row3.terms().size() == 3);
    CHECK(row3.coefficient(star.edges[1]) == 1);
    CHECK(row3.coefficient(star.edges[0]) == -1);
    CHECK(row3.coefficient(star.edges[2]) == -1);
    CHECK(row3.coefficient(*k4.find_edge(0, 1)) == 0);
    CHECK_THROWS_AS(make_asymmetric(k4, star, *k4.find_edge(0, 1)), std::invalid_argument);
}

TEST_CASE("connectivity row on the square with two triangles") {
    const CciExample ex = example_cci();
    const CutSet cut = delta(ex.graph, ex.s);
    REQUIRE(cut.edges.size() == 2);
    const auto row = make_connectivity(ex.graph, cut, ex.e1, ex.e2);
    CHECK(row.coefficient(ex.e1) == 2);
    CHECK(row.coefficient(ex.e2) == 2);
    CHECK(row.coefficient(ex.f1) == -1);
    CHECK(row.coefficient(ex.f2) == -1);
    CHECK(row.rhs() == 2);
    const int m = ex.graph.edge_count();
    const auto y = rational_point({{ex.f1, Rational(0)}, {ex.f2, Rational(0)}}, m, Rational(1));
    CHECK(row.activity(y) == Rational(4));
    CHECK(row.violation(y) == Rational(2));
    const std::vector<std::uint8_t> zero(static_cast<std::size_t>(m), 0);
    CHECK(row.activity(zero) == 0);
    CHECK_THROWS_AS(make_connectivity(ex.graph, cut, ex.e2, ex.e1), std::invalid_argument);
}

TEST_CASE("coparallel class row on the three-triangle graph") {
    const CpciExample ex = example_cpci();
    const auto cp = coparallel_partition(ex.graph);
    const int c = cp.class_of[static_cast<std::size_t>(ex.f[0])];
    const auto row = make_coparallel_class(ex.graph, cp, c, ex.f[0], ex.e);
    for (EdgeId e : ex.e) CHECK(row.coefficient(e) == 1);
    CHECK(row.coefficient(ex.f[0]) == -2);
    CHECK(row.coefficient(ex.f[1]) == 0);
    CHECK(row.rhs() == 1);
    const int m = ex.graph.edge_count();
    const auto y = rational_point({{ex.f[0], Rational(0)}, {ex.f[1], Rational(0)}, {ex.f[2], Rational(0)}}, m, Rational(1, 2));
    CHECK(row.activity(y) == Rational(3, 2));
    CHECK(row.violation(y) == Rational(1, 2));
    const std::vector<std::uint8_t> all(static_cast<std::size_t>(m), 1);
    CHECK(row.activity(all) == 1);

    const std::array<EdgeId, 2> too_few{ex.e[0], ex.e[1]};
    CHECK_THROWS_AS(make_coparallel_class(ex.graph, cp, c, ex.f[0], too_few), std::invalid_argument);
    const std::array<EdgeId, 3> same_comp{ex.e[0], 0, ex.e[2]};
    CHECK_THROWS_AS(make_coparallel_class(ex.graph, cp, c, ex.f[0], same_comp), std::invalid_argument);
    CHECK_THROWS_AS(make_coparallel_class(ex.graph, cp, c, ex.e[0], ex.e), std::invalid_argument);
}

TEST_CASE("odd star rows") {
    const Graph k4 = complete_graph(4);
    const auto row = make_odd_star(k4, 0, std::nullopt);
    CHECK(row.rhs() == 1);
    std::vector<Rational> y(6);
    for (EdgeId e = 0; e < 6; ++e) {
        const bool star = k4.edge(e).touches(0);
        CHECK(row.coefficient(e) == (star ? 1 : -1));
        y[static_cast<std::size_t>(e)] = star ? Rational(1) : Rational(1, 2);
    }
    CHECK(row.activity(y) == Rational(3, 2));

    const Graph k5 = complete_graph(5);
    const EdgeId h = *k5.find_edge(1, 2);
    const EdgeId f = *k5.find_edge(0, 1);
    const auto odd = make_odd_star(k5, 0, std::pair{h, f});
    CHECK(odd.rhs() == 1);
    CHECK(odd.coefficient(f) == -1);
    CHECK(odd.coefficient(h) == 0);
    CHECK(odd.coefficient(*k5.find_edge(0, 2)) == 1);
    CHECK(odd.coefficient(*k5.find_edge(3, 4)) == -1);

    CHECK_THROWS_AS(make_odd_star(k5, 0, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(make_odd_star(k4, 0, std::pair{EdgeId{3}, EdgeId{0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_odd_star(k5, 0, std::pair{f, h}), std::invalid_argument);
    CHECK_THROWS_AS(make_odd_star(cycle_graph(5), 0, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(make_odd_star(complete_graph(3), 0, std::nullopt), std::invalid_argument);
}

TEST_CASE("odd star counts") {
    for (int n = 4; n <= 9; ++n) {
        const std::size_t expected = n % 2 == 0 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n * (n - 1) * (n - 2));
        CHECK(enumerate_odd_stars(complete_graph(n)).size() == expected);
    }
    CHECK(enumerate_odd_stars(complete_graph(5)).size() == 60);
}

TEST_CASE("cut pool deduplicates on coefficients") {
    const Graph c4 = cycle_graph(4);
    const CutSet a = delta(c4, side_of(4, {0}));
    const CutSet b = delta(c4, side_of(4, {1, 2, 3}));
    CutPool pool;
    CHECK(pool.insert(make_asymmetric(c4, a, a.edges[0])));
    CHECK_FALSE(pool.insert(make_asymmetric(c4, a, a.edges[0])));
    // Complementary side, same coefficients.
    CHECK_FALSE(pool.insert(make_asymmetric(c4, b, a.edges[0])));
    // Same support, different signs.
    CHECK(pool.insert(make_asymmetric(c4, a, a.edges[1])));
    CHECK(pool.size() == 2);
}

TEST_CASE("canonical order is a strict weak order") {
    const Graph k4 = complete_graph(4);
    const auto a = make_box_lower(k4, 0);
    const auto b = make_box_upper(k4, 0);
    CHECK(a.canonical_less(b) != b.canonical_less(a));
    CHECK_FALSE(a.canonical_less(a));
    CHECK(a.canonical_hash() == make_box_lower(k4, 0).canonical_hash());
    CHECK(a.to_string().find("box") != std::string::npos);
}

TEST_CASE("every row is valid for every 2-edge-connected subgraph") {
    std::vector<Graph> graphs{complete_graph(4), complete_graph(5), example_cci().graph, example_cpci().graph,
                              example_bridge().graph, cycle_graph(6)};
    for (std::uint64_t seed = 0; seed < 8; ++seed) graphs.push_back(random_2ec_graph(6, 2, seed).graph);
    for (const Graph& g : graphs) {
        const auto vectors = testing_oracle::all_2ec(g);
        std::size_t violated = 0;
        for (const auto& row : all_rows(g))
            for (std::uint64_t h : vectors)
                if (row.activity(chi_of(g, h)) > row.rhs()) ++violated;
        CHECK(violated == 0);
    }
}
