#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "support.hpp"
#include "tecs/corpus.hpp"
#include "tecs/instances.hpp"
#include "tecs/oracle.hpp"

using namespace tecs;

namespace {

Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

std::vector<EdgeBits> sorted(std::vector<EdgeBits> v) {
    std::sort(v.begin(), v.end());
    return v;
}

const TheoremCheck& find_check(const TheoremReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c;
    throw std::logic_error("missing check " + name);
}

std::vector<Graph> small_graphs() {
    std::vector<Graph> out;
    for (const auto& ng : verification_corpus(10, 3))
        if (ng.graph.edge_count() <= 14) out.push_back(ng.graph);
    out.push_back(bowtie());
    return out;
}

}  // namespace

TEST_CASE("enumeration examples") {
    CHECK(enumerate_2ec(cycle_graph(5)).vectors.size() == 2);
    const auto k4 = enumerate_2ec(complete_graph(4));
    CHECK(k4.vectors.size() == 15);
    CHECK(k4.vectors.front() == 0);
    const Graph bow = bowtie();
    const auto bt = enumerate_2ec(bow);
    CHECK(sorted(bt.vectors) == std::vector<EdgeBits>{0, 0b000111, 0b111000, 0b111111});
    CHECK(bt.incidence(3).size() == 6);
}

TEST_CASE("enumeration agrees with the naive and the test-side oracle") {
    for (const Graph& g : small_graphs()) {
        const auto fast = sorted(enumerate_2ec(g).vectors);
        CHECK(fast == sorted(enumerate_2ec_naive(g).vectors));
        CHECK(fast == sorted(testing_oracle::all_2ec(g)));
    }
}

TEST_CASE("affine dimension") {
    const std::vector<EdgeBits> origin{0};
    CHECK(affine_dimension(origin, 6) == 0);
    CHECK(affine_dimension(enumerate_2ec(cycle_graph(5))) == 1);
    CHECK(affine_dimension(enumerate_2ec(complete_graph(4))) == 6);
    CHECK_THROWS(affine_dimension(std::vector<EdgeBits>{}, 3));

    AffineSpan span(3);
    CHECK(span.dimension() == -1);
    CHECK(span.add(0b001));
    CHECK_FALSE(span.add(0b001));
    CHECK(span.add(0b010));
    CHECK(span.contains(0b010));
    CHECK_FALSE(span.contains(0b100));
    CHECK(span.dimension() == 1);
    CHECK(span.add(0b111));
    CHECK(span.dimension() == 2);
    CHECK_FALSE(span.contains(0b100));
    CHECK(testing_oracle::affine_rank({0b001, 0b010, 0b111, 0b100}, 3) == 3);
}

TEST_CASE("affine dimension matches rational elimination") {
    for (const Graph& g : small_graphs()) {
        const auto set = enumerate_2ec(g);
        CHECK(affine_dimension(set) == testing_oracle::affine_rank(set.vectors, g.edge_count()));
        CHECK(affine_dimension(set) == dimension(g));
    }
}

TEST_CASE("face report examples") {
    const Graph k4 = complete_graph(4);
    const auto set = enumerate_2ec(k4);
    const auto upper = face_report(set, make_box_upper(k4, 0));
    CHECK(upper.valid);
    CHECK(upper.is_facet);
    CHECK(upper.face_dim == 5);
    CHECK(upper.polytope_dim == 6);

    std::vector<Term> all;
    for (EdgeId e = 0; e < 6; ++e) all.push_back({e, 1});
    // x(E) <= 0 is only met by the empty subgraph, so it is not valid; its
    // tight set is still {0}.
    const LinearInequality empty_only(Family::BoxUpper, all, 0, BoxWitness{0});
    const auto origin = face_report(set, empty_only, -1, true);
    CHECK_FALSE(origin.valid);
    CHECK(origin.tight_count == 1);
    CHECK(origin.tight_vectors == std::vector<EdgeBits>{0});
    CHECK(origin.face_dim == 0);
    CHECK_FALSE(origin.is_facet);
    for (Term& t : all) t.coef = -1;
    const auto flipped = face_report(set, LinearInequality(Family::BoxLower, all, 0, BoxWitness{0}), -1, true);
    CHECK(flipped.valid);
    CHECK(flipped.tight_vectors == std::vector<EdgeBits>{0});
    CHECK(flipped.face_dim == 0);
    CHECK_FALSE(flipped.is_facet);

    const Graph c4 = cycle_graph(4);
    const auto c4set = enumerate_2ec(c4);
    const CutSet cut = delta(c4, VertexSet{1, 0, 0, 0});
    const auto two_cut = face_report(c4set, make_asymmetric(c4, cut, cut.edges[0]));
    CHECK(two_cut.valid);
    CHECK(two_cut.tight_count == c4set.vectors.size());
    CHECK(two_cut.face_dim == two_cut.polytope_dim);
    CHECK_FALSE(two_cut.is_facet);

    const LinearInequality invalid(Family::BoxUpper, {{0, 1}}, 0, BoxWitness{0});
    CHECK_FALSE(face_report(set, invalid).valid);
}

TEST_CASE("nonnegativity is never a facet on K4") {
    const Graph k4 = complete_graph(4);
    const auto set = enumerate_2ec(k4);
    for (EdgeId e = 0; e < 6; ++e) {
        CHECK(predicate_in_3cut(k4, e));
        CHECK_FALSE(face_report(set, make_box_lower(k4, e)).is_facet);
    }
}

TEST_CASE("degenerate coparallel rows") {
    // K4 with the edge {0,1} replaced by the path 0-4-1: that path is a class
    // whose removal leaves one edge-containing component.
    const Graph g(5, {{0, 4}, {1, 4}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const auto cp = coparallel_partition(g);
    const int c = cp.class_of[0];
    REQUIRE(edge_components_after_class_removal(g, cp, c).size() == 1);
    const auto set = enumerate_2ec(g);
    const std::array<EdgeId, 1> one{6};
    const auto r1 = face_report(set, make_coparallel_class(g, cp, c, 0, one), -1, true);
    const auto box = face_report(set, make_box_upper(g, 6), -1, true);
    CHECK(make_coparallel_class(g, cp, c, 0, one).same_row(make_box_upper(g, 6)));
    CHECK(sorted(r1.tight_vectors) == sorted(box.tight_vectors));

    const CciExample ex = example_cci();
    const auto cp2 = coparallel_partition(ex.graph);
    const int c2 = cp2.class_of[static_cast<std::size_t>(ex.f1)];
    REQUIRE(edge_components_after_class_removal(ex.graph, cp2, c2).size() == 2);
    const auto set2 = enumerate_2ec(ex.graph);
    const std::array<EdgeId, 2> two{ex.e1, ex.e2};
    const auto r2 = face_report(set2, make_coparallel_class(ex.graph, cp2, c2, ex.f1, two), -1, true);
    const auto conn = face_report(set2, make_connectivity(ex.graph, delta(ex.graph, ex.s), ex.e1, ex.e2), -1, true);
    CHECK(r2.valid);
    CHECK(sorted(r2.tight_vectors) == sorted(conn.tight_vectors));
}

TEST_CASE("parallel face reports match the serial reference") {
    const Graph k6 = complete_graph(6);
    const auto set = enumerate_2ec(k6);
    std::vector<LinearInequality> rows = enumerate_odd_stars(k6);
    for (EdgeId e = 0; e < k6.edge_count(); ++e) rows.push_back(make_box_lower(k6, e));
    const auto par = face_reports(set, rows, 15);
    const auto ser = reference::face_reports(set, rows, 15);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].valid == ser[i].valid);
        CHECK(par[i].tight_count == ser[i].tight_count);
        CHECK(par[i].face_dim == ser[i].face_dim);
        CHECK(par[i].is_facet == ser[i].is_facet);
    }
    for (std::size_t i = 0; i < 6; ++i) CHECK(par[i].is_facet);
}

TEST_CASE("lattice point check") {
    CHECK(check_lattice_points(complete_graph(4)));
    CHECK(check_lattice_points(cycle_graph(5)));
    CHECK(check_lattice_points(example_cci().graph));
    CHECK_THROWS_AS(check_lattice_points(complete_graph(7)), BudgetExceeded);
}

TEST_CASE("3-cut predicate") {
    for (EdgeId e = 0; e < 6; ++e) CHECK(predicate_in_3cut(complete_graph(4), e));
    for (EdgeId e = 0; e < 5; ++e) CHECK_FALSE(predicate_in_3cut(cycle_graph(5), e));
    for (EdgeId e = 0; e < 10; ++e) CHECK_FALSE(predicate_in_3cut(complete_graph(5), e));
    CHECK_THROWS_AS(predicate_in_3cut(cycle_graph(17), 0), BudgetExceeded);
}

TEST_CASE("delta(W, f) predicate") {
    const BridgeExample ex = example_bridge();
    const CutSet cut = delta(ex.graph, ex.s);
    auto far = predicate_delta_Wf(ex.graph, cut, ex.e1, ex.e2, ex.f);
    std::sort(far.begin(), far.end());
    CHECK(far == ex.far_cut_edges);
    CHECK_THROWS_AS(predicate_delta_Wf(ex.graph, cut, ex.e1, ex.e2, ex.e1), std::invalid_argument);
    CHECK_THROWS_AS(predicate_delta_Wf(ex.graph, cut, ex.e1, ex.e2, 1), std::invalid_argument);

    // Both sides of the square-with-triangles cut are triangles: no bridges at all.
    const CciExample cci = example_cci();
    const VertexSet& s = cci.s;
    VertexSet rest(s.size());
    for (std::size_t v = 0; v < s.size(); ++v) rest[v] = s[v] ? 0 : 1;
    for (const VertexSet& side : {s, rest}) {
        const auto inside = induced_edges(cci.graph, side);
        std::vector<char> mask(static_cast<std::size_t>(cci.graph.edge_count()), 0);
        for (EdgeId e : inside) mask[static_cast<std::size_t>(e)] = 1;
        CHECK(bridges(cci.graph, mask).empty());
    }

    // Triangle 0-1-2 with vertex 3 hanging off by f = {2,3}; 3 meets one cut edge.
    const Graph g(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {4, 5}, {5, 6}, {4, 6}, {0, 4}, {3, 5}, {1, 6}});
    const CutSet c = delta(g, VertexSet{1, 1, 1, 1, 0, 0, 0});
    CHECK(predicate_delta_Wf(g, c, 0, 4, 3) == std::vector<EdgeId>{8});
}

TEST_CASE("facet characterizations on small graphs") {
    const auto k4 = check_theorems(complete_graph(4));
    CHECK(k4.passed());
    CHECK(k4.vertex_count == 15);
    CHECK(k4.polytope_dim == 6);
    CHECK(find_check(k4, "box_lower").checked == 6);
    CHECK(find_check(k4, "odd_star").checked == 4);

    const auto cpci = check_theorems(example_cpci().graph);
    CHECK(cpci.passed());
    CHECK(find_check(cpci, "coparallel").checked > 0);
    const CpciExample ex = example_cpci();
    const auto cp = coparallel_partition(ex.graph);
    const int c = cp.class_of[static_cast<std::size_t>(ex.f[0])];
    CHECK(face_report(enumerate_2ec(ex.graph), make_coparallel_class(ex.graph, cp, c, ex.f[0], ex.e)).is_facet);

    const Graph c6 = cycle_graph(6);
    CHECK(check_theorems(c6).passed());
    const auto set = enumerate_2ec(c6);
    const CutSet cut = delta(c6, VertexSet{1, 1, 0, 0, 0, 0});
    for (EdgeId e : cut.edges) CHECK_FALSE(face_report(set, make_asymmetric(c6, cut, e)).is_facet);

    CHECK(check_theorems(example_bridge().graph).passed());
    CHECK(check_theorems(example_cci().graph).passed());
}

TEST_CASE("budgets") {
    CHECK_THROWS_AS(enumerate_2ec(complete_graph(8)), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_2ec_naive(complete_graph(7)), BudgetExceeded);
}
