#include "tecs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <unordered_set>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace tecs {

namespace {

using boost::multiprecision::cpp_int;

bool has_bit(EdgeBits mask, int i) { return ((mask >> i) & 1U) != 0; }

void check_edge_budget(const Graph& g) {
    if (g.edge_count() > 64) throw BudgetExceeded("oracle: more than 64 edges");
}

// Adjacency view used by the enumeration hot loop: bridge test on a mask
// without any allocation.
class MaskGraph {
public:
    explicit MaskGraph(const Graph& g) : n_(g.vertex_count()), adj_(static_cast<std::size_t>(g.vertex_count())) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            adj_[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
            adj_[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
            ends_.push_back((EdgeBits{1} << ed.u) | (EdgeBits{1} << ed.v));
        }
    }

    bool two_edge_connected(EdgeBits mask) const {
        if (mask == 0) return true;
        EdgeBits touched = 0;
        for (EdgeBits rest = mask; rest != 0; rest &= rest - 1)
            touched |= ends_[static_cast<std::size_t>(std::countr_zero(rest))];
        int order[64];
        int low[64];
        std::fill(order, order + n_, -1);
        int clock = 0;
        bool bridgeless = true;
        auto dfs = [&](auto&& self, int v, int via) -> void {
            order[v] = low[v] = clock++;
            for (const auto& [w, e] : adj_[static_cast<std::size_t>(v)]) {
                if (e == via || !has_bit(mask, e)) continue;
                if (order[w] < 0) {
                    self(self, w, e);
                    low[v] = std::min(low[v], low[w]);
                    if (low[w] > order[v]) bridgeless = false;
                } else {
                    low[v] = std::min(low[v], order[w]);
                }
            }
        };
        dfs(dfs, std::countr_zero(touched), -1);
        return bridgeless && clock == std::popcount(touched);
    }

private:
    int n_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<EdgeBits> ends_;
};

// Coefficients grouped by value, so activity on a 0/1 vector is a few popcounts.
struct PackedRow {
    std::vector<std::pair<std::int64_t, EdgeBits>> groups;
    std::int64_t rhs;

    explicit PackedRow(const LinearInequality& row) : rhs(row.rhs()) {
        for (const Term& t : row.terms()) {
            auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& gr) { return gr.first == t.coef; });
            if (it == groups.end()) groups.push_back({t.coef, EdgeBits{1} << t.edge});
            else it->second |= EdgeBits{1} << t.edge;
        }
    }

    std::int64_t activity(EdgeBits v) const {
        std::int64_t sum = 0;
        for (const auto& [coef, mask] : groups) sum += coef * std::popcount(v & mask);
        return sum;
    }
};

VertexSet full_side(EdgeBits bits, int n) {
    VertexSet side(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = has_bit(bits, v) ? 1 : 0;
    return side;
}

void check_subset_budget(const Graph& g) {
    if (g.vertex_count() > kSubsetVertexBudget) throw BudgetExceeded("oracle: more than 16 vertices");
}

}  // namespace

std::vector<std::uint8_t> VertexSet2EC::incidence(std::size_t i) const {
    std::vector<std::uint8_t> chi(static_cast<std::size_t>(graph->edge_count()), 0);
    for (int e = 0; e < graph->edge_count(); ++e) chi[static_cast<std::size_t>(e)] = has_bit(vectors[i], e) ? 1 : 0;
    return chi;
}

VertexSet2EC enumerate_2ec(const Graph& g) {
    check_edge_budget(g);
    const CoparallelPartition cp = coparallel_partition(g);
    if (cp.size() > kEnumerationClassBudget) throw BudgetExceeded("enumerate_2ec: more than 24 coparallel classes");
    std::vector<EdgeBits> class_bits;
    for (const auto& cls : cp.classes) {
        EdgeBits bits = 0;
        for (EdgeId e : cls) bits |= EdgeBits{1} << e;
        class_bits.push_back(bits);
    }

    const MaskGraph mg(g);
    VertexSet2EC out;
    out.graph = &g;
    const std::uint64_t total = std::uint64_t{1} << cp.size();
    for (std::uint64_t subset = 0; subset < total; ++subset) {
        EdgeBits mask = 0;
        for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1)
            mask |= class_bits[static_cast<std::size_t>(std::countr_zero(rest))];
        if (mg.two_edge_connected(mask)) out.vectors.push_back(mask);
    }
    return out;
}

VertexSet2EC enumerate_2ec_naive(const Graph& g) {
    if (g.edge_count() > 20) throw BudgetExceeded("enumerate_2ec_naive: more than 20 edges");
    VertexSet2EC out;
    out.graph = &g;
    const EdgeBits total = EdgeBits{1} << g.edge_count();
    std::vector<EdgeId> edges;
    for (EdgeBits mask = 0; mask < total; ++mask) {
        edges.clear();
        for (int e = 0; e < g.edge_count(); ++e)
            if (has_bit(mask, e)) edges.push_back(e);
        if (is_two_edge_connected(g, edges)) out.vectors.push_back(mask);
    }
    return out;
}

AffineSpan::AffineSpan(int dimension) : ambient_(dimension) {
    if (dimension < 0 || dimension > 64) throw std::invalid_argument("AffineSpan: dimension must lie in [0, 64]");
    rebuild_complement();
}

std::int64_t AffineSpan::dot(std::size_t normal, EdgeBits v) const {
    const auto& table = tables_[normal];
    std::int64_t sum = 0;
    for (int b = 0; b < 8; ++b) sum += table[static_cast<std::size_t>(b * 256) + ((v >> (8 * b)) & 0xFF)];
    return sum;
}

bool AffineSpan::contains(EdgeBits v) const {
    if (dimension_ < 0) return false;
    for (std::size_t j = 0; j < normals_.size(); ++j)
        if (dot(j, v) != dot(j, origin_)) return false;
    return true;
}

bool AffineSpan::add(EdgeBits v) {
    if (dimension_ < 0) {
        origin_ = v;
        dimension_ = 0;
        return true;
    }
    if (contains(v)) return false;
    std::vector<std::int64_t> diff(static_cast<std::size_t>(ambient_));
    for (int i = 0; i < ambient_; ++i) diff[static_cast<std::size_t>(i)] = int{has_bit(v, i)} - int{has_bit(origin_, i)};
    directions_.push_back(std::move(diff));
    ++dimension_;
    rebuild_complement();
    return true;
}

// Fraction-free Gauss-Jordan on the directions, then one integer normal per
// free column.
void AffineSpan::rebuild_complement() {
    const auto m = static_cast<std::size_t>(ambient_);
    std::vector<std::vector<cpp_int>> rows;
    for (const auto& d : directions_) rows.emplace_back(d.begin(), d.end());

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const cpp_int a = rows[r][col];
            const cpp_int b = rows[i][col];
            cpp_int content = 0;
            for (std::size_t k = 0; k < m; ++k) {
                rows[i][k] = a * rows[i][k] - b * rows[r][k];
                content = gcd(content, rows[i][k]);
            }
            if (content > 1)
                for (auto& entry : rows[i]) entry /= content;
        }
        pivot_col.push_back(col);
        ++r;
    }

    std::vector<char> is_pivot(m, 0);
    cpp_int lcm_pivots = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        is_pivot[pivot_col[i]] = 1;
        lcm_pivots = lcm(lcm_pivots, cpp_int(abs(rows[i][pivot_col[i]])));
    }

    normals_.clear();
    for (std::size_t j = 0; j < m; ++j) {
        if (is_pivot[j]) continue;
        std::vector<cpp_int> x(m, 0);
        x[j] = lcm_pivots;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            x[pivot_col[i]] = -rows[i][j] * lcm_pivots / rows[i][pivot_col[i]];
        cpp_int content = 0;
        for (const auto& v : x) content = gcd(content, v);
        std::vector<std::int64_t> normal(m);
        for (std::size_t k = 0; k < m; ++k) {
            const cpp_int v = x[k] / content;
            if (abs(v) > cpp_int(std::int64_t{1} << 40)) throw std::overflow_error("AffineSpan: normal entry too large");
            normal[k] = static_cast<std::int64_t>(v);
        }
        normals_.push_back(std::move(normal));
    }

    tables_.assign(normals_.size(), std::vector<std::int64_t>(8 * 256, 0));
    for (std::size_t j = 0; j < normals_.size(); ++j) {
        for (int b = 0; b < 8; ++b) {
            for (int byte = 1; byte < 256; ++byte) {
                const int low = std::countr_zero(static_cast<unsigned>(byte));
                const int idx = 8 * b + low;
                const std::int64_t coef = idx < ambient_ ? normals_[j][static_cast<std::size_t>(idx)] : 0;
                tables_[j][static_cast<std::size_t>(b * 256 + byte)] =
                    tables_[j][static_cast<std::size_t>(b * 256 + (byte & (byte - 1)))] + coef;
            }
        }
    }
}

int affine_dimension(std::span<const EdgeBits> vectors, int edge_count) {
    if (vectors.empty()) throw std::invalid_argument("affine_dimension: empty vector list");
    AffineSpan span(edge_count);
    for (EdgeBits v : vectors) {
        span.add(v);
        if (span.dimension() == edge_count) break;
    }
    return span.dimension();
}

int affine_dimension(const VertexSet2EC& set) { return affine_dimension(set.vectors, set.graph->edge_count()); }

FaceReport face_report(const VertexSet2EC& set, const LinearInequality& row, int polytope_dim, bool keep_tight) {
    const int m = set.graph->edge_count();
    FaceReport out{row, true, 0, {}, -1, polytope_dim < 0 ? affine_dimension(set) : polytope_dim, false};
    const PackedRow packed(row);
    AffineSpan tight(m);
    // Once the tight set misses a vertex the face is proper, so its dimension
    // is at most dim - 1 and the rank search can stop there.
    std::optional<EdgeBits> first_loose;
    for (EdgeBits v : set.vectors) {
        const std::int64_t act = packed.activity(v);
        if (act > packed.rhs) out.valid = false;
        if (act != packed.rhs) {
            if (!first_loose) first_loose = v;
            continue;
        }
        ++out.tight_count;
        if (keep_tight) out.tight_vectors.push_back(v);
        if (!first_loose || tight.dimension() < out.polytope_dim - 1) tight.add(v);
    }
    if (out.tight_count == 0) {
        out.face_dim = -1;
    } else if (!first_loose) {
        out.face_dim = out.polytope_dim;
    } else {
        out.face_dim = std::min(tight.dimension(), out.polytope_dim - 1);
    }
    out.is_facet = out.valid && out.face_dim == out.polytope_dim - 1;
    return out;
}

namespace {

std::vector<FaceReport> classify(const VertexSet2EC& set, std::span<const LinearInequality> rows, int polytope_dim,
                                 bool parallel) {
    std::vector<std::optional<FaceReport>> slots(rows.size());
    const auto count = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < count; ++i)
        slots[static_cast<std::size_t>(i)] = face_report(set, rows[static_cast<std::size_t>(i)], polytope_dim);
    std::vector<FaceReport> out;
    out.reserve(rows.size());
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

}  // namespace

std::vector<FaceReport> face_reports(const VertexSet2EC& set, std::span<const LinearInequality> rows,
                                     int polytope_dim) {
    return classify(set, rows, polytope_dim, true);
}

namespace reference {

std::vector<FaceReport> face_reports(const VertexSet2EC& set, std::span<const LinearInequality> rows,
                                     int polytope_dim) {
    return classify(set, rows, polytope_dim, false);
}

}  // namespace reference

bool check_lattice_points(const Graph& g) {
    if (g.edge_count() > kLatticeEdgeBudget) throw BudgetExceeded("check_lattice_points: more than 18 edges");
    check_subset_budget(g);
    if (!is_two_edge_connected(g)) throw std::invalid_argument("check_lattice_points: graph is not 2-edge-connected");
    const int n = g.vertex_count();
    const int m = g.edge_count();

    // Per cut: the cut edges, the edges inside S and the edges outside S.
    struct CutMasks {
        EdgeBits cut = 0, inside = 0, outside = 0;
    };
    std::vector<CutMasks> cuts;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 1; s < full; s += 2) {
        CutMasks c;
        for (EdgeId e = 0; e < m; ++e) {
            const bool a = has_bit(s, g.edge(e).u);
            const bool b = has_bit(s, g.edge(e).v);
            const EdgeBits bit = EdgeBits{1} << e;
            if (a != b) c.cut |= bit;
            else if (a) c.inside |= bit;
            else c.outside |= bit;
        }
        cuts.push_back(c);
    }

    const VertexSet2EC set = enumerate_2ec(g);
    const std::unordered_set<EdgeBits> members(set.vectors.begin(), set.vectors.end());
    long mismatches = 0;
    const auto total = static_cast<long>(EdgeBits{1} << m);
#pragma omp parallel for schedule(static) reduction(+ : mismatches)
    for (long x = 0; x < total; ++x) {
        const auto bits = static_cast<EdgeBits>(x);
        bool feasible = true;
        for (const CutMasks& c : cuts) {
            const int used = std::popcount(bits & c.cut);
            // Largest left-hand side over the asymmetric rows of this cut ...
            if (used == 1) {
                feasible = false;
                break;
            }
            // ... and over its connectivity rows.
            const int lhs = 2 * int{(bits & c.inside) != 0} + 2 * int{(bits & c.outside) != 0} - used;
            if (lhs > 2) {
                feasible = false;
                break;
            }
        }
        if (feasible != (members.count(bits) != 0)) ++mismatches;
    }
    return mismatches == 0;
}

bool predicate_in_3cut(const Graph& g, EdgeId e) {
    check_subset_budget(g);
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("predicate_in_3cut: edge out of range");
    const int n = g.vertex_count();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 1; s < full; s += 2) {
        const Edge& target = g.edge(e);
        if (has_bit(s, target.u) == has_bit(s, target.v)) continue;
        int size = 0;
        for (const Edge& ed : g.edges())
            if (has_bit(s, ed.u) != has_bit(s, ed.v)) ++size;
        if (size == 3) return true;
    }
    return false;
}

std::vector<EdgeId> predicate_delta_Wf(const Graph& g, const CutSet& cut, EdgeId e1, EdgeId e2, EdgeId f) {
    if (f == e1 || f == e2) throw std::invalid_argument("predicate_delta_Wf: f must differ from e1 and e2");
    const Edge& fe = g.edge(f);
    const bool in_s = cut.contains_vertex(fe.u);
    if (in_s != cut.contains_vertex(fe.v)) throw std::invalid_argument("predicate_delta_Wf: f is a cut edge");
    const EdgeId anchor = in_s ? e1 : e2;
    const Edge& ae = g.edge(anchor);
    if (cut.contains_vertex(ae.u) != in_s || cut.contains_vertex(ae.v) != in_s)
        throw std::invalid_argument("predicate_delta_Wf: e1 must lie in G[S] and e2 in G[V \\ S]");

    VertexSet w_side(cut.side.size(), 0);
    for (std::size_t v = 0; v < cut.side.size(); ++v) w_side[v] = (cut.side[v] != 0) == in_s ? 1 : 0;
    EdgeMask active(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : induced_edges(g, w_side)) active[static_cast<std::size_t>(e)] = 1;
    const auto w_bridges = bridges(g, active);
    if (!std::binary_search(w_bridges.begin(), w_bridges.end(), f))
        throw std::invalid_argument("predicate_delta_Wf: f is not a bridge of G[W]");

    active[static_cast<std::size_t>(f)] = 0;
    const VertexPartition comps = connected_components(g, active);
    const int anchor_comp = comps.component_of[static_cast<std::size_t>(ae.u)];
    const int cu = comps.component_of[static_cast<std::size_t>(fe.u)];
    const int cv = comps.component_of[static_cast<std::size_t>(fe.v)];
    if (cu != anchor_comp && cv != anchor_comp)
        throw std::invalid_argument("predicate_delta_Wf: G[W] is disconnected, cut is not minimal");
    const int far = cu == anchor_comp ? cv : cu;

    std::vector<EdgeId> out;
    for (EdgeId c : cut.edges) {
        const Edge& ce = g.edge(c);
        if (comps.component_of[static_cast<std::size_t>(ce.u)] == far ||
            comps.component_of[static_cast<std::size_t>(ce.v)] == far)
            out.push_back(c);
    }
    return out;
}

bool TheoremReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) { return c.passed(); });
}

namespace {

struct Expectation {
    std::size_t check;
    bool facet;
};

struct CutData {
    CutSet cut;
    std::vector<EdgeId> inside, outside;
    std::vector<EdgeId> inside_bridges, outside_bridges;
};

CutData describe_cut(const Graph& g, const VertexSet& side) {
    CutData d{delta(g, side), induced_edges(g, side), {}, {}, {}};
    VertexSet rest(side.size(), 0);
    for (std::size_t v = 0; v < side.size(); ++v) rest[v] = side[v] ? 0 : 1;
    d.outside = induced_edges(g, rest);
    auto bridges_of = [&](const std::vector<EdgeId>& edges) {
        EdgeMask active(static_cast<std::size_t>(g.edge_count()), 0);
        for (EdgeId e : edges) active[static_cast<std::size_t>(e)] = 1;
        return bridges(g, active);
    };
    d.inside_bridges = bridges_of(d.inside);
    d.outside_bridges = bridges_of(d.outside);
    return d;
}

bool contains(const std::vector<EdgeId>& sorted, EdgeId e) { return std::binary_search(sorted.begin(), sorted.end(), e); }

// Every bridge of either side shares a coparallel class with a cut edge.
bool bridges_covered_by_cut(const CutData& d, const CoparallelPartition& cp) {
    auto covered = [&](EdgeId b) {
        return std::any_of(d.cut.edges.begin(), d.cut.edges.end(), [&](EdgeId c) {
            return cp.class_of[static_cast<std::size_t>(c)] == cp.class_of[static_cast<std::size_t>(b)];
        });
    };
    return std::all_of(d.inside_bridges.begin(), d.inside_bridges.end(), covered) &&
           std::all_of(d.outside_bridges.begin(), d.outside_bridges.end(), covered);
}

bool connectivity_facet_condition(const Graph& g, const CutData& d, EdgeId e1, EdgeId e2) {
    const bool b1 = contains(d.inside_bridges, e1);
    const bool b2 = contains(d.outside_bridges, e2);
    if (b1 || b2) return d.cut.edges.size() == 2;
    for (const auto* list : {&d.inside_bridges, &d.outside_bridges})
        for (EdgeId f : *list)
            if (predicate_delta_Wf(g, d.cut, e1, e2, f).size() != 1) return false;
    return true;
}

constexpr std::size_t kCoparallelChoiceCap = 20000;
constexpr std::size_t kWitnessLimit = 5;

}  // namespace

TheoremReport check_theorems(const Graph& g) {
    check_subset_budget(g);
    if (!is_two_edge_connected(g)) throw std::invalid_argument("check_theorems: graph is not 2-edge-connected");
    const VertexSet2EC set = enumerate_2ec(g);
    const CoparallelPartition cp = coparallel_partition(g);

    TheoremReport report;
    report.vertex_count = set.vectors.size();
    report.polytope_dim = affine_dimension(set);
    for (const char* name : {"box_lower", "box_upper", "asymmetric", "connectivity", "coparallel", "odd_star"})
        report.checks.push_back({name, 0, 0, 0, {}, {}});
    enum { kLower, kUpper, kAsym, kConn, kCopar, kStar };

    std::vector<LinearInequality> rows;
    std::vector<Expectation> expected;
    auto add = [&](LinearInequality row, std::size_t check, bool facet) {
        rows.push_back(std::move(row));
        expected.push_back({check, facet});
    };

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        add(make_box_lower(g, e), kLower, !predicate_in_3cut(g, e));
        add(make_box_upper(g, e), kUpper, true);
    }

    const int n = g.vertex_count();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::size_t dominated_asym = 0;
    std::size_t dominated_conn = 0;
    for (std::uint64_t s = 1; s < full; s += 2) {
        const CutData d = describe_cut(g, full_side(s, n));
        if (!d.cut.minimal) {
            dominated_asym += d.cut.edges.size();
            dominated_conn += d.inside.size() * d.outside.size();
            continue;
        }
        const bool asym_facet = d.cut.edges.size() >= 3 && bridges_covered_by_cut(d, cp);
        for (EdgeId e : d.cut.edges) add(make_asymmetric(g, d.cut, e), kAsym, asym_facet);
        for (EdgeId e1 : d.inside)
            for (EdgeId e2 : d.outside)
                add(make_connectivity(g, d.cut, e1, e2), kConn, connectivity_facet_condition(g, d, e1, e2));
    }
    report.checks[kAsym].skipped = dominated_asym;
    report.checks[kConn].skipped = dominated_conn;
    if (dominated_asym > 0)
        report.checks[kAsym].notes.push_back(std::to_string(dominated_asym) +
                                             " rows on non-minimal cuts skipped (dominated)");
    if (dominated_conn > 0)
        report.checks[kConn].notes.push_back(std::to_string(dominated_conn) + " rows on non-minimal cuts skipped");

    for (int c = 0; c < cp.size(); ++c) {
        const auto comps = edge_components_after_class_removal(g, cp, c);
        if (comps.size() < 3) continue;
        std::size_t combos = 1;
        for (const Component& comp : comps) combos *= comp.edges.size();
        if (combos > kCoparallelChoiceCap) {
            report.checks[kCopar].skipped += combos * cp.classes[static_cast<std::size_t>(c)].size();
            report.checks[kCopar].notes.push_back("class " + std::to_string(c) + ": " + std::to_string(combos) +
                                                  " edge choices exceed the enumeration cap");
            continue;
        }
        std::vector<std::size_t> pick(comps.size(), 0);
        std::vector<EdgeId> chosen(comps.size());
        for (std::size_t k = 0; k < combos; ++k) {
            for (std::size_t i = 0; i < comps.size(); ++i) chosen[i] = comps[i].edges[pick[i]];
            for (EdgeId f : cp.classes[static_cast<std::size_t>(c)])
                add(make_coparallel_class(g, cp, c, f, chosen), kCopar, true);
            for (std::size_t i = 0; i < comps.size(); ++i) {
                if (++pick[i] < comps[i].edges.size()) break;
                pick[i] = 0;
            }
        }
    }

    if (g.is_complete() && n >= 4)
        for (LinearInequality& row : enumerate_odd_stars(g)) add(std::move(row), kStar, true);

    const std::vector<FaceReport> faces = face_reports(set, rows, report.polytope_dim);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        TheoremCheck& check = report.checks[expected[i].check];
        ++check.checked;
        if (faces[i].is_facet == expected[i].facet) continue;
        ++check.mismatches;
        if (check.witnesses.size() < kWitnessLimit) {
            std::ostringstream w;
            w << rows[i].to_string() << " expected " << (expected[i].facet ? "facet" : "non-facet") << ", observed "
              << (faces[i].is_facet ? "facet" : "non-facet") << " (valid=" << faces[i].valid
              << ", face_dim=" << faces[i].face_dim << ", dim=" << faces[i].polytope_dim << ")";
            check.witnesses.push_back(w.str());
        }
    }
    return report;
}

}  // namespace tecs
