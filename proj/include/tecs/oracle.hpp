#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tecs/copar.hpp"
#include "tecs/graph.hpp"
#include "tecs/inequality.hpp"

namespace tecs {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incidence vectors are bit masks over edge ids, so the oracle needs |E| <= 64.
using EdgeBits = std::uint64_t;

/// Vertex set of the polytope of 2-edge-connected subgraphs of a small graph.
struct VertexSet2EC {
    /// Borrowed; the graph must outlive the set.
    const Graph* graph = nullptr;
    /// One mask per 2-edge-connected subgraph, the empty one first, the rest
    /// in increasing class-subset order.
    std::vector<EdgeBits> vectors;

    std::vector<std::uint8_t> incidence(std::size_t i) const;
};

constexpr int kEnumerationClassBudget = 24;
constexpr int kSubsetVertexBudget = 16;
constexpr int kLatticeEdgeBudget = 18;

/// Iterates over the unions of coparallel classes and keeps the
/// 2-edge-connected ones. Throws BudgetExceeded if |CP(g)| > 24 or |E| > 64.
VertexSet2EC enumerate_2ec(const Graph& g);

/// Same vertex set by testing every one of the 2^|E| edge subsets; for
/// cross-checking on |E| <= 20.
VertexSet2EC enumerate_2ec_naive(const Graph& g);

/// Affine hull of 0/1 vectors grown one point at a time. The orthogonal
/// complement is kept as an exact integer basis, so membership is a handful of
/// integer dot products and rank updates use fraction-free elimination.
class AffineSpan {
public:
    explicit AffineSpan(int dimension);

    /// Returns true if v was outside the current hull.
    bool add(EdgeBits v);
    bool contains(EdgeBits v) const;
    /// -1 while empty.
    int dimension() const { return dimension_; }

private:
    void rebuild_complement();
    std::int64_t dot(std::size_t normal, EdgeBits v) const;

    int ambient_;
    int dimension_ = -1;
    EdgeBits origin_ = 0;
    std::vector<std::vector<std::int64_t>> directions_;
    std::vector<std::vector<std::int64_t>> normals_;
    // Per normal: 8 byte-indexed tables of partial dot products.
    std::vector<std::vector<std::int64_t>> tables_;
};

/// Dimension of the affine hull; 0 for a single point. Requires a nonempty list.
int affine_dimension(std::span<const EdgeBits> vectors, int edge_count);
int affine_dimension(const VertexSet2EC& set);

struct FaceReport {
    LinearInequality row;
    bool valid = false;
    std::size_t tight_count = 0;
    /// Filled only when requested.
    std::vector<EdgeBits> tight_vectors;
    int face_dim = -1;
    int polytope_dim = 0;
    bool is_facet = false;
};

/// Validity, tight set and face dimension of `row` on conv(set). Pass
/// polytope_dim < 0 to have it computed.
FaceReport face_report(const VertexSet2EC& set, const LinearInequality& row, int polytope_dim = -1,
                       bool keep_tight = false);

/// Face reports for many rows; rows are classified in parallel.
std::vector<FaceReport> face_reports(const VertexSet2EC& set, std::span<const LinearInequality> rows,
                                     int polytope_dim);

namespace reference {
/// Serial version of face_reports.
std::vector<FaceReport> face_reports(const VertexSet2EC& set, std::span<const LinearInequality> rows,
                                     int polytope_dim);
}  // namespace reference

/// Whether the 0/1 points satisfying every asymmetric and connectivity row
/// (all cuts, by brute force) are exactly the enumerated vertex set. Requires
/// g 2-edge-connected; throws BudgetExceeded if |E| > 18 or |V| > 16.
bool check_lattice_points(const Graph& g);

/// Some cut delta(S) of size 3 contains e. Throws BudgetExceeded if |V| > 16.
bool predicate_in_3cut(const Graph& g, EdgeId e);

/// delta(W,f): cut edges with an end in the component of G[W] - f that holds
/// neither e1 nor e2, where W is the side containing f. Throws
/// std::invalid_argument unless f is a bridge of G[W] distinct from e1, e2.
std::vector<EdgeId> predicate_delta_Wf(const Graph& g, const CutSet& cut, EdgeId e1, EdgeId e2, EdgeId f);

struct TheoremCheck {
    std::string name;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::size_t mismatches = 0;
    /// Up to a few mismatching rows with the expected and observed status.
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;

    bool passed() const { return mismatches == 0; }
};

struct TheoremReport {
    std::size_t vertex_count = 0;
    int polytope_dim = 0;
    std::vector<TheoremCheck> checks;

    bool passed() const;
};

/// Compares face_report(...).is_facet with the combinatorial characterization
/// for every box, asymmetric, connectivity, coparallel class and odd star row
/// of g. Requires g 2-edge-connected and within the oracle budgets.
TheoremReport check_theorems(const Graph& g);

}  // namespace tecs
