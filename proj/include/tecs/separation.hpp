#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tecs/copar.hpp"
#include "tecs/graph.hpp"
#include "tecs/inequality.hpp"

namespace tecs {

/// LP point in [0,1]^E; 0/1 points are incidence vectors.
using FractionalPoint = std::vector<double>;

struct ViolatedRow {
    LinearInequality row;
    double violation;
};

struct SeparationResult {
    /// Sorted by decreasing violation, then canonical row order.
    std::vector<ViolatedRow> violated;
    /// The exact routine ran to completion and found nothing.
    bool exhausted = false;
};

struct SeparationOptions {
    double tolerance = 1e-6;
    /// Connectivity only: try one edge pair per pair of support components
    /// first and fall back to the exact loop if that finds nothing.
    bool connectivity_heuristic = false;
    std::uint64_t seed = 0;
};

/// For each e = {s,t} with positive value, a minimum s-t cut F_e of G - e
/// under capacities x gives the row on F_e + e. The cut is shrunk to an
/// inclusion-minimal one, which never lowers the violation. Runs the edges in
/// parallel (OpenMP).
SeparationResult separate_asymmetric(const Graph& g, std::span<const double> x,
                                     const SeparationOptions& opts = {});

/// For each pair of non-adjacent edges e1, e2 a minimum cut between an
/// endpoint of each, with capacity 2|E| on e1 and e2. Pairs with
/// x_{e1} + x_{e2} <= 1 cannot yield a violated row and are skipped. Runs the
/// pairs in parallel (OpenMP).
SeparationResult separate_connectivity(const Graph& g, std::span<const double> x,
                                       const SeparationOptions& opts = {});

/// For each class whose removal leaves r >= 3 edge-containing components:
/// e_i = argmax x over component i, f = argmin x over the class (ties to the
/// smallest edge id). Throws std::invalid_argument unless g is
/// 2-edge-connected.
SeparationResult separate_coparallel(const Graph& g, const CoparallelPartition& cp, std::span<const double> x,
                                     const SeparationOptions& opts = {});

/// Serial reference implementations of the parallel kernels above; same
/// results, kept for tests and benchmarks.
namespace reference {

SeparationResult separate_asymmetric(const Graph& g, std::span<const double> x, const SeparationOptions& opts = {});
SeparationResult separate_connectivity(const Graph& g, std::span<const double> x,
                                       const SeparationOptions& opts = {});

}  // namespace reference

}  // namespace tecs
