#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tecs/graph.hpp"
#include "tecs/inequality.hpp"

namespace tecs {

enum class Model { Basic, Strengthened };
enum class SeparationMode { IntegerOnly, Fractional };
enum class SolveStatus { Optimal, TimeLimit };

std::string to_string(Model m);
std::string to_string(SeparationMode s);
std::string to_string(SolveStatus s);

struct Tolerances {
    double feasibility = 1e-9;
    double integrality = 1e-6;
    double violation = 1e-6;
};

struct ModelConfig {
    Model model = Model::Basic;
    SeparationMode separation_mode = SeparationMode::IntegerOnly;
    double time_limit = 600.0;
    int cut_cap_per_round = 20;
    Tolerances tolerances;
    std::uint64_t seed = 0;
    /// Separation rounds at fractional points per node.
    int max_fractional_rounds = 100;
    /// Stop fractional rounds once the bound moved less than 1e-9 over this
    /// many consecutive rounds.
    int stall_rounds = 10;
    /// Try one connectivity pair per pair of support components before the
    /// exact pair loop; seeded from `seed`.
    bool connectivity_heuristic = true;

    /// Throws std::invalid_argument on a non-positive time limit, cut cap or
    /// tolerance.
    void validate() const;
};

/// A bridgeless connected piece of the input with its weights and the ids of
/// its edges in the input graph.
struct ComponentInstance {
    Graph graph;
    EdgeWeights weights;
    std::vector<EdgeId> original_edge;
};

/// Deletes bridges until none are left and splits into connected components.
/// Edgeless components are dropped.
std::vector<ComponentInstance> preprocess(const Graph& g, const EdgeWeights& w);

struct SolveStats {
    long nodes = 0;
    long lp_solves = 0;
    long cuts_asymmetric = 0;
    long cuts_connectivity = 0;
    long cuts_coparallel = 0;
    long cuts_odd_star = 0;
    double seconds = 0.0;
    /// LP value at the end of the root cut loop of the first component that
    /// has edges (NaN if there is none).
    double root_bound = 0.0;
};

struct SolveReport {
    /// Edge ids of the input graph.
    EdgeSubgraph incumbent;
    std::int64_t objective = 0;
    /// Equals `objective` when Optimal.
    double dual_bound = 0.0;
    SolveStatus status = SolveStatus::Optimal;
    SolveStats stats;
};

/// Branch-and-cut for the maximum-weight 2-edge-connected subgraph.
SolveReport solve(const Graph& g, const EdgeWeights& w, const ModelConfig& cfg);

/// Inserts a row into a pool; false if an identical row is present.
bool cut_pool_insert(CutPool& pool, LinearInequality row);

}  // namespace tecs
