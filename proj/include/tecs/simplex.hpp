#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "tecs/inequality.hpp"

namespace tecs {

class LpIterationLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// max c.x  s.t.  rows, lower <= x <= upper.
struct LpModel {
    std::vector<double> objective;
    std::span<const LinearInequality> rows;
    std::vector<double> lower;
    std::vector<double> upper;
};

struct LpOptions {
    double tolerance = 1e-9;
    /// 0 picks a cap from the model size.
    long max_iterations = 0;
    /// Consecutive degenerate pivots before switching to Bland's rule.
    int degenerate_streak = 50;
};

enum class LpStatus { Optimal, Infeasible };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    double value = 0.0;
    std::vector<double> x;
    long iterations = 0;
};

/// Bounded-variable primal simplex on a dense tableau. Dantzig pricing,
/// falling back to Bland's rule after a run of degenerate pivots. Rows whose
/// slack starts negative get an artificial variable and a phase 1.
/// Throws LpIterationLimit if the cap is hit, std::invalid_argument on
/// inconsistent sizes or lower > upper.
LpResult lp_solve(const LpModel& model, const LpOptions& opts = {});

}  // namespace tecs
