#include "tecs/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

#include "tecs/copar.hpp"
#include "tecs/rng.hpp"
#include "tecs/separation.hpp"
#include "tecs/simplex.hpp"

namespace tecs {

std::string to_string(Model m) { return m == Model::Basic ? "basic" : "strengthened"; }
std::string to_string(SeparationMode s) { return s == SeparationMode::IntegerOnly ? "integer" : "fractional"; }
std::string to_string(SolveStatus s) { return s == SolveStatus::Optimal ? "optimal" : "time_limit"; }

void ModelConfig::validate() const {
    if (!(time_limit > 0.0)) throw std::invalid_argument("time limit must be positive");
    if (cut_cap_per_round <= 0) throw std::invalid_argument("cut cap per round must be positive");
    if (!(tolerances.feasibility > 0.0) || !(tolerances.integrality > 0.0) || !(tolerances.violation > 0.0))
        throw std::invalid_argument("tolerances must be positive");
    if (max_fractional_rounds < 0 || stall_rounds <= 0) throw std::invalid_argument("invalid round limits");
}

bool cut_pool_insert(CutPool& pool, LinearInequality row) { return pool.insert(std::move(row)); }

std::vector<ComponentInstance> preprocess(const Graph& g, const EdgeWeights& w) {
    if (w.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("preprocess: one weight per edge required");
    EdgeMask active(static_cast<std::size_t>(g.edge_count()), 1);
    while (true) {
        const auto found = bridges(g, active);
        if (found.empty()) break;
        for (EdgeId b : found) active[static_cast<std::size_t>(b)] = 0;
    }
    const VertexPartition comps = connected_components(g, active);

    std::vector<ComponentInstance> out;
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (const auto& part : comps.parts) {
        for (std::size_t i = 0; i < part.size(); ++i) local[static_cast<std::size_t>(part[i])] = static_cast<int>(i);
        std::vector<Edge> edges;
        ComponentInstance ci;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (!active[static_cast<std::size_t>(e)]) continue;
            const Edge& ed = g.edge(e);
            if (comps.component_of[static_cast<std::size_t>(ed.u)] !=
                comps.component_of[static_cast<std::size_t>(part.front())])
                continue;
            edges.push_back({local[static_cast<std::size_t>(ed.u)], local[static_cast<std::size_t>(ed.v)]});
            ci.weights.push_back(w[static_cast<std::size_t>(e)]);
            ci.original_edge.push_back(e);
        }
        if (edges.empty()) continue;
        ci.graph = Graph(static_cast<int>(part.size()), std::move(edges));
        out.push_back(std::move(ci));
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Node {
    std::vector<signed char> fixed;  // -1 free, 0 or 1
    double bound;
    int depth;
    long id;
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound < b.bound;
        if (a.depth != b.depth) return a.depth < b.depth;
        return a.id > b.id;
    }
};

struct ComponentResult {
    std::vector<EdgeId> edges;
    std::int64_t objective = 0;
    double bound = 0.0;
    bool finished = true;
    double root_bound = std::numeric_limits<double>::quiet_NaN();
};

class ComponentSolver {
public:
    ComponentSolver(const ComponentInstance& inst, const ModelConfig& cfg, Clock::time_point deadline,
                    SolveStats& stats)
        : g_(inst.graph), w_(inst.weights), cfg_(cfg), deadline_(deadline), stats_(stats),
          cp_(coparallel_partition(inst.graph)) {}

    ComponentResult run() {
        ComponentResult out;
        const int m = g_.edge_count();
        if (cfg_.model == Model::Strengthened && g_.is_complete() && g_.vertex_count() >= 4) {
            for (LinearInequality& row : enumerate_odd_stars(g_))
                if (cut_pool_insert(pool_, std::move(row))) ++stats_.cuts_odd_star;
        }

        // The empty subgraph is always feasible; the whole component is too.
        std::int64_t total = 0;
        for (auto x : w_) total += x;
        if (total > 0) {
            out.objective = total;
            out.edges.resize(static_cast<std::size_t>(m));
            for (EdgeId e = 0; e < m; ++e) out.edges[static_cast<std::size_t>(e)] = e;
        }
        incumbent_ = &out;

        std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
        long next_id = 0;
        open.push({std::vector<signed char>(static_cast<std::size_t>(m), -1),
                   std::numeric_limits<double>::infinity(), 0, next_id++});
        while (!open.empty()) {
            if (Clock::now() >= deadline_) {
                out.finished = false;
                out.bound = std::max(static_cast<double>(out.objective), open.top().bound);
                return out;
            }
            Node node = open.top();
            open.pop();
            if (prunable(node.bound)) continue;
            ++stats_.nodes;
            const auto processed = process(node);
            if (node.id == 0) out.root_bound = processed.bound;
            if (processed.timed_out) {
                out.finished = false;
                double bound = std::max(static_cast<double>(out.objective), processed.bound);
                if (!open.empty()) bound = std::max(bound, open.top().bound);
                out.bound = bound;
                return out;
            }
            if (processed.branch_var < 0) continue;
            for (signed char value : {static_cast<signed char>(1), static_cast<signed char>(0)}) {
                Node child{node.fixed, processed.bound, node.depth + 1, next_id++};
                child.fixed[static_cast<std::size_t>(processed.branch_var)] = value;
                open.push(std::move(child));
            }
        }
        out.bound = static_cast<double>(out.objective);
        return out;
    }

private:
    struct Processed {
        double bound = -std::numeric_limits<double>::infinity();
        int branch_var = -1;
        bool timed_out = false;
    };

    bool prunable(double bound) const {
        return std::floor(bound + cfg_.tolerances.integrality) <= static_cast<double>(incumbent_->objective);
    }

    SeparationOptions separation_options() {
        SeparationOptions opts;
        opts.tolerance = cfg_.tolerances.violation;
        opts.connectivity_heuristic = cfg_.connectivity_heuristic;
        std::uint64_t state = cfg_.seed + static_cast<std::uint64_t>(stats_.lp_solves);
        opts.seed = splitmix64(state);
        return opts;
    }

    // Adds up to the cap of new rows from one family; returns how many.
    long add_rows(const SeparationResult& found, long& counter) {
        long added = 0;
        for (const ViolatedRow& v : found.violated) {
            if (added >= cfg_.cut_cap_per_round) break;
            if (cut_pool_insert(pool_, v.row)) ++added;
        }
        counter += added;
        return added;
    }

    long separate(std::span<const double> x, bool fractional) {
        const SeparationOptions opts = separation_options();
        long added = add_rows(separate_asymmetric(g_, x, opts), stats_.cuts_asymmetric);
        added += add_rows(separate_connectivity(g_, x, opts), stats_.cuts_connectivity);
        if (fractional && cfg_.model == Model::Strengthened)
            added += add_rows(separate_coparallel(g_, cp_, x, opts), stats_.cuts_coparallel);
        return added;
    }

    Processed process(const Node& node) {
        Processed out;
        const int m = g_.edge_count();
        LpModel lp;
        lp.objective.assign(w_.begin(), w_.end());
        lp.lower.resize(static_cast<std::size_t>(m));
        lp.upper.resize(static_cast<std::size_t>(m));
        for (std::size_t e = 0; e < static_cast<std::size_t>(m); ++e) {
            lp.lower[e] = node.fixed[e] == 1 ? 1.0 : 0.0;
            lp.upper[e] = node.fixed[e] == 0 ? 0.0 : 1.0;
        }
        LpOptions lp_opts;
        lp_opts.tolerance = cfg_.tolerances.feasibility;

        int rounds = 0;
        int stalled = 0;
        double last_bound = std::numeric_limits<double>::infinity();
        while (true) {
            if (Clock::now() >= deadline_) {
                out.timed_out = true;
                out.bound = std::min(node.bound, last_bound);
                return out;
            }
            lp.rows = pool_.rows();
            const LpResult res = lp_solve(lp, lp_opts);
            ++stats_.lp_solves;
            if (res.status == LpStatus::Infeasible) {
                out.bound = -std::numeric_limits<double>::infinity();
                return out;
            }
            out.bound = res.value;
            if (prunable(res.value)) return out;

            const double tol = cfg_.tolerances.integrality;
            const bool integral = std::all_of(res.x.begin(), res.x.end(),
                                              [&](double v) { return std::abs(v) <= tol || std::abs(v - 1.0) <= tol; });
            if (integral) {
                std::vector<double> chi(res.x.size());
                for (std::size_t e = 0; e < chi.size(); ++e) chi[e] = res.x[e] > 0.5 ? 1.0 : 0.0;
                if (separate(chi, false) > 0) continue;
                accept(chi);
                return out;
            }

            if (cfg_.separation_mode == SeparationMode::Fractional && rounds < cfg_.max_fractional_rounds) {
                stalled = last_bound - res.value < 1e-9 ? stalled + 1 : 0;
                last_bound = res.value;
                if (stalled < cfg_.stall_rounds) {
                    ++rounds;
                    if (separate(res.x, true) > 0) continue;
                }
            }

            double best = 2.0;
            for (EdgeId e = 0; e < m; ++e) {
                const double v = res.x[static_cast<std::size_t>(e)];
                if (std::abs(v) <= tol || std::abs(v - 1.0) <= tol) continue;
                const double score = std::abs(v - 0.5);
                if (score < best) {
                    best = score;
                    out.branch_var = e;
                }
            }
            return out;
        }
    }

    void accept(const std::vector<double>& chi) {
        std::vector<EdgeId> edges;
        std::int64_t value = 0;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (chi[static_cast<std::size_t>(e)] < 0.5) continue;
            edges.push_back(e);
            value += w_[static_cast<std::size_t>(e)];
        }
        if (!is_two_edge_connected(g_, edges))
            throw std::logic_error("solver: separation accepted a subgraph that is not 2-edge-connected");
        if (value > incumbent_->objective) {
            incumbent_->objective = value;
            incumbent_->edges = std::move(edges);
        }
    }

    const Graph& g_;
    const EdgeWeights& w_;
    const ModelConfig& cfg_;
    Clock::time_point deadline_;
    SolveStats& stats_;
    CoparallelPartition cp_;
    CutPool pool_;
    ComponentResult* incumbent_ = nullptr;
};

}  // namespace

SolveReport solve(const Graph& g, const EdgeWeights& w, const ModelConfig& cfg) {
    cfg.validate();
    const auto start = Clock::now();
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_limit));

    SolveReport report;
    report.stats.root_bound = std::numeric_limits<double>::quiet_NaN();
    double bound = 0.0;
    bool finished = true;
    const std::vector<ComponentInstance> comps = preprocess(g, w);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const ComponentInstance& inst = comps[c];
        if (!finished) {
            // Not reached before the deadline: bounded by its positive weight.
            double positive = 0.0;
            for (auto x : inst.weights) positive += static_cast<double>(std::max<std::int64_t>(x, 0));
            bound = std::max(bound, positive);
            continue;
        }
        ComponentSolver solver(inst, cfg, deadline, report.stats);
        ComponentResult res = solver.run();
        if (std::isnan(report.stats.root_bound)) report.stats.root_bound = res.root_bound;
        finished = finished && res.finished;
        bound = std::max(bound, res.bound);
        if (res.objective > report.objective) {
            report.objective = res.objective;
            report.incumbent.edges.clear();
            for (EdgeId e : res.edges)
                report.incumbent.edges.push_back(inst.original_edge[static_cast<std::size_t>(e)]);
            std::sort(report.incumbent.edges.begin(), report.incumbent.edges.end());
        }
    }
    if (!is_two_edge_connected(g, report.incumbent.edges))
        throw std::logic_error("solve: incumbent is not 2-edge-connected");
    report.status = finished ? SolveStatus::Optimal : SolveStatus::TimeLimit;
    report.dual_bound = finished ? static_cast<double>(report.objective) : std::max(bound, static_cast<double>(report.objective));
    report.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

}  // namespace tecs
