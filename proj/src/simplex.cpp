#include "tecs/simplex.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace tecs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dictionary x_B = value + T x_N. Nonbasic variables sit at one of their bounds.
class Tableau {
public:
    Tableau(const LpModel& model, const LpOptions& opts) : opts_(opts) {
        n_ = static_cast<int>(model.objective.size());
        m_ = static_cast<int>(model.rows.size());
        if (model.lower.size() != model.objective.size() || model.upper.size() != model.objective.size())
            throw std::invalid_argument("lp_solve: bound vectors must match the objective");
        for (int j = 0; j < n_; ++j) {
            if (model.lower[static_cast<std::size_t>(j)] > model.upper[static_cast<std::size_t>(j)])
                throw std::invalid_argument("lp_solve: lower bound exceeds upper bound");
            lo_.push_back(model.lower[static_cast<std::size_t>(j)]);
            hi_.push_back(model.upper[static_cast<std::size_t>(j)]);
            value_.push_back(lo_.back());
        }
        for (int i = 0; i < m_; ++i) {
            lo_.push_back(0.0);
            hi_.push_back(kInf);
            value_.push_back(0.0);
        }

        // Row activity at the starting point decides slack or artificial basis.
        std::vector<double> start_slack(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i) {
            const LinearInequality& row = model.rows[static_cast<std::size_t>(i)];
            double act = 0.0;
            for (const Term& t : row.terms()) {
                if (t.edge < 0 || t.edge >= n_) throw std::invalid_argument("lp_solve: row references unknown variable");
                act += static_cast<double>(t.coef) * lo_[static_cast<std::size_t>(t.edge)];
            }
            start_slack[static_cast<std::size_t>(i)] = static_cast<double>(row.rhs()) - act;
        }
        std::vector<int> artificial_row;
        for (int i = 0; i < m_; ++i)
            if (start_slack[static_cast<std::size_t>(i)] < -opts_.tolerance) artificial_row.push_back(i);
        const int k = static_cast<int>(artificial_row.size());
        for (int a = 0; a < k; ++a) {
            lo_.push_back(0.0);
            hi_.push_back(kInf);
            value_.push_back(0.0);
        }
        total_ = n_ + m_ + k;
        first_artificial_ = n_ + m_;

        cols_ = n_ + k;
        table_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(cols_), 0.0);
        for (int j = 0; j < n_; ++j) nonbasic_.push_back(j);
        std::vector<int> art_of_row(static_cast<std::size_t>(m_), -1);
        for (int a = 0; a < k; ++a) {
            const int row = artificial_row[static_cast<std::size_t>(a)];
            art_of_row[static_cast<std::size_t>(row)] = a;
            nonbasic_.push_back(n_ + row);
        }
        for (int i = 0; i < m_; ++i) {
            const LinearInequality& row = model.rows[static_cast<std::size_t>(i)];
            const int a = art_of_row[static_cast<std::size_t>(i)];
            // Slack row: s = rhs - a.x.  Artificial row: art = a.x - rhs + s.
            const double sign = a < 0 ? -1.0 : 1.0;
            for (const Term& t : row.terms()) at(i, t.edge) += sign * static_cast<double>(t.coef);
            if (a < 0) {
                basic_.push_back(n_ + i);
                value_[static_cast<std::size_t>(n_ + i)] = start_slack[static_cast<std::size_t>(i)];
            } else {
                at(i, n_ + a) = 1.0;
                basic_.push_back(first_artificial_ + a);
                value_[static_cast<std::size_t>(first_artificial_ + a)] = -start_slack[static_cast<std::size_t>(i)];
            }
        }
        at_upper_.assign(static_cast<std::size_t>(total_), 0);
        cap_ = opts_.max_iterations > 0 ? opts_.max_iterations : 20000L + 50L * (m_ + n_ + k);
    }

    LpResult solve(const LpModel& model) {
        LpResult out;
        if (total_ > n_ + m_) {
            std::vector<double> cost(static_cast<std::size_t>(total_), 0.0);
            for (int a = first_artificial_; a < total_; ++a) cost[static_cast<std::size_t>(a)] = -1.0;
            optimize(cost);
            double infeasibility = 0.0;
            for (int a = first_artificial_; a < total_; ++a) infeasibility += value_[static_cast<std::size_t>(a)];
            if (infeasibility > 1e-7) {
                out.status = LpStatus::Infeasible;
                out.iterations = iterations_;
                return out;
            }
            for (int a = first_artificial_; a < total_; ++a) {
                hi_[static_cast<std::size_t>(a)] = 0.0;
                value_[static_cast<std::size_t>(a)] = 0.0;
            }
        }
        std::vector<double> cost(static_cast<std::size_t>(total_), 0.0);
        for (int j = 0; j < n_; ++j) cost[static_cast<std::size_t>(j)] = model.objective[static_cast<std::size_t>(j)];
        optimize(cost);

        out.status = LpStatus::Optimal;
        out.iterations = iterations_;
        out.x.resize(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            out.x[ju] = std::min(hi_[ju], std::max(lo_[ju], value_[ju]));
            out.value += model.objective[ju] * out.x[ju];
        }
        return out;
    }

private:
    double& at(int row, int col) {
        return table_[static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(col)];
    }

    void optimize(const std::vector<double>& cost) {
        // Reduced costs of the current nonbasic columns.
        std::vector<double> d(static_cast<std::size_t>(cols_));
        for (int c = 0; c < cols_; ++c) {
            double r = cost[static_cast<std::size_t>(nonbasic_[static_cast<std::size_t>(c)])];
            for (int i = 0; i < m_; ++i) r += cost[static_cast<std::size_t>(basic_[static_cast<std::size_t>(i)])] * at(i, c);
            d[static_cast<std::size_t>(c)] = r;
        }
        const double tol = opts_.tolerance;
        int degenerate = 0;
        bool bland = false;
        std::vector<double> alpha(static_cast<std::size_t>(m_));
        while (true) {
            if (++iterations_ > cap_)
                throw LpIterationLimit("lp_solve: iteration cap of " + std::to_string(cap_) + " exceeded");

            int enter = -1;
            double best = 0.0;
            for (int c = 0; c < cols_; ++c) {
                const int var = nonbasic_[static_cast<std::size_t>(c)];
                const auto vu = static_cast<std::size_t>(var);
                if (hi_[vu] - lo_[vu] <= tol) continue;
                const double dc = d[static_cast<std::size_t>(c)];
                const bool improving = at_upper_[vu] ? dc < -tol : dc > tol;
                if (!improving) continue;
                if (bland) {
                    if (enter == -1 || var < nonbasic_[static_cast<std::size_t>(enter)]) enter = c;
                } else if (std::abs(dc) > best) {
                    best = std::abs(dc);
                    enter = c;
                }
            }
            if (enter == -1) return;

            const int evar = nonbasic_[static_cast<std::size_t>(enter)];
            const auto eu = static_cast<std::size_t>(evar);
            const double dir = at_upper_[eu] ? -1.0 : 1.0;
            double step = hi_[eu] - lo_[eu];
            int leave = -1;
            bool leave_to_upper = false;
            for (int i = 0; i < m_; ++i) {
                const double a = at(i, enter) * dir;
                alpha[static_cast<std::size_t>(i)] = a;
                const auto bu = static_cast<std::size_t>(basic_[static_cast<std::size_t>(i)]);
                double limit;
                bool to_upper;
                if (a < -tol) {
                    limit = (value_[bu] - lo_[bu]) / -a;
                    to_upper = false;
                } else if (a > tol && hi_[bu] < kInf) {
                    limit = (hi_[bu] - value_[bu]) / a;
                    to_upper = true;
                } else {
                    continue;
                }
                limit = std::max(limit, 0.0);
                bool take = limit < step - tol;
                if (!take && limit <= step + tol) {
                    if (leave == -1) {
                        // Against a bound flip only a strictly shorter step wins.
                        take = limit < step;
                    } else {
                        // Bland keeps the smallest variable, Dantzig the largest pivot.
                        const int cur = basic_[static_cast<std::size_t>(leave)];
                        take = bland ? basic_[static_cast<std::size_t>(i)] < cur
                                     : std::abs(a) > std::abs(alpha[static_cast<std::size_t>(leave)]);
                    }
                }
                if (take) {
                    step = limit;
                    leave = i;
                    leave_to_upper = to_upper;
                }
            }
            if (step == kInf) throw std::logic_error("lp_solve: unbounded direction in a boxed model");

            if (step <= tol) {
                if (++degenerate >= opts_.degenerate_streak) bland = true;
            } else {
                degenerate = 0;
            }

            for (int i = 0; i < m_; ++i)
                value_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(i)])] += alpha[static_cast<std::size_t>(i)] * step;
            value_[eu] += dir * step;

            if (leave == -1) {
                // Bound flip.
                at_upper_[eu] = at_upper_[eu] ? 0 : 1;
                value_[eu] = at_upper_[eu] ? hi_[eu] : lo_[eu];
                continue;
            }

            const int lvar = basic_[static_cast<std::size_t>(leave)];
            const auto lu = static_cast<std::size_t>(lvar);
            value_[lu] = leave_to_upper ? hi_[lu] : lo_[lu];
            at_upper_[lu] = leave_to_upper ? 1 : 0;
            pivot(leave, enter, d);
            basic_[static_cast<std::size_t>(leave)] = evar;
            nonbasic_[static_cast<std::size_t>(enter)] = lvar;
        }
    }

    void pivot(int r, int k, std::vector<double>& d) {
        const double p = at(r, k);
        double* row_r = &at(r, 0);
        for (int j = 0; j < cols_; ++j) row_r[j] = j == k ? 1.0 / p : -row_r[j] / p;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            double* row_i = &at(i, 0);
            const double factor = row_i[k];
            if (factor == 0.0) continue;
            for (int j = 0; j < cols_; ++j) row_i[j] = j == k ? factor * row_r[k] : row_i[j] + factor * row_r[j];
        }
        const double dk = d[static_cast<std::size_t>(k)];
        for (int j = 0; j < cols_; ++j)
            d[static_cast<std::size_t>(j)] = j == k ? dk * row_r[k] : d[static_cast<std::size_t>(j)] + dk * row_r[j];
    }

    LpOptions opts_;
    int n_ = 0, m_ = 0, total_ = 0, first_artificial_ = 0, cols_ = 0;
    long cap_ = 0;
    long iterations_ = 0;
    std::vector<double> lo_, hi_, value_;
    std::vector<char> at_upper_;
    std::vector<int> basic_, nonbasic_;
    std::vector<double> table_;
};

}  // namespace

LpResult lp_solve(const LpModel& model, const LpOptions& opts) {
    Tableau tableau(model, opts);
    return tableau.solve(model);
}

}  // namespace tecs
