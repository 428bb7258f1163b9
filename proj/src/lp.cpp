#include "rotset/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace rotset::lp {

namespace {

// Tableau in canonical form with respect to `basis`. Column `cols` holds the
// right-hand side. `cost` holds reduced costs; cost[cols] is minus the
// current objective value.
class Tableau {
public:
    Tableau(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b)
        : rows_(a.size()), vars_(a.empty() ? 0 : a.front().size()), cols_(vars_ + rows_) {
        if (b.size() != rows_) throw std::invalid_argument("lp: rhs length mismatch");
        t_.assign(rows_, std::vector<Rational>(cols_ + 1, Rational(0)));
        basis_.resize(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (a[i].size() != vars_) throw std::invalid_argument("lp: ragged constraint matrix");
            const bool flip = sgn(b[i]) < 0;
            for (std::size_t j = 0; j < vars_; ++j) t_[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
            t_[i][vars_ + i] = 1;
            t_[i][cols_] = flip ? Rational(-b[i]) : b[i];
            basis_[i] = vars_ + i;
        }
        // Phase one objective: sum of artificials.
        cost_.assign(cols_ + 1, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < vars_; ++j) cost_[j] -= t_[i][j];
            cost_[cols_] -= t_[i][cols_];
        }
        removed_.assign(rows_, false);
    }

    // Runs Bland's rule over columns [0, limit). Returns false if unbounded.
    bool optimize(std::size_t limit) {
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (sgn(cost_[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == limit) return true;

            std::size_t leave = rows_;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (removed_[i] || sgn(t_[i][enter]) <= 0) continue;
                Rational ratio = t_[i][cols_] / t_[i][enter];
                if (leave == rows_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leave == rows_) return false;
            pivot(leave, enter);
        }
    }

    Rational objective() const { return -cost_[cols_]; }

    // After phase one: pivot artificials out of the basis where possible,
    // drop redundant rows, then install the phase two costs.
    void start_phase_two(const std::vector<Rational>& c) {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] < vars_) continue;
            std::size_t col = vars_;
            for (std::size_t j = 0; j < vars_; ++j) {
                if (sgn(t_[i][j]) != 0) {
                    col = j;
                    break;
                }
            }
            if (col == vars_) {
                removed_[i] = true;
            } else {
                pivot(i, col);
            }
        }
        cost_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < vars_; ++j) cost_[j] = c[j];
        for (std::size_t i = 0; i < rows_; ++i) {
            if (removed_[i]) continue;
            const Rational& cb = c[basis_[i]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= cb * t_[i][j];
        }
    }

    std::vector<Rational> point() const {
        std::vector<Rational> x(vars_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!removed_[i] && basis_[i] < vars_) x[basis_[i]] = t_[i][cols_];
        }
        return x;
    }

    std::size_t vars() const { return vars_; }

private:
    void pivot(std::size_t row, std::size_t col) {
        auto& pr = t_[row];
        const Rational inv = 1 / pr[col];
        for (auto& v : pr) {
            if (sgn(v) != 0) v *= inv;
        }
        auto eliminate = [&](std::vector<Rational>& r) {
            if (sgn(r[col]) == 0) return;
            const Rational factor = r[col];
            for (std::size_t j = 0; j <= cols_; ++j) {
                if (sgn(pr[j]) != 0) r[j] -= factor * pr[j];
            }
        };
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i != row) eliminate(t_[i]);
        }
        eliminate(cost_);
        basis_[row] = col;
    }

    std::size_t rows_;
    std::size_t vars_;
    std::size_t cols_;
    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_;
    std::vector<bool> removed_;
};

}  // namespace

std::optional<std::vector<Rational>> find_feasible(const std::vector<std::vector<Rational>>& a,
                                                   const std::vector<Rational>& b) {
    Tableau tab(a, b);
    tab.optimize(tab.vars());
    if (sgn(tab.objective()) != 0) return std::nullopt;
    return tab.point();
}

Solution solve(const Problem& problem) {
    Tableau tab(problem.a, problem.b);
    if (problem.c.size() != tab.vars()) throw std::invalid_argument("lp: cost length mismatch");
    tab.optimize(tab.vars());
    Solution out;
    if (sgn(tab.objective()) != 0) {
        out.status = Status::infeasible;
        return out;
    }
    tab.start_phase_two(problem.c);
    if (!tab.optimize(tab.vars())) {
        out.status = Status::unbounded;
        return out;
    }
    out.status = Status::optimal;
    out.objective = tab.objective();
    out.x = tab.point();
    return out;
}

}  // namespace rotset::lp
