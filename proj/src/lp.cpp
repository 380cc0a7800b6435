#include <algorithm>
#include <stdexcept>

#include "helly/errors.hpp"
#include "helly/geometry.hpp"

namespace helly {

namespace {

// Dense exact-rational tableau. Free variables are split x = p - q; every row
// gets an artificial so phase 1 starts from an identity basis. b >= 0 is an
// invariant; Bland's rule (least index entering, least basis index on ratio
// ties) guarantees termination.
class Simplex {
public:
    Simplex(int dim, std::span<const LinearConstraint> rows) : dim_(dim) {
        const std::size_t m = rows.size();
        std::size_t slacks = 0;
        for (const auto& row : rows)
            if (row.rel == Rel::le) ++slacks;
        n_struct_ = 2 * static_cast<std::size_t>(dim);
        n_total_ = n_struct_ + slacks + m;
        art_begin_ = n_struct_ + slacks;
        a_.assign(m, std::vector<Rat>(n_total_, Rat(0)));
        b_.assign(m, Rat(0));
        basis_.assign(m, 0);
        std::size_t slack = n_struct_;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& row = rows[i];
            if (static_cast<int>(row.normal.size()) != dim)
                throw std::invalid_argument("lp_solve: constraint dimension mismatch");
            for (int j = 0; j < dim; ++j) {
                a_[i][static_cast<std::size_t>(j)] = row.normal[static_cast<std::size_t>(j)];
                a_[i][static_cast<std::size_t>(dim + j)] = -row.normal[static_cast<std::size_t>(j)];
            }
            if (row.rel == Rel::le) a_[i][slack++] = 1;
            b_[i] = row.offset;
            if (b_[i] < 0) {
                for (auto& v : a_[i]) v = -v;
                b_[i] = -b_[i];
            }
            a_[i][art_begin_ + i] = 1;
            basis_[i] = art_begin_ + i;
        }
    }

    bool run_phase1() {
        std::vector<Rat> cost(n_total_, Rat(0));
        for (std::size_t j = art_begin_; j < n_total_; ++j) cost[j] = -1;
        iterate(cost, n_total_);  // never unbounded: objective <= 0
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] >= art_begin_ && b_[i] != 0) return false;
        evict_artificials();
        return true;
    }

    // Returns false when unbounded.
    bool run_phase2(std::span<const Rat> objective) {
        std::vector<Rat> cost(n_total_, Rat(0));
        for (int j = 0; j < dim_; ++j) {
            cost[static_cast<std::size_t>(j)] = objective[static_cast<std::size_t>(j)];
            cost[static_cast<std::size_t>(dim_ + j)] = -objective[static_cast<std::size_t>(j)];
        }
        return iterate(cost, art_begin_);
    }

    std::vector<Rat> point() const {
        std::vector<Rat> x(static_cast<std::size_t>(dim_), Rat(0));
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i] < static_cast<std::size_t>(dim_))
                x[basis_[i]] += b_[i];
            else if (basis_[i] < n_struct_)
                x[basis_[i] - static_cast<std::size_t>(dim_)] -= b_[i];
        }
        return x;
    }

private:
    // Maximizes cost over columns < allowed_end; true when optimal.
    bool iterate(const std::vector<Rat>& cost, std::size_t allowed_end) {
        while (true) {
            std::vector<Rat> dual(basis_.size());
            for (std::size_t i = 0; i < basis_.size(); ++i) dual[i] = cost[basis_[i]];
            std::size_t entering = n_total_;
            for (std::size_t j = 0; j < allowed_end && entering == n_total_; ++j) {
                Rat rc = cost[j];
                for (std::size_t i = 0; i < basis_.size(); ++i)
                    if (dual[i] != 0 && a_[i][j] != 0) rc -= dual[i] * a_[i][j];
                if (rc > 0) entering = j;
            }
            if (entering == n_total_) return true;
            std::size_t leave = basis_.size();
            Rat best_ratio;
            for (std::size_t i = 0; i < basis_.size(); ++i) {
                if (a_[i][entering] <= 0) continue;
                Rat ratio = b_[i] / a_[i][entering];
                if (leave == basis_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == basis_.size()) return false;  // unbounded
            pivot(leave, entering);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rat p = a_[row][col];
        for (auto& v : a_[row]) v /= p;
        b_[row] /= p;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (i == row || a_[i][col] == 0) continue;
            const Rat f = a_[i][col];
            for (std::size_t j = 0; j < n_total_; ++j)
                if (a_[row][j] != 0) a_[i][j] -= f * a_[row][j];
            b_[i] -= f * b_[row];
        }
        basis_[row] = col;
    }

    void evict_artificials() {
        for (std::size_t i = 0; i < basis_.size();) {
            if (basis_[i] < art_begin_) {
                ++i;
                continue;
            }
            std::size_t col = art_begin_;
            for (std::size_t j = 0; j < art_begin_; ++j) {
                if (a_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col < art_begin_) {
                pivot(i, col);  // b_[i] == 0 here, so feasibility is kept
                ++i;
            } else {  // redundant row
                a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
                b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    int dim_;
    std::size_t n_struct_ = 0, n_total_ = 0, art_begin_ = 0;
    std::vector<std::vector<Rat>> a_;
    std::vector<Rat> b_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LPResult lp_solve(int dim, std::span<const LinearConstraint> rows,
                  std::span<const Rat> objective) {
    if (dim < 0) throw std::invalid_argument("lp_solve: negative dimension");
    if (static_cast<int>(objective.size()) != dim)
        throw std::invalid_argument("lp_solve: objective dimension mismatch");
    LPResult result;
    if (dim == 0) {
        for (const auto& row : rows) {
            const bool ok = row.rel == Rel::le ? (row.offset >= 0) : (row.offset == 0);
            if (!ok) return result;
        }
        result.status = LPResult::Status::optimal;
        return result;
    }
    Simplex s(dim, rows);
    if (!s.run_phase1()) return result;  // infeasible
    if (!s.run_phase2(objective)) {
        result.status = LPResult::Status::unbounded;
        result.point = s.point();
        return result;
    }
    result.status = LPResult::Status::optimal;
    result.point = s.point();
    result.value = 0;
    for (int j = 0; j < dim; ++j)
        result.value += objective[static_cast<std::size_t>(j)] * result.point[static_cast<std::size_t>(j)];
    return result;
}

}  // namespace helly
