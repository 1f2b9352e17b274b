// Copyright 2026 The latgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LATGAME_SIMPLEX_HPP
#define LATGAME_SIMPLEX_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "latgame/rational.hpp"

namespace latgame {

/// maximize c.y  subject to  A y = b,  y >= 0.
struct LinearProgram
{
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult
{
    LpStatus status = LpStatus::infeasible;
    /// Primal point (optimal status only).
    std::vector<Rational> y;
    Rational objective;
    /// Row prices pi with A^T pi >= c and pi.b = objective (optimal status only).
    std::vector<Rational> duals;
    /// Farkas ray r with r^T A <= 0 and r.b > 0 (infeasible status only).
    std::vector<Rational> farkas;
};

/// Dense two-phase tableau simplex over exact rationals with Bland's rule,
/// so pivoting is deterministic and cannot cycle.
class ExactSimplex
{
public:
    explicit ExactSimplex(const LinearProgram& lp) : lp_(lp)
    {
        rows_ = lp.b.size();
        cols_ = lp.c.size();
        if (lp.a.size() != rows_) {
            throw std::invalid_argument("constraint matrix row count mismatch");
        }
        for (const auto& r : lp.a) {
            if (r.size() != cols_) {
                throw std::invalid_argument("constraint matrix column count mismatch");
            }
        }
    }

    LpResult solve()
    {
        setup_phase_one();
        LpResult res;
        run(true);
        if (phase_objective() < 0) {
            res.status = LpStatus::infeasible;
            // Phase-one prices are c_B B^-1 with cost -1 on artificials; their
            // negation certifies infeasibility.
            auto pi = prices(true);
            for (auto& p : pi) {
                p = -p;
            }
            res.farkas = std::move(pi);
            return res;
        }
        drive_out_artificials();
        if (!run(false)) {
            res.status = LpStatus::unbounded;
            return res;
        }
        res.status = LpStatus::optimal;
        res.y.assign(cols_, Rational(0));
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            if (active_[r] && basis_[r] < cols_) {
                res.y[basis_[r]] = tab_[r][rhs_col()];
            }
        }
        res.objective = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            res.objective += lp_.c[j] * res.y[j];
        }
        res.duals = prices(false);
        return res;
    }

private:
    std::size_t rhs_col() const { return cols_ + rows_; }

    void setup_phase_one()
    {
        sign_.assign(rows_, 1);
        tab_.assign(rows_, std::vector<Rational>(cols_ + rows_ + 1));
        basis_.resize(rows_);
        active_.assign(rows_, true);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (lp_.b[r] < 0) {
                sign_[r] = -1;
            }
            for (std::size_t j = 0; j < cols_; ++j) {
                tab_[r][j] = sign_[r] * lp_.a[r][j];
            }
            tab_[r][cols_ + r] = 1;
            tab_[r][rhs_col()] = sign_[r] * lp_.b[r];
            basis_[r] = cols_ + r;
        }
    }

    Rational cost(std::size_t j, bool phase_one) const
    {
        if (phase_one) {
            return j >= cols_ ? Rational(-1) : Rational(0);
        }
        return j < cols_ ? lp_.c[j] : Rational(0);
    }

    Rational phase_objective() const
    {
        Rational v = 0;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (active_[r] && basis_[r] >= cols_) {
                v -= tab_[r][rhs_col()];
            }
        }
        return v;
    }

    Rational reduced_cost(std::size_t j, bool phase_one) const
    {
        Rational d = cost(j, phase_one);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (active_[r] && tab_[r][j] != 0) {
                d -= cost(basis_[r], phase_one) * tab_[r][j];
            }
        }
        return d;
    }

    /// Returns false when the objective is unbounded.
    bool run(bool phase_one)
    {
        const std::size_t limit = phase_one ? cols_ + rows_ : cols_;
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < limit; ++j) {
                if (is_basic(j)) {
                    continue;
                }
                if (reduced_cost(j, phase_one) > 0) {
                    enter = j;
                    break;
                }
            }
            if (!enter) {
                return true;
            }
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (!active_[r] || tab_[r][*enter] <= 0) {
                    continue;
                }
                Rational ratio = tab_[r][rhs_col()] / tab_[r][*enter];
                if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best = std::move(ratio);
                }
            }
            if (!leave) {
                return false;
            }
            pivot(*leave, *enter);
        }
    }

    bool is_basic(std::size_t j) const
    {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (active_[r] && basis_[r] == j) {
                return true;
            }
        }
        return false;
    }

    void pivot(std::size_t row, std::size_t col)
    {
        const Rational p = tab_[row][col];
        for (auto& v : tab_[row]) {
            if (v != 0) {
                v /= p;
            }
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || tab_[r][col] == 0) {
                continue;
            }
            const Rational factor = tab_[r][col];
            for (std::size_t j = 0; j < tab_[r].size(); ++j) {
                if (tab_[row][j] != 0) {
                    tab_[r][j] -= factor * tab_[row][j];
                }
            }
        }
        basis_[row] = col;
    }

    /// Artificials left basic at level zero are pivoted out; rows where no
    /// structural column can replace them are redundant and get deactivated.
    void drive_out_artificials()
    {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!active_[r] || basis_[r] < cols_) {
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (tab_[r][j] != 0 && !is_basic(j)) {
                    col = j;
                    break;
                }
            }
            if (col) {
                pivot(r, *col);
            } else {
                active_[r] = false;
            }
        }
    }

    /// pi = c_B B^-1 in terms of the caller's (unsigned) rows. The artificial
    /// columns of the tableau hold B^-1.
    std::vector<Rational> prices(bool phase_one) const
    {
        std::vector<Rational> pi(rows_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!active_[r]) {
                continue;
            }
            const Rational cb = cost(basis_[r], phase_one);
            if (cb == 0) {
                continue;
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                pi[i] += cb * tab_[r][cols_ + i];
            }
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            pi[i] *= sign_[i];
        }
        return pi;
    }

    const LinearProgram& lp_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<int> sign_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<std::size_t> basis_;
    std::vector<bool> active_;
};

inline LpResult solve_lp(const LinearProgram& lp)
{
    return ExactSimplex(lp).solve();
}

}  // namespace latgame

#endif  // LATGAME_SIMPLEX_HPP
