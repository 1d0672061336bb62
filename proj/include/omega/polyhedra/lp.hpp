#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "types.hpp"

namespace omega {

enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LpStatus s)
{
    switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    }
    return "?";
}

/**
 * Outcome of lp_solve. When optimal, the multipliers certify the optimum:
 *
 *   s * (objective . x - optimum)
 *       = sum_k inequality_multipliers[k] * (G_k . x - g_k)
 *       + sum_k equality_multipliers[k]   * (E_k . x - e_k)
 *
 * identically in x, with s = +1 for minimization and -1 for maximization and
 * all inequality multipliers nonnegative (strong duality).
 */
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational optimum = 0;
    RationalVector argument;
    RationalVector inequality_multipliers;
    RationalVector equality_multipliers;
};

namespace detail {

/// Dense two-phase simplex on  min c.z, A z = b, z >= 0  with Bland's rule.
class Simplex {
public:
    Simplex(RationalMatrix a, RationalVector b) : rows_(a.size()), structural_(a.empty() ? 0 : a[0].size())
    {
        sign_.assign(rows_, 1);
        const std::size_t cols = structural_ + rows_;
        tableau_.assign(rows_, RationalVector(cols + 1, Rational(0)));
        basis_.resize(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (b[r] < 0)
                sign_[r] = -1;
            for (std::size_t c = 0; c < structural_; ++c)
                tableau_[r][c] = sign_[r] * a[r][c];
            tableau_[r][structural_ + r] = 1;
            tableau_[r][cols] = sign_[r] * b[r];
            basis_[r] = structural_ + r;
        }
    }

    /// Returns false when infeasible.
    bool phase_one()
    {
        RationalVector cost(structural_ + rows_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r)
            cost[structural_ + r] = 1;
        optimize(cost, true);
        if (objective(cost) > 0)
            return false;

        // Drive zero-level artificials out of the basis where possible.
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < structural_)
                continue;
            for (std::size_t c = 0; c < structural_; ++c) {
                if (!tableau_[r][c].is_zero()) {
                    pivot(r, c);
                    break;
                }
            }
        }
        return true;
    }

    /// Returns false when unbounded.
    bool phase_two(const RationalVector& structural_cost)
    {
        RationalVector cost(structural_cost);
        cost.resize(structural_ + rows_, Rational(0));
        return optimize(cost, false);
    }

    Rational objective(const RationalVector& cost) const
    {
        Rational v = 0;
        for (std::size_t r = 0; r < rows_; ++r)
            v += cost[basis_[r]] * rhs(r);
        return v;
    }

    RationalVector solution() const
    {
        RationalVector z(structural_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r)
            if (basis_[r] < structural_)
                z[basis_[r]] = rhs(r);
        return z;
    }

    /// y with y^T = c_B^T B^{-1}, for the unscaled rows.
    RationalVector duals(const RationalVector& structural_cost) const
    {
        RationalVector y(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t r = 0; r < rows_; ++r) {
                const std::size_t bv = basis_[r];
                if (bv >= structural_ || structural_cost[bv].is_zero())
                    continue;
                y[i] += structural_cost[bv] * tableau_[r][structural_ + i];
            }
            y[i] *= sign_[i];
        }
        return y;
    }

private:
    const Rational& rhs(std::size_t r) const { return tableau_[r].back(); }

    bool optimize(const RationalVector& cost, bool allow_artificial)
    {
        const std::size_t cols = allow_artificial ? structural_ + rows_ : structural_;
        for (;;) {
            std::size_t entering = std::numeric_limits<std::size_t>::max();
            for (std::size_t c = 0; c < cols; ++c) {
                Rational reduced = cost[c];
                for (std::size_t r = 0; r < rows_; ++r)
                    if (!tableau_[r][c].is_zero())
                        reduced -= cost[basis_[r]] * tableau_[r][c];
                if (reduced < 0) {
                    entering = c;
                    break;
                }
            }
            if (entering == std::numeric_limits<std::size_t>::max())
                return true;

            std::size_t leaving = std::numeric_limits<std::size_t>::max();
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (tableau_[r][entering] <= 0)
                    continue;
                Rational ratio = rhs(r) / tableau_[r][entering];
                if (leaving == std::numeric_limits<std::size_t>::max() || ratio < best
                    || (ratio == best && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best = std::move(ratio);
                }
            }
            if (leaving == std::numeric_limits<std::size_t>::max())
                return false;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t row, std::size_t col)
    {
        auto& p = tableau_[row];
        const Rational inv = 1 / p[col];
        for (auto& x : p)
            if (!x.is_zero())
                x *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || tableau_[r][col].is_zero())
                continue;
            const Rational factor = tableau_[r][col];
            for (std::size_t c = 0; c < p.size(); ++c)
                if (!p[c].is_zero())
                    tableau_[r][c] -= factor * p[c];
        }
        basis_[row] = col;
    }

    std::size_t rows_;
    std::size_t structural_;
    std::vector<int> sign_;
    RationalMatrix tableau_;
    std::vector<std::size_t> basis_;
};

} // namespace detail

/**
 * Exact LP over free variables x:  optimize objective . x  subject to
 * constraints.inequalities (G x >= g) and constraints.equalities (E x = e).
 * Uses Bland's rule for anticycling. Optimal results carry a dual
 * certificate that is checked before returning.
 */
inline LpResult lp_solve(const RationalVector& objective, const HRep& constraints, Sense sense)
{
    const std::size_t d = constraints.dim;
    if (objective.size() != d)
        throw std::invalid_argument("lp_solve: objective length does not match dimension");
    for (const auto* group : {&constraints.inequalities, &constraints.equalities})
        for (const auto& f : *group)
            if (f.dim() != d)
                throw std::invalid_argument("lp_solve: constraint length does not match dimension");

    const std::size_t mi = constraints.inequalities.size();
    const std::size_t me = constraints.equalities.size();
    const std::size_t cols = 2 * d + mi;  // x+, x-, surplus

    RationalMatrix a(mi + me, RationalVector(cols, Rational(0)));
    RationalVector b(mi + me);
    for (std::size_t k = 0; k < mi + me; ++k) {
        const LinearForm& f = k < mi ? constraints.inequalities[k] : constraints.equalities[k - mi];
        for (std::size_t c = 0; c < d; ++c) {
            a[k][c] = f.coeffs[c];
            a[k][d + c] = -f.coeffs[c];
        }
        if (k < mi)
            a[k][2 * d + k] = -1;
        b[k] = f.rhs;
    }

    RationalVector cost(cols, Rational(0));
    const int s = sense == Sense::Minimize ? 1 : -1;
    for (std::size_t c = 0; c < d; ++c) {
        cost[c] = s * objective[c];
        cost[d + c] = -s * objective[c];
    }

    LpResult result;
    if (mi + me == 0) {
        bool zero = std::all_of(objective.begin(), objective.end(), [](const Rational& x) { return x.is_zero(); });
        result.status = zero ? LpStatus::Optimal : LpStatus::Unbounded;
        result.argument.assign(d, Rational(0));
        return result;
    }

    detail::Simplex simplex(std::move(a), b);
    if (!simplex.phase_one()) {
        result.status = LpStatus::Infeasible;
        return result;
    }
    if (!simplex.phase_two(cost)) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    const RationalVector z = simplex.solution();
    result.status = LpStatus::Optimal;
    result.argument.resize(d);
    for (std::size_t c = 0; c < d; ++c)
        result.argument[c] = z[c] - z[d + c];
    result.optimum = dot(objective, result.argument);

    const RationalVector y = simplex.duals(cost);
    result.inequality_multipliers.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(mi));
    result.equality_multipliers.assign(y.begin() + static_cast<std::ptrdiff_t>(mi), y.end());

    // Certificate check: primal feasibility, dual feasibility, zero gap.
    if (!constraints.contains(result.argument))
        throw std::logic_error("lp_solve: optimal point is infeasible");
    RationalVector combined(d, Rational(0));
    Rational constant = 0;
    for (std::size_t k = 0; k < mi + me; ++k) {
        const LinearForm& f = k < mi ? constraints.inequalities[k] : constraints.equalities[k - mi];
        if (k < mi && y[k] < 0)
            throw std::logic_error("lp_solve: negative inequality multiplier");
        if (y[k].is_zero())
            continue;
        for (std::size_t c = 0; c < d; ++c)
            combined[c] += y[k] * f.coeffs[c];
        constant += y[k] * f.rhs;
    }
    for (std::size_t c = 0; c < d; ++c)
        if (combined[c] != s * objective[c])
            throw std::logic_error("lp_solve: dual multipliers do not reproduce the objective");
    if (constant != s * result.optimum)
        throw std::logic_error("lp_solve: duality gap is nonzero");
    return result;
}

} // namespace omega
