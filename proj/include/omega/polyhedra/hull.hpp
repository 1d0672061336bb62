#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "../limits.hpp"
#include "linalg.hpp"
#include "types.hpp"

namespace omega {

/// Dimension of the affine hull of the points.
inline std::size_t affine_rank(const VRep& v)
{
    v.validate();
    if (v.points.empty())
        throw std::invalid_argument("affine_rank: empty point set");
    RationalMatrix diffs;
    diffs.reserve(v.points.size() - 1);
    for (std::size_t k = 1; k < v.points.size(); ++k) {
        RationalVector d(v.dim);
        for (std::size_t c = 0; c < v.dim; ++c)
            d[c] = v.points[k][c] - v.points[0][c];
        diffs.push_back(std::move(d));
    }
    return matrix_rank(std::move(diffs), v.dim);
}

/// affine_rank of the selected points.
inline std::size_t affine_rank(const VRep& v, const std::vector<std::size_t>& subset)
{
    VRep sub{v.dim, {}};
    for (auto k : subset)
        sub.points.push_back(v.points.at(k));
    return affine_rank(sub);
}

struct AffineHull {
    std::size_t rank = 0;
    std::vector<std::size_t> coordinates;  ///< coordinates that parametrize the hull (RREF pivots)
    std::vector<LinearForm> equalities;    ///< canonical, one per free coordinate
};

/// Affine hull of a nonempty point set: its dimension, a coordinate chart, and defining equalities.
inline AffineHull affine_hull(const VRep& v)
{
    v.validate();
    if (v.points.empty())
        throw std::invalid_argument("affine_hull: empty point set");
    RationalMatrix diffs;
    for (std::size_t k = 1; k < v.points.size(); ++k) {
        RationalVector d(v.dim);
        for (std::size_t c = 0; c < v.dim; ++c)
            d[c] = v.points[k][c] - v.points[0][c];
        diffs.push_back(std::move(d));
    }
    const auto echelon = row_echelon(std::move(diffs), v.dim);
    AffineHull out;
    out.rank = echelon.rank();
    out.coordinates = echelon.pivots;
    for (auto& normal : null_space(echelon)) {
        LinearForm eq{normal, dot(normal, v.points[0])};
        out.equalities.push_back(canonical(eq, true));
    }
    std::sort(out.equalities.begin(), out.equalities.end(), lexicographic_less);
    return out;
}

namespace detail {

struct Ray {
    IntegerVector dir;
    boost::dynamic_bitset<> zeros;  ///< processed rows on which the ray is tight
};

inline Integer dot(const IntegerVector& a, const IntegerVector& b)
{
    Integer s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0 && b[k] != 0)
            s += a[k] * b[k];
    return s;
}

/**
 * Extreme rays of the pointed cone {h : rows[k] . h >= 0 for all k} by the
 * double description method. `rows` must have full column rank.
 * Rows are inserted in index order after an initial simplicial basis.
 */
inline std::vector<Ray> extreme_rays(const std::vector<IntegerVector>& rows, std::size_t cols)
{
    const std::size_t m = rows.size();

    // Greedy basis of linearly independent rows.
    std::vector<std::size_t> basis;
    RationalMatrix picked;
    for (std::size_t k = 0; k < m && basis.size() < cols; ++k) {
        picked.push_back(to_rational(rows[k]));
        if (matrix_rank(picked, cols) == picked.size())
            basis.push_back(k);
        else
            picked.pop_back();
    }
    if (basis.size() < cols)
        throw std::logic_error("extreme_rays: constraint matrix is not of full column rank");

    const RationalMatrix inv = inverse(picked);
    std::vector<bool> processed(m, false);
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < cols; ++j) {
        RationalVector column(cols);
        for (std::size_t r = 0; r < cols; ++r)
            column[r] = inv[r][j];
        Ray ray{primitive_integer_vector(column), boost::dynamic_bitset<>(m)};
        for (std::size_t b = 0; b < cols; ++b)
            if (b != j)
                ray.zeros.set(basis[b]);
        rays.push_back(std::move(ray));
    }
    for (auto b : basis)
        processed[b] = true;

    for (std::size_t k = 0; k < m; ++k) {
        if (processed[k])
            continue;
        processed[k] = true;

        std::vector<Integer> value(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = detail::dot(rows[k], rays[r].dir);
            if (value[r] > 0)
                pos.push_back(r);
            else if (value[r] < 0)
                neg.push_back(r);
        }

        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (value[r] < 0)
                continue;
            Ray kept = rays[r];
            if (value[r] == 0)
                kept.zeros.set(k);
            next.push_back(std::move(kept));
        }

        for (auto p : pos) {
            for (auto q : neg) {
                const auto common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 2 < cols)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && common.is_subset_of(rays[r].zeros))
                        adjacent = false;
                if (!adjacent)
                    continue;
                Ray fresh{IntegerVector(cols), common};
                for (std::size_t c = 0; c < cols; ++c)
                    fresh.dir[c] = value[p] * rays[q].dir[c] - value[q] * rays[p].dir[c];
                make_primitive(fresh.dir);
                fresh.zeros.set(k);
                next.push_back(std::move(fresh));
            }
        }
        rays = std::move(next);
    }
    return rays;
}

} // namespace detail

/**
 * Facets of conv(points): equalities of the affine hull followed by one
 * canonical inequality per facet, sorted lexicographically.
 *
 * Lower-dimensional inputs are handled by projecting onto the coordinate
 * chart of their affine hull, where the hull is full-dimensional; facet
 * inequalities are expressed in those chart coordinates only.
 */
inline HRep convex_hull_facets(const VRep& v, const Limits& limits = {})
{
    v.validate();
    if (v.points.empty())
        throw std::invalid_argument("convex_hull_facets: empty point set");
    if (v.dim > limits.max_hull_dim)
        throw GuardError("max_hull_dim", "--max-hull-dim",
                         "hull dimension " + std::to_string(v.dim) + " exceeds limit "
                             + std::to_string(limits.max_hull_dim));
    if (v.points.size() > limits.max_hull_points)
        throw GuardError("max_hull_points", "--max-hull-points",
                         std::to_string(v.points.size()) + " points exceed limit "
                             + std::to_string(limits.max_hull_points));

    const AffineHull hull = affine_hull(v);
    HRep out;
    out.dim = v.dim;
    out.equalities = hull.equalities;
    const std::size_t r = hull.rank;
    if (r == 0)
        return out;

    // Homogenized constraint rows (q_k, 1) . h >= 0 in chart coordinates.
    std::vector<IntegerVector> rows;
    rows.reserve(v.points.size());
    for (const auto& p : v.points) {
        RationalVector row;
        row.reserve(r + 1);
        for (auto c : hull.coordinates)
            row.push_back(p[c]);
        row.push_back(1);
        rows.push_back(primitive_integer_vector(row));
    }

    for (const auto& ray : detail::extreme_rays(rows, r + 1)) {
        LinearForm f{RationalVector(v.dim, Rational(0)), Rational(0)};
        for (std::size_t t = 0; t < r; ++t)
            f.coeffs[hull.coordinates[t]] = Rational(ray.dir[t]);
        f.rhs = -Rational(ray.dir[r]);
        out.inequalities.push_back(canonical(f));
    }
    std::sort(out.inequalities.begin(), out.inequalities.end(), lexicographic_less);
    out.inequalities.erase(std::unique(out.inequalities.begin(), out.inequalities.end()), out.inequalities.end());

    // Postconditions: valid for every point, each inequality facet-defining.
    for (const auto& f : out.inequalities) {
        std::vector<std::size_t> tight;
        for (std::size_t k = 0; k < v.points.size(); ++k) {
            const Rational s = f.slack(v.points[k]);
            if (s < 0)
                throw std::logic_error("convex_hull_facets: inequality violated by an input point");
            if (s.is_zero())
                tight.push_back(k);
        }
        if (tight.empty() || affine_rank(v, tight) + 1 != r)
            throw std::logic_error("convex_hull_facets: inequality is not facet-defining");
    }
    return out;
}

/// Indices of the points on which `f` is tight.
inline std::vector<std::size_t> tight_points(const VRep& v, const LinearForm& f)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < v.points.size(); ++k)
        if (f.slack(v.points[k]).is_zero())
            out.push_back(k);
    return out;
}

enum class RegularKind { Simplex, Cube, Cross };

/// Canonical vertex lists: origin plus unit vectors, {0,1}^d, or +-e_i.
inline VRep regular_polytope(RegularKind kind, std::size_t d)
{
    if (d < 1)
        throw std::invalid_argument("regular_polytope: dimension must be at least 1");
    VRep v{d, {}};
    auto unit = [d](std::size_t i, int sign) {
        RationalVector e(d, Rational(0));
        e[i] = sign;
        return e;
    };
    switch (kind) {
    case RegularKind::Simplex:
        v.points.emplace_back(d, Rational(0));
        for (std::size_t i = 0; i < d; ++i)
            v.points.push_back(unit(i, 1));
        break;
    case RegularKind::Cube:
        if (d > 20)
            throw std::invalid_argument("regular_polytope: cube dimension too large to list");
        for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
            RationalVector p(d);
            for (std::size_t i = 0; i < d; ++i)
                p[i] = static_cast<int>((mask >> (d - 1 - i)) & 1U);
            v.points.push_back(std::move(p));
        }
        break;
    case RegularKind::Cross:
        for (std::size_t i = 0; i < d; ++i) {
            v.points.push_back(unit(i, 1));
            v.points.push_back(unit(i, -1));
        }
        break;
    }
    return v;
}

} // namespace omega
