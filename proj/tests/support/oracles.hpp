#pragma once

// Brute-force oracles used only by the tests. They deliberately avoid the
// library's linear algebra, hull, and 2SAT code paths.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "omega/graph2p.hpp"
#include "omega/polyhedra/types.hpp"
#include "omega/rational.hpp"

namespace omega::testing {

/// Determinant by cofactor-free elimination on a private copy.
inline Rational determinant(std::vector<RationalVector> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/**
 * Hyperplane through d points of Q^d as a generalized cross product of the
 * d-1 difference vectors (each normal component is a signed minor).
 * Returns the zero vector when the points are affinely dependent.
 */
inline RationalVector normal_through(const std::vector<RationalVector>& pts)
{
    const std::size_t d = pts.front().size();
    std::vector<RationalVector> diffs;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        RationalVector v(d);
        for (std::size_t c = 0; c < d; ++c)
            v[c] = pts[k][c] - pts[0][c];
        diffs.push_back(std::move(v));
    }
    RationalVector normal(d);
    for (std::size_t c = 0; c < d; ++c) {
        std::vector<RationalVector> minor;
        for (const auto& row : diffs) {
            RationalVector r;
            for (std::size_t k = 0; k < d; ++k)
                if (k != c)
                    r.push_back(row[k]);
            minor.push_back(std::move(r));
        }
        normal[c] = determinant(std::move(minor)) * ((c % 2) ? -1 : 1);
    }
    return normal;
}

/**
 * Facets of a full-dimensional point set in Q^d by exhaustion: every
 * hyperplane spanned by d affinely independent points with all points on one
 * closed side. Returned as canonical inequalities.
 */
inline std::set<std::vector<Rational>> brute_force_facets(const VRep& v)
{
    const std::size_t d = v.dim;
    const std::size_t m = v.points.size();
    std::set<std::vector<Rational>> facets;
    std::vector<bool> choose(m, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(d), true);
    do {
        std::vector<RationalVector> pts;
        for (std::size_t k = 0; k < m; ++k)
            if (choose[k])
                pts.push_back(v.points[k]);
        RationalVector normal = normal_through(pts);
        if (std::all_of(normal.begin(), normal.end(), [](const Rational& x) { return x == 0; }))
            continue;
        Rational level = 0;
        for (std::size_t c = 0; c < d; ++c)
            level += normal[c] * pts[0][c];
        bool above = false, below = false;
        for (const auto& p : v.points) {
            Rational s = -level;
            for (std::size_t c = 0; c < d; ++c)
                s += normal[c] * p[c];
            above = above || s > 0;
            below = below || s < 0;
        }
        if (above && below)
            continue;
        if (below) {
            for (auto& x : normal)
                x = -x;
            level = -level;
        }
        LinearForm f = canonical(LinearForm{normal, level});
        std::vector<Rational> key = f.coeffs;
        key.push_back(f.rhs);
        facets.insert(std::move(key));
    } while (std::prev_permutation(choose.begin(), choose.end()));
    return facets;
}

inline std::vector<Rational> key_of(const LinearForm& f)
{
    std::vector<Rational> key = f.coeffs;
    key.push_back(f.rhs);
    return key;
}

/// Literal truth under x_i = [rho(i) = 1], evaluated on a raw bit mask.
inline bool cnf_holds(const Cnf2& cnf, std::uint64_t mask)
{
    auto value = [&](const Literal& l) {
        const bool x = (mask >> (l.var - 1)) & 1U;
        return x == l.positive;
    };
    for (const auto& c : cnf.clauses)
        if (!value(c.first) && !value(c.second))
            return false;
    return true;
}

/// Satisfying assignments of a 2CNF by enumerating all 2^n truth tables.
inline std::set<std::vector<int>> brute_force_models(const Cnf2& cnf)
{
    std::set<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cnf.num_vars); ++mask) {
        if (!cnf_holds(cnf, mask))
            continue;
        std::vector<int> rho(cnf.num_vars);
        for (std::size_t i = 0; i < cnf.num_vars; ++i)
            rho[i] = ((mask >> i) & 1U) ? 1 : 2;
        out.insert(std::move(rho));
    }
    return out;
}

/// Random graph: every cross-part edge kept with probability keep.
inline Graph2P random_graph(std::mt19937& rng, std::size_t n, double keep)
{
    Graph2P g = complete_graph(n);
    std::bernoulli_distribution coin(keep);
    for (int i = 1; i <= static_cast<int>(n); ++i)
        for (int j = i + 1; j <= static_cast<int>(n); ++j)
            for (int p = 1; p <= 2; ++p)
                for (int q = 1; q <= 2; ++q)
                    if (!coin(rng))
                        g.remove_edge({i, p}, {j, q});
    return g;
}

inline Cnf2 random_cnf(std::mt19937& rng, std::size_t vars, std::size_t clauses)
{
    std::uniform_int_distribution<int> var(1, static_cast<int>(vars));
    std::bernoulli_distribution sign(0.5);
    Cnf2 cnf;
    cnf.num_vars = vars;
    for (std::size_t k = 0; k < clauses; ++k)
        cnf.clauses.push_back({{var(rng), sign(rng)}, {var(rng), sign(rng)}});
    return cnf;
}

} // namespace omega::testing
