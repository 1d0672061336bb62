#pragma once

// The clique polytope Omega_n: convex hull in Q^{4n^2} of the points
// X_{ijpq} = [p = rho(i)][q = rho(j)] over all rho: {1..n} -> {1,2}.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph2p.hpp"
#include "polyhedra.hpp"

namespace omega {

/// Index (i, j, p, q), parts i, j in 1..n and positions p, q in {1, 2}.
struct CoordIndex {
    int i = 1, j = 1, p = 1, q = 1;

    /// Offset in the dense (i, j, p, q)-lexicographic layout.
    std::size_t flatten(std::size_t n) const
    {
        if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n || p < 1 || p > 2
            || q < 1 || q > 2)
            throw std::out_of_range("coordinate index " + label() + " out of range for n = " + std::to_string(n));
        return ((static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1)) * 2
                + static_cast<std::size_t>(p - 1))
                * 2
            + static_cast<std::size_t>(q - 1);
    }

    static CoordIndex unflatten(std::size_t offset, std::size_t n)
    {
        CoordIndex c;
        c.q = static_cast<int>(offset % 2) + 1;
        offset /= 2;
        c.p = static_cast<int>(offset % 2) + 1;
        offset /= 2;
        c.j = static_cast<int>(offset % n) + 1;
        c.i = static_cast<int>(offset / n) + 1;
        return c;
    }

    /// The same coordinate written with swapped part order (X_{ijpq} = X_{jiqp} on Omega_n).
    CoordIndex transposed() const { return {j, i, q, p}; }

    /// "X_{ijpq}" with single-digit parts, "X_{i,j,p,q}" otherwise.
    std::string label() const
    {
        if (i < 10 && j < 10)
            return "X_{" + std::to_string(i) + std::to_string(j) + std::to_string(p) + std::to_string(q) + "}";
        return "X_{" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(p) + "," + std::to_string(q)
            + "}";
    }

    friend bool operator==(const CoordIndex&, const CoordIndex&) = default;
};

inline std::size_t full_dimension(std::size_t n) { return 4 * n * n; }
inline std::size_t reduced_dimension(std::size_t n) { return n * (n + 1) / 2; }

struct OmegaPoint {
    std::size_t n = 0;
    RationalVector coords;  ///< 4n^2 entries, CoordIndex::flatten layout

    const Rational& at(const CoordIndex& c) const { return coords[c.flatten(n)]; }
    Rational& at(const CoordIndex& c) { return coords[c.flatten(n)]; }

    friend bool operator==(const OmegaPoint&, const OmegaPoint&) = default;
};

/// Coordinates y_{ij} = X_{ij11} for i <= j, ordered (1,1), (1,2), .., (1,n), (2,2), ..
struct ReducedPoint {
    std::size_t n = 0;
    RationalVector y;

    static std::size_t offset(std::size_t n, std::size_t i, std::size_t j)
    {
        if (i > j)
            std::swap(i, j);
        if (i < 1 || j > n)
            throw std::out_of_range("reduced index out of range");
        return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
    }

    const Rational& at(std::size_t i, std::size_t j) const { return y[offset(n, i, j)]; }
    Rational& at(std::size_t i, std::size_t j) { return y[offset(n, i, j)]; }

    friend bool operator==(const ReducedPoint&, const ReducedPoint&) = default;
};

/// (i, j) labels of the reduced coordinates, in storage order.
inline std::vector<std::pair<int, int>> reduced_labels(std::size_t n)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= static_cast<int>(n); ++i)
        for (int j = i; j <= static_cast<int>(n); ++j)
            out.emplace_back(i, j);
    return out;
}

/// X_{ijpq} of the vertex of `a`, straight from the defining formula.
inline int vertex_coordinate(const Assignment& a, const CoordIndex& c)
{
    return (c.p == a.at(static_cast<std::size_t>(c.i)) && c.q == a.at(static_cast<std::size_t>(c.j))) ? 1 : 0;
}

inline OmegaPoint vertex_from_assignment(std::size_t n, const Assignment& a)
{
    if (a.size() != n)
        throw std::invalid_argument("vertex_from_assignment: assignment length " + std::to_string(a.size())
                                    + " does not match n = " + std::to_string(n));
    OmegaPoint x{n, RationalVector(full_dimension(n), Rational(0))};
    for (std::size_t k = 0; k < x.coords.size(); ++k)
        if (vertex_coordinate(a, CoordIndex::unflatten(k, n)))
            x.coords[k] = 1;
    return x;
}

inline std::vector<OmegaPoint> all_vertices(std::size_t n, const Limits& limits = {})
{
    std::vector<OmegaPoint> out;
    for (const auto& a : all_assignments(n, limits))
        out.push_back(vertex_from_assignment(n, a));
    return out;
}

// ---------------------------------------------------------------------------
// Affine equalities of Omega_n

struct EqualityViolation {
    int equation = 0;  ///< 1: symmetry, 2: diagonal sum, 3: diagonal off-entry, 4: marginal
    CoordIndex index;  ///< unused fields are 0
    Rational residual;
};

struct EqualityReport {
    std::vector<EqualityViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/**
 * Checks every instance of
 *   X_{ijpq} = X_{jiqp},  X_{ii11} + X_{ii22} = 1,  X_{ii12} = 0,
 *   X_{ijp1} + X_{ijp2} = X_{iipp}.
 */
inline EqualityReport check_equalities(const OmegaPoint& x)
{
    if (x.coords.size() != full_dimension(x.n))
        throw std::invalid_argument("check_equalities: point has the wrong number of coordinates");
    EqualityReport report;
    const int n = static_cast<int>(x.n);
    auto flag = [&](int eq, CoordIndex idx, Rational residual) {
        if (!residual.is_zero())
            report.violations.push_back({eq, idx, std::move(residual)});
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int p = 1; p <= 2; ++p)
                for (int q = 1; q <= 2; ++q)
                    flag(1, {i, j, p, q}, x.at({i, j, p, q}) - x.at({j, i, q, p}));
    for (int i = 1; i <= n; ++i)
        flag(2, {i, i, 0, 0}, x.at({i, i, 1, 1}) + x.at({i, i, 2, 2}) - 1);
    for (int i = 1; i <= n; ++i)
        flag(3, {i, i, 1, 2}, x.at({i, i, 1, 2}));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int p = 1; p <= 2; ++p)
                flag(4, {i, j, p, 0}, x.at({i, j, p, 1}) + x.at({i, j, p, 2}) - x.at({i, i, p, p}));
    return report;
}

/// Projection onto y_{ij} = X_{ij11}; only faithful on the affine hull, so violations are rejected.
inline ReducedPoint reduce(const OmegaPoint& x)
{
    const auto report = check_equalities(x);
    if (!report.ok())
        throw std::invalid_argument("reduce: point violates " + std::to_string(report.violations.size())
                                    + " affine equalities of Omega_n");
    ReducedPoint y{x.n, RationalVector(reduced_dimension(x.n))};
    for (auto [i, j] : reduced_labels(x.n))
        y.at(i, j) = x.at({i, j, 1, 1});
    return y;
}

/**
 * Inverse of reduce on the affine hull:
 *   X_{ii11} = y_ii,  X_{ii22} = 1 - y_ii,  X_{ii12} = X_{ii21} = 0,
 *   X_{ij11} = y_ij,  X_{ij12} = y_ii - y_ij,  X_{ij21} = y_jj - y_ij,
 *   X_{ij22} = 1 - y_ii - y_jj + y_ij   (i < j), and X_{jiqp} = X_{ijpq}.
 */
inline OmegaPoint lift(const ReducedPoint& y)
{
    const std::size_t n = y.n;
    if (y.y.size() != reduced_dimension(n))
        throw std::invalid_argument("lift: reduced point has the wrong number of coordinates");
    OmegaPoint x{n, RationalVector(full_dimension(n), Rational(0))};
    for (int i = 1; i <= static_cast<int>(n); ++i) {
        x.at({i, i, 1, 1}) = y.at(i, i);
        x.at({i, i, 2, 2}) = 1 - y.at(i, i);
        for (int j = i + 1; j <= static_cast<int>(n); ++j) {
            const Rational& yii = y.at(i, i);
            const Rational& yjj = y.at(j, j);
            const Rational& yij = y.at(i, j);
            x.at({i, j, 1, 1}) = yij;
            x.at({i, j, 1, 2}) = yii - yij;
            x.at({i, j, 2, 1}) = yjj - yij;
            x.at({i, j, 2, 2}) = 1 - yii - yjj + yij;
            for (int p = 1; p <= 2; ++p)
                for (int q = 1; q <= 2; ++q)
                    x.at({j, i, q, p}) = x.at({i, j, p, q});
        }
    }
    return x;
}

inline ReducedPoint reduced_vertex(const Assignment& a)
{
    ReducedPoint y{a.size(), RationalVector(reduced_dimension(a.size()))};
    for (auto [i, j] : reduced_labels(a.size()))
        y.at(i, j) = (a.at(i) == 1 && a.at(j) == 1) ? 1 : 0;
    return y;
}

/// Omega_n vertices in reduced coordinates, lexicographic in the assignment.
inline VRep reduced_vrep(std::size_t n, const Limits& limits = {})
{
    VRep v{reduced_dimension(n), {}};
    for (const auto& a : all_assignments(n, limits))
        v.points.push_back(reduced_vertex(a).y);
    return v;
}

inline VRep full_vrep(std::size_t n, const Limits& limits = {})
{
    VRep v{full_dimension(n), {}};
    for (auto& x : all_vertices(n, limits))
        v.points.push_back(std::move(x.coords));
    return v;
}

/**
 * Rewrites a form on the full 4n^2 coordinates as a form on the reduced
 * coordinates agreeing with it on the affine hull of Omega_n.
 */
inline LinearForm reduce_form(const LinearForm& full, std::size_t n)
{
    if (full.dim() != full_dimension(n))
        throw std::invalid_argument("reduce_form: form has the wrong dimension");
    const std::size_t rd = reduced_dimension(n);
    const OmegaPoint origin = lift(ReducedPoint{n, RationalVector(rd, Rational(0))});
    LinearForm out{RationalVector(rd, Rational(0)), full.rhs - full.evaluate(origin.coords)};
    for (std::size_t k = 0; k < rd; ++k) {
        ReducedPoint e{n, RationalVector(rd, Rational(0))};
        e.y[k] = 1;
        const OmegaPoint column = lift(e);
        for (std::size_t c = 0; c < column.coords.size(); ++c)
            if (!full.coeffs[c].is_zero())
                out.coeffs[k] += full.coeffs[c] * (column.coords[c] - origin.coords[c]);
    }
    return out;
}

/// A reduced-coordinate form written on the X_{ij11} (i <= j) coordinates.
inline LinearForm lift_form(const LinearForm& reduced, std::size_t n)
{
    if (reduced.dim() != reduced_dimension(n))
        throw std::invalid_argument("lift_form: form has the wrong dimension");
    LinearForm out{RationalVector(full_dimension(n), Rational(0)), reduced.rhs};
    const auto labels = reduced_labels(n);
    for (std::size_t k = 0; k < labels.size(); ++k)
        out.coeffs[CoordIndex{labels[k].first, labels[k].second, 1, 1}.flatten(n)] = reduced.coeffs[k];
    return out;
}

/// Moves every coefficient to its i <= j representative, folding X_{ijpq} onto X_{jiqp}.
inline LinearForm fold_to_upper(const LinearForm& full, std::size_t n)
{
    LinearForm out{RationalVector(full.dim(), Rational(0)), full.rhs};
    for (std::size_t k = 0; k < full.dim(); ++k) {
        if (full.coeffs[k].is_zero())
            continue;
        CoordIndex c = CoordIndex::unflatten(k, n);
        if (c.i > c.j)
            c = c.transposed();
        out.coeffs[c.flatten(n)] += full.coeffs[k];
    }
    return out;
}

/// "X_{1211} + 2 X_{1311} - X_{2322}" style rendering of the nonzero terms.
inline std::string format_form(const LinearForm& full, std::size_t n)
{
    std::string s;
    for (std::size_t k = 0; k < full.dim(); ++k) {
        const Rational& c = full.coeffs[k];
        if (c.is_zero())
            continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (mag != 1)
            s += to_text(mag) + " ";
        s += CoordIndex::unflatten(k, n).label();
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Dimension

/// all-2s; then a single 1 at each part; then 1s at each pair of parts.
inline std::vector<Assignment> independent_family(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("independent_family: Omega_n is defined for n >= 2");
    std::vector<Assignment> out;
    out.emplace_back(std::vector<int>(n, 2));
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<int> c(n, 2);
        c[k] = 1;
        out.emplace_back(std::move(c));
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
            std::vector<int> c(n, 2);
            c[k] = c[l] = 1;
            out.emplace_back(std::move(c));
        }
    return out;
}

/// Affine dimension of Omega_n, computed from all 2^n vertices in the full coordinates.
inline std::size_t omega_dimension(std::size_t n, const Limits& limits = {})
{
    if (n < 2)
        throw std::invalid_argument("omega_dimension: Omega_n is defined for n >= 2");
    return affine_rank(full_vrep(n, limits));
}

// ---------------------------------------------------------------------------
// Point JSON: {"n": int, "reduced": {"i,j": "p/q", ...}}

inline nlohmann::json point_to_json(const ReducedPoint& y)
{
    nlohmann::json reduced = nlohmann::json::object();
    for (auto [i, j] : reduced_labels(y.n))
        reduced[std::to_string(i) + "," + std::to_string(j)] = to_text(y.at(i, j));
    return {{"n", y.n}, {"reduced", reduced}};
}

inline ReducedPoint point_from_json(const nlohmann::json& j)
{
    const auto n = j.at("n").get<std::size_t>();
    if (n < 1)
        throw std::invalid_argument("point JSON: n must be at least 1");
    const auto& reduced = j.at("reduced");
    ReducedPoint y{n, RationalVector(reduced_dimension(n), Rational(0))};
    std::vector<bool> seen(y.y.size(), false);
    for (auto it = reduced.begin(); it != reduced.end(); ++it) {
        std::size_t a = 0, b = 0;
        char comma = 0;
        std::istringstream key(it.key());
        if (!(key >> a >> comma >> b) || comma != ',' || a < 1 || b < a || b > n)
            throw std::invalid_argument("point JSON: bad key '" + it.key() + "'");
        const std::size_t off = ReducedPoint::offset(n, a, b);
        y.y[off] = parse_rational(it.value().get<std::string>());
        seen[off] = true;
    }
    for (bool s : seen)
        if (!s)
            throw std::invalid_argument("point JSON: every reduced coordinate i <= j must be present");
    return y;
}

} // namespace omega
