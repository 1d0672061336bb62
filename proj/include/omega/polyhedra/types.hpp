#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "../rational.hpp"

namespace omega {

/// Points in Q^dim.
struct VRep {
    std::size_t dim = 0;
    std::vector<RationalVector> points;

    void validate() const
    {
        for (const auto& p : points)
            if (p.size() != dim)
                throw std::invalid_argument("VRep: point of length " + std::to_string(p.size())
                                            + " in dimension " + std::to_string(dim));
    }
};

/// coeffs . x >= rhs as an inequality, or coeffs . x = rhs as a hyperplane.
struct LinearForm {
    RationalVector coeffs;
    Rational rhs = 0;

    std::size_t dim() const noexcept { return coeffs.size(); }
    Rational evaluate(const RationalVector& x) const { return dot(coeffs, x); }
    Rational slack(const RationalVector& x) const { return evaluate(x) - rhs; }
    bool is_zero() const
    {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); });
    }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

inline bool lexicographic_less(const LinearForm& a, const LinearForm& b)
{
    if (a.coeffs != b.coeffs)
        return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end());
    return a.rhs < b.rhs;
}

/**
 * Canonical normalization: (coeffs, rhs) scaled by a positive factor to coprime
 * integers. Hyperplanes (equalities) are additionally sign-normalized so the
 * first nonzero coefficient is positive; inequalities keep their orientation.
 */
inline LinearForm canonical(const LinearForm& f, bool is_equality = false)
{
    RationalVector joined = f.coeffs;
    joined.push_back(f.rhs);
    IntegerVector ints = primitive_integer_vector(joined);
    if (is_equality) {
        auto first = std::find_if(ints.begin(), ints.end(), [](const Integer& x) { return x != 0; });
        if (first != ints.end() && *first < 0)
            for (auto& x : ints)
                x = -x;
    }
    LinearForm out;
    out.rhs = Rational(ints.back());
    ints.pop_back();
    out.coeffs = to_rational(ints);
    return out;
}

/// Inequalities (coeffs . x >= rhs) plus the equalities of the affine hull.
struct HRep {
    std::size_t dim = 0;
    std::vector<LinearForm> inequalities;
    std::vector<LinearForm> equalities;

    bool contains(const RationalVector& x) const
    {
        return std::all_of(inequalities.begin(), inequalities.end(),
                           [&](const LinearForm& f) { return f.slack(x) >= 0; })
            && std::all_of(equalities.begin(), equalities.end(),
                           [&](const LinearForm& f) { return f.slack(x).is_zero(); });
    }

    friend bool operator==(const HRep&, const HRep&) = default;
};

} // namespace omega
