#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hull.hpp"
#include "lp.hpp"

namespace omega {

enum class FaceKind { Empty, WholePolytope, Facet, ProperFace, NotFace };

inline const char* to_string(FaceKind k)
{
    switch (k) {
    case FaceKind::Empty: return "Empty";
    case FaceKind::WholePolytope: return "WholePolytope";
    case FaceKind::Facet: return "Facet";
    case FaceKind::ProperFace: return "ProperFace";
    case FaceKind::NotFace: return "NotFace";
    }
    return "?";
}

/**
 * Why a subset is not a face: a convex combination of points outside the
 * subset equals an affine combination of subset points, so every form that is
 * constant on the subset and bounded below by that constant must also be
 * tight somewhere outside it.
 */
struct NotFaceCertificate {
    RationalVector outside_weights;  ///< nonnegative, sum 1, zero on subset points
    RationalVector subset_weights;   ///< sum 1, zero outside the subset
    /// Present when the subset spans a hyperplane of the hull: the unique such
    /// hyperplane (up to scaling), with its value at every point.
    std::optional<LinearForm> hyperplane;
    RationalVector hyperplane_values;
};

struct FaceVerdict {
    FaceKind kind = FaceKind::Empty;
    /// Facet / ProperFace: form equal to rhs on the subset, strictly greater elsewhere.
    std::optional<LinearForm> form;
    /// Facet / ProperFace / WholePolytope: affine dimension of the face.
    std::size_t dimension = 0;
    std::optional<NotFaceCertificate> certificate;

    bool is_face() const { return kind != FaceKind::NotFace; }
};

/**
 * Supporting-hyperplane face test. Maximizes the minimum slack t of a form
 * F with F = b on the subset and F - b >= t elsewhere (t capped at 1);
 * a positive optimum certifies a face, a zero optimum its absence.
 */
inline FaceVerdict is_face(const VRep& v, std::vector<std::size_t> subset)
{
    v.validate();
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (auto k : subset)
        if (k >= v.points.size())
            throw std::out_of_range("is_face: subset index " + std::to_string(k) + " out of range");

    FaceVerdict verdict;
    if (subset.empty()) {
        verdict.kind = FaceKind::Empty;
        return verdict;
    }
    const std::size_t full_rank = affine_rank(v);
    if (subset.size() == v.points.size()) {
        verdict.kind = FaceKind::WholePolytope;
        verdict.dimension = full_rank;
        return verdict;
    }

    const std::size_t d = v.dim;
    std::vector<bool> in_subset(v.points.size(), false);
    for (auto k : subset)
        in_subset[k] = true;

    // Variables (c_1..c_d, b, t).
    HRep lp;
    lp.dim = d + 2;
    std::vector<std::size_t> outside;
    for (std::size_t k = 0; k < v.points.size(); ++k) {
        LinearForm row{RationalVector(d + 2, Rational(0)), Rational(0)};
        std::copy(v.points[k].begin(), v.points[k].end(), row.coeffs.begin());
        row.coeffs[d] = -1;
        if (in_subset[k]) {
            lp.equalities.push_back(std::move(row));
        } else {
            row.coeffs[d + 1] = -1;
            lp.inequalities.push_back(std::move(row));
            outside.push_back(k);
        }
    }
    LinearForm cap{RationalVector(d + 2, Rational(0)), Rational(-1)};
    cap.coeffs[d + 1] = -1;
    lp.inequalities.push_back(cap);

    RationalVector objective(d + 2, Rational(0));
    objective[d + 1] = 1;
    const LpResult res = lp_solve(objective, lp, Sense::Maximize);
    if (res.status != LpStatus::Optimal)
        throw std::logic_error("is_face: separation LP is not bounded-feasible");

    if (res.optimum > 0) {
        LinearForm f{RationalVector(res.argument.begin(), res.argument.begin() + static_cast<std::ptrdiff_t>(d)),
                     res.argument[d]};
        verdict.form = canonical(f);
        verdict.dimension = affine_rank(v, subset);
        verdict.kind = verdict.dimension + 1 == full_rank ? FaceKind::Facet : FaceKind::ProperFace;
        return verdict;
    }

    NotFaceCertificate cert;
    cert.outside_weights.assign(v.points.size(), Rational(0));
    cert.subset_weights.assign(v.points.size(), Rational(0));
    for (std::size_t t = 0; t < outside.size(); ++t)
        cert.outside_weights[outside[t]] = res.inequality_multipliers[t];
    for (std::size_t t = 0; t < subset.size(); ++t)
        cert.subset_weights[subset[t]] = -res.equality_multipliers[t];

    Rational out_sum = 0, sub_sum = 0;
    RationalVector balance(d, Rational(0));
    for (std::size_t k = 0; k < v.points.size(); ++k) {
        out_sum += cert.outside_weights[k];
        sub_sum += cert.subset_weights[k];
        for (std::size_t c = 0; c < d; ++c)
            balance[c] += (cert.outside_weights[k] - cert.subset_weights[k]) * v.points[k][c];
    }
    if (out_sum != 1 || sub_sum != 1
        || std::any_of(balance.begin(), balance.end(), [](const Rational& x) { return !x.is_zero(); }))
        throw std::logic_error("is_face: malformed non-face certificate");

    if (affine_rank(v, subset) + 1 == full_rank) {
        RationalMatrix diffs;
        const auto& base = v.points[subset.front()];
        for (auto k : subset) {
            RationalVector diff(d);
            for (std::size_t c = 0; c < d; ++c)
                diff[c] = v.points[k][c] - base[c];
            diffs.push_back(std::move(diff));
        }
        for (auto& normal : null_space(row_echelon(std::move(diffs), d))) {
            LinearForm h{normal, dot(normal, base)};
            RationalVector values;
            bool varies = false;
            for (const auto& p : v.points) {
                values.push_back(h.evaluate(p));
                varies = varies || values.back() != h.rhs;
            }
            if (varies) {
                cert.hyperplane = h;
                cert.hyperplane_values = std::move(values);
                break;
            }
        }
    }
    verdict.kind = FaceKind::NotFace;
    verdict.certificate = std::move(cert);
    return verdict;
}

} // namespace omega
