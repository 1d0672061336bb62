#pragma once

// Separating forms certifying that every pair of Omega_n vertices spans an edge.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "omega_core.hpp"
#include "parallel.hpp"

namespace omega {

/// A constructed certificate failed its own exhaustive re-check.
class CertificateFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Weight of the cross-part edge (i, p)-(j, q), stored with i > j.
struct AlphaEntry {
    int i = 2, j = 1, p = 1, q = 1;
    int w = 0;

    friend bool operator==(const AlphaEntry&, const AlphaEntry&) = default;
};

struct EdgeCertificate {
    std::size_t n = 0;
    Assignment a, b;
    Graph2P::Edge marked_a;  ///< edge of clique a absent from clique b
    Graph2P::Edge marked_b;
    std::vector<AlphaEntry> alpha;  ///< every (i > j, p, q), lexicographic
    Rational value_a, value_b;      ///< F(a), F(b)
    Rational min_other;             ///< min of F over the remaining 2^n - 2 vertices
};

/// F(Z) = sum alpha_{ijpq} X_{ijpq}(Z), evaluated from the vertex coordinate formula.
inline Rational evaluate_alpha(const std::vector<AlphaEntry>& alpha, const Assignment& z)
{
    long long sum = 0;
    for (const auto& e : alpha)
        if (e.w != 0)
            sum += static_cast<long long>(e.w) * vertex_coordinate(z, {e.i, e.j, e.p, e.q});
    return Rational(sum);
}

/**
 * True iff the weighted form equals `low` at a and b and is at least `high`
 * at every other vertex, with low < high. Weights are indexed like `alpha`.
 */
inline bool verify_separation(const std::vector<AlphaEntry>& alpha, const RationalVector& weights,
                              const Assignment& a, const Assignment& b, const Rational& low, const Rational& high,
                              const Limits& limits = {})
{
    if (weights.size() != alpha.size() || a.size() != b.size() || a == b || !(low < high))
        return false;
    auto value = [&](const Assignment& z) {
        Rational s = 0;
        for (std::size_t k = 0; k < alpha.size(); ++k)
            if (!weights[k].is_zero() && vertex_coordinate(z, {alpha[k].i, alpha[k].j, alpha[k].p, alpha[k].q}))
                s += weights[k];
        return s;
    };
    if (value(a) != low || value(b) != low)
        return false;
    for (const auto& z : all_assignments(a.size(), limits))
        if (z != a && z != b && value(z) < high)
            return false;
    return true;
}

/// Recomputes F on all 2^n vertices: F(a) = F(b) = 1 and F >= 2 elsewhere.
inline bool verify_certificate(const EdgeCertificate& c, const Limits& limits = {})
{
    if (c.a.size() != c.n || c.b.size() != c.n || c.n < 2 || c.a == c.b)
        return false;
    RationalVector weights;
    for (const auto& e : c.alpha) {
        if (e.i <= e.j || e.i > static_cast<int>(c.n) || e.j < 1 || e.p < 1 || e.p > 2 || e.q < 1 || e.q > 2)
            return false;
        if (e.w < 0 || e.w > 2)
            return false;
        weights.emplace_back(e.w);
    }
    return verify_separation(c.alpha, weights, c.a, c.b, Rational(1), Rational(2), limits);
}

namespace detail {

/// Edge from the first part where a and b differ to the smallest other part, taken in clique `c`.
inline Graph2P::Edge marked_edge(const Assignment& c, const Assignment& a, const Assignment& b)
{
    std::size_t first = 1;
    while (a.at(first) == b.at(first))
        ++first;
    const std::size_t other = first == 1 ? 2 : 1;
    VertexRef u{static_cast<int>(first), c.at(first)};
    VertexRef v{static_cast<int>(other), c.at(other)};
    if (u.part < v.part)
        std::swap(u, v);
    return {u, v};  // larger part first, matching the i > j storage
}

} // namespace detail

/**
 * Builds the form F = sum_{i>j} alpha_{ijpq} X_{ijpq}: weight 2 on edges in
 * neither clique, 1 on one marked edge of each clique not in the other, 0
 * otherwise. The result is verified exhaustively before it is returned.
 */
inline EdgeCertificate edge_certificate(std::size_t n, const Assignment& a, const Assignment& b,
                                        const Limits& limits = {})
{
    if (n < 2)
        throw std::invalid_argument("edge_certificate: n must be at least 2");
    if (a.size() != n || b.size() != n)
        throw std::invalid_argument("edge_certificate: assignment length does not match n");
    if (a == b)
        throw std::invalid_argument("edge_certificate: the two vertices must differ");
    require_bruteforce(n, limits);

    EdgeCertificate c;
    c.n = n;
    c.a = a;
    c.b = b;
    c.marked_a = detail::marked_edge(a, a, b);
    c.marked_b = detail::marked_edge(b, a, b);

    for (int i = 2; i <= static_cast<int>(n); ++i)
        for (int j = 1; j < i; ++j)
            for (int p = 1; p <= 2; ++p)
                for (int q = 1; q <= 2; ++q) {
                    const bool in_a = a.at(i) == p && a.at(j) == q;
                    const bool in_b = b.at(i) == p && b.at(j) == q;
                    const Graph2P::Edge e{{i, p}, {j, q}};
                    int w = 0;
                    if (!in_a && !in_b)
                        w = 2;
                    else if (e == c.marked_a || e == c.marked_b)
                        w = 1;
                    c.alpha.push_back({i, j, p, q, w});
                }

    c.value_a = evaluate_alpha(c.alpha, a);
    c.value_b = evaluate_alpha(c.alpha, b);
    std::optional<Rational> lowest;
    for (const auto& z : all_assignments(n, limits)) {
        if (z == a || z == b)
            continue;
        Rational v = evaluate_alpha(c.alpha, z);
        if (!lowest || v < *lowest)
            lowest = std::move(v);
    }
    c.min_other = lowest.value_or(Rational(0));
    if (!verify_certificate(c, limits))
        throw CertificateFailure("edge_certificate: constructed form fails verification for " + a.to_text() + " / "
                               + b.to_text());
    return c;
}

struct PairSweep {
    std::size_t pairs = 0;
    std::size_t certified = 0;
    Rational min_other;  ///< smallest F(Z) seen over all certificates
};

/// Certificates for every unordered vertex pair, fanned out over `jobs` threads.
inline PairSweep certify_all_pairs(std::size_t n, std::size_t jobs = 1, const Limits& limits = {})
{
    const auto vertices = all_assignments(n, limits);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < vertices.size(); ++x)
        for (std::size_t y = x + 1; y < vertices.size(); ++y)
            pairs.emplace_back(x, y);

    struct Outcome {
        bool ok = false;
        Rational min_other;
    };
    const auto outcomes = parallel_map(pairs.size(), jobs, [&](std::size_t k) {
        Outcome o;
        try {
            const auto c = edge_certificate(n, vertices[pairs[k].first], vertices[pairs[k].second], limits);
            o.ok = true;
            o.min_other = c.min_other;
        } catch (const CertificateFailure&) {
            o.ok = false;
        }
        return o;
    });

    PairSweep sweep;
    sweep.pairs = pairs.size();
    bool first = true;
    for (const auto& o : outcomes) {
        if (!o.ok)
            continue;
        ++sweep.certified;
        if (first || o.min_other < sweep.min_other)
            sweep.min_other = o.min_other;
        first = false;
    }
    return sweep;
}

/// Number of vertex pairs whose hull is a 1-dimensional face, by the LP face test.
inline std::size_t edges_via_hull(std::size_t n, std::size_t jobs = 1, const Limits& limits = {})
{
    if (n < 2)
        throw std::invalid_argument("edges_via_hull: n must be at least 2");
    if (n > 4)
        throw GuardError("edges_via_hull_n", "(none; n <= 4 only)",
                         "edges_via_hull runs one LP per vertex pair and is limited to n <= 4");
    const VRep v = reduced_vrep(n, limits);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < v.points.size(); ++x)
        for (std::size_t y = x + 1; y < v.points.size(); ++y)
            pairs.emplace_back(x, y);
    const auto hits = parallel_map(pairs.size(), jobs, [&](std::size_t k) {
        const auto verdict = is_face(v, {pairs[k].first, pairs[k].second});
        const bool edge = (verdict.kind == FaceKind::ProperFace || verdict.kind == FaceKind::Facet)
            && verdict.dimension == 1;
        return edge ? 1 : 0;
    });
    std::size_t count = 0;
    for (int h : hits)
        count += static_cast<std::size_t>(h);
    return count;
}

// Certificate JSON ------------------------------------------------------------

inline nlohmann::json certificate_to_json(const EdgeCertificate& c)
{
    auto edge = [](const Graph2P::Edge& e) {
        return nlohmann::json{{e.first.part, e.first.pos}, {e.second.part, e.second.pos}};
    };
    nlohmann::json alpha = nlohmann::json::array();
    for (const auto& e : c.alpha)
        alpha.push_back({{"i", e.i}, {"j", e.j}, {"p", e.p}, {"q", e.q}, {"w", e.w}});
    return {{"n", c.n},
            {"a", c.a.choices()},
            {"b", c.b.choices()},
            {"marked", {edge(c.marked_a), edge(c.marked_b)}},
            {"alpha", alpha},
            {"F_a", to_text(c.value_a)},
            {"F_b", to_text(c.value_b)},
            {"min_other", to_text(c.min_other)}};
}

inline EdgeCertificate certificate_from_json(const nlohmann::json& j)
{
    EdgeCertificate c;
    c.n = j.at("n").get<std::size_t>();
    c.a = Assignment(j.at("a").get<std::vector<int>>());
    c.b = Assignment(j.at("b").get<std::vector<int>>());
    auto edge = [](const nlohmann::json& e) {
        return Graph2P::Edge{{e[0][0].get<int>(), e[0][1].get<int>()}, {e[1][0].get<int>(), e[1][1].get<int>()}};
    };
    const auto& marked = j.at("marked");
    if (marked.size() != 2)
        throw std::invalid_argument("certificate JSON: expected two marked edges");
    c.marked_a = edge(marked[0]);
    c.marked_b = edge(marked[1]);
    for (const auto& e : j.at("alpha"))
        c.alpha.push_back(
            {e.at("i").get<int>(), e.at("j").get<int>(), e.at("p").get<int>(), e.at("q").get<int>(), e.at("w").get<int>()});
    c.value_a = parse_rational(j.at("F_a").get<std::string>());
    c.value_b = parse_rational(j.at("F_b").get<std::string>());
    c.min_other = parse_rational(j.at("min_other").get<std::string>());
    return c;
}

} // namespace omega
