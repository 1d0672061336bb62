#pragma once

// Excluded-pair case analysis of Omega_3 and facet censuses of Omega_n with
// orbits under the hyperoctahedral group (part permutations and per-part swaps).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega_core.hpp"

namespace omega {

/**
 * Group element acting by relabelling part i as perm[i] and, when swap[i] is
 * set, exchanging the two vertices of part i first:
 *   (g a)[perm(i)] = swap_i(a[i]),   (g X)_{perm(i) perm(j) swap_i(p) swap_j(q)} = X_{ijpq}.
 */
class Symmetry {
public:
    Symmetry(std::vector<int> perm, std::vector<bool> swap) : perm_(std::move(perm)), swap_(std::move(swap))
    {
        if (perm_.empty() || perm_.size() != swap_.size())
            throw std::invalid_argument("Symmetry: permutation and swap vector must have equal, nonzero length");
        std::vector<int> sorted(perm_);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k)
            if (sorted[k] != static_cast<int>(k) + 1)
                throw std::invalid_argument("Symmetry: not a permutation of 1..n");
    }

    static Symmetry identity(std::size_t n)
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        return Symmetry(std::move(perm), std::vector<bool>(n, false));
    }

    std::size_t parts() const noexcept { return perm_.size(); }
    const std::vector<int>& permutation() const noexcept { return perm_; }
    const std::vector<bool>& swaps() const noexcept { return swap_; }

    Assignment apply(const Assignment& a) const
    {
        check(a.size());
        std::vector<int> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            out[static_cast<std::size_t>(perm_[i] - 1)] = swap_[i] ? 3 - a.choices()[i] : a.choices()[i];
        return Assignment(std::move(out));
    }

    CoordIndex apply(const CoordIndex& c) const
    {
        auto image = [&](int part, int pos) { return swap_[static_cast<std::size_t>(part - 1)] ? 3 - pos : pos; };
        return {perm_[static_cast<std::size_t>(c.i - 1)], perm_[static_cast<std::size_t>(c.j - 1)], image(c.i, c.p),
                image(c.j, c.q)};
    }

    OmegaPoint apply(const OmegaPoint& x) const
    {
        check(x.n);
        OmegaPoint out{x.n, RationalVector(x.coords.size())};
        for (std::size_t k = 0; k < x.coords.size(); ++k)
            out.coords[apply(CoordIndex::unflatten(k, x.n)).flatten(x.n)] = x.coords[k];
        return out;
    }

    /// The form X -> f(g X), written on the full coordinates.
    LinearForm pull_back(const LinearForm& f) const
    {
        const std::size_t n = parts();
        if (f.dim() != full_dimension(n))
            throw std::invalid_argument("Symmetry::pull_back: form has the wrong dimension");
        LinearForm out{RationalVector(f.dim()), f.rhs};
        for (std::size_t k = 0; k < f.dim(); ++k)
            out.coeffs[k] = f.coeffs[apply(CoordIndex::unflatten(k, n)).flatten(n)];
        return out;
    }

private:
    void check(std::size_t n) const
    {
        if (n != perm_.size())
            throw std::invalid_argument("Symmetry: part count mismatch");
    }

    std::vector<int> perm_;
    std::vector<bool> swap_;
};

/// All n! * 2^n group elements, permutations in lexicographic order, swaps by mask.
inline std::vector<Symmetry> all_symmetries(std::size_t n)
{
    if (n < 1 || n > 8)
        throw std::invalid_argument("all_symmetries: n must be in 1..8");
    std::vector<Symmetry> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<bool> swap(n);
            for (std::size_t i = 0; i < n; ++i)
                swap[i] = (mask >> i) & 1U;
            out.emplace_back(perm, std::move(swap));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Adjacent transpositions plus the swap of part 1; they generate the group.
inline std::vector<Symmetry> symmetry_generators(std::size_t n)
{
    std::vector<Symmetry> gens;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        std::swap(perm[k], perm[k + 1]);
        gens.emplace_back(std::move(perm), std::vector<bool>(n, false));
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<bool> swap(n, false);
    swap[0] = true;
    gens.emplace_back(std::move(perm), std::move(swap));
    return gens;
}

inline Assignment apply_symmetry(const Symmetry& g, const Assignment& a) { return g.apply(a); }

// ---------------------------------------------------------------------------
// Excluded pairs of Omega_3

enum class PairKind { Disjoint, SharedEdge, SharedVertex };

inline const char* to_string(PairKind k)
{
    switch (k) {
    case PairKind::Disjoint: return "Disjoint";
    case PairKind::SharedEdge: return "SharedEdge";
    case PairKind::SharedVertex: return "SharedVertex";
    }
    return "?";
}

/// Two excluded triangles, classified by the parts on which they agree.
struct PairClass {
    PairKind kind = PairKind::Disjoint;
    std::vector<int> common_parts;  ///< agreeing parts, increasing

    std::string to_text() const
    {
        std::string s = omega::to_string(kind);
        if (common_parts.empty())
            return s;
        s += '(';
        for (std::size_t k = 0; k < common_parts.size(); ++k)
            s += (k ? "," : "") + std::to_string(common_parts[k]);
        return s + ')';
    }

    friend bool operator==(const PairClass&, const PairClass&) = default;
};

inline PairClass classify_pair(const Assignment& a, const Assignment& b)
{
    if (a.size() != 3 || b.size() != 3)
        throw std::invalid_argument("classify_pair: the three-way classification is defined for n = 3");
    if (a == b)
        throw std::invalid_argument("classify_pair: the excluded vertices must differ");
    PairClass c;
    for (int i = 1; i <= 3; ++i)
        if (a.at(i) == b.at(i))
            c.common_parts.push_back(i);
    c.kind = c.common_parts.empty() ? PairKind::Disjoint
        : c.common_parts.size() == 2 ? PairKind::SharedEdge
                                     : PairKind::SharedVertex;
    return c;
}

namespace detail {

inline LinearForm omega3_form(std::initializer_list<CoordIndex> terms, int rhs)
{
    LinearForm f{RationalVector(full_dimension(3), Rational(0)), Rational(rhs)};
    for (const auto& c : terms)
        f.coeffs[c.flatten(3)] += 1;
    return f;
}

struct CaseRepresentative {
    Assignment a, b;
    LinearForm form;
};

inline const CaseRepresentative& representative(PairKind kind)
{
    static const CaseRepresentative disjoint{
        Assignment({1, 1, 1}), Assignment({2, 2, 2}),
        omega3_form({{1, 2, 1, 1}, {1, 3, 1, 1}, {2, 3, 1, 1}, {1, 2, 2, 2}, {1, 3, 2, 2}, {2, 3, 2, 2}}, 1)};
    static const CaseRepresentative shared_edge{Assignment({1, 1, 1}), Assignment({1, 1, 2}),
                                                omega3_form({{1, 2, 1, 1}}, 0)};
    static const CaseRepresentative shared_vertex{
        Assignment({1, 1, 1}), Assignment({1, 2, 2}),
        omega3_form({{1, 2, 2, 2}, {1, 3, 1, 2}, {1, 2, 1, 2}, {1, 2, 2, 1}}, 1)};
    switch (kind) {
    case PairKind::Disjoint: return disjoint;
    case PairKind::SharedEdge: return shared_edge;
    case PairKind::SharedVertex: return shared_vertex;
    }
    throw std::logic_error("unknown pair kind");
}

inline Symmetry transport(const Assignment& a, const Assignment& b, const Assignment& to_a, const Assignment& to_b)
{
    for (const auto& g : all_symmetries(a.size()))
        if (g.apply(a) == to_a && g.apply(b) == to_b)
            return g;
    throw std::logic_error("no symmetry maps the pair onto its representative");
}

/// Pulls the representative form of `kind` back along a group element taking (a, b) to the representative pair.
inline LinearForm transported_form(const Assignment& a, const Assignment& b, PairKind kind)
{
    const PairClass cls = classify_pair(a, b);
    if (cls.kind != kind)
        throw std::invalid_argument(std::string("pair ") + a.to_text() + " / " + b.to_text() + " is "
                                    + cls.to_text() + ", not " + to_string(kind));
    const auto& rep = representative(kind);
    const Symmetry g = transport(a, b, rep.a, rep.b);
    return fold_to_upper(g.pull_back(rep.form), 3);
}

inline RationalVector values_on_vertices(const LinearForm& full)
{
    RationalVector out;
    for (const auto& x : all_vertices(3))
        out.push_back(full.evaluate(x.coords));
    return out;
}

inline std::size_t vertex_index(const Assignment& a)
{
    std::size_t k = 0;
    for (int c : a.choices())
        k = 2 * k + static_cast<std::size_t>(c - 1);
    return k;
}

/// Value `on_pair` at a and b (`on_b` at b when given), `rest` at the six others.
inline void expect_pattern(const LinearForm& f, const Assignment& a, const Assignment& b, int on_a, int on_b, int rest,
                           const char* what)
{
    const auto values = values_on_vertices(f);
    const std::size_t ka = vertex_index(a), kb = vertex_index(b);
    for (std::size_t k = 0; k < values.size(); ++k) {
        const int want = k == ka ? on_a : k == kb ? on_b : rest;
        if (values[k] != want)
            throw std::logic_error(std::string(what) + ": evaluation pattern violated");
    }
}

} // namespace detail

/// Facet equation through the six vertices outside a complementary pair (value 1 there, 3 on the pair).
inline LinearForm case_disjoint_form(const Assignment& a, const Assignment& b)
{
    auto f = detail::transported_form(a, b, PairKind::Disjoint);
    detail::expect_pattern(f, a, b, 3, 3, 1, "case_disjoint_form");
    return f;
}

/// Single coordinate X_{ijpq} = 0 of the shared edge (i,p)-(j,q); value 1 on the pair.
inline LinearForm case_shared_edge_form(const Assignment& a, const Assignment& b)
{
    auto f = detail::transported_form(a, b, PairKind::SharedEdge);
    detail::expect_pattern(f, a, b, 1, 1, 0, "case_shared_edge_form");
    return f;
}

/// Witness that the six remaining vertices are no face: 0 at a, 2 at b, 1 on the six.
inline LinearForm case_shared_vertex_witness(const Assignment& a, const Assignment& b)
{
    auto f = detail::transported_form(a, b, PairKind::SharedVertex);
    detail::expect_pattern(f, a, b, 0, 2, 1, "case_shared_vertex_witness");
    return f;
}

struct CaseAnalysis {
    Assignment a, b;
    PairClass cls;
    LinearForm form;            ///< full coordinates, i <= j representatives
    RationalVector values;      ///< on the 8 vertices, lexicographic
    FaceVerdict verdict;        ///< face test of the six remaining vertices
    bool consistent = false;    ///< verdict agrees with the case's claim
};

/**
 * Runs the case pipeline for excluded pair (a, b) of Omega_3: classify,
 * transport the case's form, and face-test the six remaining vertices.
 * Disjoint must give a Facet whose inequality is the form; SharedEdge a face
 * on which the coordinate vanishes; SharedVertex must give NotFace.
 */
inline CaseAnalysis analyze_excluded_pair(const Assignment& a, const Assignment& b)
{
    CaseAnalysis out;
    out.a = a;
    out.b = b;
    out.cls = classify_pair(a, b);
    switch (out.cls.kind) {
    case PairKind::Disjoint: out.form = case_disjoint_form(a, b); break;
    case PairKind::SharedEdge: out.form = case_shared_edge_form(a, b); break;
    case PairKind::SharedVertex: out.form = case_shared_vertex_witness(a, b); break;
    }
    out.values = detail::values_on_vertices(out.form);

    const VRep v = reduced_vrep(3);
    std::vector<std::size_t> six;
    for (std::size_t k = 0; k < v.points.size(); ++k)
        if (k != detail::vertex_index(a) && k != detail::vertex_index(b))
            six.push_back(k);
    out.verdict = is_face(v, six);

    const LinearForm as_inequality = canonical(reduce_form(out.form, 3));
    switch (out.cls.kind) {
    case PairKind::Disjoint:
        out.consistent = out.verdict.kind == FaceKind::Facet && out.verdict.form == as_inequality;
        break;
    case PairKind::SharedEdge:
        out.consistent = (out.verdict.kind == FaceKind::Facet || out.verdict.kind == FaceKind::ProperFace)
            && tight_points(v, reduce_form(out.form, 3)) == six;
        break;
    case PairKind::SharedVertex: out.consistent = out.verdict.kind == FaceKind::NotFace; break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Facet census

struct CensusFacet {
    LinearForm form;  ///< canonical inequality on reduced coordinates
    std::vector<std::size_t> vertices;
};

struct CensusOrbit {
    std::size_t size = 0;
    std::size_t representative = 0;  ///< index into facets (smallest in the orbit)
};

struct CensusReport {
    std::size_t n = 0;
    std::vector<CensusFacet> facets;
    std::vector<std::size_t> per_vertex_incidence;
    std::vector<CensusOrbit> orbits;

    std::size_t facet_count() const noexcept { return facets.size(); }
    bool incidence_constant() const
    {
        return std::adjacent_find(per_vertex_incidence.begin(), per_vertex_incidence.end(), std::not_equal_to<>())
            == per_vertex_incidence.end();
    }
};

struct CensusOptions {
    bool allow_n5 = false;
    Limits limits;
};

/// The image of a reduced facet inequality under a group element, canonicalized.
inline LinearForm transport_facet(const Symmetry& g, const LinearForm& reduced_facet, std::size_t n)
{
    return canonical(reduce_form(g.pull_back(lift_form(reduced_facet, n)), n));
}

inline CensusReport facet_census(std::size_t n, const CensusOptions& options = {})
{
    if (n < 2)
        throw std::invalid_argument("facet_census: n must be at least 2");
    if (n > 5 || (n == 5 && !options.allow_n5))
        throw GuardError("census_n", "--allow-n5",
                         "facet census is limited to n <= 4" + std::string(n == 5 ? " unless --allow-n5 is given" : ""));

    CensusReport report;
    report.n = n;
    const VRep v = reduced_vrep(n, options.limits);
    const HRep h = convex_hull_facets(v, options.limits);
    if (!h.equalities.empty())
        throw std::logic_error("facet_census: reduced Omega_n should be full-dimensional");

    report.per_vertex_incidence.assign(v.points.size(), 0);
    std::map<std::vector<Rational>, std::size_t> index;
    for (const auto& f : h.inequalities) {
        CensusFacet cf{f, tight_points(v, f)};
        for (auto k : cf.vertices)
            ++report.per_vertex_incidence[k];
        RationalVector key = f.coeffs;
        key.push_back(f.rhs);
        index.emplace(std::move(key), report.facets.size());
        report.facets.push_back(std::move(cf));
    }

    std::vector<std::size_t> parent(report.facets.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : symmetry_generators(n)) {
        for (std::size_t k = 0; k < report.facets.size(); ++k) {
            const LinearForm image = transport_facet(g, report.facets[k].form, n);
            RationalVector key = image.coeffs;
            key.push_back(image.rhs);
            const auto it = index.find(key);
            if (it == index.end())
                throw std::logic_error("facet_census: a symmetry maps a facet outside the computed facet set");
            const std::size_t x = find(k), y = find(it->second);
            if (x != y)
                parent[std::max(x, y)] = std::min(x, y);
        }
    }
    std::map<std::size_t, std::size_t> sizes;
    for (std::size_t k = 0; k < report.facets.size(); ++k)
        ++sizes[find(k)];
    for (const auto& [rep, size] : sizes)
        report.orbits.push_back({size, rep});
    return report;
}

/// {"n", "coordinates", "facets":[{"coeffs","rhs","vertices_on"}], "facet_count", "per_vertex_incidence", "orbits"}
inline nlohmann::json census_to_json(const CensusReport& r, bool with_orbits = true)
{
    nlohmann::json coords = nlohmann::json::array();
    for (auto [i, j] : reduced_labels(r.n))
        coords.push_back(std::to_string(i) + "," + std::to_string(j));
    nlohmann::json facets = nlohmann::json::array();
    for (const auto& f : r.facets) {
        auto jf = form_to_json(f.form);
        jf["vertices_on"] = f.vertices.size();
        facets.push_back(std::move(jf));
    }
    nlohmann::json out = {{"n", r.n}, {"coordinates", coords}, {"facets", facets}, {"facet_count", r.facet_count()}};
    if (r.incidence_constant() && !r.per_vertex_incidence.empty())
        out["per_vertex_incidence"] = r.per_vertex_incidence.front();
    else
        out["per_vertex_incidence"] = r.per_vertex_incidence;
    if (with_orbits) {
        nlohmann::json orbits = nlohmann::json::array();
        for (const auto& o : r.orbits)
            orbits.push_back({{"size", o.size}, {"representative", form_to_json(r.facets[o.representative].form)}});
        out["orbits"] = orbits;
    }
    return out;
}

} // namespace omega
