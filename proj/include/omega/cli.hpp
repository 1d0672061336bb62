#pragma once

// The `omega` command line: vertices, verify, hull, census, edge-cert,
// face-test, clique-solve, convert.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graph2p.hpp"
#include "neighborly.hpp"
#include "omega3_census.hpp"
#include "omega_core.hpp"
#include "polyhedra.hpp"

namespace omega::cli {

enum ExitCode : int { Success = 0, VerificationFailed = 1, UsageError = 2 };

namespace detail {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Check {
    std::string name;
    enum { Pass, Fail, Skip } result = Pass;
    std::string detail;
};

inline void print_checks(std::ostream& out, const std::vector<Check>& checks)
{
    out << std::left << std::setw(34) << "CHECK" << std::setw(8) << "RESULT" << "DETAIL\n";
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& c : checks) {
        const char* label = c.result == Check::Pass ? "PASS" : c.result == Check::Fail ? "FAIL" : "SKIP";
        (c.result == Check::Pass ? pass : c.result == Check::Fail ? fail : skip)++;
        out << std::left << std::setw(34) << c.name << std::setw(8) << label << c.detail << '\n';
    }
    out << "summary: " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
}

inline std::vector<Check> verify_checks(std::size_t n, std::size_t jobs, const Limits& limits)
{
    std::vector<Check> checks;
    const auto vertices = all_assignments(n, limits);
    const std::size_t expected_dim = reduced_dimension(n);

    {
        std::size_t violations = 0;
        for (const auto& a : vertices)
            violations += check_equalities(vertex_from_assignment(n, a)).violations.size();
        checks.push_back({"affine.equalities", violations == 0 ? Check::Pass : Check::Fail,
                          std::to_string(vertices.size()) + " vertices x " + std::to_string(full_dimension(n))
                              + " coordinates, " + std::to_string(violations) + " violations"});
    }
    {
        std::size_t mismatches = 0;
        for (const auto& a : vertices) {
            const OmegaPoint x = vertex_from_assignment(n, a);
            if (lift(reduce(x)) != x || reduce(x) != reduced_vertex(a))
                ++mismatches;
        }
        checks.push_back({"reduced.roundtrip", mismatches == 0 ? Check::Pass : Check::Fail,
                          "lift(reduce(x)) = x on " + std::to_string(vertices.size()) + " vertices, "
                              + std::to_string(mismatches) + " mismatches"});
    }
    {
        const std::size_t dim = omega_dimension(n, limits);
        checks.push_back({"dimension.rank", dim == expected_dim ? Check::Pass : Check::Fail,
                          "dim = " + std::to_string(dim) + " (n(n+1)/2 = " + std::to_string(expected_dim) + ")"});
    }
    {
        VRep family{full_dimension(n), {}};
        for (const auto& a : independent_family(n))
            family.points.push_back(vertex_from_assignment(n, a).coords);
        const std::size_t rank = affine_rank(family);
        const bool ok = rank == expected_dim && family.points.size() == expected_dim + 1;
        checks.push_back({"dimension.independent_family", ok ? Check::Pass : Check::Fail,
                          std::to_string(family.points.size()) + " points, affine rank " + std::to_string(rank)});
    }
    {
        const PairSweep sweep = certify_all_pairs(n, jobs, limits);
        const bool ok = sweep.certified == sweep.pairs && (sweep.pairs == 0 || sweep.min_other >= 2);
        checks.push_back({"edges.certificates", ok ? Check::Pass : Check::Fail,
                          std::to_string(sweep.certified) + "/" + std::to_string(sweep.pairs)
                              + " pairs certified, min F(Z) over other vertices = " + to_text(sweep.min_other)});
    }
    if (n <= 4) {
        const std::size_t pairs = vertices.size() * (vertices.size() - 1) / 2;
        const std::size_t edges = edges_via_hull(n, jobs, limits);
        checks.push_back({"edges.lp_faces", edges == pairs ? Check::Pass : Check::Fail,
                          std::to_string(edges) + "/" + std::to_string(pairs) + " pairs are 1-faces by LP"});
    } else {
        checks.push_back({"edges.lp_faces", Check::Skip, "LP face test runs for n <= 4 only"});
    }
    return checks;
}

inline Assignment parse_assignment(const std::string& text, std::size_t n, const char* flag)
{
    Assignment a;
    try {
        a = Assignment::parse(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(flag, e.what());
    }
    if (a.size() != n)
        throw CLI::ValidationError(flag, "'" + text + "' has " + std::to_string(a.size()) + " entries, expected "
                                             + std::to_string(n));
    return a;
}

inline std::string convert_document(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw std::invalid_argument("convert: empty input");
    if (text[first] == '{' || text[first] == '[') {
        const auto j = nlohmann::json::parse(text);
        if (j.contains("kind") && j.at("kind") == "V")
            return to_text(vrep_from_json(j));
        if (j.contains("kind") && j.at("kind") == "H")
            return to_text(hrep_from_json(j));
        if (j.contains("facets")) {
            HRep h;
            h.dim = reduced_dimension(j.at("n").get<std::size_t>());
            for (const auto& f : j.at("facets"))
                h.inequalities.push_back(form_from_json(f));
            return to_text(h);
        }
        if (j.contains("reduced")) {
            const ReducedPoint y = point_from_json(j);
            return to_text(VRep{y.y.size(), {y.y}});
        }
        if (j.contains("missing_edges"))
            return to_dimacs(to_2cnf(graph_from_json(j)));
        throw std::invalid_argument("convert: unrecognized JSON document");
    }
    if (text.find("V-representation") != std::string::npos)
        return to_json(parse_vrep(text)).dump(2) + "\n";
    if (text.find("H-representation") != std::string::npos)
        return to_json(parse_hrep(text)).dump(2) + "\n";
    throw std::invalid_argument("convert: input is neither JSON nor a V/H representation");
}

} // namespace detail

/// Runs the tool; returns the process exit code. All output goes to `out` / `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact polyhedral toolkit for clique polytopes of 2-per-part multipartite graphs", "omega"};
    app.require_subcommand(1);

    Limits limits;
    std::size_t jobs = 1;
    app.add_option("--max-bruteforce", limits.max_bruteforce, "Largest n for 2^n enumeration")
        ->envname("OMEGA_MAX_BRUTEFORCE");
    app.add_option("--max-hull-dim", limits.max_hull_dim, "Largest dimension for convex hulls")
        ->envname("OMEGA_MAX_HULL_DIM");
    app.add_option("--max-hull-points", limits.max_hull_points, "Largest point count for convex hulls")
        ->envname("OMEGA_MAX_HULL_POINTS");
    app.add_option("--jobs", jobs, "Worker threads")->envname("OMEGA_JOBS")->check(CLI::Range(1, 256));

    std::size_t n = 0;
    bool reduced = false, as_json = false, orbits = false, allow_n5 = false, enumerate = false, dimacs = false;
    std::string a_text, b_text, input, graph_path;
    std::vector<std::string> exclude;

    auto* vertices = app.add_subcommand("vertices", "List the vertices of Omega_n");
    vertices->add_option("--n", n, "Part count")->required()->check(CLI::Range(1, 64));
    vertices->add_flag("--reduced", reduced, "Reduced coordinates X_{ij11}, i <= j");
    vertices->add_flag("--json", as_json, "Point JSON (reduced form), one document per line");

    auto* verify = app.add_subcommand("verify", "Check the equalities, dimension and edge structure of Omega_n");
    verify->add_option("--n", n, "Part count")->required()->check(CLI::Range(2, 64));
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

    auto* hull = app.add_subcommand("hull", "Facet H-representation of Omega_n or of a V-representation file");
    auto* hull_n = hull->add_option("--n", n, "Part count")->check(CLI::Range(2, 64));
    auto* hull_in = hull->add_option("--input", input, "V-representation text or V JSON")->check(CLI::ExistingFile);
    hull_n->excludes(hull_in);
    hull->add_flag("--json", as_json, "Emit H JSON instead of text");

    auto* census = app.add_subcommand("census", "Facet census of Omega_n");
    census->add_option("--n", n, "Part count")->required()->check(CLI::Range(2, 64));
    census->add_flag("--orbits", orbits, "Include facet orbits under the symmetry group");
    census->add_flag("--allow-n5", allow_n5, "Permit n = 5 (slow)");

    auto* edge = app.add_subcommand("edge-cert", "Edge certificate for a vertex pair of Omega_n");
    edge->add_option("--n", n, "Part count")->required()->check(CLI::Range(2, 64));
    edge->add_option("--a", a_text, "First assignment, e.g. 1,2,1")->required();
    edge->add_option("--b", b_text, "Second assignment")->required();

    auto* face = app.add_subcommand("face-test", "Case analysis for an excluded vertex pair of Omega_3");
    face->add_option("--n", n, "Part count (3)")->required()->check(CLI::IsMember({3}));
    face->add_option("--exclude", exclude, "The two excluded assignments")->required()->expected(2);

    auto* clique = app.add_subcommand("clique-solve", "Find an n-clique through 2SAT");
    clique->add_option("--graph", graph_path, "Graph JSON")->required()->check(CLI::ExistingFile);
    clique->add_flag("--enumerate", enumerate, "List every clique by brute force");
    clique->add_flag("--dimacs", dimacs, "Print the 2CNF in DIMACS form");

    auto* convert = app.add_subcommand("convert", "Translate between JSON and V/H text (or graph JSON to DIMACS)");
    convert->add_option("--input", input, "Input file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Success;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return UsageError;
    }

    try {
        if (vertices->parsed()) {
            for (const auto& a : all_assignments(n, limits)) {
                if (as_json) {
                    out << point_to_json(reduced_vertex(a)).dump() << '\n';
                    continue;
                }
                out << a.to_text() << " :";
                const RationalVector coords = reduced ? reduced_vertex(a).y : vertex_from_assignment(n, a).coords;
                for (const auto& x : coords)
                    out << ' ' << to_text(x);
                out << '\n';
            }
            return Success;
        }
        if (verify->parsed()) {
            const auto checks = detail::verify_checks(n, jobs, limits);
            out << "verify n=" << n << '\n';
            detail::print_checks(out, checks);
            for (const auto& c : checks)
                if (c.result == detail::Check::Fail)
                    return VerificationFailed;
            return Success;
        }
        if (hull->parsed()) {
            VRep v;
            if (!input.empty()) {
                const std::string text = detail::read_file(input);
                const auto first = text.find_first_not_of(" \t\r\n");
                v = first != std::string::npos && text[first] == '{' ? vrep_from_json(nlohmann::json::parse(text))
                                                                      : parse_vrep(text);
            } else if (n >= 2) {
                v = reduced_vrep(n, limits);
            } else {
                err << "usage error: hull needs --n or --input\n";
                return UsageError;
            }
            const HRep h = convex_hull_facets(v, limits);
            out << (as_json ? to_json(h).dump(2) + "\n" : to_text(h));
            return Success;
        }
        if (census->parsed()) {
            const CensusReport report = facet_census(n, {allow_n5, limits});
            if (n == 5)
                err << "warning: the n = 5 census runs double description in dimension 15\n";
            out << census_to_json(report, orbits).dump(2) << '\n';
            return report.incidence_constant() ? Success : VerificationFailed;
        }
        if (edge->parsed()) {
            const Assignment a = detail::parse_assignment(a_text, n, "--a");
            const Assignment b = detail::parse_assignment(b_text, n, "--b");
            const EdgeCertificate c = edge_certificate(n, a, b, limits);
            out << certificate_to_json(c).dump(2) << '\n';
            return verify_certificate(c, limits) ? Success : VerificationFailed;
        }
        if (face->parsed()) {
            const Assignment a = detail::parse_assignment(exclude[0], 3, "--exclude");
            const Assignment b = detail::parse_assignment(exclude[1], 3, "--exclude");
            const CaseAnalysis r = analyze_excluded_pair(a, b);
            out << "excluded: " << a.to_text() << " / " << b.to_text() << '\n';
            out << "class: " << r.cls.to_text() << '\n';
            out << "form: " << format_form(r.form, 3) << " = " << to_text(r.form.rhs) << " on the six remaining vertices\n";
            out << "values:";
            const auto all = all_assignments(3);
            for (std::size_t k = 0; k < all.size(); ++k)
                out << ' ' << all[k].to_text() << '=' << to_text(r.values[k]);
            out << '\n';
            out << "verdict: " << to_string(r.verdict.kind);
            if (r.verdict.kind == FaceKind::Facet || r.verdict.kind == FaceKind::ProperFace)
                out << " (dimension " << r.verdict.dimension << ")";
            out << '\n';
            if (r.verdict.form) {
                out << "inequality:";
                for (const auto& c : r.verdict.form->coeffs)
                    out << ' ' << to_text(c);
                out << " >= " << to_text(r.verdict.form->rhs) << "   (reduced coordinates 11 12 13 22 23 33)\n";
            }
            out << "consistent: " << (r.consistent ? "yes" : "no") << '\n';
            return r.consistent ? Success : VerificationFailed;
        }
        if (clique->parsed()) {
            const Graph2P g = graph_from_json(nlohmann::json::parse(detail::read_file(graph_path)));
            if (dimacs)
                out << to_dimacs(to_2cnf(g));
            if (enumerate) {
                const auto cliques = enumerate_cliques(g, limits);
                out << "cliques: " << cliques.size() << '\n';
                for (const auto& a : cliques)
                    out << a.to_text() << '\n';
                return Success;
            }
            if (const auto found = find_clique(g))
                out << "clique: " << found->to_text() << '\n';
            else
                out << "no clique\n";
            return Success;
        }
        if (convert->parsed()) {
            out << detail::convert_document(detail::read_file(input));
            return Success;
        }
    } catch (const GuardError& e) {
        err << "error: " << e.what() << " [guard " << e.guard() << "; override with " << e.override_flag() << "]\n";
        return UsageError;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << '\n';
        return UsageError;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << '\n';
        return UsageError;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << '\n';
        return UsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return VerificationFailed;
    }
    return UsageError;
}

} // namespace omega::cli
