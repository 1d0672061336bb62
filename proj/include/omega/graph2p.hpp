#pragma once

// Multipartite graphs with exactly two vertices per part, their n-cliques,
// and clique finding through the 2CNF correspondence.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "limits.hpp"

namespace omega {

/// The pos-th vertex (1 or 2) of part `part` (1-based).
struct VertexRef {
    int part = 1;
    int pos = 1;

    friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

/**
 * A choice of one vertex per part: choice(i) = rho(i) in {1, 2}.
 * Doubles as an n-clique of the complete graph and as a vertex label of Omega_n.
 * Ordering is lexicographic in the choice array.
 */
class Assignment {
public:
    Assignment() = default;

    explicit Assignment(std::vector<int> choices) : choices_(std::move(choices))
    {
        if (choices_.empty())
            throw std::invalid_argument("assignment must cover at least one part");
        for (int c : choices_)
            if (c != 1 && c != 2)
                throw std::invalid_argument("assignment entries must be 1 or 2, got " + std::to_string(c));
    }

    std::size_t size() const noexcept { return choices_.size(); }

    /// rho(part), 1-based part.
    int at(std::size_t part) const
    {
        if (part < 1 || part > choices_.size())
            throw std::out_of_range("part " + std::to_string(part) + " out of range");
        return choices_[part - 1];
    }

    const std::vector<int>& choices() const noexcept { return choices_; }

    /// The complementary assignment (every part switched).
    Assignment complement() const
    {
        std::vector<int> out(choices_);
        for (int& c : out)
            c = 3 - c;
        return Assignment(std::move(out));
    }

    /// Comma-separated positions, e.g. "1,2,1".
    std::string to_text() const
    {
        std::string s;
        for (std::size_t k = 0; k < choices_.size(); ++k) {
            if (k)
                s += ',';
            s += static_cast<char>('0' + choices_[k]);
        }
        return s;
    }

    static Assignment parse(const std::string& text)
    {
        std::vector<int> out;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok == "1")
                out.push_back(1);
            else if (tok == "2")
                out.push_back(2);
            else
                throw std::invalid_argument("malformed assignment '" + text + "': expected entries 1 or 2");
        }
        return Assignment(std::move(out));
    }

    friend auto operator<=>(const Assignment&, const Assignment&) = default;
    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::vector<int> choices_;
};

/// All 2^n assignments in lexicographic order.
inline std::vector<Assignment> all_assignments(std::size_t n, const Limits& limits = {})
{
    if (n == 0)
        throw std::invalid_argument("part count must be at least 1");
    require_bruteforce(n, limits);
    std::vector<Assignment> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> c(n);
        for (std::size_t i = 0; i < n; ++i)
            c[i] = 1 + static_cast<int>((mask >> (n - 1 - i)) & 1U);
        out.emplace_back(std::move(c));
    }
    return out;
}

/// n-partite graph, two vertices per part. Edges only join distinct parts.
class Graph2P {
public:
    using Edge = std::pair<VertexRef, VertexRef>;

    explicit Graph2P(std::size_t n) : n_(n), adj_(4 * n * n, 0)
    {
        if (n == 0)
            throw std::invalid_argument("graph must have at least one part");
    }

    static Graph2P complete(std::size_t n)
    {
        Graph2P g(n);
        for (std::size_t u = 0; u < 2 * n; ++u)
            for (std::size_t v = 0; v < 2 * n; ++v)
                if (u / 2 != v / 2)
                    g.adj_[u * 2 * n + v] = 1;
        return g;
    }

    std::size_t parts() const noexcept { return n_; }

    bool has_edge(VertexRef u, VertexRef v) const
    {
        check(u);
        check(v);
        return adj_[id(u) * 2 * n_ + id(v)] != 0;
    }

    void add_edge(VertexRef u, VertexRef v) { set_edge(u, v, 1); }
    void remove_edge(VertexRef u, VertexRef v) { set_edge(u, v, 0); }

    std::size_t edge_count() const
    {
        std::size_t count = 0;
        for (auto x : adj_)
            count += x;
        return count / 2;
    }

    /// Absent cross-part pairs, ordered by (i, j, p, q) with i < j.
    std::vector<Edge> missing_edges() const
    {
        std::vector<Edge> out;
        for (int i = 1; i <= static_cast<int>(n_); ++i)
            for (int j = i + 1; j <= static_cast<int>(n_); ++j)
                for (int p = 1; p <= 2; ++p)
                    for (int q = 1; q <= 2; ++q)
                        if (!has_edge({i, p}, {j, q}))
                            out.push_back({{i, p}, {j, q}});
        return out;
    }

    friend bool operator==(const Graph2P&, const Graph2P&) = default;

private:
    std::size_t id(VertexRef v) const { return 2 * static_cast<std::size_t>(v.part - 1) + (v.pos - 1); }

    void check(VertexRef v) const
    {
        if (v.part < 1 || static_cast<std::size_t>(v.part) > n_ || (v.pos != 1 && v.pos != 2))
            throw std::out_of_range("vertex (" + std::to_string(v.part) + "," + std::to_string(v.pos)
                                    + ") outside a graph with " + std::to_string(n_) + " parts");
    }

    void set_edge(VertexRef u, VertexRef v, std::uint8_t value)
    {
        check(u);
        check(v);
        if (u.part == v.part)
            throw std::invalid_argument("edges may not join two vertices of the same part");
        adj_[id(u) * 2 * n_ + id(v)] = value;
        adj_[id(v) * 2 * n_ + id(u)] = value;
    }

    std::size_t n_;
    std::vector<std::uint8_t> adj_;
};

inline Graph2P complete_graph(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("complete_graph: n = 0 is degenerate");
    return Graph2P::complete(n);
}

inline bool is_clique(const Graph2P& g, const Assignment& a)
{
    if (a.size() != g.parts())
        throw std::invalid_argument("is_clique: assignment length " + std::to_string(a.size())
                                    + " does not match " + std::to_string(g.parts()) + " parts");
    const int n = static_cast<int>(g.parts());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!g.has_edge({i, a.at(i)}, {j, a.at(j)}))
                return false;
    return true;
}

/// Brute-force clique list in lexicographic order. Guarded by limits.max_bruteforce.
inline std::vector<Assignment> enumerate_cliques(const Graph2P& g, const Limits& limits = {})
{
    std::vector<Assignment> out;
    for (auto& a : all_assignments(g.parts(), limits))
        if (is_clique(g, a))
            out.push_back(std::move(a));
    return out;
}

// ---------------------------------------------------------------------------
// 2CNF

/// Variable x_var (1-based); x_i = true encodes rho(i) = 1.
struct Literal {
    int var = 1;
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
    Literal first;
    Literal second;

    friend bool operator==(const Clause&, const Clause&) = default;
};

struct Cnf2 {
    std::size_t num_vars = 0;
    std::vector<Clause> clauses;

    void validate() const
    {
        for (const auto& c : clauses)
            for (const auto& l : {c.first, c.second})
                if (l.var < 1 || static_cast<std::size_t>(l.var) > num_vars)
                    throw std::invalid_argument("literal refers to variable " + std::to_string(l.var)
                                                + " outside 1.." + std::to_string(num_vars));
    }

    /// Model given as an assignment under the x_i = [rho(i) = 1] convention.
    bool satisfied_by(const Assignment& a) const
    {
        if (a.size() != num_vars)
            throw std::invalid_argument("model length does not match variable count");
        auto holds = [&](const Literal& l) { return (a.at(l.var) == 1) == l.positive; };
        return std::all_of(clauses.begin(), clauses.end(),
                           [&](const Clause& c) { return holds(c.first) || holds(c.second); });
    }

    friend bool operator==(const Cnf2&, const Cnf2&) = default;
};

/// One clause per absent cross-part edge, forbidding both of its endpoints.
inline Cnf2 to_2cnf(const Graph2P& g)
{
    Cnf2 cnf;
    cnf.num_vars = g.parts();
    // rho(i) = p is forbidden by the literal that is false exactly when rho(i) = p
    auto forbid = [](VertexRef v) { return Literal{v.part, v.pos != 1}; };
    for (const auto& [u, v] : g.missing_edges())
        cnf.clauses.push_back({forbid(u), forbid(v)});
    return cnf;
}

namespace detail {

inline std::size_t literal_node(const Literal& l)
{
    return 2 * static_cast<std::size_t>(l.var - 1) + (l.positive ? 0 : 1);
}

/// Iterative Tarjan. Component ids come out in reverse topological order.
inline std::vector<std::size_t> strongly_connected_components(const std::vector<std::vector<std::size_t>>& adj)
{
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    const std::size_t size = adj.size();
    std::vector<std::size_t> index(size, unvisited), low(size, 0), comp(size, unvisited);
    std::vector<bool> on_stack(size, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call; // (node, next edge)
    std::size_t counter = 0, components = 0;

    for (std::size_t root = 0; root < size; ++root) {
        if (index[root] != unvisited)
            continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [v, next] = call.back();
            if (next == 0 && index[v] == unvisited) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (next < adj[v].size()) {
                const std::size_t w = adj[v][next++];
                if (index[w] == unvisited)
                    call.push_back({w, 0});
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
                continue;
            }
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = components;
                } while (w != v);
                ++components;
            }
            const std::size_t finished = v;
            call.pop_back();
            if (!call.empty())
                low[call.back().first] = std::min(low[call.back().first], low[finished]);
        }
    }
    return comp;
}

} // namespace detail

/**
 * Implication-graph 2SAT. Returns a model under the x_i = [rho(i) = 1]
 * convention, or nullopt when unsatisfiable. Linear in variables + clauses.
 * The returned model is always re-checked against every clause.
 */
inline std::optional<Assignment> solve_2sat(const Cnf2& cnf)
{
    cnf.validate();
    if (cnf.num_vars == 0)
        throw std::invalid_argument("solve_2sat: formula has no variables");
    std::vector<std::vector<std::size_t>> adj(2 * cnf.num_vars);
    for (const auto& c : cnf.clauses) {
        const std::size_t a = detail::literal_node(c.first), b = detail::literal_node(c.second);
        adj[a ^ 1].push_back(b);
        adj[b ^ 1].push_back(a);
    }
    const auto comp = detail::strongly_connected_components(adj);

    std::vector<int> choice(cnf.num_vars);
    for (std::size_t v = 0; v < cnf.num_vars; ++v) {
        if (comp[2 * v] == comp[2 * v + 1])
            return std::nullopt;
        choice[v] = comp[2 * v] < comp[2 * v + 1] ? 1 : 2;
    }
    Assignment model(std::move(choice));
    if (!cnf.satisfied_by(model))
        throw std::logic_error("solve_2sat produced a model violating a clause");
    return model;
}

/// Polynomial-time clique finder: to_2cnf, solve_2sat, decode.
inline std::optional<Assignment> find_clique(const Graph2P& g)
{
    auto model = solve_2sat(to_2cnf(g));
    if (model && !is_clique(g, *model))
        throw std::logic_error("find_clique decoded a non-clique");
    return model;
}

// ---------------------------------------------------------------------------
// Formats

/// {"n": int, "missing_edges": [[[i,p],[j,q]], ...]}
inline nlohmann::json graph_to_json(const Graph2P& g)
{
    nlohmann::json missing = nlohmann::json::array();
    for (const auto& [u, v] : g.missing_edges())
        missing.push_back({{u.part, u.pos}, {v.part, v.pos}});
    return {{"n", g.parts()}, {"missing_edges", missing}};
}

inline Graph2P graph_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
        throw std::invalid_argument("graph JSON needs an integer field \"n\"");
    const auto n = j.at("n").get<long long>();
    if (n < 1)
        throw std::invalid_argument("graph JSON: n must be at least 1");
    Graph2P g = complete_graph(static_cast<std::size_t>(n));
    if (j.contains("missing_edges")) {
        for (const auto& e : j.at("missing_edges")) {
            if (!e.is_array() || e.size() != 2 || e[0].size() != 2 || e[1].size() != 2)
                throw std::invalid_argument("graph JSON: each missing edge is [[i,p],[j,q]]");
            const VertexRef u{e[0][0].get<int>(), e[0][1].get<int>()};
            const VertexRef v{e[1][0].get<int>(), e[1][1].get<int>()};
            g.remove_edge(u, v);
        }
    }
    return g;
}

inline std::string to_dimacs(const Cnf2& cnf)
{
    std::ostringstream out;
    out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
    auto lit = [](const Literal& l) { return l.positive ? l.var : -l.var; };
    for (const auto& c : cnf.clauses)
        out << lit(c.first) << ' ' << lit(c.second) << " 0\n";
    return out.str();
}

/// Reads "p cnf V C" followed by 0-terminated two-literal clauses; 'c' lines are comments.
inline Cnf2 parse_dimacs(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    Cnf2 cnf;
    bool header = false;
    std::size_t declared = 0;
    std::vector<long long> pending;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c" || first[0] == 'c')
            continue;
        if (first == "p") {
            std::string kind;
            if (header || !(ls >> kind >> cnf.num_vars >> declared) || kind != "cnf")
                throw std::invalid_argument("DIMACS: malformed header '" + line + "'");
            header = true;
            continue;
        }
        if (!header)
            throw std::invalid_argument("DIMACS: clause before header");
        std::istringstream toks(line);
        long long x;
        while (toks >> x) {
            if (x != 0) {
                pending.push_back(x);
                continue;
            }
            if (pending.size() != 2)
                throw std::invalid_argument("DIMACS: clause with " + std::to_string(pending.size())
                                            + " literals; exactly two required");
            auto lit = [](long long v) { return Literal{static_cast<int>(v < 0 ? -v : v), v > 0}; };
            cnf.clauses.push_back({lit(pending[0]), lit(pending[1])});
            pending.clear();
        }
        if (!toks.eof())
            throw std::invalid_argument("DIMACS: malformed clause line '" + line + "'");
    }
    if (!header)
        throw std::invalid_argument("DIMACS: missing header");
    if (!pending.empty())
        throw std::invalid_argument("DIMACS: unterminated clause");
    if (cnf.clauses.size() != declared)
        throw std::invalid_argument("DIMACS: header declares " + std::to_string(declared) + " clauses, found "
                                    + std::to_string(cnf.clauses.size()));
    cnf.validate();
    return cnf;
}

} // namespace omega
