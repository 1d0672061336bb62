#include <random>
#include <set>

#include <gtest/gtest.h>

#include "omega/graph2p.hpp"
#include "support/oracles.hpp"

namespace omega {
namespace {

TEST(CompleteGraph, EdgeCounts)
{
    EXPECT_EQ(complete_graph(1).edge_count(), 0u);
    EXPECT_EQ(complete_graph(2).edge_count(), 4u);
    EXPECT_EQ(complete_graph(3).edge_count(), 12u);
    EXPECT_EQ(complete_graph(5).edge_count(), 4u * 5 * 4 / 2);
    EXPECT_THROW(complete_graph(0), std::invalid_argument);
}

TEST(Graph2P, RejectsSamePartEdges)
{
    Graph2P g(3);
    EXPECT_THROW(g.add_edge({1, 1}, {1, 2}), std::invalid_argument);
    EXPECT_THROW(g.add_edge({4, 1}, {1, 2}), std::out_of_range);
    EXPECT_THROW(g.add_edge({1, 3}, {2, 1}), std::out_of_range);
    g.add_edge({1, 1}, {2, 2});
    EXPECT_TRUE(g.has_edge({2, 2}, {1, 1}));
    EXPECT_FALSE(g.has_edge({1, 1}, {1, 2}));
}

TEST(IsClique, CompleteGraphContainsEveryAssignment)
{
    const auto g = complete_graph(3);
    for (const auto& a : all_assignments(3))
        EXPECT_TRUE(is_clique(g, a));
}

TEST(IsClique, MissingEdge)
{
    auto g = complete_graph(3);
    g.remove_edge({1, 1}, {2, 1});
    EXPECT_FALSE(is_clique(g, Assignment({1, 1, 1})));
    EXPECT_TRUE(is_clique(g, Assignment({2, 2, 2})));
    EXPECT_THROW(is_clique(g, Assignment({1, 1})), std::invalid_argument);
}

TEST(EnumerateCliques, Counts)
{
    EXPECT_EQ(enumerate_cliques(complete_graph(2)).size(), 4u);
    for (std::size_t n = 1; n <= 8; ++n)
        EXPECT_EQ(enumerate_cliques(complete_graph(n)).size(), std::size_t{1} << n);

    auto g = complete_graph(2);
    for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 2; ++q)
            g.remove_edge({1, p}, {2, q});
    EXPECT_TRUE(enumerate_cliques(g).empty());
}

TEST(EnumerateCliques, LexicographicOrder)
{
    const auto cliques = enumerate_cliques(complete_graph(3));
    ASSERT_EQ(cliques.size(), 8u);
    EXPECT_EQ(cliques.front(), Assignment({1, 1, 1}));
    EXPECT_EQ(cliques[1], Assignment({1, 1, 2}));
    EXPECT_EQ(cliques.back(), Assignment({2, 2, 2}));
    EXPECT_TRUE(std::is_sorted(cliques.begin(), cliques.end()));
}

TEST(EnumerateCliques, SizeGuard)
{
    Limits tight;
    tight.max_bruteforce = 4;
    EXPECT_THROW(enumerate_cliques(complete_graph(5), tight), GuardError);
    EXPECT_NO_THROW(enumerate_cliques(complete_graph(4), tight));
    try {
        enumerate_cliques(complete_graph(21));
        FAIL() << "expected a guard error";
    } catch (const GuardError& e) {
        EXPECT_EQ(e.override_flag(), "--max-bruteforce");
        EXPECT_NE(std::string(e.what()).find("too large for brute force"), std::string::npos);
    }
}

TEST(To2Cnf, CompleteGraphHasNoClauses)
{
    for (std::size_t n = 1; n <= 6; ++n)
        EXPECT_TRUE(to_2cnf(complete_graph(n)).clauses.empty());
}

TEST(To2Cnf, SingleMissingEdge)
{
    auto g = complete_graph(2);
    g.remove_edge({1, 1}, {2, 1});
    const Cnf2 cnf = to_2cnf(g);
    ASSERT_EQ(cnf.clauses.size(), 1u);
    // forbids rho(1) = 1 and rho(2) = 1: (not x1 or not x2)
    EXPECT_EQ(cnf.clauses[0], (Clause{{1, false}, {2, false}}));

    auto h = complete_graph(2);
    h.remove_edge({1, 2}, {2, 1});
    EXPECT_EQ(to_2cnf(h).clauses[0], (Clause{{1, true}, {2, false}}));
}

TEST(To2Cnf, ModelsAreExactlyTheCliques)
{
    std::mt19937 rng(20040406);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const Graph2P g = testing::random_graph(rng, n, 0.8);
        std::set<std::vector<int>> cliques;
        for (const auto& a : enumerate_cliques(g))
            cliques.insert(a.choices());
        EXPECT_EQ(testing::brute_force_models(to_2cnf(g)), cliques) << "trial " << trial;
    }
}

TEST(Solve2Sat, Basics)
{
    Cnf2 empty{3, {}};
    ASSERT_TRUE(solve_2sat(empty).has_value());

    Cnf2 contradiction{1, {{{1, true}, {1, true}}, {{1, false}, {1, false}}}};
    EXPECT_FALSE(solve_2sat(contradiction).has_value());

    Cnf2 forced{2, {{{1, true}, {1, true}}, {{1, false}, {2, false}}}};
    const auto model = solve_2sat(forced);
    ASSERT_TRUE(model.has_value());
    EXPECT_EQ(*model, Assignment({1, 2}));

    Cnf2 bad{2, {{{3, true}, {1, true}}}};
    EXPECT_THROW(solve_2sat(bad), std::invalid_argument);
}

TEST(Solve2Sat, AgreesWithBruteForce)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const std::size_t m = rng() % (3 * n + 1);
        const Cnf2 cnf = testing::random_cnf(rng, n, m);
        const auto models = testing::brute_force_models(cnf);
        const auto model = solve_2sat(cnf);
        ASSERT_EQ(model.has_value(), !models.empty()) << to_dimacs(cnf);
        if (model) {
            EXPECT_TRUE(models.count(model->choices())) << to_dimacs(cnf);
        }
    }
}

TEST(FindClique, Examples)
{
    const auto found = find_clique(complete_graph(5));
    ASSERT_TRUE(found.has_value());
    EXPECT_TRUE(is_clique(complete_graph(5), *found));

    EXPECT_FALSE(find_clique(Graph2P(2)).has_value());
    EXPECT_TRUE(find_clique(Graph2P(1)).has_value());
}

TEST(FindClique, AgreesWithEnumeration)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const Graph2P g = testing::random_graph(rng, n, 0.7);
        const auto found = find_clique(g);
        EXPECT_EQ(found.has_value(), !enumerate_cliques(g).empty());
        if (found) {
            EXPECT_TRUE(is_clique(g, *found));
        }
    }
}

TEST(FindClique, ExhaustiveSmallGraphs)
{
    // Every graph on 2 parts (16 edge subsets) and a sweep over 3 parts.
    for (unsigned mask = 0; mask < 16; ++mask) {
        Graph2P g(2);
        for (unsigned k = 0; k < 4; ++k)
            if (mask >> k & 1U)
                g.add_edge({1, static_cast<int>(k / 2 + 1)}, {2, static_cast<int>(k % 2 + 1)});
        EXPECT_EQ(find_clique(g).has_value(), !enumerate_cliques(g).empty()) << mask;
    }
    for (unsigned mask = 0; mask < (1U << 12); mask += 7) {
        Graph2P g(3);
        unsigned bit = 0;
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                for (int p = 1; p <= 2; ++p)
                    for (int q = 1; q <= 2; ++q, ++bit)
                        if (mask >> bit & 1U)
                            g.add_edge({i, p}, {j, q});
        EXPECT_EQ(find_clique(g).has_value(), !enumerate_cliques(g).empty()) << mask;
    }
}

TEST(Formats, GraphJson)
{
    auto g = complete_graph(3);
    g.remove_edge({1, 1}, {2, 1});
    g.remove_edge({3, 2}, {2, 1});
    const auto j = graph_to_json(g);
    EXPECT_EQ(j.dump(), R"({"missing_edges":[[[1,1],[2,1]],[[2,1],[3,2]]],"n":3})");
    EXPECT_EQ(graph_from_json(j), g);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":2,"missing_edges":[[[1,1],[1,2]]]})")),
                 std::invalid_argument);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":0})")), std::invalid_argument);
}

TEST(Formats, Dimacs)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Cnf2 cnf = testing::random_cnf(rng, 1 + rng() % 6, rng() % 8);
        EXPECT_EQ(parse_dimacs(to_dimacs(cnf)), cnf);
    }
    EXPECT_EQ(to_dimacs(Cnf2{2, {{{1, false}, {2, true}}}}), "p cnf 2 1\n-1 2 0\n");
    EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 -1 0\n"), std::invalid_argument);
    EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 2 0\n"), std::invalid_argument);
    EXPECT_THROW(parse_dimacs("1 2 0\n"), std::invalid_argument);
    EXPECT_EQ(parse_dimacs("c comment\np cnf 3 1\n1\n-3 0\n").clauses.size(), 1u);
}

TEST(AssignmentText, ParseAndPrint)
{
    EXPECT_EQ(Assignment::parse("1,2,1"), Assignment({1, 2, 1}));
    EXPECT_EQ(Assignment({2, 1}).to_text(), "2,1");
    EXPECT_THROW(Assignment::parse("1,3"), std::invalid_argument);
    EXPECT_THROW(Assignment::parse(""), std::invalid_argument);
    EXPECT_EQ(Assignment({1, 2}).complement(), Assignment({2, 1}));
}

} // namespace
} // namespace omega
