#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "omega/cli.hpp"

namespace omega {
namespace {

struct Outcome {
    int code = -1;
    std::string out, err;
};

Outcome run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "omega");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    Outcome o;
    o.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

class TempFile {
public:
    TempFile(const std::string& name, const std::string& content)
        : path_(std::filesystem::temp_directory_path() / ("omega_test_" + std::to_string(::getpid()) + "_" + name))
    {
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

std::string capture_process(const std::string& command)
{
    std::string out;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe)
        return out;
    char buffer[4096];
    std::size_t got;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
        out.append(buffer, got);
    ::pclose(pipe);
    return out;
}

TEST(Cli, VerifyPasses)
{
    const auto o = run_cli({"verify", "--n", "3"});
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("affine.equalities"), std::string::npos);
    EXPECT_NE(o.out.find("28/28 pairs are 1-faces"), std::string::npos);
    EXPECT_NE(o.out.find("summary: 6 passed, 0 failed, 0 skipped"), std::string::npos);

    const auto big = run_cli({"verify", "--n", "5", "--jobs", "2"});
    EXPECT_EQ(big.code, 0);
    EXPECT_NE(big.out.find("summary: 5 passed, 0 failed, 1 skipped"), std::string::npos);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"verify"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--n", "x"}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({"face-test", "--n", "4", "--exclude", "1,1,1,1", "2,2,2,2"}).code, 2);
    EXPECT_EQ(run_cli({"edge-cert", "--n", "3", "--a", "1,1", "--b", "2,2,2"}).code, 2);
    EXPECT_EQ(run_cli({"hull"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, GuardMessageNamesOverride)
{
    const auto o = run_cli({"--max-bruteforce", "3", "vertices", "--n", "4"});
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("too large for brute force"), std::string::npos);
    EXPECT_NE(o.err.find("--max-bruteforce"), std::string::npos);

    const auto census = run_cli({"census", "--n", "5"});
    EXPECT_EQ(census.code, 2);
    EXPECT_NE(census.err.find("--allow-n5"), std::string::npos);
}

TEST(Cli, Vertices)
{
    const auto o = run_cli({"vertices", "--n", "2", "--reduced"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "1,1 : 1 1 1\n1,2 : 1 0 0\n2,1 : 0 0 1\n2,2 : 0 0 0\n");
    const auto j = run_cli({"vertices", "--n", "2", "--json"});
    EXPECT_EQ(j.out.substr(0, j.out.find('\n')), R"({"n":2,"reduced":{"1,1":"1","1,2":"1","2,2":"1"}})");
}

TEST(Cli, FaceTest)
{
    const auto disjoint = run_cli({"face-test", "--n", "3", "--exclude", "1,1,1", "2,2,2"});
    EXPECT_EQ(disjoint.code, 0);
    EXPECT_NE(disjoint.out.find("class: Disjoint"), std::string::npos);
    EXPECT_NE(disjoint.out.find("verdict: Facet (dimension 5)"), std::string::npos);
    EXPECT_NE(disjoint.out.find("consistent: yes"), std::string::npos);

    const auto vertex = run_cli({"face-test", "--n", "3", "--exclude", "1,1,1", "1,2,2"});
    EXPECT_EQ(vertex.code, 0);
    EXPECT_NE(vertex.out.find("verdict: NotFace"), std::string::npos);
    EXPECT_NE(vertex.out.find("1,1,1=0"), std::string::npos);
    EXPECT_NE(vertex.out.find("1,2,2=2"), std::string::npos);
}

TEST(Cli, HullAndCensus)
{
    const auto h = run_cli({"hull", "--n", "2"});
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find(" 4 4 rational"), std::string::npos);

    const auto c = run_cli({"census", "--n", "3", "--orbits"});
    EXPECT_EQ(c.code, 0);
    const auto j = nlohmann::json::parse(c.out);
    EXPECT_EQ(j.at("facet_count"), 16);
    EXPECT_EQ(j.at("orbits").size(), 2u);
}

TEST(Cli, EdgeCertificate)
{
    const auto o = run_cli({"edge-cert", "--n", "3", "--a", "1,1,1", "--b", "2,1,2"});
    EXPECT_EQ(o.code, 0) << o.err;
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j.at("F_a"), "1");
    EXPECT_EQ(j.at("F_b"), "1");
    EXPECT_GE(parse_rational(j.at("min_other").get<std::string>()), 2);
}

TEST(Cli, ConvertRoundTrip)
{
    const auto h = run_cli({"hull", "--n", "2", "--json"});
    TempFile json("h.json", h.out);
    const auto text = run_cli({"convert", "--input", json.path()});
    EXPECT_EQ(text.code, 0) << text.err;
    EXPECT_EQ(text.out, run_cli({"hull", "--n", "2"}).out);

    TempFile cdd("h.ine", text.out);
    const auto back = run_cli({"convert", "--input", cdd.path()});
    EXPECT_EQ(nlohmann::json::parse(back.out), nlohmann::json::parse(h.out));

    TempFile garbage("bad.txt", "hello\n");
    EXPECT_EQ(run_cli({"convert", "--input", garbage.path()}).code, 2);
}

TEST(Cli, CliqueSolve)
{
    auto g = complete_graph(3);
    g.remove_edge({1, 1}, {2, 1});
    g.remove_edge({1, 1}, {2, 2});
    TempFile file("g.json", graph_to_json(g).dump());
    const auto found = run_cli({"clique-solve", "--graph", file.path()});
    EXPECT_EQ(found.code, 0);
    ASSERT_EQ(found.out.rfind("clique: 2,", 0), 0u) << found.out;

    const auto listed = run_cli({"clique-solve", "--graph", file.path(), "--enumerate"});
    EXPECT_NE(listed.out.find("cliques: 4"), std::string::npos);

    Graph2P empty(2);
    TempFile none("e.json", graph_to_json(empty).dump());
    EXPECT_EQ(run_cli({"clique-solve", "--graph", none.path()}).out, "no clique\n");

    TempFile bad("b.json", R"({"n":2,"missing_edges":[[[1,1],[1,2]]]})");
    EXPECT_EQ(run_cli({"clique-solve", "--graph", bad.path()}).code, 2);
}

TEST(Cli, OutputIndependentOfJobs)
{
    const auto one = run_cli({"verify", "--n", "4", "--jobs", "1"});
    const auto four = run_cli({"verify", "--n", "4", "--jobs", "4"});
    EXPECT_EQ(one.out, four.out);

    const std::string binary = OMEGA_CLI_PATH;
    const auto a = capture_process(binary + " verify --n 3 --jobs 1");
    const auto b = capture_process(binary + " verify --n 3 --jobs 3");
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, run_cli({"verify", "--n", "3"}).out);
}

} // namespace
} // namespace omega
