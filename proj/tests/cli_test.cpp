#include <smalllarge/cli.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace smalllarge;

namespace
{
    struct Run
    {
        int code;
        std::string out, err;
    };

    Run run(std::vector<std::string> args, const std::string & input = "")
    {
        args.insert(args.begin(), "smalllarge");
        std::vector<const char *> argv;
        for (const auto & a : args)
            argv.push_back(a.c_str());
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
        return {code, out.str(), err.str()};
    }

    Json last_line(const std::string & text)
    {
        auto end = text.find_last_not_of('\n');
        auto start = text.rfind('\n', end);
        return Json::parse(text.substr(start == std::string::npos ? 0 : start + 1, end - start));
    }

    std::string binary()
    {
#ifdef SMALLLARGE_CLI
        return SMALLLARGE_CLI;
#else
        return "";
#endif
    }

    Run shell(const std::string & command)
    {
        std::string out;
        FILE * pipe = popen((command + " 2>/dev/null").c_str(), "r");
        std::array<char, 4096> buffer{};
        while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe))
            out.append(buffer.data(), got);
        int status = pclose(pipe);
        return {WEXITSTATUS(status), out, ""};
    }
}

TEST(Cli, AnalyzeCycle)
{
    auto r = run({"analyze", "-", "--k", "0"}, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["S"], 3);
    EXPECT_EQ(j["L"], 3);
    EXPECT_EQ(j["phi"], 2);
    EXPECT_EQ(j["omega_part"], 2);
    EXPECT_EQ(j["S_witness"].size(), 3u);
    EXPECT_EQ(j["phi_partition"]["count"], 2);
}

TEST(Cli, AnalyzeStarTwelveLargePartitions)
{
    auto g = run({"gen", "--family", "star", "--n", "12", "--out", "graph6"});
    ASSERT_EQ(g.code, 0);
    for (int k = 0; k <= 3; ++k) {
        auto r = run({"analyze", "--k", std::to_string(k)}, g.out);
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(Json::parse(r.out)["omega_part"], (13 + k + 1) / (k + 2));
    }
}

TEST(Cli, PartitionOutputValidates)
{
    auto r = run({"partition", "--class", "klarge", "--k", "1"}, "IheA@GUAo\n");
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    std::set<int> seen;
    for (const auto & b : j["blocks"]) {
        EXPECT_EQ(b["class"], "KLarge(1)");
        for (int v : b["vertices"])
            EXPECT_TRUE(seen.insert(v).second);
    }
    EXPECT_EQ(seen.size(), 10u);
}

TEST(Cli, BoundsStar)
{
    auto g = run({"gen", "--family", "star", "--n", "9"});
    auto r = run({"bounds", "--k", "0"}, g.out);
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["bounds"]["d4_pow4"]["value"]["num"], 657);
    EXPECT_EQ(j["bounds"]["phi"]["value"], 2);
}

TEST(Cli, VerifySingleGraph)
{
    auto r = run({"verify", "--kmax", "1"}, "C~\n");
    EXPECT_EQ(r.code, 0) << r.err;
    auto summary = last_line(r.out)["summary"];
    EXPECT_EQ(summary["graphs"], 1);
    EXPECT_EQ(summary["fail"], 0);
    EXPECT_EQ(summary["complete"], true);
}

TEST(Cli, VerifyEnumerateResumes)
{
    auto full = run({"verify", "--corpus", "enumerate", "--n", "4", "--kmax", "0"});
    ASSERT_EQ(full.code, 0) << full.err;
    auto part = run({"verify", "--corpus", "enumerate", "--n", "4", "--kmax", "0", "--resume", "enumerate:4:9"});
    ASSERT_EQ(part.code, 0) << part.err;
    auto first_record = part.out.substr(0, part.out.find('\n'));
    EXPECT_NE(first_record.find("enum:n=4:mask=9\""), std::string::npos);
    auto tail = part.out.substr(0, part.out.rfind("{\"summary\""));
    EXPECT_NE(full.out.find(tail), std::string::npos);
}

TEST(Cli, VerifyGnpAndAudit)
{
    auto r = run({"verify", "--corpus", "gnp", "--n", "7", "--count", "5", "--p", "0.3,0.7", "--seed", "4",
        "--kmax", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(last_line(r.out)["summary"]["graphs"], 5);
    auto a = run({"verify", "--corpus", "enumerate", "--n", "4", "--audit", "--kmax", "2"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(Json::parse(a.out)["audit"]["mismatches"], 0);
}

TEST(Cli, HuntPhiBetaFindsCounterexample)
{
    auto r = run({"hunt", "--target", "phibeta_vs_cw", "--nmax", "3"});
    EXPECT_EQ(r.code, 4);
    auto summary = last_line(r.out)["summary"];
    EXPECT_GT(summary["counterexamples"].get<int>(), 0);
    auto c = run({"hunt", "--target", "conjecture_alpha_k", "--nmax", "4", "--kmax", "2"});
    EXPECT_EQ(c.code, 0);
}

TEST(Cli, HuntWritesToFile)
{
    auto path = std::filesystem::temp_directory_path() / "smalllarge_hunt_test.jsonl";
    auto r = run({"hunt", "--nmax", "3", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream file(path);
    std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    EXPECT_EQ(last_line(text)["summary"]["graphs"], 1 + 2 + 8);
    std::filesystem::remove(path);
}

TEST(Cli, GenFormats)
{
    auto e = run({"gen", "--family", "cycle", "--n", "4"});
    EXPECT_EQ(e.out, "4 4\n0 1\n0 3\n1 2\n2 3\n");
    auto p = run({"gen", "--family", "petersen", "--out", "graph6"});
    EXPECT_EQ(p.out, "IheA@GUAo\n");
    auto g = run({"gen", "--family", "gnp", "--n", "8", "--p", "0.5", "--seed", "3"});
    EXPECT_EQ(g.out, run({"gen", "--family", "gnp", "--n", "8", "--p", "0.5", "--seed", "3"}).out);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"analyze", "--k", "-1"}, "C~").code, 1);
    EXPECT_EQ(run({"gen", "--family", "cycle"}).code, 1);
    EXPECT_EQ(run({"partition", "--class", "medium"}, "C~").code, 1);

    auto parse = run({"analyze"}, "3 1\n0 0\n");
    EXPECT_EQ(parse.code, 2);
    auto err = Json::parse(parse.err)["error"];
    EXPECT_EQ(err["kind"], "parse");
    EXPECT_EQ(err["exit_code"], 2);
    EXPECT_EQ(run({"analyze", "/nonexistent/graph.txt"}).code, 2);

    auto limit = run({"verify", "--corpus", "enumerate", "--n", "9"});
    EXPECT_EQ(limit.code, 3);
    auto le = Json::parse(limit.err)["error"];
    EXPECT_EQ(le["kind"], "oracle_limit");
    EXPECT_EQ(le["n"], 9);

    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, LimitsFlag)
{
    auto r = run({"--limits", "subset=4,partition=4,chromatic=4", "bounds"}, "IheA@GUAo\n");
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["bounds"]["alpha"]["applicable"], false);
    EXPECT_EQ(run({"--limits", "subset=x", "bounds"}, "C~").code, 1);
    EXPECT_EQ(run({"--limits", "widgets=3", "bounds"}, "C~").code, 1);
    EXPECT_EQ(run({"--limits", "enumerate=5", "verify", "--corpus", "enumerate", "--n", "6"}).code, 3);
}

TEST(Cli, FormatFlag)
{
    EXPECT_EQ(run({"--format", "edgelist", "analyze"}, "C~\n").code, 2);
    EXPECT_EQ(run({"--format", "graph6", "analyze"}, "C~\n").code, 0);
}

TEST(Binary, PipesGeneratorIntoAnalyzer)
{
    if (binary().empty())
        GTEST_SKIP() << "CLI binary path not compiled in";
    auto r = shell(binary() + " gen --family cycle --n 5 | " + binary() + " analyze --k 0");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["phi"], 2);
}

TEST(Binary, ExitStatusPropagates)
{
    if (binary().empty())
        GTEST_SKIP() << "CLI binary path not compiled in";
    EXPECT_EQ(shell("printf '3 1\\n0 0\\n' | " + binary() + " analyze").code, 2);
    EXPECT_EQ(shell(binary() + " verify --corpus enumerate --n 9").code, 3);
    EXPECT_EQ(shell(binary()).code, 1);
}
