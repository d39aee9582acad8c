#include <smalllarge/checker.hpp>
#include <smalllarge/generators.hpp>
#include <smalllarge/report.hpp>

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace smalllarge;

namespace
{
    int count_status(const std::vector<CheckResult> & results, Status s)
    {
        int c = 0;
        for (const auto & r : results)
            c += r.status == s ? 1 : 0;
        return c;
    }

    const CheckResult & find(const std::vector<CheckResult> & results, const std::string & name, int k = 0)
    {
        for (const auto & r : results)
            if (r.property == name && r.k == k)
                return r;
        throw std::runtime_error("no record for " + name);
    }

    std::vector<std::string> lines_of(const std::string & text)
    {
        std::vector<std::string> lines;
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);)
            lines.push_back(line);
        return lines;
    }
}

TEST(Catalog, NamesUniqueAndAnchored)
{
    auto catalog = property_catalog();
    std::set<std::string> names;
    for (const auto & p : catalog) {
        EXPECT_TRUE(names.insert(p.name).second) << p.name;
        EXPECT_FALSE(p.anchor.empty());
    }
    EXPECT_GE(catalog.size(), 50u);
}

TEST(Suite, CycleAllPass)
{
    auto results = property_suite(cycle_graph(5), 2, "C5");
    EXPECT_EQ(results.size(), 3 * property_catalog().size());
    EXPECT_EQ(count_status(results, Status::Fail), 0);
    EXPECT_TRUE(missing_properties(results, 2).empty());
    EXPECT_EQ(find(results, "regular_S_L_exact", 1).status, Status::Pass);
    EXPECT_EQ(find(results, "S_quadratic_upper", 2).status, Status::Pass);
}

TEST(Suite, StarQuarticCaseIsLoggedNotAsserted)
{
    auto results = property_suite(star_graph(9), 0, "K1,9");
    EXPECT_EQ(count_status(results, Status::Fail), 0);
    const auto & quartic = find(results, "phi_quartic_mean_lower");
    EXPECT_EQ(quartic.status, Status::Inapplicable);
    EXPECT_EQ(quartic.reason, "phi = 2");
    const auto & row = quartic.witness["exhibit"]["comparisons"][0];
    EXPECT_EQ(row["r"], 4);
    EXPECT_EQ(row["sum_deg_pow"], 6570);
    EXPECT_EQ(row["holds"], false);
    EXPECT_EQ(find(results, "phi_cubic_mean_lower").status, Status::Pass);
}

TEST(Suite, EmptyGraph)
{
    auto g = empty_graph(5);
    auto results = property_suite(g, 1, "E5");
    EXPECT_EQ(count_status(results, Status::Fail), 0);
    EXPECT_EQ(find(results, "trivial_partition_threshold", 0).status, Status::Pass);
    EXPECT_EQ(min_k_small_partition(g, 0).count, 1);
    EXPECT_EQ(min_k_large_partition(g, 0).count, 5);
}

TEST(Suite, KFreePropertiesInapplicableAboveZero)
{
    auto results = property_suite(cycle_graph(5), 1, "C5");
    const auto & r = find(results, "clique_cover_chain", 1);
    EXPECT_EQ(r.status, Status::Inapplicable);
    EXPECT_EQ(r.reason, "statement has no k parameter");
    EXPECT_EQ(find(results, "clique_cover_chain", 0).status, Status::Pass);
}

TEST(Suite, NullGraphAllInapplicable)
{
    auto results = property_suite(empty_graph(0), 0, "null");
    EXPECT_EQ(count_status(results, Status::Inapplicable), static_cast<int>(results.size()));
}

TEST(Suite, OracleLimitsMakePropertiesInapplicable)
{
    OracleLimits tight;
    tight.max_n_subset = 4;
    tight.max_n_partition = 4;
    tight.max_n_chromatic = 4;
    auto results = property_suite(petersen_graph(), 0, "P", tight);
    EXPECT_EQ(count_status(results, Status::Fail), 0);
    EXPECT_EQ(find(results, "small_partition_minimal").status, Status::Inapplicable);
    EXPECT_EQ(find(results, "regular_phi_Omega_exact").status, Status::Pass);
}

TEST(Suite, SharpnessFamilies)
{
    for (const auto & g : {obs7_g1(7, 0), two_cliques_matching(4), two_cliques_cone(4), petersen_graph(),
             turan_graph(6, 3), regular_circulant(10, 3)}) {
        auto results = property_suite(g, 2, to_graph6(g));
        for (const auto & r : results)
            EXPECT_NE(r.status, Status::Fail) << result_json(r).dump();
    }
}

TEST(Suite, RandomGraphsUpToTen)
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = gnp(7 + static_cast<int>(seed % 4), 0.5, seed);
        for (const auto & r : property_suite(g, 2, "gnp"))
            ASSERT_NE(r.status, Status::Fail) << result_json(r).dump();
    }
}

TEST(Suite, PropertiesAtUsesOneRecordPerProperty)
{
    auto results = properties_at(cycle_graph(5), 2);
    EXPECT_EQ(results.size(), property_catalog().size());
    EXPECT_EQ(find(results, "clique_cover_chain", 0).status, Status::Pass);
    EXPECT_EQ(find(results, "S_degree_window", 2).status, Status::Pass);
    EXPECT_THROW(check_property(cycle_graph(5), "no_such_property", 0), InvalidInput);
}

TEST(Suite, MissingPropertiesDetected)
{
    auto results = property_suite(cycle_graph(5), 0);
    results.erase(results.begin());
    auto missing = missing_properties(results, 0);
    ASSERT_EQ(missing.size(), 1u);
    EXPECT_EQ(missing[0], property_catalog()[0].name + "@k=0");
}

TEST(Audit, SmallGraphsHaveNoMismatches)
{
    AuditSummary summary;
    audit_graph(complete_graph(4), "K4", 0, summary);
    EXPECT_EQ(summary.checks, 2);
    EXPECT_EQ(summary.mismatches, 0);
    for (int n = 1; n <= 4; ++n) {
        LabeledGraphs all(n);
        all.for_each([&](std::uint64_t, const Graph & g) { audit_graph(g, "g", 2, summary); });
    }
    EXPECT_EQ(summary.mismatches, 0);
    EXPECT_EQ(summary.graphs, 1 + 1 + 2 + 8 + 64);
    OracleLimits tight;
    tight.max_n_partition = 3;
    EXPECT_THROW(audit_graph(complete_graph(4), "K4", 0, summary, tight), OracleLimitError);
}

TEST(Hunt, PaperInstances)
{
    HuntConfig cone;
    cone.targets = {HuntTarget::PhiBetaVsCw};
    auto r = hunt_graph(two_cliques_cone(4), "cone", cone);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].status, Status::Pass);

    HuntConfig star;
    star.k_min = star.k_max = 1;
    auto s = hunt_graph(star_graph(9), "star", star);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].status, Status::Pass);
}

TEST(Hunt, PhiBetaCounterexampleIsDoubleVerifiedAndReplayable)
{
    HuntConfig config;
    config.targets = {HuntTarget::PhiBetaVsCw};
    auto g = build_graph(3, {{0, 1}});
    auto r = hunt_graph(g, "K1+K2", config);
    ASSERT_EQ(r[0].status, Status::Fail);
    EXPECT_EQ(r[0].witness["values"]["verified"], true);
    EXPECT_EQ(r[0].witness["values"]["phi_beta"], 2);
    auto replay = hunt_graph(from_graph6(r[0].witness["graph6"].get<std::string>()), "K1+K2", config);
    EXPECT_EQ(result_json(replay[0]).dump(), result_json(r[0]).dump());
}

TEST(Hunt, StreamSummaryAndExitCount)
{
    HuntConfig config;
    config.n_max = 4;
    config.k_max = 2;
    std::ostringstream out;
    EXPECT_EQ(hunt(config, out), 0);
    auto lines = lines_of(out.str());
    auto summary = Json::parse(lines.back())["summary"];
    EXPECT_EQ(summary["graphs"], 1 + 2 + 8 + 64);
    EXPECT_EQ(summary["records"], 3 * (1 + 2 + 8 + 64));
    EXPECT_EQ(summary["counterexamples"], 0);
}

TEST(Hunt, ConfigValidation)
{
    HuntConfig c;
    c.n_max = 0;
    EXPECT_THROW(c.validate(), InvalidInput);
    HuntConfig big;
    big.targets = {HuntTarget::PhiBetaVsCw};
    big.n_max = 13;
    EXPECT_THROW(big.validate(), OracleLimitError);
    EXPECT_THROW(parse_hunt_target("nope"), InvalidInput);
}

TEST(Corpus, ResumeTokensContinueExactly)
{
    CorpusSpec spec;
    spec.kind = CorpusSpec::Kind::Enumerate;
    spec.n_min = 1;
    spec.n_max = 4;
    std::vector<std::string> ids, tokens;
    for_each_graph(spec, "", OracleLimits{}, [&](const CorpusItem & item, const std::string & next) {
        ids.push_back(item.id);
        tokens.push_back(next);
    });
    EXPECT_EQ(ids.size(), 1u + 2 + 8 + 64);
    for (std::size_t cut : {0ul, 1ul, 5ul, 10ul, 40ul}) {
        std::vector<std::string> rest;
        for_each_graph(spec, tokens[cut], OracleLimits{},
            [&](const CorpusItem & item, const std::string &) { rest.push_back(item.id); });
        EXPECT_EQ(rest, std::vector<std::string>(ids.begin() + cut + 1, ids.end()));
    }
    EXPECT_THROW(for_each_graph(spec, "random:3", OracleLimits{}, [](const CorpusItem &, const std::string &) {}),
        InvalidInput);
}

TEST(Corpus, RandomCorpusIsSeeded)
{
    CorpusSpec spec;
    spec.kind = CorpusSpec::Kind::Random;
    spec.n_min = 5;
    spec.n_max = 12;
    spec.count = 30;
    spec.ps = {0.2, 0.8};
    spec.seed = 99;
    std::vector<std::string> first, second;
    for_each_graph(spec, "", OracleLimits{},
        [&](const CorpusItem & item, const std::string &) { first.push_back(item.id + to_graph6(item.graph)); });
    for_each_graph(spec, "random:10", OracleLimits{},
        [&](const CorpusItem & item, const std::string &) { second.push_back(item.id + to_graph6(item.graph)); });
    EXPECT_EQ(first.size(), 30u);
    EXPECT_EQ(second, std::vector<std::string>(first.begin() + 10, first.end()));
}

TEST(Writer, CheckpointsCarryResumeTokens)
{
    std::ostringstream out;
    ResultWriter writer(out);
    CheckResult r{"g", "p", "a", 0, Status::Pass, "", nullptr};
    std::vector<CheckResult> batch(4000, r);
    writer.write_graph(batch, "list:1");
    writer.write_graph(batch, "list:2");
    writer.write_graph(batch, "list:3");
    writer.write_graph(batch, "list:4");
    writer.finish();
    int checkpoints = 0;
    for (const auto & line : lines_of(out.str())) {
        auto j = Json::parse(line);
        if (j.contains("checkpoint")) {
            ++checkpoints;
            EXPECT_EQ(j["checkpoint"]["resume"], "list:3");
            EXPECT_EQ(j["checkpoint"]["records"], 12000);
        }
    }
    EXPECT_EQ(checkpoints, 1);
}

TEST(Writer, ParallelRunMatchesSequentialRun)
{
    CorpusSpec spec;
    spec.kind = CorpusSpec::Kind::Enumerate;
    spec.n_min = 1;
    spec.n_max = 4;
    auto run = [&](const char * threads) {
        setenv("SMALLLARGE_THREADS", threads, 1);
        std::ostringstream out;
        ResultWriter writer(out);
        run_corpus(
            spec, "", OracleLimits{}, [](const CorpusItem & item) { return property_suite(item.graph, 1, item.id); },
            [&](const std::vector<CheckResult> & results, const std::string & next) {
                writer.write_graph(results, next);
            });
        writer.finish();
        return out.str();
    };
    auto one = run("1");
    auto four = run("4");
    unsetenv("SMALLLARGE_THREADS");
    EXPECT_EQ(one, four);
}

TEST(Report, StarEntries)
{
    auto j = bounds_report(star_graph(9), 0);
    EXPECT_EQ(j["bounds"]["d4_pow4"]["value"]["num"], 657);
    EXPECT_EQ(j["bounds"]["d4_pow4"]["value"]["den"], 1);
    EXPECT_EQ(j["bounds"]["phi_power_mean_r4"]["applicable"], false);
    EXPECT_EQ(j["bounds"]["favaron_as_written"]["applicable"], false);
    EXPECT_EQ(j["bounds"]["S"]["value"], 9);
    EXPECT_FALSE(j["verdicts"].empty());
}

TEST(Report, ConeObservationAndChains)
{
    auto j = bounds_report(two_cliques_cone(4), 0);
    const auto & b = j["bounds"];
    EXPECT_EQ(b["phi"]["value"], 3);
    EXPECT_EQ(b["phi_beta"]["value"], 2);
    EXPECT_EQ(b["caro_wei_complement"]["value"]["num"], 13);
    EXPECT_EQ(b["caro_wei_complement"]["value"]["den"], 5);
    EXPECT_EQ(b["phibeta_vs_cw_complement"]["value"]["holds"], true);
    for (const auto & v : j["verdicts"])
        EXPECT_NE(v["status"], "fail") << v.dump();
}

TEST(Report, EmptyGraphAndLimits)
{
    auto j = bounds_report(empty_graph(5), 0);
    EXPECT_EQ(j["bounds"]["phi"]["value"], 1);
    EXPECT_EQ(j["bounds"]["Omega"]["value"], 5);
    OracleLimits tight;
    tight.max_n_subset = 3;
    tight.max_n_partition = 3;
    tight.max_n_chromatic = 3;
    auto t = bounds_report(cycle_graph(5), 0, tight);
    EXPECT_EQ(t["bounds"]["alpha"]["applicable"], false);
    EXPECT_EQ(t["bounds"]["alpha"]["reason"], "oracle limit exceeded");
    EXPECT_THROW(bounds_report(empty_graph(0), 0), InvalidInput);
}
