#pragma once

// Command-line front end. run_cli takes explicit streams so tests can drive it
// in-process; tools/smalllarge.cpp binds it to stdin/stdout/stderr.
//
// Exit codes: 0 ok, 1 usage, 2 parse, 3 oracle limit, 4 property failure.

#include <smalllarge/checker.hpp>
#include <smalllarge/generators.hpp>
#include <smalllarge/invariants.hpp>
#include <smalllarge/io.hpp>
#include <smalllarge/oracles.hpp>
#include <smalllarge/report.hpp>
#include <smalllarge/serialize.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace smalllarge
{
    enum ExitCode : int
    {
        ExitOk = 0,
        ExitUsage = 1,
        ExitParse = 2,
        ExitOracleLimit = 3,
        ExitPropertyFail = 4
    };

    namespace detail
    {
        inline auto read_source(const std::string & path, std::istream & in) -> std::string
        {
            if (path == "-")
                return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
            std::ifstream file(path, std::ios::binary);
            if (! file)
                throw ParseError("cannot read " + path);
            return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
        }

        /// "subset=20,partition=12,enumerate=7,chromatic=16"; omitted keys keep their defaults.
        inline auto parse_limits(const std::string & text) -> OracleLimits
        {
            OracleLimits limits;
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty())
                    continue;
                auto eq = item.find('=');
                if (eq == std::string::npos)
                    throw InvalidInput("--limits expects key=value pairs, got " + item);
                std::string key = item.substr(0, eq);
                int value = 0;
                try {
                    std::size_t used = 0;
                    value = std::stoi(item.substr(eq + 1), &used);
                    if (used != item.size() - eq - 1)
                        throw std::invalid_argument(item);
                }
                catch (const std::exception &) {
                    throw InvalidInput("--limits value is not an integer: " + item);
                }
                if (key == "subset")
                    limits.max_n_subset = value;
                else if (key == "partition")
                    limits.max_n_partition = value;
                else if (key == "enumerate")
                    limits.max_n_enumerate = value;
                else if (key == "chromatic")
                    limits.max_n_chromatic = value;
                else
                    throw InvalidInput("unknown --limits key: " + key);
            }
            limits.validate();
            return limits;
        }

        inline auto error_line(const std::string & kind, const std::string & message, int code, Json extra = nullptr)
            -> std::string
        {
            Json body = {{"kind", kind}, {"message", message}, {"exit_code", code}};
            if (! extra.is_null())
                body.update(extra);
            return Json{{"error", body}}.dump();
        }

        inline auto analyze_json(const Graph & g, int k) -> Json
        {
            auto numbers = small_large_numbers(g, k);
            auto phi = min_k_small_partition(g, k);
            auto big_omega = min_k_large_partition(g, k);
            auto split = smalllarge::small_large_split(g, k);
            Json variants = Json::object();
            for (auto kind : {SetKind::AlphaSmall, SetKind::BetaSmall, SetKind::AlphaLarge, SetKind::BetaLarge}) {
                auto vm = variant_max(g, kind);
                variants[SetClass{kind, 0}.name()] = {{"size", vm.size}, {"witness", vm.witness}};
            }
            return {{"n", g.size()}, {"e", g.edge_count()}, {"k", k}, {"S", numbers.small}, {"L", numbers.large},
                {"phi", phi.count}, {"omega_part", big_omega.count}, {"S_witness", numbers.small_witness},
                {"L_witness", numbers.large_witness}, {"phi_partition", partition_json(phi.partition)},
                {"omega_partition", partition_json(big_omega.partition)}, {"residue", residue(g)},
                {"welsh_powell", welsh_powell(g)}, {"variant_max", variants},
                {"split", {{"small", split.small}, {"large", split.large}}},
                {"degree_sequence", degree_sequence(g).values}};
        }

        inline auto parse_p_list(const std::string & text) -> std::vector<double>
        {
            std::vector<double> ps;
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    std::size_t used = 0;
                    double p = std::stod(item, &used);
                    if (used != item.size())
                        throw std::invalid_argument(item);
                    ps.push_back(p);
                }
                catch (const std::exception &) {
                    throw InvalidInput("not a probability: " + item);
                }
            }
            if (ps.empty())
                throw InvalidInput("--p needs at least one value");
            for (double p : ps)
                if (p < 0.0 || p > 1.0)
                    throw InvalidInput("edge probability must lie in [0, 1]");
            return ps;
        }
    }

    inline auto run_cli(int argc, const char * const * argv, std::istream & in, std::ostream & out,
        std::ostream & err) -> int
    {
        CLI::App app{"k-small / k-large partitions, bounds and exhaustive checks"};
        app.require_subcommand(1);
        std::string limits_text, format_text = "auto";
        app.add_option("--limits", limits_text, "oracle limits, e.g. subset=20,partition=12,enumerate=7,chromatic=16");
        app.add_option("--format", format_text, "input format")->check(CLI::IsMember({"auto", "edgelist", "graph6"}));

        std::string graph_path = "-";
        int k = 0;

        auto * analyze = app.add_subcommand("analyze", "S_k, L_k, phi_k, Omega_k with witnesses");
        analyze->add_option("graph", graph_path, "graph file, - for stdin");
        analyze->add_option("--k", k)->check(CLI::NonNegativeNumber);

        std::string class_name;
        auto * partition = app.add_subcommand("partition", "minimum k-small or k-large partition");
        partition->add_option("graph", graph_path);
        partition->add_option("--class", class_name)->required()->check(CLI::IsMember({"ksmall", "klarge"}));
        partition->add_option("--k", k)->check(CLI::NonNegativeNumber);

        auto * bounds = app.add_subcommand("bounds", "every bound with applicability and verdicts");
        bounds->add_option("graph", graph_path);
        bounds->add_option("--k", k)->check(CLI::NonNegativeNumber);

        std::string corpus, resume, p_text = "0.5";
        int n_value = -1, n_min = 1, k_max = 3;
        long long count = 0;
        std::uint64_t seed = 0;
        bool audit = false;
        auto * verify = app.add_subcommand("verify", "property suite or optimality audit over a graph or corpus");
        verify->add_option("graph", graph_path, "graph file (or graph list for --corpus file)");
        verify->add_option("--corpus", corpus)->check(CLI::IsMember({"enumerate", "gnp", "file"}));
        verify->add_option("--n", n_value, "largest n (enumerate) or n (gnp)");
        verify->add_option("--nmin", n_min, "smallest n for enumerate")->check(CLI::NonNegativeNumber);
        verify->add_option("--count", count)->check(CLI::NonNegativeNumber);
        verify->add_option("--p", p_text);
        verify->add_option("--seed", seed);
        verify->add_option("--kmax", k_max)->check(CLI::NonNegativeNumber);
        verify->add_flag("--audit", audit, "greedy vs exhaustive partition counts only");
        verify->add_option("--resume", resume);

        std::vector<std::string> targets;
        int hunt_nmax = 6, hunt_kmin = 0;
        std::string out_path;
        auto * hunt_cmd = app.add_subcommand("hunt", "counterexample search for the open statements");
        hunt_cmd->add_option("--target", targets)->check(CLI::IsMember({"conjecture_alpha_k", "phibeta_vs_cw"}));
        hunt_cmd->add_option("--nmin", n_min)->check(CLI::PositiveNumber);
        hunt_cmd->add_option("--nmax", hunt_nmax)->check(CLI::PositiveNumber);
        hunt_cmd->add_option("--kmin", hunt_kmin)->check(CLI::NonNegativeNumber);
        hunt_cmd->add_option("--kmax", k_max)->check(CLI::NonNegativeNumber);
        hunt_cmd->add_option("--random", count, "number of random graphs instead of exhaustive enumeration")
            ->check(CLI::NonNegativeNumber);
        hunt_cmd->add_option("--p", p_text, "comma-separated edge probabilities");
        hunt_cmd->add_option("--seed", seed);
        hunt_cmd->add_option("--resume", resume);
        hunt_cmd->add_option("--out", out_path, "append records to this file instead of stdout");

        std::string family, gen_format = "edgelist";
        FamilyParams params;
        auto * gen = app.add_subcommand("gen", "generate a graph family member");
        gen->add_option("--family", family)->required()->check(CLI::IsMember(family_names()));
        gen->add_option("--n", params.n);
        gen->add_option("--r", params.r);
        gen->add_option("--parts", params.parts);
        gen->add_option("--q", params.q);
        gen->add_option("--k", params.k);
        gen->add_option("--p", params.p);
        gen->add_option("--seed", params.seed);
        gen->add_option("--out", gen_format)->check(CLI::IsMember({"edgelist", "graph6"}));

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return ExitOk;
        }
        catch (const CLI::ParseError & e) {
            err << detail::error_line("usage", e.what(), ExitUsage) << '\n';
            return ExitUsage;
        }

        try {
            OracleLimits limits = detail::parse_limits(limits_text);
            GraphFormat format = parse_format(format_text);
            auto load = [&] { return parse_graph(detail::read_source(graph_path, in), format); };

            if (analyze->parsed()) {
                out << detail::analyze_json(load(), k).dump() << '\n';
                return ExitOk;
            }
            if (partition->parsed()) {
                auto g = load();
                auto p = class_name == "ksmall" ? min_k_small_partition(g, k) : min_k_large_partition(g, k);
                out << partition_json(p.partition).dump() << '\n';
                return ExitOk;
            }
            if (bounds->parsed()) {
                out << bounds_report(load(), k, limits).dump() << '\n';
                return ExitOk;
            }
            if (gen->parsed()) {
                out << serialize_graph(generate(family, params), parse_format(gen_format));
                return ExitOk;
            }
            if (verify->parsed()) {
                CorpusSpec spec;
                if (corpus.empty() || corpus == "file") {
                    spec.kind = CorpusSpec::Kind::List;
                    auto graphs = parse_graphs(detail::read_source(graph_path, in), format);
                    if (graphs.empty())
                        throw ParseError("no graphs in input");
                    for (std::size_t i = 0; i < graphs.size(); ++i)
                        spec.graphs.emplace_back(
                            graphs.size() == 1 ? to_graph6(graphs[i]) : "input:" + std::to_string(i), graphs[i]);
                }
                else if (corpus == "enumerate") {
                    if (n_value < 0)
                        throw InvalidInput("--corpus enumerate needs --n");
                    spec.kind = CorpusSpec::Kind::Enumerate;
                    spec.n_min = n_min;
                    spec.n_max = n_value;
                }
                else {
                    if (n_value < 0)
                        throw InvalidInput("--corpus gnp needs --n");
                    spec.kind = CorpusSpec::Kind::Random;
                    spec.n_min = spec.n_max = n_value;
                    spec.count = count;
                    spec.ps = detail::parse_p_list(p_text);
                    spec.seed = seed;
                }

                if (audit) {
                    AuditSummary summary;
                    for_each_graph(spec, resume, limits, [&](const CorpusItem & item, const std::string &) {
                        audit_graph(item.graph, item.id, k_max, summary, limits);
                    });
                    out << Json{{"audit", summary.to_json()}}.dump() << '\n';
                    return summary.mismatches == 0 ? ExitOk : ExitPropertyFail;
                }

                ResultWriter writer(out);
                run_corpus(
                    spec, resume, limits,
                    [&](const CorpusItem & item) {
                        auto results = property_suite(item.graph, k_max, item.id, limits);
                        for (const auto & name : missing_properties(results, k_max))
                            results.push_back({item.id, "catalog_complete", "every property reported", 0,
                                Status::Fail, "missing " + name, nullptr});
                        return results;
                    },
                    [&](const std::vector<CheckResult> & results, const std::string & next) {
                        writer.write_graph(results, next);
                    });
                writer.finish({{"mode", "verify"}, {"kmax", k_max},
                    {"resumed_from", resume.empty() ? Json(nullptr) : Json(resume)}});
                return writer.failures() == 0 ? ExitOk : ExitPropertyFail;
            }
            if (hunt_cmd->parsed()) {
                HuntConfig config;
                if (! targets.empty()) {
                    config.targets.clear();
                    for (const auto & t : targets)
                        config.targets.push_back(parse_hunt_target(t));
                }
                config.n_min = n_min;
                config.n_max = hunt_nmax;
                config.k_min = hunt_kmin;
                config.k_max = k_max;
                config.random = hunt_cmd->count("--random") > 0;
                config.count = count;
                config.ps = detail::parse_p_list(p_text);
                config.seed = seed;
                config.resume = resume;
                config.limits = limits;
                long long found = 0;
                if (out_path.empty())
                    found = smalllarge::hunt(config, out);
                else {
                    std::ofstream file(out_path, resume.empty() ? std::ios::trunc : std::ios::app);
                    if (! file)
                        throw InvalidInput("cannot write " + out_path);
                    found = smalllarge::hunt(config, file);
                }
                return found == 0 ? ExitOk : ExitPropertyFail;
            }
        }
        catch (const ParseError & e) {
            err << detail::error_line("parse", e.what(), ExitParse) << '\n';
            return ExitParse;
        }
        catch (const OracleLimitError & e) {
            err << detail::error_line("oracle_limit", e.what(), ExitOracleLimit, {{"n", e.n()}, {"limit", e.limit()}})
                << '\n';
            return ExitOracleLimit;
        }
        catch (const InvalidInput & e) {
            err << detail::error_line("usage", e.what(), ExitUsage) << '\n';
            return ExitUsage;
        }
        catch (const std::exception & e) {
            err << detail::error_line("internal", e.what(), ExitPropertyFail) << '\n';
            return ExitPropertyFail;
        }
        return ExitUsage;
    }
}
