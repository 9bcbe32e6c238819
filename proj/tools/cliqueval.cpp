// Command-line front end. Talks to the library only through the C interface.

#include <cliqueval/cliqueval.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_findings = 1;
    constexpr int exit_usage = 2;

    struct UsageError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    struct GraphDeleter {
        void operator()(cqv_graph * g) const { cqv_graph_free(g); }
    };
    using GraphHandle = std::unique_ptr<cqv_graph, GraphDeleter>;

    struct StringDeleter {
        void operator()(char * s) const { cqv_string_free(s); }
    };
    using OwnedString = std::unique_ptr<char, StringDeleter>;

    void check(cqv_status status, const std::string & context)
    {
        if (status != CQV_OK)
            throw UsageError(context + ": " + cqv_status_name(status) + ": " + cqv_last_error());
    }

    auto read_input(const std::string & path) -> std::string
    {
        if (path == "-")
            return std::string(std::istreambuf_iterator<char>(std::cin), {});
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw UsageError("cannot open " + path);
        return std::string(std::istreambuf_iterator<char>(in), {});
    }

    struct GraphSource {
        std::string input;
        std::string gen;
        std::string format = "edgelist";
        bool one_based = false;
        std::optional<std::uint64_t> seed;

        void add_to(CLI::App & cmd)
        {
            auto * in = cmd.add_option("--input", input, "graph file, or - for stdin");
            auto * g = cmd.add_option("--gen", gen, "generator spec, e.g. turan:6,2 book:3 gnp:10,0.3");
            in->excludes(g);
            cmd.add_option("--format", format, "input format")->check(CLI::IsMember({"graph6", "edgelist"}));
            cmd.add_flag("--one-based", one_based, "edge-list ids and reported labels start at 1");
        }

        auto load() const -> GraphHandle
        {
            cqv_graph * raw = nullptr;
            if (input.empty() == gen.empty())
                throw UsageError("exactly one of --input or --gen is required");
            if (! gen.empty()) {
                if (gen.rfind("gnp:", 0) == 0 && ! seed)
                    throw UsageError("--seed is required for random generators");
                check(cqv_graph_generate(gen.c_str(), seed.value_or(0), &raw), "generator " + gen);
            }
            else {
                auto text = read_input(input);
                if (format == "graph6") {
                    auto line = text.substr(0, text.find('\n'));
                    check(cqv_graph_from_graph6(line.c_str(), &raw), input);
                }
                else
                    check(cqv_graph_from_edge_list_text(text.c_str(), one_based ? 1 : 0, &raw), input);
            }
            return GraphHandle(raw);
        }
    };

    struct Orders {
        std::vector<std::size_t> single;
        std::string range;

        void add_to(CLI::App & cmd)
        {
            auto * k = cmd.add_option("--k", single, "clique order (repeatable)");
            auto * r = cmd.add_option("--k-range", range, "orders A..B");
            k->excludes(r);
        }

        auto values() const -> std::vector<std::size_t>
        {
            if (range.empty())
                return single;
            auto dots = range.find("..");
            if (dots == std::string::npos)
                throw UsageError("--k-range expects A..B");
            std::size_t a = 0, b = 0;
            try {
                a = std::stoul(range.substr(0, dots));
                b = std::stoul(range.substr(dots + 2));
            }
            catch (const std::exception &) {
                throw UsageError("--k-range expects A..B with integers");
            }
            if (a < 1 || b < a)
                throw UsageError("--k-range needs 1 <= A <= B");
            std::vector<std::size_t> out;
            for (auto k = a; k <= b; ++k)
                out.push_back(k);
            return out;
        }
    };

    struct Budget {
        std::uint64_t nodes = 0;
        double secs = 0;

        void add_to(CLI::App & cmd)
        {
            cmd.add_option("--budget-nodes", nodes, "branch-and-bound node limit")->check(CLI::PositiveNumber);
            cmd.add_option("--budget-secs", secs, "solver wall-clock limit in seconds")->check(CLI::PositiveNumber);
        }

        auto value() const -> cqv_budget
        {
            auto b = cqv_default_budget();
            if (nodes)
                b.node_limit = nodes;
            if (secs > 0)
                b.time_limit_seconds = secs;
            return b;
        }
    };

    auto output_format(const std::string & name) -> cqv_format
    {
        return name == "csv" ? CQV_FORMAT_CSV : CQV_FORMAT_JSON;
    }

    auto finish(cqv_status status, char * report, std::size_t findings, const std::string & context) -> int
    {
        check(status, context);
        OwnedString owned(report);
        std::fwrite(owned.get(), 1, std::char_traits<char>::length(owned.get()), stdout);
        std::fflush(stdout);
        if (findings)
            std::cerr << findings << " finding(s) reported\n";
        return findings ? exit_findings : exit_ok;
    }

    auto parse_p_grid(const std::string & text) -> std::vector<double>
    {
        std::vector<double> out;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                std::size_t used = 0;
                out.push_back(std::stod(item, &used));
                if (used != item.size())
                    throw std::invalid_argument(item);
            }
            catch (const std::exception &) {
                throw UsageError("--p-grid: bad probability '" + item + "'");
            }
        }
        if (out.empty())
            throw UsageError("--p-grid is empty");
        return out;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Clique values, clique handshaking and Mantel-type bounds"};
    app.require_subcommand(1);
    std::string output = "json";

    auto * analyze = app.add_subcommand("analyze", "census, clique values, handshaking, bounds and proof chain for one graph");
    GraphSource analyze_source;
    analyze_source.add_to(*analyze);
    analyze->add_option("--seed", analyze_source.seed, "seed for random generators");
    Orders analyze_orders;
    analyze_orders.add_to(*analyze);
    bool chain = false;
    analyze->add_flag("--chain", chain, "evaluate the proof chain at the largest requested order");
    analyze->add_option("--output", output)->check(CLI::IsMember({"json", "csv"}));
    Budget analyze_budget;
    analyze_budget.add_to(*analyze);

    auto * verify = app.add_subcommand("verify", "exhaustive or random verification suites");
    std::optional<std::size_t> exhaustive;
    std::optional<std::uint64_t> random_count;
    std::optional<std::uint64_t> verify_seed;
    std::size_t max_n = 10;
    bool s_handshaking = false, s_kelly = false, s_bounds = false, s_oracle = false, s_chain = false;
    auto * ex = verify->add_option("--exhaustive", exhaustive, "every labeled graph on N vertices (N <= 7)");
    auto * rnd = verify->add_option("--random", random_count, "N seeded random instances");
    ex->excludes(rnd);
    verify->add_option("--seed", verify_seed, "seed for --random");
    verify->add_option("--max-n", max_n, "largest vertex count for --random instances");
    verify->add_flag("--handshaking", s_handshaking, "handshaking and census suites");
    verify->add_flag("--kelly", s_kelly, "Kelly identity suite");
    verify->add_flag("--bounds", s_bounds, "Mantel-type bound suites");
    verify->add_flag("--oracle", s_oracle, "packing solver against exhaustive search");
    verify->add_flag("--chain", s_chain, "proof-chain soundness suite");
    verify->add_option("--output", output)->check(CLI::IsMember({"json", "csv"}));
    Budget verify_budget;
    verify_budget.add_to(*verify);

    auto * hunt = app.add_subcommand("hunt", "random search for bound and proof-step violations");
    std::size_t hunt_n = 10;
    std::optional<double> hunt_p;
    std::string hunt_grid;
    std::uint64_t samples = 1000;
    std::optional<std::uint64_t> hunt_seed;
    std::string target = "bound";
    Orders hunt_orders;
    hunt->add_option("--vertices", hunt_n, "vertex count of sampled graphs");
    auto * p = hunt->add_option("--p", hunt_p, "edge probability");
    auto * grid = hunt->add_option("--p-grid", hunt_grid, "comma-separated edge probabilities, cycled over samples");
    p->excludes(grid);
    hunt->add_option("--samples", samples, "number of sampled graphs");
    hunt->add_option("--seed", hunt_seed, "random seed (required)");
    hunt->add_option("--target", target, "bound | steps | all | step:S1..S5");
    hunt_orders.add_to(*hunt);
    hunt->add_option("--output", output)->check(CLI::IsMember({"json", "csv"}));
    Budget hunt_budget;
    hunt_budget.add_to(*hunt);

    auto * gen = app.add_subcommand("gen", "write a generated graph");
    std::string gen_spec;
    std::string gen_format = "graph6";
    std::optional<std::uint64_t> gen_seed;
    bool gen_one_based = false;
    gen->add_option("spec", gen_spec, "generator spec, e.g. turan:6,2")->required();
    gen->add_option("--format", gen_format, "output format")->check(CLI::IsMember({"graph6", "edgelist"}));
    gen->add_option("--seed", gen_seed, "seed for random generators");
    gen->add_flag("--one-based", gen_one_based, "write 1-based edge-list ids");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        auto format = output_format(output);

        if (*analyze) {
            auto graph = analyze_source.load();
            auto orders = analyze_orders.values();
            cqv_analyze_options options{orders.data(), orders.size(), chain ? 1 : 0, analyze_source.one_based ? 1 : 0,
                analyze_budget.value()};
            char * report = nullptr;
            std::size_t findings = 0;
            auto status = cqv_analyze(graph.get(), &options, format, &report, &findings);
            return finish(status, report, findings, "analyze");
        }

        if (*verify) {
            if (! exhaustive && ! random_count)
                throw UsageError("verify needs --exhaustive N or --random N");
            if (random_count && ! verify_seed)
                throw UsageError("--seed is required with --random");
            cqv_verify_options options{};
            options.exhaustive = exhaustive ? 1 : 0;
            options.exhaustive_n = exhaustive.value_or(0);
            options.random_count = random_count.value_or(0);
            options.seed = verify_seed.value_or(0);
            options.random_max_n = max_n;
            options.suites = (s_handshaking ? CQV_SUITE_HANDSHAKING : 0) | (s_kelly ? CQV_SUITE_KELLY : 0)
                | (s_bounds ? CQV_SUITE_BOUNDS : 0) | (s_oracle ? CQV_SUITE_ORACLE : 0) | (s_chain ? CQV_SUITE_CHAIN : 0);
            options.budget = verify_budget.value();
            char * report = nullptr;
            std::size_t findings = 0;
            auto status = cqv_verify(&options, format, &report, &findings);
            return finish(status, report, findings, "verify");
        }

        if (*hunt) {
            if (! hunt_seed)
                throw UsageError("--seed is required for hunt");
            std::vector<double> probabilities = hunt_p ? std::vector<double>{*hunt_p}
                : hunt_grid.empty()                    ? std::vector<double>{0.3}
                                                       : parse_p_grid(hunt_grid);
            auto orders = hunt_orders.values();
            if (orders.empty())
                orders.push_back(2);
            cqv_hunt_options options{hunt_n, probabilities.data(), probabilities.size(), samples, *hunt_seed,
                orders.data(), orders.size(), target.c_str(), hunt_budget.value()};
            char * report = nullptr;
            std::size_t findings = 0;
            auto status = cqv_hunt(&options, format, &report, &findings);
            return finish(status, report, findings, "hunt");
        }

        if (*gen) {
            if (gen_spec.rfind("gnp:", 0) == 0 && ! gen_seed)
                throw UsageError("--seed is required for random generators");
            cqv_graph * raw = nullptr;
            check(cqv_graph_generate(gen_spec.c_str(), gen_seed.value_or(0), &raw), "generator " + gen_spec);
            GraphHandle graph(raw);
            char * text = nullptr;
            if (gen_format == "graph6") {
                check(cqv_graph_to_graph6(graph.get(), &text), "graph6");
                OwnedString owned(text);
                std::cout << owned.get() << '\n';
            }
            else {
                check(cqv_graph_to_edge_list_text(graph.get(), gen_one_based ? 1 : 0, &text), "edge list");
                OwnedString owned(text);
                std::cout << owned.get();
            }
            return exit_ok;
        }
    }
    catch (const UsageError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
