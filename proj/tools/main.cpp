#include "phee/baselines.hpp"
#include "phee/edge_list.hpp"
#include "phee/experiment.hpp"
#include "phee/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace phee;

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

// "-" or empty selects stdout.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
    } else {
        auto out = open_output(path);
        fn(out);
    }
}

Graph load_graph(const std::string& path, bool directed) {
    return load_edge_list_file(path, directed);
}

std::vector<VertexId> read_seed_file(const Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open seed file " + path);
    std::vector<VertexId> seeds;
    std::int64_t label;
    while (in >> label) {
        const auto id = g.internal_id(label);
        if (!id) throw std::runtime_error("seed vertex " + std::to_string(label) + " not in graph");
        seeds.push_back(*id);
    }
    if (seeds.empty()) throw std::runtime_error("seed file " + path + " is empty");
    return seeds;
}

std::vector<std::int64_t> original_ids_sorted(const Graph& g, const std::vector<VertexId>& seeds) {
    std::vector<std::int64_t> out;
    out.reserve(seeds.size());
    for (VertexId v : seeds) out.push_back(g.original_id(v));
    std::sort(out.begin(), out.end());
    return out;
}

struct RankArgs {
    std::string graph_path, method = "mdd", output;
    bool directed = false;
    double lambda = 0.7;
    std::uint32_t radius = 3;
};

int cmd_rank(const RankArgs& args) {
    const Graph g = load_graph(args.graph_path, args.directed);
    RankingParams params;
    params.method = parse_rank_method(args.method);
    params.mdd_lambda = args.lambda;
    params.gci_radius = args.radius;
    const VertexOrdering ordering = rank_vertices(g, params);

    with_output(args.output, [&](std::ostream& out) {
        out << "original_id,score,rank\n";
        for (std::size_t i = 0; i < ordering.order.size(); ++i) {
            const VertexId v = ordering.order[i];
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.10g", ordering.scores[v]);
            out << g.original_id(v) << ',' << buf << ',' << i + 1 << '\n';
        }
    });
    return 0;
}

struct SimulateArgs {
    std::string graph_path, seed_file, output;
    bool directed = false;
    double p = 0.01;
    std::uint32_t runs = 1000;
    std::uint64_t master_seed = 0;
    unsigned threads = 0;
};

int cmd_simulate(const SimulateArgs& args) {
    const Graph g = load_graph(args.graph_path, args.directed);
    const std::vector<VertexId> seeds = read_seed_file(g, args.seed_file);
    DiffusionParams params;
    params.activation_probability = args.p;
    params.runs = args.runs;
    params.master_seed = args.master_seed;
    const SpreadEstimate est = estimate_spread(g, seeds, params, args.threads);

    nlohmann::json j{{"mean", est.mean}, {"std_error", est.std_error}, {"runs", est.runs}};
    with_output(args.output, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
    return 0;
}

struct SeedArgs {
    std::string graph_path, algo = "phee", stage = "full", output;
    bool directed = false;
    std::uint32_t k = 10;
    double ap = 0.05;
    PheeParams phee;
    std::string ranking = "mdd";
    std::uint32_t oracle_runs = 10000;
    std::uint32_t evaluate_runs = 0;
    std::uint64_t master_seed = 0;
    unsigned threads = 0;
};

int cmd_seed(const SeedArgs& args) {
    const Graph g = load_graph(args.graph_path, args.directed);

    PheeParams params = args.phee;
    params.ranking.method = parse_rank_method(args.ranking);
    params.rde.seed_set_size = args.k;
    params.rde.activation_probability = args.ap;
    params.master_seed = args.master_seed;

    if (args.stage == "rde") {
        const VertexOrdering svet = rank_vertices(g, params.ranking);
        Rng rng = Rng::stream(params.master_seed, 0);
        const CandidateSet csset = rand_rde(g, svet, params.rde, rng);
        with_output(args.output, [&](std::ostream& out) {
            out << "original_id,occurrences\n";
            for (std::size_t i = 0; i < csset.vertices.size(); ++i)
                out << g.original_id(csset.vertices[i]) << ',' << csset.occurrences[i] << '\n';
        });
        return 0;
    }
    if (args.stage != "full") throw std::runtime_error("unknown stage '" + args.stage + "'");

    std::vector<VertexId> seeds;
    nlohmann::json j;
    j["algorithm"] = args.algo;
    j["k"] = args.k;

    if (args.algo == "phee") {
        const PheeResult result = run_phee(g, params);
        seeds = result.seed_set();
        j["edv"] = result.saa.edv;
        j["initial_edv"] = result.saa.initial_edv;
        j["annealing_levels"] = result.saa.levels;
        j["accepted_moves"] = result.saa.accepted_moves;
        j["candidate_set_size"] = result.csset.vertices.size();
    } else if (args.algo == "celf" || args.algo == "greedy") {
        const SpreadOracle oracle =
            monte_carlo_oracle(g, args.ap, args.oracle_runs, args.master_seed, args.threads);
        const GreedyResult result =
            args.algo == "celf" ? celf_im(g, args.k, oracle) : greedy_im(g, args.k, oracle);
        seeds = result.seed_set;
        j["oracle_calls"] = result.evaluations;
    } else if (args.algo == "degree") {
        seeds = degree_topk(g, args.k);
    } else if (args.algo == "random") {
        Rng rng = Rng::stream(args.master_seed, 0);
        seeds = random_seed_set(g, args.k, rng);
    } else {
        throw std::runtime_error("unknown algorithm '" + args.algo + "'");
    }

    j["seed_set"] = original_ids_sorted(g, seeds);
    if (args.evaluate_runs > 0) {
        DiffusionParams dp;
        dp.activation_probability = args.ap;
        dp.runs = args.evaluate_runs;
        dp.master_seed = mix64(args.master_seed + 0x707);
        const SpreadEstimate est = estimate_spread(g, seeds, dp, args.threads);
        j["spread"] = {{"mean", est.mean}, {"std_error", est.std_error}, {"runs", est.runs}};
    }
    with_output(args.output, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
    return 0;
}

struct ExperimentArgs {
    std::string plan_path, output_dir = "report", data_dir;
    std::vector<std::string> pairs;
    unsigned threads = 0;
    bool quiet = false;
    std::optional<std::uint32_t> mc_runs, repetitions;
    std::optional<std::uint64_t> master_seed;
};

int cmd_experiment_run(const ExperimentArgs& args) {
    ExperimentPlan plan = plan_from_config(parse_config_file(args.plan_path));
    if (args.mc_runs) plan.mc_runs = *args.mc_runs;
    if (args.repetitions) plan.repetitions = *args.repetitions;
    if (args.master_seed) plan.master_seed = *args.master_seed;

    RunOptions options;
    options.data_dir = args.data_dir;
    options.num_threads = args.threads;
    if (!args.quiet) options.log = &std::cerr;

    const ResultTable table = run_plan(plan, options);

    std::vector<WilcoxonRow> wilcoxon;
    for (const std::string& pair : args.pairs) {
        const auto comma = pair.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("--wilcoxon expects 'algorithmA,algorithmB'");
        const std::string a = pair.substr(0, comma);
        const std::string b = pair.substr(comma + 1);
        for (const DatasetSpec& ds : plan.datasets)
            wilcoxon.push_back(wilcoxon_between(table, ds.name, a, b));
    }

    emit_report(table, wilcoxon, args.output_dir);
    if (table.any_failed()) {
        std::cerr << "some cells failed; see " << args.output_dir << "/report.json\n";
        return 1;
    }
    return 0;
}

int cmd_stats_friedman(const std::string& results_path, const std::string& output) {
    std::ifstream in(results_path);
    if (!in) throw std::runtime_error("cannot open " + results_path);
    const ResultTable table = read_results_csv(in);
    const FriedmanReport report = friedman_ranks(table);
    with_output(output, [&](std::ostream& out) { write_ranks_csv(report, out); });
    return 0;
}

int cmd_stats_wilcoxon(const std::string& results_path, const std::string& pair,
                       double alpha, const std::string& output) {
    const auto comma = pair.find(',');
    if (comma == std::string::npos) throw std::runtime_error("--pair expects 'algorithmA,algorithmB'");
    const std::string a = pair.substr(0, comma);
    const std::string b = pair.substr(comma + 1);

    std::ifstream in(results_path);
    if (!in) throw std::runtime_error("cannot open " + results_path);
    const ResultTable table = read_results_csv(in);

    std::vector<std::string> datasets;
    for (const ResultRow& row : table.rows)
        if (std::find(datasets.begin(), datasets.end(), row.dataset) == datasets.end())
            datasets.push_back(row.dataset);

    std::vector<WilcoxonRow> rows;
    for (const std::string& ds : datasets) rows.push_back(wilcoxon_between(table, ds, a, b, alpha));
    with_output(output, [&](std::ostream& out) { write_wilcoxon_csv(rows, out); });
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PHEE influence-maximization toolkit"};
    app.require_subcommand(1);

    RankArgs rank_args;
    auto* rank = app.add_subcommand("rank", "Rank vertices by estimated influence");
    rank->add_option("--graph", rank_args.graph_path, "edge list file (optionally gzipped)")->required();
    rank->add_flag("--directed", rank_args.directed, "treat edges as directed");
    rank->add_option("--method", rank_args.method, "mdd|gci|kshell|degree");
    rank->add_option("--lambda", rank_args.lambda, "mixed-degree weight of removed links");
    rank->add_option("--radius", rank_args.radius, "gci neighborhood radius");
    rank->add_option("--output", rank_args.output, "output file, - for stdout");

    SimulateArgs sim_args;
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo influence spread of a seed set");
    sim->add_option("--graph", sim_args.graph_path)->required();
    sim->add_flag("--directed", sim_args.directed);
    sim->add_option("--seeds", sim_args.seed_file, "file of original vertex ids")->required();
    sim->add_option("--p", sim_args.p, "activation probability")->required();
    sim->add_option("--runs", sim_args.runs, "simulation count");
    sim->add_option("--seed", sim_args.master_seed, "master seed");
    sim->add_option("--threads", sim_args.threads, "worker threads (0 = auto)");
    sim->add_option("--output", sim_args.output);

    SeedArgs seed_args;
    auto* seed = app.add_subcommand("seed", "Select a seed set");
    seed->add_option("--graph", seed_args.graph_path)->required();
    seed->add_flag("--directed", seed_args.directed);
    seed->add_option("--k", seed_args.k, "seed set size")->required();
    seed->add_option("--algo", seed_args.algo, "phee|celf|greedy|degree|random");
    seed->add_option("--stage", seed_args.stage, "full|rde (rde emits the candidate set)");
    seed->add_option("--p", seed_args.ap, "activation probability");
    seed->add_option("--ranking", seed_args.ranking, "mdd|gci|kshell|degree");
    seed->add_option("--lambda", seed_args.phee.ranking.mdd_lambda);
    seed->add_option("--radius", seed_args.phee.ranking.gci_radius);
    seed->add_option("--pop", seed_args.phee.rde.population_size);
    seed->add_option("--gmax", seed_args.phee.rde.max_generations);
    seed->add_option("--div-factor", seed_args.phee.rde.diversity_factor);
    seed->add_option("--mp", seed_args.phee.rde.mutation_probability);
    seed->add_option("--cp", seed_args.phee.rde.crossover_probability);
    seed->add_option("--p-low", seed_args.phee.rde.division_p_low);
    seed->add_option("--p-high", seed_args.phee.rde.division_p_high);
    seed->add_option("--t-initial", seed_args.phee.saa.initial_temperature);
    seed->add_option("--t-final", seed_args.phee.saa.final_temperature);
    seed->add_option("--theta", seed_args.phee.saa.cooling_coefficient);
    seed->add_option("--moves", seed_args.phee.saa.moves_per_level);
    seed->add_option("--max-levels", seed_args.phee.saa.max_levels);
    seed->add_option("--oracle-runs", seed_args.oracle_runs, "MC budget for celf/greedy");
    seed->add_option("--evaluate-runs", seed_args.evaluate_runs,
                     "estimate the final set's spread with this many runs");
    seed->add_option("--seed", seed_args.master_seed, "master seed");
    seed->add_option("--threads", seed_args.threads);
    seed->add_option("--output", seed_args.output);

    ExperimentArgs exp_args;
    auto* experiment = app.add_subcommand("experiment", "Batch evaluation harness");
    auto* run = experiment->add_subcommand("run", "Execute an experiment plan");
    run->add_option("plan", exp_args.plan_path, "plan config file")->required();
    run->add_option("--output-dir", exp_args.output_dir);
    run->add_option("--data-dir", exp_args.data_dir, "base for relative dataset paths");
    run->add_option("--threads", exp_args.threads);
    run->add_option("--mc-runs", exp_args.mc_runs);
    run->add_option("--repetitions", exp_args.repetitions);
    run->add_option("--master-seed", exp_args.master_seed);
    run->add_option("--wilcoxon", exp_args.pairs, "algorithm pair 'A,B' (repeatable)");
    run->add_flag("--quiet", exp_args.quiet, "suppress progress log");
    experiment->require_subcommand(1);

    auto* stats = app.add_subcommand("stats", "Statistics over a results csv");
    std::string friedman_input, friedman_output;
    auto* friedman = stats->add_subcommand("friedman", "Friedman mean ranks");
    friedman->add_option("results", friedman_input, "results.csv")->required();
    friedman->add_option("--output", friedman_output);
    std::string wilcoxon_input, wilcoxon_pair, wilcoxon_output;
    double wilcoxon_alpha = 0.05;
    auto* wilcoxon = stats->add_subcommand("wilcoxon", "Wilcoxon signed-rank per dataset");
    wilcoxon->add_option("results", wilcoxon_input, "results.csv")->required();
    wilcoxon->add_option("--pair", wilcoxon_pair, "algorithmA,algorithmB")->required();
    wilcoxon->add_option("--alpha", wilcoxon_alpha);
    wilcoxon->add_option("--output", wilcoxon_output);
    stats->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (rank->parsed()) return cmd_rank(rank_args);
        if (sim->parsed()) return cmd_simulate(sim_args);
        if (seed->parsed()) return cmd_seed(seed_args);
        if (experiment->parsed() && run->parsed()) return cmd_experiment_run(exp_args);
        if (stats->parsed() && friedman->parsed())
            return cmd_stats_friedman(friedman_input, friedman_output);
        if (stats->parsed() && wilcoxon->parsed())
            return cmd_stats_wilcoxon(wilcoxon_input, wilcoxon_pair, wilcoxon_alpha, wilcoxon_output);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 0;
}
