#include "phee/experiment.hpp"

#include "phee/baselines.hpp"
#include "phee/edge_list.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace phee {
namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void check_name(const std::string& what, const std::string& name) {
    if (name.empty()) throw std::invalid_argument(what + " name is empty");
    if (name.find(',') != std::string::npos || name.find('\n') != std::string::npos)
        throw std::invalid_argument(what + " name '" + name + "' contains a separator");
}

std::string cell_key(const std::string& dataset, const std::string& algorithm, std::uint32_t k) {
    return dataset + '\x1f' + algorithm + '\x1f' + std::to_string(k);
}

const char* algorithm_type_name(AlgorithmType t) {
    switch (t) {
        case AlgorithmType::Phee: return "phee";
        case AlgorithmType::Celf: return "celf";
        case AlgorithmType::Greedy: return "greedy";
        case AlgorithmType::Degree: return "degree";
        default: return "random";
    }
}

AlgorithmType parse_algorithm_type(const std::string& s) {
    if (s == "phee") return AlgorithmType::Phee;
    if (s == "celf") return AlgorithmType::Celf;
    if (s == "greedy") return AlgorithmType::Greedy;
    if (s == "degree") return AlgorithmType::Degree;
    if (s == "random") return AlgorithmType::Random;
    throw std::invalid_argument("unknown algorithm type '" + s + "'");
}

} // namespace

void ExperimentPlan::validate() const {
    if (datasets.empty()) throw std::invalid_argument("plan has no datasets");
    if (algorithms.empty()) throw std::invalid_argument("plan has no algorithms");
    if (seed_sizes.empty()) throw std::invalid_argument("plan has no seed sizes");
    for (std::size_t i = 1; i < seed_sizes.size(); ++i)
        if (seed_sizes[i] <= seed_sizes[i - 1])
            throw std::invalid_argument("seed sizes must be strictly increasing");
    if (mc_runs < 1) throw std::invalid_argument("mc_runs must be >= 1");
    if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");

    for (const auto& ds : datasets) {
        check_name("dataset", ds.name);
        if (ds.path.empty()) throw std::invalid_argument("dataset '" + ds.name + "' has no path");
        if (!(ds.activation_probability > 0.0 && ds.activation_probability <= 1.0))
            throw std::invalid_argument("dataset '" + ds.name + "': activation probability must be in (0,1]");
    }
    for (const auto& algo : algorithms) check_name("algorithm", algo.name);

    const auto unique_names = [](auto& list, const char* what) {
        std::vector<std::string> names;
        for (const auto& item : list) names.push_back(item.name);
        std::sort(names.begin(), names.end());
        if (std::adjacent_find(names.begin(), names.end()) != names.end())
            throw std::invalid_argument(std::string("duplicate ") + what + " name");
    };
    unique_names(datasets, "dataset");
    unique_names(algorithms, "algorithm");
}

bool ResultTable::any_failed() const {
    return std::any_of(rows.begin(), rows.end(), [](const ResultRow& r) { return r.failed; });
}

std::uint64_t cell_seed(std::uint64_t master_seed, const std::string& dataset,
                        const std::string& algorithm, std::uint32_t k,
                        std::uint32_t repetition) {
    std::uint64_t h = fnv1a_u64(master_seed, 0xcbf29ce484222325ull);
    h = fnv1a(dataset, h);
    h = fnv1a(algorithm, h);
    h = fnv1a_u64(k, h);
    h = fnv1a_u64(repetition, h);
    return mix64(h);
}

namespace {

std::string resolve_path(const std::string& path, const std::string& data_dir) {
    if (path.empty() || std::filesystem::path(path).is_absolute()) return path;
    std::string dir = data_dir;
    if (dir.empty())
        if (const char* env = std::getenv("PHEE_DATA_DIR")) dir = env;
    if (dir.empty()) return path;
    return (std::filesystem::path(dir) / path).string();
}

std::vector<VertexId> run_algorithm(const Graph& g, const AlgorithmSpec& algo,
                                    const DatasetSpec& ds, std::uint32_t k,
                                    std::uint64_t seed, unsigned threads) {
    switch (algo.type) {
        case AlgorithmType::Phee: {
            PheeParams pp;
            pp.ranking = algo.ranking;
            pp.rde = algo.rde;
            pp.saa = algo.saa;
            pp.rde.seed_set_size = k;
            pp.rde.activation_probability = ds.activation_probability;
            pp.master_seed = seed;
            return run_phee(g, pp).saa.seed_set;
        }
        case AlgorithmType::Celf:
        case AlgorithmType::Greedy: {
            const SpreadOracle oracle = monte_carlo_oracle(
                g, ds.activation_probability, algo.oracle_runs, mix64(seed + 0x101), threads);
            return algo.type == AlgorithmType::Celf ? celf_im(g, k, oracle).seed_set
                                                    : greedy_im(g, k, oracle).seed_set;
        }
        case AlgorithmType::Degree:
            return degree_topk(g, k);
        default: {
            Rng rng = Rng::stream(seed, 0x202);
            return random_seed_set(g, k, rng);
        }
    }
}

} // namespace

ResultTable run_plan(const ExperimentPlan& plan, const RunOptions& options) {
    plan.validate();
    ResultTable table;
    table.plan = plan;

    for (const DatasetSpec& ds : plan.datasets) {
        Graph graph = Graph::from_edges(1, {}, false); // placeholder until load
        std::string load_error;
        try {
            graph = load_edge_list_file(resolve_path(ds.path, options.data_dir), ds.directed);
        } catch (const std::exception& err) {
            load_error = err.what();
        }

        for (const AlgorithmSpec& algo : plan.algorithms)
            for (std::uint32_t k : plan.seed_sizes) {
                ResultRow row;
                row.dataset = ds.name;
                row.algorithm = algo.name;
                row.k = k;
                if (!load_error.empty()) {
                    row.failed = true;
                    row.error = load_error;
                    table.rows.push_back(std::move(row));
                    continue;
                }

                const auto start = std::chrono::steady_clock::now();
                try {
                    double mean_sum = 0.0, se2_sum = 0.0;
                    std::vector<VertexId> seeds;
                    for (std::uint32_t rep = 0; rep < plan.repetitions; ++rep) {
                        const std::uint64_t seed =
                            cell_seed(plan.master_seed, ds.name, algo.name, k, rep);
                        seeds = run_algorithm(graph, algo, ds, k, seed, options.num_threads);
                        DiffusionParams dp;
                        dp.activation_probability = ds.activation_probability;
                        dp.runs = plan.mc_runs;
                        dp.master_seed = mix64(seed + 0x707);
                        const SpreadEstimate est =
                            estimate_spread(graph, seeds, dp, options.num_threads);
                        mean_sum += est.mean;
                        se2_sum += est.std_error * est.std_error;
                    }
                    row.spread_mean = mean_sum / plan.repetitions;
                    row.spread_stderr = std::sqrt(se2_sum) / plan.repetitions;
                    for (VertexId v : seeds) row.seed_set.push_back(graph.original_id(v));
                    std::sort(row.seed_set.begin(), row.seed_set.end());
                } catch (const std::exception& err) {
                    row.failed = true;
                    row.error = err.what();
                }
                row.seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

                if (options.log)
                    *options.log << ds.name << '/' << algo.name << "/k=" << k
                                 << (row.failed ? " failed: " + row.error
                                                : " spread=" + fmt_double(row.spread_mean))
                                 << '\n';
                table.rows.push_back(std::move(row));
            }
    }
    return table;
}

namespace {

struct GridIndex {
    std::vector<std::string> datasets;
    std::vector<std::string> algorithms;
    std::vector<std::uint32_t> seed_sizes;
    std::map<std::string, const ResultRow*> cells;
};

GridIndex build_grid(const ResultTable& table) {
    GridIndex grid;
    const auto add_unique = [](auto& vec, const auto& value) {
        if (std::find(vec.begin(), vec.end(), value) == vec.end()) vec.push_back(value);
    };
    for (const ResultRow& row : table.rows) {
        add_unique(grid.datasets, row.dataset);
        add_unique(grid.algorithms, row.algorithm);
        add_unique(grid.seed_sizes, row.k);
        grid.cells[cell_key(row.dataset, row.algorithm, row.k)] = &row;
    }
    std::sort(grid.seed_sizes.begin(), grid.seed_sizes.end());
    return grid;
}

const ResultRow& grid_cell(const GridIndex& grid, const std::string& dataset,
                           const std::string& algorithm, std::uint32_t k,
                           std::vector<std::string>* missing) {
    static const ResultRow sentinel;
    const auto it = grid.cells.find(cell_key(dataset, algorithm, k));
    if (it == grid.cells.end() || it->second->failed) {
        if (missing)
            missing->push_back(dataset + "/" + algorithm + "/k=" + std::to_string(k));
        return sentinel;
    }
    return *it->second;
}

} // namespace

FriedmanReport friedman_ranks(const ResultTable& table) {
    const GridIndex grid = build_grid(table);
    std::vector<std::string> missing;

    FriedmanReport report;
    report.algorithms = grid.algorithms;
    report.datasets = grid.datasets;
    const std::size_t a = grid.algorithms.size();

    for (const std::string& ds : grid.datasets) {
        std::vector<double> rank_sum(a, 0.0);
        for (std::uint32_t k : grid.seed_sizes) {
            std::vector<double> spreads(a, 0.0);
            for (std::size_t i = 0; i < a; ++i)
                spreads[i] = grid_cell(grid, ds, grid.algorithms[i], k, &missing).spread_mean;
            const std::vector<double> ranks = average_ranks(spreads);
            for (std::size_t i = 0; i < a; ++i) rank_sum[i] += ranks[i];
        }
        for (double& r : rank_sum) r /= static_cast<double>(grid.seed_sizes.size());
        report.mean_rank.push_back(std::move(rank_sum));
    }

    if (!missing.empty()) {
        std::string joined;
        for (const std::string& cell : missing) joined += (joined.empty() ? "" : ", ") + cell;
        throw std::runtime_error("incomplete result grid; missing cells: " + joined);
    }

    report.overall.assign(a, 0.0);
    for (const auto& per_dataset : report.mean_rank)
        for (std::size_t i = 0; i < a; ++i) report.overall[i] += per_dataset[i];
    for (double& r : report.overall) r /= static_cast<double>(report.datasets.size());
    return report;
}

WilcoxonRow wilcoxon_between(const ResultTable& table, const std::string& dataset,
                             const std::string& algorithm_a, const std::string& algorithm_b,
                             double alpha) {
    const GridIndex grid = build_grid(table);
    std::vector<std::string> missing;
    std::vector<double> x, y;
    for (std::uint32_t k : grid.seed_sizes) {
        x.push_back(grid_cell(grid, dataset, algorithm_a, k, &missing).spread_mean);
        y.push_back(grid_cell(grid, dataset, algorithm_b, k, &missing).spread_mean);
    }
    if (!missing.empty()) {
        std::string joined;
        for (const std::string& cell : missing) joined += (joined.empty() ? "" : ", ") + cell;
        throw std::runtime_error("wilcoxon pairing incomplete; missing cells: " + joined);
    }
    WilcoxonRow row;
    row.dataset = dataset;
    row.algorithm_a = algorithm_a;
    row.algorithm_b = algorithm_b;
    row.test = wilcoxon_signed_rank(x, y, alpha);
    return row;
}

void write_results_csv(const ResultTable& table, std::ostream& out, bool include_timing) {
    out << "dataset,algorithm,k,spread_mean,spread_stderr";
    if (include_timing) out << ",seconds";
    out << '\n';
    for (const ResultRow& row : table.rows) {
        const double mean = row.failed ? std::nan("") : row.spread_mean;
        const double se = row.failed ? std::nan("") : row.spread_stderr;
        out << row.dataset << ',' << row.algorithm << ',' << row.k << ','
            << fmt_double(mean) << ',' << fmt_double(se);
        if (include_timing) out << ',' << fmt_double(row.seconds);
        out << '\n';
    }
}

void write_ranks_csv(const FriedmanReport& report, std::ostream& out) {
    out << "algorithm";
    for (const std::string& ds : report.datasets) out << ',' << ds;
    out << ",overall\n";
    for (std::size_t i = 0; i < report.algorithms.size(); ++i) {
        out << report.algorithms[i];
        for (const auto& per_dataset : report.mean_rank) out << ',' << fmt_double(per_dataset[i]);
        out << ',' << fmt_double(report.overall[i]) << '\n';
    }
}

void write_wilcoxon_csv(const std::vector<WilcoxonRow>& rows, std::ostream& out) {
    out << "dataset,algorithm_a,algorithm_b,better,worse,zeros,w_plus,w_minus,p_value,exact,decision\n";
    for (const WilcoxonRow& row : rows) {
        out << row.dataset << ',' << row.algorithm_a << ',' << row.algorithm_b << ','
            << row.test.better << ',' << row.test.worse << ',' << row.test.zeros << ','
            << fmt_double(row.test.w_plus) << ',' << fmt_double(row.test.w_minus) << ','
            << fmt_double(row.test.p_value) << ',' << (row.test.exact ? "true" : "false") << ','
            << significance_symbol(row.test.decision) << '\n';
    }
}

ResultTable read_results_csv(std::istream& in) {
    ResultTable table;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("results csv is empty");
    const bool with_timing = line == "dataset,algorithm,k,spread_mean,spread_stderr,seconds";
    if (!with_timing && line != "dataset,algorithm,k,spread_mean,spread_stderr")
        throw std::runtime_error("unrecognized results csv header: " + line);

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const auto comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (fields.size() != (with_timing ? 6u : 5u))
            throw std::runtime_error("results csv line " + std::to_string(line_no) +
                                     ": wrong field count");
        ResultRow row;
        row.dataset = fields[0];
        row.algorithm = fields[1];
        row.k = static_cast<std::uint32_t>(config_int("k", fields[2]));
        row.spread_mean = std::strtod(fields[3].c_str(), nullptr);
        row.spread_stderr = std::strtod(fields[4].c_str(), nullptr);
        if (with_timing) row.seconds = std::strtod(fields[5].c_str(), nullptr);
        row.failed = std::isnan(row.spread_mean);
        table.rows.push_back(std::move(row));
    }
    return table;
}

void emit_report(const ResultTable& table, const std::vector<WilcoxonRow>& wilcoxon,
                 const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const auto open = [&](const char* file) {
        std::ofstream out(fs::path(dir) / file);
        if (!out) throw std::runtime_error(std::string("cannot write ") + file + " under " + dir);
        return out;
    };

    {
        auto out = open("results.csv");
        write_results_csv(table, out, true);
    }

    nlohmann::json j;
    j["format_version"] = 1;
    j["master_seed"] = table.plan.master_seed;
    j["mc_runs"] = table.plan.mc_runs;
    j["repetitions"] = table.plan.repetitions;
    j["seed_sizes"] = table.plan.seed_sizes;
    j["datasets"] = nlohmann::json::array();
    for (const DatasetSpec& ds : table.plan.datasets)
        j["datasets"].push_back({{"name", ds.name},
                                 {"path", ds.path},
                                 {"directed", ds.directed},
                                 {"activation_probability", ds.activation_probability}});
    j["algorithms"] = nlohmann::json::array();
    for (const AlgorithmSpec& algo : table.plan.algorithms)
        j["algorithms"].push_back({{"name", algo.name}, {"type", algorithm_type_name(algo.type)}});
    j["results"] = nlohmann::json::array();
    for (const ResultRow& row : table.rows) {
        nlohmann::json r{{"dataset", row.dataset}, {"algorithm", row.algorithm},
                         {"k", row.k},             {"failed", row.failed},
                         {"seconds", row.seconds}};
        if (row.failed) {
            r["error"] = row.error;
        } else {
            r["spread_mean"] = row.spread_mean;
            r["spread_stderr"] = row.spread_stderr;
            r["seed_set"] = row.seed_set;
        }
        j["results"].push_back(std::move(r));
    }

    try {
        const FriedmanReport ranks = friedman_ranks(table);
        auto out = open("ranks.csv");
        write_ranks_csv(ranks, out);
        nlohmann::json f;
        f["algorithms"] = ranks.algorithms;
        f["datasets"] = ranks.datasets;
        f["mean_rank"] = ranks.mean_rank;
        f["overall"] = ranks.overall;
        j["friedman"] = std::move(f);
    } catch (const std::runtime_error&) {
        // Incomplete grid: ranks are not computable; the CSV carries the rows.
    }

    if (!wilcoxon.empty()) {
        auto out = open("wilcoxon.csv");
        write_wilcoxon_csv(wilcoxon, out);
        j["wilcoxon"] = nlohmann::json::array();
        for (const WilcoxonRow& row : wilcoxon)
            j["wilcoxon"].push_back({{"dataset", row.dataset},
                                     {"algorithm_a", row.algorithm_a},
                                     {"algorithm_b", row.algorithm_b},
                                     {"better", row.test.better},
                                     {"worse", row.test.worse},
                                     {"zeros", row.test.zeros},
                                     {"w_plus", row.test.w_plus},
                                     {"w_minus", row.test.w_minus},
                                     {"p_value", row.test.p_value},
                                     {"exact", row.test.exact},
                                     {"decision", significance_symbol(row.test.decision)}});
    }

    auto out = open("report.json");
    out << j.dump(2) << '\n';
}

ExperimentPlan plan_from_config(const ConfigFile& cfg) {
    ExperimentPlan plan;
    bool have_sizes = false;

    for (const auto& [key, value] : cfg.top_level) {
        if (key == "seed_sizes") {
            plan.seed_sizes = config_u32_list(key, value);
            have_sizes = true;
        } else if (key == "mc_runs") {
            plan.mc_runs = static_cast<std::uint32_t>(config_int(key, value));
        } else if (key == "repetitions") {
            plan.repetitions = static_cast<std::uint32_t>(config_int(key, value));
        } else if (key == "master_seed") {
            plan.master_seed = static_cast<std::uint64_t>(config_int(key, value));
        } else {
            throw std::invalid_argument("unknown plan key '" + key + "'");
        }
    }
    if (!have_sizes) throw std::invalid_argument("plan is missing seed_sizes");

    for (const ConfigSection& section : cfg.sections) {
        if (section.kind == "dataset") {
            DatasetSpec ds;
            ds.name = section.name;
            for (const auto& [key, value] : section.entries) {
                if (key == "path") ds.path = value;
                else if (key == "directed") ds.directed = config_bool(key, value);
                else if (key == "ap") ds.activation_probability = config_double(key, value);
                else throw std::invalid_argument("unknown dataset key '" + key + "'");
            }
            plan.datasets.push_back(std::move(ds));
        } else if (section.kind == "algorithm") {
            AlgorithmSpec algo;
            algo.name = section.name;
            for (const auto& [key, value] : section.entries) {
                if (key == "type") algo.type = parse_algorithm_type(value);
                else if (key == "ranking") algo.ranking.method = parse_rank_method(value);
                else if (key == "lambda") algo.ranking.mdd_lambda = config_double(key, value);
                else if (key == "radius") algo.ranking.gci_radius = static_cast<std::uint32_t>(config_int(key, value));
                else if (key == "pop") algo.rde.population_size = static_cast<std::uint32_t>(config_int(key, value));
                else if (key == "gmax") algo.rde.max_generations = static_cast<std::uint32_t>(config_int(key, value));
                else if (key == "div_factor") algo.rde.diversity_factor = config_double(key, value);
                else if (key == "mp") algo.rde.mutation_probability = config_double(key, value);
                else if (key == "cp") algo.rde.crossover_probability = config_double(key, value);
                else if (key == "p_low") algo.rde.division_p_low = config_double(key, value);
                else if (key == "p_high") algo.rde.division_p_high = config_double(key, value);
                else if (key == "t_initial") algo.saa.initial_temperature = config_double(key, value);
                else if (key == "t_final") algo.saa.final_temperature = config_double(key, value);
                else if (key == "theta") algo.saa.cooling_coefficient = config_double(key, value);
                else if (key == "moves") algo.saa.moves_per_level = static_cast<std::uint32_t>(config_int(key, value));
                else if (key == "min_decrement") algo.saa.min_decrement = config_double(key, value);
                else if (key == "max_levels") algo.saa.max_levels = static_cast<std::uint64_t>(config_int(key, value));
                else if (key == "oracle_runs") algo.oracle_runs = static_cast<std::uint32_t>(config_int(key, value));
                else throw std::invalid_argument("unknown algorithm key '" + key + "'");
            }
            plan.algorithms.push_back(std::move(algo));
        } else {
            throw std::invalid_argument("unknown section kind '" + section.kind + "'");
        }
    }

    plan.validate();
    return plan;
}

} // namespace phee
