#pragma once

#include "phee/config.hpp"
#include "phee/pipeline.hpp"
#include "phee/stats.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace phee {

struct DatasetSpec {
    std::string name;
    std::string path;
    bool directed = false;
    double activation_probability = 0.01;
};

enum class AlgorithmType { Phee, Celf, Greedy, Degree, Random };

struct AlgorithmSpec {
    std::string name;
    AlgorithmType type = AlgorithmType::Phee;
    // Phee configuration (seed size and activation probability are filled
    // per cell from the plan grid and the dataset).
    RankingParams ranking;
    RdeParams rde;
    SaaParams saa;
    // Monte-Carlo budget of the greedy/CELF spread oracle.
    std::uint32_t oracle_runs = 10000;
};

struct ExperimentPlan {
    std::vector<DatasetSpec> datasets;
    std::vector<AlgorithmSpec> algorithms;
    std::vector<std::uint32_t> seed_sizes; // strictly increasing
    std::uint32_t mc_runs = 1000;          // spread-measurement budget
    std::uint32_t repetitions = 1;
    std::uint64_t master_seed = 0;
    void validate() const;
};

// One row per (dataset, algorithm, k) cell. With repetitions > 1 the spread
// mean is the mean of per-repetition means, the stderr combines the
// per-repetition standard errors, and seconds is the total wall time.
struct ResultRow {
    std::string dataset;
    std::string algorithm;
    std::uint32_t k = 0;
    double spread_mean = 0.0;
    double spread_stderr = 0.0;
    double seconds = 0.0;
    bool failed = false;
    std::string error;
    std::vector<std::int64_t> seed_set; // original ids, ascending (last repetition)
};

struct ResultTable {
    ExperimentPlan plan;
    std::vector<ResultRow> rows;
    bool any_failed() const;
};

struct RunOptions {
    std::string data_dir;      // overrides PHEE_DATA_DIR for relative paths
    unsigned num_threads = 0;  // 0 -> default
    std::ostream* log = nullptr;
};

// Cell seeds are content-derived (names, k, repetition hashed together with
// the master seed), so re-running any single cell in isolation, or a
// reordered plan, reproduces identical rows.
std::uint64_t cell_seed(std::uint64_t master_seed, const std::string& dataset,
                        const std::string& algorithm, std::uint32_t k,
                        std::uint32_t repetition);

ResultTable run_plan(const ExperimentPlan& plan, const RunOptions& options = {});

// Friedman mean ranks: per (dataset, k) the algorithms are ranked ascending
// by spread so the best one receives the highest rank, ties averaged;
// per-dataset mean over k, overall mean over datasets.
struct FriedmanReport {
    std::vector<std::string> algorithms;
    std::vector<std::string> datasets;
    std::vector<std::vector<double>> mean_rank; // [dataset][algorithm]
    std::vector<double> overall;                // [algorithm]
};
// Throws when the (dataset, algorithm, k) grid is incomplete, listing the
// missing cells.
FriedmanReport friedman_ranks(const ResultTable& table);

struct WilcoxonRow {
    std::string dataset;
    std::string algorithm_a;
    std::string algorithm_b;
    WilcoxonResult test;
};
// Pairs the two algorithms' spreads across the dataset's k grid.
WilcoxonRow wilcoxon_between(const ResultTable& table, const std::string& dataset,
                             const std::string& algorithm_a, const std::string& algorithm_b,
                             double alpha = 0.05);

// "dataset,algorithm,k,spread_mean,spread_stderr,seconds"; failed cells
// write nan spreads. include_timing=false drops the seconds column (wall
// time is the one legitimately non-reproducible field), which is the
// rendering used for byte-identity checks.
void write_results_csv(const ResultTable& table, std::ostream& out, bool include_timing = true);
void write_ranks_csv(const FriedmanReport& report, std::ostream& out);
void write_wilcoxon_csv(const std::vector<WilcoxonRow>& rows, std::ostream& out);

// Reads a results.csv back into a table (plan grid inferred from the rows).
ResultTable read_results_csv(std::istream& in);

// Writes results.csv, ranks.csv (when the grid is complete), wilcoxon.csv
// (when rows given) and report.json under dir.
void emit_report(const ResultTable& table, const std::vector<WilcoxonRow>& wilcoxon,
                 const std::string& dir);

// Plan construction from a parsed config file. Recognized top-level keys:
// seed_sizes, mc_runs, repetitions, master_seed. Sections: [dataset <name>]
// with path/directed/ap, [algorithm <name>] with type and algorithm keys.
// Unknown keys are errors naming the key.
ExperimentPlan plan_from_config(const ConfigFile& cfg);

} // namespace phee
