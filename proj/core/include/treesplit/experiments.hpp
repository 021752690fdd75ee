#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treesplit/counting.hpp"
#include "treesplit/graph.hpp"
#include "treesplit/samplers.hpp"

namespace treesplit {

/// Least-squares line through the given (x, y) points; for splittability
/// sweeps x is log n and y is log probability. residual is the
/// root-mean-square fit residual.
struct ScalingFit {
    std::vector<std::pair<double, double>> points;
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
};

/// Requires at least 3 points.
ScalingFit fit_line(std::vector<std::pair<double, double>> points);

/// Parsed, validated experiment parameters. Every run is a pure function of
/// this struct: identical config and seed give byte-identical output files.
struct ExperimentConfig {
    std::string subcommand;
    std::string graph = "complete";  // complete|cycle|path|grid|gnm|gnp|ladder|gadget
    std::vector<int> n_list;
    int k = 2;
    double p = 0.5;
    std::int64_t m = -1;  // G(n,m) edge count; -1 derives m = round(p * C(N,2))
    int slack = 0;
    std::int64_t trials = 100000;
    std::int64_t steps = 10000;
    std::uint64_t seed = 0;
    bool fixed_graph = false;
    bool diameter = false;
    int threads = 1;
    std::string out;             // output file; empty writes to stdout
    std::string format = "csv";  // csv | json
};

/// Stringified result rows with a fixed column set plus named summary values
/// (fit slopes and the like). Cells are pre-formatted so rendering is
/// deterministic; exact counts are decimal strings.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> summary;
};

struct ScanRow {
    int n_vertices = 0;
    int k = 0;
    Estimate estimate;
    double mean_diameter = 0.0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::optional<ScalingFit> fit;  // over points with at least one success
    ResultTable table;
};

/// Splittability probability per graph size with a log-log scaling fit.
ScanResult run_splittability_scan(const ExperimentConfig& cfg);

struct HistogramRow {
    int size = 0;
    BigCount weight;
    bool is_min = false;
};

struct Figure2Result {
    std::vector<std::pair<int, std::vector<HistogramRow>>> tables;  // per N
    ResultTable table;
};

/// Total spanning tree weight of (i, N-i) splits of the complete graph.
Figure2Result run_figure2(const ExperimentConfig& cfg);

struct GadgetRow {
    int n = 0;
    int balanced_partitions = 0;
    double witness_log_weight = 0.0;
    double max_balanced_log_weight = 0.0;
    double log_weight_ratio = 0.0;  // witness minus best balanced
    bool chain_frozen = false;
};

struct SlackGadgetResult {
    std::vector<GadgetRow> rows;
    std::optional<ScalingFit> fit;  // log ratio against n
    ResultTable table;
};

/// Exact weights of the gadget's balanced partitions and its slack-1
/// witness, plus the frozen-chain verification.
SlackGadgetResult run_slack_gadget(const ExperimentConfig& cfg);

struct ChainRow {
    std::string chain;  // "up-down" or "recom"
    int n_vertices = 0;
    int k = 0;
    std::int64_t step = 0;
    double tv = 0.0;
};

struct ChainValidateResult {
    std::vector<ChainRow> rows;
    ResultTable table;
};

/// Ensemble total-variation distance to the oracle distribution at
/// log-spaced step counts, for the up-down walk (uniform over k-component
/// forests) and recombination (spanning tree weight over feasible
/// partitions). `trials` is the number of parallel chains.
ChainValidateResult run_chain_validate(const ExperimentConfig& cfg);

struct CompareRow {
    std::string algorithm;  // "split-tree", "up-down", "recom"
    int n_vertices = 0;
    std::int64_t units = 0;        // trees drawn or steps taken
    std::int64_t stage1_pass = 0;  // splittable trees / balanced visits / split proposals
    std::int64_t accepted = 0;
    double stage2_observed = 0.0;
    double stage2_expected = 0.0;  // 1/(k^(k-2) n^(2k-2)) on complete graphs, else NaN
    double seconds = 0.0;          // wall time; reported on the log stream only
};

struct AlgorithmCompareResult {
    std::vector<CompareRow> rows;
    ResultTable table;
};

/// Rejection-stage counts per algorithm. Wall-clock throughput goes to the
/// log stream so output files stay byte-reproducible.
AlgorithmCompareResult run_algorithm_compare(const ExperimentConfig& cfg, std::ostream& log);

std::string render_csv(const ResultTable& table);
std::string render_json(const ExperimentConfig& cfg, const ResultTable& table);

/// Runs the configured subcommand and writes rendered output to sink.
/// Throws std::invalid_argument for configuration errors and
/// budget_exhausted_error when a sampling budget runs out.
void run_experiment(const ExperimentConfig& cfg, std::ostream& sink, std::ostream& log);

/// Deterministic formatting used in all outputs ("%.10g").
std::string format_double(double v);

}  // namespace treesplit
