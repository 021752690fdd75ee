#include "treesplit/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "treesplit/errors.hpp"
#include "treesplit/generators.hpp"
#include "treesplit/oracle.hpp"

namespace treesplit {

namespace {

// Stream indices reserved for auxiliary draws; trial streams use indices
// below 2^63, so these never collide.
constexpr std::uint64_t kGraphStream = 0x8000000000000000ULL;
constexpr std::uint64_t kChainStreamA = kGraphStream + 1;
constexpr std::uint64_t kChainStreamB = kGraphStream + 2;
constexpr std::uint64_t kChainStreamC = kGraphStream + 3;

std::int64_t pair_count(std::int64_t n) { return n * (n - 1) / 2; }

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

bool is_random_family(const std::string& family) { return family == "gnm" || family == "gnp"; }

// Number of vertices the family produces for a given n-list entry.
int family_vertices(const std::string& family, int n) {
    if (family == "grid") return n * n;
    if (family == "gadget") return 3 * n;
    return n;
}

// Deterministic families (and random families pinned by fixed_graph).
Graph build_fixed_graph(const ExperimentConfig& cfg, int n, const RngStream& per_n) {
    if (cfg.graph == "complete") return make_complete(n);
    if (cfg.graph == "cycle") return make_cycle(n);
    if (cfg.graph == "path") return make_grid(n, 1);
    if (cfg.graph == "grid") return make_grid(n, n);
    if (cfg.graph == "ladder") return make_triangular_ladder(n);
    if (cfg.graph == "gadget") return make_slack_gadget(n).graph;
    if (cfg.graph == "gnm") {
        const std::int64_t m =
            cfg.m >= 0 ? cfg.m : std::llround(cfg.p * static_cast<double>(pair_count(n)));
        RngStream stream = per_n.derive(kGraphStream);
        return gen_gnm(n, m, true, stream);
    }
    if (cfg.graph == "gnp") {
        RngStream stream = per_n.derive(kGraphStream);
        return gen_gnp(n, cfg.p, true, stream);
    }
    throw std::invalid_argument("unknown graph family: " + cfg.graph);
}

std::string format_count(const BigCount& value) { return value.get_str(); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.10g", v);
    return buffer;
}

ScalingFit fit_line(std::vector<std::pair<double, double>> points) {
    if (points.size() < 3) throw std::invalid_argument("fit_line: need at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(points.size());
    for (auto [x, y] : points) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    ScalingFit fit;
    fit.points = std::move(points);
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (auto [x, y] : fit.points) {
        const double r = y - (fit.slope * x + fit.intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

// ---------------------------------------------------------------------------
// splittability-scan

ScanResult run_splittability_scan(const ExperimentConfig& cfg) {
    require(!cfg.n_list.empty(), "splittability-scan: --n-list required");
    require(cfg.k >= 1, "splittability-scan: k must be >= 1");
    require(cfg.trials >= 1, "splittability-scan: trials must be >= 1");
    require(cfg.threads >= 1, "splittability-scan: threads must be >= 1");

    RngStream master(cfg.seed);
    ScanResult result;
    for (int n : cfg.n_list) {
        const int vertices = family_vertices(cfg.graph, n);
        require(vertices >= 1 && vertices % cfg.k == 0,
                "splittability-scan: vertex count must be divisible by k");
        RngStream per_n = master.derive(static_cast<std::uint64_t>(n));

        TreeSource source;
        if (cfg.graph == "complete") {
            source = [vertices](RngStream& rng) { return random_labeled_tree(vertices, rng); };
        } else if (is_random_family(cfg.graph) && !cfg.fixed_graph) {
            // A fresh graph per trial: the estimand is the expectation of the
            // splittable fraction over the random-graph family.
            const std::string family = cfg.graph;
            const double p = cfg.p;
            const std::int64_t m =
                cfg.m >= 0 ? cfg.m : std::llround(cfg.p * static_cast<double>(pair_count(n)));
            require(family != "gnm" || (m >= n - 1 && m <= pair_count(n)),
                    "splittability-scan: infeasible edge count for a connected graph");
            source = [family, n, m, p](RngStream& rng) {
                Graph g = family == "gnm" ? gen_gnm(n, m, true, rng) : gen_gnp(n, p, true, rng);
                return wilson_ust(g, rng);
            };
        } else {
            auto g = std::make_shared<Graph>(build_fixed_graph(cfg, n, per_n));
            source = [g](RngStream& rng) { return wilson_ust(*g, rng); };
        }

        SplittabilityResult detail = estimate_splittability_detailed(
            source, cfg.k, cfg.trials, per_n, cfg.threads, cfg.diameter);
        result.rows.push_back({vertices, cfg.k, detail.estimate, detail.mean_diameter});
    }

    std::vector<std::pair<double, double>> points;
    for (const ScanRow& row : result.rows) {
        if (row.estimate.successes > 0)
            points.emplace_back(std::log(static_cast<double>(row.n_vertices) / cfg.k),
                                std::log(row.estimate.point));
    }
    if (points.size() >= 3) result.fit = fit_line(std::move(points));

    ResultTable& t = result.table;
    t.columns = {"graph",       "n_vertices", "k",       "trials", "successes",
                 "probability", "ci_low",     "ci_high", "mean_diameter"};
    for (const ScanRow& row : result.rows) {
        t.rows.push_back({cfg.graph, std::to_string(row.n_vertices), std::to_string(row.k),
                          std::to_string(row.estimate.trials),
                          std::to_string(row.estimate.successes),
                          format_double(row.estimate.point), format_double(row.estimate.ci_low),
                          format_double(row.estimate.ci_high),
                          cfg.diameter ? format_double(row.mean_diameter) : std::string()});
    }
    if (result.fit) {
        t.summary.emplace_back("fit_points", std::to_string(result.fit->points.size()));
        t.summary.emplace_back("fit_slope", format_double(result.fit->slope));
        t.summary.emplace_back("fit_intercept", format_double(result.fit->intercept));
        t.summary.emplace_back("fit_residual_rms", format_double(result.fit->residual));
    }
    return result;
}

// ---------------------------------------------------------------------------
// figure2

Figure2Result run_figure2(const ExperimentConfig& cfg) {
    require(!cfg.n_list.empty(), "figure2: --n-list required");
    Figure2Result result;
    ResultTable& t = result.table;
    t.columns = {"n", "i", "weight", "is_min"};
    for (int n : cfg.n_list) {
        require(n >= 2 && n % 2 == 0, "figure2: N must be even and >= 2");
        auto histogram = oracle::split_size_weight_histogram(n);
        std::size_t argmin = 0;
        for (std::size_t i = 1; i < histogram.size(); ++i) {
            if (histogram[i].second < histogram[argmin].second) argmin = i;
        }
        std::vector<HistogramRow> rows;
        for (std::size_t i = 0; i < histogram.size(); ++i) {
            rows.push_back({histogram[i].first, histogram[i].second, i == argmin});
            t.rows.push_back({std::to_string(n), std::to_string(histogram[i].first),
                              format_count(histogram[i].second), yes_no(i == argmin)});
        }
        t.summary.emplace_back("min_index_" + std::to_string(n),
                               std::to_string(histogram[argmin].first));
        result.tables.emplace_back(n, std::move(rows));
    }
    return result;
}

// ---------------------------------------------------------------------------
// slack-gadget

namespace {

// Every recombination proposal from a balanced gadget partition is identity:
// for each pair of pieces, the only connected (n, n)-partition of their union
// is the pair itself.
bool gadget_pair_resplits_unique(const Graph& g, const Partition& p, int n) {
    for (int i = 0; i < p.num_blocks(); ++i) {
        for (int j = i + 1; j < p.num_blocks(); ++j) {
            std::vector<int> union_vertices = p.blocks[i];
            union_vertices.insert(union_vertices.end(), p.blocks[j].begin(), p.blocks[j].end());
            std::sort(union_vertices.begin(), union_vertices.end());
            std::vector<int> index_of(g.num_vertices(), -1);
            for (std::size_t pos = 0; pos < union_vertices.size(); ++pos)
                index_of[union_vertices[pos]] = static_cast<int>(pos);

            const Graph sub = induced_subgraph(g, union_vertices);
            auto resplits = oracle::enumerate_connected_partitions(sub, {n, n});

            Partition current;
            for (int b : {i, j}) {
                std::vector<int> block;
                for (int v : p.blocks[b]) block.push_back(index_of[v]);
                current.blocks.push_back(std::move(block));
            }
            canonicalize(current);
            if (resplits.size() != 1 || !(resplits.front() == current)) return false;
        }
    }
    return true;
}

}  // namespace

SlackGadgetResult run_slack_gadget(const ExperimentConfig& cfg) {
    require(!cfg.n_list.empty(), "slack-gadget: --n-list required");
    SlackGadgetResult result;
    for (int n : cfg.n_list) {
        const SlackGadget gadget = make_slack_gadget(n);
        const auto balanced = oracle::gadget_balanced_partitions(gadget);

        GadgetRow row;
        row.n = n;
        row.balanced_partitions = static_cast<int>(balanced.size());
        double max_log = -std::numeric_limits<double>::infinity();
        for (const Partition& p : balanced)
            max_log = std::max(max_log, log_big(partition_weight(gadget.graph, p)));
        row.max_balanced_log_weight = max_log;
        row.witness_log_weight =
            log_big(partition_weight(gadget.graph, gadget.witness_partition));
        row.log_weight_ratio = row.witness_log_weight - row.max_balanced_log_weight;
        bool frozen = true;
        for (const Partition& p : balanced) {
            if (!gadget_pair_resplits_unique(gadget.graph, p, n)) {
                frozen = false;
                break;
            }
        }
        row.chain_frozen = frozen;
        result.rows.push_back(row);
    }

    if (result.rows.size() >= 3) {
        std::vector<std::pair<double, double>> points;
        for (const GadgetRow& row : result.rows)
            points.emplace_back(static_cast<double>(row.n), row.log_weight_ratio);
        result.fit = fit_line(std::move(points));
    }

    ResultTable& t = result.table;
    t.columns = {"n",      "n_vertices",       "balanced_partitions",      "witness_log_weight",
                 "max_balanced_log_weight", "log_weight_ratio", "chain_frozen"};
    for (const GadgetRow& row : result.rows) {
        t.rows.push_back({std::to_string(row.n), std::to_string(3 * row.n),
                          std::to_string(row.balanced_partitions),
                          format_double(row.witness_log_weight),
                          format_double(row.max_balanced_log_weight),
                          format_double(row.log_weight_ratio), yes_no(row.chain_frozen)});
    }
    if (result.fit) {
        t.summary.emplace_back("ratio_slope", format_double(result.fit->slope));
        t.summary.emplace_back("ratio_intercept", format_double(result.fit->intercept));
        t.summary.emplace_back("ratio_residual_rms", format_double(result.fit->residual));
    }
    return result;
}

// ---------------------------------------------------------------------------
// chain-validate

namespace {

std::vector<std::int64_t> checkpoint_steps(std::int64_t max_steps) {
    std::vector<std::int64_t> steps;
    for (std::int64_t s = 1; s < max_steps; s *= 2) steps.push_back(s);
    steps.push_back(max_steps);
    return steps;
}

// All nondecreasing size vectors of length k with entries in [lo, hi]
// summing to total.
void size_multisets(int k, int total, int lo, int hi, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
    if (k == 0) {
        if (total == 0) out.push_back(current);
        return;
    }
    const int start = current.empty() ? lo : std::max(lo, current.back());
    for (int s = start; s <= hi; ++s) {
        // remaining k-1 entries are each >= s and <= hi
        if (total - s < (k - 1) * s || total - s > (k - 1) * hi) continue;
        current.push_back(s);
        size_multisets(k - 1, total - s, lo, hi, current, out);
        current.pop_back();
    }
}

// Aggregates ensemble occupancy counts over chains, splitting chains across
// threads; chain c always uses stream index c, so thread count never changes
// the result.
template <typename StepState, typename StepFn, typename IndexFn>
std::vector<std::vector<std::int64_t>> ensemble_counts(
    std::int64_t chains, const std::vector<std::int64_t>& checkpoints, int threads,
    const RngStream& master, const StepState& start, const StepFn& step, const IndexFn& index,
    std::size_t num_states) {
    threads = std::max(1, std::min<int>(threads, static_cast<int>(chains)));
    std::vector<std::vector<std::vector<std::int64_t>>> local(
        threads, std::vector<std::vector<std::int64_t>>(
                     checkpoints.size(), std::vector<std::int64_t>(num_states, 0)));
    std::vector<std::exception_ptr> errors(threads);

    auto worker = [&](int w) {
        try {
            for (std::int64_t c = w; c < chains; c += threads) {
                RngStream stream = master.derive(static_cast<std::uint64_t>(c));
                StepState state = start;
                std::size_t cp = 0;
                for (std::int64_t s = 1; cp < checkpoints.size(); ++s) {
                    state = step(state, stream);
                    if (s == checkpoints[cp]) {
                        ++local[w][cp][index(state)];
                        ++cp;
                    }
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    std::vector<std::vector<std::int64_t>> counts(
        checkpoints.size(), std::vector<std::int64_t>(num_states, 0));
    for (int w = 0; w < threads; ++w)
        for (std::size_t cp = 0; cp < checkpoints.size(); ++cp)
            for (std::size_t s = 0; s < num_states; ++s) counts[cp][s] += local[w][cp][s];
    return counts;
}

double total_variation(const std::vector<std::int64_t>& counts,
                       const std::vector<double>& target, std::int64_t chains) {
    double tv = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        tv += std::abs(static_cast<double>(counts[i]) / static_cast<double>(chains) - target[i]);
    }
    return tv / 2;
}

}  // namespace

ChainValidateResult run_chain_validate(const ExperimentConfig& cfg) {
    require(!cfg.n_list.empty(), "chain-validate: --n-list required");
    require(cfg.trials >= 1, "chain-validate: trials (number of chains) must be >= 1");
    require(cfg.steps >= 1, "chain-validate: steps must be >= 1");
    require(cfg.k >= 2, "chain-validate: k must be >= 2");

    RngStream master(cfg.seed);
    ChainValidateResult result;
    const auto checkpoints = checkpoint_steps(cfg.steps);

    for (int n : cfg.n_list) {
        RngStream per_n = master.derive(static_cast<std::uint64_t>(n));
        const Graph g = build_fixed_graph(cfg, n, per_n);
        const int vertices = g.num_vertices();
        require(vertices % cfg.k == 0, "chain-validate: vertex count must be divisible by k");
        const int piece = vertices / cfg.k;

        {
            // Up-down walk: oracle distribution is uniform over forests with
            // exactly k components.
            std::vector<Forest> states;
            std::map<std::vector<int>, std::size_t> state_index;
            oracle::enumerate_forests(g, cfg.k, [&](const Forest& f) {
                std::vector<int> key = f.edge_ids;
                std::sort(key.begin(), key.end());
                state_index.emplace(std::move(key), states.size());
                states.push_back(f);
            });
            require(!states.empty(), "chain-validate: no forests with the requested components");

            auto index = [&](const Forest& f) {
                std::vector<int> key = f.edge_ids;
                std::sort(key.begin(), key.end());
                auto it = state_index.find(key);
                if (it == state_index.end())
                    throw std::logic_error("chain-validate: walk left the enumerated state space");
                return it->second;
            };
            auto step = [&](const Forest& f, RngStream& rng) { return up_down_step(g, f, rng); };
            auto counts = ensemble_counts(cfg.trials, checkpoints, cfg.threads,
                                          per_n.derive(kChainStreamA), states.front(), step,
                                          index, states.size());
            const std::vector<double> uniform(states.size(), 1.0 / static_cast<double>(states.size()));
            for (std::size_t cp = 0; cp < checkpoints.size(); ++cp) {
                result.rows.push_back({"up-down", vertices, cfg.k, checkpoints[cp],
                                       total_variation(counts[cp], uniform, cfg.trials)});
            }
        }

        {
            // Recombination: oracle distribution is the spanning tree weight
            // over partitions with block sizes within the slack window.
            std::vector<int> sizes_buffer;
            std::vector<std::vector<int>> multisets;
            size_multisets(cfg.k, vertices, piece - cfg.slack, piece + cfg.slack, sizes_buffer,
                           multisets);
            std::vector<Partition> states;
            for (const auto& sizes : multisets) {
                auto parts = oracle::enumerate_connected_partitions(g, sizes);
                states.insert(states.end(), parts.begin(), parts.end());
            }
            std::sort(states.begin(), states.end());
            require(!states.empty(), "chain-validate: no feasible partitions");

            std::map<Partition, std::size_t> state_index;
            for (std::size_t i = 0; i < states.size(); ++i) state_index.emplace(states[i], i);
            std::vector<double> target(states.size());
            BigCount total_weight = 0;
            std::vector<BigCount> weights;
            for (const Partition& p : states) {
                weights.push_back(partition_weight(g, p));
                total_weight += weights.back();
            }
            for (std::size_t i = 0; i < states.size(); ++i) {
                mpq_class q(weights[i], total_weight);
                q.canonicalize();
                target[i] = q.get_d();
            }

            const Partition* start = nullptr;
            for (const Partition& p : states) {
                if (is_balanced(p, piece)) {
                    start = &p;
                    break;
                }
            }
            require(start != nullptr, "chain-validate: no balanced starting partition");

            auto index = [&](const Partition& p) {
                auto it = state_index.find(p);
                if (it == state_index.end())
                    throw std::logic_error("chain-validate: chain left the enumerated state space");
                return it->second;
            };
            auto step = [&](const Partition& p, RngStream& rng) {
                return recom_step(g, p, piece, cfg.slack, rng);
            };
            auto counts = ensemble_counts(cfg.trials, checkpoints, cfg.threads,
                                          per_n.derive(kChainStreamB), *start, step, index,
                                          states.size());
            for (std::size_t cp = 0; cp < checkpoints.size(); ++cp) {
                result.rows.push_back({"recom", vertices, cfg.k, checkpoints[cp],
                                       total_variation(counts[cp], target, cfg.trials)});
            }
        }
    }

    ResultTable& t = result.table;
    t.columns = {"chain", "graph", "n_vertices", "k", "slack", "chains", "step", "tv"};
    for (const ChainRow& row : result.rows) {
        t.rows.push_back({row.chain, cfg.graph, std::to_string(row.n_vertices),
                          std::to_string(row.k), std::to_string(cfg.slack),
                          std::to_string(cfg.trials), std::to_string(row.step),
                          format_double(row.tv)});
    }
    return result;
}

// ---------------------------------------------------------------------------
// algorithm-compare

AlgorithmCompareResult run_algorithm_compare(const ExperimentConfig& cfg, std::ostream& log) {
    require(!cfg.n_list.empty(), "algorithm-compare: --n-list required");
    require(cfg.trials >= 1, "algorithm-compare: trials must be >= 1");
    require(cfg.steps >= 1, "algorithm-compare: steps must be >= 1");
    require(cfg.k >= 1, "algorithm-compare: k must be >= 1");

    using clock = std::chrono::steady_clock;
    RngStream master(cfg.seed);
    AlgorithmCompareResult result;

    for (int n : cfg.n_list) {
        RngStream per_n = master.derive(static_cast<std::uint64_t>(n));
        const Graph g = build_fixed_graph(cfg, n, per_n);
        const int vertices = g.num_vertices();
        require(vertices % cfg.k == 0, "algorithm-compare: vertex count must be divisible by k");
        const int piece = vertices / cfg.k;

        const bool complete =
            static_cast<std::int64_t>(g.num_edges()) == pair_count(vertices);
        const double expected_stage2 =
            complete ? 1.0 / (std::pow(cfg.k, cfg.k - 2) * std::pow(piece, 2 * cfg.k - 2))
                     : std::numeric_limits<double>::quiet_NaN();

        {
            // Tree splitting with two-stage rejection, one stream per trial.
            const int threads = std::max(1, std::min<int>(cfg.threads,
                                                          static_cast<int>(cfg.trials)));
            std::vector<std::int64_t> pass(threads, 0), accept(threads, 0);
            std::vector<std::exception_ptr> errors(threads);
            const auto t0 = clock::now();
            auto worker = [&](int w) {
                try {
                    for (std::int64_t trial = w; trial < cfg.trials; trial += threads) {
                        RngStream stream = per_n.derive(static_cast<std::uint64_t>(trial));
                        const SampleOutcome outcome = split_tree_once(g, cfg.k, stream);
                        if (outcome.stage != RejectionStage::not_splittable) ++pass[w];
                        if (outcome.stage == RejectionStage::accepted) ++accept[w];
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            };
            if (threads == 1) {
                worker(0);
            } else {
                std::vector<std::thread> pool;
                for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
                for (auto& th : pool) th.join();
            }
            for (auto& err : errors)
                if (err) std::rethrow_exception(err);

            CompareRow row;
            row.algorithm = "split-tree";
            row.n_vertices = vertices;
            row.units = cfg.trials;
            for (int w = 0; w < threads; ++w) {
                row.stage1_pass += pass[w];
                row.accepted += accept[w];
            }
            row.stage2_observed =
                row.stage1_pass > 0
                    ? static_cast<double>(row.accepted) / static_cast<double>(row.stage1_pass)
                    : std::numeric_limits<double>::quiet_NaN();
            row.stage2_expected = expected_stage2;
            row.seconds = std::chrono::duration<double>(clock::now() - t0).count();
            result.rows.push_back(row);
        }

        {
            // Up-down walk; every visit to a balanced forest is a sample.
            RngStream stream = per_n.derive(kChainStreamA);
            Forest f = random_forest_with_components(g, cfg.k, stream);
            const auto t0 = clock::now();
            std::int64_t balanced_visits = 0;
            for (std::int64_t s = 0; s < cfg.steps; ++s) {
                f = up_down_step(g, f, stream);
                bool balanced = true;
                for (int size : f.component_sizes) {
                    if (size != piece) {
                        balanced = false;
                        break;
                    }
                }
                if (balanced) ++balanced_visits;
            }
            CompareRow row;
            row.algorithm = "up-down";
            row.n_vertices = vertices;
            row.units = cfg.steps;
            row.stage1_pass = balanced_visits;
            row.accepted = balanced_visits;
            row.stage2_observed = 1.0;
            row.stage2_expected = std::numeric_limits<double>::quiet_NaN();
            row.seconds = std::chrono::duration<double>(clock::now() - t0).count();
            result.rows.push_back(row);
        }

        {
            // Recombination from a balanced start found by tree splitting.
            RngStream start_stream = per_n.derive(kChainStreamC);
            auto start = sample_balanced_partition(g, cfg.k, start_stream, cfg.trials);
            if (!start)
                throw budget_exhausted_error(
                    "algorithm-compare: no balanced starting partition within trial budget");
            RngStream stream = per_n.derive(kChainStreamB);
            Partition p = *start;
            const auto t0 = clock::now();
            std::int64_t proposals = 0, accepted = 0;
            for (std::int64_t s = 0; s < cfg.steps; ++s) {
                RecomOutcome outcome = recom_step_detailed(g, p, piece, cfg.slack, stream);
                if (outcome.stage == RecomStage::rejected ||
                    outcome.stage == RecomStage::accepted)
                    ++proposals;
                if (outcome.stage == RecomStage::accepted) ++accepted;
                p = std::move(outcome.partition);
            }
            CompareRow row;
            row.algorithm = "recom";
            row.n_vertices = vertices;
            row.units = cfg.steps;
            row.stage1_pass = proposals;
            row.accepted = accepted;
            row.stage2_observed =
                proposals > 0 ? static_cast<double>(accepted) / static_cast<double>(proposals)
                              : std::numeric_limits<double>::quiet_NaN();
            row.stage2_expected = std::numeric_limits<double>::quiet_NaN();
            row.seconds = std::chrono::duration<double>(clock::now() - t0).count();
            result.rows.push_back(row);
        }
    }

    ResultTable& t = result.table;
    t.columns = {"algorithm", "graph",           "n_vertices",      "k",
                 "units",     "stage1_pass",     "accepted",        "stage2_observed",
                 "stage2_expected"};
    for (const CompareRow& row : result.rows) {
        t.rows.push_back({row.algorithm, cfg.graph, std::to_string(row.n_vertices),
                          std::to_string(cfg.k), std::to_string(row.units),
                          std::to_string(row.stage1_pass), std::to_string(row.accepted),
                          format_double(row.stage2_observed),
                          format_double(row.stage2_expected)});
        // Wall time is environment-dependent; keep it out of the output file.
        log << "timing algorithm=" << row.algorithm << " n_vertices=" << row.n_vertices
            << " seconds=" << format_double(row.seconds) << " accepted_per_second="
            << format_double(row.seconds > 0 ? row.accepted / row.seconds : 0.0) << "\n";
    }
    return result;
}

// ---------------------------------------------------------------------------
// rendering and dispatch

std::string render_csv(const ResultTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += table.columns[i];
        out += (i + 1 < table.columns.size()) ? ',' : '\n';
    }
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            out += (i + 1 < row.size()) ? ',' : '\n';
        }
    }
    for (const auto& [key, value] : table.summary) {
        out += "# " + key + "=" + value + "\n";
    }
    return out;
}

std::string render_json(const ExperimentConfig& cfg, const ResultTable& table) {
    nlohmann::ordered_json j;
    j["subcommand"] = cfg.subcommand;
    nlohmann::ordered_json config;
    config["graph"] = cfg.graph;
    config["n_list"] = cfg.n_list;
    config["k"] = cfg.k;
    config["p"] = format_double(cfg.p);
    config["m"] = cfg.m;
    config["slack"] = cfg.slack;
    config["trials"] = cfg.trials;
    config["steps"] = cfg.steps;
    config["fixed_graph"] = cfg.fixed_graph;
    config["diameter"] = cfg.diameter;
    config["threads"] = cfg.threads;
    j["config"] = std::move(config);
    j["seed"] = cfg.seed;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r;
        for (std::size_t i = 0; i < table.columns.size(); ++i) r[table.columns[i]] = row[i];
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    nlohmann::ordered_json summary;
    for (const auto& [key, value] : table.summary) summary[key] = value;
    j["summary"] = std::move(summary);
    return j.dump(2) + "\n";
}

void run_experiment(const ExperimentConfig& cfg, std::ostream& sink, std::ostream& log) {
    require(cfg.format == "csv" || cfg.format == "json",
            "format must be one of: csv, json");
    ResultTable table;
    if (cfg.subcommand == "splittability-scan") {
        table = run_splittability_scan(cfg).table;
    } else if (cfg.subcommand == "figure2") {
        table = run_figure2(cfg).table;
    } else if (cfg.subcommand == "slack-gadget") {
        table = run_slack_gadget(cfg).table;
    } else if (cfg.subcommand == "chain-validate") {
        table = run_chain_validate(cfg).table;
    } else if (cfg.subcommand == "algorithm-compare") {
        table = run_algorithm_compare(cfg, log).table;
    } else {
        throw std::invalid_argument("unknown subcommand: " + cfg.subcommand);
    }
    sink << (cfg.format == "json" ? render_json(cfg, table) : render_csv(table));
}

}  // namespace treesplit
