#include "treesplit/samplers.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

#include <boost/math/distributions/binomial.hpp>

#include "treesplit/errors.hpp"

namespace treesplit {

BigCount uniform_below_big(const BigCount& bound, RngStream& rng) {
    if (sgn(bound) <= 0) throw std::invalid_argument("uniform_below_big: bound must be positive");
    if (bound == 1) return 0;
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    for (;;) {
        BigCount r = 0;
        std::size_t produced = 0;
        while (produced < bits) {
            r <<= 64;
            r += BigCount(static_cast<unsigned long>(rng.next_u64()));
            produced += 64;
        }
        r >>= (produced - bits);
        if (r < bound) return r;
    }
}

namespace {

bool accept_with_probability_one_over(const BigCount& count, RngStream& rng) {
    return uniform_below_big(count, rng) == 0;
}

}  // namespace

SampleOutcome split_tree_once(const Graph& g, int k, RngStream& rng) {
    const int n_vertices = g.num_vertices();
    if (k < 1) throw std::invalid_argument("split_tree_once: k must be >= 1");
    if (n_vertices == 0 || n_vertices % k != 0)
        throw std::invalid_argument("split_tree_once: vertex count not divisible by k");

    SpanningTree t = wilson_ust(g, rng);
    auto split = find_balanced_split(t, k);
    if (!split) return {std::nullopt, RejectionStage::not_splittable, 1};

    Partition p = apply_split(t, *split);
    const BigCount tau_h = count_spanning_trees(contract_partition(g, p));
    if (!accept_with_probability_one_over(tau_h, rng))
        return {std::nullopt, RejectionStage::tree_weight_rejected, 1};
    return {std::move(p), RejectionStage::accepted, 1};
}

std::optional<Partition> sample_balanced_partition(const Graph& g, int k, RngStream& rng,
                                                   std::int64_t max_trees) {
    for (std::int64_t drawn = 0; drawn < max_trees; ++drawn) {
        SampleOutcome outcome = split_tree_once(g, k, rng);
        if (outcome.stage == RejectionStage::accepted) return std::move(outcome.result);
    }
    return std::nullopt;
}

Forest up_down_step(const Graph& g, const Forest& f, RngStream& rng) {
    if (f.num_components() < 2)
        throw std::invalid_argument("up_down_step: forest is already spanning");
    if (static_cast<int>(f.component_of.size()) != g.num_vertices())
        throw std::invalid_argument("up_down_step: forest does not match graph");
    // k = N: the empty forest is the whole level, so the walk self-loops.
    if (f.edge_ids.empty()) return f;

    // Remove a uniform forest edge, then add a uniform edge spanning two
    // components of the reduced forest (possibly the one just removed, which
    // is the walk's self-loop). Removing first makes the proposal probability
    // of each neighbor independent of the current state, so the stationary
    // distribution is uniform over forests with k components. Adding first
    // would bias the chain toward forests with many cross-component edges.
    std::vector<int> edge_ids = f.edge_ids;
    const std::size_t drop = rng.uniform_below(edge_ids.size());
    edge_ids[drop] = edge_ids.back();
    edge_ids.pop_back();
    const Forest reduced = make_forest(g, edge_ids);

    std::vector<int> cross;
    for (int id = 0; id < g.num_edges(); ++id) {
        const Edge& e = g.edge(id);
        if (reduced.component_of[e.u] != reduced.component_of[e.v]) cross.push_back(id);
    }
    edge_ids.push_back(cross[rng.uniform_below(cross.size())]);
    return make_forest(g, std::move(edge_ids));
}

std::optional<Partition> up_down_sample_balanced(const Graph& g, int k, RngStream& rng,
                                                 std::int64_t steps_per_sample,
                                                 std::int64_t max_samples) {
    const int n_vertices = g.num_vertices();
    if (k < 1 || k > n_vertices || n_vertices % k != 0)
        throw std::invalid_argument("up_down_sample_balanced: bad component count");
    if (steps_per_sample < 1 || max_samples < 1)
        throw std::invalid_argument("up_down_sample_balanced: bad budget");
    const int piece = n_vertices / k;

    Forest f = random_forest_with_components(g, k, rng);
    const std::int64_t budget = steps_per_sample * max_samples;
    for (std::int64_t step = 0;; ++step) {
        bool balanced = true;
        for (int size : f.component_sizes) {
            if (size != piece) {
                balanced = false;
                break;
            }
        }
        if (balanced) return forest_partition(f);
        if (step >= budget) return std::nullopt;
        f = up_down_step(g, f, rng);
    }
}

// Reversibility note. Write U = P_i u P_j and pi(P) for the spanning tree
// weight. With slack 0 a tree of U proposes its unique balanced split, and
// summing over the tau(P1') * tau(P2') * E(P1', P2') trees that decompose
// into a given pair shows pi(P) P(P -> P') is symmetric under acceptance
// 1/E(P1', P2'). With slack > 0 a tree can carry several valid edges and the
// same sum no longer telescopes if the proposal picks uniformly among the
// candidates. Picking a uniform tree edge instead gives every valid proposal
// the same weight 1/(|U| - 1) regardless of the tree that carries it, which
// restores the telescoping sum; |U| is determined by the pair, so the factor
// is symmetric between forward and reverse moves.
Partition recom_step(const Graph& g, const Partition& p, int n, int slack, RngStream& rng) {
    return recom_step_detailed(g, p, n, slack, rng).partition;
}

RecomOutcome recom_step_detailed(const Graph& g, const Partition& p, int n, int slack,
                                 RngStream& rng) {
    if (slack < 0) throw std::invalid_argument("recom_step: negative slack");
    validate_partition(g, p);
    if (!is_slack_balanced(p, n, slack))
        throw std::invalid_argument("recom_step: block sizes violate the slack bound");
    const int k = p.num_blocks();
    if (k < 2) throw std::invalid_argument("recom_step: need at least 2 blocks");

    // Uniform unordered pair of blocks.
    std::uint64_t pair_index = rng.uniform_below(static_cast<std::uint64_t>(k) * (k - 1) / 2);
    int block_i = 0;
    while (pair_index >= static_cast<std::uint64_t>(k - 1 - block_i)) {
        pair_index -= k - 1 - block_i;
        ++block_i;
    }
    const int block_j = block_i + 1 + static_cast<int>(pair_index);

    const std::vector<int> label = p.labels(g.num_vertices());
    bool adjacent = false;
    for (const Edge& e : g.edges()) {
        const int a = label[e.u], b = label[e.v];
        if ((a == block_i && b == block_j) || (a == block_j && b == block_i)) {
            adjacent = true;
            break;
        }
    }
    if (!adjacent) return {p, RecomStage::non_adjacent};

    std::vector<int> union_vertices = p.blocks[block_i];
    union_vertices.insert(union_vertices.end(), p.blocks[block_j].begin(),
                          p.blocks[block_j].end());
    std::sort(union_vertices.begin(), union_vertices.end());
    const Graph sub = induced_subgraph(g, union_vertices);

    SpanningTree t = wilson_ust(sub, rng);
    const std::vector<int> candidates = find_two_split_edges_with_slack(t, n, slack);

    int cut_edge = -1;
    if (slack == 0) {
        if (candidates.empty()) return {p, RecomStage::not_splittable};
        cut_edge = candidates.front();  // unique balanced cut when it exists
    } else {
        const int pick = static_cast<int>(rng.uniform_below(t.edges.size()));
        if (!std::binary_search(candidates.begin(), candidates.end(), pick))
            return {p, RecomStage::not_splittable};
        cut_edge = pick;
    }

    SplitSet split;
    split.tree_edge_indices = {cut_edge};
    const Partition halves = apply_split(t, split);

    // Edges of g spanning the two new pieces all lie inside the union.
    const std::vector<int> half_label = halves.labels(sub.num_vertices());
    std::int64_t spanning_edges = 0;
    for (const Edge& e : sub.edges()) {
        if (half_label[e.u] != half_label[e.v]) ++spanning_edges;
    }
    if (rng.uniform_below(static_cast<std::uint64_t>(spanning_edges)) != 0)
        return {p, RecomStage::rejected};

    Partition next;
    for (int b = 0; b < k; ++b) {
        if (b != block_i && b != block_j) next.blocks.push_back(p.blocks[b]);
    }
    for (const auto& half : halves.blocks) {
        std::vector<int> block;
        block.reserve(half.size());
        for (int v : half) block.push_back(union_vertices[v]);
        next.blocks.push_back(std::move(block));
    }
    return {canonicalize(next), RecomStage::accepted};
}

Estimate make_estimate(std::int64_t successes, std::int64_t trials) {
    if (trials < 1) throw std::invalid_argument("make_estimate: trials must be >= 1");
    if (successes < 0 || successes > trials)
        throw std::invalid_argument("make_estimate: successes out of range");
    using boost::math::binomial_distribution;
    const double n = static_cast<double>(trials);
    const double s = static_cast<double>(successes);
    Estimate est;
    est.successes = successes;
    est.trials = trials;
    est.point = s / n;
    // Clopper-Pearson exact interval at 95%.
    est.ci_low = binomial_distribution<>::find_lower_bound_on_p(n, s, 0.025);
    est.ci_high = binomial_distribution<>::find_upper_bound_on_p(n, s, 0.025);
    return est;
}

SplittabilityResult estimate_splittability_detailed(const TreeSource& source, int k,
                                                    std::int64_t trials,
                                                    const RngStream& master, int threads,
                                                    bool record_diameter) {
    if (trials < 1) throw std::invalid_argument("estimate_splittability: trials must be >= 1");
    if (k < 1) throw std::invalid_argument("estimate_splittability: k must be >= 1");
    threads = std::max(1, std::min<int>(threads, static_cast<int>(trials)));

    std::vector<std::int64_t> successes(threads, 0);
    std::vector<double> diameter_sum(threads, 0.0);
    std::vector<std::exception_ptr> errors(threads);

    auto worker = [&](int w) {
        try {
            for (std::int64_t trial = w; trial < trials; trial += threads) {
                RngStream stream = master.derive(static_cast<std::uint64_t>(trial));
                const SpanningTree t = source(stream);
                if (find_balanced_split(t, k)) ++successes[w];
                if (record_diameter) diameter_sum[w] += tree_diameter(t);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }

    std::int64_t total = 0;
    double diameters = 0.0;
    for (int w = 0; w < threads; ++w) {
        total += successes[w];
        diameters += diameter_sum[w];
    }
    SplittabilityResult result;
    result.estimate = make_estimate(total, trials);
    result.mean_diameter = record_diameter ? diameters / static_cast<double>(trials) : 0.0;
    return result;
}

Estimate estimate_splittability(const TreeSource& source, int k, std::int64_t trials,
                                const RngStream& master, int threads) {
    return estimate_splittability_detailed(source, k, trials, master, threads, false).estimate;
}

}  // namespace treesplit
