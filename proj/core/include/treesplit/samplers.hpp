#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "treesplit/counting.hpp"
#include "treesplit/graph.hpp"
#include "treesplit/rng.hpp"
#include "treesplit/splitter.hpp"
#include "treesplit/ust.hpp"

namespace treesplit {

/// Where a single tree-splitting attempt stopped.
enum class RejectionStage {
    not_splittable,         // the drawn tree had no balanced split
    tree_weight_rejected,   // split found, 1/tau(H) acceptance failed
    accepted,
};

struct SampleOutcome {
    std::optional<Partition> result;  // present iff stage == accepted
    RejectionStage stage = RejectionStage::not_splittable;
    std::int64_t trees_drawn = 1;
};

/// One attempt of the tree-splitting sampler: draw a uniform spanning tree,
/// split it into k equal pieces if possible, then accept the partition with
/// probability 1/tau(H) where H is the contraction of g by the partition.
/// Accepted partitions are distributed proportionally to the spanning tree
/// weight over balanced k-partitions. Requires g connected, |V| divisible
/// by k.
SampleOutcome split_tree_once(const Graph& g, int k, RngStream& rng);

/// Repeats split_tree_once until acceptance or until max_trees trees have
/// been drawn; absent result on budget exhaustion (never a biased fallback).
std::optional<Partition> sample_balanced_partition(const Graph& g, int k, RngStream& rng,
                                                   std::int64_t max_trees);

/// One step of the up-down walk on forests with a fixed component count:
/// remove a uniform forest edge, then add a uniform edge of g spanning two
/// components of the reduced forest (possibly re-adding the removed edge,
/// a legal self-loop). Stationary distribution is uniform over all forests
/// of g with that component count. Requires at least 2 components; with
/// k = N the empty forest self-loops.
Forest up_down_step(const Graph& g, const Forest& f, RngStream& rng);

/// Runs the up-down walk with k components, checking for balance after every
/// step; returns the first balanced partition, or absent once the step budget
/// (steps_per_sample * max_samples) is exhausted.
std::optional<Partition> up_down_sample_balanced(const Graph& g, int k, RngStream& rng,
                                                 std::int64_t steps_per_sample,
                                                 std::int64_t max_samples);

/// One reversible recombination step on a k-partition with block sizes in
/// [n - slack, n + slack].
///
/// Picks a uniform unordered pair of blocks; non-adjacent pairs self-loop.
/// Otherwise draws a uniform spanning tree of the union and looks for an
/// edge splitting it into two slack-feasible pieces; a found split (P1, P2)
/// is accepted with probability 1/E(P1, P2), the inverse of the number of
/// edges between the new pieces. With slack = 0 the candidate edge is unique
/// when it exists and the tree proposes it outright. With slack > 0 the step
/// picks a uniform tree edge and self-loops unless that edge is a valid
/// candidate, which keeps the chain reversible with respect to the spanning
/// tree weight over slack-feasible partitions (see recom_step notes in the
/// implementation).
Partition recom_step(const Graph& g, const Partition& p, int n, int slack, RngStream& rng);

/// Where a recombination proposal stopped; `accepted` covers moves whose
/// re-split happens to reproduce the same two blocks.
enum class RecomStage { non_adjacent, not_splittable, rejected, accepted };

struct RecomOutcome {
    Partition partition;
    RecomStage stage = RecomStage::non_adjacent;
};

RecomOutcome recom_step_detailed(const Graph& g, const Partition& p, int n, int slack,
                                 RngStream& rng);

/// Success count with an exact (Clopper-Pearson) 95% binomial interval.
struct Estimate {
    std::int64_t successes = 0;
    std::int64_t trials = 0;
    double point = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

Estimate make_estimate(std::int64_t successes, std::int64_t trials);

/// Draws one spanning tree per trial (a fresh graph per trial for random
/// families).
using TreeSource = std::function<SpanningTree(RngStream&)>;

struct SplittabilityResult {
    Estimate estimate;
    double mean_diameter = 0.0;  // only filled when requested
};

/// Estimates the probability that a tree from `source` is k-splittable over
/// independent trials. Trial t uses master.derive(t), so results are
/// identical for any thread count.
SplittabilityResult estimate_splittability_detailed(const TreeSource& source, int k,
                                                    std::int64_t trials,
                                                    const RngStream& master, int threads = 1,
                                                    bool record_diameter = false);

Estimate estimate_splittability(const TreeSource& source, int k, std::int64_t trials,
                                const RngStream& master, int threads = 1);

/// Uniform integer in [0, bound) for arbitrary-precision bounds.
BigCount uniform_below_big(const BigCount& bound, RngStream& rng);

}  // namespace treesplit
