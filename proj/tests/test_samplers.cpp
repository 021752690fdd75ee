#include "doctest.h"

#include <cmath>
#include <map>

#include "treesplit/counting.hpp"
#include "treesplit/generators.hpp"
#include "treesplit/oracle.hpp"
#include "treesplit/samplers.hpp"

using namespace treesplit;

namespace {

// Half the L1 distance between empirical counts and a target distribution.
double tv_distance(const std::map<Partition, std::int64_t>& counts,
                   const std::map<Partition, double>& target, std::int64_t total) {
    double tv = 0;
    for (const auto& [p, prob] : target) {
        auto it = counts.find(p);
        const double emp = it == counts.end() ? 0.0
                                              : static_cast<double>(it->second) / total;
        tv += std::abs(emp - prob);
    }
    return tv / 2;
}

std::map<Partition, double> weight_target(const Graph& g, const std::vector<Partition>& states) {
    BigCount total = 0;
    std::vector<BigCount> weights;
    for (const Partition& p : states) {
        weights.push_back(partition_weight(g, p));
        total += weights.back();
    }
    std::map<Partition, double> target;
    for (std::size_t i = 0; i < states.size(); ++i) {
        mpq_class q(weights[i], total);
        q.canonicalize();
        target.emplace(states[i], q.get_d());
    }
    return target;
}

}  // namespace

TEST_CASE("uniform_below_big") {
    RngStream rng(1);
    CHECK(uniform_below_big(BigCount(1), rng) == 0);
    BigCount big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
    for (int i = 0; i < 100; ++i) {
        BigCount draw = uniform_below_big(big, rng);
        CHECK(draw >= 0);
        CHECK(draw < big);
    }
    CHECK_THROWS_AS(uniform_below_big(BigCount(0), rng), std::invalid_argument);

    // Mean of draws below 10 is near 4.5.
    double sum = 0;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) sum += uniform_below_big(BigCount(10), rng).get_d();
    CHECK(sum / draws == doctest::Approx(4.5).epsilon(0.05));
}

TEST_CASE("make_estimate") {
    Estimate all = make_estimate(100, 100);
    CHECK(all.point == 1.0);
    CHECK(all.ci_high == 1.0);
    CHECK(all.ci_low < 1.0);

    Estimate none = make_estimate(0, 100);
    CHECK(none.point == 0.0);
    CHECK(none.ci_low == 0.0);
    CHECK(none.ci_high > 0.0);

    Estimate half = make_estimate(50, 100);
    CHECK(half.ci_low < 0.5);
    CHECK(half.ci_high > 0.5);
    CHECK(half.ci_low > 0.35);
    CHECK(half.ci_high < 0.65);

    CHECK_THROWS_AS(make_estimate(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_estimate(5, 4), std::invalid_argument);
}

TEST_CASE("split_tree_once on K_4") {
    Graph k4 = make_complete(4);
    RngStream rng(2);
    std::int64_t pass = 0, accepted = 0;
    const std::int64_t trials = 20000;
    std::map<Partition, std::int64_t> counts;
    for (std::int64_t i = 0; i < trials; ++i) {
        SampleOutcome out = split_tree_once(k4, 2, rng);
        if (out.stage != RejectionStage::not_splittable) ++pass;
        if (out.stage == RejectionStage::accepted) {
            ++accepted;
            CHECK(is_balanced(*out.result, 2));
            ++counts[*out.result];
        }
    }
    // Stage 1 passes with probability 12/16; tau(H) = 4 always, so stage 2
    // accepts a quarter of the passes.
    const double stage1 = static_cast<double>(pass) / trials;
    CHECK(stage1 == doctest::Approx(0.75).epsilon(0.03));
    const double stage2 = static_cast<double>(accepted) / pass;
    CHECK(stage2 == doctest::Approx(0.25).epsilon(0.08));

    // Accepted partitions are uniform over the 3 pairings.
    auto states = oracle::enumerate_connected_partitions(k4, {2, 2});
    REQUIRE(states.size() == 3);
    std::map<Partition, double> target;
    for (const Partition& p : states) target.emplace(p, 1.0 / 3);
    CHECK(tv_distance(counts, target, accepted) < 0.05);
}

TEST_CASE("split_tree_once trivial cases") {
    Graph k4 = make_complete(4);
    RngStream rng(3);
    SampleOutcome out = split_tree_once(k4, 1, rng);
    CHECK(out.stage == RejectionStage::accepted);
    CHECK(out.result->num_blocks() == 1);

    CHECK_THROWS_AS(split_tree_once(k4, 3, rng), std::invalid_argument);
    Graph two(4, {Edge(0, 1), Edge(2, 3)});
    CHECK_THROWS_AS(split_tree_once(two, 2, rng), std::invalid_argument);
}

TEST_CASE("sample_balanced_partition matches oracle weights") {
    RngStream rng(4);

    // C_6 into k=3: two balanced partitions, both weight 1.
    Graph c6 = make_cycle(6);
    auto states3 = oracle::enumerate_connected_partitions(c6, {2, 2, 2});
    REQUIRE(states3.size() == 2);
    std::map<Partition, std::int64_t> counts;
    const std::int64_t samples = 4000;
    for (std::int64_t i = 0; i < samples; ++i) {
        auto p = sample_balanced_partition(c6, 3, rng, 100000);
        REQUIRE(p.has_value());
        ++counts[*p];
    }
    std::map<Partition, double> target;
    for (const Partition& p : states3) target.emplace(p, 0.5);
    CHECK(tv_distance(counts, target, samples) < 0.05);

    // Budget exhaustion yields an absent result: a star is never splittable.
    Graph star(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
    CHECK(!sample_balanced_partition(star, 2, rng, 50).has_value());
}

TEST_CASE("up_down_step preserves component count and edge count") {
    Graph g = make_grid(3, 3);
    RngStream rng(5);
    Forest f = random_forest_with_components(g, 3, rng);
    for (int step = 0; step < 500; ++step) {
        f = up_down_step(g, f, rng);
        CHECK(f.num_components() == 3);
        CHECK(static_cast<int>(f.edge_ids.size()) == g.num_vertices() - 3);
    }
    Forest spanning = random_forest_with_components(g, 1, rng);
    CHECK_THROWS_AS(up_down_step(g, spanning, rng), std::invalid_argument);
}

TEST_CASE("up-down walk long-run occupancy is uniform over forests") {
    Graph c4 = make_cycle(4);
    std::map<std::vector<int>, std::int64_t> counts;
    std::size_t num_states = 0;
    oracle::enumerate_forests(c4, 2, [&](const Forest& f) {
        std::vector<int> key = f.edge_ids;
        std::sort(key.begin(), key.end());
        counts.emplace(key, 0);
        ++num_states;
    });
    REQUIRE(num_states == 6);

    RngStream rng(6);
    Forest f = random_forest_with_components(c4, 2, rng);
    const std::int64_t steps = 60000;
    for (std::int64_t s = 0; s < steps; ++s) {
        f = up_down_step(c4, f, rng);
        std::vector<int> key = f.edge_ids;
        std::sort(key.begin(), key.end());
        ++counts.at(key);
    }
    double tv = 0;
    for (const auto& [key, count] : counts) {
        tv += std::abs(static_cast<double>(count) / steps - 1.0 / num_states);
    }
    CHECK(tv / 2 < 0.05);
}

TEST_CASE("up-down walk is uniform on K_4, where cross-edge counts vary") {
    // Forests of K_4 with 2 components split into 3 matchings (4 cross
    // edges) and 12 path-plus-vertex forests (3 cross edges). A walk whose
    // proposals depend on the cross-edge count equilibrates 1/12 vs 1/16
    // instead of uniform 1/15, a total variation gap of exactly 0.05.
    Graph k4 = make_complete(4);
    std::map<std::vector<int>, std::int64_t> counts;
    std::size_t num_states = 0;
    oracle::enumerate_forests(k4, 2, [&](const Forest& f) {
        std::vector<int> key = f.edge_ids;
        std::sort(key.begin(), key.end());
        counts.emplace(key, 0);
        ++num_states;
    });
    REQUIRE(num_states == 15);

    RngStream rng(20);
    Forest f = random_forest_with_components(k4, 2, rng);
    const std::int64_t steps = 150000;
    for (std::int64_t s = 0; s < steps; ++s) {
        f = up_down_step(k4, f, rng);
        std::vector<int> key = f.edge_ids;
        std::sort(key.begin(), key.end());
        ++counts.at(key);
    }
    double tv = 0;
    for (const auto& [key, count] : counts)
        tv += std::abs(static_cast<double>(count) / steps - 1.0 / num_states);
    CHECK(tv / 2 < 0.02);
}

TEST_CASE("up_down_sample_balanced") {
    RngStream rng(7);
    Graph c6 = make_cycle(6);
    std::map<Partition, std::int64_t> counts;
    const int samples = 2000;
    for (int i = 0; i < samples; ++i) {
        auto p = up_down_sample_balanced(c6, 2, rng, 100, 100);
        REQUIRE(p.has_value());
        CHECK(is_balanced(*p, 3));
        ++counts[*p];
    }
    auto states = oracle::enumerate_connected_partitions(c6, {3, 3});
    REQUIRE(states.size() == 3);
    std::map<Partition, double> target;
    for (const Partition& p : states) target.emplace(p, 1.0 / 3);
    CHECK(tv_distance(counts, target, samples) < 0.05);

    // K_4 with k=2: balanced forests are the 3 perfect matchings.
    Graph k4 = make_complete(4);
    for (int i = 0; i < 50; ++i) {
        auto p = up_down_sample_balanced(k4, 2, rng, 100, 100);
        REQUIRE(p.has_value());
        CHECK(is_balanced(*p, 2));
    }

    // k = N: the empty forest is balanced immediately.
    auto singletons = up_down_sample_balanced(k4, 4, rng, 1, 1);
    REQUIRE(singletons.has_value());
    CHECK(singletons->num_blocks() == 4);
}

TEST_CASE("recom chain occupancy matches spanning tree weights (slack 0)") {
    Graph c6 = make_cycle(6);
    auto states = oracle::enumerate_connected_partitions(c6, {3, 3});
    REQUIRE(states.size() == 3);
    auto target = weight_target(c6, states);

    RngStream rng(8);
    Partition p = states.front();
    std::map<Partition, std::int64_t> counts;
    const std::int64_t steps = 30000;
    for (std::int64_t s = 0; s < steps; ++s) {
        p = recom_step(c6, p, 3, 0, rng);
        ++counts[p];
    }
    CHECK(tv_distance(counts, target, steps) < 0.05);
}

TEST_CASE("recom chain with slack targets weights over feasible partitions") {
    // K_4, k=2, slack 1: four (1,3)-splits of weight 3 and three (2,2)-splits
    // of weight 1.
    Graph k4 = make_complete(4);
    std::vector<Partition> states = oracle::enumerate_connected_partitions(k4, {1, 3});
    auto balanced = oracle::enumerate_connected_partitions(k4, {2, 2});
    states.insert(states.end(), balanced.begin(), balanced.end());
    REQUIRE(states.size() == 7);
    auto target = weight_target(k4, states);

    RngStream rng(9);
    Partition p = balanced.front();
    std::map<Partition, std::int64_t> counts;
    const std::int64_t steps = 60000;
    for (std::int64_t s = 0; s < steps; ++s) {
        p = recom_step(k4, p, 2, 1, rng);
        ++counts[p];
    }
    CHECK(tv_distance(counts, target, steps) < 0.05);

    // 2x3 grid, k=2, slack 1: trees carry unequal candidate counts, which is
    // exactly the case the uniform-tree-edge proposal has to get right.
    Graph grid = make_grid(3, 2);
    std::vector<Partition> grid_states = oracle::enumerate_connected_partitions(grid, {2, 4});
    auto grid_balanced = oracle::enumerate_connected_partitions(grid, {3, 3});
    grid_states.insert(grid_states.end(), grid_balanced.begin(), grid_balanced.end());
    auto grid_target = weight_target(grid, grid_states);

    Partition q = grid_balanced.front();
    std::map<Partition, std::int64_t> grid_counts;
    const std::int64_t grid_steps = 120000;
    for (std::int64_t s = 0; s < grid_steps; ++s) {
        q = recom_step(grid, q, 3, 1, rng);
        ++grid_counts[q];
    }
    CHECK(tv_distance(grid_counts, grid_target, grid_steps) < 0.05);
}

TEST_CASE("recom is frozen on the slack gadget") {
    SlackGadget gadget = make_slack_gadget(8);
    auto balanced = oracle::gadget_balanced_partitions(gadget);
    RngStream rng(10);
    for (const Partition& start : balanced) {
        Partition p = start;
        for (int s = 0; s < 300; ++s) {
            p = recom_step(gadget.graph, p, 8, 0, rng);
            CHECK(p == start);
        }
    }
}

TEST_CASE("recom validates inputs") {
    Graph k4 = make_complete(4);
    RngStream rng(11);
    Partition p{{{0, 1}, {2, 3}}};
    CHECK_THROWS_AS(recom_step(k4, p, 2, -1, rng), std::invalid_argument);
    Partition outside{{{0, 1, 2}, {3}}};
    CHECK_THROWS_AS(recom_step(k4, outside, 2, 0, rng), std::invalid_argument);
    Partition single{{{0, 1, 2, 3}}};
    CHECK_THROWS_AS(recom_step(k4, single, 4, 0, rng), std::invalid_argument);
}

TEST_CASE("estimate_splittability on K_4 covers the exact value") {
    const RngStream master(12);
    auto source = [](RngStream& rng) { return random_labeled_tree(4, rng); };
    Estimate est = estimate_splittability(source, 2, 20000, master);
    CHECK(est.trials == 20000);
    CHECK(est.ci_low < 0.75);
    CHECK(est.ci_high > 0.75);
    CHECK(est.point == doctest::Approx(0.75).epsilon(0.03));
}

TEST_CASE("estimate_splittability is invariant to the thread count") {
    const RngStream master(13);
    auto source = [](RngStream& rng) { return random_labeled_tree(12, rng); };
    Estimate one = estimate_splittability(source, 3, 5000, master, 1);
    Estimate two = estimate_splittability(source, 3, 5000, master, 2);
    Estimate four = estimate_splittability(source, 3, 5000, master, 4);
    CHECK(one.successes == two.successes);
    CHECK(one.successes == four.successes);
}

TEST_CASE("samplers are deterministic given a seed") {
    Graph k6 = make_complete(6);
    RngStream a(14), b(14);
    for (int i = 0; i < 20; ++i) {
        SampleOutcome oa = split_tree_once(k6, 2, a);
        SampleOutcome ob = split_tree_once(k6, 2, b);
        CHECK(oa.stage == ob.stage);
        CHECK(oa.result.has_value() == ob.result.has_value());
        if (oa.result) CHECK(*oa.result == *ob.result);
    }
}
