#include "doctest.h"

#include <set>

#include "treesplit/counting.hpp"
#include "treesplit/generators.hpp"
#include "treesplit/oracle.hpp"

using namespace treesplit;
using namespace treesplit::oracle;

TEST_CASE("labeled tree enumeration") {
    auto count_trees = [](int n) {
        std::int64_t count = 0;
        std::set<std::vector<Edge>> distinct;
        enumerate_labeled_trees(n, [&](const SpanningTree& t) {
            ++count;
            CHECK(is_valid_spanning_tree(t));
            distinct.insert(tree_canonical_key(t));
        });
        CHECK(static_cast<std::int64_t>(distinct.size()) == count);
        return count;
    };
    CHECK(count_trees(2) == 1);
    CHECK(count_trees(3) == 3);
    CHECK(count_trees(4) == 16);
    CHECK(count_trees(6) == 1296);

    CHECK_THROWS_AS(enumerate_labeled_trees(1, [](const SpanningTree&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_labeled_trees(11, [](const SpanningTree&) {}),
                    std::invalid_argument);
}

TEST_CASE("spanning tree enumeration") {
    auto count_trees = [](const Graph& g) {
        std::int64_t count = 0;
        std::set<std::vector<Edge>> distinct;
        enumerate_spanning_trees(g, [&](const SpanningTree& t) {
            ++count;
            CHECK(is_valid_spanning_tree_of(g, t));
            distinct.insert(tree_canonical_key(t));
        });
        CHECK(static_cast<std::int64_t>(distinct.size()) == count);
        return count;
    };
    CHECK(count_trees(make_cycle(4)) == 4);
    CHECK(count_trees(make_complete(4)) == 16);
    CHECK(count_trees(make_grid(3, 3)) == 192);
    Graph two(4, {Edge(0, 1), Edge(2, 3)});
    CHECK(count_trees(two) == 0);
}

TEST_CASE("forest enumeration") {
    // Two-component spanning forests of C_4: every 2-subset of its edges.
    std::int64_t count = 0;
    enumerate_forests(make_cycle(4), 2, [&](const Forest& f) {
        CHECK(f.num_components() == 2);
        ++count;
    });
    CHECK(count == 6);

    // K_4 with two components: 16 trees each dropping one of 3 edges gives
    // forests; count directly instead: subsets of 2 edges that are forests.
    std::int64_t k4_count = 0;
    enumerate_forests(make_complete(4), 2, [&](const Forest&) { ++k4_count; });
    CHECK(k4_count == 15);  // C(6,2) = 15 subsets, none of which is a cycle
}

TEST_CASE("connected partition enumeration") {
    Graph c6 = make_cycle(6);
    CHECK(enumerate_connected_partitions(c6, {3, 3}).size() == 3);
    CHECK(enumerate_connected_partitions(c6, {2, 2, 2}).size() == 2);
    CHECK(enumerate_connected_partitions(make_complete(4), {2, 2}).size() == 3);
    CHECK_THROWS_AS(enumerate_connected_partitions(c6, {3, 2}), std::invalid_argument);

    // All 2-block partitions of a cycle are arc pairs: C(6,2) cut choices.
    CHECK(enumerate_connected_partitions_k(c6, 2).size() == 15);

    // Every returned partition is valid and has the requested sizes.
    Graph grid = make_grid(3, 2);
    for (const Partition& p : enumerate_connected_partitions(grid, {2, 2, 2})) {
        CHECK(is_valid_partition(grid, p));
        CHECK(is_balanced(p, 2));
    }
    // 2x3 grid domino tilings: 3.
    CHECK(enumerate_connected_partitions(grid, {2, 2, 2}).size() == 3);
}

TEST_CASE("split census on complete graphs") {
    SplitCensus k4 = exact_split_census(make_complete(4), 2);
    CHECK(k4.total_trees == 16);
    CHECK(k4.splittable_trees == 12);
    CHECK(k4.probability == mpq_class(3, 4));

    SplitCensus k6 = exact_split_census(make_complete(6), 2);
    CHECK(k6.total_trees == 1296);
    CHECK(k6.splittable_trees == 810);
    CHECK(k6.probability == mpq_class(5, 8));
}

TEST_CASE("split census on a star host") {
    // The star K_{1,5} is a tree; its single spanning tree is not 2-splittable.
    Graph star(6, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(0, 5)});
    SplitCensus census = exact_split_census(star, 2);
    CHECK(census.total_trees == 1);
    CHECK(census.splittable_trees == 0);
}

TEST_CASE("splittable count formula") {
    CHECK(splittable_count_formula(2, 2) == 12);
    CHECK(splittable_count_formula(3, 2) == 810);
    CHECK(splittable_count_formula(1, 1) == 1);
    // k = 1: every labeled tree splits trivially.
    CHECK(splittable_count_formula(4, 1) == 16);
    CHECK(splittable_count_formula(6, 1) == 1296);

    CHECK(splittable_count_formula(2, 3) ==
          exact_split_census(make_complete(6), 3).splittable_trees);
}

TEST_CASE("split size weight histogram") {
    auto n8 = split_size_weight_histogram(8);
    REQUIRE(n8.size() == 4);
    CHECK(n8[0] == std::pair<int, BigCount>{1, BigCount(134456)});
    CHECK(n8[1] == std::pair<int, BigCount>{2, BigCount(36288)});
    CHECK(n8[2] == std::pair<int, BigCount>{3, BigCount(21000)});
    CHECK(n8[3] == std::pair<int, BigCount>{4, BigCount(8960)});

    auto n4 = split_size_weight_histogram(4);
    REQUIRE(n4.size() == 2);
    CHECK(n4[0].second == 12);
    CHECK(n4[1].second == 3);

    // The balanced split carries the least weight for N in {8, 16}.
    for (int n : {8, 16}) {
        auto rows = split_size_weight_histogram(n);
        for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
            CHECK(rows.back().second < rows[i].second);
        }
    }
}

TEST_CASE("histogram equals forest enumeration sums on small N") {
    for (int n = 4; n <= 7; ++n) {
        Graph g = make_complete(n);
        auto rows = split_size_weight_histogram(n);
        for (const auto& [i, weight] : rows) {
            BigCount total = 0;
            for (const Partition& p : enumerate_connected_partitions(g, {i, n - i})) {
                total += partition_weight(g, p);
            }
            CHECK(total == weight);
        }
    }
}

TEST_CASE("gadget balanced partitions") {
    for (int n : {8, 10, 14}) {
        CAPTURE(n);
        SlackGadget gadget = make_slack_gadget(n);
        auto parts = gadget_balanced_partitions(gadget);
        CHECK(static_cast<int>(parts.size()) == n);
        for (const Partition& p : parts) {
            CHECK(is_balanced(p, n));
            CHECK(is_valid_partition(gadget.graph, p));
        }
        std::set<Partition> distinct(parts.begin(), parts.end());
        CHECK(distinct.size() == parts.size());
    }

    // Exhaustive cross-check at n=8: the cycle cuts are the only balanced
    // partitions.
    SlackGadget g8 = make_slack_gadget(8);
    auto all = enumerate_connected_partitions(g8.graph, {8, 8, 8});
    CHECK(all == gadget_balanced_partitions(g8));
}

TEST_CASE("balanced-to-splittable weight ratio is polynomially bounded") {
    // Ratio of total balanced k-partition weight to the splittable tree count
    // lies within [N^-2(k-1), N^2(k-1)].
    for (const Graph& g : {make_complete(4), make_complete(6), make_cycle(6), make_grid(3, 2)}) {
        const int n_vertices = g.num_vertices();
        for (int k : {2, 3}) {
            if (n_vertices % k != 0) continue;
            const int piece = n_vertices / k;
            BigCount balanced_weight = 0;
            for (const Partition& p :
                 enumerate_connected_partitions(g, std::vector<int>(k, piece))) {
                balanced_weight += partition_weight(g, p);
            }
            const SplitCensus census = exact_split_census(g, k);
            BigCount poly;
            mpz_ui_pow_ui(poly.get_mpz_t(), static_cast<unsigned long>(n_vertices),
                          static_cast<unsigned long>(2 * (k - 1)));
            CHECK(balanced_weight <= census.splittable_trees * poly);
            CHECK(balanced_weight * poly >= census.splittable_trees);
        }
    }
}

TEST_CASE("splittability and balanced-weight ratios track each other") {
    // Combining both polynomial bounds: the two ratios differ by at most
    // N^4(k-1) in either direction.
    for (const Graph& g : {make_complete(6), make_cycle(6)}) {
        const int n_vertices = g.num_vertices();
        for (int k : {2, 3}) {
            const int piece = n_vertices / k;
            const SplitCensus census = exact_split_census(g, k);
            BigCount balanced_weight = 0;
            for (const Partition& p :
                 enumerate_connected_partitions(g, std::vector<int>(k, piece)))
                balanced_weight += partition_weight(g, p);
            BigCount total_weight = 0;
            for (const Partition& p : enumerate_connected_partitions_k(g, k))
                total_weight += partition_weight(g, p);

            // splittable/total vs balanced_weight/total_weight
            mpq_class tree_ratio(census.splittable_trees, census.total_trees);
            mpq_class weight_ratio(balanced_weight, total_weight);
            tree_ratio.canonicalize();
            weight_ratio.canonicalize();
            BigCount poly;
            mpz_ui_pow_ui(poly.get_mpz_t(), static_cast<unsigned long>(n_vertices),
                          static_cast<unsigned long>(4 * (k - 1)));
            CHECK(tree_ratio <= weight_ratio * poly);
            CHECK(weight_ratio <= tree_ratio * poly);
        }
    }
}
