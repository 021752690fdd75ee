#include "doctest.h"

#include <cmath>

#include "treesplit/counting.hpp"
#include "treesplit/generators.hpp"
#include "treesplit/oracle.hpp"

using namespace treesplit;

namespace {

// Brute-force spanning tree count for a multigraph: expand parallel edges
// and count spanning edge subsets directly.
int multigraph_tree_count_brute(const Multigraph& h) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < h.num_vertices; ++i)
        for (int j = i + 1; j < h.num_vertices; ++j)
            for (int c = 0; c < h.multiplicity[i][j]; ++c) edges.emplace_back(i, j);
    const int need = h.num_vertices - 1;
    const int m = static_cast<int>(edges.size());
    int count = 0;
    for (int mask = 0; mask < (1 << m); ++mask) {
        if (__builtin_popcount(mask) != need) continue;
        std::vector<int> parent(h.num_vertices);
        for (int v = 0; v < h.num_vertices; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool ok = true;
        for (int e = 0; e < m && ok; ++e) {
            if (!(mask & (1 << e))) continue;
            int a = find(edges[e].first), b = find(edges[e].second);
            if (a == b)
                ok = false;
            else
                parent[a] = b;
        }
        count += ok;
    }
    return count;
}

}  // namespace

TEST_CASE("count_spanning_trees on known graphs") {
    CHECK(count_spanning_trees(make_complete(4)) == 16);
    CHECK(count_spanning_trees(make_complete(6)) == 1296);
    CHECK(count_spanning_trees(make_grid(3, 3)) == 192);
    // Any tree counts 1; the path is a tree.
    CHECK(count_spanning_trees(make_grid(7, 1)) == 1);
    // Disconnected counts 0.
    Graph two(4, {Edge(0, 1), Edge(2, 3)});
    CHECK(count_spanning_trees(two) == 0);
    // Complete bipartite K_{2,3}: m^(n-1) * n^(m-1) = 3^1 * 2^2 = 12.
    Graph k23(5, {Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(1, 2), Edge(1, 3), Edge(1, 4)});
    CHECK(count_spanning_trees(k23) == 12);
}

TEST_CASE("count matches the enumeration oracle on small graphs") {
    for (const Graph& g : {make_complete(5), make_grid(2, 3), make_cycle(7),
                           make_triangular_ladder(7)}) {
        std::int64_t seen = 0;
        oracle::enumerate_spanning_trees(g, [&](const SpanningTree&) { ++seen; });
        CHECK(count_spanning_trees(g) == BigCount(static_cast<long>(seen)));
    }
}

TEST_CASE("multigraph counts") {
    Multigraph pair(2);
    pair.multiplicity[0][1] = pair.multiplicity[1][0] = 4;
    CHECK(count_spanning_trees(pair) == 4);

    Multigraph triangle(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) triangle.multiplicity[i][j] = 1;
    CHECK(count_spanning_trees(triangle) == 3);

    Multigraph weighted(3);
    weighted.multiplicity[0][1] = weighted.multiplicity[1][0] = 2;
    weighted.multiplicity[0][2] = weighted.multiplicity[2][0] = 1;
    weighted.multiplicity[1][2] = weighted.multiplicity[2][1] = 1;
    CHECK(count_spanning_trees(weighted) == 5);
    CHECK(multigraph_tree_count_brute(weighted) == 5);

    Multigraph disconnected(3);
    disconnected.multiplicity[0][1] = disconnected.multiplicity[1][0] = 2;
    CHECK(count_spanning_trees(disconnected) == 0);
    CHECK(count_spanning_trees(Multigraph(1)) == 1);
}

TEST_CASE("multigraph count matches brute force on random multiplicities") {
    RngStream rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_below(3));
        Multigraph h(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const std::int64_t mult = static_cast<std::int64_t>(rng.uniform_below(4));
                h.multiplicity[i][j] = h.multiplicity[j][i] = mult;
            }
        }
        CHECK(count_spanning_trees(h) == multigraph_tree_count_brute(h));
    }
}

TEST_CASE("log count tracks the exact count") {
    LogCount k4 = log_count_spanning_trees(make_complete(4));
    CHECK(!k4.is_zero);
    CHECK(std::abs(k4.log_value - std::log(16.0)) < 1e-6);

    LogCount tree = log_count_spanning_trees(make_grid(5, 1));
    CHECK(!tree.is_zero);
    CHECK(std::abs(tree.log_value) < 1e-9);

    Graph two(4, {Edge(0, 1), Edge(2, 3)});
    CHECK(log_count_spanning_trees(two).is_zero);

    // Relative agreement with the exact path on graphs up to ~200 vertices.
    for (const Graph& g : {make_grid(10, 10), make_grid(14, 14), make_complete(60),
                           make_triangular_ladder(150)}) {
        const double exact = log_big(count_spanning_trees(g));
        const LogCount approx = log_count_spanning_trees(g);
        CHECK(!approx.is_zero);
        CHECK(std::abs(approx.log_value - exact) <= 1e-6 * std::max(1.0, exact));
    }
}

TEST_CASE("partition weights") {
    Graph k4 = make_complete(4);
    Partition whole{{{0, 1, 2, 3}}};
    CHECK(partition_weight(k4, whole) == 16);

    Partition singletons{{{0}, {1}, {2}, {3}}};
    CHECK(partition_weight(k4, singletons) == 1);

    Graph k8 = make_complete(8);
    Partition halves{{{0, 1, 2, 3}, {4, 5, 6, 7}}};
    CHECK(partition_weight(k8, halves) == 256);

    Partition bad{{{0, 1}, {2}}};
    CHECK_THROWS_AS(partition_weight(k4, bad), std::invalid_argument);
}

TEST_CASE("partition weight equals the number of matching spanning forests") {
    // Count edge subsets of size N-k whose components are exactly the blocks.
    auto forest_count = [](const Graph& g, const Partition& p) {
        std::int64_t count = 0;
        oracle::enumerate_forests(g, p.num_blocks(), [&](const Forest& f) {
            count += forest_partition(f) == p;
        });
        return count;
    };
    Graph k5 = make_complete(5);
    Partition p1{{{0, 1, 2}, {3, 4}}};
    CHECK(partition_weight(k5, p1) == BigCount(static_cast<long>(forest_count(k5, p1))));

    Graph grid = make_grid(3, 2);
    Partition p2{{{0, 1, 2}, {3, 4, 5}}};
    CHECK(partition_weight(grid, p2) == BigCount(static_cast<long>(forest_count(grid, p2))));

    Graph c6 = make_cycle(6);
    Partition p3{{{0, 1}, {2, 3}, {4, 5}}};
    CHECK(partition_weight(c6, p3) == BigCount(static_cast<long>(forest_count(c6, p3))));
}

TEST_CASE("grimmett bound values and tightness") {
    CHECK(grimmett_bound(6, 4) == doctest::Approx(16.0));
    CHECK(grimmett_bound(15, 6) == doctest::Approx(1296.0));
    for (int n = 2; n <= 10; ++n) {
        CHECK(grimmett_bound(n - 1, n) >= 1.0);  // any tree counts 1
    }
}

TEST_CASE("grimmett bound holds on random connected graphs") {
    RngStream rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_below(9));
        const std::int64_t all = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const std::int64_t m = (n - 1) + static_cast<std::int64_t>(rng.uniform_below(all - n + 2));
        Graph g = gen_gnm(n, m, true, rng);
        const double tau = mpz_get_d(count_spanning_trees(g).get_mpz_t());
        CHECK(tau <= grimmett_bound(m, n) * (1 + 1e-12));
    }
}

TEST_CASE("total k-partition weight is polynomially close to the tree count") {
    // The ratio of the total weight of all k-partitions to tau(G) lies in
    // [n^-2(k-1), n^2(k-1)].
    for (const Graph& g : {make_complete(4), make_cycle(6), make_grid(3, 2)}) {
        for (int k : {2, 3}) {
            BigCount total = 0;
            for (const Partition& p : oracle::enumerate_connected_partitions_k(g, k)) {
                total += partition_weight(g, p);
            }
            const BigCount tau = count_spanning_trees(g);
            BigCount poly;
            mpz_ui_pow_ui(poly.get_mpz_t(), static_cast<unsigned long>(g.num_vertices()),
                          static_cast<unsigned long>(2 * (k - 1)));
            CHECK(total <= tau * poly);
            CHECK(total * poly >= tau);
        }
    }
}
