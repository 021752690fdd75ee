#pragma once

#include <cstdint>
#include <functional>
#include <gmpxx.h>
#include <vector>

#include "treesplit/counting.hpp"
#include "treesplit/generators.hpp"
#include "treesplit/graph.hpp"
#include "treesplit/splitter.hpp"
#include "treesplit/ust.hpp"

namespace treesplit {

/// Brute-force ground truth for the samplers and counting paths. Everything
/// here is guarded: labeled-tree enumeration is limited to 10 vertices,
/// spanning-tree enumeration to 10^6 trees, and the subset searches to an
/// explicit work budget. Guards are hard errors, never silent truncation.
namespace oracle {

/// Every labeled tree on n vertices exactly once (via Prufer sequences).
/// Requires 2 <= n <= 10.
void enumerate_labeled_trees(int n, const std::function<void(const SpanningTree&)>& visit);

/// Every spanning tree of g exactly once (include/exclude recursion with
/// connectivity pruning). Requires tau(g) <= 10^6.
void enumerate_spanning_trees(const Graph& g,
                              const std::function<void(const SpanningTree&)>& visit);

/// Every spanning forest of g with exactly k components, exactly once.
/// Requires C(|E|, N-k) within the subset-iteration budget.
void enumerate_forests(const Graph& g, int k, const std::function<void(const Forest&)>& visit);

/// All partitions of g into connected blocks with the given size multiset,
/// each exactly once, in canonical order.
std::vector<Partition> enumerate_connected_partitions(const Graph& g, std::vector<int> sizes);

/// All partitions of g into exactly k connected blocks of any sizes.
std::vector<Partition> enumerate_connected_partitions_k(const Graph& g, int k);

/// All (k-1)-subsets of tree edges whose removal leaves k components of
/// equal size, by exhaustive subset search (the independent check behind
/// the split-uniqueness tests).
std::vector<std::vector<int>> balanced_edge_subsets(const SpanningTree& t, int k);

/// Exact spanning-tree and splittable-tree counts with the exact ratio.
struct SplitCensus {
    BigCount total_trees = 0;
    BigCount splittable_trees = 0;
    mpq_class probability = 0;  // splittable / total, canonical
};

/// Counts k-splittable spanning trees by testing find_balanced_split on
/// every enumerated tree, cross-validated against an all-subsets search for
/// balanced edge cuts (which also re-checks split uniqueness tree by tree).
SplitCensus exact_split_census(const Graph& g, int k);

/// Closed-form count of k-splittable labeled trees on kn vertices:
/// (kn)!/((n!)^k k!) * n^(k(n-2)) * k^(k-2) * n^(2(k-1)).
BigCount splittable_count_formula(int n, int k);

/// For i = 1..N/2, the total spanning tree weight of unordered 2-partitions
/// of the complete graph K_N with block sizes (i, N-i):
/// C(N,i) * i^(i-2) * (N-i)^(N-i-2), halved when i = N-i.
std::vector<std::pair<int, BigCount>> split_size_weight_histogram(int N);

/// The n balanced 3-partitions of the slack gadget, built by cutting the
/// recorded Hamiltonian cycle at the n offsets. Verifies the structural
/// facts the cycle argument rests on (each ladder is smaller than n and
/// reaches the rest of the graph only through its two base vertices) and
/// that every returned partition is balanced, connected and distinct.
std::vector<Partition> gadget_balanced_partitions(const SlackGadget& gadget);
std::vector<Partition> gadget_balanced_partitions(int n);

}  // namespace oracle
}  // namespace treesplit
