#pragma once

#include <optional>
#include <vector>

#include "treesplit/graph.hpp"
#include "treesplit/ust.hpp"

namespace treesplit {

/// Set of tree edges (indices into SpanningTree::edges) whose removal leaves
/// k components of equal size.
struct SplitSet {
    std::vector<int> tree_edge_indices;

    int k() const { return static_cast<int>(tree_edge_indices.size()) + 1; }
    friend bool operator==(const SplitSet&, const SplitSet&) = default;
};

/// Rooted view of a tree: parents, parent edges, and a preorder in which
/// every parent precedes its children.
struct RootedTree {
    int root = 0;
    std::vector<int> parent;       // -1 at root
    std::vector<int> parent_edge;  // index into tree edges, -1 at root
    std::vector<int> preorder;
};

RootedTree root_tree(const SpanningTree& t, int root);

/// size[v] = number of vertices in v's subtree when t is rooted at `root`
/// (so size[root] = num_vertices).
std::vector<int> subtree_sizes(const SpanningTree& t, int root);

/// The unique balanced split set of t into k pieces, if one exists.
///
/// Collects every edge whose removal leaves both sides with size a multiple
/// of n = N/k; the tree is k-splittable iff exactly k-1 edges qualify. The
/// returned set is re-validated by checking the resulting component sizes.
/// Requires N divisible by k.
std::optional<SplitSet> find_balanced_split(const SpanningTree& t, int k);

/// Partition given by the components of t minus the split edges. Blocks all
/// have size N/k when s came from find_balanced_split.
Partition apply_split(const SpanningTree& t, const SplitSet& s);

/// All blocks have exactly n vertices.
bool is_balanced(const Partition& p, int n);
/// All block sizes lie in [n - slack, n + slack].
bool is_slack_balanced(const Partition& p, int n, int slack);

/// Tree edges (indices) whose removal leaves both sides with size in
/// [n - slack, n + slack]. With slack = 0 the list has at most one entry.
std::vector<int> find_two_split_edges_with_slack(const SpanningTree& t, int n, int slack);

/// Spanning forest of a host graph: a cycle-free subset of host edges
/// together with derived component bookkeeping. Isolated vertices count as
/// size-1 components, so a forest with c components has N - c edges.
struct Forest {
    std::vector<int> edge_ids;         // indices into the host graph's edges
    std::vector<int> component_of;     // per vertex, dense labels
    std::vector<int> component_sizes;  // by label

    int num_components() const { return static_cast<int>(component_sizes.size()); }
};

/// Builds a forest from host edge ids, validating acyclicity.
Forest make_forest(const Graph& g, std::vector<int> edge_ids);

/// Forest with k components obtained by deleting k-1 uniformly chosen edges
/// from a uniform spanning tree.
Forest random_forest_with_components(const Graph& g, int k, RngStream& rng);

Partition forest_partition(const Forest& f);

}  // namespace treesplit
