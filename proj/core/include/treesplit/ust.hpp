#pragma once

#include <vector>

#include "treesplit/graph.hpp"
#include "treesplit/rng.hpp"

namespace treesplit {

/// Spanning tree as an explicit edge list on vertices 0..num_vertices-1.
/// Invariant: num_vertices - 1 edges forming a connected acyclic graph.
/// When drawn from a host graph, every edge is a host edge.
struct SpanningTree {
    int num_vertices = 0;
    std::vector<Edge> edges;
};

/// Exactly uniform spanning tree of a connected graph via Wilson's
/// loop-erased random walk (cycle-popping form, rooted at vertex 0).
SpanningTree wilson_ust(const Graph& g, RngStream& rng);

/// Uniform random labeled tree on n vertices via a uniform Prufer sequence.
/// Fast path for complete-graph experiments: identical in distribution to
/// wilson_ust on the complete graph, without materializing its edges.
SpanningTree random_labeled_tree(int n, RngStream& rng);

/// Tree for a Prufer sequence over vertices 0..len+1.
SpanningTree prufer_decode(const std::vector<int>& sequence);

/// Adjacency as (neighbor, tree edge index) pairs.
std::vector<std::vector<std::pair<int, int>>> tree_adjacency(const SpanningTree& t);

/// Structural invariants only (edge count, connectivity, no duplicates).
bool is_valid_spanning_tree(const SpanningTree& t);
/// Structural invariants plus membership of every edge in the host graph.
bool is_valid_spanning_tree_of(const Graph& g, const SpanningTree& t);

/// Edges sorted; equal keys identify equal trees.
std::vector<Edge> tree_canonical_key(const SpanningTree& t);

/// Longest path length (in edges) of the tree; 0 for a single vertex.
int tree_diameter(const SpanningTree& t);

}  // namespace treesplit
