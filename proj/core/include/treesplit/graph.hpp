#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace treesplit {

/// Undirected edge with endpoints stored as u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph with dense vertex indices.
/// Edges are kept sorted, so two graphs with the same edge set compare equal
/// and serialize identically. No self-loops, no duplicate edges.
class Graph {
public:
    Graph() = default;

    /// Validates and normalizes the edge list (sorts, rejects self-loops,
    /// duplicates, and out-of-range endpoints).
    Graph(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int edge_id) const { return edges_[edge_id]; }

    /// Neighbors of v as (neighbor, edge id) pairs, sorted by neighbor.
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;
    /// Edge id for {u, v}, or -1 if absent.
    int edge_index(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
    }

private:
    int num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

bool is_connected(const Graph& g);

/// Component label per vertex. Labels are dense and assigned in order of each
/// component's smallest vertex, so label 0 contains vertex 0.
std::vector<int> connected_component_labels(const Graph& g);

/// Subgraph induced by `vertices` (which must be distinct); vertex i of the
/// result corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Partition of the vertices into connected blocks. Blocks are canonicalized:
/// each block sorted ascending, blocks ordered by smallest element. Relabeled
/// copies of the same partition therefore compare equal.
struct Partition {
    std::vector<std::vector<int>> blocks;

    int num_blocks() const { return static_cast<int>(blocks.size()); }
    /// Per-vertex block index; `num_vertices` must match the host graph.
    std::vector<int> labels(int num_vertices) const;
    std::vector<int> block_sizes() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Sorts blocks into canonical order (in place) and returns the partition.
Partition& canonicalize(Partition& p);

/// Builds the canonical partition from per-vertex labels.
Partition partition_from_labels(const std::vector<int>& labels);

/// Checks blocks are disjoint, cover all vertices, and each induces a
/// connected subgraph. Throws std::invalid_argument otherwise.
void validate_partition(const Graph& g, const Partition& p);
bool is_valid_partition(const Graph& g, const Partition& p);

/// Connected components of g as a partition (blocks in canonical order).
Partition components_partition(const Graph& g);

/// Small quotient graph with parallel edge counts; vertex i is block i of the
/// partition that produced it.
struct Multigraph {
    int num_vertices = 0;
    std::vector<std::vector<std::int64_t>> multiplicity;  // symmetric, zero diagonal

    explicit Multigraph(int n = 0)
        : num_vertices(n),
          multiplicity(n, std::vector<std::int64_t>(n, 0)) {}
};

/// Contracts each block of p to a single vertex; multiplicity(i, j) counts the
/// g-edges with one endpoint in block i and the other in block j. Intra-block
/// edges are dropped. The partition must be valid on g.
Multigraph contract_partition(const Graph& g, const Partition& p);

/// Plain-text edge list: first line "N M", then M lines "u v" with 0-based
/// indices. Edges are written sorted, so write/read round-trips are bit-exact.
void write_edge_list(const Graph& g, std::ostream& os);
Graph read_edge_list(std::istream& is);
std::string to_edge_list_string(const Graph& g);
Graph graph_from_edge_list_string(const std::string& text);

}  // namespace treesplit
