#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "treesplit/graph.hpp"
#include "treesplit/rng.hpp"

namespace treesplit {

/// Complete graph K_N.
Graph make_complete(int n);

/// width x height grid with axis-neighbor edges; vertex (x, y) has index
/// y * width + x.
Graph make_grid(int width, int height);

/// Cycle C_n (n >= 3); used as a corpus graph by the chain experiments.
Graph make_cycle(int n);

/// Triangular-lattice ladder on n1 >= 2 vertices: two parallel rails of
/// ceil(n1/2) and floor(n1/2) vertices with rung and diagonal edges, built as
/// an induced subgraph of the lattice via a coordinate embedding.
Graph make_triangular_ladder(int n1);

/// The hexagon-plus-four-ladders graph on 3n vertices whose balanced
/// 3-partitions are confined to its Hamiltonian cycle while a slack-1
/// partition carries far more spanning tree weight.
struct SlackGadget {
    int n = 0;
    Graph graph;
    /// All 3n vertices in Hamiltonian cycle order (consecutive entries and
    /// the wrap-around pair are adjacent in `graph`).
    std::vector<int> hamiltonian_cycle;
    /// The heavy nearly-balanced partition, piece sizes {n-1, n, n+1}.
    Partition witness_partition;
    /// Vertices of the twelve-vertex hexagon ring in ring order.
    std::vector<int> hexagon;
    /// Vertex lists of the four attached ladders, sizes n-1, (n-6)/2,
    /// (n-6)/2 and n-5.
    std::array<std::vector<int>, 4> ladders;
};

/// Requires n even, n >= 8. The construction is validated: distinct lattice
/// coordinates, a checked Hamiltonian cycle, and a connected witness
/// partition with sizes {n-1, n, n+1}.
SlackGadget make_slack_gadget(int n);

/// Uniform over simple graphs with exactly m edges (conditioned on being
/// connected when requested, by rejection resampling up to max_attempts).
Graph gen_gnm(int n, std::int64_t m, bool require_connected, RngStream& rng,
              int max_attempts = 10000);

/// Each edge present independently with probability p (conditioned on being
/// connected when requested, by rejection resampling up to max_attempts).
Graph gen_gnp(int n, double p, bool require_connected, RngStream& rng,
              int max_attempts = 10000);

}  // namespace treesplit
