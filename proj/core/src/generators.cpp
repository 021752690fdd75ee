#include "treesplit/generators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "treesplit/errors.hpp"

namespace treesplit {

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("make_complete: n must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: n must be >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

Graph make_grid(int width, int height) {
    if (width < 1 || height < 1) throw std::invalid_argument("make_grid: dimensions must be >= 1");
    auto id = [width](int x, int y) { return y * width + x; };
    std::vector<Edge> edges;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            if (x + 1 < width) edges.emplace_back(id(x, y), id(x + 1, y));
            if (y + 1 < height) edges.emplace_back(id(x, y), id(x, y + 1));
        }
    }
    return Graph(width * height, std::move(edges));
}

namespace {

// Axial coordinates of the triangular lattice; two sites are adjacent iff
// their difference is one of the six offsets below.
struct Axial {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Axial&, const Axial&) = default;
};

constexpr std::array<Axial, 6> kOffsets = {{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}};

Axial operator+(Axial a, Axial b) { return {a.x + b.x, a.y + b.y}; }

// 60-degree rotation about the origin; maps the lattice to itself.
Axial rot60(Axial a) { return {-a.y, a.x + a.y}; }

Axial rot60_times(Axial a, int times) {
    for (int i = 0; i < times; ++i) a = rot60(a);
    return a;
}

// Vertex i of the result is coords[i]; edges are all lattice-adjacent pairs,
// so the result is an induced subgraph of the lattice by construction.
Graph lattice_induced_graph(const std::vector<Axial>& coords) {
    std::map<Axial, int> index;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!index.emplace(coords[i], static_cast<int>(i)).second)
            throw std::logic_error("lattice embedding: coordinate collision");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        for (Axial d : kOffsets) {
            auto it = index.find(coords[i] + d);
            if (it != index.end() && it->second > static_cast<int>(i))
                edges.emplace_back(static_cast<int>(i), it->second);
        }
    }
    return Graph(static_cast<int>(coords.size()), std::move(edges));
}

}  // namespace

Graph make_triangular_ladder(int n1) {
    if (n1 < 2) throw std::invalid_argument("make_triangular_ladder: need at least 2 vertices");
    const int long_rail = (n1 + 1) / 2;
    const int short_rail = n1 / 2;
    std::vector<Axial> coords;
    coords.reserve(n1);
    for (int i = 0; i < long_rail; ++i) coords.push_back({i, 0});
    for (int i = 0; i < short_rail; ++i) coords.push_back({i, 1});
    return lattice_induced_graph(coords);
}

SlackGadget make_slack_gadget(int n) {
    if (n < 8 || n % 2 != 0)
        throw std::invalid_argument("make_slack_gadget: n must be even and >= 8");

    // Hexagon with 2 edges per side: the radius-2 ring, in ring order
    // (corner, midpoint, corner, ...). ring[2j] and ring[2j+1] are the
    // rotations of (2,0) and (1,1).
    std::array<Axial, 12> ring;
    for (int j = 0; j < 6; ++j) {
        ring[2 * j] = rot60_times({2, 0}, j);
        ring[2 * j + 1] = rot60_times({1, 1}, j);
    }

    // A ladder hangs off corner c, replacing ring edge (c-1, c) on the
    // Hamiltonian cycle. In base position (corner 0) its rails run east:
    // inner rail at y = 0, outer rail at y = -1, both starting at x = 3; the
    // outer rail takes the extra vertex when the size is odd. The detour
    // walks the outer rail out, crosses to the inner rail, and walks back.
    //
    // The two long ladders alternate with the two short ones around the
    // hexagon. This spacing leaves no way to cut the cycle into three arcs
    // of n with every ladder intact, so every balanced partition severs a
    // ladder and loses its spanning tree weight.
    struct LadderSpec {
        int corner;
        int size;
    };
    const std::array<LadderSpec, 4> specs = {{
        {2, n - 1},        // the lone long ladder
        {4, (n - 6) / 2},  // first of the paired ladders
        {0, (n - 6) / 2},  // second of the paired ladders
        {8, n - 5},        // ladder of the five-vertex hexagon arc
    }};

    auto detour_coords = [](const LadderSpec& spec) {
        const int outer = (spec.size + 1) / 2;
        const int inner = spec.size / 2;
        std::vector<Axial> path;
        path.reserve(spec.size);
        for (int i = 0; i < outer; ++i) path.push_back({3 + i, -1});
        for (int i = inner - 1; i >= 0; --i) path.push_back({3 + i, 0});
        for (Axial& a : path) a = rot60_times(a, spec.corner / 2);
        return path;
    };

    // Assemble all coordinates in Hamiltonian cycle order, so vertex ids are
    // cycle positions. The corner-0 detour wraps around after ring index 11.
    SlackGadget gadget;
    gadget.n = n;
    std::vector<Axial> coords;
    coords.reserve(3 * n);
    std::array<int, 12> ring_vertex{};
    std::array<std::vector<int>, 4> ladder_vertices;
    auto append_detour = [&](std::size_t l) {
        for (Axial a : detour_coords(specs[l])) {
            ladder_vertices[l].push_back(static_cast<int>(coords.size()));
            coords.push_back(a);
        }
    };
    for (int t = 0; t < 12; ++t) {
        for (std::size_t l = 0; l < specs.size(); ++l) {
            if (specs[l].corner == t && t != 0) append_detour(l);
        }
        ring_vertex[t] = static_cast<int>(coords.size());
        coords.push_back(ring[t]);
    }
    // The corner-0 detour wraps around after ring index 11.
    for (std::size_t l = 0; l < specs.size(); ++l) {
        if (specs[l].corner == 0) append_detour(l);
    }
    if (static_cast<int>(coords.size()) != 3 * n)
        throw std::logic_error("make_slack_gadget: vertex count mismatch");

    gadget.graph = lattice_induced_graph(coords);
    gadget.hamiltonian_cycle.resize(3 * n);
    for (int i = 0; i < 3 * n; ++i) gadget.hamiltonian_cycle[i] = i;
    for (int i = 0; i < 3 * n; ++i) {
        const int next = (i + 1) % (3 * n);
        if (!gadget.graph.has_edge(gadget.hamiltonian_cycle[i], gadget.hamiltonian_cycle[next]))
            throw std::logic_error("make_slack_gadget: construction cycle is not Hamiltonian");
    }
    gadget.hexagon.assign(ring_vertex.begin(), ring_vertex.end());
    gadget.ladders = ladder_vertices;

    // The heavy slack-1 partition: the long ladder alone (n-1), seven hexagon
    // vertices plus both paired ladders (n+1), and the remaining five hexagon
    // vertices plus the last ladder (n).
    std::vector<int> red = ladder_vertices[0];
    std::vector<int> green;
    for (int t = 0; t <= 6; ++t) green.push_back(ring_vertex[t]);
    for (int l : {1, 2})
        green.insert(green.end(), ladder_vertices[l].begin(), ladder_vertices[l].end());
    std::vector<int> blue;
    for (int t = 7; t <= 11; ++t) blue.push_back(ring_vertex[t]);
    blue.insert(blue.end(), ladder_vertices[3].begin(), ladder_vertices[3].end());

    Partition witness;
    witness.blocks = {std::move(red), std::move(green), std::move(blue)};
    canonicalize(witness);
    validate_partition(gadget.graph, witness);
    {
        std::vector<int> sizes = witness.block_sizes();
        std::sort(sizes.begin(), sizes.end());
        if (sizes != std::vector<int>{n - 1, n, n + 1})
            throw std::logic_error("make_slack_gadget: witness partition has wrong sizes");
    }
    gadget.witness_partition = std::move(witness);
    return gadget;
}

namespace {

std::int64_t pair_count(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

// Decode a linear index over all u < v pairs into the edge {u, v}.
Edge decode_edge_index(int n, std::int64_t index) {
    int u = 0;
    std::int64_t row = n - 1;
    while (index >= row) {
        index -= row;
        --row;
        ++u;
    }
    return Edge(u, u + 1 + static_cast<int>(index));
}

}  // namespace

Graph gen_gnm(int n, std::int64_t m, bool require_connected, RngStream& rng, int max_attempts) {
    if (n < 1) throw std::invalid_argument("gen_gnm: n must be >= 1");
    const std::int64_t all = pair_count(n);
    if (m < 0 || m > all) throw std::invalid_argument("gen_gnm: edge count out of range");
    if (require_connected && m < n - 1)
        throw std::invalid_argument("gen_gnm: too few edges for a connected graph");

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        // Floyd's algorithm: m distinct edge indices, uniform over subsets.
        std::unordered_set<std::int64_t> chosen;
        chosen.reserve(static_cast<std::size_t>(m) * 2);
        for (std::int64_t j = all - m; j < all; ++j) {
            const std::int64_t t = static_cast<std::int64_t>(rng.uniform_below(j + 1));
            if (!chosen.insert(t).second) chosen.insert(j);
        }
        std::vector<Edge> edges;
        edges.reserve(chosen.size());
        for (std::int64_t index : chosen) edges.push_back(decode_edge_index(n, index));
        Graph g(n, std::move(edges));
        if (!require_connected || is_connected(g)) return g;
    }
    throw budget_exhausted_error("gen_gnm: no connected sample within attempt budget");
}

Graph gen_gnp(int n, double p, bool require_connected, RngStream& rng, int max_attempts) {
    if (n < 1) throw std::invalid_argument("gen_gnp: n must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_gnp: p must be in [0, 1]");

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.bernoulli(p)) edges.emplace_back(u, v);
        Graph g(n, std::move(edges));
        if (!require_connected || is_connected(g)) return g;
    }
    throw budget_exhausted_error("gen_gnp: no connected sample within attempt budget");
}

}  // namespace treesplit
