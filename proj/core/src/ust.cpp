#include "treesplit/ust.hpp"

#include <algorithm>
#include <stdexcept>

namespace treesplit {

SpanningTree wilson_ust(const Graph& g, RngStream& rng) {
    const int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("wilson_ust: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("wilson_ust: graph must be connected");

    SpanningTree t;
    t.num_vertices = n;
    t.edges.reserve(n - 1);
    if (n == 1) return t;

    // Cycle popping: next_edge[v] is the successor edge of v on the current
    // walk; revisiting v overwrites it, which erases the loop.
    std::vector<char> in_tree(n, 0);
    std::vector<int> next_edge(n, -1);
    in_tree[0] = 1;  // fixed root; the resulting distribution is root-independent

    for (int start = 1; start < n; ++start) {
        int u = start;
        while (!in_tree[u]) {
            const auto& nbrs = g.neighbors(u);
            const auto& [w, edge_id] = nbrs[rng.uniform_below(nbrs.size())];
            next_edge[u] = edge_id;
            u = w;
        }
        u = start;
        while (!in_tree[u]) {
            in_tree[u] = 1;
            const Edge& e = g.edge(next_edge[u]);
            t.edges.push_back(e);
            u = (e.u == u) ? e.v : e.u;
        }
    }
    return t;
}

SpanningTree prufer_decode(const std::vector<int>& sequence) {
    const int n = static_cast<int>(sequence.size()) + 2;
    std::vector<int> degree(n, 1);
    for (int s : sequence) {
        if (s < 0 || s >= n) throw std::invalid_argument("prufer_decode: symbol out of range");
        ++degree[s];
    }
    SpanningTree t;
    t.num_vertices = n;
    t.edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : sequence) {
        t.edges.emplace_back(leaf, s);
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    t.edges.emplace_back(leaf, n - 1);
    return t;
}

SpanningTree random_labeled_tree(int n, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("random_labeled_tree: n must be >= 1");
    if (n == 1) return SpanningTree{1, {}};
    if (n == 2) return SpanningTree{2, {Edge(0, 1)}};
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    return prufer_decode(seq);
}

std::vector<std::vector<std::pair<int, int>>> tree_adjacency(const SpanningTree& t) {
    std::vector<std::vector<std::pair<int, int>>> adj(t.num_vertices);
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        adj[t.edges[i].u].emplace_back(t.edges[i].v, static_cast<int>(i));
        adj[t.edges[i].v].emplace_back(t.edges[i].u, static_cast<int>(i));
    }
    return adj;
}

bool is_valid_spanning_tree(const SpanningTree& t) {
    const int n = t.num_vertices;
    if (n < 1) return false;
    if (static_cast<int>(t.edges.size()) != n - 1) return false;
    for (const Edge& e : t.edges) {
        if (e.u < 0 || e.v >= n || e.u == e.v) return false;
    }
    // Connected with n-1 edges implies acyclic.
    auto adj = tree_adjacency(t);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, id] : adj[v]) {
            (void)id;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_valid_spanning_tree_of(const Graph& g, const SpanningTree& t) {
    if (t.num_vertices != g.num_vertices()) return false;
    if (!is_valid_spanning_tree(t)) return false;
    for (const Edge& e : t.edges) {
        if (!g.has_edge(e.u, e.v)) return false;
    }
    return true;
}

std::vector<Edge> tree_canonical_key(const SpanningTree& t) {
    std::vector<Edge> key = t.edges;
    std::sort(key.begin(), key.end());
    return key;
}

int tree_diameter(const SpanningTree& t) {
    if (t.num_vertices <= 1) return 0;
    auto adj = tree_adjacency(t);
    auto farthest = [&](int src) {
        std::vector<int> dist(t.num_vertices, -1);
        std::vector<int> queue{src};
        dist[src] = 0;
        int best = src;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            if (dist[v] > dist[best]) best = v;
            for (auto [w, id] : adj[v]) {
                (void)id;
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        return std::pair(best, dist[best]);
    };
    auto [far_vertex, d1] = farthest(0);
    (void)d1;
    return farthest(far_vertex).second;
}

}  // namespace treesplit
