#include "treesplit/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace treesplit {

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices_ < 0) throw std::invalid_argument("Graph: negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.v >= num_vertices_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("Graph: self-loop");
        if (i > 0 && edges_[i - 1] == e) throw std::invalid_argument("Graph: duplicate edge");
    }
    adj_.assign(num_vertices_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        adj_[edges_[i].u].emplace_back(edges_[i].v, static_cast<int>(i));
        adj_[edges_[i].v].emplace_back(edges_[i].u, static_cast<int>(i));
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
    return edge_index(u, v) >= 0;
}

int Graph::edge_index(int u, int v) const {
    const Edge e(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return -1;
}

namespace {

// Iterative BFS over all vertices; fills labels with dense component ids in
// order of first (smallest) vertex reached.
int label_components(const Graph& g, std::vector<int>& labels) {
    const int n = g.num_vertices();
    labels.assign(n, -1);
    int next_label = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (labels[s] != -1) continue;
        const int label = next_label++;
        labels[s] = label;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, id] : g.neighbors(v)) {
                (void)id;
                if (labels[w] == -1) {
                    labels[w] = label;
                    stack.push_back(w);
                }
            }
        }
    }
    return next_label;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.num_vertices() <= 1) return true;
    std::vector<int> labels;
    return label_components(g, labels) == 1;
}

std::vector<int> connected_component_labels(const Graph& g) {
    std::vector<int> labels;
    label_components(g, labels);
    return labels;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index_of(g.num_vertices(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.num_vertices())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (index_of[v] != -1)
            throw std::invalid_argument("induced_subgraph: duplicate vertex");
        index_of[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (index_of[e.u] != -1 && index_of[e.v] != -1)
            edges.emplace_back(index_of[e.u], index_of[e.v]);
    }
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<int> Partition::labels(int num_vertices) const {
    std::vector<int> result(num_vertices, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (int v : blocks[b]) {
            if (v < 0 || v >= num_vertices)
                throw std::invalid_argument("Partition::labels: vertex out of range");
            result[v] = static_cast<int>(b);
        }
    }
    return result;
}

std::vector<int> Partition::block_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
    return sizes;
}

Partition& canonicalize(Partition& p) {
    for (auto& block : p.blocks) std::sort(block.begin(), block.end());
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return p;
}

Partition partition_from_labels(const std::vector<int>& labels) {
    int max_label = -1;
    for (int l : labels) max_label = std::max(max_label, l);
    Partition p;
    p.blocks.assign(max_label + 1, {});
    for (std::size_t v = 0; v < labels.size(); ++v) {
        if (labels[v] < 0) throw std::invalid_argument("partition_from_labels: unlabeled vertex");
        p.blocks[labels[v]].push_back(static_cast<int>(v));
    }
    for (const auto& b : p.blocks)
        if (b.empty()) throw std::invalid_argument("partition_from_labels: empty block");
    return canonicalize(p);
}

bool is_valid_partition(const Graph& g, const Partition& p) {
    const int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (const auto& block : p.blocks) {
        if (block.empty()) return false;
        for (int v : block) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
            ++covered;
        }
        if (!is_connected(induced_subgraph(g, block))) return false;
    }
    return covered == n;
}

void validate_partition(const Graph& g, const Partition& p) {
    if (!is_valid_partition(g, p))
        throw std::invalid_argument("partition is not a connected partition of the graph");
}

Partition components_partition(const Graph& g) {
    return partition_from_labels(connected_component_labels(g));
}

Multigraph contract_partition(const Graph& g, const Partition& p) {
    validate_partition(g, p);
    const std::vector<int> label = p.labels(g.num_vertices());
    Multigraph h(p.num_blocks());
    for (const Edge& e : g.edges()) {
        int a = label[e.u], b = label[e.v];
        if (a != b) {
            ++h.multiplicity[a][b];
            ++h.multiplicity[b][a];
        }
    }
    return h;
}

void write_edge_list(const Graph& g, std::ostream& os) {
    os << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& is) {
    int n = 0, m = 0;
    if (!(is >> n >> m)) throw std::invalid_argument("edge list: bad header");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(is >> u >> v)) throw std::invalid_argument("edge list: truncated");
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

std::string to_edge_list_string(const Graph& g) {
    std::ostringstream os;
    write_edge_list(g, os);
    return os.str();
}

Graph graph_from_edge_list_string(const std::string& text) {
    std::istringstream is(text);
    return read_edge_list(is);
}

}  // namespace treesplit
