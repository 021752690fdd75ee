#include "treesplit/splitter.hpp"

#include <algorithm>
#include <stdexcept>

namespace treesplit {

RootedTree root_tree(const SpanningTree& t, int root) {
    const int n = t.num_vertices;
    if (root < 0 || root >= n) throw std::invalid_argument("root_tree: root out of range");

    // Flat CSR adjacency; this sits on the hot path of the splittability
    // sweeps, where per-vertex vectors are too allocation-heavy.
    std::vector<int> offset(n + 1, 0);
    for (const Edge& e : t.edges) {
        if (e.u < 0 || e.v >= n) throw std::invalid_argument("root_tree: edge out of range");
        ++offset[e.u + 1];
        ++offset[e.v + 1];
    }
    for (int v = 0; v < n; ++v) offset[v + 1] += offset[v];
    std::vector<int> cursor(offset.begin(), offset.end() - 1);
    std::vector<int> nbr(2 * t.edges.size());
    std::vector<int> nbr_edge(2 * t.edges.size());
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        const Edge& e = t.edges[i];
        nbr[cursor[e.u]] = e.v;
        nbr_edge[cursor[e.u]++] = static_cast<int>(i);
        nbr[cursor[e.v]] = e.u;
        nbr_edge[cursor[e.v]++] = static_cast<int>(i);
    }

    RootedTree rt;
    rt.root = root;
    rt.parent.assign(n, -1);
    rt.parent_edge.assign(n, -1);
    rt.preorder.reserve(n);
    std::vector<int> stack;
    stack.reserve(n);
    stack.push_back(root);
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        rt.preorder.push_back(v);
        for (int i = offset[v]; i < offset[v + 1]; ++i) {
            const int w = nbr[i];
            if (!seen[w]) {
                seen[w] = 1;
                rt.parent[w] = v;
                rt.parent_edge[w] = nbr_edge[i];
                stack.push_back(w);
            }
        }
    }
    if (static_cast<int>(rt.preorder.size()) != n)
        throw std::invalid_argument("root_tree: edges do not span the vertices");
    return rt;
}

std::vector<int> subtree_sizes(const SpanningTree& t, int root) {
    const RootedTree rt = root_tree(t, root);
    std::vector<int> size(t.num_vertices, 1);
    for (auto it = rt.preorder.rbegin(); it != rt.preorder.rend(); ++it) {
        if (rt.parent[*it] != -1) size[rt.parent[*it]] += size[*it];
    }
    return size;
}

namespace {

// Component labels of t with the given tree edges removed; labels dense in
// order of smallest vertex. Returns sizes via out param.
std::vector<int> cut_components(const SpanningTree& t, const std::vector<int>& cut_edges,
                                std::vector<int>& sizes) {
    std::vector<char> is_cut(t.edges.size(), 0);
    for (int id : cut_edges) {
        if (id < 0 || id >= static_cast<int>(t.edges.size()))
            throw std::invalid_argument("split: edge index not in tree");
        is_cut[id] = 1;
    }
    auto adj = tree_adjacency(t);
    std::vector<int> label(t.num_vertices, -1);
    sizes.clear();
    std::vector<int> stack;
    for (int s = 0; s < t.num_vertices; ++s) {
        if (label[s] != -1) continue;
        const int comp = static_cast<int>(sizes.size());
        sizes.push_back(0);
        label[s] = comp;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++sizes[comp];
            for (auto [w, edge_id] : adj[v]) {
                if (!is_cut[edge_id] && label[w] == -1) {
                    label[w] = comp;
                    stack.push_back(w);
                }
            }
        }
    }
    return label;
}

}  // namespace

std::optional<SplitSet> find_balanced_split(const SpanningTree& t, int k) {
    const int n_vertices = t.num_vertices;
    if (k < 1) throw std::invalid_argument("find_balanced_split: k must be >= 1");
    if (n_vertices % k != 0)
        throw std::invalid_argument("find_balanced_split: vertex count not divisible by k");
    const int piece = n_vertices / k;

    const RootedTree rt = root_tree(t, 0);
    std::vector<int> size(n_vertices, 1);
    SplitSet split;
    for (auto it = rt.preorder.rbegin(); it != rt.preorder.rend(); ++it) {
        const int v = *it;
        if (rt.parent[v] != -1) {
            size[rt.parent[v]] += size[v];
            // Removing v's parent edge leaves sides of size[v] and N - size[v];
            // both are multiples of the piece size iff size[v] is.
            if (size[v] % piece == 0) split.tree_edge_indices.push_back(rt.parent_edge[v]);
        }
    }
    if (static_cast<int>(split.tree_edge_indices.size()) != k - 1) return std::nullopt;

    // The multiples-of-n test characterizes the unique balanced split set;
    // verify the component sizes outright so any mismatch fails hard instead
    // of biasing downstream sampling.
    std::vector<int> comp_sizes;
    cut_components(t, split.tree_edge_indices, comp_sizes);
    if (static_cast<int>(comp_sizes.size()) != k)
        throw std::logic_error("find_balanced_split: edge test produced wrong component count");
    for (int s : comp_sizes) {
        if (s != piece)
            throw std::logic_error("find_balanced_split: edge test produced unbalanced pieces");
    }
    std::sort(split.tree_edge_indices.begin(), split.tree_edge_indices.end());
    return split;
}

Partition apply_split(const SpanningTree& t, const SplitSet& s) {
    std::vector<int> sizes;
    std::vector<int> labels = cut_components(t, s.tree_edge_indices, sizes);
    return partition_from_labels(labels);
}

bool is_balanced(const Partition& p, int n) {
    for (const auto& block : p.blocks) {
        if (static_cast<int>(block.size()) != n) return false;
    }
    return true;
}

bool is_slack_balanced(const Partition& p, int n, int slack) {
    for (const auto& block : p.blocks) {
        const int size = static_cast<int>(block.size());
        if (size < n - slack || size > n + slack) return false;
    }
    return true;
}

std::vector<int> find_two_split_edges_with_slack(const SpanningTree& t, int n, int slack) {
    const int n_vertices = t.num_vertices;
    const RootedTree rt = root_tree(t, 0);
    std::vector<int> size(n_vertices, 1);
    std::vector<int> candidates;
    for (auto it = rt.preorder.rbegin(); it != rt.preorder.rend(); ++it) {
        const int v = *it;
        if (rt.parent[v] == -1) continue;
        size[rt.parent[v]] += size[v];
        const int side = size[v];
        const int other = n_vertices - side;
        if (side >= n - slack && side <= n + slack && other >= n - slack && other <= n + slack)
            candidates.push_back(rt.parent_edge[v]);
    }
    std::sort(candidates.begin(), candidates.end());
    return candidates;
}

Forest make_forest(const Graph& g, std::vector<int> edge_ids) {
    Forest f;
    f.edge_ids = std::move(edge_ids);
    const int n = g.num_vertices();

    std::vector<std::vector<int>> adj(n);
    for (int id : f.edge_ids) {
        if (id < 0 || id >= g.num_edges())
            throw std::invalid_argument("make_forest: edge id out of range");
        adj[g.edge(id).u].push_back(g.edge(id).v);
        adj[g.edge(id).v].push_back(g.edge(id).u);
    }
    f.component_of.assign(n, -1);
    f.component_sizes.clear();
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (f.component_of[s] != -1) continue;
        const int comp = static_cast<int>(f.component_sizes.size());
        f.component_sizes.push_back(0);
        f.component_of[s] = comp;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++f.component_sizes[comp];
            for (int w : adj[v]) {
                if (f.component_of[w] == -1) {
                    f.component_of[w] = comp;
                    stack.push_back(w);
                }
            }
        }
    }
    // Acyclic iff |edges| = N - #components.
    if (static_cast<int>(f.edge_ids.size()) != n - f.num_components())
        throw std::invalid_argument("make_forest: edge set contains a cycle or duplicates");
    return f;
}

Forest random_forest_with_components(const Graph& g, int k, RngStream& rng) {
    const int n = g.num_vertices();
    if (k < 1 || k > n)
        throw std::invalid_argument("random_forest_with_components: bad component count");
    SpanningTree t = wilson_ust(g, rng);
    // Drop k-1 distinct tree edges chosen uniformly (partial Fisher-Yates).
    std::vector<int> ids(t.edges.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    for (int i = 0; i < k - 1; ++i) {
        std::swap(ids[i], ids[i + rng.uniform_below(ids.size() - i)]);
    }
    std::vector<int> keep;
    for (std::size_t i = k - 1; i < ids.size(); ++i) {
        const Edge& e = t.edges[ids[i]];
        keep.push_back(g.edge_index(e.u, e.v));
    }
    return make_forest(g, std::move(keep));
}

Partition forest_partition(const Forest& f) {
    return partition_from_labels(f.component_of);
}

}  // namespace treesplit
