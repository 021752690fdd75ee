#include "treesplit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace treesplit {
namespace oracle {

namespace {

constexpr std::uint64_t kTreeGuard = 1'000'000;
constexpr std::uint64_t kSubsetGuard = 50'000'000;
constexpr std::uint64_t kPartitionWorkGuard = 500'000'000;

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    // false if already joined
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

BigCount factorial_big(unsigned long n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigCount pow_big(unsigned long base, unsigned long exp) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

BigCount binomial_big(unsigned long n, unsigned long k) {
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// tau(K_b) = b^(b-2); 1 for b in {1, 2}.
BigCount cayley_count(int b) {
    if (b <= 2) return 1;
    return pow_big(static_cast<unsigned long>(b), static_cast<unsigned long>(b - 2));
}

}  // namespace

void enumerate_labeled_trees(int n, const std::function<void(const SpanningTree&)>& visit) {
    if (n < 2 || n > 10)
        throw std::invalid_argument("enumerate_labeled_trees: n must be in [2, 10]");
    if (n == 2) {
        visit(SpanningTree{2, {Edge(0, 1)}});
        return;
    }
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        visit(prufer_decode(seq));
        int pos = n - 3;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
}

namespace {

struct TreeEnumerator {
    const Graph& g;
    const std::function<void(const SpanningTree&)>& visit;
    std::vector<Edge> chosen;

    // Include/exclude on edge index; each spanning tree is reached by exactly
    // one include/exclude path.
    void recurse(int edge_index) {
        const int n = g.num_vertices();
        if (static_cast<int>(chosen.size()) == n - 1) {
            visit(SpanningTree{n, chosen});
            return;
        }
        if (edge_index == g.num_edges()) return;
        if (static_cast<int>(chosen.size()) + (g.num_edges() - edge_index) < n - 1) return;

        const Edge& e = g.edge(edge_index);
        DisjointSets chosen_sets(n);
        for (const Edge& c : chosen) chosen_sets.unite(c.u, c.v);
        if (chosen_sets.find(e.u) != chosen_sets.find(e.v)) {
            chosen.push_back(e);
            recurse(edge_index + 1);
            chosen.pop_back();
        }
        // Exclude branch only if the remaining edges can still span.
        DisjointSets rest(n);
        int components = n;
        for (const Edge& c : chosen) components -= rest.unite(c.u, c.v) ? 1 : 0;
        for (int i = edge_index + 1; i < g.num_edges(); ++i)
            components -= rest.unite(g.edge(i).u, g.edge(i).v) ? 1 : 0;
        if (components == 1) recurse(edge_index + 1);
    }
};

}  // namespace

void enumerate_spanning_trees(const Graph& g,
                              const std::function<void(const SpanningTree&)>& visit) {
    const int n = g.num_vertices();
    if (n == 0) return;
    if (n == 1) {
        visit(SpanningTree{1, {}});
        return;
    }
    const BigCount tau = count_spanning_trees(g);
    if (tau == 0) return;
    if (tau > BigCount(static_cast<unsigned long>(kTreeGuard)))
        throw std::invalid_argument("enumerate_spanning_trees: tree count exceeds guard");
    TreeEnumerator enumerator{g, visit, {}};
    enumerator.chosen.reserve(n - 1);
    enumerator.recurse(0);
}

void enumerate_forests(const Graph& g, int k,
                       const std::function<void(const Forest&)>& visit) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    if (k < 1 || k > n) throw std::invalid_argument("enumerate_forests: bad component count");
    const int pick = n - k;
    if (pick > m) return;

    // Subset iteration over all C(m, n-k) edge subsets; guard on the total.
    BigCount subsets = binomial_big(m, pick);
    if (subsets > BigCount(static_cast<unsigned long>(kSubsetGuard)))
        throw std::invalid_argument("enumerate_forests: subset count exceeds guard");

    std::vector<int> ids(pick);
    std::iota(ids.begin(), ids.end(), 0);
    for (;;) {
        DisjointSets sets(n);
        bool acyclic = true;
        for (int id : ids) {
            if (!sets.unite(g.edge(id).u, g.edge(id).v)) {
                acyclic = false;
                break;
            }
        }
        if (acyclic) visit(make_forest(g, ids));

        int pos = pick - 1;
        while (pos >= 0 && ids[pos] == m - pick + pos) --pos;
        if (pos < 0) break;
        ++ids[pos];
        for (int i = pos + 1; i < pick; ++i) ids[i] = ids[i - 1] + 1;
    }
}

namespace {

// Recursive connected-partition enumeration. The block containing the lowest
// unassigned vertex is grown by include/exclude branching on a frontier
// vertex, which reaches every connected block exactly once.
struct PartitionEnumerator {
    const Graph& g;
    std::vector<int> sizes;  // remaining block sizes (multiset); empty + free=false means any sizes
    int blocks_remaining = 0;  // used when free_sizes
    bool free_sizes = false;
    std::vector<char> assigned;
    std::vector<std::vector<int>> blocks;
    std::vector<Partition> out;
    std::uint64_t work = 0;

    explicit PartitionEnumerator(const Graph& graph) : g(graph), assigned(graph.num_vertices(), 0) {}

    void bump() {
        if (++work > kPartitionWorkGuard)
            throw std::invalid_argument("enumerate_connected_partitions: work guard exceeded");
    }

    // Sizes of the connected components of the unassigned subgraph.
    std::vector<int> free_component_sizes() {
        const int n = g.num_vertices();
        std::vector<int> comp_sizes;
        std::vector<char> seen(n, 0);
        std::vector<int> stack;
        for (int s = 0; s < n; ++s) {
            if (assigned[s] || seen[s]) continue;
            int size = 0;
            seen[s] = 1;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++size;
                for (auto [w, id] : g.neighbors(v)) {
                    (void)id;
                    if (!assigned[w] && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            comp_sizes.push_back(size);
        }
        return comp_sizes;
    }

    // Can `remaining` (multiset) be partitioned into groups summing to each
    // component size? Every future block lives inside one component.
    static bool sizes_feasible(std::vector<int> components, std::vector<int> remaining) {
        if (components.empty()) return remaining.empty();
        std::sort(remaining.rbegin(), remaining.rend());
        const int target = components.back();
        components.pop_back();
        // Try every sub-multiset of `remaining` summing to target (small inputs).
        std::vector<int> picked;
        return pick_for_component(components, remaining, picked, target, 0);
    }

    static bool pick_for_component(std::vector<int>& components, std::vector<int>& remaining,
                                   std::vector<int>& picked, int target, std::size_t from) {
        if (target == 0) {
            std::vector<int> rest;
            for (std::size_t i = 0, p = 0; i < remaining.size(); ++i) {
                if (p < picked.size() && picked[p] == static_cast<int>(i)) {
                    ++p;
                    continue;
                }
                rest.push_back(remaining[i]);
            }
            return sizes_feasible(components, rest);
        }
        for (std::size_t i = from; i < remaining.size(); ++i) {
            if (remaining[i] > target) continue;
            if (i > from && remaining[i] == remaining[i - 1] &&
                (picked.empty() || picked.back() != static_cast<int>(i - 1)))
                continue;  // skip duplicate choices
            picked.push_back(static_cast<int>(i));
            if (pick_for_component(components, remaining, picked, target - remaining[i], i + 1))
                return true;
            picked.pop_back();
        }
        return false;
    }

    bool feasible() {
        if (free_sizes) {
            // Each component must host at least one block and blocks cannot
            // straddle components.
            auto comps = free_component_sizes();
            return static_cast<int>(comps.size()) <= blocks_remaining;
        }
        return sizes_feasible(free_component_sizes(), sizes);
    }

    void emit() {
        Partition p;
        p.blocks = blocks;
        out.push_back(canonicalize(p));
    }

    void next_block() {
        bump();
        int root = -1;
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (!assigned[v]) {
                root = v;
                break;
            }
        }
        if (root == -1) {
            if (free_sizes ? blocks_remaining == 0 : sizes.empty()) emit();
            return;
        }
        if (!free_sizes && sizes.empty()) return;
        if (free_sizes && blocks_remaining == 0) return;
        if (!feasible()) return;

        std::vector<int> block{root};
        assigned[root] = 1;
        std::vector<char> banned(g.num_vertices(), 0);
        if (free_sizes) {
            --blocks_remaining;
            grow_free(block, banned);
            ++blocks_remaining;
        } else {
            int last_size = -1;
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                if (sizes[i] == last_size) continue;  // duplicate size, same branches
                last_size = sizes[i];
                const int target = sizes[i];
                sizes.erase(sizes.begin() + static_cast<std::ptrdiff_t>(i));
                grow_to_size(block, banned, target);
                sizes.insert(sizes.begin() + static_cast<std::ptrdiff_t>(i), target);
            }
        }
        assigned[root] = 0;
    }

    int smallest_frontier(const std::vector<int>& block, const std::vector<char>& banned) {
        int best = -1;
        for (int v : block) {
            for (auto [w, id] : g.neighbors(v)) {
                (void)id;
                if (!assigned[w] && !banned[w] && (best == -1 || w < best)) best = w;
            }
        }
        return best;
    }

    // Free vertices reachable from the block avoiding banned ones; counts the
    // block itself.
    int reachable_size(const std::vector<int>& block, const std::vector<char>& banned) {
        std::vector<char> seen(g.num_vertices(), 0);
        std::vector<int> stack;
        int count = 0;
        for (int v : block) {
            seen[v] = 1;
            ++count;
            stack.push_back(v);
        }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, id] : g.neighbors(v)) {
                (void)id;
                if (!seen[w] && !assigned[w] && !banned[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count;
    }

    void grow_to_size(std::vector<int>& block, std::vector<char>& banned, int target) {
        bump();
        if (static_cast<int>(block.size()) == target) {
            blocks.push_back(block);
            next_block();
            blocks.pop_back();
            return;
        }
        if (reachable_size(block, banned) < target) return;
        const int v = smallest_frontier(block, banned);
        if (v == -1) return;
        assigned[v] = 1;
        block.push_back(v);
        grow_to_size(block, banned, target);
        block.pop_back();
        assigned[v] = 0;
        banned[v] = 1;
        grow_to_size(block, banned, target);
        banned[v] = 0;
    }

    // Any-size variant: a block is closed only when its frontier is empty, so
    // each connected superset of the root is closed at exactly one node.
    void grow_free(std::vector<int>& block, std::vector<char>& banned) {
        bump();
        const int v = smallest_frontier(block, banned);
        if (v == -1) {
            blocks.push_back(block);
            next_block();
            blocks.pop_back();
            return;
        }
        assigned[v] = 1;
        block.push_back(v);
        grow_free(block, banned);
        block.pop_back();
        assigned[v] = 0;
        banned[v] = 1;
        grow_free(block, banned);
        banned[v] = 0;
    }
};

}  // namespace

std::vector<Partition> enumerate_connected_partitions(const Graph& g, std::vector<int> sizes) {
    int total = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("enumerate_connected_partitions: bad block size");
        total += s;
    }
    if (total != g.num_vertices())
        throw std::invalid_argument("enumerate_connected_partitions: sizes do not sum to N");
    PartitionEnumerator e(g);
    std::sort(sizes.begin(), sizes.end());
    e.sizes = std::move(sizes);
    e.next_block();
    std::sort(e.out.begin(), e.out.end());
    return std::move(e.out);
}

std::vector<Partition> enumerate_connected_partitions_k(const Graph& g, int k) {
    if (k < 1 || k > g.num_vertices())
        throw std::invalid_argument("enumerate_connected_partitions_k: bad k");
    PartitionEnumerator e(g);
    e.free_sizes = true;
    e.blocks_remaining = k;
    e.next_block();
    std::sort(e.out.begin(), e.out.end());
    return std::move(e.out);
}

std::vector<std::vector<int>> balanced_edge_subsets(const SpanningTree& t, int k) {
    const int n = t.num_vertices;
    if (k < 1 || n % k != 0)
        throw std::invalid_argument("balanced_edge_subsets: vertex count not divisible by k");
    const int piece = n / k;
    const int m = static_cast<int>(t.edges.size());
    const int pick = k - 1;
    std::vector<std::vector<int>> found;
    if (pick > m) return found;

    std::vector<int> ids(pick);
    std::iota(ids.begin(), ids.end(), 0);
    for (;;) {
        DisjointSets sets(n);
        std::vector<char> removed(m, 0);
        for (int id : ids) removed[id] = 1;
        for (int i = 0; i < m; ++i) {
            if (!removed[i]) sets.unite(t.edges[i].u, t.edges[i].v);
        }
        std::vector<int> size(n, 0);
        for (int v = 0; v < n; ++v) ++size[sets.find(v)];
        bool balanced = true;
        for (int v = 0; v < n && balanced; ++v) {
            if (size[v] != 0 && size[v] != piece) balanced = false;
        }
        if (balanced) found.push_back(ids);

        if (pick == 0) break;
        int pos = pick - 1;
        while (pos >= 0 && ids[pos] == m - pick + pos) --pos;
        if (pos < 0) break;
        ++ids[pos];
        for (int i = pos + 1; i < pick; ++i) ids[i] = ids[i - 1] + 1;
    }
    return found;
}

SplitCensus exact_split_census(const Graph& g, int k) {
    const int n = g.num_vertices();
    if (k < 1 || n % k != 0)
        throw std::invalid_argument("exact_split_census: vertex count not divisible by k");

    SplitCensus census;
    auto tally = [&](const SpanningTree& t) {
        census.total_trees += 1;
        const auto fast = find_balanced_split(t, k);
        const auto brute = balanced_edge_subsets(t, k);
        if (brute.size() > 1)
            throw std::logic_error("exact_split_census: multiple balanced splits in one tree");
        if (fast.has_value() != (brute.size() == 1))
            throw std::logic_error("exact_split_census: fast and brute-force splits disagree");
        if (fast && fast->tree_edge_indices != brute.front())
            throw std::logic_error("exact_split_census: split edge sets differ");
        if (fast) census.splittable_trees += 1;
    };

    const bool complete =
        static_cast<std::int64_t>(g.num_edges()) == static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (complete && n >= 2) {
        enumerate_labeled_trees(n, tally);
    } else {
        enumerate_spanning_trees(g, tally);
    }
    if (census.total_trees == 0)
        throw std::invalid_argument("exact_split_census: graph has no spanning trees");
    census.probability = mpq_class(census.splittable_trees, census.total_trees);
    census.probability.canonicalize();
    return census;
}

BigCount splittable_count_formula(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("splittable_count_formula: n, k must be >= 1");
    const unsigned long un = static_cast<unsigned long>(n);
    const unsigned long uk = static_cast<unsigned long>(k);

    // (kn)! / ((n!)^k k!) partitions, a spanning tree inside each piece, a
    // quotient tree on the pieces with n^2 choices per quotient edge.
    BigCount result = factorial_big(uk * un);
    BigCount denom = factorial_big(un);
    mpz_pow_ui(denom.get_mpz_t(), denom.get_mpz_t(), uk);
    denom *= factorial_big(uk);
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), denom.get_mpz_t());

    if (n > 2) result *= pow_big(un, uk * static_cast<unsigned long>(n - 2));
    if (k > 2) result *= pow_big(uk, static_cast<unsigned long>(k - 2));
    result *= pow_big(un, 2 * (uk - 1));
    return result;
}

std::vector<std::pair<int, BigCount>> split_size_weight_histogram(int N) {
    if (N < 2) throw std::invalid_argument("split_size_weight_histogram: N must be >= 2");
    std::vector<std::pair<int, BigCount>> rows;
    for (int i = 1; 2 * i <= N; ++i) {
        BigCount weight = binomial_big(static_cast<unsigned long>(N), static_cast<unsigned long>(i));
        weight *= cayley_count(i);
        weight *= cayley_count(N - i);
        if (2 * i == N) {
            // Unordered splits: (A, complement) pairs are counted twice.
            mpz_divexact_ui(weight.get_mpz_t(), weight.get_mpz_t(), 2);
        }
        rows.emplace_back(i, std::move(weight));
    }
    return rows;
}

std::vector<Partition> gadget_balanced_partitions(const SlackGadget& gadget) {
    const int n = gadget.n;
    const int total = 3 * n;
    const Graph& g = gadget.graph;

    // Premises of the cycle argument, checked on the actual graph: every
    // ladder is smaller than a piece and meets the rest of the graph only at
    // its two base vertices (first and last in detour order).
    for (const auto& ladder : gadget.ladders) {
        if (static_cast<int>(ladder.size()) >= n)
            throw std::logic_error("gadget_balanced_partitions: ladder as large as a piece");
        std::vector<char> in_ladder(g.num_vertices(), 0);
        for (int v : ladder) in_ladder[v] = 1;
        for (std::size_t i = 1; i + 1 < ladder.size(); ++i) {
            for (auto [w, id] : g.neighbors(ladder[i])) {
                (void)id;
                if (!in_ladder[w])
                    throw std::logic_error(
                        "gadget_balanced_partitions: interior ladder vertex touches the outside");
            }
        }
    }

    // The n balanced partitions: cut the recorded Hamiltonian cycle into
    // three arcs of n at offsets 0..n-1.
    std::vector<Partition> result;
    std::vector<int> cycle_position(total);
    for (int i = 0; i < total; ++i) cycle_position[gadget.hamiltonian_cycle[i]] = i;
    for (int offset = 0; offset < n; ++offset) {
        Partition p;
        for (int piece = 0; piece < 3; ++piece) {
            std::vector<int> block(n);
            for (int j = 0; j < n; ++j)
                block[j] = gadget.hamiltonian_cycle[(offset + piece * n + j) % total];
            p.blocks.push_back(std::move(block));
        }
        canonicalize(p);
        validate_partition(g, p);
        if (!is_balanced(p, n))
            throw std::logic_error("gadget_balanced_partitions: cycle cut not balanced");
        // Each ladder must be partitioned along the cycle: walking the ladder
        // in detour order, the piece label changes exactly once per boundary.
        const std::vector<int> label = p.labels(total);
        for (const auto& ladder : gadget.ladders) {
            int changes = 0;
            std::set<int> distinct{label[ladder.front()]};
            for (std::size_t i = 1; i < ladder.size(); ++i) {
                changes += label[ladder[i]] != label[ladder[i - 1]];
                distinct.insert(label[ladder[i]]);
            }
            if (changes != static_cast<int>(distinct.size()) - 1)
                throw std::logic_error(
                    "gadget_balanced_partitions: ladder cut not aligned with the cycle");
        }
        result.push_back(std::move(p));
    }
    std::sort(result.begin(), result.end());
    if (std::adjacent_find(result.begin(), result.end()) != result.end())
        throw std::logic_error("gadget_balanced_partitions: duplicate cycle partitions");
    return result;
}

std::vector<Partition> gadget_balanced_partitions(int n) {
    return gadget_balanced_partitions(make_slack_gadget(n));
}

}  // namespace oracle
}  // namespace treesplit
