#include "treesplit/counting.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace treesplit {

double log_big(const BigCount& x) {
    if (sgn(x) <= 0) throw std::invalid_argument("log_big: nonpositive value");
    long exp2 = 0;
    double mantissa = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

namespace {

// Determinant of a dense integer matrix by fraction-free (Bareiss)
// elimination. All intermediate divisions are exact.
BigCount bareiss_determinant(std::vector<std::vector<BigCount>> m) {
    const std::size_t n = m.size();
    if (n == 0) return BigCount(1);
    BigCount prev_pivot(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(m[swap_row][k]) == 0) ++swap_row;
            if (swap_row == n) return BigCount(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
            }
            m[i][k] = 0;
        }
        prev_pivot = m[k][k];
    }
    BigCount det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

std::vector<std::vector<BigCount>> reduced_laplacian(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<std::vector<BigCount>> lap(n - 1, std::vector<BigCount>(n - 1, 0));
    for (const Edge& e : g.edges()) {
        // Drop row/column 0.
        if (e.u > 0) lap[e.u - 1][e.u - 1] += 1;
        if (e.v > 0) lap[e.v - 1][e.v - 1] += 1;
        if (e.u > 0 && e.v > 0) {
            lap[e.u - 1][e.v - 1] -= 1;
            lap[e.v - 1][e.u - 1] -= 1;
        }
    }
    return lap;
}

}  // namespace

BigCount count_spanning_trees(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return BigCount(0);
    if (n == 1) return BigCount(1);
    if (!is_connected(g)) return BigCount(0);
    BigCount det = bareiss_determinant(reduced_laplacian(g));
    return abs(det);
}

BigCount count_spanning_trees(const Multigraph& h) {
    const int n = h.num_vertices;
    if (n == 0) return BigCount(0);
    if (n == 1) return BigCount(1);
    std::vector<std::vector<BigCount>> lap(n - 1, std::vector<BigCount>(n - 1, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::int64_t mult = h.multiplicity[i][j];
            if (mult == 0) continue;
            if (i > 0) lap[i - 1][i - 1] += mult;
            if (j > 0) lap[j - 1][j - 1] += mult;
            if (i > 0 && j > 0) {
                lap[i - 1][j - 1] -= mult;
                lap[j - 1][i - 1] -= mult;
            }
        }
    }
    BigCount det = bareiss_determinant(std::move(lap));
    return abs(det);
}

LogCount log_count_spanning_trees(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return {0.0, true};
    if (n == 1) return {0.0, false};
    if (!is_connected(g)) return {0.0, true};

    // Reduced Laplacian is symmetric positive definite for a connected graph;
    // log det = 2 * sum(log diag(L)) of its Cholesky factor.
    const int d = n - 1;
    std::vector<double> a(static_cast<std::size_t>(d) * d, 0.0);
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * d + j]; };
    for (const Edge& e : g.edges()) {
        if (e.u > 0) at(e.u - 1, e.u - 1) += 1.0;
        if (e.v > 0) at(e.v - 1, e.v - 1) += 1.0;
        if (e.u > 0 && e.v > 0) {
            at(e.u - 1, e.v - 1) -= 1.0;
            at(e.v - 1, e.u - 1) -= 1.0;
        }
    }
    double log_det = 0.0;
    for (int j = 0; j < d; ++j) {
        double diag = at(j, j);
        for (int k = 0; k < j; ++k) diag -= at(j, k) * at(j, k);
        if (diag <= 0.0) return {0.0, true};  // numerically singular
        const double root = std::sqrt(diag);
        log_det += 2.0 * std::log(root);
        at(j, j) = root;
        for (int i = j + 1; i < d; ++i) {
            double v = at(i, j);
            for (int k = 0; k < j; ++k) v -= at(i, k) * at(j, k);
            at(i, j) = v / root;
        }
    }
    return {log_det, false};
}

BigCount partition_weight(const Graph& g, const Partition& p) {
    validate_partition(g, p);
    BigCount weight(1);
    for (const auto& block : p.blocks) {
        weight *= count_spanning_trees(induced_subgraph(g, block));
    }
    return weight;
}

double grimmett_bound(std::int64_t m, int N) {
    if (N < 2) throw std::invalid_argument("grimmett_bound: N must be >= 2");
    if (m < 0) throw std::invalid_argument("grimmett_bound: negative edge count");
    const double base = 2.0 * static_cast<double>(m) / (N - 1);
    return std::pow(base, N - 1) / N;
}

}  // namespace treesplit
