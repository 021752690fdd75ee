#pragma once

#include <gmpxx.h>

#include "treesplit/graph.hpp"

namespace treesplit {

/// Exact nonnegative integer count. Arbitrary precision; products, sums and
/// comparisons never round.
using BigCount = mpz_class;

/// Natural-log magnitude of a count, with an explicit zero flag (log of 0 is
/// not representable). Used where exact counts would be too large.
struct LogCount {
    double log_value = 0.0;
    bool is_zero = false;
};

/// Exact natural log of a positive BigCount (mantissa/exponent split, so
/// values far beyond double range are fine).
double log_big(const BigCount& x);

/// Number of spanning trees via an integer-exact determinant of the reduced
/// Laplacian (fraction-free Bareiss elimination). Disconnected graphs count 0.
BigCount count_spanning_trees(const Graph& g);

/// Matrix-tree count for a multigraph; the Laplacian uses multiplicity sums.
BigCount count_spanning_trees(const Multigraph& h);

/// Floating-point log of the spanning tree count (Cholesky log-determinant).
/// Relative error <= 1e-6 against the exact count on graphs up to a few
/// hundred vertices. Disconnected graphs return the zero flag.
LogCount log_count_spanning_trees(const Graph& g);

/// Spanning tree weight of a partition: product over blocks of the spanning
/// tree count of the induced subgraph. Throws on an invalid partition.
BigCount partition_weight(const Graph& g, const Partition& p);

/// Upper bound on the spanning tree count over all graphs with m edges on
/// N vertices: (1/N) * (2m/(N-1))^(N-1). Tight on complete graphs.
double grimmett_bound(std::int64_t m, int N);

}  // namespace treesplit
