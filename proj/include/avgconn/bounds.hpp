#pragma once

#include <vector>

#include "avgconn/graph.hpp"
#include "avgconn/rational.hpp"

namespace avgconn {

// Sum over unordered pairs of min(d_i, d_j). Entries must be positive.
long long potential(const std::vector<int>& degrees);

// The length-n positive sequence with sum `total` maximizing the potential:
// n - r copies of d and r copies of d + 1 where total = d*n + r. Requires
// total >= n (every entry positive). Returned ascending.
std::vector<int> balance_sequence(long long total, int n);

long long potential_of_graph(const Graph& g);

// Sum of pairwise local vertex connectivities never exceeds the potential.
bool check_total_le_potential(const Graph& g);

// Exact upper bound k + k(n-2)^2 / (8n(n-1)) for the average vertex
// connectivity of a degree-partitioned minimally k-connected graph of order
// n. Requires k >= 2 and n >= 2k + 1.
Rational kappa_bar_upper(int k, long long n);

Rational nine_eighths(int k);

// (9p - 3)k / (8p - 2): the exact average edge connectivity of the gamma
// family and average vertex connectivity of the psi/phi families on
// parameter p. Requires 3 <= k <= p.
Rational asymptotic_average(int k, long long p);

}  // namespace avgconn
