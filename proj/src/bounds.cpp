#include "avgconn/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "avgconn/connectivity.hpp"

namespace avgconn {

long long potential(const std::vector<int>& degrees) {
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("potential: entries must be positive");
  }
  std::vector<int> sorted = degrees;
  std::sort(sorted.begin(), sorted.end());
  long long total = 0;
  const long long n = static_cast<long long>(sorted.size());
  // Ascending order: sorted[i] is the minimum in exactly n-1-i pairs.
  for (long long i = 0; i < n; ++i) total += sorted[i] * (n - 1 - i);
  return total;
}

std::vector<int> balance_sequence(long long total, int n) {
  if (n < 1) throw std::invalid_argument("balance_sequence: length must be positive");
  if (total < n) throw std::invalid_argument("balance_sequence: sum would force a zero entry");
  long long d = total / n;
  long long r = total % n;
  std::vector<int> out;
  out.reserve(n);
  for (long long i = 0; i < n - r; ++i) out.push_back(static_cast<int>(d));
  for (long long i = 0; i < r; ++i) out.push_back(static_cast<int>(d + 1));
  return out;
}

long long potential_of_graph(const Graph& g) { return potential(g.degrees()); }

bool check_total_le_potential(const Graph& g) {
  PairConnectivityReport report = all_pairs_report(g, Mode::vertex);
  return report.total <= potential_of_graph(g);
}

Rational kappa_bar_upper(int k, long long n) {
  if (k < 2) throw std::invalid_argument("kappa_bar_upper: k must be >= 2");
  if (n < 2 * k + 1) throw std::invalid_argument("kappa_bar_upper: n must be >= 2k + 1");
  Rational correction(k * (n - 2) * (n - 2), 8 * n * (n - 1));
  return Rational(k) + correction;
}

Rational nine_eighths(int k) { return Rational(9LL * k, 8); }

Rational asymptotic_average(int k, long long p) {
  if (k < 3) throw std::invalid_argument("asymptotic_average: k must be >= 3");
  if (p < k) throw std::invalid_argument("asymptotic_average: p must be >= k");
  return Rational((9 * p - 3) * k, 8 * p - 2);
}

}  // namespace avgconn
