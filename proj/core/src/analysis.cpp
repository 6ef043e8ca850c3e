#include "posetcodes/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace posetcodes {

long long griesmer_sum(int k, long long d) {
  if (k < 1 || d < 1) throw std::invalid_argument("griesmer_sum: need k, d >= 1");
  long long sum = 0;
  for (int i = 0; i < k; ++i) {
    long long block = 1LL << i;
    sum += (d + block - 1) / block;
  }
  return sum;
}

Certificate certify(const CodeReport& report, std::span<const BitVec> codewords) {
  if (report.dimension < 1) {
    throw std::invalid_argument("certify: report must have positive dimension");
  }
  if (codewords.size() != (std::size_t{1} << report.dimension)) {
    throw std::invalid_argument("certify: codeword list does not match the dimension");
  }
  Certificate cert;
  const long long d = report.w_min;
  cert.griesmer_sum_at_d = griesmer_sum(report.dimension, d);
  cert.is_griesmer = (report.length == cert.griesmer_sum_at_d);
  cert.griesmer_distance_optimal = griesmer_sum(report.dimension, d + 1) > report.length;
  cert.griesmer_almost_optimal = !cert.griesmer_distance_optimal &&
                                 griesmer_sum(report.dimension, d + 2) > report.length;
  cert.w_min = report.w_min;
  cert.w_max = report.w_max;
  cert.ab_sufficient = 2 * cert.w_min > cert.w_max;

  // Pairwise check of wt(a+b) = wt(a) - wt(b), which only needs pairs with
  // wt(a) > wt(b). Both loops run lightest-first, so the stored witness is
  // the lightest violating pair in weight order.
  std::vector<std::size_t> order(codewords.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<long long> weight(codewords.size());
  for (std::size_t i = 0; i < codewords.size(); ++i) weight[i] = codewords[i].weight();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weight[a] != weight[b] ? weight[a] < weight[b] : a < b;
  });

  cert.minimal_exhaustive = true;
  BitVec scratch;
  for (std::size_t ia = 0; ia < order.size() && cert.minimal_exhaustive; ++ia) {
    const std::size_t a = order[ia];
    if (weight[a] == 0) continue;
    for (std::size_t ib = 0; ib < order.size(); ++ib) {
      const std::size_t b = order[ib];
      if (weight[b] == 0) continue;
      if (weight[b] >= weight[a]) break;
      scratch = codewords[a];
      scratch ^= codewords[b];
      if (scratch.weight() == weight[a] - weight[b]) {
        cert.minimal_exhaustive = false;
        cert.witness = {a, b};
        break;
      }
    }
  }
  cert.ab_violating_minimal = cert.minimal_exhaustive && !cert.ab_sufficient;
  return cert;
}

Certificate certify(const CodeReport& report, const CodeSpec& spec) {
  std::vector<BitVec> words = oracle_codewords(spec);
  return certify(report, words);
}

Thm61Prediction classify_thm61(int m, int n, int b) {
  if (m < 1 || m >= n || b < 1 || b > n - m) {
    throw std::invalid_argument("classify_thm61: invalid (m, n, b)");
  }
  Thm61Prediction p;
  p.griesmer = (b == 1 && m >= 3) || (m == 1 && b == n - 1);
  const bool excluded = (m == 1 && b == n - 1) || (m == 1 && b == n - 2) ||
                        (m == 2 && b == n - 2) || (m == n - 1 && b == 1);
  p.minimal = !excluded;
  return p;
}

Thm62Prediction classify_thm62(int m, int n) {
  if (m <= 1 || m > n - 2) {
    throw std::invalid_argument("classify_thm62: need 1 < m <= n-2");
  }
  Thm62Prediction p;
  p.length = (1LL << n) - (1LL << m) - 2;
  p.d = (1LL << (n - 1)) - (1LL << (m - 1)) - 2;
  p.distance_optimal = griesmer_sum(n, p.d + 1) > p.length;
  p.minimal = n >= 4;
  return p;
}

Thm63Prediction classify_thm63(int m, int n, int b) {
  if (m < 1 || m >= n || b < 1 || b > n - m) {
    throw std::invalid_argument("classify_thm63: invalid (m, n, b)");
  }
  Thm63Prediction p;
  // n = 2 degenerates: (m,b) = (1,1) is also the (1,n-1) shape, where the
  // weight-0 row collapses the dimension to n and no [2^n-1, n+1, 0] code
  // exists.
  p.almost_optimal = (m == n - 1 && b == 1 && n >= 3);
  p.ab_violating_minimal = (m + b == n && n >= 5 && std::max(m, b) <= n - 2);
  return p;
}

Thm64Prediction classify_thm64(int m, int n, int b1, int b2) {
  if (m < 1 || b1 < 1 || b2 < 1 || b1 + b2 != n - m || std::max(b1, b2) > n - 2) {
    throw std::invalid_argument(
        "classify_thm64: need disjoint B1, B2 with b1+b2 = n-m and max <= n-2");
  }
  Thm64Prediction p;
  p.d = (1LL << m) - 3 + (1LL << b1) + (1LL << b2);
  p.ab_violating_minimal = true;
  return p;
}

}  // namespace posetcodes
