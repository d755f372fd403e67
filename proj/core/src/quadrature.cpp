#include "hql/quadrature.hpp"

#include <cmath>

#include "hql/errors.hpp"

namespace hql {

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw Error("gauss_legendre: n must be positive");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));

  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<size_t>(i)] = x;
    rule.weights[static_cast<size_t>(i)] = w;
    rule.nodes[static_cast<size_t>(n - 1 - i)] = -x;
    rule.weights[static_cast<size_t>(n - 1 - i)] = w;
  }

  // Map [-1, 1] -> [a, b]; reverse so nodes come out ascending.
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  QuadratureRule out;
  out.nodes.resize(static_cast<size_t>(n));
  out.weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.nodes[static_cast<size_t>(i)] = mid + half * rule.nodes[static_cast<size_t>(n - 1 - i)];
    out.weights[static_cast<size_t>(i)] = half * rule.weights[static_cast<size_t>(n - 1 - i)];
  }
  return out;
}

double pairwise_sum(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  std::vector<double> buf = xs;
  size_t n = buf.size();
  while (n > 1) {
    const size_t half = n / 2;
    for (size_t i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
    if (n % 2 == 1) {
      buf[half] = buf[n - 1];
      n = half + 1;
    } else {
      n = half;
    }
  }
  return buf[0];
}

}  // namespace hql
