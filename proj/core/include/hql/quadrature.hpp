#ifndef HQL_QUADRATURE_HPP
#define HQL_QUADRATURE_HPP

#include <vector>

namespace hql {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b]; nodes by Newton iteration on the
/// Legendre recurrence.
QuadratureRule gauss_legendre(int n, double a, double b);

/// Pairwise (cascade) summation in slot order; deterministic for a fixed
/// node ordering regardless of thread count.
double pairwise_sum(const std::vector<double>& xs);

}  // namespace hql

#endif
