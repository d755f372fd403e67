#include "hql/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "hql/linalg.hpp"

namespace hql {

namespace {

// Parlett-Reinsch style balancing: scale row/column pairs by powers of two
// until their 1-norms agree to within a factor, preserving eigenvalues.
void balance_companion(Mat& A) {
  const Eigen::Index n = A.rows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        r += std::abs(A(i, j));
        c += std::abs(A(j, i));
      }
      if (r == 0.0 || c == 0.0) continue;
      double f = 1.0;
      const double s = r + c;
      while (c < r / 2.0) {
        c *= 2.0;
        r /= 2.0;
        f *= 2.0;
      }
      while (c >= r * 2.0) {
        c /= 2.0;
        r *= 2.0;
        f /= 2.0;
      }
      if (c + r < 0.95 * s) {
        changed = true;
        A.row(i) /= f;
        A.col(i) *= f;
      }
    }
  }
}

void sort_by_modulus_argument(std::vector<cplx>& zs) {
  std::sort(zs.begin(), zs.end(), [](cplx a, cplx b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-14) return ma < mb;
    double aa = std::arg(a), ab = std::arg(b);
    if (aa < 0) aa += 2.0 * M_PI;
    if (ab < 0) ab += 2.0 * M_PI;
    return aa < ab;
  });
}

}  // namespace

std::vector<cplx> poly_roots(const Poly1& coeffs) {
  Poly1 p = poly1_trim(coeffs, 0.0);
  if (p.size() <= 1) {
    if (p.empty() || std::abs(p[0]) == 0.0)
      throw RootfindingFailure("poly_roots: zero polynomial");
    return {};
  }
  const size_t d = p.size() - 1;
  if (std::abs(p.back()) == 0.0) throw RootfindingFailure("poly_roots: vanishing leading coeff");

  Mat A = Mat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (size_t j = 0; j + 1 < d; ++j) A(static_cast<Eigen::Index>(j + 1), static_cast<Eigen::Index>(j)) = 1.0;
  for (size_t j = 0; j < d; ++j)
    A(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(d - 1)) = -p[j] / p.back();
  balance_companion(A);

  Eigen::ComplexEigenSolver<Mat> es(A, false);
  if (es.info() != Eigen::Success) throw RootfindingFailure("poly_roots: eigensolver failed");

  const Poly1 dp = poly1_derivative(p);
  std::vector<cplx> roots;
  roots.reserve(d);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    cplx z = es.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      const cplx f = poly1_eval(p, z);
      const cplx df = poly1_eval(dp, z);
      if (std::abs(df) < 1e-300) break;
      const cplx step = f / df;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      if (std::abs(step) > 0.5) break;  // Newton only as a polish
      z -= step;
    }
    roots.push_back(z);
  }
  sort_by_modulus_argument(roots);
  return roots;
}

std::vector<FibreRoot> solve_level_set(const BlaschkeProduct& eta, cplx lambda,
                                       bool reject_critical) {
  if (eta.degree() == 0) throw RootfindingFailure("solve_level_set: constant eta");
  const Poly1 num = eta.numerator();
  const Poly1 den = eta.denominator();
  Poly1 p(std::max(num.size(), den.size()), cplx(0.0));
  for (size_t j = 0; j < num.size(); ++j) p[j] += num[j];
  for (size_t j = 0; j < den.size(); ++j) p[j] -= lambda * den[j];
  // The leading coefficient is front - lambda * (leading of den); |front| = 1
  // and |leading of den| < 1 keep the degree from collapsing for |lambda|<=1.

  std::vector<cplx> zs = poly_roots(p);
  if (static_cast<int>(zs.size()) != eta.degree())
    throw RootfindingFailure("solve_level_set: degree drop");

  std::vector<FibreRoot> out;
  out.reserve(zs.size());
  for (cplx z : zs) {
    const double resid = std::abs(eta.evaluate(z) - lambda);
    if (resid > 1e-9) {
      // Report conditioning along with the failure.
      throw RootfindingFailure("solve_level_set: residual " + std::to_string(resid) +
                               ", |eta'| = " + std::to_string(std::abs(eta.derivative(z))));
    }
    const cplx d = eta.derivative(z);
    if (reject_critical && std::abs(d) < 1e-8)
      throw CriticalValue("solve_level_set: lambda within 1e-8 of a critical value");
    out.push_back(FibreRoot{z, d});
  }
  return out;
}

std::vector<cplx> critical_values(const BlaschkeProduct& eta) {
  if (eta.degree() <= 1) return {};
  const Poly1 num = eta.numerator();
  const Poly1 den = eta.denominator();
  // eta' = (num' den - num den') / den^2; zeros of the numerator polynomial.
  Poly1 t1 = poly1_mul(poly1_derivative(num), den);
  Poly1 t2 = poly1_mul(num, poly1_derivative(den));
  Poly1 dnum(std::max(t1.size(), t2.size()), cplx(0.0));
  for (size_t j = 0; j < t1.size(); ++j) dnum[j] += t1[j];
  for (size_t j = 0; j < t2.size(); ++j) dnum[j] -= t2[j];
  dnum = poly1_trim(dnum, 1e-14);
  if (dnum.size() <= 1) return {};

  std::vector<cplx> vals;
  for (cplx z : poly_roots(dnum)) {
    if (std::abs(z) > 1.0 + 1e-9) continue;
    if (std::abs(poly1_eval(den, z)) < 1e-12) continue;  // pole, not critical
    vals.push_back(eta.evaluate(z));
  }
  sort_by_modulus_argument(vals);
  return vals;
}

}  // namespace hql
