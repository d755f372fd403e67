#ifndef HQL_SPACES_HPP
#define HQL_SPACES_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hql/multi_index.hpp"

namespace hql {

using cplx = std::complex<double>;

/// One diagonal reproducing-kernel factor per variable.  Factor i supplies a
/// positive sequence beta_j with ||z^j|| = 1 / sqrt(beta_j): Hardy has
/// beta_j = 1, the weighted Bergman space with integer parameter alpha > -1
/// has beta_j = binom(j + alpha + 1, j).  Any positive sequence is accepted.
class DiagonalSpace {
 public:
  enum class Kind { Hardy, WeightedBergman, Custom };

  struct Factor {
    Kind kind = Kind::Hardy;
    int alpha = 0;                // WeightedBergman only
    std::vector<double> beta;     // Custom only; index j = monomial degree
  };

  static DiagonalSpace hardy(int n);
  static DiagonalSpace weighted_bergman(int n, int alpha);
  static DiagonalSpace custom(std::vector<std::vector<double>> beta_per_variable);
  /// Mixed factor list.
  explicit DiagonalSpace(std::vector<Factor> factors);

  int var_count() const { return static_cast<int>(factors_.size()); }
  const Factor& factor(int i) const { return factors_[static_cast<size_t>(i)]; }
  bool is_hardy() const;

  /// beta_j of variable i.
  double beta(int i, int j) const;
  /// ||z^j|| of variable i, i.e. 1/sqrt(beta_j).
  double factor_norm(int i, int j) const { return 1.0 / std::sqrt(beta(i, j)); }

  bool operator==(const DiagonalSpace& o) const;

 private:
  std::vector<Factor> factors_;
};

/// ||z^k|| in the tensor space: product of per-variable monomial norms.
double monomial_norm(const MultiIndex& k, const DiagonalSpace& space);

/// Taylor coefficients of a function on a truncation grid, one complex
/// amplitude per enumerated multi-index.
struct CoeffVector {
  GridPtr grid;
  Eigen::VectorXcd entries;

  CoeffVector() = default;
  CoeffVector(GridPtr g, Eigen::VectorXcd e);
  static CoeffVector zero(GridPtr g);
  /// Unit coefficient on the monomial z^k.
  static CoeffVector monomial(GridPtr g, const MultiIndex& k);

  cplx at(const MultiIndex& k) const;
  void set(const MultiIndex& k, cplx value);
};

/// Weighted sesquilinear form <u, v> = sum_k u_k conj(v_k) ||z^k||^2;
/// linear in the first slot, conjugate-linear in the second.
cplx inner(const CoeffVector& u, const CoeffVector& v, const DiagonalSpace& space);

double norm(const CoeffVector& u, const DiagonalSpace& space);

/// Coefficients scaled so the Euclidean dot product equals the space inner
/// product (entry at k is multiplied by ||z^k||).  All frame/operator algebra
/// in the quotient machinery happens in these coordinates.
Eigen::VectorXcd to_orthonormal_coords(const CoeffVector& v, const DiagonalSpace& space);
CoeffVector from_orthonormal_coords(GridPtr grid, const DiagonalSpace& space,
                                    const Eigen::VectorXcd& coords);

struct KernelVector {
  CoeffVector coeffs;   // truncation of the normalized Szego kernel K_w
  double tail_norm;     // l2-norm of the omitted tail, exact closed form
  double trunc_norm;    // norm of the truncated part: sqrt(1 - tail_norm^2)
};

/// Truncated normalized kernel K_w of the Hardy space, entries
/// prod_i sqrt(1-|w_i|^2) * conj(w)^k.  Throws PointOnBoundary when any
/// |w_i| >= 1 and Error when a non-Hardy factor is present.
KernelVector kernel_vector(const std::vector<cplx>& w, GridPtr grid, const DiagonalSpace& space);

/// prod_i |w_i|^{D_i + 1}: the probe-rejection tail factor.
double tail_factor(const std::vector<cplx>& w, const TruncationGrid& grid);

}  // namespace hql

#endif
