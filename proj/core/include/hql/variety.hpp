#ifndef HQL_VARIETY_HPP
#define HQL_VARIETY_HPP

#include <functional>
#include <string>
#include <vector>

#include "hql/mpoly.hpp"
#include "hql/roots.hpp"

namespace hql {

/// The analytic variety {eta_1(z_1) = ... = eta_n(z_n)} inside the polydisc,
/// cut out by finite Blaschke products, together with the coordinate map
/// z -> eta_1(z_1).
struct VarietyModel {
  std::vector<BlaschkeProduct> etas;

  explicit VarietyModel(std::vector<BlaschkeProduct> e);
  int var_count() const { return static_cast<int>(etas.size()); }
  /// Generic fibre cardinality prod deg(eta_i).
  int fibre_cardinality() const;
};

struct FibrePoint {
  std::vector<cplx> z;
  std::vector<cplx> derivatives;  // eta_i'(z_i)
};

/// All preimages of lambda (|lambda| <= 1) under the per-variable level sets,
/// cartesian across variables, in a deterministic sheet order (per-variable
/// roots sorted by modulus/argument, last variable fastest).
std::vector<FibrePoint> fibre_points(const VarietyModel& model, cplx lambda);

/// Clark weights |eta_1'((b_k)_1) ... eta_n'((b_k)_n)|^{-1} on the fibre over
/// a boundary point, aligned with fibre_points order.
std::vector<double> fibre_measure(const VarietyModel& model, cplx boundary_lambda);

/// Values of the reconstructed function on the sheets of an interior fibre;
/// `sheet` indexes fibre_points order.
using SheetFunction = std::function<cplx(const FibrePoint&, int sheet, cplx lambda)>;

/// The r-dilated holomorphic reconstruction at a boundary point z of the
/// variety: sum over the fibre of r*eta_1(z_1) of f times the Lagrange-type
/// kernel.  Near-collisions of a fibre coordinate with z are retried at a
/// perturbed radius.
cplx dilated_reconstruction(const VarietyModel& model, const SheetFunction& f, double r,
                            const std::vector<cplx>& z);
/// Polynomial f.
cplx dilated_reconstruction(const VarietyModel& model, const MPoly& f, double r,
                            const std::vector<cplx>& z);

struct QuadratureSpec {
  int radial = 64;   // Gauss-Legendre points on [0, 1]
  int angular = 128; // trapezoid points on the circle
};

/// Weighted norm ||f||_{2,n}^2 = 2(n+1) int_0^1 int_0^{2pi} int |f_[r]|^2
/// dmu_{e^{i theta}} dtheta r (1-r^2)^n dr, by nested quadrature; returns the
/// norm (square root).  Angular nodes colliding with critical values within
/// 1e-6 are shifted by half a step.
double a2n_norm(const VarietyModel& model, const MPoly& f, int n_w, QuadratureSpec quad = {});

struct NormJobResult {
  double norm = 0.0;
  double norm_sq = 0.0;
  double quadrature_error_estimate = 0.0;  // |doubled - base| of norm_sq
  std::vector<cplx> critical_values;

  std::string to_json_string() const;
};

/// a2n_norm plus a doubled-quadrature error estimate and the critical values
/// of the coordinate map.
NormJobResult a2n_norm_job(const VarietyModel& model, const MPoly& f, int n_w,
                           QuadratureSpec quad = {});

/// Angular-arc x sheet cell of the boundary variety.
struct ArcCell {
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  int sheet = 0;
};

/// mu(E) = ||chi_E||_{2,n}^2 with the indicator pushed through the
/// reconstruction formula literally (experimental: the indicator is not
/// holomorphic).  Additive over disjoint cells.
double variety_measure(const VarietyModel& model, const std::vector<ArcCell>& cells, int n_w,
                       QuadratureSpec quad = {});

}  // namespace hql

#endif
