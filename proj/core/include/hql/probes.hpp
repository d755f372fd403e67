#ifndef HQL_PROBES_HPP
#define HQL_PROBES_HPP

#include <string>
#include <vector>

#include "hql/quotient_model.hpp"

namespace hql {

enum class ProbeVerdict { NonCompactCertificate, VanishingSequence, Inconclusive };
std::string to_string(ProbeVerdict v);

/// Outcome of a closed-form-versus-matrix probe along a parameter trail.
/// Verdicts are certificate-style: a non-vanishing closed-form limit backed
/// by matching matrix values is reported as NonCompactCertificate; compactness
/// itself is never decided at finite truncation.
struct ProbeReport {
  std::string probe;
  std::string param_key;
  std::vector<cplx> trail;
  std::vector<cplx> measured;
  std::vector<cplx> closed_form;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  ProbeVerdict verdict = ProbeVerdict::Inconclusive;

  std::string to_json_string() const;
  std::vector<std::string> to_csv_rows() const;
};

/// [C_{z_i}, C_{z_j}^*] = C_{z_i} C_{z_j}^* - C_{z_j}^* C_{z_i} on quot
/// coordinates (adjoints are conjugate transposes; frames are orthonormal in
/// the space inner product).
Mat cross_commutator(const QuotientModel& model, int i, int j);

/// <T v, v>, conjugate-linear in the right slot.
cplx quadratic_form(const Mat& T, const Vec& v);

/// Closed-form value of <[C_{z_1}, C_{z_2}^*] K_w, K_w> on a Beurling
/// quotient in at least three variables:
///   (M_{z_2}^* theta)(w) * conj((M_{z_1}^* theta)(w)) * (1-|w_1|^2)(1-|w_2|^2).
/// Throws SymbolIndependentOfVariable when theta does not depend on both
/// z_1 and z_2, and SpecViolation for fewer than three variables.
cplx cross_commutator_closed_form(const InnerSymbol& theta, const std::vector<cplx>& w);

/// Matrix-side check of the closed form along a boundary-approaching trail in
/// variable `l` (0-based, l >= 2).  Kernel vectors are truncated, compressed
/// to quot coordinates and normalized by the tail-corrected truncated norm.
ProbeReport cross_commutator_trail_probe(const InnerSymbol& theta, GridPtr grid,
                                         std::vector<cplx> w_fixed, int l,
                                         const std::vector<cplx>& trail);

/// For theta(z) = theta'(z_1) with n >= 3: restricts [C_{z_2}, C_{z_2}^*] to
/// the z_2-degree-zero block spanned by (quotient of theta') x {1} x {z_3^m}
/// and reports the entrywise residual against -Identity.
ProbeReport one_variable_block_probe(const BlaschkeProduct& theta_prime, GridPtr grid);

/// || [C_{z_i}, C_{z_i}^*] - assembled factor form || for a tensor-built
/// model: the direct matrix against I x ... x [C, C*]_i x ... x I.
double tensor_self_commutator_residual(const QuotientModel& model, int i);

enum class ENVerdict { EssentiallyNormal, NotEssentiallyNormal };
std::string to_string(ENVerdict v);

/// One tensor slot of a doubly commuting quotient: finite dimension, or an
/// infinite-dimensional factor with its essential-normality flag (always true
/// for Hardy factors; supplied by the caller for Bergman factors).
struct FactorDim {
  bool infinite = false;
  int dim = 1;
  bool essentially_normal = true;
};

/// Essentially normal iff all factors are finite dimensional, or exactly one
/// factor is infinite dimensional and essentially normal while every other
/// factor is one dimensional.
ENVerdict doubly_commuting_verdict(const std::vector<FactorDim>& dims);

/// Level probe of a finite Rudin quotient: beta must be a zero of
/// psi_{m+1}/psi_m and lambda a zero of phi_{m+1} (level index m is 1-based).
/// Measures <[C_{psi_m(z_1)}, C_{psi_m(z_1)}^*] (K_beta x K_lambda),
/// K_beta x K_lambda> against -(1 - |psi_m(beta)|^2).
ProbeReport rudin_level_probe(const RudinFinite& spec, int level, cplx beta, cplx lambda,
                              GridPtr grid);

}  // namespace hql

#endif
