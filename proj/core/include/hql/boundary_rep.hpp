#ifndef HQL_BOUNDARY_REP_HPP
#define HQL_BOUNDARY_REP_HPP

#include <optional>
#include <string>
#include <vector>

#include "hql/quotient_model.hpp"
#include "hql/roots.hpp"

namespace hql {

/// Factorization of a homogeneous p in two variables as
///   c * z1^{a} * z2^{b} * prod (z1 - alpha_i z2)^{m_i},
/// with the alpha_i split by modulus: unimodular roots versus the rest.
/// The pure powers are the alpha = 0 (z1) and alpha = infinity (z2) factors.
struct RootMult {
  cplx alpha;
  int mult = 1;
};

struct HomFactorization {
  cplx constant = 1.0;
  std::vector<RootMult> unimodular;  // | |alpha| - 1 | below the noise floor
  std::vector<RootMult> other;       // nonzero, |alpha| != 1
  int z1_power = 0;
  int z2_power = 0;

  int degree() const;
  MPoly reconstruct() const;
  /// Multiplicity-counted totals of strictly-inside and strictly-outside
  /// factors (z1_power counts as inside, z2_power as outside).
  int inside_count() const;
  int outside_count() const;
  bool has_repeated_unimodular() const;
};

/// Roots of the dehomogenization p(t, 1) by companion-matrix eigenvalues,
/// clustered into multiplicities and classified by modulus.  Roots with
/// | |alpha| - 1 | inside the ambiguous ring (1e-10, 1e-9) raise
/// IllConditioned; NotHomogeneous / ZeroPolynomial guard the input.
HomFactorization factorize_homogeneous(const MPoly& p);

struct ENForm {
  bool essentially_normal = false;
  std::string form;  // "i", "ii", "iii" or "none"
};

/// Essential-normality classification: the non-torus part of p must be a
/// nonzero constant, a single non-unimodular linear factor, or a product of
/// one inside and one outside linear factor.
ENForm essential_normality_verdict(const HomFactorization& f);

/// Reduced polynomial q = (z1 - alpha_1 z2) prod_{i >= 2} (z1 - alpha_i z2)^{n_i}
/// when every root is unimodular and some multiplicity exceeds one; empty for
/// squarefree p.  Throws NotApplicable when p has non-unimodular factors.
std::optional<MPoly> multiplicity_certificate(const HomFactorization& f);

enum class CertificateCase { I, II, III, IV, Multiplicity, None };
std::string to_string(CertificateCase c);

struct Certificate {
  MPoly q;
  std::optional<double> epsilon;
  CertificateCase tag = CertificateCase::None;
};

/// Certificate polynomial for the squarefree essentially normal cases,
/// following the four-way case split on the non-torus factors; epsilon is
/// fixed by bisection balancing the exact circle sup-norms with target margin
/// 1e-3.  Throws ExcludedForm for the two non-boundary shapes and
/// NotEssentiallyNormal outside the classification.
Certificate certificate_polynomial(const HomFactorization& f);

struct SupNormReport {
  double sup = 0.0;
  std::vector<double> per_circle;
};

/// Max of |q| over the essential-spectrum circles of p: {(alpha e^it, e^it)}
/// for torus and inside roots, {(e^it, e^it/gamma)} for outside roots, and
/// the axis circles for pure powers.  Dense sampling at `resolution` uniform
/// angles plus golden-ratio offsets, then a golden-section refinement around
/// the arg-max.
SupNormReport supnorm_on_spectrum(const MPoly& q, const HomFactorization& f, int resolution);

enum class BoundaryVerdict { Boundary, NotBoundary, OutOfScope };
std::string to_string(BoundaryVerdict v);

struct CertificateReport {
  MPoly p = MPoly(2);
  bool essentially_normal = false;
  std::string p2_form;  // "i" / "ii" / "iii" / "none"
  BoundaryVerdict verdict = BoundaryVerdict::OutOfScope;
  CertificateCase case_tag = CertificateCase::None;
  std::optional<MPoly> q;
  std::optional<double> epsilon;
  double sup_norm_on_spectrum = 0.0;
  double operator_norm_lower_bound = 0.0;
  double margin = 0.0;
  std::vector<int> caps;
  int resolution = 0;

  std::string to_json_string() const;
  std::string to_csv_row() const;
};

/// Full pipeline: factorize, classify, certify, then verify the norm gap on
/// the truncated quotient (degree-sliced build).  NotBoundary for the two
/// excluded shapes, OutOfScope when not essentially normal; for boundary
/// verdicts the margin must clear 1e-6 or TruncationInconclusive is thrown.
CertificateReport boundary_rep_verdict(const MPoly& p, std::vector<int> caps,
                                       int resolution = 1024);

struct WeightedShiftModel {
  std::vector<double> weights;  // c_n / c_{n+1}, n = 0 .. N-1
  bool swapped = false;         // true: weights describe C_{z_2} (|alpha| < 1)
};

/// Weighted-shift data of the compressed coordinate on the quotient by
/// z1 - alpha z2: c_n = (sum_{i<=n} |beta|^{2i})^{1/2} with beta = alpha/|alpha|^2.
/// |alpha| < 1 is reduced to the swapped-variable case; |alpha| = 1 throws
/// UnimodularAlpha.
WeightedShiftModel weighted_shift_model(cplx alpha, int N);

/// All fibre points over lambda on the torus: per-variable solutions of
/// eta_i(z) = lambda, cartesian across variables.  Every coordinate must land
/// on the unit circle to 1e-9.
std::vector<std::vector<cplx>> eta_fibre_on_torus(const std::vector<BlaschkeProduct>& etas,
                                                  cplx lambda);

/// Fibres over `samples` uniformly spaced unimodular lambda values.
std::vector<std::vector<std::vector<cplx>>> eta_spectrum_sample(
    const std::vector<BlaschkeProduct>& etas, int samples);

struct VonNeumannRow {
  double norm_qC = 0.0;
  double sup_spectrum = 0.0;
  bool within_slack = false;
};

struct VonNeumannReport {
  double slack = 1e-3;
  std::vector<VonNeumannRow> rows;
};

/// Numeric consequence of the normal-dilation property of the quotient by
/// [eta_i(z_i) - eta_{i+1}(z_{i+1})]: ||q(C)|| <= sup over the boundary
/// variety of |q| + slack, reported per sample polynomial.
VonNeumannReport qeta_vonneumann_check(const std::vector<BlaschkeProduct>& etas,
                                       const std::vector<MPoly>& qs, GridPtr grid,
                                       int lambda_samples = 256);

}  // namespace hql

#endif
