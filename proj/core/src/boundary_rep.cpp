#include "hql/boundary_rep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace hql {

namespace {

constexpr double kUnimodularNoise = 1e-10;  // within solver noise of |alpha| = 1
constexpr double kUnimodularRing = 1e-9;    // ambiguous ring outer radius
constexpr double kClusterTol = 1e-6;        // multiplicity clustering

std::vector<cplx> all_unimodular_values(const HomFactorization& f) {
  std::vector<cplx> out;
  for (const RootMult& r : f.unimodular)
    for (int i = 0; i < r.mult; ++i) out.push_back(r.alpha);
  return out;
}

// Elementary symmetric sums e_0..e_m of a value list.
std::vector<cplx> elementary_symmetric(const std::vector<cplx>& vals) {
  std::vector<cplx> e{cplx(1.0)};
  for (cplx a : vals) {
    e.push_back(0.0);
    for (size_t k = e.size() - 1; k >= 1; --k) e[k] += a * e[k - 1];
  }
  return e;
}

MPoly z1_pow_z2_pow(int a, int b, cplx c = 1.0) { return MPoly::monomial(2, MultiIndex{a, b}, c); }

// prod (z1 - alpha_i z2) expanded.
MPoly product_of_factors(const std::vector<cplx>& alphas) {
  MPoly p = MPoly::constant(2, 1.0);
  for (cplx a : alphas) p = p * (MPoly::variable(2, 0) - a * MPoly::variable(2, 1));
  return p;
}

}  // namespace

int HomFactorization::degree() const {
  int d = z1_power + z2_power;
  for (const RootMult& r : unimodular) d += r.mult;
  for (const RootMult& r : other) d += r.mult;
  return d;
}

MPoly HomFactorization::reconstruct() const {
  MPoly p = z1_pow_z2_pow(z1_power, z2_power, constant);
  for (const RootMult& r : unimodular)
    for (int i = 0; i < r.mult; ++i)
      p = p * (MPoly::variable(2, 0) - r.alpha * MPoly::variable(2, 1));
  for (const RootMult& r : other)
    for (int i = 0; i < r.mult; ++i)
      p = p * (MPoly::variable(2, 0) - r.alpha * MPoly::variable(2, 1));
  return p;
}

int HomFactorization::inside_count() const {
  int c = z1_power;
  for (const RootMult& r : other)
    if (std::abs(r.alpha) < 1.0) c += r.mult;
  return c;
}

int HomFactorization::outside_count() const {
  int c = z2_power;
  for (const RootMult& r : other)
    if (std::abs(r.alpha) > 1.0) c += r.mult;
  return c;
}

bool HomFactorization::has_repeated_unimodular() const {
  for (const RootMult& r : unimodular)
    if (r.mult > 1) return true;
  return false;
}

HomFactorization factorize_homogeneous(const MPoly& p) {
  if (p.var_count() != 2) throw VariableCountMismatch("factorize_homogeneous");
  if (p.is_zero()) throw ZeroPolynomial("factorize_homogeneous");
  if (!p.is_homogeneous()) throw NotHomogeneous("factorize_homogeneous");
  const int m = p.homogeneous_degree();

  // Coefficients of z1^j z2^{m-j}, with numeric dust removed.
  std::vector<cplx> c(static_cast<size_t>(m) + 1, cplx(0.0));
  double cmax = 0.0;
  for (const auto& [k, v] : p.terms()) cmax = std::max(cmax, std::abs(v));
  for (const auto& [k, v] : p.terms())
    if (std::abs(v) > 1e-12 * cmax) c[static_cast<size_t>(k[0])] = v;

  int lo = 0, hi = m;
  while (lo <= m && std::abs(c[static_cast<size_t>(lo)]) == 0.0) ++lo;
  while (hi >= 0 && std::abs(c[static_cast<size_t>(hi)]) == 0.0) --hi;
  if (lo > hi) throw ZeroPolynomial("factorize_homogeneous: numerically zero");

  HomFactorization f;
  f.z1_power = lo;
  f.z2_power = m - hi;
  f.constant = c[static_cast<size_t>(hi)];

  Poly1 mid(c.begin() + lo, c.begin() + hi + 1);
  std::vector<cplx> roots = mid.size() > 1 ? poly_roots(mid) : std::vector<cplx>{};

  // Cluster repeated roots; companion eigenvalues of an m-fold root scatter
  // like eps^(1/m), so the cluster width is far above solver noise.
  std::vector<RootMult> clusters;
  for (cplx z : roots) {
    bool merged = false;
    for (RootMult& r : clusters) {
      if (std::abs(r.alpha - z) <= kClusterTol) {
        r.alpha = (r.alpha * static_cast<double>(r.mult) + z) / static_cast<double>(r.mult + 1);
        r.mult += 1;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.push_back(RootMult{z, 1});
  }

  for (const RootMult& r : clusters) {
    const double d = std::abs(std::abs(r.alpha) - 1.0);
    if (d <= kUnimodularNoise) {
      RootMult u = r;
      u.alpha /= std::abs(u.alpha);  // snap onto the circle
      f.unimodular.push_back(u);
    } else if (d < kUnimodularRing) {
      throw IllConditioned("factorize_homogeneous: root too close to the unit circle");
    } else {
      f.other.push_back(r);
    }
  }
  return f;
}

ENForm essential_normality_verdict(const HomFactorization& f) {
  const int ci = f.inside_count(), co = f.outside_count();
  ENForm out;
  if (ci == 0 && co == 0) {
    out.essentially_normal = true;
    out.form = "i";
  } else if (ci + co == 1) {
    out.essentially_normal = true;
    out.form = "ii";
  } else if (ci == 1 && co == 1) {
    out.essentially_normal = true;
    out.form = "iii";
  } else {
    out.essentially_normal = false;
    out.form = "none";
  }
  return out;
}

std::optional<MPoly> multiplicity_certificate(const HomFactorization& f) {
  if (f.z1_power > 0 || f.z2_power > 0 || !f.other.empty())
    throw NotApplicable("multiplicity_certificate: p must be a product of unimodular factors");
  if (!f.has_repeated_unimodular()) return std::nullopt;

  MPoly q = MPoly::constant(2, 1.0);
  bool reduced = false;
  for (const RootMult& r : f.unimodular) {
    int mult = r.mult;
    if (!reduced && mult > 1) {
      mult = 1;
      reduced = true;
    }
    for (int i = 0; i < mult; ++i)
      q = q * (MPoly::variable(2, 0) - r.alpha * MPoly::variable(2, 1));
  }
  return q;
}

namespace {

bool is_excluded_form(const HomFactorization& f) {
  const int ci = f.inside_count(), co = f.outside_count();
  const int m = static_cast<int>(f.unimodular.size());
  if (ci == 0 && co == 0 && !f.has_repeated_unimodular()) {
    // c (z1^m - alpha z2^m): the intermediate elementary symmetric sums of
    // the root set vanish exactly in that degenerate case.
    if (m <= 1) return true;
    const auto e = elementary_symmetric(all_unimodular_values(f));
    bool degenerate = true;
    for (int k = 1; k < m && degenerate; ++k) degenerate = std::abs(e[static_cast<size_t>(k)]) <= 1e-9;
    if (degenerate) return true;
  }
  if (m == 0 && ci + co == 1 && !f.has_repeated_unimodular() && f.degree() == 1) return true;
  return false;
}

double bisect_balance(const std::function<double(double)>& g, double lo, double hi) {
  double glo = g(lo), ghi = g(hi);
  if (glo <= 0.0) return lo;
  if (ghi > 0.0) return 0.5 * (lo + hi);
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Certificate case_I_II(const std::vector<cplx>& factor_roots, CertificateCase tag) {
  // q = [prod (z1 - a_i z2) - (-1)^M (prod a_i) z2^M] / z1 expanded through
  // the elementary symmetric sums.
  const int M = static_cast<int>(factor_roots.size());
  const auto e = elementary_symmetric(factor_roots);
  MPoly q(2);
  double sign = 1.0;
  for (int k = 0; k <= M - 1; ++k) {
    q.add_term(MultiIndex{M - 1 - k, k}, sign * e[static_cast<size_t>(k)]);
    sign = -sign;
  }
  Certificate out{std::move(q), std::nullopt, tag};
  return out;
}

Certificate case_III(cplx gamma1, cplx gamma2) {
  auto g = [&](double eps) {
    return (1.0 - eps) - std::abs(gamma1 - eps * gamma2);
  };
  const double eps = bisect_balance(g, 0.0, 1.0);
  const double sup = std::max(1.0 - eps, std::abs(gamma1 - eps * gamma2));
  if (sup > 1.0 - 1e-3) throw ComputeError("case III: no epsilon clears the margin");
  MPoly q = MPoly::variable(2, 0) - (eps * gamma2) * MPoly::variable(2, 1);
  return Certificate{std::move(q), eps, CertificateCase::III};
}

// gamma2_inv = 1/gamma2, or 0 when the outside factor is the z2 axis.
Certificate case_IV(const std::vector<cplx>& alphas, cplx gamma1, cplx gamma2_inv) {
  const int m = static_cast<int>(alphas.size());
  // q' = z1^m - prod (z1 - alpha_i z2); the alternating-sign expansion in the
  // elementary symmetric sums.
  MPoly qprime = z1_pow_z2_pow(m, 0) - product_of_factors(alphas);
  const cplx qp_g1 = qprime.evaluate({gamma1, 1.0});
  const cplx qp_g2 = qprime.evaluate({cplx(1.0), gamma2_inv});

  auto g = [&](double eps) {
    const double b_alpha = 1.0 - eps;
    const double b_g1 = std::abs(std::pow(gamma1, m) - eps * qp_g1);
    const double b_g2 = std::abs(gamma2_inv) * std::abs(1.0 - eps * qp_g2);
    return b_alpha - std::max(b_g1, b_g2);
  };
  const double eps = bisect_balance(g, 0.0, 1.0);
  const double sup = std::max({1.0 - eps, std::abs(std::pow(gamma1, m) - eps * qp_g1),
                               std::abs(gamma2_inv) * std::abs(1.0 - eps * qp_g2)});
  if (sup > 1.0 - 1e-3) throw ComputeError("case IV: no epsilon clears the margin");

  MPoly q = MPoly::variable(2, 1) * (z1_pow_z2_pow(m, 0) - eps * qprime);
  return Certificate{std::move(q), eps, CertificateCase::IV};
}

}  // namespace

Certificate certificate_polynomial(const HomFactorization& f) {
  if (f.degree() == 0) throw DegenerateSpec("certificate_polynomial: constant polynomial");
  if (f.has_repeated_unimodular())
    throw SpecViolation("certificate_polynomial: repeated torus factors take the multiplicity route");
  const ENForm en = essential_normality_verdict(f);
  if (!en.essentially_normal) throw NotEssentiallyNormal("certificate_polynomial");
  if (is_excluded_form(f)) throw ExcludedForm("certificate_polynomial");

  const int ci = f.inside_count(), co = f.outside_count();
  const std::vector<cplx> alphas = all_unimodular_values(f);
  const int m = static_cast<int>(alphas.size());

  if (ci == 0 && co == 0) return case_I_II(alphas, CertificateCase::I);

  if (ci == 1 && co == 0) {
    cplx gamma = 0.0;
    for (const RootMult& r : f.other)
      if (std::abs(r.alpha) < 1.0) gamma = r.alpha;
    std::vector<cplx> roots = alphas;
    roots.push_back(gamma);
    return case_I_II(roots, CertificateCase::II);
  }

  if (ci == 0 && co == 1) {
    // Swap the variables, certify, swap back.
    Certificate swapped = certificate_polynomial(
        factorize_homogeneous(f.reconstruct().swap_variables()));
    swapped.q = swapped.q.swap_variables();
    return swapped;
  }

  // ci == 1 && co == 1
  cplx gamma1 = 0.0;
  bool have_gamma2 = false;
  cplx gamma2 = 0.0;
  for (const RootMult& r : f.other) {
    if (std::abs(r.alpha) < 1.0) gamma1 = r.alpha;
    if (std::abs(r.alpha) > 1.0) {
      gamma2 = r.alpha;
      have_gamma2 = true;
    }
  }

  if (!have_gamma2) {
    // Outside factor is the z2 axis.
    if (std::abs(gamma1) > 0.0) {
      Certificate swapped = certificate_polynomial(
          factorize_homogeneous(f.reconstruct().swap_variables()));
      swapped.q = swapped.q.swap_variables();
      return swapped;
    }
    if (m == 0) {
      // p = c z1 z2; both axis circles carry |z1 + z2| = 1 < sqrt(2) = ||q||.
      MPoly q = MPoly::variable(2, 0) + MPoly::variable(2, 1);
      return Certificate{std::move(q), std::nullopt, CertificateCase::III};
    }
    return case_IV(alphas, gamma1, cplx(0.0));
  }

  if (m == 0) return case_III(gamma1, gamma2);
  return case_IV(alphas, gamma1, 1.0 / gamma2);
}

namespace {

double golden_refine(const std::function<double(double)>& value, double lo, double hi) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = value(c), fd = value(d);
  for (int it = 0; it < 60; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = value(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = value(d);
    }
  }
  return std::max(fc, fd);
}

}  // namespace

SupNormReport supnorm_on_spectrum(const MPoly& q, const HomFactorization& f, int resolution) {
  if (resolution < 256) throw SpecViolation("supnorm_on_spectrum: resolution must be >= 256");
  if (q.var_count() != 2) throw VariableCountMismatch("supnorm_on_spectrum");

  std::vector<std::function<std::vector<cplx>(double)>> circles;
  auto add_inside_circle = [&](cplx gamma) {
    circles.push_back([gamma](double t) {
      const cplx e = std::polar(1.0, t);
      return std::vector<cplx>{gamma * e, e};
    });
  };
  auto add_outside_circle = [&](cplx gamma) {
    circles.push_back([gamma](double t) {
      const cplx e = std::polar(1.0, t);
      return std::vector<cplx>{e, e / gamma};
    });
  };
  for (const RootMult& r : f.unimodular) add_inside_circle(r.alpha);
  for (const RootMult& r : f.other) {
    if (std::abs(r.alpha) < 1.0)
      add_inside_circle(r.alpha);
    else
      add_outside_circle(r.alpha);
  }
  if (f.z1_power > 0) add_inside_circle(0.0);
  if (f.z2_power > 0)
    circles.push_back([](double t) {
      return std::vector<cplx>{std::polar(1.0, t), cplx(0.0)};
    });

  SupNormReport rep;
  const double golden = 0.61803398874989484820;
  for (const auto& circle : circles) {
    auto value = [&](double t) { return std::abs(q.evaluate(circle(t))); };
    double best = -1.0, tbest = 0.0;
    const double step = 2.0 * M_PI / resolution;
    for (int s = 0; s < resolution; ++s) {
      for (double t : {step * s, step * (s + golden)}) {
        const double v = value(t);
        if (v > best) {
          best = v;
          tbest = t;
        }
      }
    }
    best = std::max(best, golden_refine(value, tbest - step, tbest + step));
    rep.per_circle.push_back(best);
    rep.sup = std::max(rep.sup, best);
  }
  return rep;
}

CertificateReport boundary_rep_verdict(const MPoly& p, std::vector<int> caps, int resolution) {
  CertificateReport rep;
  rep.p = p;
  rep.caps = caps;
  rep.resolution = resolution;

  const HomFactorization f = factorize_homogeneous(p);
  if (f.degree() == 0) throw DegenerateSpec("boundary_rep_verdict: constant polynomial");
  const ENForm en = essential_normality_verdict(f);
  rep.essentially_normal = en.essentially_normal;
  rep.p2_form = en.form;
  if (!en.essentially_normal) {
    rep.verdict = BoundaryVerdict::OutOfScope;
    return rep;
  }
  if (is_excluded_form(f)) {
    rep.verdict = BoundaryVerdict::NotBoundary;
    return rep;
  }

  if (f.has_repeated_unimodular()) {
    // Reduced polynomial: the first repeated torus factor dropped to
    // multiplicity one; it vanishes on every spectrum circle while staying a
    // nonzero element of the quotient.
    MPoly q = z1_pow_z2_pow(f.z1_power, f.z2_power, f.constant);
    bool reduced = false;
    for (const RootMult& r : f.unimodular) {
      int mult = r.mult;
      if (!reduced && mult > 1) {
        mult = 1;
        reduced = true;
      }
      for (int i = 0; i < mult; ++i)
        q = q * (MPoly::variable(2, 0) - r.alpha * MPoly::variable(2, 1));
    }
    for (const RootMult& r : f.other)
      for (int i = 0; i < r.mult; ++i)
        q = q * (MPoly::variable(2, 0) - r.alpha * MPoly::variable(2, 1));
    rep.q = q;
    rep.case_tag = CertificateCase::Multiplicity;
  } else {
    Certificate cert = certificate_polynomial(f);
    rep.q = cert.q;
    rep.epsilon = cert.epsilon;
    rep.case_tag = cert.tag;
  }

  rep.sup_norm_on_spectrum = supnorm_on_spectrum(*rep.q, f, resolution).sup;

  const QuotientModel model =
      build_submodule(PolyIdeal{{p}}, make_grid(caps), DiagonalSpace::hardy(2));
  const Mat qC = mpoly_apply(model, *rep.q);
  const Vec e1 = quot_coords(model, CoeffVector::monomial(model.grid, MultiIndex{0, 0}));
  const double via_constant = (qC * e1).norm();
  rep.operator_norm_lower_bound = std::max(via_constant, operator_norm(qC));
  rep.margin = rep.operator_norm_lower_bound - rep.sup_norm_on_spectrum;

  if (rep.margin < 1e-6)
    throw TruncationInconclusive("boundary_rep_verdict: margin below 1e-6 at these caps");
  rep.verdict = BoundaryVerdict::Boundary;
  return rep;
}

WeightedShiftModel weighted_shift_model(cplx alpha, int N) {
  if (N < 1) throw SpecViolation("weighted_shift_model: N must be positive");
  const double a = std::abs(alpha);
  if (std::abs(a - 1.0) <= 1e-12) throw UnimodularAlpha("weighted_shift_model");

  WeightedShiftModel out;
  double beta_mod;
  if (a > 1.0) {
    beta_mod = 1.0 / a;  // beta = alpha / |alpha|^2
    out.swapped = false;
  } else {
    // Swapped variables: the quotient by z2 - (1/alpha) z1, where the shift
    // acts in the second coordinate with beta = conj(alpha).
    beta_mod = a;
    out.swapped = true;
  }
  const double r = beta_mod * beta_mod;
  double csq_n = 1.0;  // c_0^2
  double rpow = 1.0;
  for (int n = 0; n < N; ++n) {
    rpow *= r;
    const double csq_next = csq_n + rpow;
    out.weights.push_back(std::sqrt(csq_n / csq_next));
    csq_n = csq_next;
  }
  return out;
}

std::vector<std::vector<cplx>> eta_fibre_on_torus(const std::vector<BlaschkeProduct>& etas,
                                                  cplx lambda) {
  if (etas.empty()) throw SpecViolation("eta_fibre_on_torus: no eta data");
  if (std::abs(std::abs(lambda) - 1.0) > 1e-9)
    throw SpecViolation("eta_fibre_on_torus: lambda must be unimodular");

  std::vector<std::vector<FibreRoot>> per_var;
  per_var.reserve(etas.size());
  for (const BlaschkeProduct& eta : etas) {
    if (eta.degree() == 0) throw SpecViolation("eta_fibre_on_torus: constant eta");
    per_var.push_back(solve_level_set(eta, lambda));
  }

  std::vector<std::vector<cplx>> points;
  std::vector<size_t> idx(etas.size(), 0);
  bool done = false;
  while (!done) {
    std::vector<cplx> pt;
    pt.reserve(etas.size());
    for (size_t i = 0; i < etas.size(); ++i) {
      const cplx z = per_var[i][idx[i]].z;
      if (std::abs(std::abs(z) - 1.0) > 1e-9)
        throw RootfindingFailure("eta_fibre_on_torus: fibre point off the torus");
      pt.push_back(z);
    }
    points.push_back(std::move(pt));
    done = true;
    for (size_t i = etas.size(); i-- > 0;) {
      if (++idx[i] < per_var[i].size()) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
  }
  return points;
}

std::vector<std::vector<std::vector<cplx>>> eta_spectrum_sample(
    const std::vector<BlaschkeProduct>& etas, int samples) {
  if (samples < 1) throw SpecViolation("eta_spectrum_sample: samples must be positive");
  std::vector<std::vector<std::vector<cplx>>> out;
  out.reserve(static_cast<size_t>(samples));
  const double golden = 0.61803398874989484820;
  for (int s = 0; s < samples; ++s) {
    const double t = 2.0 * M_PI * (s + golden * 0.5) / samples;
    out.push_back(eta_fibre_on_torus(etas, std::polar(1.0, t)));
  }
  return out;
}

VonNeumannReport qeta_vonneumann_check(const std::vector<BlaschkeProduct>& etas,
                                       const std::vector<MPoly>& qs, GridPtr grid,
                                       int lambda_samples) {
  VonNeumannReport rep;
  const QuotientModel model =
      build_submodule(EtaIdeal{etas}, grid, DiagonalSpace::hardy(grid->var_count()));
  const auto fibres = eta_spectrum_sample(etas, lambda_samples);
  for (const MPoly& q : qs) {
    VonNeumannRow row;
    row.norm_qC = operator_norm(mpoly_apply(model, q));
    for (const auto& fibre : fibres)
      for (const auto& pt : fibre) row.sup_spectrum = std::max(row.sup_spectrum, std::abs(q.evaluate(pt)));
    row.within_slack = row.norm_qC <= row.sup_spectrum + rep.slack;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace hql
