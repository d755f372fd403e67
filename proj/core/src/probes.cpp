#include "hql/probes.hpp"

#include <algorithm>
#include <cmath>

#include "hql/parallel.hpp"

namespace hql {

std::string to_string(ENVerdict v) {
  return v == ENVerdict::EssentiallyNormal ? "EssentiallyNormal" : "NotEssentiallyNormal";
}

Mat cross_commutator(const QuotientModel& model, int i, int j) {
  const Mat& A = compressed_coordinate(model, i);
  const Mat Bh = compressed_coordinate(model, j).adjoint();
  return A * Bh - Bh * A;
}

cplx quadratic_form(const Mat& T, const Vec& v) {
  if (T.rows() != T.cols() || T.cols() != v.size()) throw DimensionMismatch("quadratic_form");
  return (v.adjoint() * (T * v))(0, 0);
}

cplx cross_commutator_closed_form(const InnerSymbol& theta, const std::vector<cplx>& w) {
  if (theta.var_count() < 3)
    throw SpecViolation("cross_commutator_closed_form: needs at least three variables");
  if (!theta.depends_on(0) || !theta.depends_on(1))
    throw SymbolIndependentOfVariable("cross_commutator_closed_form");
  const cplx s2 = backward_shift_eval(theta, 1, w);
  const cplx s1 = backward_shift_eval(theta, 0, w);
  const double f = (1.0 - std::norm(w[0])) * (1.0 - std::norm(w[1]));
  return s2 * std::conj(s1) * f;
}

namespace {

ProbeVerdict trail_verdict(const std::vector<cplx>& measured, const std::vector<cplx>& closed,
                           double max_dev, double tol) {
  if (!closed.empty() && std::abs(closed.back()) >= 10.0 * tol && max_dev <= tol)
    return ProbeVerdict::NonCompactCertificate;
  if (!measured.empty() && std::abs(measured.back()) <= tol)
    return ProbeVerdict::VanishingSequence;
  return ProbeVerdict::Inconclusive;
}

}  // namespace

ProbeReport cross_commutator_trail_probe(const InnerSymbol& theta, GridPtr grid,
                                         std::vector<cplx> w_fixed, int l,
                                         const std::vector<cplx>& trail) {
  const int n = grid->var_count();
  if (n < 3) throw SpecViolation("cross_commutator_trail_probe: needs at least three variables");
  if (!theta.depends_on(0) || !theta.depends_on(1))
    throw SymbolIndependentOfVariable("cross_commutator_trail_probe");
  if (l < 2 || l >= n) throw SpecViolation("cross_commutator_trail_probe: l must be >= 3rd variable");
  if (static_cast<int>(w_fixed.size()) != n)
    throw VariableCountMismatch("cross_commutator_trail_probe");
  if (trail.empty()) throw SpecViolation("cross_commutator_trail_probe: empty trail");

  const DiagonalSpace space = DiagonalSpace::hardy(n);
  const QuotientModel model = build_submodule(PrincipalInner{theta}, grid, space);
  const Mat comm = cross_commutator(model, 0, 1);

  ProbeReport rep;
  rep.probe = "theorem31";
  rep.param_key = "w" + std::to_string(l + 1);
  rep.trail = trail;
  rep.measured.resize(trail.size());
  rep.closed_form.resize(trail.size());
  std::vector<double> tols(trail.size());

  parallel_for(static_cast<int>(trail.size()), [&](int t) {
    std::vector<cplx> w = w_fixed;
    w[static_cast<size_t>(l)] = trail[static_cast<size_t>(t)];
    const double tf = tail_factor(w, *grid);
    if (tf > 1e-6) throw GridTooSmall("cross_commutator_trail_probe: tail factor above 1e-6");
    const KernelVector K = kernel_vector(w, grid, space);
    const Vec v = quot_coords(model, K.coeffs) / K.trunc_norm;
    rep.measured[static_cast<size_t>(t)] = quadratic_form(comm, v);
    rep.closed_form[static_cast<size_t>(t)] = cross_commutator_closed_form(theta, w);
    tols[static_cast<size_t>(t)] = 10.0 * tf + 1e-8;
  });

  rep.tolerance = *std::max_element(tols.begin(), tols.end());
  rep.max_deviation = 0.0;
  for (size_t t = 0; t < trail.size(); ++t)
    rep.max_deviation = std::max(rep.max_deviation, std::abs(rep.measured[t] - rep.closed_form[t]));
  rep.verdict = trail_verdict(rep.measured, rep.closed_form, rep.max_deviation, rep.tolerance);
  return rep;
}

ProbeReport one_variable_block_probe(const BlaschkeProduct& theta_prime, GridPtr grid) {
  const int n = grid->var_count();
  if (n < 3) throw SpecViolation("one_variable_block_probe: needs at least three variables");
  if (theta_prime.degree() == 0) throw DegenerateSpec("one_variable_block_probe: constant symbol");
  if (grid->cap(0) < theta_prime.degree() + 2)
    throw GridTooSmall("one_variable_block_probe: cap_1 must be >= deg + 2");

  const DiagonalSpace space = DiagonalSpace::hardy(n);
  const InnerSymbol theta = InnerSymbol::one_variable(n, 0, theta_prime);
  const QuotientModel model = build_submodule(PrincipalInner{theta}, grid, space);
  const Mat comm = cross_commutator(model, 1, 1);

  // Block basis u_j x 1 x z_3^{m_3} ... z_n^{m_n} with m_i held one below the
  // caps; u_j runs over the truncated one-variable quotient directions.
  const Mat& U = (*model.varSplits)[0].quot;
  std::vector<MultiIndex> tailIndices;
  {
    std::vector<int> m(static_cast<size_t>(n), 0);
    while (true) {
      tailIndices.emplace_back(m);
      int i = 2;
      for (; i < n; ++i) {
        if (m[static_cast<size_t>(i)] < grid->cap(i) - 1) {
          ++m[static_cast<size_t>(i)];
          break;
        }
        m[static_cast<size_t>(i)] = 0;
      }
      if (i == n) break;
    }
  }

  const Eigen::Index dim = U.cols() * static_cast<Eigen::Index>(tailIndices.size());
  Mat B(grid->basis_size(), dim);
  Eigen::Index col = 0;
  for (Eigen::Index j = 0; j < U.cols(); ++j)
    for (const MultiIndex& m : tailIndices) {
      Vec c = Vec::Zero(grid->basis_size());
      for (int pos = 0; pos < grid->basis_size(); ++pos) {
        const MultiIndex& k = grid->index_at(pos);
        if (k[1] != 0) continue;
        bool match = true;
        for (int i = 2; i < n && match; ++i) match = (k[i] == m[i]);
        if (!match) continue;
        c[pos] = U(k[0], j);
      }
      B.col(col++) = c;
    }

  const Mat coords = model.quotFrame.adjoint() * B;
  Mat block = coords.adjoint() * comm * coords;
  block += Mat::Identity(dim, dim);
  const double residual = block.cwiseAbs().maxCoeff();

  ProbeReport rep;
  rep.probe = "lemma25";
  rep.param_key = "diag_index";
  for (Eigen::Index d = 0; d < dim; ++d) {
    rep.trail.push_back(cplx(static_cast<double>(d), 0.0));
    rep.measured.push_back(block(d, d) - 1.0);  // block stores B + I here
    rep.closed_form.push_back(cplx(-1.0, 0.0));
  }
  rep.max_deviation = residual;
  rep.tolerance = 1e-10;
  rep.verdict = residual <= rep.tolerance ? ProbeVerdict::NonCompactCertificate
                                          : ProbeVerdict::Inconclusive;
  return rep;
}

double tensor_self_commutator_residual(const QuotientModel& model, int i) {
  if (model.tensorFactors.empty())
    throw SpecViolation("tensor_self_commutator_residual: model was not tensor-built");
  const int n = model.grid->var_count();
  if (i < 0 || i >= n) throw VariableCountMismatch("tensor_self_commutator_residual");

  const Mat direct = cross_commutator(model, i, i);
  const Mat commFactor = cross_commutator(model.tensorFactors[static_cast<size_t>(i)], 0, 0);

  // Rebuild the combo bookkeeping of the quot columns: combo c picks column
  // c_j of variable j, quot columns first.
  struct Pick {
    bool quot;
    int local;
  };
  std::vector<std::vector<Pick>> picks;
  for (int combo = 0; combo < model.grid->basis_size(); ++combo) {
    const MultiIndex& c = model.grid->index_at(combo);
    bool all_sub = true;
    std::vector<Pick> row(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      const auto& sp = (*model.varSplits)[static_cast<size_t>(j)];
      const int q = static_cast<int>(sp.quot.cols());
      if (c[j] < q) {
        row[static_cast<size_t>(j)] = Pick{true, c[j]};
        all_sub = false;
      } else {
        row[static_cast<size_t>(j)] = Pick{false, c[j] - q};
      }
    }
    if (!all_sub) picks.push_back(std::move(row));
  }

  const Eigen::Index dim = model.quot_dim();
  Mat assembled = Mat::Zero(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b) {
      cplx val = 1.0;
      for (int j = 0; j < n; ++j) {
        const Pick &pa = picks[static_cast<size_t>(a)][static_cast<size_t>(j)],
                   &pb = picks[static_cast<size_t>(b)][static_cast<size_t>(j)];
        if (j == static_cast<int>(i)) {
          if (!pa.quot || !pb.quot) {
            val = 0.0;
            break;
          }
          val *= commFactor(pa.local, pb.local);
        } else {
          if (!pa.quot || !pb.quot || pa.local != pb.local) {
            val = 0.0;
            break;
          }
        }
      }
      assembled(a, b) = val;
    }

  return operator_norm(direct - assembled);
}

ENVerdict doubly_commuting_verdict(const std::vector<FactorDim>& dims) {
  if (dims.empty()) throw SpecViolation("doubly_commuting_verdict: no factors");
  int infinite = 0;
  bool infinite_en = true;
  bool others_one_dim = true;
  for (const FactorDim& f : dims) {
    if (f.infinite) {
      ++infinite;
      infinite_en = infinite_en && f.essentially_normal;
    }
  }
  if (infinite == 0) return ENVerdict::EssentiallyNormal;
  if (infinite > 1) return ENVerdict::NotEssentiallyNormal;
  for (const FactorDim& f : dims)
    if (!f.infinite && f.dim != 1) others_one_dim = false;
  return (infinite_en && others_one_dim) ? ENVerdict::EssentiallyNormal
                                         : ENVerdict::NotEssentiallyNormal;
}

ProbeReport rudin_level_probe(const RudinFinite& spec, int level, cplx beta, cplx lambda,
                              GridPtr grid) {
  const int M = static_cast<int>(spec.psi.size());
  if (level < 1 || level >= M)
    throw SpecViolation("rudin_level_probe: level must leave a next level in the lists");
  const BlaschkeProduct& psi_m = spec.psi[static_cast<size_t>(level - 1)];
  const BlaschkeProduct ratio = spec.psi[static_cast<size_t>(level)].divide(psi_m);

  auto is_zero_of = [](const BlaschkeProduct& B, cplx z) {
    for (cplx a : B.zeros())
      if (std::abs(a - z) <= 1e-9) return true;
    return false;
  };
  if (!is_zero_of(ratio, beta))
    throw SpecViolation("rudin_level_probe: beta is not a zero of psi_{m+1}/psi_m");
  if (!is_zero_of(spec.phi[static_cast<size_t>(level)], lambda))
    throw SpecViolation("rudin_level_probe: lambda is not a zero of phi_{m+1}");

  const std::vector<cplx> w{beta, lambda};
  const double tfa = std::pow(std::abs(beta), grid->cap(0) + 1);
  const double tfb = std::pow(std::abs(lambda), grid->cap(1) + 1);
  if (tfa * tfb > 1e-6) throw GridTooSmall("rudin_level_probe: tail factor above 1e-6");

  const DiagonalSpace space = DiagonalSpace::hardy(2);
  const QuotientModel model = build_submodule(RudinFinite{spec.psi, spec.phi}, grid, space);
  const Mat C = compressed_multiplier(model, InnerSymbol::one_variable(2, 0, psi_m));
  const Mat comm = C * C.adjoint() - C.adjoint() * C;

  const KernelVector K = kernel_vector(w, grid, space);
  const Vec v = quot_coords(model, K.coeffs) / K.trunc_norm;

  ProbeReport rep;
  rep.probe = "rudin";
  rep.param_key = "lambda";
  rep.trail = {lambda};
  rep.measured = {quadratic_form(comm, v)};
  rep.closed_form = {cplx(-(1.0 - std::norm(psi_m.evaluate(beta))), 0.0)};
  rep.max_deviation = std::abs(rep.measured[0] - rep.closed_form[0]);
  // The two kernel factors truncate independently, so the error scale is the
  // sum of the per-variable tail factors, not their product.
  rep.tolerance = 10.0 * (tfa + tfb) + 1e-8;
  rep.verdict = trail_verdict(rep.measured, rep.closed_form, rep.max_deviation, rep.tolerance);
  return rep;
}

}  // namespace hql
