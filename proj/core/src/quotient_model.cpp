#include "hql/quotient_model.hpp"

#include <algorithm>
#include <cmath>

namespace hql {

namespace {

constexpr int kUnboundedTrust = 1 << 20;

// Exact finite section of the submodule projection M_B M_B^* on a
// one-variable grid: S[j,k] = sum_{t <= min(j,k)} a_{j-t} conj(a_{k-t}) with
// a the Maclaurin coefficients of B.  Entries are cap-independent, which is
// what makes trust blocks exact.
Mat submodule_section(const BlaschkeProduct& B, int cap) {
  const Poly1 a = B.taylor(cap);
  Mat S = Mat::Zero(cap + 1, cap + 1);
  for (int j = 0; j <= cap; ++j)
    for (int k = j; k <= cap; ++k) {
      cplx acc = 0.0;
      for (int t = 0; t <= std::min(j, k); ++t)
        acc += a[static_cast<size_t>(j - t)] * std::conj(a[static_cast<size_t>(k - t)]);
      S(j, k) = acc;
      S(k, j) = std::conj(acc);
    }
  return S;
}

// Sub/quot split of one variable for the factor z^{m} B(z).  Quot columns
// come first so that for pure monomials the assembled frames follow the grid
// enumeration.
QuotientModel::VarSplit variable_split(const BlaschkeProduct& f, int cap) {
  QuotientModel::VarSplit out;
  const int dim = cap + 1;
  if (f.is_monomial()) {
    const int m = std::min(f.degree(), dim);
    out.quot = Mat::Identity(dim, dim).leftCols(m);
    out.sub = Mat::Identity(dim, dim).rightCols(dim - m);
    return out;
  }
  SpectralSplit split = hermitian_split(submodule_section(f, cap), 0.5);
  const int expected = std::min(f.degree(), dim);
  if (static_cast<int>(split.low.cols()) != expected)
    throw ComputeError("variable_split: section rank does not match the factor degree");
  out.quot = std::move(split.low);
  out.sub = std::move(split.high);
  return out;
}

struct FramePair {
  Mat sub, quot;
};

// Tensor products of per-variable columns, laid out in the grid enumeration.
// Combo (c_1, ..., c_n) picks column c_i of variable i (quot columns first),
// and the product lands in the quot frame unless every pick is a sub column.
FramePair assemble_tensor(const TruncationGrid& grid,
                          const std::vector<QuotientModel::VarSplit>& splits) {
  const int n = grid.var_count();
  const int basis = grid.basis_size();
  long long sub_count = 1;
  for (int i = 0; i < n; ++i) sub_count *= splits[static_cast<size_t>(i)].sub.cols();

  FramePair out;
  out.sub = Mat(basis, static_cast<Eigen::Index>(sub_count));
  out.quot = Mat(basis, basis - sub_count);

  std::vector<const Mat*> chosen(static_cast<size_t>(n));
  Eigen::Index si = 0, qi = 0;
  Vec col(basis);
  for (int combo = 0; combo < basis; ++combo) {
    const MultiIndex& c = grid.index_at(combo);
    bool all_sub = true;
    std::vector<Eigen::Index> localCol(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      const auto& sp = splits[static_cast<size_t>(i)];
      const Eigen::Index q = sp.quot.cols();
      if (c[i] < q) {
        chosen[static_cast<size_t>(i)] = &sp.quot;
        localCol[static_cast<size_t>(i)] = c[i];
        all_sub = false;
      } else {
        chosen[static_cast<size_t>(i)] = &sp.sub;
        localCol[static_cast<size_t>(i)] = c[i] - q;
      }
    }
    for (int pos = 0; pos < basis; ++pos) {
      const MultiIndex& k = grid.index_at(pos);
      cplx prod = 1.0;
      for (int i = 0; i < n; ++i)
        prod *= (*chosen[static_cast<size_t>(i)])(k[i], localCol[static_cast<size_t>(i)]);
      col[pos] = prod;
    }
    if (all_sub)
      out.sub.col(si++) = col;
    else
      out.quot.col(qi++) = col;
  }
  return out;
}

void cache_coordinate_ops(QuotientModel& m) {
  const int n = m.grid->var_count();
  m.coordinateOps.clear();
  m.coordinateOps.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    m.coordinateOps.push_back(m.quotFrame.adjoint() *
                              raise_columns(*m.grid, m.space, m.quotFrame, i));
}

QuotientModel build_principal_inner(const PrincipalInner& spec, GridPtr grid,
                                    const DiagonalSpace& space) {
  if (!space.is_hardy()) throw Error("PrincipalInner: defined on the Hardy space");
  const InnerSymbol& theta = spec.theta;
  if (theta.var_count() != grid->var_count()) throw VariableCountMismatch("build_submodule");
  const int deg = theta.total_degree();
  if (deg == 0) throw DegenerateSpec("PrincipalInner: constant symbol");
  const int trust = grid->min_cap() - deg - 1;
  if (trust < 1) throw GridTooSmall("PrincipalInner: trust degree below 1");

  std::vector<QuotientModel::VarSplit> splits;
  splits.reserve(static_cast<size_t>(grid->var_count()));
  for (int i = 0; i < grid->var_count(); ++i)
    splits.push_back(variable_split(theta.variable_factor(i), grid->cap(i)));

  QuotientModel m;
  m.grid = std::move(grid);
  m.space = space;
  FramePair frames = assemble_tensor(*m.grid, splits);
  m.subFrame = std::move(frames.sub);
  m.quotFrame = std::move(frames.quot);
  m.trustDegree = trust;
  m.varSplits = std::move(splits);
  cache_coordinate_ops(m);
  return m;
}

// Positions of grid indices with the given total degree (contiguous in the
// graded-lex enumeration).
std::pair<int, int> degree_range(const TruncationGrid& grid, int d) {
  int lo = -1, hi = -1;
  for (int pos = 0; pos < grid.basis_size(); ++pos) {
    if (grid.index_at(pos).total_degree() == d) {
      if (lo < 0) lo = pos;
      hi = pos;
    } else if (lo >= 0) {
      break;
    }
  }
  return {lo, hi};
}

bool multiple_fits(const MPoly& g, const MultiIndex& t, const TruncationGrid& grid) {
  for (int i = 0; i < grid.var_count(); ++i)
    if (t[i] + g.degree_in(i) > grid.cap(i)) return false;
  return true;
}

QuotientModel build_poly_ideal(const PolyIdeal& spec, GridPtr grid, const DiagonalSpace& space) {
  if (spec.generators.empty()) throw DegenerateSpec("PolyIdeal: no generators");
  int maxdeg = 0;
  for (const MPoly& g : spec.generators) {
    if (g.is_zero()) throw DegenerateSpec("PolyIdeal: zero generator");
    if (g.var_count() != grid->var_count()) throw VariableCountMismatch("PolyIdeal");
    maxdeg = std::max(maxdeg, g.total_degree());
  }
  const int trust = grid->min_cap() - maxdeg - 1;
  if (trust < 1) throw GridTooSmall("PolyIdeal: trust degree below 1");

  QuotientModel m;
  m.grid = std::move(grid);
  m.space = space;
  m.trustDegree = trust;

  bool homogeneous2 = m.grid->var_count() == 2;
  for (const MPoly& g : spec.generators) homogeneous2 = homogeneous2 && g.is_homogeneous();

  const int basis = m.grid->basis_size();
  if (homogeneous2) {
    // Degree-sliced build: every slice is handled by its own exact
    // orthonormalization, so the Gram structure is block diagonal by degree.
    const int dmax = m.grid->cap(0) + m.grid->cap(1);
    std::vector<Mat> subSlices, quotSlices;
    std::vector<int> quotDegrees;
    for (int d = 0; d <= dmax; ++d) {
      const auto [lo, hi] = degree_range(*m.grid, d);
      const int rows = hi - lo + 1;
      std::vector<Vec> cols;
      for (const MPoly& g : spec.generators) {
        const int gd = g.homogeneous_degree();
        if (d < gd) continue;
        for (int t1 = 0; t1 <= d - gd; ++t1) {
          MultiIndex t({t1, d - gd - t1});
          if (!multiple_fits(g, t, *m.grid)) continue;
          const MPoly prod = g * MPoly::monomial(2, t);
          Vec c = Vec::Zero(rows);
          bool inGrid = true;
          for (const auto& [k, coeff] : prod.terms()) {
            const int pos = m.grid->position_of(k);
            if (pos < 0) {
              inGrid = false;
              break;
            }
            c[pos - lo] = coeff * monomial_norm(k, space);
          }
          if (inGrid) cols.push_back(std::move(c));
        }
      }
      Mat F(rows, static_cast<Eigen::Index>(cols.size()));
      for (size_t j = 0; j < cols.size(); ++j) F.col(static_cast<Eigen::Index>(j)) = cols[j];
      RangeSplit split = orthonormal_split(F);
      Mat subFull = Mat::Zero(basis, split.range.cols());
      subFull.middleRows(lo, rows) = split.range;
      Mat quotFull = Mat::Zero(basis, split.complement.cols());
      quotFull.middleRows(lo, rows) = split.complement;
      subSlices.push_back(std::move(subFull));
      quotSlices.push_back(std::move(quotFull));
      for (Eigen::Index j = 0; j < split.complement.cols(); ++j) quotDegrees.push_back(d);
    }
    Eigen::Index subCols = 0, quotCols = 0;
    for (const Mat& s : subSlices) subCols += s.cols();
    for (const Mat& q : quotSlices) quotCols += q.cols();
    m.subFrame = Mat(basis, subCols);
    m.quotFrame = Mat(basis, quotCols);
    Eigen::Index si = 0, qi = 0;
    for (const Mat& s : subSlices) {
      m.subFrame.middleCols(si, s.cols()) = s;
      si += s.cols();
    }
    for (const Mat& q : quotSlices) {
      m.quotFrame.middleCols(qi, q.cols()) = q;
      qi += q.cols();
    }
    m.quotColumnDegree = std::move(quotDegrees);
  } else {
    std::vector<Vec> cols;
    for (const MPoly& g : spec.generators) {
      for (int tpos = 0; tpos < basis; ++tpos) {
        const MultiIndex& t = m.grid->index_at(tpos);
        if (!multiple_fits(g, t, *m.grid)) continue;
        const MPoly prod = g * MPoly::monomial(m.grid->var_count(), t);
        cols.push_back(to_orthonormal_coords(prod.on_grid(m.grid), space));
      }
    }
    Mat F(basis, static_cast<Eigen::Index>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) F.col(static_cast<Eigen::Index>(j)) = cols[j];
    RangeSplit split = orthonormal_split(F);
    m.subFrame = std::move(split.range);
    m.quotFrame = std::move(split.complement);
  }

  cache_coordinate_ops(m);
  return m;
}

QuotientModel build_rudin(const RudinFinite& spec, GridPtr grid, const DiagonalSpace& space) {
  if (!space.is_hardy()) throw Error("RudinFinite: defined on the Hardy space");
  if (grid->var_count() != 2) throw VariableCountMismatch("RudinFinite: two variables");
  const size_t M = spec.psi.size();
  if (M == 0 || spec.phi.size() != M) throw DegenerateSpec("RudinFinite: empty or uneven lists");
  for (size_t k = 0; k + 1 < M; ++k) {
    if (!spec.psi[k + 1].divisible_by(spec.psi[k]) ||
        spec.psi[k + 1].degree() <= spec.psi[k].degree())
      throw SpecViolation("RudinFinite: psi must be strictly increasing");
    if (!spec.phi[k].divisible_by(spec.phi[k + 1]) ||
        spec.phi[k].degree() <= spec.phi[k + 1].degree())
      throw SpecViolation("RudinFinite: phi must be strictly decreasing");
  }
  const int gen = std::max(spec.psi.back().degree(), spec.phi.front().degree());
  const int trust = grid->min_cap() - gen - 1;
  if (trust < 1) throw GridTooSmall("RudinFinite: trust degree below 1");

  // Orthogonal-sum layout: level n contributes
  // (K_{psi_n} ominus K_{psi_{n-1}}) tensor K_{phi_n}.
  std::vector<Mat> blocksW, blocksV;
  Mat Uprev;
  for (size_t lvl = 0; lvl < M; ++lvl) {
    Mat U = model_space_frame(spec.psi[lvl], grid->cap(0));
    Mat W;
    if (lvl == 0) {
      W = U;
    } else {
      Mat T = U - Uprev * (Uprev.adjoint() * U);
      RangeSplit split = orthonormal_split(T);
      const int expected = spec.psi[lvl].degree() - spec.psi[lvl - 1].degree();
      if (split.rank != expected)
        throw ComputeError("RudinFinite: level difference has unexpected rank");
      W = std::move(split.range);
    }
    blocksW.push_back(std::move(W));
    blocksV.push_back(model_space_frame(spec.phi[lvl], grid->cap(1)));
    Uprev = std::move(U);
  }

  const int basis = grid->basis_size();
  Eigen::Index quotCols = 0;
  for (size_t lvl = 0; lvl < M; ++lvl) quotCols += blocksW[lvl].cols() * blocksV[lvl].cols();

  QuotientModel m;
  m.grid = std::move(grid);
  m.space = space;
  m.trustDegree = trust;
  m.quotFrame = Mat(basis, quotCols);
  Eigen::Index qi = 0;
  for (size_t lvl = 0; lvl < M; ++lvl) {
    const Mat& W = blocksW[lvl];
    const Mat& V = blocksV[lvl];
    for (Eigen::Index a = 0; a < W.cols(); ++a)
      for (Eigen::Index b = 0; b < V.cols(); ++b) {
        Vec col(basis);
        for (int pos = 0; pos < basis; ++pos) {
          const MultiIndex& k = m.grid->index_at(pos);
          col[pos] = W(k[0], a) * V(k[1], b);
        }
        m.quotFrame.col(qi++) = col;
      }
  }
  m.subFrame = orthonormal_complement(m.quotFrame);
  cache_coordinate_ops(m);
  return m;
}

QuotientModel build_eta_ideal(const EtaIdeal& spec, GridPtr grid, const DiagonalSpace& space) {
  const int n = grid->var_count();
  if (static_cast<int>(spec.eta.size()) != n) throw VariableCountMismatch("EtaIdeal");
  if (n < 2) throw DegenerateSpec("EtaIdeal: needs at least two variables");
  for (const BlaschkeProduct& e : spec.eta)
    if (e.degree() == 0) throw DegenerateSpec("EtaIdeal: constant eta");

  // eta_i - eta_{i+1} times the (invertible) denominators gives polynomial
  // generators N_i D_{i+1} - N_{i+1} D_i for the same submodule.
  auto one_var_poly = [n](const Poly1& p, int var) {
    MPoly out(n);
    for (size_t j = 0; j < p.size(); ++j) {
      if (std::abs(p[j]) == 0.0) continue;
      std::vector<int> k(static_cast<size_t>(n), 0);
      k[static_cast<size_t>(var)] = static_cast<int>(j);
      out.add_term(MultiIndex(std::move(k)), p[j]);
    }
    return out;
  };
  PolyIdeal ideal;
  for (int i = 0; i + 1 < n; ++i) {
    const auto& a = spec.eta[static_cast<size_t>(i)];
    const auto& b = spec.eta[static_cast<size_t>(i + 1)];
    MPoly g = one_var_poly(a.numerator(), i) * one_var_poly(b.denominator(), i + 1) -
              one_var_poly(b.numerator(), i + 1) * one_var_poly(a.denominator(), i);
    ideal.generators.push_back(std::move(g));
  }
  return build_poly_ideal(ideal, std::move(grid), space);
}

QuotientModel build_tensor_spec(const TensorQuotientSpec& spec, GridPtr grid,
                                const DiagonalSpace& space) {
  if (static_cast<int>(spec.factors.size()) != grid->var_count())
    throw VariableCountMismatch("TensorQuotientSpec");
  if (!space.is_hardy()) throw Error("TensorQuotientSpec: defined on the Hardy space");
  std::vector<QuotientModel> factors;
  factors.reserve(spec.factors.size());
  for (int i = 0; i < grid->var_count(); ++i) {
    const TensorFactorSpec& f = spec.factors[static_cast<size_t>(i)];
    if (f.one_dim) {
      if (grid->cap(i) != 0) throw GridMismatch("TensorQuotientSpec: one-dim factor needs cap 0");
      factors.push_back(one_dim_factor());
    } else {
      PrincipalInner pi{InnerSymbol::one_variable(1, 0, f.theta)};
      factors.push_back(build_submodule(pi, make_grid({grid->cap(i)}), DiagonalSpace::hardy(1)));
    }
  }
  return tensor_quotient(std::move(factors));
}

}  // namespace

QuotientModel build_submodule(const SubmoduleSpec& spec, GridPtr grid, const DiagonalSpace& space) {
  if (grid->var_count() != space.var_count())
    throw VariableCountMismatch("build_submodule: grid/space");
  return std::visit(
      [&](const auto& s) -> QuotientModel {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PrincipalInner>)
          return build_principal_inner(s, std::move(grid), space);
        else if constexpr (std::is_same_v<T, PolyIdeal>)
          return build_poly_ideal(s, std::move(grid), space);
        else if constexpr (std::is_same_v<T, RudinFinite>)
          return build_rudin(s, std::move(grid), space);
        else if constexpr (std::is_same_v<T, EtaIdeal>)
          return build_eta_ideal(s, std::move(grid), space);
        else
          return build_tensor_spec(s, std::move(grid), space);
      },
      spec);
}

QuotientModel one_dim_factor() {
  QuotientModel m;
  m.grid = make_grid({0});
  m.space = DiagonalSpace::hardy(1);
  m.quotFrame = Mat::Identity(1, 1);
  m.subFrame = Mat(1, 0);
  m.trustDegree = kUnboundedTrust;
  cache_coordinate_ops(m);
  return m;
}

QuotientModel tensor_quotient(std::vector<QuotientModel> factors, long long basis_limit) {
  if (factors.empty()) throw DegenerateSpec("tensor_quotient: no factors");
  std::vector<int> caps;
  std::vector<DiagonalSpace::Factor> spaceFactors;
  long long basis = 1;
  int trust = kUnboundedTrust;
  std::vector<QuotientModel::VarSplit> splits;
  for (const QuotientModel& f : factors) {
    if (f.grid->var_count() != 1) throw VariableCountMismatch("tensor_quotient: factors must be one-variable");
    caps.push_back(f.grid->cap(0));
    spaceFactors.push_back(f.space.factor(0));
    basis *= f.grid->basis_size();
    if (basis > basis_limit) throw DimensionOverflow("tensor_quotient: basis limit exceeded");
    trust = std::min(trust, f.trustDegree);
    splits.push_back(QuotientModel::VarSplit{f.subFrame, f.quotFrame});
  }

  QuotientModel m;
  m.grid = make_grid(caps);
  m.space = DiagonalSpace(std::move(spaceFactors));
  m.trustDegree = trust;
  FramePair frames = assemble_tensor(*m.grid, splits);
  m.subFrame = std::move(frames.sub);
  m.quotFrame = std::move(frames.quot);
  m.varSplits = std::move(splits);
  m.tensorFactors = std::move(factors);
  cache_coordinate_ops(m);
  return m;
}

const Mat& compressed_coordinate(const QuotientModel& model, int i) {
  if (i < 0 || i >= model.grid->var_count())
    throw VariableCountMismatch("compressed_coordinate: bad variable");
  return model.coordinateOps[static_cast<size_t>(i)];
}

Mat raise_columns(const TruncationGrid& grid, const DiagonalSpace& space, const Mat& X, int i) {
  if (X.rows() != grid.basis_size()) throw DimensionMismatch("raise_columns");
  Mat out = Mat::Zero(X.rows(), X.cols());
  for (int pos = 0; pos < grid.basis_size(); ++pos) {
    const MultiIndex& k = grid.index_at(pos);
    if (k[i] >= grid.cap(i)) continue;
    const int dst = grid.position_of(k.raised(i));
    const double ratio = space.factor_norm(i, k[i] + 1) / space.factor_norm(i, k[i]);
    out.row(dst) += ratio * X.row(pos);
  }
  return out;
}

namespace {

Mat multiply_columns_truncated(const TruncationGrid& grid, const DiagonalSpace& space,
                               const CoeffVector& sigmaRaw, const Mat& Xorth) {
  const int basis = grid.basis_size();
  Vec norms(basis);
  for (int pos = 0; pos < basis; ++pos) norms[pos] = monomial_norm(grid.index_at(pos), space);

  Mat Xraw = Xorth;
  for (int pos = 0; pos < basis; ++pos) Xraw.row(pos) /= norms[pos];

  Mat outRaw = Mat::Zero(Xorth.rows(), Xorth.cols());
  const int n = grid.var_count();
  std::vector<int> sum(static_cast<size_t>(n));
  for (int apos = 0; apos < basis; ++apos) {
    const cplx c = sigmaRaw.entries[apos];
    if (std::abs(c) == 0.0) continue;
    const MultiIndex& a = grid.index_at(apos);
    for (int bpos = 0; bpos < basis; ++bpos) {
      const MultiIndex& b = grid.index_at(bpos);
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        sum[static_cast<size_t>(i)] = a[i] + b[i];
        if (sum[static_cast<size_t>(i)] > grid.cap(i)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      outRaw.row(grid.position_of(MultiIndex(sum))) += c * Xraw.row(bpos);
    }
  }
  for (int pos = 0; pos < basis; ++pos) outRaw.row(pos) *= norms[pos];
  return outRaw;
}

}  // namespace

Mat compressed_multiplier(const QuotientModel& model, const InnerSymbol& sigma) {
  const CoeffVector taylor = symbol_taylor(sigma, model.grid);
  return model.quotFrame.adjoint() *
         multiply_columns_truncated(*model.grid, model.space, taylor, model.quotFrame);
}

Mat compressed_multiplier(const QuotientModel& model, const MPoly& sigma) {
  return model.quotFrame.adjoint() *
         multiply_columns_truncated(*model.grid, model.space, sigma.on_grid(model.grid),
                                    model.quotFrame);
}

Mat mpoly_apply(const QuotientModel& model, const MPoly& q) {
  if (q.var_count() != model.grid->var_count()) throw VariableCountMismatch("mpoly_apply");
  const int n = model.grid->var_count();
  const Eigen::Index dim = model.quot_dim();
  std::vector<std::vector<Mat>> pows(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int maxe = q.degree_in(i);
    auto& p = pows[static_cast<size_t>(i)];
    p.reserve(static_cast<size_t>(maxe) + 1);
    p.push_back(Mat::Identity(dim, dim));
    for (int e = 1; e <= maxe; ++e) p.push_back(p.back() * compressed_coordinate(model, i));
  }
  Mat out = Mat::Zero(dim, dim);
  for (const auto& [k, c] : q.terms()) {
    Mat term = pows[0][static_cast<size_t>(k[0])];
    for (int i = 1; i < n; ++i) term = term * pows[static_cast<size_t>(i)][static_cast<size_t>(k[i])];
    out += c * term;
  }
  return out;
}

CoeffVector projector_apply(const QuotientModel& model, Which which, const CoeffVector& v) {
  if (!v.grid || *v.grid != *model.grid) throw GridMismatch("projector_apply");
  const Mat& F = which == Which::Sub ? model.subFrame : model.quotFrame;
  const Vec coords = to_orthonormal_coords(v, model.space);
  const Vec out = F * (F.adjoint() * coords);
  return from_orthonormal_coords(model.grid, model.space, out);
}

Vec quot_coords(const QuotientModel& model, const CoeffVector& v) {
  if (!v.grid || *v.grid != *model.grid) throw GridMismatch("quot_coords");
  return model.quotFrame.adjoint() * to_orthonormal_coords(v, model.space);
}

CoeffVector multiply_truncated(const CoeffVector& a, const CoeffVector& b) {
  if (!a.grid || !b.grid || *a.grid != *b.grid) throw GridMismatch("multiply_truncated");
  const TruncationGrid& grid = *a.grid;
  CoeffVector out = CoeffVector::zero(a.grid);
  const int n = grid.var_count();
  std::vector<int> sum(static_cast<size_t>(n));
  for (int apos = 0; apos < grid.basis_size(); ++apos) {
    const cplx ca = a.entries[apos];
    if (std::abs(ca) == 0.0) continue;
    const MultiIndex& ka = grid.index_at(apos);
    for (int bpos = 0; bpos < grid.basis_size(); ++bpos) {
      const MultiIndex& kb = grid.index_at(bpos);
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        sum[static_cast<size_t>(i)] = ka[i] + kb[i];
        if (sum[static_cast<size_t>(i)] > grid.cap(i)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      out.entries[grid.position_of(MultiIndex(sum))] += ca * b.entries[bpos];
    }
  }
  return out;
}

Mat orthonormal_complement(const Mat& F) {
  const Eigen::Index n = F.rows();
  if (F.cols() == 0) return Mat::Identity(n, n);
  Eigen::HouseholderQR<Mat> qr(F);
  Mat Q = qr.householderQ() * Mat::Identity(n, n);
  Mat C = Q.rightCols(n - F.cols());
  canonicalize_column_phases(C);
  return C;
}

Mat model_space_frame(const BlaschkeProduct& B, int cap) {
  const int dim = cap + 1;
  if (B.degree() == 0) return Mat(dim, 0);
  if (B.is_monomial()) {
    const int m = std::min(B.degree(), dim);
    return Mat::Identity(dim, dim).leftCols(m);
  }
  SpectralSplit split = hermitian_split(submodule_section(B, cap), 0.5);
  if (static_cast<int>(split.low.cols()) != std::min(B.degree(), dim))
    throw ComputeError("model_space_frame: unexpected section rank");
  return split.low;
}

}  // namespace hql
