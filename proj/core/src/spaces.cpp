#include "hql/spaces.hpp"

#include <cmath>

namespace hql {

DiagonalSpace::DiagonalSpace(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error("DiagonalSpace: needs at least one factor");
  for (const Factor& f : factors_) {
    if (f.kind == Kind::WeightedBergman && f.alpha <= -1)
      throw Error("DiagonalSpace: Bergman parameter must exceed -1");
    if (f.kind == Kind::Custom)
      for (double b : f.beta)
        if (!(b > 0.0)) throw Error("DiagonalSpace: weights must be positive");
  }
}

DiagonalSpace DiagonalSpace::hardy(int n) {
  return DiagonalSpace(std::vector<Factor>(static_cast<size_t>(n), Factor{}));
}

DiagonalSpace DiagonalSpace::weighted_bergman(int n, int alpha) {
  Factor f;
  f.kind = Kind::WeightedBergman;
  f.alpha = alpha;
  return DiagonalSpace(std::vector<Factor>(static_cast<size_t>(n), f));
}

DiagonalSpace DiagonalSpace::custom(std::vector<std::vector<double>> beta_per_variable) {
  std::vector<Factor> fs;
  fs.reserve(beta_per_variable.size());
  for (auto& b : beta_per_variable) {
    Factor f;
    f.kind = Kind::Custom;
    f.beta = std::move(b);
    fs.push_back(std::move(f));
  }
  return DiagonalSpace(std::move(fs));
}

bool DiagonalSpace::is_hardy() const {
  for (const Factor& f : factors_)
    if (f.kind != Kind::Hardy) return false;
  return true;
}

double DiagonalSpace::beta(int i, int j) const {
  const Factor& f = factors_[static_cast<size_t>(i)];
  switch (f.kind) {
    case Kind::Hardy:
      return 1.0;
    case Kind::WeightedBergman: {
      // binom(j + alpha + 1, j) by stable recurrence.
      double b = 1.0;
      for (int t = 1; t <= j; ++t) b *= static_cast<double>(t + f.alpha + 1) / t;
      return b;
    }
    case Kind::Custom:
      if (j >= static_cast<int>(f.beta.size()))
        throw Error("DiagonalSpace: custom weight sequence too short");
      return f.beta[static_cast<size_t>(j)];
  }
  throw Error("DiagonalSpace: unreachable");
}

bool DiagonalSpace::operator==(const DiagonalSpace& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const Factor &a = factors_[i], &b = o.factors_[i];
    if (a.kind != b.kind || a.alpha != b.alpha || a.beta != b.beta) return false;
  }
  return true;
}

double monomial_norm(const MultiIndex& k, const DiagonalSpace& space) {
  if (k.size() != space.var_count()) throw VariableCountMismatch("monomial_norm");
  double nrm = 1.0;
  for (int i = 0; i < k.size(); ++i) nrm *= space.factor_norm(i, k[i]);
  return nrm;
}

CoeffVector::CoeffVector(GridPtr g, Eigen::VectorXcd e) : grid(std::move(g)), entries(std::move(e)) {
  if (entries.size() != grid->basis_size()) throw DimensionMismatch("CoeffVector: wrong length");
}

CoeffVector CoeffVector::zero(GridPtr g) {
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(g->basis_size());
  return CoeffVector(std::move(g), std::move(e));
}

CoeffVector CoeffVector::monomial(GridPtr g, const MultiIndex& k) {
  CoeffVector v = zero(std::move(g));
  v.set(k, 1.0);
  return v;
}

cplx CoeffVector::at(const MultiIndex& k) const {
  const int pos = grid->position_of(k);
  if (pos < 0) throw GridMismatch("CoeffVector::at: index outside grid");
  return entries[pos];
}

void CoeffVector::set(const MultiIndex& k, cplx value) {
  const int pos = grid->position_of(k);
  if (pos < 0) throw GridMismatch("CoeffVector::set: index outside grid");
  entries[pos] = value;
}

static void require_same_grid(const CoeffVector& u, const CoeffVector& v) {
  if (!u.grid || !v.grid || *u.grid != *v.grid) throw GridMismatch("inner: different grids");
}

cplx inner(const CoeffVector& u, const CoeffVector& v, const DiagonalSpace& space) {
  require_same_grid(u, v);
  if (u.grid->var_count() != space.var_count()) throw VariableCountMismatch("inner");
  cplx acc = 0.0;
  for (int pos = 0; pos < u.grid->basis_size(); ++pos) {
    const double w = monomial_norm(u.grid->index_at(pos), space);
    acc += u.entries[pos] * std::conj(v.entries[pos]) * (w * w);
  }
  return acc;
}

double norm(const CoeffVector& u, const DiagonalSpace& space) {
  return std::sqrt(std::real(inner(u, u, space)));
}

Eigen::VectorXcd to_orthonormal_coords(const CoeffVector& v, const DiagonalSpace& space) {
  Eigen::VectorXcd out = v.entries;
  for (int pos = 0; pos < v.grid->basis_size(); ++pos)
    out[pos] *= monomial_norm(v.grid->index_at(pos), space);
  return out;
}

CoeffVector from_orthonormal_coords(GridPtr grid, const DiagonalSpace& space,
                                    const Eigen::VectorXcd& coords) {
  if (coords.size() != grid->basis_size()) throw DimensionMismatch("from_orthonormal_coords");
  Eigen::VectorXcd raw = coords;
  for (int pos = 0; pos < grid->basis_size(); ++pos)
    raw[pos] /= monomial_norm(grid->index_at(pos), space);
  return CoeffVector(std::move(grid), std::move(raw));
}

KernelVector kernel_vector(const std::vector<cplx>& w, GridPtr grid, const DiagonalSpace& space) {
  if (static_cast<int>(w.size()) != grid->var_count()) throw VariableCountMismatch("kernel_vector");
  if (!space.is_hardy()) throw Error("kernel_vector: only Hardy factors carry this closed form");
  double front = 1.0;
  for (cplx wi : w) {
    if (std::abs(wi) >= 1.0) throw PointOnBoundary("kernel_vector: |w_i| >= 1");
    front *= std::sqrt(1.0 - std::norm(wi));
  }

  CoeffVector coeffs = CoeffVector::zero(grid);
  for (int pos = 0; pos < grid->basis_size(); ++pos) {
    const MultiIndex& k = grid->index_at(pos);
    cplx term = front;
    for (int i = 0; i < grid->var_count(); ++i)
      term *= std::pow(std::conj(w[static_cast<size_t>(i)]), k[i]);
    coeffs.entries[pos] = term;
  }

  // Per variable the truncated one-variable kernel keeps mass
  // (1 - |w|^2) sum_{k<=D} |w|^{2k} = 1 - |w|^{2(D+1)}.
  double kept = 1.0;
  for (int i = 0; i < grid->var_count(); ++i)
    kept *= 1.0 - std::pow(std::norm(w[static_cast<size_t>(i)]), grid->cap(i) + 1);
  const double tail = std::sqrt(std::max(0.0, 1.0 - kept));

  return KernelVector{std::move(coeffs), tail, std::sqrt(kept)};
}

double tail_factor(const std::vector<cplx>& w, const TruncationGrid& grid) {
  if (static_cast<int>(w.size()) != grid.var_count()) throw VariableCountMismatch("tail_factor");
  double t = 1.0;
  for (int i = 0; i < grid.var_count(); ++i)
    t *= std::pow(std::abs(w[static_cast<size_t>(i)]), grid.cap(i) + 1);
  return t;
}

}  // namespace hql
