#include "hql/inner_symbol.hpp"

#include <cmath>

namespace hql {

InnerSymbol::InnerSymbol(int n, MultiIndex monomial,
                         std::vector<std::optional<BlaschkeProduct>> per_variable, cplx front)
    : n_(n), monomial_(std::move(monomial)), per_variable_(std::move(per_variable)), front_(front) {
  if (n_ < 1) throw Error("InnerSymbol: needs at least one variable");
  if (monomial_.size() == 0) monomial_ = MultiIndex(std::vector<int>(static_cast<size_t>(n_), 0));
  if (monomial_.size() != n_) throw VariableCountMismatch("InnerSymbol: monomial factor");
  if (per_variable_.empty()) per_variable_.resize(static_cast<size_t>(n_));
  if (static_cast<int>(per_variable_.size()) != n_)
    throw VariableCountMismatch("InnerSymbol: per-variable factors");
  const double m = std::abs(front_);
  if (std::abs(m - 1.0) > 1e-12) throw Error("InnerSymbol: front constant must be unimodular");
  front_ /= m;
}

InnerSymbol InnerSymbol::monomial(int n, MultiIndex k, cplx front) {
  return InnerSymbol(n, std::move(k), {}, front);
}

InnerSymbol InnerSymbol::one_variable(int n, int var, BlaschkeProduct B, cplx front) {
  std::vector<std::optional<BlaschkeProduct>> pv(static_cast<size_t>(n));
  pv[static_cast<size_t>(var)] = std::move(B);
  return InnerSymbol(n, MultiIndex(std::vector<int>(static_cast<size_t>(n), 0)), std::move(pv),
                     front);
}

BlaschkeProduct InnerSymbol::variable_factor(int i) const {
  BlaschkeProduct f = BlaschkeProduct::monomial(monomial_[i]);
  const auto& B = per_variable_[static_cast<size_t>(i)];
  if (B) f = f * *B;
  return f;
}

int InnerSymbol::total_degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += variable_factor(i).degree();
  return d;
}

InnerSymbol InnerSymbol::operator*(const InnerSymbol& o) const {
  if (n_ != o.n_) throw VariableCountMismatch("InnerSymbol::operator*");
  std::vector<int> mono(static_cast<size_t>(n_));
  std::vector<std::optional<BlaschkeProduct>> pv(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    mono[static_cast<size_t>(i)] = monomial_[i] + o.monomial_[i];
    const auto &a = per_variable_[static_cast<size_t>(i)], &b = o.per_variable_[static_cast<size_t>(i)];
    if (a && b)
      pv[static_cast<size_t>(i)] = *a * *b;
    else if (a)
      pv[static_cast<size_t>(i)] = a;
    else if (b)
      pv[static_cast<size_t>(i)] = b;
  }
  return InnerSymbol(n_, MultiIndex(std::move(mono)), std::move(pv), front_ * o.front_);
}

cplx symbol_eval(const InnerSymbol& theta, const std::vector<cplx>& w) {
  if (static_cast<int>(w.size()) != theta.var_count()) throw VariableCountMismatch("symbol_eval");
  cplx acc = theta.front();
  for (int i = 0; i < theta.var_count(); ++i) {
    const cplx wi = w[static_cast<size_t>(i)];
    if (std::abs(wi) >= 1.0) throw PointOnBoundary("symbol_eval: |w_i| >= 1");
    acc *= theta.variable_factor(i).evaluate(wi);
  }
  return acc;
}

CoeffVector symbol_taylor(const InnerSymbol& theta, GridPtr grid) {
  if (grid->var_count() != theta.var_count()) throw VariableCountMismatch("symbol_taylor");
  std::vector<Poly1> series;
  series.reserve(static_cast<size_t>(grid->var_count()));
  for (int i = 0; i < grid->var_count(); ++i)
    series.push_back(theta.variable_factor(i).taylor(grid->cap(i)));

  CoeffVector out = CoeffVector::zero(grid);
  for (int pos = 0; pos < grid->basis_size(); ++pos) {
    const MultiIndex& k = grid->index_at(pos);
    cplx term = theta.front();
    for (int i = 0; i < grid->var_count(); ++i)
      term *= series[static_cast<size_t>(i)][static_cast<size_t>(k[i])];
    out.entries[pos] = term;
  }
  return out;
}

CoeffVector backward_shift_symbol(const CoeffVector& coeffs, int i) {
  if (i < 0 || i >= coeffs.grid->var_count())
    throw VariableCountMismatch("backward_shift_symbol: bad variable");
  CoeffVector out = CoeffVector::zero(coeffs.grid);
  const TruncationGrid& g = *coeffs.grid;
  for (int pos = 0; pos < g.basis_size(); ++pos) {
    const MultiIndex& k = g.index_at(pos);
    if (k[i] >= g.cap(i)) continue;  // preimage off the grid
    out.entries[pos] = coeffs.entries[g.position_of(k.raised(i))];
  }
  return out;
}

cplx backward_shift_eval(const InnerSymbol& theta, int i, const std::vector<cplx>& w) {
  if (static_cast<int>(w.size()) != theta.var_count())
    throw VariableCountMismatch("backward_shift_eval");
  cplx acc = theta.front();
  for (int j = 0; j < theta.var_count(); ++j) {
    const cplx wj = w[static_cast<size_t>(j)];
    if (std::abs(wj) >= 1.0) throw PointOnBoundary("backward_shift_eval: |w_j| >= 1");
    const BlaschkeProduct f = theta.variable_factor(j);
    if (j == i) {
      if (std::abs(wj) < 1e-14) {
        // (M_z^* f)(0) is the linear Maclaurin coefficient.
        acc *= f.taylor(1)[1];
      } else {
        acc *= (f.evaluate(wj) - f.evaluate(0.0)) / wj;
      }
    } else {
      acc *= f.evaluate(wj);
    }
  }
  return acc;
}

}  // namespace hql
