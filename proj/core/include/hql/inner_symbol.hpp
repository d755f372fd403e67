#ifndef HQL_INNER_SYMBOL_HPP
#define HQL_INNER_SYMBOL_HPP

#include <optional>
#include <vector>

#include "hql/blaschke.hpp"
#include "hql/spaces.hpp"

namespace hql {

/// Inner function on the polydisc of product form
///   theta(z) = c * z^monomial * prod_i B_i(z_i),
/// a monomial times one finite Blaschke product per variable.
class InnerSymbol {
 public:
  InnerSymbol(int n, MultiIndex monomial, std::vector<std::optional<BlaschkeProduct>> per_variable,
              cplx front = 1.0);

  /// Monomial z^k (front constant optional).
  static InnerSymbol monomial(int n, MultiIndex k, cplx front = 1.0);
  /// B acting in variable `var` (0-based) on an n-variable polydisc.
  static InnerSymbol one_variable(int n, int var, BlaschkeProduct B, cplx front = 1.0);

  int var_count() const { return n_; }
  const MultiIndex& monomial_factor() const { return monomial_; }
  cplx front() const { return front_; }
  const std::optional<BlaschkeProduct>& blaschke(int i) const {
    return per_variable_[static_cast<size_t>(i)];
  }

  /// Combined one-variable factor z^{m_i} B_i for variable i (front constants
  /// excluded; they are global).
  BlaschkeProduct variable_factor(int i) const;

  /// True when the value depends on variable i.
  bool depends_on(int i) const { return variable_factor(i).degree() > 0; }
  /// Total number of elementary factors, sum_i deg(variable_factor(i)).
  int total_degree() const;

  InnerSymbol operator*(const InnerSymbol& o) const;

 private:
  int n_;
  MultiIndex monomial_;
  std::vector<std::optional<BlaschkeProduct>> per_variable_;
  cplx front_;
};

/// theta(w); throws PointOnBoundary when any |w_i| >= 1.
cplx symbol_eval(const InnerSymbol& theta, const std::vector<cplx>& w);

/// Maclaurin coefficients of theta truncated to the grid: the tensor product
/// of the per-variable one-variable truncations.
CoeffVector symbol_taylor(const InnerSymbol& theta, GridPtr grid);

/// Coefficient-level backward shift: output at k equals input at k + e_i.
/// This is M_{z_i}^* acting on a Taylor tensor in the Hardy pairing; entries
/// whose preimage falls off the grid are set to zero.
CoeffVector backward_shift_symbol(const CoeffVector& coeffs, int i);

/// (M_{z_i}^* theta)(w) evaluated exactly through the rational one-variable
/// form: the factor in variable i is replaced by its difference quotient
/// (f(w_i) - f(0)) / w_i (f'(0) at w_i = 0).
cplx backward_shift_eval(const InnerSymbol& theta, int i, const std::vector<cplx>& w);

}  // namespace hql

#endif
