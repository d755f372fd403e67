#ifndef HQL_MPOLY_HPP
#define HQL_MPOLY_HPP

#include <map>
#include <optional>
#include <vector>

#include "hql/spaces.hpp"

namespace hql {

/// Sparse multivariable polynomial; terms keyed by MultiIndex in graded-lex
/// order so iteration is deterministic.  Zero coefficients are never stored.
class MPoly {
 public:
  struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
      return MultiIndex::graded_lex_less(a, b);
    }
  };
  using TermMap = std::map<MultiIndex, cplx, GradedLexLess>;

  explicit MPoly(int n) : n_(n) {
    if (n < 1) throw Error("MPoly: needs at least one variable");
  }
  MPoly(int n, std::initializer_list<std::pair<MultiIndex, cplx>> terms);

  static MPoly zero(int n) { return MPoly(n); }
  static MPoly constant(int n, cplx c);
  static MPoly monomial(int n, MultiIndex k, cplx c = 1.0);
  /// z_var as a polynomial in n variables (0-based var).
  static MPoly variable(int n, int var);

  int var_count() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  cplx coeff(const MultiIndex& k) const;
  void add_term(const MultiIndex& k, cplx c);

  /// Max total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Max exponent of variable i across terms.
  int degree_in(int i) const;
  bool is_homogeneous() const;
  /// Common total degree; throws NotHomogeneous otherwise.
  int homogeneous_degree() const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(cplx s) const;

  cplx evaluate(const std::vector<cplx>& w) const;

  /// sqrt(sum |coeff|^2): the Hardy-space norm of a polynomial.
  double hardy_norm() const;

  /// Exponents of each term reversed (z1 <-> z2 <-> ... in mirror order);
  /// for two variables this swaps the variables.
  MPoly swap_variables() const;

  /// Coefficients laid onto a grid (throws GridMismatch when a term does not
  /// fit).
  CoeffVector on_grid(GridPtr grid) const;

 private:
  int n_;
  TermMap terms_;
};

MPoly operator*(cplx s, const MPoly& p);

}  // namespace hql

#endif
