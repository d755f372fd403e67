#ifndef HQL_BLASCHKE_HPP
#define HQL_BLASCHKE_HPP

#include <complex>
#include <vector>

#include "hql/errors.hpp"

namespace hql {

using cplx = std::complex<double>;

/// Dense one-variable polynomial, coeffs[j] multiplying z^j.
using Poly1 = std::vector<cplx>;

Poly1 poly1_mul(const Poly1& a, const Poly1& b);
cplx poly1_eval(const Poly1& p, cplx z);
Poly1 poly1_derivative(const Poly1& p);
/// Drop top coefficients below `tol` in magnitude (degree normalization).
Poly1 poly1_trim(Poly1 p, double tol = 0.0);

/// Finite Blaschke product c * prod_j (z - a_j) / (1 - conj(a_j) z), |a_j| < 1,
/// |c| = 1.  The convention for a single factor is b_a(z) = (z-a)/(1-conj(a)z);
/// any unimodular constant is carried separately in `front`.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;  // the constant 1 (empty product)
  explicit BlaschkeProduct(std::vector<cplx> zeros, cplx front = 1.0);

  /// z^m as a Blaschke product (m zeros at the origin).
  static BlaschkeProduct monomial(int m);
  /// Single factor b_a.
  static BlaschkeProduct factor(cplx a);

  int degree() const { return static_cast<int>(zeros_.size()); }
  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx front() const { return front_; }
  bool is_constant() const { return zeros_.empty(); }
  /// True when every zero sits at the origin (the product is c z^m).
  bool is_monomial() const;

  cplx evaluate(cplx z) const;
  /// d/dz of the rational form.
  cplx derivative(cplx z) const;

  /// Numerator c * prod (z - a_j) and denominator prod (1 - conj(a_j) z).
  Poly1 numerator() const;
  Poly1 denominator() const;

  /// First N+1 Maclaurin coefficients by long division of numerator by
  /// denominator.
  Poly1 taylor(int N) const;

  /// Product of two finite Blaschke products (zero multisets concatenate).
  BlaschkeProduct operator*(const BlaschkeProduct& o) const;

  /// Multiset quotient this / o; throws SpecViolation when o's zeros are not
  /// contained in this one's (match tolerance 1e-9).
  BlaschkeProduct divide(const BlaschkeProduct& o) const;
  /// True when o's zero multiset is contained in this one's.
  bool divisible_by(const BlaschkeProduct& o) const;

 private:
  std::vector<cplx> zeros_;
  cplx front_ = 1.0;
};

}  // namespace hql

#endif
