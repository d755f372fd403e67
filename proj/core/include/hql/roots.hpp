#ifndef HQL_ROOTS_HPP
#define HQL_ROOTS_HPP

#include <vector>

#include "hql/blaschke.hpp"

namespace hql {

/// All complex roots of a dense one-variable polynomial (coeffs[j] * z^j),
/// via the balanced companion matrix, polished with a Newton step.  Roots are
/// sorted by (modulus, argument in [0, 2pi)).  Throws RootfindingFailure when
/// the leading coefficient vanishes or the eigensolver fails.
std::vector<cplx> poly_roots(const Poly1& coeffs);

struct FibreRoot {
  cplx z;
  cplx derivative;  // eta'(z)
};

/// Solutions of eta(z) = lambda for a finite Blaschke product eta, i.e. roots
/// of numerator - lambda * denominator.  Residuals |eta(z) - lambda| are
/// polished below 1e-9 (RootfindingFailure otherwise).  When
/// `reject_critical` is set, a root with |eta'(z)| < 1e-8 throws
/// CriticalValue.
std::vector<FibreRoot> solve_level_set(const BlaschkeProduct& eta, cplx lambda,
                                       bool reject_critical = true);

/// Critical values of eta: images of the zeros of eta' that lie in the closed
/// disc (values |.| <= 1 are the ones quadrature can collide with).
std::vector<cplx> critical_values(const BlaschkeProduct& eta);

}  // namespace hql

#endif
