#ifndef HQL_SUBMODULE_SPEC_HPP
#define HQL_SUBMODULE_SPEC_HPP

#include <variant>
#include <vector>

#include "hql/blaschke.hpp"
#include "hql/inner_symbol.hpp"
#include "hql/mpoly.hpp"

namespace hql {

/// theta H^2 for an inner symbol theta (Hardy space only).
struct PrincipalInner {
  InnerSymbol theta;
};

/// Closure of the ideal generated by polynomials; truncated to the span of
/// generator multiples that fit entirely in the grid.
struct PolyIdeal {
  std::vector<MPoly> generators;
};

/// Finite stage of a Rudin quotient module on the bidisc: Psi increasing,
/// Phi decreasing lists of finite Blaschke products (1-indexed levels).
struct RudinFinite {
  std::vector<BlaschkeProduct> psi;
  std::vector<BlaschkeProduct> phi;
};

/// Submodule generated by eta_i(z_i) - eta_{i+1}(z_{i+1}), i = 1..n-1.
struct EtaIdeal {
  std::vector<BlaschkeProduct> eta;
};

/// One tensor slot: either the one-dimensional constant-function factor or a
/// one-variable Beurling quotient with its own cap.
struct TensorFactorSpec {
  bool one_dim = false;
  BlaschkeProduct theta;
  int cap = 0;
};

struct TensorQuotientSpec {
  std::vector<TensorFactorSpec> factors;
};

using SubmoduleSpec =
    std::variant<PrincipalInner, PolyIdeal, RudinFinite, EtaIdeal, TensorQuotientSpec>;

}  // namespace hql

#endif
