#ifndef HQL_ERRORS_HPP
#define HQL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hql {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define HQL_DEFINE_ERROR(Name)                                      \
  struct Name : Error {                                             \
    explicit Name(const std::string& what = #Name) : Error(what) {} \
  }

HQL_DEFINE_ERROR(PointOnBoundary);
HQL_DEFINE_ERROR(GridMismatch);
HQL_DEFINE_ERROR(GridTooSmall);
HQL_DEFINE_ERROR(DegenerateSpec);
HQL_DEFINE_ERROR(DimensionOverflow);
HQL_DEFINE_ERROR(DimensionMismatch);
HQL_DEFINE_ERROR(VariableCountMismatch);
HQL_DEFINE_ERROR(SymbolIndependentOfVariable);
HQL_DEFINE_ERROR(SpecViolation);
HQL_DEFINE_ERROR(NotHomogeneous);
HQL_DEFINE_ERROR(ZeroPolynomial);
HQL_DEFINE_ERROR(NotApplicable);
HQL_DEFINE_ERROR(ExcludedForm);
HQL_DEFINE_ERROR(NotEssentiallyNormal);
HQL_DEFINE_ERROR(UnimodularAlpha);
HQL_DEFINE_ERROR(IllConditioned);
HQL_DEFINE_ERROR(CriticalValue);
HQL_DEFINE_ERROR(RootfindingFailure);
HQL_DEFINE_ERROR(TruncationInconclusive);
HQL_DEFINE_ERROR(ConfigInvalid);
HQL_DEFINE_ERROR(ComputeError);

#undef HQL_DEFINE_ERROR

}  // namespace hql

#endif
