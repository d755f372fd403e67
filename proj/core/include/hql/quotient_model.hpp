#ifndef HQL_QUOTIENT_MODEL_HPP
#define HQL_QUOTIENT_MODEL_HPP

#include <optional>
#include <vector>

#include "hql/linalg.hpp"
#include "hql/spaces.hpp"
#include "hql/submodule_spec.hpp"

namespace hql {

/// Orthonormal frames for a truncated submodule and its complement inside a
/// truncation grid, plus the compressed coordinate multipliers on the
/// complement.  Frames are stored in orthonormal coordinates (coefficients
/// scaled by monomial norms), so adjoints are plain conjugate transposes.
///
/// Immutable once built; the coordinate-multiplier cache is filled during
/// construction, so concurrent reads need no locking.
struct QuotientModel {
  GridPtr grid;
  DiagonalSpace space = DiagonalSpace::hardy(1);
  Mat subFrame;
  Mat quotFrame;
  int trustDegree = 0;

  /// Compressed coordinates P_Q M_{z_i} |_Q in quotFrame coordinates.
  std::vector<Mat> coordinateOps;

  /// Per-variable sub/quot column splits when the submodule tensorizes
  /// (principal inner symbols, tensor quotients).
  struct VarSplit {
    Mat sub;
    Mat quot;
  };
  std::optional<std::vector<VarSplit>> varSplits;

  /// Factor models for tensor-built quotients.
  std::vector<QuotientModel> tensorFactors;

  /// Total degree of each quot column when the build is graded
  /// (degree-sliced homogeneous ideals); empty otherwise.
  std::vector<int> quotColumnDegree;

  int sub_dim() const { return static_cast<int>(subFrame.cols()); }
  int quot_dim() const { return static_cast<int>(quotFrame.cols()); }
};

/// Builds the truncated submodule/quotient pair for a spec.  Throws
/// GridTooSmall when the trust degree would drop below 1 and DegenerateSpec
/// for empty or trivial data.
QuotientModel build_submodule(const SubmoduleSpec& spec, GridPtr grid, const DiagonalSpace& space);

/// The one-dimensional constant-function factor (cap-0 one-variable grid).
QuotientModel one_dim_factor();

/// Tensor product of one-variable factors; compressed shifts factorize.
/// Throws DimensionOverflow past `basis_limit`.
QuotientModel tensor_quotient(std::vector<QuotientModel> factors, long long basis_limit = 1 << 20);

/// Cached matrix of P_Q M_{z_i} |_Q on quotFrame coordinates.
const Mat& compressed_coordinate(const QuotientModel& model, int i);

/// Compression P_Q M_sigma |_Q of a (Taylor-truncated) multiplier.
Mat compressed_multiplier(const QuotientModel& model, const InnerSymbol& sigma);
Mat compressed_multiplier(const QuotientModel& model, const MPoly& sigma);

/// q(C_{z_1}, ..., C_{z_n}) as a polynomial in the cached compressed
/// coordinates.
Mat mpoly_apply(const QuotientModel& model, const MPoly& q);

enum class Which { Sub, Quot };

/// Orthogonal projection onto the chosen frame, in the space inner product.
CoeffVector projector_apply(const QuotientModel& model, Which which, const CoeffVector& v);

/// Coordinates of P_Quot v in the quot frame.
Vec quot_coords(const QuotientModel& model, const CoeffVector& v);

/// M_{z_i} on the grid (overflow dropped), acting on a block of columns in
/// orthonormal coordinates.
Mat raise_columns(const TruncationGrid& grid, const DiagonalSpace& space, const Mat& X, int i);

/// Truncated product of coefficient tensors (terms beyond the caps dropped).
CoeffVector multiply_truncated(const CoeffVector& a, const CoeffVector& b);

/// Orthonormal completion of an orthonormal column block.
Mat orthonormal_complement(const Mat& F);

/// Orthonormal basis (in orthonormal coordinates) of the truncated model
/// space K_B = H^2 ominus B H^2 on a one-variable grid of the given cap:
/// the nonzero eigenspace of the exact finite section of the projection.
Mat model_space_frame(const BlaschkeProduct& B, int cap);

}  // namespace hql

#endif
