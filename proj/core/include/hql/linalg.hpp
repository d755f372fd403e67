#ifndef HQL_LINALG_HPP
#define HQL_LINALG_HPP

#include <Eigen/Dense>
#include <vector>

namespace hql {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Largest singular value.
double operator_norm(const Mat& T);

/// All singular values, descending.
std::vector<double> singular_values(const Mat& T);

/// Multiply each column by a unimodular scalar making its largest-magnitude
/// entry (first such, scanning down) real and positive.  Keeps frames
/// orthonormal while making them reproducible across runs and backends.
void canonicalize_column_phases(Mat& F);

struct RangeSplit {
  Mat range;       // orthonormal basis of col span(F), rank columns
  Mat complement;  // orthonormal completion, rows(F) - rank columns
  int rank = 0;
};

/// Rank-revealing orthonormal basis of the column span plus its orthonormal
/// complement.  Column-pivoted Householder QR with relative threshold
/// `rel_tol`; falls back to an SVD split when the pivot magnitudes decay too
/// gradually to call the rank cleanly.
RangeSplit orthonormal_split(const Mat& F, double rel_tol = 1e-10);

struct SpectralSplit {
  Mat low;                       // eigenvectors with eigenvalue <  threshold
  Mat high;                      // eigenvectors with eigenvalue >= threshold
  std::vector<double> low_vals;  // matching eigenvalues, ascending
  std::vector<double> high_vals;
};

/// Eigen-decomposition of a Hermitian matrix split at `threshold`.
SpectralSplit hermitian_split(const Mat& H, double threshold);

/// Frobenius-orthonormality residual max |F^H F - I|.
double orthonormality_residual(const Mat& F);

}  // namespace hql

#endif
