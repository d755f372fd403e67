#include "hql/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "hql/errors.hpp"

namespace hql {

double operator_norm(const Mat& T) {
  if (T.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(T);
  return svd.singularValues()(0);
}

std::vector<double> singular_values(const Mat& T) {
  if (T.size() == 0) return {};
  Eigen::JacobiSVD<Mat> svd(T);
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

void canonicalize_column_phases(Mat& F) {
  for (Eigen::Index c = 0; c < F.cols(); ++c) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < F.rows(); ++r) {
      const double a = std::abs(F(r, c));
      if (a > best + 1e-300 && a > best) {
        best = a;
        imax = r;
      }
    }
    if (best <= 0.0) continue;
    const std::complex<double> ph = F(imax, c) / best;
    F.col(c) /= ph;
  }
}

RangeSplit orthonormal_split(const Mat& F, double rel_tol) {
  const Eigen::Index n = F.rows();
  RangeSplit out;
  if (F.cols() == 0) {
    out.range = Mat::Zero(n, 0);
    out.complement = Mat::Identity(n, n);
    out.rank = 0;
    return out;
  }

  Eigen::ColPivHouseholderQR<Mat> qr(F);
  const auto& R = qr.matrixR();
  const double top = std::abs(R(0, 0));
  const Eigen::Index kmax = std::min(F.rows(), F.cols());
  int rank = 0;
  bool ambiguous = false;
  for (Eigen::Index k = 0; k < kmax; ++k) {
    const double d = std::abs(R(k, k));
    if (d > rel_tol * top) {
      ++rank;
      // A pivot hovering within a decade of the cut is a sign the QR pivots
      // are not separating scales; defer to the SVD below.
      if (d < 10.0 * rel_tol * top) ambiguous = true;
    } else if (d > 0.1 * rel_tol * top) {
      ambiguous = true;
    }
  }

  if (!ambiguous) {
    Mat Q = qr.householderQ() * Mat::Identity(n, n);
    out.range = Q.leftCols(rank);
    out.complement = Q.rightCols(n - rank);
    out.rank = rank;
  } else {
    Eigen::JacobiSVD<Mat> svd(F, Eigen::ComputeFullU);
    const auto& s = svd.singularValues();
    const double stop = s.size() ? s(0) : 0.0;
    rank = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k)
      if (s(k) > rel_tol * stop) ++rank;
    out.range = svd.matrixU().leftCols(rank);
    out.complement = svd.matrixU().rightCols(n - rank);
    out.rank = rank;
  }
  canonicalize_column_phases(out.range);
  canonicalize_column_phases(out.complement);
  return out;
}

SpectralSplit hermitian_split(const Mat& H, double threshold) {
  if (H.rows() != H.cols()) throw DimensionMismatch("hermitian_split: square matrix required");
  Eigen::SelfAdjointEigenSolver<Mat> es(H);
  if (es.info() != Eigen::Success) throw ComputeError("hermitian_split: eigensolver failed");
  SpectralSplit out;
  const auto& vals = es.eigenvalues();
  const Mat& vecs = es.eigenvectors();
  std::vector<Eigen::Index> lo, hi;
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    (vals(i) < threshold ? lo : hi).push_back(i);
  out.low = Mat(H.rows(), static_cast<Eigen::Index>(lo.size()));
  out.high = Mat(H.rows(), static_cast<Eigen::Index>(hi.size()));
  for (size_t j = 0; j < lo.size(); ++j) {
    out.low.col(static_cast<Eigen::Index>(j)) = vecs.col(lo[j]);
    out.low_vals.push_back(vals(lo[j]));
  }
  for (size_t j = 0; j < hi.size(); ++j) {
    out.high.col(static_cast<Eigen::Index>(j)) = vecs.col(hi[j]);
    out.high_vals.push_back(vals(hi[j]));
  }
  canonicalize_column_phases(out.low);
  canonicalize_column_phases(out.high);
  return out;
}

double orthonormality_residual(const Mat& F) {
  if (F.cols() == 0) return 0.0;
  Mat G = F.adjoint() * F;
  G -= Mat::Identity(F.cols(), F.cols());
  return G.cwiseAbs().maxCoeff();
}

}  // namespace hql
