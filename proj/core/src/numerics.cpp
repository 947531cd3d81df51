#include "tleaf/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace tleaf {

RankInfo numerical_rank(const CMatrix& a, const Tolerances& tol) { return numerical_rank(a, -1.0, tol); }

RankInfo numerical_rank(const CMatrix& a, double scale, const Tolerances& tol) {
  RankInfo info;
  if (a.rows() == 0 || a.cols() == 0) return info;
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto& s = svd.singularValues();
  info.singular_values.assign(s.data(), s.data() + s.size());
  const double smax = s.size() > 0 ? s(0) : 0.0;
  info.threshold = tol.rank_rel * std::max(scale < 0.0 ? smax : scale, 1.0);
  const double lo = info.threshold / tol.borderline_factor;
  const double hi = info.threshold * tol.borderline_factor;
  for (double v : info.singular_values) {
    if (v >= info.threshold) ++info.rank;
    if (v > lo && v < hi) info.borderline = true;
  }
  return info;
}

CMatrix orthonormal_range(const CMatrix& a, const Tolerances& tol) {
  if (a.rows() == 0 || a.cols() == 0) return CMatrix(a.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double threshold = tol.rank_rel * std::max(s.size() ? s(0) : 0.0, 1.0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) >= threshold) ++r;
  return svd.matrixU().leftCols(r);
}

std::optional<LuFactors> lu_no_pivot(const CMatrix& a, double pivot_tol) {
  const Eigen::Index n = a.rows();
  const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
  CMatrix u = a;
  CMatrix l = CMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (std::abs(u(k, k)) < pivot_tol * scale) return std::nullopt;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Complex f = u(i, k) / u(k, k);
      l(i, k) = f;
      u.row(i) -= f * u.row(k);
      u(i, k) = 0.0;
    }
  }
  return LuFactors{std::move(l), std::move(u)};
}

std::optional<UlFactors> ul_no_pivot(const CMatrix& a, double pivot_tol) {
  // Reversing rows and columns turns U*L into L'*U'.
  const Eigen::Index n = a.rows();
  CMatrix j = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) j(i, n - 1 - i) = 1.0;
  auto lu = lu_no_pivot(j * a * j, pivot_tol);
  if (!lu) return std::nullopt;
  return UlFactors{j * lu->lower * j, j * lu->upper * j};
}

double off_triangle_norm(const CMatrix& a, bool below) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if ((below && i > j) || (!below && i < j)) m = std::max(m, std::abs(a(i, j)));
    }
  }
  return m;
}

CMatrix block_diagonal(const std::vector<CMatrix>& blocks) {
  Eigen::Index total = 0;
  for (const auto& b : blocks) total += b.rows();
  CMatrix out = CMatrix::Zero(total, total);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

CMatrix signed_antidiagonal(int n) {
  CMatrix j = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) j(i, n - 1 - i) = (i % 2 == 0) ? 1.0 : -1.0;
  return j;
}

}  // namespace tleaf
