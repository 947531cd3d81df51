#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace tleaf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Thresholds shared by every numerical decision in the library.
///
/// A singular value counts as zero iff it lies below
/// `rank_rel * max(sigma_max, 1)`. A rank decision is flagged borderline
/// when some singular value falls within a factor `borderline_factor`
/// on either side of that threshold.
struct Tolerances {
  double rank_rel = 1e-8;
  double residual = 1e-8;
  double equivariance = 1e-9;
  double borderline_factor = 10.0;
  double eigen_cluster = 1e-7;
  double determinant = 1e-10;
};

struct RankInfo {
  int rank = 0;
  double threshold = 0.0;
  bool borderline = false;
  std::vector<double> singular_values;  // descending
};

/// Numerical rank via a full SVD.
RankInfo numerical_rank(const CMatrix& a, const Tolerances& tol = {});
/// Same, with sigma_max replaced by an external scale (e.g. the norm of the
/// matrix a submatrix was cut from). A negative scale means sigma_max.
RankInfo numerical_rank(const CMatrix& a, double scale, const Tolerances& tol = {});

/// Orthonormal basis (columns) of the column space of `a`, using the same
/// rank decision as numerical_rank.
CMatrix orthonormal_range(const CMatrix& a, const Tolerances& tol = {});

/// Doolittle factorisation a = l * u without pivoting (l unit lower).
/// Returns nullopt when a pivot falls below `pivot_tol * ||a||`.
struct LuFactors {
  CMatrix lower;
  CMatrix upper;
};
std::optional<LuFactors> lu_no_pivot(const CMatrix& a, double pivot_tol = 1e-12);

/// a = u * l with u unit upper triangular and l lower triangular.
struct UlFactors {
  CMatrix upper;
  CMatrix lower;
};
std::optional<UlFactors> ul_no_pivot(const CMatrix& a, double pivot_tol = 1e-12);

/// Largest modulus of an entry strictly below (lower=true) or above the diagonal.
double off_triangle_norm(const CMatrix& a, bool below);

/// Block-diagonal assembly of square blocks.
CMatrix block_diagonal(const std::vector<CMatrix>& blocks);

/// Antidiagonal matrix with entries (-1)^(i) on row i (0-based), i.e. the
/// fixed signed J0 of the outer automorphism.
CMatrix signed_antidiagonal(int n);

}  // namespace tleaf
