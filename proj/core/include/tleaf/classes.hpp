#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tleaf/automorphism.hpp"
#include "tleaf/numerics.hpp"
#include "tleaf/rootdata.hpp"
#include "tleaf/weylgroup.hpp"

namespace tleaf {

struct EigenCluster {
  Complex value;
  int multiplicity = 0;
};

/// Twisted conjugacy class data computed from a representative.
struct ClassDescriptor {
  CMatrix representative;
  int n = 0;  // G = SL(n+1)
  int dim_C = 0;
  int r_C = 0;
  int l_C = 0;
  std::optional<WeylElement> m_C;  // unset for genuinely outer theta
  std::optional<bool> spherical;   // needs m_C
  std::vector<EigenCluster> eigen_summary;
  bool borderline = false;
};

/// Eigenvalue clusters (tolerance `eigen_cluster`). Throws
/// NumericalQualityError when some eigenpair residual exceeds 1e-6.
std::vector<EigenCluster> eigen_clusters(const CMatrix& g, const Tolerances& tol = {});

/// r(C) = min_c rank(g - cI), attained at an eigenvalue.
int min_rank_shift(const CMatrix& g, const std::vector<EigenCluster>& clusters, const Tolerances& tol = {});

ClassDescriptor analyze_class(const CMatrix& g, const Automorphism& theta, const MatrixRealization& real,
                              const WeylGroup& group, const Tolerances& tol = {});

/// dim C = l(w) + rk(1 - w theta).
bool spherical_criterion(int dim_C, const WeylElement& m, const DiagramAut& theta);

/// The u with x in B u B, recovered from the southwest rank pattern.
/// Throws NumericalQualityError when the pattern is inconsistent.
const WeylElement& bruhat_bb_cell_of(const CMatrix& x, const WeylGroup& group, const Tolerances& tol = {});
/// The w with g in B w B_-.
const WeylElement& bruhat_cell_of(const CMatrix& g, const WeylGroup& group, const Tolerances& tol = {});
/// The v with k in B_- v B_-.
const WeylElement& bruhat_lower_cell_of(const CMatrix& k, const WeylGroup& group, const Tolerances& tol = {});

/// Whether g and k are conjugate, by comparing eigenvalue clusters and the
/// ranks of (g - cI)^j.
bool same_conjugacy_class(const CMatrix& g, const CMatrix& k, const Tolerances& tol = {});

struct LeafDescriptor {
  WeylElement w;
  int intersection_dim = 0;  // dim C - l(w)
  int leaf_dim = 0;          // dim C - l(w) - dim ker(1 + w theta)
};

/// One row per w <= m_C. Throws UnsupportedError when m_C is unset.
std::vector<LeafDescriptor> leaf_table(const ClassDescriptor& c, const DiagramAut& theta, const WeylGroup& group);

/// dim C - L_theta(m_C).
int min_rank_in_class(const ClassDescriptor& c, const DiagramAut& theta);

struct ZeroLocusPoint {
  int n = 0;
  int l = 0;
  Complex lambda;
  Complex lambda_prime;
  std::vector<Complex> xs;
  CMatrix g;
};

/// Block matrix with ((lambda + lambda') I_l, lambda' X J_l; -lambda X' J_l, 0)
/// around a middle block lambda I_{n+1-2l}. lambda' has multiplicity l.
ZeroLocusPoint zero_locus_point(int n, int l, Complex lambda, Complex lambda_prime, const std::vector<Complex>& xs);

struct SphericalFamily {
  enum class Kind { Semisimple, Unipotent };
  Kind kind = Kind::Semisimple;
  int n = 0;
  int l = 0;
  int predicted_dim = 0;  // l(m_l) + rk(1 - m_l)
  std::string name() const;
};
/// Semisimple families for 1 <= l <= (n+1)/2 and unipotent families for
/// 0 <= l <= (n+1)/2 (l = 0 is the central class).
std::vector<SphericalFamily> spherical_families(int n, const WeylGroup& group);

/// A representative of a family. Semisimple: lambda has multiplicity n+1-l and
/// lambda' is fixed by the determinant. Unipotent: needs lambda^(n+1) = 1.
CMatrix family_representative(const SphericalFamily& f, Complex lambda);

}  // namespace tleaf
