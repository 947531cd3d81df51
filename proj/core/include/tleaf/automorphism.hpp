#pragma once

#include <string>
#include <vector>

#include "tleaf/cartanops.hpp"
#include "tleaf/numerics.hpp"
#include "tleaf/rootdata.hpp"
#include "tleaf/weylgroup.hpp"

namespace tleaf {

/// Automorphism of SL(N)^copies at three levels: the group map, its
/// differential on the Lie algebra, and (when it stabilizes B and T) the
/// induced permutation of simple roots.
class Automorphism {
 public:
  enum class Base { Identity, Outer, CyclicShift };

  static Automorphism identity(const MatrixRealization& real);
  /// g -> J0 (g^T)^{-1} J0^{-1}. Single factor only.
  static Automorphism outer(const MatrixRealization& real);
  /// (g_1, ..., g_n) -> (g_2, ..., g_n, g_1) on the block-diagonal product.
  static Automorphism cyclic_shift(const MatrixRealization& real);
  /// Ad_{g0} o base. Nested compositions are flattened.
  static Automorphism composed(const MatrixRealization& real, const CMatrix& g0, const Automorphism& base);

  Base base() const { return base_; }
  bool is_composed() const { return composed_; }
  const CMatrix& g0() const { return g0_; }
  std::string description() const;

  CMatrix apply_group(const CMatrix& g) const;
  CMatrix apply_algebra(const CMatrix& x) const;
  /// Coordinates matrix of d(theta) over the realization basis.
  const CMatrix& algebra_matrix() const { return algebra_; }

  /// theta(B) = B and theta(T) = T, checked on the basis.
  bool stabilizes_borel_torus() const { return stabilizes_; }
  /// d(theta) is the identity map (e.g. the outer automorphism of SL(2)).
  bool acts_as_identity() const { return identity_like_; }
  /// Simple-root permutation. Throws UnsupportedError if theta does not stabilize (B, T).
  const DiagramAut& diagram() const;
  /// theta(E_{alpha_i}) = scale_i E_{alpha_{perm(i)}}.
  const std::vector<Complex>& root_scales() const { return scales_; }
  /// theta on h^* in the simple-root basis.
  CartanOperator cartan() const { return theta_operator(diagram()); }
  /// d(theta) on the simple coroots, in the simple-coroot basis (numerical).
  CMatrix coroot_matrix() const { return coroot_; }

 private:
  Automorphism() = default;
  void finish(const MatrixRealization& real);
  CMatrix apply_base_group(const CMatrix& g) const;
  CMatrix apply_base_algebra(const CMatrix& x) const;

  Base base_ = Base::Identity;
  bool composed_ = false;
  int block_ = 0;
  int copies_ = 1;
  CMatrix g0_;
  CMatrix g0_inv_;
  CMatrix j0_;
  CMatrix algebra_;
  CMatrix coroot_;
  bool stabilizes_ = false;
  bool identity_like_ = false;
  DiagramAut diagram_;
  std::vector<Complex> scales_;
};

}  // namespace tleaf
