#pragma once

#include "tleaf/automorphism.hpp"
#include "tleaf/numerics.hpp"
#include "tleaf/rootdata.hpp"
#include "tleaf/weylgroup.hpp"

namespace tleaf {

/// pi_theta(g), right-trivialized, as a skew matrix over the realization basis.
struct TrivializedBivector {
  CMatrix base_point;
  CMatrix coefficients;
  RankInfo rank;
};

/// Explicit formula. Requires theta to stabilize (B, T).
TrivializedBivector evaluate_bivector(const CMatrix& g, const Automorphism& theta, const MatrixRealization& real,
                                      const Tolerances& tol = {});
/// The same bivector computed as (kappa ^ kappa)(R) from the r-matrix on g + g.
/// Valid for any theta.
CMatrix evaluate_bivector_from_r_matrix(const CMatrix& g, const Automorphism& theta, const MatrixRealization& real);

RankInfo bivector_rank(const TrivializedBivector& pi, const Tolerances& tol = {});

/// g1 g theta(g1)^{-1}.
CMatrix twisted_conjugate(const CMatrix& g1, const CMatrix& g, const Automorphism& theta);
/// x - Ad_g d(theta)(y).
CMatrix kappa(const CMatrix& x, const CMatrix& y, const CMatrix& g, const Automorphism& theta);

/// Coordinates matrix of x -> x - Ad_g d(theta)(x).
CMatrix class_tangent_map(const CMatrix& g, const Automorphism& theta, const MatrixRealization& real);
struct TangentSpace {
  CMatrix basis;  // orthonormal columns, realization coordinates
  RankInfo info;
  int dim() const { return info.rank; }
};
TangentSpace class_tangent_space(const CMatrix& g, const Automorphism& theta, const MatrixRealization& real,
                                 const Tolerances& tol = {});

struct ResidualReport {
  double residual = 0.0;
  bool vacuous = false;  // the bivector itself is numerically zero
};
/// ||(1 - QQ^*) M|| / ||M|| with Q an orthonormal basis of T_g C.
ResidualReport verify_tangency(const TrivializedBivector& pi, const Automorphism& theta,
                               const MatrixRealization& real, const Tolerances& tol = {});
/// ||M(h g theta(h)^{-1}) - Ad_h M(g) Ad_h^T|| / ||M(g)||.
ResidualReport verify_T_equivariance(const CMatrix& g, const CMatrix& h, const Automorphism& theta,
                                     const MatrixRealization& real);

/// Torus part h of g = n h w_dot m with n in N^w, m in N_-. Throws
/// DomainError when g is not in B w B_-.
CMatrix tau_w(const CMatrix& g, const CMatrix& w_dot, double tol = 1e-8);

/// Matrix of x -> (w theta)(x) on diagonal vectors x (the Lie algebra of
/// the diagonal torus of GL(N)).
CMatrix torus_action(const CMatrix& w_dot, const Automorphism& theta);
/// dim of the subtorus T_{w theta} = {h (w theta)(h)}: rk(1 + w theta).
int gstar_torus_dim(const WeylElement& w, const DiagramAut& theta);

enum class OrbitVerdict { Same, Different, Indeterminate };
struct OrbitDecision {
  OrbitVerdict verdict = OrbitVerdict::Different;
  double residual = 0.0;
};
/// Whether tau_w(g1) tau_w(g2)^{-1} lies in T_{w theta}. Searches integer
/// lattice shifts of the logarithm with |k_i| <= 3.
OrbitDecision same_gstar_orbit(const CMatrix& g1, const CMatrix& g2, const WeylElement& w,
                               const Automorphism& theta, double accept = 1e-9, double reject = 1e-6);

/// theta_raw = Ad_{g0} o theta' with theta' stabilizing (B, T); pi_{theta_raw}
/// at g agrees with pi_{theta'} at g g0.
struct NormalizedAutomorphism {
  CMatrix g0;
  Automorphism theta_prime;
};
NormalizedAutomorphism normalize_automorphism(const Automorphism& raw, const MatrixRealization& real);

/// r-matrix on g + g in pair coordinates (first dim entries for the first
/// summand), for the form <x1, x2> - <y1, y2>.
CMatrix standard_r_matrix(const MatrixRealization& real);

}  // namespace tleaf
