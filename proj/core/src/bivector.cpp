#include "tleaf/bivector.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "tleaf/cartanops.hpp"
#include "tleaf/errors.hpp"
#include "tleaf/sampling.hpp"

namespace tleaf {

namespace {

void add_wedge(CMatrix& m, const CVector& u, const CVector& v, Complex c = 1.0) {
  m += c * (u * v.transpose() - v * u.transpose());
}

void require_in_group(const CMatrix& g, const MatrixRealization& real) {
  if (g.rows() != real.matrix_size() || g.cols() != real.matrix_size())
    throw DomainError("point has the wrong size for this realization");
  const int nb = real.block_size();
  for (int c = 0; c < real.copies(); ++c) {
    const Complex det = g.block(c * nb, c * nb, nb, nb).determinant();
    if (std::abs(det) < 1e-12) throw DomainError("point is not invertible");
    if (std::abs(det - 1.0) > 1e-9) throw DomainError("point is not in SL(N): det = " + std::to_string(det.real()));
  }
}

// Ad_g o d(theta) in coordinates.
CMatrix twisted_adjoint(const CMatrix& g, const Automorphism& theta, const MatrixRealization& real) {
  return real.adjoint(g) * theta.algebra_matrix();
}

}  // namespace

TrivializedBivector evaluate_bivector(const CMatrix& g, const Automorphism& theta, const MatrixRealization& real,
                                      const Tolerances& tol) {
  require_in_group(g, real);
  if (!theta.stabilizes_borel_torus())
    throw UnsupportedError("explicit formula needs theta stabilizing (B, T); normalize first");
  const int d = real.dim();
  const CMatrix ad = real.adjoint(g);
  const CMatrix k = ad * theta.algebra_matrix();
  const CMatrix id = CMatrix::Identity(d, d);

  CMatrix m = CMatrix::Zero(d, d);
  for (int i = 0; i < real.cartan_dim(); ++i) add_wedge(m, k.col(real.y_index(i)), id.col(real.y_index(i)));
  for (int a = 0; a < real.num_positive(); ++a) {
    const int p = real.pos_index(a);
    const int q = real.neg_index(a);
    add_wedge(m, id.col(p), k.col(q), -1.0);
    add_wedge(m, id.col(p), id.col(q), 0.5);
    add_wedge(m, ad.col(p), ad.col(q), 0.5);
  }
  TrivializedBivector out{g, m, {}};
  out.rank = bivector_rank(out, tol);
  return out;
}

CMatrix standard_r_matrix(const MatrixRealization& real) {
  const int d = real.dim();
  CMatrix r = CMatrix::Zero(2 * d, 2 * d);
  auto e = [&](int first, int second, Complex a, Complex b) {
    CVector v = CVector::Zero(2 * d);
    if (first >= 0) v(first) = a;
    if (second >= 0) v(d + second) = b;
    return v;
  };
  for (int i = 0; i < real.cartan_dim(); ++i) {
    const int y = real.y_index(i);
    add_wedge(r, e(y, y, 1.0, -1.0), e(y, y, 1.0, 1.0), 0.5);
  }
  for (int a = 0; a < real.num_positive(); ++a) {
    const int p = real.pos_index(a);
    const int q = real.neg_index(a);
    add_wedge(r, e(-1, q, 0.0, -1.0), e(p, p, 1.0, 1.0), 0.5);
    add_wedge(r, e(p, -1, 1.0, 0.0), e(q, q, 1.0, 1.0), 0.5);
  }
  return r;
}

CMatrix evaluate_bivector_from_r_matrix(const CMatrix& g, const Automorphism& theta, const MatrixRealization& real) {
  require_in_group(g, real);
  const int d = real.dim();
  CMatrix kap(d, 2 * d);
  kap.leftCols(d) = CMatrix::Identity(d, d);
  kap.rightCols(d) = -twisted_adjoint(g, theta, real);
  return kap * standard_r_matrix(real) * kap.transpose();
}

RankInfo bivector_rank(const TrivializedBivector& pi, const Tolerances& tol) {
  RankInfo info = numerical_rank(pi.coefficients, tol);
  if (info.rank % 2 != 0) info.borderline = true;  // skew matrices have even rank
  return info;
}

CMatrix twisted_conjugate(const CMatrix& g1, const CMatrix& g, const Automorphism& theta) {
  return g1 * g * theta.apply_group(g1).inverse();
}

CMatrix kappa(const CMatrix& x, const CMatrix& y, const CMatrix& g, const Automorphism& theta) {
  return x - g * theta.apply_algebra(y) * g.inverse();
}

CMatrix class_tangent_map(const CMatrix& g, const Automorphism& theta, const MatrixRealization& real) {
  require_in_group(g, real);
  return CMatrix::Identity(real.dim(), real.dim()) - twisted_adjoint(g, theta, real);
}

TangentSpace class_tangent_space(const CMatrix& g, const Automorphism& theta, const MatrixRealization& real,
                                 const Tolerances& tol) {
  const CMatrix map = class_tangent_map(g, theta, real);
  return {orthonormal_range(map, tol), numerical_rank(map, tol)};
}

ResidualReport verify_tangency(const TrivializedBivector& pi, const Automorphism& theta,
                               const MatrixRealization& real, const Tolerances& tol) {
  const double norm = pi.coefficients.norm();
  if (norm < 1e-12) return {0.0, true};
  const TangentSpace t = class_tangent_space(pi.base_point, theta, real, tol);
  const CMatrix outside = pi.coefficients - t.basis * (t.basis.adjoint() * pi.coefficients);
  return {outside.norm() / norm, false};
}

ResidualReport verify_T_equivariance(const CMatrix& g, const CMatrix& h, const Automorphism& theta,
                                     const MatrixRealization& real) {
  const CMatrix m = evaluate_bivector(g, theta, real).coefficients;
  const double norm = m.norm();
  const CMatrix moved = evaluate_bivector(twisted_conjugate(h, g, theta), theta, real).coefficients;
  const CMatrix a = real.adjoint(h);
  const double diff = (moved - a * m * a.transpose()).norm();
  if (norm < 1e-12) return {diff, true};
  return {diff / norm, false};
}

CMatrix tau_w(const CMatrix& g, const CMatrix& w_dot, double tol) {
  const CMatrix w_inv = w_dot.inverse();
  const auto ul = ul_no_pivot(w_inv * g);
  if (!ul) throw DomainError("point is not in the Bruhat cell of the given representative");
  const CMatrix n = w_dot * ul->upper * w_inv;
  const double scale = std::max(1.0, n.cwiseAbs().maxCoeff());
  if (off_triangle_norm(n, true) > tol * scale)
    throw DomainError("point is not in the Bruhat cell of the given representative");
  const CMatrix d = ul->lower.diagonal().asDiagonal();
  return w_dot * d * w_inv;
}

CMatrix torus_action(const CMatrix& w_dot, const Automorphism& theta) {
  const int size = static_cast<int>(w_dot.rows());
  const CMatrix w_inv = w_dot.inverse();
  CMatrix out(size, size);
  for (int j = 0; j < size; ++j) {
    CMatrix e = CMatrix::Zero(size, size);
    e(j, j) = 1.0;
    out.col(j) = (w_dot * theta.apply_algebra(e) * w_inv).diagonal();
  }
  return out;
}

int gstar_torus_dim(const WeylElement& w, const DiagramAut& theta) {
  const auto a = w_theta(w, theta);
  return rank(CartanOperator::identity(a.size()) + a);
}

OrbitDecision same_gstar_orbit(const CMatrix& g1, const CMatrix& g2, const WeylElement& w,
                               const Automorphism& theta, double accept, double reject) {
  const CMatrix w_dot = representative(w);
  const CVector t = (tau_w(g1, w_dot).diagonal().array() / tau_w(g2, w_dot).diagonal().array()).matrix();
  const int size = static_cast<int>(t.size());

  // Unknown xi in C^N with sum 0; equations (1 + w theta) xi = Log t + 2 pi i k.
  CMatrix a = CMatrix::Zero(size + 1, size);
  a.topRows(size) = CMatrix::Identity(size, size) + torus_action(w_dot, theta);
  a.row(size).setOnes();
  const CMatrix q = orthonormal_range(a);
  const CMatrix proj = CMatrix::Identity(size + 1, size + 1) - q * q.adjoint();

  CVector base = CVector::Zero(size + 1);
  for (int i = 0; i < size; ++i) base(i) = std::log(t(i));
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);

  constexpr int kBound = 3;
  std::vector<int> k(size, -kBound);
  double best = std::numeric_limits<double>::infinity();
  for (;;) {
    CVector b = base;
    for (int i = 0; i < size; ++i) b(i) += two_pi_i * static_cast<double>(k[i]);
    best = std::min(best, (proj * b).norm());
    int pos = 0;
    while (pos < size && k[pos] == kBound) k[pos++] = -kBound;
    if (pos == size) break;
    ++k[pos];
  }
  OrbitDecision out;
  out.residual = best;
  out.verdict = best < accept ? OrbitVerdict::Same : best > reject ? OrbitVerdict::Different : OrbitVerdict::Indeterminate;
  return out;
}

NormalizedAutomorphism normalize_automorphism(const Automorphism& raw, const MatrixRealization& real) {
  const int size = real.matrix_size();
  CMatrix g0 = raw.is_composed() ? raw.g0() : CMatrix::Identity(size, size);
  Automorphism base = [&] {
    switch (raw.base()) {
      case Automorphism::Base::Outer:
        return Automorphism::outer(real);
      case Automorphism::Base::CyclicShift:
        return Automorphism::cyclic_shift(real);
      case Automorphism::Base::Identity:
        break;
    }
    return Automorphism::identity(real);
  }();
  if (!base.stabilizes_borel_torus()) throw UnsupportedError("base automorphism does not stabilize (B, T)");
  return {g0, base};
}

}  // namespace tleaf
