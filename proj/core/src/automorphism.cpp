#include "tleaf/automorphism.hpp"

#include <cmath>

#include "tleaf/errors.hpp"

namespace tleaf {

namespace {

constexpr double kStructureTol = 1e-10;

CMatrix inverse_of(const CMatrix& g) {
  Eigen::PartialPivLU<CMatrix> lu(g);
  if (std::abs(lu.determinant()) < 1e-14) throw DomainError("matrix is not invertible");
  return lu.inverse();
}

}  // namespace

Automorphism Automorphism::identity(const MatrixRealization& real) {
  Automorphism a;
  a.base_ = Base::Identity;
  a.finish(real);
  return a;
}

Automorphism Automorphism::outer(const MatrixRealization& real) {
  if (real.copies() != 1) throw ConfigurationError("outer automorphism is defined on a single factor");
  Automorphism a;
  a.base_ = Base::Outer;
  a.finish(real);
  return a;
}

Automorphism Automorphism::cyclic_shift(const MatrixRealization& real) {
  if (real.copies() < 2) throw ConfigurationError("cyclic shift needs at least two factors");
  Automorphism a;
  a.base_ = Base::CyclicShift;
  a.finish(real);
  return a;
}

Automorphism Automorphism::composed(const MatrixRealization& real, const CMatrix& g0, const Automorphism& base) {
  if (g0.rows() != real.matrix_size() || g0.cols() != real.matrix_size())
    throw DomainError("g0 has the wrong size");
  Automorphism a;
  a.base_ = base.base_;
  a.composed_ = true;
  a.g0_ = base.composed_ ? CMatrix(g0 * base.g0_) : g0;
  a.finish(real);
  return a;
}

void Automorphism::finish(const MatrixRealization& real) {
  block_ = real.block_size();
  copies_ = real.copies();
  const int size = real.matrix_size();
  if (!composed_) g0_ = CMatrix::Identity(size, size);
  g0_inv_ = inverse_of(g0_);
  if (base_ == Base::Outer) j0_ = signed_antidiagonal(size);

  algebra_ = real.linear_map([&](const CMatrix& x) { return apply_algebra(x); });
  const CMatrix gram = real.gram();
  const double form_err = (algebra_.transpose() * gram * algebra_ - gram).cwiseAbs().maxCoeff();
  if (form_err > 1e-8) throw ConfigurationError("automorphism does not preserve the trace form");
  identity_like_ = (algebra_ - CMatrix::Identity(real.dim(), real.dim())).cwiseAbs().maxCoeff() < kStructureTol;

  const int k = real.cartan_dim();
  const int np = real.num_positive();
  const double scale = std::max(1.0, algebra_.cwiseAbs().maxCoeff());
  stabilizes_ = true;
  for (int b = 0; b < real.dim() && stabilizes_; ++b) {
    const bool cartan_col = b < k;
    const bool pos_col = b >= k && b < k + np;
    for (int r = 0; r < real.dim(); ++r) {
      const bool ok = cartan_col ? r < k : pos_col ? (r >= k && r < k + np) : r >= k + np;
      if (!ok && std::abs(algebra_(r, b)) > kStructureTol * scale) {
        stabilizes_ = false;
        break;
      }
    }
  }

  diagram_ = DiagramAut{};
  scales_.clear();
  if (stabilizes_) {
    const int rank = real.root_datum().rank();
    std::vector<int> simple_index(rank, -1);
    for (int i = 0; i < rank; ++i) {
      const int c = i / real.n();
      const int local = i % real.n();
      const std::pair<int, int> pos{c * block_ + local, c * block_ + local + 1};
      for (int a = 0; a < np; ++a)
        if (real.root_position(a) == pos) simple_index[i] = a;
    }
    for (int i = 0; i < rank && stabilizes_; ++i) {
      const CVector col = algebra_.col(real.pos_index(simple_index[i]));
      int found = -1;
      for (int j = 0; j < rank; ++j) {
        const Complex v = col(real.pos_index(simple_index[j]));
        if (std::abs(v) > kStructureTol * scale) {
          found = j;
          break;
        }
      }
      if (found < 0 || (col.cwiseAbs().sum() - std::abs(col(real.pos_index(simple_index[found])))) >
                           kStructureTol * scale) {
        stabilizes_ = false;
        break;
      }
      diagram_.perm.push_back(found);
      scales_.push_back(col(real.pos_index(simple_index[found])));
    }
    if (stabilizes_) {
      diagram_.validate(real.root_datum());
      coroot_ = CMatrix(rank, rank);
      CMatrix basis(size, rank);
      for (int j = 0; j < rank; ++j) basis.col(j) = real.simple_coroot(j).diagonal();
      for (int i = 0; i < rank; ++i) {
        const CVector d = apply_algebra(real.simple_coroot(i)).diagonal();
        coroot_.col(i) = basis.colPivHouseholderQr().solve(d);
      }
    } else {
      diagram_ = DiagramAut{};
      scales_.clear();
    }
  }
}

std::string Automorphism::description() const {
  std::string b = base_ == Base::Identity ? "id" : base_ == Base::Outer ? "outer" : "cyclic-shift";
  return composed_ ? "Ad_g0 o " + b : b;
}

CMatrix Automorphism::apply_base_group(const CMatrix& g) const {
  switch (base_) {
    case Base::Identity:
      return g;
    case Base::Outer:
      return j0_ * inverse_of(g.transpose()) * j0_.transpose();  // J0^{-1} = J0^T
    case Base::CyclicShift: {
      CMatrix out = CMatrix::Zero(g.rows(), g.cols());
      for (int f = 0; f < copies_; ++f) {
        const int src = (f + 1) % copies_;
        out.block(f * block_, f * block_, block_, block_) = g.block(src * block_, src * block_, block_, block_);
      }
      return out;
    }
  }
  return g;
}

CMatrix Automorphism::apply_base_algebra(const CMatrix& x) const {
  if (base_ == Base::Outer) return -j0_ * x.transpose() * j0_.transpose();
  return apply_base_group(x);  // linear in both remaining cases
}

CMatrix Automorphism::apply_group(const CMatrix& g) const {
  const CMatrix b = apply_base_group(g);
  return composed_ ? CMatrix(g0_ * b * g0_inv_) : b;
}

CMatrix Automorphism::apply_algebra(const CMatrix& x) const {
  const CMatrix b = apply_base_algebra(x);
  return composed_ ? CMatrix(g0_ * b * g0_inv_) : b;
}

const DiagramAut& Automorphism::diagram() const {
  if (!stabilizes_) throw UnsupportedError("automorphism does not stabilize (B, T); normalize it first");
  return diagram_;
}

}  // namespace tleaf
