#include "tleaf/classes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tleaf/bivector.hpp"
#include "tleaf/cartanops.hpp"
#include "tleaf/errors.hpp"
#include "tleaf/sampling.hpp"

namespace tleaf {

std::vector<EigenCluster> eigen_clusters(const CMatrix& g, const Tolerances& tol) {
  Eigen::ComplexEigenSolver<CMatrix> es(g);
  if (es.info() != Eigen::Success) throw NumericalQualityError("eigenvalue solver did not converge", 1.0);
  const CVector& values = es.eigenvalues();
  const CMatrix& vectors = es.eigenvectors();
  const double gnorm = std::max(g.norm(), 1.0);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const CVector v = vectors.col(i);
    worst = std::max(worst, (g * v - values(i) * v).norm() / (gnorm * v.norm()));
  }
  if (worst > 1e-6) throw NumericalQualityError("ill-conditioned eigenproblem", worst);

  // Single-linkage clustering.
  const int size = static_cast<int>(values.size());
  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const double cut = tol.eigen_cluster * gnorm;
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      if (std::abs(values(a) - values(b)) < cut) parent[find(a)] = find(b);
  std::vector<EigenCluster> out;
  std::vector<int> root_of;
  for (int a = 0; a < size; ++a) {
    const int r = find(a);
    auto it = std::find(root_of.begin(), root_of.end(), r);
    if (it == root_of.end()) {
      root_of.push_back(r);
      out.push_back({values(a), 1});
    } else {
      auto& c = out[it - root_of.begin()];
      c.value += values(a);
      ++c.multiplicity;
    }
  }
  for (auto& c : out) c.value /= static_cast<double>(c.multiplicity);
  std::sort(out.begin(), out.end(), [](const EigenCluster& a, const EigenCluster& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

int min_rank_shift(const CMatrix& g, const std::vector<EigenCluster>& clusters, const Tolerances& tol) {
  const int size = static_cast<int>(g.rows());
  int best = size;
  for (const auto& c : clusters) {
    const CMatrix shifted = g - c.value * CMatrix::Identity(size, size);
    best = std::min(best, numerical_rank(shifted, std::max(g.norm(), 1.0), tol).rank);
  }
  return best;
}

bool spherical_criterion(int dim_C, const WeylElement& m, const DiagramAut& theta) {
  const auto a = w_theta(m, theta);
  return dim_C == m.length + rank(CartanOperator::identity(a.size()) - a);
}

ClassDescriptor analyze_class(const CMatrix& g, const Automorphism& theta, const MatrixRealization& real,
                              const WeylGroup& group, const Tolerances& tol) {
  if (real.copies() != 1) throw DomainError("analyze_class works on a single SL(n+1) factor");
  const Complex det = g.determinant();
  if (std::abs(det - 1.0) > tol.determinant * std::max(1.0, std::pow(g.norm(), g.rows())))
    throw DomainError("class representative is not in SL(N)");
  ClassDescriptor c;
  c.representative = g;
  c.n = real.n();
  const RankInfo tangent = numerical_rank(class_tangent_map(g, theta, real), tol);
  c.dim_C = tangent.rank;
  c.borderline = tangent.borderline;
  c.eigen_summary = eigen_clusters(g, tol);
  c.r_C = min_rank_shift(g, c.eigen_summary, tol);
  c.l_C = std::min(c.r_C, (c.n + 1) / 2);
  if (theta.acts_as_identity()) {
    c.m_C = m_l(group, c.l_C);
    c.spherical = spherical_criterion(c.dim_C, *c.m_C, theta.diagram());
  }
  return c;
}

namespace {

// r(i, j) = rank of rows >= i, cols <= j (0-based).
std::vector<std::vector<int>> southwest_ranks(const CMatrix& x, const Tolerances& tol) {
  const int size = static_cast<int>(x.rows());
  const double scale = std::max(1.0, x.operatorNorm());
  std::vector<std::vector<int>> r(size, std::vector<int>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) r[i][j] = numerical_rank(x.block(i, 0, size - i, j + 1), scale, tol).rank;
  return r;
}

}  // namespace

const WeylElement& bruhat_bb_cell_of(const CMatrix& x, const WeylGroup& group, const Tolerances& tol) {
  const int size = static_cast<int>(x.rows());
  if (group.root_datum().type() != RootType::A || group.rank() + 1 != size)
    throw DomainError("Bruhat cell recovery needs the type A group of matching size");
  const auto r = southwest_ranks(x, tol);
  auto at = [&](int i, int j) { return j < 0 ? 0 : r[i][j]; };
  std::vector<int> u(size);
  for (int k = 0; k < size; ++k) {
    int s = 0;
    for (int i = 0; i < size; ++i) s += at(i, k) - at(i, k - 1);
    u[k] = s - 1;
  }
  std::vector<int> sorted = u;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < size; ++i)
    if (sorted[i] != i) throw NumericalQualityError("rank pattern does not describe a permutation", 1.0);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      int expect = 0;
      for (int k = 0; k <= j; ++k) expect += u[k] >= i ? 1 : 0;
      if (expect != r[i][j]) throw NumericalQualityError("inconsistent Bruhat rank pattern", 1.0);
    }
  return group.from_permutation(u);
}

const WeylElement& bruhat_cell_of(const CMatrix& g, const WeylGroup& group, const Tolerances& tol) {
  const auto& w0 = group.longest();
  const auto& u = bruhat_bb_cell_of(g * representative(w0), group, tol);
  return group.multiply(u, w0);
}

const WeylElement& bruhat_lower_cell_of(const CMatrix& k, const WeylGroup& group, const Tolerances& tol) {
  const auto& w0 = group.longest();
  const CMatrix w0_dot = representative(w0);
  const auto& u = bruhat_bb_cell_of(w0_dot.inverse() * k * w0_dot, group, tol);
  return group.multiply(group.multiply(w0, u), w0);
}

bool same_conjugacy_class(const CMatrix& g, const CMatrix& k, const Tolerances& tol) {
  if (g.rows() != k.rows()) return false;
  const auto cg = eigen_clusters(g, tol);
  const auto ck = eigen_clusters(k, tol);
  if (cg.size() != ck.size()) return false;
  const int size = static_cast<int>(g.rows());
  const double cut = 10.0 * tol.eigen_cluster * std::max({1.0, g.norm(), k.norm()});
  const double scale = std::max({1.0, g.norm(), k.norm()});
  std::vector<bool> used(ck.size(), false);
  for (const auto& a : cg) {
    int match = -1;
    for (std::size_t b = 0; b < ck.size(); ++b)
      if (!used[b] && ck[b].multiplicity == a.multiplicity && std::abs(ck[b].value - a.value) < cut) {
        match = static_cast<int>(b);
        break;
      }
    if (match < 0) return false;
    used[match] = true;
    const Complex c = 0.5 * (a.value + ck[match].value);
    CMatrix pg = CMatrix::Identity(size, size);
    CMatrix pk = CMatrix::Identity(size, size);
    const CMatrix sg = g - c * CMatrix::Identity(size, size);
    const CMatrix sk = k - c * CMatrix::Identity(size, size);
    for (int j = 1; j <= a.multiplicity; ++j) {
      pg = pg * sg;
      pk = pk * sk;
      const double s = std::pow(scale, j);
      if (numerical_rank(pg, s, tol).rank != numerical_rank(pk, s, tol).rank) return false;
    }
  }
  return true;
}

std::vector<LeafDescriptor> leaf_table(const ClassDescriptor& c, const DiagramAut& theta, const WeylGroup& group) {
  if (!c.m_C) throw UnsupportedError("unsupported: m_C tables out of scope for this automorphism");
  std::vector<LeafDescriptor> out;
  for (std::size_t idx : group.lower_interval(*c.m_C)) {
    const WeylElement& w = group[idx];
    const auto a = w_theta(w, theta);
    LeafDescriptor d{w, c.dim_C - w.length, 0};
    d.leaf_dim = d.intersection_dim - dim_ker(CartanOperator::identity(a.size()) + a);
    out.push_back(std::move(d));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const LeafDescriptor& a, const LeafDescriptor& b) { return a.w.length < b.w.length; });
  return out;
}

int min_rank_in_class(const ClassDescriptor& c, const DiagramAut& theta) {
  if (!c.m_C) throw UnsupportedError("unsupported: m_C tables out of scope for this automorphism");
  return c.dim_C - L_theta(*c.m_C, theta);
}

ZeroLocusPoint zero_locus_point(int n, int l, Complex lambda, Complex lambda_prime, const std::vector<Complex>& xs) {
  if (n < 1) throw DomainError("zero locus: n must be >= 1");
  if (l < 0 || 2 * l > n + 1) throw DomainError("zero locus: l out of range");
  if (static_cast<int>(xs.size()) != l) throw DomainError("zero locus: expected l parameters x_j");
  for (const auto& x : xs)
    if (std::abs(x) < 1e-14) throw DomainError("zero locus: x_j must be nonzero");
  const Complex constraint = std::pow(lambda, n + 1 - l) * std::pow(lambda_prime, l);
  if (std::abs(constraint - 1.0) > 1e-10)
    throw DomainError("zero locus: lambda^(n+1-l) lambda'^l != 1");

  const int size = n + 1;
  ZeroLocusPoint p{n, l, lambda, lambda_prime, xs, CMatrix::Zero(size, size)};
  for (int i = 0; i < l; ++i) {
    p.g(i, i) = lambda + lambda_prime;
    p.g(i, size - 1 - i) = lambda_prime * xs[i];  // lambda' X J_l
    p.g(size - 1 - i, i) = -lambda / xs[i];       // -lambda X' J_l
  }
  for (int i = l; i < size - l; ++i) p.g(i, i) = lambda;
  return p;
}

std::string SphericalFamily::name() const {
  return (kind == Kind::Semisimple ? "ss:" : "uni:") + std::to_string(l);
}

std::vector<SphericalFamily> spherical_families(int n, const WeylGroup& group) {
  if (group.root_datum().type_a_n() != n || group.root_datum().type() != RootType::A)
    throw DomainError("spherical_families needs the Weyl group of A_n");
  std::vector<SphericalFamily> out;
  auto predicted = [&](int l) {
    const auto& m = m_l(group, l);
    const auto id = DiagramAut::identity(n);
    const auto a = w_theta(m, id);
    return m.length + rank(CartanOperator::identity(a.size()) - a);
  };
  for (int l = 0; 2 * l <= n + 1; ++l)
    out.push_back({SphericalFamily::Kind::Unipotent, n, l, predicted(l)});
  for (int l = 1; 2 * l <= n + 1; ++l)
    out.push_back({SphericalFamily::Kind::Semisimple, n, l, predicted(l)});
  return out;
}

CMatrix family_representative(const SphericalFamily& f, Complex lambda) {
  const int size = f.n + 1;
  if (f.kind == SphericalFamily::Kind::Unipotent) {
    if (std::abs(std::pow(lambda, size) - 1.0) > 1e-10)
      throw DomainError("unipotent family: lambda must satisfy lambda^(n+1) = 1");
    CMatrix g = lambda * CMatrix::Identity(size, size);
    for (int j = 0; j < f.l; ++j) g(2 * j, 2 * j + 1) = lambda;
    return g;
  }
  // lambda' (multiplicity l) fixed by the determinant.
  const Complex lambda_prime = std::pow(std::pow(lambda, -(size - f.l)), 1.0 / f.l);
  if (std::abs(lambda_prime - lambda) < 1e-6) throw DomainError("semisimple family: lambda' coincides with lambda");
  CMatrix g = lambda * CMatrix::Identity(size, size);
  for (int j = 0; j < f.l; ++j) g(j, j) = lambda_prime;
  return g;
}

}  // namespace tleaf
