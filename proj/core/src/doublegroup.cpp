#include "tleaf/doublegroup.hpp"

#include <cmath>

#include "tleaf/cartanops.hpp"
#include "tleaf/errors.hpp"

namespace tleaf {

CMatrix mu_n(const std::vector<CMatrix>& tuple) {
  if (tuple.empty()) throw DomainError("mu_n of an empty tuple");
  CMatrix p = tuple.front();
  for (std::size_t i = 1; i < tuple.size(); ++i) p = p * tuple[i];
  return p;
}

TupleClassDescriptor tuple_class(const std::vector<CMatrix>& tuple, const MatrixRealization& real,
                                 const WeylGroup& group, const Tolerances& tol) {
  TupleClassDescriptor d;
  d.n = static_cast<int>(tuple.size());
  d.base = analyze_class(mu_n(tuple), Automorphism::identity(real), real, group, tol);
  d.dim = d.base.dim_C + (d.n - 1) * real.dim();
  return d;
}

bool in_tuple_class(const std::vector<CMatrix>& tuple, const ClassDescriptor& c, const Tolerances& tol) {
  return same_conjugacy_class(mu_n(tuple), c.representative, tol);
}

int tuple_leaf_dim(int dim_C, const std::vector<WeylElement>& ws, const WeylGroup& group) {
  if (ws.empty()) throw DomainError("tuple_leaf_dim needs at least one Weyl element");
  const int n = static_cast<int>(ws.size());
  const int dim_g = group.rank() + 2 * group.root_datum().num_positive_roots();
  const WeylElement* prod = &group.identity();
  int lengths = 0;
  for (const auto& w : ws) {
    prod = &group.multiply(*prod, w);
    lengths += w.length;
  }
  const ExactMatrix a(prod->action);
  const ExactMatrix one = ExactMatrix::identity(a.rows());
  const ExactMatrix op = n % 2 == 0 ? one - a : one + a;
  return dim_C + (n - 1) * dim_g - lengths - exact_dim_ker(op);
}

CMatrix pair_embedding(const MatrixRealization& single, const MatrixRealization& pair) {
  if (pair.copies() != 2 || pair.n() != single.n() || single.copies() != 1)
    throw ConfigurationError("pair_embedding needs a single factor and its two-factor product");
  const int d = single.dim();
  const int k = single.cartan_dim();
  const int np = single.num_positive();
  CMatrix e = CMatrix::Zero(2 * d, 2 * d);
  for (int c = 0; c < 2; ++c)
    for (int b = 0; b < d; ++b) {
      int target;
      if (b < k)
        target = c * k + b;
      else if (b < k + np)
        target = 2 * k + c * np + (b - k);
      else
        target = 2 * k + 2 * np + c * np + (b - k - np);
      e(target, c * d + b) = 1.0;
    }
  return e;
}

TrivializedBivector evaluate_Pist(const CMatrix& g1, const CMatrix& g2, const MatrixRealization& single,
                                  const MatrixRealization& pair, const Tolerances& tol) {
  const CMatrix e = pair_embedding(single, pair);
  const CMatrix r = e * standard_r_matrix(single) * e.transpose();
  const CMatrix g = block_diagonal({g1, g2});
  for (const CMatrix* x : {&g1, &g2})
    if (std::abs(x->determinant() - 1.0) > 1e-9) throw DomainError("Pi_st: point is not in SL(N) x SL(N)");
  const CMatrix a = pair.adjoint(g);
  TrivializedBivector out{g, r - a * r * a.transpose(), {}};
  out.rank = bivector_rank(out, tol);
  return out;
}

double verify_double_iso(const CMatrix& g1, const CMatrix& g2, const MatrixRealization& single,
                         const MatrixRealization& pair, const WeylGroup& group) {
  const auto swap = Automorphism::cyclic_shift(pair);
  const CMatrix pi = evaluate_bivector(block_diagonal({g1, g2}), swap, pair).coefficients;

  const int d = single.dim();
  const CMatrix g2_inv = g2.inverse();
  CMatrix t_pair = CMatrix::Zero(2 * d, 2 * d);
  t_pair.topLeftCorner(d, d) = CMatrix::Identity(d, d);
  t_pair.bottomRightCorner(d, d) = -single.adjoint(g2_inv);
  const CMatrix e = pair_embedding(single, pair);
  const CMatrix t = e * t_pair * e.transpose();

  const CMatrix w0_inv = representative(group.longest()).inverse();
  const CMatrix st = evaluate_Pist(g1 * w0_inv, g2_inv * w0_inv, single, pair).coefficients;
  const CMatrix pushed = t * pi * t.transpose();
  const double scale = std::max({st.norm(), pushed.norm(), 1e-300});
  return (pushed - st).norm() / scale;
}

DoubleCellDescriptor double_cell(const WeylElement& u, const WeylElement& v, const ClassDescriptor& c,
                                 const WeylGroup& group) {
  DoubleCellDescriptor d{u, v, c.dim_C, 0, 0, 0};
  const auto& uv = group.multiply(u, group.inverse(v));
  const ExactMatrix op = ExactMatrix::identity(group.rank()) - ExactMatrix(uv.action);
  d.torus_dim = exact_rank(op);
  d.cell_dim = c.dim_C + u.length + v.length + group.rank();
  d.leaf_dim = c.dim_C + u.length + v.length + d.torus_dim;
  return d;
}

DoubleCellPoint double_cell_membership(const CMatrix& k1, const CMatrix& k2, const DoubleCellDescriptor& cell,
                                       const ClassDescriptor& c, const WeylGroup& group, const Tolerances& tol) {
  if (!(bruhat_bb_cell_of(k1, group, tol) == cell.u)) throw DomainError("k1 is not in B u B");
  if (!(bruhat_lower_cell_of(k2, group, tol) == cell.v)) throw DomainError("k2 is not in B_- v B_-");
  if (!same_conjugacy_class(k1 * k2.inverse(), c.representative, tol))
    throw DomainError("k1 k2^{-1} is not in the class");

  DoubleCellPoint p;
  const CMatrix u_bar = representative(cell.u);
  const CMatrix u_inv = u_bar.inverse();
  const auto lu = lu_no_pivot(u_inv * k1);
  if (!lu) throw DomainError("k1 has no factorization n u h n'");
  if (off_triangle_norm(u_bar * lu->lower * u_inv, true) > 1e-8 * std::max(1.0, k1.norm()))
    throw DomainError("k1 has no factorization n u h n' with n in N^u");
  p.h_u = lu->upper.diagonal().asDiagonal();

  const CMatrix v_bar = representative(cell.v);
  const CMatrix v_inv = v_bar.inverse();
  const auto ul = ul_no_pivot(v_inv * k2);
  if (!ul) throw DomainError("k2 has no factorization n_- v h' n_-'");
  if (off_triangle_norm(v_bar * ul->upper * v_inv, false) > 1e-8 * std::max(1.0, k2.norm()))
    throw DomainError("k2 has no factorization n_- v h' n_-' with n_- in N_-^v");
  p.h_prime_v = ul->lower.diagonal().asDiagonal();
  return p;
}

namespace {

CMatrix random_upper_sl2(Rng& rng) {
  Complex a = random_unit_box(rng);
  while (std::abs(a) < 0.3) a = random_unit_box(rng);
  CMatrix b(2, 2);
  b << a, random_unit_box(rng), 0.0, 1.0 / a;
  return b;
}

Complex nonzero(Rng& rng) {
  Complex z = random_unit_box(rng);
  while (std::abs(z) < 0.3) z = random_unit_box(rng);
  return z;
}

// Element of B u B cap B_- v B_- in SL(2) from its zero pattern.
CMatrix double_bruhat_sl2(bool u_long, bool v_long, Rng& rng) {
  const Complex a = nonzero(rng);
  const Complex b = v_long ? nonzero(rng) : Complex(0.0);
  const Complex c = u_long ? nonzero(rng) : Complex(0.0);
  CMatrix k(2, 2);
  k << a, b, c, (1.0 + b * c) / a;
  return k;
}

}  // namespace

std::pair<CMatrix, CMatrix> sample_double_cell_sl2(const DoubleCellDescriptor& cell, const ClassDescriptor& c,
                                                   const WeylGroup& group, Rng& rng, const Tolerances& tol) {
  if (group.rank() != 1 || group.root_datum().type() != RootType::A)
    throw DomainError("sample_double_cell_sl2 needs the Weyl group of SL(2)");
  const CMatrix& rep = c.representative;
  const bool central = c.dim_C == 0;
  for (int attempt = 0; attempt < 100; ++attempt) {
    CMatrix k1;
    CMatrix k2;
    if (central) {
      k2 = double_bruhat_sl2(cell.u.length == 1, cell.v.length == 1, rng);
      k1 = rep(0, 0) * k2;
    } else {
      k2 = random_lower_unipotent(2, rng) * representative(cell.v) * random_torus(2, rng) *
           random_lower_unipotent(2, rng);
      const CMatrix left = random_upper_sl2(rng) * representative(cell.u);
      const CMatrix k2_inv = k2.inverse();
      CMatrix e12 = CMatrix::Zero(2, 2);
      e12(0, 1) = 1.0;
      // tr(left (1 + s e12) k2^{-1}) is affine in s.
      const Complex c0 = (left * k2_inv).trace();
      const Complex c1 = (left * e12 * k2_inv).trace();
      if (std::abs(c1) < 1e-3) continue;
      const Complex s = (rep.trace() - c0) / c1;
      k1 = left * (CMatrix::Identity(2, 2) + s * e12);
    }
    try {
      double_cell_membership(k1, k2, cell, c, group, tol);
      return {k1, k2};
    } catch (const DomainError&) {
      continue;
    }
  }
  throw DomainError("could not construct a sample of the double cell");
}

std::pair<CMatrix, CMatrix> sample_tuple_cell_sl2(const WeylElement& w1, const WeylElement& w2,
                                                  const ClassDescriptor& c, const WeylGroup& group, Rng& rng,
                                                  const Tolerances& tol) {
  if (group.rank() != 1 || group.root_datum().type() != RootType::A)
    throw DomainError("sample_tuple_cell_sl2 needs the Weyl group of SL(2)");
  const CMatrix& rep = c.representative;
  for (int attempt = 0; attempt < 100; ++attempt) {
    CMatrix g1;
    CMatrix g2;
    if (c.dim_C == 0) {
      // g1 = z g2^{-1}: g2 in B w2 B_- (entry (1,1) zero iff w2 = w0) and
      // g2 in B_- w1^{-1} B (entry (0,0) zero iff w1 = w0).
      const Complex a = w1.length == 1 ? Complex(0.0) : nonzero(rng);
      const Complex d = w2.length == 1 ? Complex(0.0) : nonzero(rng);
      const Complex b = nonzero(rng);
      g2.resize(2, 2);
      g2 << a, b, (a * d - 1.0) / b, d;
      g1 = rep(0, 0) * g2.inverse();
    } else {
      g2 = sample_in_cell(w2, rng).g;
      const CMatrix left = random_upper_sl2(rng) * representative(w1);
      CMatrix e21 = CMatrix::Zero(2, 2);
      e21(1, 0) = 1.0;
      const Complex c0 = (left * g2).trace();
      const Complex c1 = (left * e21 * g2).trace();
      if (std::abs(c1) < 1e-3) continue;
      const Complex s = (rep.trace() - c0) / c1;
      g1 = left * (CMatrix::Identity(2, 2) + s * e21);
    }
    try {
      if (bruhat_cell_of(g1, group, tol) == w1 && bruhat_cell_of(g2, group, tol) == w2 &&
          in_tuple_class({g1, g2}, c, tol))
        return {g1, g2};
    } catch (const NumericalQualityError&) {
    }
  }
  throw DomainError("could not construct a sample of the tuple cell");
}

TupleSphericalCertificate tuple_spherical_check(int n, const ClassDescriptor& c, const WeylGroup& group) {
  if (n < 1) throw DomainError("tuple_spherical_check needs n >= 1");
  const int k = group.rank();
  const int dim_g = k + 2 * group.root_datum().num_positive_roots();
  const WeylElement& w0 = group.longest();
  IntMatrix w(n * k, n * k);
  for (int f = 0; f < n; ++f)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) w(f * k + i, f * k + j) = w0.action(i, j);
  const IntMatrix op = IntMatrix::identity(n * k) - w * DiagramAut::factor_shift(k, n).matrix();
  TupleSphericalCertificate cert;
  cert.dim = c.dim_C + (n - 1) * dim_g;
  cert.rhs = n * w0.length + exact_rank(op);
  cert.spherical = cert.dim == cert.rhs;
  return cert;
}

}  // namespace tleaf
