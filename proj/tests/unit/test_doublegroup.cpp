#include <doctest.h>

#include "oracles.hpp"
#include "tleaf/bivector.hpp"
#include "tleaf/cartanops.hpp"
#include "tleaf/doublegroup.hpp"
#include "tleaf/errors.hpp"
#include "tleaf/sampling.hpp"

using namespace tleaf;

namespace {

CMatrix diag(std::initializer_list<Complex> d) {
  CMatrix m = CMatrix::Zero(d.size(), d.size());
  int i = 0;
  for (auto z : d) m(i, i) = z, ++i;
  return m;
}

CMatrix unipotent2() {
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 1) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("tuple classes") {
  Rng rng(71);
  const auto real = build_sl_realization(1);
  const WeylGroup group(real.root_datum());
  const CMatrix g = random_sl(2, rng);
  auto c = tuple_class({g, g.inverse()}, real, group);
  CHECK(c.base.dim_C == 0);
  CHECK(c.dim == 3);
  c = tuple_class({g, CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)}, real, group);
  CHECK(c.base.dim_C == 2);
  CHECK(c.dim == 2 + 2 * 3);
  CHECK((mu_n({g, g.inverse()}) - CMatrix::Identity(2, 2)).norm() < 1e-12);

  // (g1, g2) -> (h1 g1 h2^{-1}, h2 g2 h1^{-1}) preserves the class of g1 g2
  const CMatrix g1 = random_sl(2, rng), g2 = random_sl(2, rng);
  const auto base = tuple_class({g1, g2}, real, group);
  const CMatrix h1 = random_sl(2, rng), h2 = random_sl(2, rng);
  const std::vector<CMatrix> moved{h1 * g1 * h2.inverse(), h2 * g2 * h1.inverse()};
  CHECK(in_tuple_class(moved, base.base));
  CHECK(tuple_class(moved, real, group).dim == base.dim);
}

TEST_CASE("tuple leaf dimensions") {
  const WeylGroup g(RootDatum::type_a(1));
  const auto& e = g.identity();
  const auto& w0 = g.longest();
  CHECK(tuple_leaf_dim(0, {w0, w0}, g) == 0);
  CHECK(tuple_leaf_dim(2, {e, e}, g) == 4);
  CHECK(tuple_leaf_dim(0, {e, e, e}, g) == 6);
}

TEST_CASE("tuple ranks match the leaf formula") {
  Rng rng(73);
  const auto single = build_sl_realization(1);
  const auto pair = build_product_realization(1, 2);
  const WeylGroup group(single.root_datum());
  const auto theta = Automorphism::cyclic_shift(pair);
  const auto id = Automorphism::identity(single);
  for (const CMatrix& rep : {CMatrix(CMatrix::Identity(2, 2)), diag({2.0, 0.5}), unipotent2()}) {
    const auto c = analyze_class(rep, id, single, group);
    for (const auto& w1 : group.elements())
      for (const auto& w2 : group.elements())
        for (int s = 0; s < 3; ++s) {
          const auto [a, b] = sample_tuple_cell_sl2(w1, w2, c, group, rng);
          CHECK(bruhat_cell_of(a, group) == w1);
          CHECK(bruhat_cell_of(b, group) == w2);
          CHECK(in_tuple_class({a, b}, c));
          const auto pi = evaluate_bivector(block_diagonal({a, b}), theta, pair);
          CHECK(pi.rank.rank == tuple_leaf_dim(c.dim_C, {w1, w2}, group));
        }
  }
}

TEST_CASE("Pi_st") {
  Rng rng(79);
  const auto single = build_sl_realization(1);
  const auto pair = build_product_realization(1, 2);
  const CMatrix i2 = CMatrix::Identity(2, 2);
  CHECK(evaluate_Pist(i2, i2, single, pair).coefficients.norm() < 1e-14);
  const auto p = pair_embedding(single, pair);
  CHECK(p.rows() == 6);
  CHECK((p.adjoint() * p - CMatrix::Identity(6, 6)).norm() < 1e-14);

  // torus bi-translation invariance of the rank
  const CMatrix g1 = random_sl(2, rng), g2 = random_sl(2, rng);
  const CMatrix h1 = random_torus(2, rng), h2 = random_torus(2, rng);
  const int r = evaluate_Pist(g1, g2, single, pair).rank.rank;
  CHECK(evaluate_Pist(h1 * g1 * h2.inverse(), h1 * g2 * h2.inverse(), single, pair).rank.rank == r);
  CHECK_THROWS_AS(evaluate_Pist(2.0 * i2, i2, single, pair), DomainError);
}

TEST_CASE("double isomorphism residual") {
  Rng rng(83);
  for (int n = 1; n <= 2; ++n) {
    const auto single = build_sl_realization(n);
    const auto pair = build_product_realization(n, 2);
    const WeylGroup group(single.root_datum());
    const CMatrix id = CMatrix::Identity(n + 1, n + 1);
    CHECK(verify_double_iso(id, id, single, pair, group) < 1e-8);
    for (int s = 0; s < 5; ++s)
      CHECK(verify_double_iso(random_sl(n + 1, rng), random_sl(n + 1, rng), single, pair, group) < 1e-8);
  }
}

TEST_CASE("double cells") {
  Rng rng(89);
  const auto single = build_sl_realization(1);
  const auto pair = build_product_realization(1, 2);
  const WeylGroup group(single.root_datum());
  const auto id = Automorphism::identity(single);
  const auto& e = group.identity();
  const auto& w0 = group.longest();
  const auto central = analyze_class(CMatrix::Identity(2, 2), id, single, group);
  const auto reg = analyze_class(diag({2.0, 0.5}), id, single, group);

  CHECK(double_cell(e, e, central, group).cell_dim == 1);
  CHECK(double_cell(w0, w0, central, group).leaf_dim == 2);
  CHECK(double_cell(w0, e, reg, group).leaf_dim == 4);

  for (const auto& c : {central, reg, analyze_class(unipotent2(), id, single, group)})
    for (const auto& u : group.elements())
      for (const auto& v : group.elements()) {
        const auto cell = double_cell(u, v, c, group);
        for (int s = 0; s < 5; ++s) {
          const auto [k1, k2] = sample_double_cell_sl2(cell, c, group, rng);
          CHECK_NOTHROW(double_cell_membership(k1, k2, cell, c, group));
          CHECK(evaluate_Pist(k1, k2, single, pair).rank.rank == cell.leaf_dim);
        }
      }

  // dim T_{u,v} = rk(1 - u v^{-1}) in S_3
  const WeylGroup s3(RootDatum::type_a(2));
  const auto real3 = build_sl_realization(2);
  const auto c3 = analyze_class(CMatrix::Identity(3, 3), Automorphism::identity(real3), real3, s3);
  for (const auto& u : s3.elements())
    for (const auto& v : s3.elements()) {
      const auto uv = s3.multiply(u, s3.inverse(v));
      CHECK(double_cell(u, v, c3, s3).torus_dim ==
            rank(CartanOperator::identity(2) - w_theta(uv, DiagramAut::identity(2))));
    }

  CHECK_THROWS_AS(double_cell_membership(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2),
                                         double_cell(w0, e, central, group), central, group),
                  DomainError);
}

TEST_CASE("tuple sphericity") {
  const WeylGroup s2(RootDatum::type_a(1));
  const WeylGroup s3(RootDatum::type_a(2));
  const auto r1 = build_sl_realization(1);
  const auto r2 = build_sl_realization(2);
  const auto c2 = analyze_class(CMatrix::Identity(2, 2), Automorphism::identity(r1), r1, s2);
  const auto c3 = analyze_class(CMatrix::Identity(3, 3), Automorphism::identity(r2), r2, s3);
  const auto reg2 = analyze_class(diag({2.0, 0.5}), Automorphism::identity(r1), r1, s2);

  auto cert = tuple_spherical_check(2, c3, s3);
  CHECK(cert.spherical);
  CHECK(cert.dim == 8);
  CHECK(cert.rhs == 8);
  cert = tuple_spherical_check(2, reg2, s2);
  CHECK_FALSE(cert.spherical);
  CHECK(cert.dim == 5);
  CHECK(cert.rhs == 3);
  CHECK(tuple_spherical_check(3, c2, s2).spherical);
  CHECK_FALSE(tuple_spherical_check(3, c3, s3).spherical);
  CHECK_FALSE(tuple_spherical_check(4, c2, s2).spherical);
  CHECK_FALSE(tuple_spherical_check(4, reg2, s2).spherical);
}
