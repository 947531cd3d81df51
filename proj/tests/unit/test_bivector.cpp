#include <doctest.h>

#include "oracles.hpp"
#include "tleaf/bivector.hpp"
#include "tleaf/cartanops.hpp"
#include "tleaf/classes.hpp"
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

CMatrix m2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("outer automorphism") {
  for (int n = 1; n <= 3; ++n) {
    const auto real = build_sl_realization(n);
    const auto th = Automorphism::outer(real);
    CHECK(th.stabilizes_borel_torus());
    CHECK(th.diagram() == DiagramAut::type_a_flip(n));
    Rng rng(n);
    const CMatrix g = random_sl(n + 1, rng);
    CHECK((th.apply_group(th.apply_group(g)) - g).norm() < 1e-10 * g.norm());
    // upper triangular stays upper triangular
    CMatrix b = CMatrix::Identity(n + 1, n + 1);
    b(0, n) = 2.0;
    CHECK(off_triangle_norm(th.apply_group(b), true) < 1e-14);
    const CMatrix& a = th.algebra_matrix();
    const CMatrix gram = real.gram();
    CHECK((a.transpose() * gram * a - gram).norm() < 1e-10);
  }
  CHECK_THROWS_AS(Automorphism::outer(build_product_realization(1, 2)), ConfigurationError);
  CHECK_THROWS_AS(Automorphism::cyclic_shift(build_sl_realization(2)), ConfigurationError);
}

TEST_CASE("bivector at special points") {
  const auto r1 = build_sl_realization(1);
  const auto id = Automorphism::identity(r1);
  CHECK(evaluate_bivector(CMatrix::Identity(2, 2), id, r1).coefficients.norm() < 1e-14);
  CHECK(evaluate_bivector(-CMatrix::Identity(2, 2), id, r1).rank.rank == 0);
  CHECK(evaluate_bivector(m2(2.5, 0.5, -2.0, 0.0), id, r1).rank.rank == 0);
  CHECK(evaluate_bivector(diag({2.0, 0.5}), id, r1).rank.rank == 2);
  CHECK_THROWS_AS(evaluate_bivector(diag({2.0, 2.0}), id, r1), DomainError);

  const auto r2 = build_sl_realization(2);
  const Complex z = std::polar(1.0, 2.0 * std::acos(-1.0) / 3.0);
  CHECK(evaluate_bivector(z * CMatrix::Identity(3, 3), Automorphism::identity(r2), r2).rank.rank == 0);
}

TEST_CASE("explicit formula matches the r-matrix route") {
  Rng rng(17);
  for (int n = 1; n <= 3; ++n) {
    const auto real = build_sl_realization(n);
    for (const auto& th : {Automorphism::identity(real), Automorphism::outer(real)})
      for (int s = 0; s < 10; ++s) {
        const CMatrix g = random_sl(n + 1, rng);
        const auto pi = evaluate_bivector(g, th, real);
        const CMatrix m = evaluate_bivector_from_r_matrix(g, th, real);
        CHECK((pi.coefficients - m).norm() < 1e-9 * std::max(1.0, m.norm()));
        CHECK((pi.coefficients + pi.coefficients.transpose()).norm() == doctest::Approx(0.0));
        CHECK(pi.rank.rank % 2 == 0);
      }
  }
}

TEST_CASE("rank formula on constructed samples") {
  Rng rng(23);
  for (int n = 1; n <= 2; ++n) {
    const auto real = build_sl_realization(n);
    const WeylGroup group(real.root_datum());
    const auto id = Automorphism::identity(real);
    for (const auto& w : group.elements())
      for (int s = 0; s < 5; ++s) {
        const auto sample = sample_in_cell(w, rng);
        const auto pi = evaluate_bivector(sample.g, id, real);
        // dim C for inner theta from the gl centralizer
        const int dim_c = (n + 1) * (n + 1) - oracle::centralizer_dim(sample.g);
        const int expect = dim_c - w.length - dim_ker(CartanOperator::identity(n) + w_theta(w, id.diagram()));
        CHECK(pi.rank.rank == expect);
        CHECK(bruhat_cell_of(sample.g, group) == w);
      }
  }
}

TEST_CASE("regular semisimple class in SL(3) at the extreme cells") {
  const auto real = build_sl_realization(2);
  const WeylGroup group(real.root_datum());
  const auto id = Automorphism::identity(real);
  // eigenvalues 2, -2, -1/4 both times
  CMatrix u = CMatrix::Identity(3, 3);
  u(0, 1) = 1.0, u(0, 2) = 2.0, u(1, 2) = -1.0;
  const CMatrix low = u * diag({2.0, -2.0, -0.25}) * u.inverse();
  CHECK(bruhat_cell_of(low, group) == group.identity());
  CHECK(evaluate_bivector(low, id, real).rank.rank == 6);

  CMatrix top = CMatrix::Zero(3, 3);
  top(0, 2) = 1.0, top(1, 1) = -0.25, top(2, 0) = 4.0;
  REQUIRE(same_conjugacy_class(low, top));
  CHECK(bruhat_cell_of(top, group) == group.longest());
  CHECK(evaluate_bivector(top, id, real).rank.rank == 2);
}

TEST_CASE("twisted conjugation and kappa") {
  const auto r1 = build_sl_realization(1);
  const auto id = Automorphism::identity(r1);
  const CMatrix g = m2(1.0, 2.0, 3.0, 7.0);
  CHECK((twisted_conjugate(CMatrix::Identity(2, 2), g, id) - g).norm() < 1e-15);
  CHECK((twisted_conjugate(g, CMatrix::Identity(2, 2), id) - CMatrix::Identity(2, 2)).norm() < 1e-12);
  const CMatrix h = diag({3.0, 1.0 / 3.0});
  const CMatrix c = twisted_conjugate(h, g, id);
  CHECK(std::abs(c(0, 1) - 9.0 * g(0, 1)) < 1e-12);
  CHECK(std::abs(c(1, 0) - g(1, 0) / 9.0) < 1e-12);
  CHECK(std::abs(c.trace() - g.trace()) < 1e-12);

  const CMatrix x = m2(1.0, 2.0, -1.0, -1.0);
  const CMatrix y = m2(0.0, 1.0, 0.0, 0.0);
  CHECK(kappa(x, x, CMatrix::Identity(2, 2), id).norm() < 1e-15);
  CHECK((kappa(x, CMatrix::Zero(2, 2), g, id) - x).norm() < 1e-15);
  CHECK((kappa(CMatrix::Zero(2, 2), y, g, id) + g * y * g.inverse()).norm() < 1e-12);
}

TEST_CASE("class tangent space dimensions") {
  const auto r1 = build_sl_realization(1);
  const auto id = Automorphism::identity(r1);
  CHECK(class_tangent_space(CMatrix::Identity(2, 2), id, r1).dim() == 0);
  CHECK(class_tangent_space(diag({2.0, 0.5}), id, r1).dim() == 2);
  CHECK(class_tangent_space(m2(1.0, 1.0, 0.0, 1.0), id, r1).dim() == 2);
  const auto outer = Automorphism::outer(r1);
  CHECK(class_tangent_space(CMatrix::Identity(2, 2), outer, r1).dim() ==
        oracle::svd_rank(CMatrix::Identity(3, 3) - outer.algebra_matrix()));
}

TEST_CASE("tangency and equivariance") {
  Rng rng(31);
  for (int n = 1; n <= 3; ++n) {
    const auto real = build_sl_realization(n);
    for (const auto& th : {Automorphism::identity(real), Automorphism::outer(real)})
      for (int s = 0; s < 10; ++s) {
        const CMatrix g = random_sl(n + 1, rng);
        const auto pi = evaluate_bivector(g, th, real);
        CHECK(verify_tangency(pi, th, real).residual < 1e-8);
        const CMatrix h = random_torus(n + 1, rng);
        CHECK(verify_T_equivariance(g, h, th, real).residual < 1e-9);
      }
  }
  const auto r1 = build_sl_realization(1);
  const auto id = Automorphism::identity(r1);
  CHECK(verify_T_equivariance(diag({2.0, 0.5}), diag({0.3, 1 / 0.3}), id, r1).residual < 1e-9);
  CHECK(verify_T_equivariance(diag({2.0, 0.5}), CMatrix::Identity(2, 2), id, r1).residual == 0.0);
  CHECK(verify_T_equivariance(CMatrix::Identity(2, 2), diag({2.0, 0.5}), id, r1).vacuous);
  CHECK(verify_tangency(evaluate_bivector(CMatrix::Identity(2, 2), id, r1), id, r1).residual == 0.0);
}

TEST_CASE("tau_w") {
  Rng rng(37);
  const auto real = build_sl_realization(2);
  const WeylGroup group(real.root_datum());
  for (const auto& th : {Automorphism::identity(real), Automorphism::outer(real)})
    for (const auto& w : group.elements()) {
      const CMatrix wd = representative(w);
      const CMatrix h = random_torus(3, rng);
      CHECK((tau_w(h * wd, wd) - h).norm() < 1e-12);

      // the sampler builds n w_dot t m, so the torus part is w_dot t w_dot^{-1}
      const auto s = sample_in_cell(w, rng);
      const CMatrix t = s.w_dot * s.t * s.w_dot.inverse();
      CHECK((tau_w(s.g, s.w_dot) - t).norm() < 1e-10 * t.norm());

      const CMatrix h1 = random_torus(3, rng);
      const CMatrix moved = twisted_conjugate(h1, s.g, th);
      const CMatrix expect = h1 * wd * th.apply_group(h1).inverse() * wd.inverse() * t;
      CHECK((tau_w(moved, wd) - expect).norm() < 1e-10 * expect.norm());
    }
  CHECK_THROWS_AS(tau_w(CMatrix::Identity(3, 3), representative(group.longest())), DomainError);
}

TEST_CASE("same G* orbit") {
  Rng rng(41);
  const auto r1 = build_sl_realization(1);
  const WeylGroup g1(r1.root_datum());
  const auto id = Automorphism::identity(r1);

  const auto s = sample_in_cell(g1.identity(), rng);
  CHECK(same_gstar_orbit(s.g, s.g, g1.identity(), id).verdict == OrbitVerdict::Same);
  // w = e, theta = Id: T_{w theta} = {h^2} is all of T
  const auto s2 = sample_in_cell(g1.identity(), rng);
  CHECK(same_gstar_orbit(s.g, s2.g, g1.identity(), id).verdict == OrbitVerdict::Same);

  // w = w0 in SL(2): T_{w theta} is trivial
  const auto& w0 = g1.longest();
  const CMatrix wd = representative(w0);
  CHECK(same_gstar_orbit(diag({2.0, 0.5}) * wd, diag({3.0, 1.0 / 3.0}) * wd, w0, id).verdict ==
        OrbitVerdict::Different);
  CHECK(same_gstar_orbit(diag({2.0, 0.5}) * wd, diag({-2.0, -0.5}) * wd, w0, id).verdict !=
        OrbitVerdict::Same);

  // shifting tau by an element k (w theta)(k) stays in the orbit
  const auto real = build_sl_realization(2);
  const WeylGroup g2(real.root_datum());
  for (const auto& th : {Automorphism::identity(real), Automorphism::outer(real)})
    for (const auto& w : g2.elements()) {
      const auto a = sample_in_cell(w, rng);
      const CMatrix k = random_torus(3, rng);
      const CMatrix shift = k * a.w_dot * th.apply_group(k) * a.w_dot.inverse();
      const CMatrix b = a.n * shift * a.w_dot * a.t * a.m;
      const auto d = same_gstar_orbit(a.g, b, w, th);
      CHECK(d.verdict == OrbitVerdict::Same);
      CHECK(gstar_torus_dim(w, th.diagram()) == rank(CartanOperator::identity(2) + w_theta(w, th.diagram())));
    }
}

TEST_CASE("normalizing a composed automorphism") {
  Rng rng(43);
  for (int n = 1; n <= 2; ++n) {
    const auto real = build_sl_realization(n);
    const CMatrix g0 = random_sl(n + 1, rng);
    const auto raw = Automorphism::composed(real, g0, Automorphism::outer(real));
    CHECK_FALSE(raw.stabilizes_borel_torus());
    CHECK_THROWS_AS(evaluate_bivector(random_sl(n + 1, rng), raw, real), UnsupportedError);
    const auto norm = normalize_automorphism(raw, real);
    CHECK(norm.theta_prime.stabilizes_borel_torus());
    CHECK(norm.theta_prime.diagram() == DiagramAut::type_a_flip(n));
    for (int s = 0; s < 5; ++s) {
      const CMatrix g = random_sl(n + 1, rng);
      const CMatrix a = evaluate_bivector_from_r_matrix(g, raw, real);
      const auto b = evaluate_bivector(g * norm.g0, norm.theta_prime, real);
      // right translation leaves right-trivialized coefficients unchanged
      CHECK((a - b.coefficients).norm() < 1e-9 * std::max(1.0, a.norm()));
      CHECK(numerical_rank(a).rank == b.rank.rank);
    }
  }

  const auto real = build_sl_realization(2);
  CMatrix t = CMatrix::Zero(3, 3);
  t(0, 0) = 2.0, t(1, 1) = 1.0, t(2, 2) = 0.5;
  const auto inner = normalize_automorphism(Automorphism::composed(real, t, Automorphism::identity(real)), real);
  CHECK(inner.theta_prime.stabilizes_borel_torus());
  CMatrix nn = CMatrix::Identity(3, 3);
  nn(0, 2) = 1.5;
  // Ad_n keeps B but moves T, so the whole of Ad_n is moved into the translation
  const auto un = Automorphism::composed(real, nn, Automorphism::identity(real));
  CHECK_FALSE(un.stabilizes_borel_torus());
  const auto un_norm = normalize_automorphism(un, real);
  CHECK(un_norm.theta_prime.acts_as_identity());
  CHECK((un_norm.g0 - nn).norm() < 1e-14);
}
