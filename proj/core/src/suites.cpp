#include "tleaf/suites.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "tleaf/automorphism.hpp"
#include "tleaf/bivector.hpp"
#include "tleaf/cartanops.hpp"
#include "tleaf/classes.hpp"
#include "tleaf/doublegroup.hpp"
#include "tleaf/errors.hpp"
#include "tleaf/sampling.hpp"

namespace tleaf {

void SuiteResult::fail(const std::string& message) {
  ++failures;
  if (messages.size() < 20) messages.push_back(message);
}

namespace {

int samples_or(const SuiteConfig& c, int fallback) { return c.samples > 0 ? c.samples : fallback; }
std::vector<int> ns_or(const SuiteConfig& c, std::vector<int> fallback) { return c.ns.empty() ? fallback : c.ns; }
std::vector<std::string> thetas_of(const SuiteConfig& c) {
  return c.thetas.empty() ? std::vector<std::string>{"id", "outer"} : c.thetas;
}

Automorphism make_theta(const std::string& name, const MatrixRealization& real) {
  if (name == "id") return Automorphism::identity(real);
  if (name == "outer") return Automorphism::outer(real);
  throw ConfigurationError("unknown automorphism '" + name + "' (expected id or outer)");
}

std::string tag(const std::string& theta, int n) { return "theta=" + theta + " n=" + std::to_string(n); }

Complex away_from_zero(Rng& rng) {
  Complex z = random_unit_box(rng);
  while (std::abs(z) < 0.25) z = random_unit_box(rng);
  return z;
}

CVector random_distinct_eigenvalues(int size, Rng& rng) {
  for (;;) {
    CVector d(size);
    for (int i = 0; i < size; ++i) d(i) = 2.0 * away_from_zero(rng);
    d /= std::pow(d.prod(), 1.0 / size);
    bool ok = true;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) ok = ok && std::abs(d(i) - d(j)) > 0.1;
    if (ok) return d;
  }
}

}  // namespace

SuiteResult suite_rank_formula(const SuiteConfig& config) {
  SuiteResult res;
  res.name = "rank-formula";
  Rng rng(config.seed);
  const int samples = samples_or(config, 20);
  long total = 0;
  long minimum_hits = 0;
  long formula_misses = 0;
  long floor_misses = 0;
  for (const auto& theta_name : thetas_of(config))
    for (int n : ns_or(config, {1, 2, 3})) {
      const auto real = build_sl_realization(n);
      const WeylGroup group(real.root_datum());
      const auto theta = make_theta(theta_name, real);
      const DiagramAut& diag = theta.diagram();
      const int floor_rank = rank_one_minus_theta_squared(diag);
      for (const auto& w : group.elements()) {
        const auto wt = w_theta(w, diag);
        const int dk = dim_ker(CartanOperator::identity(wt.size()) + wt);
        for (int s = 0; s < samples; ++s) {
          const auto cs = sample_in_cell(w, rng);
          ++total;
          const auto pi = evaluate_bivector(cs.g, theta, real, config.tol);
          const RankInfo tangent = numerical_rank(class_tangent_map(cs.g, theta, real), config.tol);
          if (pi.rank.borderline || tangent.borderline) {
            ++res.excluded;
            continue;
          }
          ++res.checks;
          const int predicted = tangent.rank - w.length - dk;
          if (pi.rank.rank != predicted) {
            ++formula_misses;
            std::ostringstream os;
            os << tag(theta_name, n) << " w=" << w.cycle_string() << ": rank " << pi.rank.rank << " != "
               << tangent.rank << " - " << w.length << " - " << dk;
            res.fail(os.str());
          }
          try {
            if (!(bruhat_cell_of(cs.g, group, config.tol) == w)) {
              ++formula_misses;
              res.fail(tag(theta_name, n) + " w=" + w.cycle_string() + ": recovered a different cell");
            }
          } catch (const NumericalQualityError& e) {
            ++formula_misses;
            res.fail(tag(theta_name, n) + ": " + e.what());
          }
          if (pi.rank.rank < floor_rank) {
            ++floor_misses;
            res.fail(tag(theta_name, n) + ": rank below rk(1 - theta^2)");
          }
          if (pi.rank.rank == floor_rank) {
            ++minimum_hits;
            const auto c = analyze_class(cs.g, theta, real, group, config.tol);
            bool ok;
            if (c.m_C) {
              ok = *c.spherical && w == *c.m_C;
            } else {
              // m_C unknown for outer theta: the cell must at least be a
              // theta-fixed involution, maximal in its twisted class, meeting the criterion.
              ok = spherical_criterion(c.dim_C, w, diag) && group.twist(w, diag) == w && group.is_involution(w);
              try {
                ok = ok && group.max_length_element(group.twisted_class(w, diag)) == w;
              } catch (const AmbiguityError&) {
                ok = false;
              }
            }
            if (!ok) ++floor_misses;
            if (!ok)
              res.fail(tag(theta_name, n) + " w=" + w.cycle_string() +
                       ": minimal rank reached outside a spherical class's m_C cell");
          }
        }
      }
    }
  const double fraction = total ? static_cast<double>(res.excluded) / static_cast<double>(total) : 0.0;
  res.metrics["samples"] = static_cast<double>(total);
  res.metrics["borderline_fraction"] = fraction;
  res.metrics["minimum_rank_hits"] = static_cast<double>(minimum_hits);
  res.metrics["formula_failures"] = static_cast<double>(formula_misses);
  res.metrics["lower_bound_failures"] = static_cast<double>(floor_misses);
  if (fraction >= 0.02) res.fail("borderline fraction " + std::to_string(fraction) + " >= 2%");
  return res;
}

SuiteResult suite_equivariance(const SuiteConfig& config) {
  SuiteResult res;
  res.name = "equivariance";
  Rng rng(config.seed);
  const int samples = samples_or(config, 50);
  long vacuous = 0;
  for (const auto& theta_name : thetas_of(config))
    for (int n : ns_or(config, {1, 2, 3})) {
      const auto real = build_sl_realization(n);
      const auto theta = make_theta(theta_name, real);
      for (int s = 0; s < samples; ++s) {
        const CMatrix g = random_sl(n + 1, rng);
        const CMatrix h = random_torus(n + 1, rng);
        const auto r = verify_T_equivariance(g, h, theta, real);
        ++res.checks;
        vacuous += r.vacuous ? 1 : 0;
        res.residual(r.residual);
        if (r.residual >= config.tol.equivariance)
          res.fail(tag(theta_name, n) + ": equivariance residual " + std::to_string(r.residual));
      }
    }
  res.metrics["vacuous"] = static_cast<double>(vacuous);
  return res;
}

SuiteResult suite_tangency(const SuiteConfig& config) {
  SuiteResult res;
  res.name = "tangency";
  Rng rng(config.seed);
  const int samples = samples_or(config, 50);
  for (const auto& theta_name : thetas_of(config))
    for (int n : ns_or(config, {1, 2, 3})) {
      const auto real = build_sl_realization(n);
      const auto theta = make_theta(theta_name, real);
      for (int s = 0; s < samples; ++s) {
        const CMatrix g = random_sl(n + 1, rng);
        const auto pi = evaluate_bivector(g, theta, real, config.tol);
        const auto r = verify_tangency(pi, theta, real, config.tol);
        ++res.checks;
        res.residual(r.residual);
        if (r.residual >= config.tol.residual)
          res.fail(tag(theta_name, n) + ": tangency residual " + std::to_string(r.residual));
      }
    }
  return res;
}

SuiteResult suite_zero_locus(const SuiteConfig& config) {
  SuiteResult res;
  res.name = "zero-locus";
  Rng rng(config.seed);
  const int samples = samples_or(config, 10);
  double max_sigma = 0.0;
  std::uniform_int_distribution<int> pick(0, 1 << 20);
  for (int n : ns_or(config, {1, 2, 3})) {
    const auto real = build_sl_realization(n);
    const WeylGroup group(real.root_datum());
    const auto theta = Automorphism::identity(real);
    for (int l = 0; 2 * l <= n + 1; ++l)
      for (bool unipotent : {false, true}) {
        if (l == 0 && !unipotent) continue;  // l = 0 has a single (central) family
        const auto& m = m_l(group, l);
        for (int s = 0; s < samples; ++s) {
          Complex lambda;
          Complex lambda_prime;
          const int a = n + 1 - l;
          if (unipotent || l == 0) {
            lambda = std::polar(1.0, 2.0 * std::numbers::pi * (pick(rng) % (n + 1)) / (n + 1));
            lambda_prime = lambda;
          } else {
            lambda_prime = 1.5 * away_from_zero(rng);
            const Complex root = std::polar(1.0, 2.0 * std::numbers::pi * (pick(rng) % a) / a);
            lambda = std::pow(std::pow(lambda_prime, -l), 1.0 / a) * root;
          }
          std::vector<Complex> xs;
          for (int j = 0; j < l; ++j) xs.push_back(1.5 * away_from_zero(rng));
          const auto p = zero_locus_point(n, l, lambda, lambda_prime, xs);
          const auto pi = evaluate_bivector(p.g, theta, real, config.tol);
          const double top = pi.rank.singular_values.empty() ? 0.0 : pi.rank.singular_values.front();
          max_sigma = std::max(max_sigma, top);
          ++res.checks;
          std::ostringstream where;
          where << "n=" << n << " l=" << l << (unipotent ? " uni" : " ss");
          if (pi.rank.rank != 0 || top >= 1e-8) res.fail(where.str() + ": bivector does not vanish");
          try {
            if (!(bruhat_cell_of(p.g, group, config.tol) == m)) res.fail(where.str() + ": not in B m_l B_-");
            if (!(bruhat_bb_cell_of(p.g, group, config.tol) == m)) res.fail(where.str() + ": not in B m_l B");
          } catch (const NumericalQualityError& e) {
            res.fail(where.str() + ": " + e.what());
          }
        }
      }
  }
  res.residual(max_sigma);
  res.metrics["max_singular_value"] = max_sigma;
  return res;
}

SuiteResult suite_lemmas(const SuiteConfig& config) {
  SuiteResult res;
  res.name = "lemmas";
  auto one = [](std::size_t k) { return CartanOperator::identity(k); };

  // +-1 jump and the le-inv identity over S_4 and W(D4), every reflection.
  struct Case {
    RootDatum datum;
    std::vector<DiagramAut> thetas;
  };
  std::vector<Case> cases;
  cases.push_back({RootDatum::type_a(3), {DiagramAut::identity(3), DiagramAut::type_a_flip(3)}});
  cases.push_back({RootDatum::d4(), {DiagramAut::identity(4), d4_triality()}});
  for (const auto& c : cases) {
    const WeylGroup group(c.datum);
    for (const auto& theta : c.thetas)
      for (const auto& w : group.elements()) {
        const auto a = w_theta(w, theta);
        const std::size_t k = a.size();
        const int r_plus = rank(one(k) + a);
        for (int b = 0; b < c.datum.num_positive_roots(); ++b) {
          const auto s = CartanOperator{ExactMatrix(group.reflection(b).action), "s"};
          ++res.checks;
          if (std::abs(rank(one(k) + a * s) - r_plus) != 1)
            res.fail(c.datum.label() + " w=" + w.word_string() + ": rank jump is not +-1");
        }
        ++res.checks;
        const int lhs = rank(one(k) - a) - dim_ker(one(k) + a);
        if (lhs != rank(one(k) - a * a)) res.fail(c.datum.label() + " w=" + w.word_string() + ": le-inv identity");
        const ExactMatrix ker = exact_kernel((one(k) + a).matrix);
        const ExactMatrix im = (one(k) - a).matrix;
        ++res.checks;
        if (ker.cols() > 0 && exact_rank(im.hcat(ker)) != exact_rank(im))
          res.fail(c.datum.label() + " w=" + w.word_string() + ": ker(1+A) not inside im(1-A)");
      }
  }

  // Monotonicity and evenness of L and L' along Bruhat covers, S_2..S_5.
  for (int n = 1; n <= 4; ++n) {
    const WeylGroup group(RootDatum::type_a(n));
    for (const auto& theta : {DiagramAut::identity(n), DiagramAut::type_a_flip(n)}) {
      std::vector<int> l(group.order());
      std::vector<int> lp(group.order());
      for (const auto& w : group.elements()) {
        l[w.index] = L_theta(w, theta);
        lp[w.index] = L_theta_prime(w, theta);
      }
      for (auto [u, w] : group.covers()) {
        ++res.checks;
        const int d = l[w] - l[u];
        const int dp = lp[w] - lp[u];
        if (d < 0 || dp < 0 || d % 2 != 0 || dp % 2 != 0)
          res.fail("A" + std::to_string(n) + ": L or L' not monotone-even along a cover");
      }
      for (const auto& w : group.elements()) {
        ++res.checks;
        const auto a = w_theta(w, theta);
        if (lp[w.index] - l[w.index] != rank(one(a.size()) - a * a))
          res.fail("A" + std::to_string(n) + ": L' - L != rk(1 - (w theta)^2)");
      }
      // Min-rank step below m_l: L(w) = L(m_l) - 2 for every cover w < m_l.
      for (int ll = 1; 2 * ll <= n + 1; ++ll) {
        const auto& m = m_l(group, ll);
        if (!(group.twist(m, theta) == m)) continue;
        for (auto [u, w] : group.covers()) {
          if (w != m.index) continue;
          ++res.checks;
          if (l[u] != l[m.index] - 2) res.fail("A" + std::to_string(n) + ": min-rank step fails below m_l");
        }
      }
    }
  }

  // General inequality rk(1 + AS) >= rk(1 + A) - 1 for integer A and a reflection S.
  Rng rng(config.seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + trial % 4;
    ExactMatrix a(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a(i, j) = entry(rng);
    // S = 1 - 2 v v^T / (v^T v): reflection in a random integer vector.
    std::vector<Rational> v(k);
    Rational vv = 0;
    for (auto& x : v) {
      do x = entry(rng);
      while (x == 0);
      vv += x * x;
    }
    ExactMatrix s = ExactMatrix::identity(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) s(i, j) -= 2 * v[i] * v[j] / vv;
    const ExactMatrix id = ExactMatrix::identity(k);
    ++res.checks;
    if (exact_rank(id + a * s) < exact_rank(id + a) - 1) res.fail("rank inequality fails for a random matrix");
  }
  return res;
}

SuiteResult suite_double_iso(const SuiteConfig& config) {
  SuiteResult res;
  res.name = "double-iso";
  Rng rng(config.seed);
  const int sl2 = samples_or(config, 20);
  const int sl3 = std::max(5, sl2 / 4);
  for (auto [n, count] : {std::pair{1, sl2}, std::pair{2, sl3}}) {
    const auto single = build_sl_realization(n);
    const auto pair = build_product_realization(n, 2);
    const WeylGroup group(single.root_datum());
    const double at_identity =
        verify_double_iso(CMatrix::Identity(n + 1, n + 1), CMatrix::Identity(n + 1, n + 1), single, pair, group);
    ++res.checks;
    res.residual(at_identity);
    if (at_identity >= config.tol.residual) res.fail("SL(" + std::to_string(n + 1) + ") at (e, e)");
    for (int s = 0; s < count; ++s) {
      const double r = verify_double_iso(random_sl(n + 1, rng), random_sl(n + 1, rng), single, pair, group);
      ++res.checks;
      res.residual(r);
      if (r >= config.tol.residual)
        res.fail("SL(" + std::to_string(n + 1) + ")^2: residual " + std::to_string(r));
    }
  }
  return res;
}

namespace {

std::vector<std::pair<std::string, CMatrix>> sl2_classes() {
  CMatrix central = CMatrix::Identity(2, 2);
  CMatrix ss(2, 2);
  ss << 2.0, 0.0, 0.0, 0.5;
  CMatrix uni(2, 2);
  uni << 1.0, 1.0, 0.0, 1.0;
  return {{"central", central}, {"regular-ss", ss}, {"unipotent", uni}};
}

}  // namespace

SuiteResult suite_double_cells(const SuiteConfig& config) {
  SuiteResult res;
  res.name = "double-cells";
  Rng rng(config.seed);
  const int samples = samples_or(config, 20);
  const auto single = build_sl_realization(1);
  const auto pair = build_product_realization(1, 2);
  const WeylGroup group(single.root_datum());
  const auto id = Automorphism::identity(single);
  for (const auto& [name, rep] : sl2_classes()) {
    const auto c = analyze_class(rep, id, single, group, config.tol);
    for (const auto& u : group.elements())
      for (const auto& v : group.elements()) {
        const auto cell = double_cell(u, v, c, group);
        const std::string where = name + " u=" + u.cycle_string() + " v=" + v.cycle_string();
        for (int s = 0; s < samples; ++s) {
          try {
            const auto [k1, k2] = sample_double_cell_sl2(cell, c, group, rng, config.tol);
            const auto pi = evaluate_Pist(k1, k2, single, pair, config.tol);
            if (pi.rank.borderline) {
              ++res.excluded;
              continue;
            }
            ++res.checks;
            if (pi.rank.rank != cell.leaf_dim)
              res.fail(where + ": rank " + std::to_string(pi.rank.rank) + " != " + std::to_string(cell.leaf_dim));
          } catch (const DomainError& e) {
            res.fail(where + ": " + e.what());
          }
        }
        // Nonemptiness of the tuple cell (G^2, pair (u, v) read as (w1, w2)).
        ++res.checks;
        try {
          sample_tuple_cell_sl2(u, v, c, group, rng, config.tol);
        } catch (const DomainError& e) {
          res.fail(where + ": tuple cell: " + e.what());
        }
      }
  }
  // dim T_{u,v} = rk(1 - u v^{-1}), numerically on diagonal matrices.
  for (int n = 1; n <= 2; ++n) {
    const auto real = build_sl_realization(n);
    const WeylGroup g(real.root_datum());
    const auto theta = Automorphism::identity(real);
    CMatrix traceless(n + 1, n);
    for (int i = 0; i < n; ++i) traceless.col(i) = real.simple_coroot(i).diagonal();
    for (const auto& u : g.elements())
      for (const auto& v : g.elements()) {
        const auto& uv = g.multiply(u, g.inverse(v));
        const CMatrix d = torus_action(representative(uv), theta);
        const CMatrix op = (CMatrix::Identity(n + 1, n + 1) - d) * traceless;
        ++res.checks;
        const int exact = rank(CartanOperator::identity(n) - CartanOperator{ExactMatrix(uv.action), "uv"});
        if (numerical_rank(op, config.tol).rank != exact) res.fail("dim T_{u,v} disagrees with rk(1 - u v^{-1})");
      }
  }
  return res;
}

SuiteResult suite_spherical(const SuiteConfig& config) {
  SuiteResult res;
  res.name = "spherical";
  Rng rng(config.seed);
  std::uniform_int_distribution<int> pick(0, 1 << 20);
  const int non_spherical = samples_or(config, 5);
  for (int n : ns_or(config, {1, 2, 3})) {
    const auto real = build_sl_realization(n);
    const WeylGroup group(real.root_datum());
    const auto theta = Automorphism::identity(real);
    for (const auto& f : spherical_families(n, group)) {
      Complex lambda;
      if (f.kind == SphericalFamily::Kind::Unipotent)
        lambda = std::polar(1.0, 2.0 * std::numbers::pi * (pick(rng) % (n + 1)) / (n + 1));
      else
        lambda = 1.5 * away_from_zero(rng);
      const CMatrix g = random_conjugate(family_representative(f, lambda), rng);
      const auto c = analyze_class(g, theta, real, group, config.tol);
      ++res.checks;
      const std::string where = "n=" + std::to_string(n) + " " + f.name();
      if (!c.spherical || !*c.spherical) res.fail(where + ": criterion fails on a spherical family");
      if (c.dim_C != f.predicted_dim)
        res.fail(where + ": dim C " + std::to_string(c.dim_C) + " != " + std::to_string(f.predicted_dim));
      res.metrics["n" + std::to_string(n) + "_" + f.name() + "_dim"] = c.dim_C;
    }
    if (n < 2) continue;
    for (int s = 0; s < non_spherical; ++s) {
      const CMatrix d = random_distinct_eigenvalues(n + 1, rng).asDiagonal();
      const auto c = analyze_class(random_conjugate(d, rng), theta, real, group, config.tol);
      ++res.checks;
      if (!c.spherical || *c.spherical) res.fail("n=" + std::to_string(n) + ": regular semisimple class passes");
    }
  }
  return res;
}

SuiteResult suite_tuple_spherical(const SuiteConfig& config) {
  SuiteResult res;
  res.name = "tuple-spherical";
  Rng rng(config.seed);
  struct Setting {
    int n;
    int rank;
    bool central_expected;
  };
  for (const auto& st : {Setting{2, 1, true}, Setting{2, 2, true}, Setting{3, 2, false}, Setting{3, 1, true},
                         Setting{4, 1, false}}) {
    const auto real = build_sl_realization(st.rank);
    const WeylGroup group(real.root_datum());
    const auto id = Automorphism::identity(real);
    const int size = st.rank + 1;
    std::vector<std::pair<std::string, CMatrix>> reps;
    reps.emplace_back("central", CMatrix::Identity(size, size));
    for (const auto& f : spherical_families(st.rank, group))
      if (f.l > 0) reps.emplace_back(f.name(), family_representative(f, f.kind == SphericalFamily::Kind::Unipotent
                                                                                ? Complex(1.0)
                                                                                : Complex(1.5, 0.5)));
    reps.emplace_back("regular-ss", CMatrix(random_distinct_eigenvalues(size, rng).asDiagonal()));
    for (const auto& [name, rep] : reps) {
      const auto c = analyze_class(rep, id, real, group, config.tol);
      const auto cert = tuple_spherical_check(st.n, c, group);
      const bool expected = c.dim_C == 0 && st.central_expected;
      ++res.checks;
      const std::string where = "n=" + std::to_string(st.n) + " SL(" + std::to_string(size) + ") " + name;
      res.metrics[where + " dim"] = cert.dim;
      res.metrics[where + " rhs"] = cert.rhs;
      if (cert.spherical != expected)
        res.fail(where + ": spherical=" + (cert.spherical ? "true" : "false") + " (dim " + std::to_string(cert.dim) +
                 ", rhs " + std::to_string(cert.rhs) + ")");
    }
  }
  return res;
}

SuiteResult suite_d4(const SuiteConfig&) {
  SuiteResult res;
  res.name = "d4";
  const WeylGroup group(RootDatum::d4());
  const auto theta = d4_triality();
  const auto& m = group.multiply(group.longest(), group.simple_reflection(1));
  const auto a = w_theta(m, theta);
  const int len = m.length;
  const int r = rank(CartanOperator::identity(4) - a);
  const int r2 = rank_one_minus_theta_squared(theta);
  res.metrics["length"] = len;
  res.metrics["rank_one_minus_w_theta"] = r;
  res.metrics["rank_one_minus_theta_squared"] = r2;
  res.checks = 5;
  if (len != 11) res.fail("l(w0 s_2) = " + std::to_string(len));
  if (r != 3) res.fail("rk(1 - w0 s_2 theta) = " + std::to_string(r));
  if (len + r != 14) res.fail("sum != 14");
  if (r2 != 2) res.fail("rk(1 - theta^2) = " + std::to_string(r2));
  try {
    if (!(group.max_length_element(group.twisted_class(m, theta)) == m))
      res.fail("w0 s_2 is not the maximal element of its twisted class");
  } catch (const AmbiguityError& e) {
    res.fail(e.what());
  }
  return res;
}

SuiteResult suite_cells(const SuiteConfig& config) {
  SuiteResult res;
  res.name = "cells";
  Rng rng(config.seed);
  const int total = samples_or(config, 10000);
  const auto real = build_sl_realization(2);
  const WeylGroup group(real.root_datum());
  const auto id = Automorphism::identity(real);
  std::vector<std::pair<std::string, CMatrix>> reps;
  CMatrix ss1 = CMatrix::Identity(3, 3);
  ss1.diagonal() << 0.25, 2.0, 2.0;
  CMatrix uni1 = CMatrix::Identity(3, 3);
  uni1(0, 1) = 1.0;
  reps.emplace_back("ss:1", ss1);
  reps.emplace_back("uni:1", uni1);
  reps.emplace_back("regular-ss", CMatrix(random_distinct_eigenvalues(3, rng).asDiagonal()));
  long top = 0;
  const int per_class = (total + static_cast<int>(reps.size()) - 1) / static_cast<int>(reps.size());
  for (const auto& [name, rep] : reps) {
    const auto c = analyze_class(rep, id, real, group, config.tol);
    long class_top = 0;
    for (int s = 0; s < per_class; ++s) {
      const CMatrix g = random_conjugate(rep, rng);
      ++res.checks;
      try {
        const auto& w = bruhat_cell_of(g, group, config.tol);
        if (!group.bruhat_leq(w, *c.m_C)) res.fail(name + ": recovered " + w.cycle_string() + " not <= m_C");
        if (bruhat_bb_cell_of(g, group, config.tol) == *c.m_C) ++class_top;
      } catch (const NumericalQualityError& e) {
        res.fail(name + ": " + e.what());
      }
    }
    if (class_top == 0) res.fail(name + ": no sample in the m_C cell");
    res.metrics[name + "_top_cell"] = static_cast<double>(class_top);
    top += class_top;
  }
  res.metrics["top_cell"] = static_cast<double>(top);
  return res;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rank-formula", "equivariance", "tangency",        "zero-locus",
                                              "lemmas",       "double-iso",   "double-cells",    "spherical",
                                              "tuple-spherical", "d4",        "cells"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "rank-formula") return suite_rank_formula(config);
  if (name == "equivariance") return suite_equivariance(config);
  if (name == "tangency") return suite_tangency(config);
  if (name == "zero-locus") return suite_zero_locus(config);
  if (name == "lemmas") return suite_lemmas(config);
  if (name == "double-iso") return suite_double_iso(config);
  if (name == "double-cells") return suite_double_cells(config);
  if (name == "spherical") return suite_spherical(config);
  if (name == "tuple-spherical") return suite_tuple_spherical(config);
  if (name == "d4") return suite_d4(config);
  if (name == "cells") return suite_cells(config);
  throw ConfigurationError("unknown suite '" + name + "'");
}

}  // namespace tleaf
