#include "tleaf/sampling.hpp"

#include <cmath>
#include <numbers>

#include "tleaf/errors.hpp"

namespace tleaf {

CMatrix permutation_representative(const std::vector<int>& perm) {
  const int size = static_cast<int>(perm.size());
  CMatrix p = CMatrix::Zero(size, size);
  for (int j = 0; j < size; ++j) p(perm[j], j) = 1.0;
  if (inversion_count(perm) % 2 == 1) p.col(0) *= -1.0;
  return p;
}

CMatrix representative(const WeylElement& w) {
  if (w.permutation.empty()) throw DomainError("matrix representatives exist for type A elements only");
  return permutation_representative(w.permutation);
}

Complex random_unit_box(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  const double im = u(rng);
  return {re, im};
}

CMatrix random_sl(int size, Rng& rng) {
  for (;;) {
    CMatrix g(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) g(i, j) = random_unit_box(rng);
    const Complex det = g.determinant();
    if (std::abs(det) < 1e-3) continue;
    return g / std::pow(det, 1.0 / size);
  }
}

CMatrix random_torus(int size, Rng& rng) {
  std::uniform_real_distribution<double> mod(0.5, 2.0);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
  CVector d(size);
  for (int i = 0; i < size; ++i) {
    const double r = mod(rng);
    d(i) = std::polar(r, arg(rng));
  }
  d /= std::pow(d.prod(), 1.0 / size);
  return d.asDiagonal();
}

CMatrix random_n_w(const std::vector<int>& perm, Rng& rng) {
  const int size = static_cast<int>(perm.size());
  std::vector<int> inv(size);
  for (int j = 0; j < size; ++j) inv[perm[j]] = j;
  CMatrix n = CMatrix::Identity(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (inv[i] < inv[j]) n(i, j) = random_unit_box(rng);
  return n;
}

CMatrix random_lower_unipotent(int size, Rng& rng) {
  CMatrix m = CMatrix::Identity(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < i; ++j) m(i, j) = random_unit_box(rng);
  return m;
}

CMatrix random_conjugate(const CMatrix& g, Rng& rng) {
  const CMatrix h = random_sl(static_cast<int>(g.rows()), rng);
  return h * g * h.inverse();
}

CellSample sample_in_cell(const WeylElement& w, Rng& rng) {
  CellSample s;
  const int size = static_cast<int>(w.permutation.size());
  if (size == 0) throw DomainError("cell sampling is implemented for type A");
  s.w_dot = representative(w);
  s.n = random_n_w(w.permutation, rng);
  s.t = random_torus(size, rng);
  s.m = random_lower_unipotent(size, rng);
  s.g = s.n * s.w_dot * s.t * s.m;
  return s;
}

}  // namespace tleaf
