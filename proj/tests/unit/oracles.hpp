// Independent reference computations used to freeze expected values.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "tleaf/exact.hpp"
#include "tleaf/numerics.hpp"

namespace oracle {

inline int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

// Tableau criterion: u <= w iff #{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j} for all i, j.
inline bool bruhat_leq(const std::vector<int>& u, const std::vector<int>& w) {
  const int n = static_cast<int>(u.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int cu = 0, cw = 0;
      for (int a = 0; a <= i; ++a) {
        cu += u[a] >= j;
        cw += w[a] >= j;
      }
      if (cu > cw) return false;
    }
  return true;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline std::vector<int> invert(const std::vector<int>& a) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

// Reduced row echelon form over Q.
inline int rref_rank(tleaf::ExactMatrix m) {
  int rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < static_cast<int>(m.rows()); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
    const tleaf::Rational p = m(rank, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(rank, j) /= p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == static_cast<std::size_t>(rank) || m(i, col) == 0) continue;
      const tleaf::Rational f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

// dim of the gl(N) centralizer from the Kronecker form of X -> Xg - gX.
inline int centralizer_dim(const tleaf::CMatrix& g) {
  const auto n = g.rows();
  const tleaf::CMatrix id = tleaf::CMatrix::Identity(n, n);
  const tleaf::CMatrix op = Eigen::kroneckerProduct(g.transpose(), id) - Eigen::kroneckerProduct(id, g);
  Eigen::JacobiSVD<tleaf::CMatrix> svd(op);
  const auto& s = svd.singularValues();
  const double cut = 1e-8 * std::max(1.0, s(0));
  int kernel = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) kernel += s(i) < cut;
  return kernel;
}

inline int svd_rank(const tleaf::CMatrix& a, double rel = 1e-8) {
  Eigen::JacobiSVD<tleaf::CMatrix> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0;
  const double cut = rel * std::max(1.0, s(0));
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) r += s(i) >= cut;
  return r;
}

}  // namespace oracle
