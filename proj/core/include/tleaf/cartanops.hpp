#pragma once

#include <string>

#include "tleaf/exact.hpp"
#include "tleaf/weylgroup.hpp"

namespace tleaf {

/// Exact operator on h (equivalently h^*, the two are identified by the
/// invariant form) written in the simple-root basis.
struct CartanOperator {
  ExactMatrix matrix;
  std::string provenance;

  std::size_t size() const { return matrix.rows(); }
  CartanOperator operator*(const CartanOperator& o) const;
  CartanOperator operator+(const CartanOperator& o) const;
  CartanOperator operator-(const CartanOperator& o) const;
  CartanOperator operator-() const;
  static CartanOperator identity(std::size_t k);
};

/// The composite w o theta.
CartanOperator w_theta(const WeylElement& w, const DiagramAut& theta);
CartanOperator theta_operator(const DiagramAut& theta);

int dim_ker(const CartanOperator& a);
int rank(const CartanOperator& a);

/// l(w) + dim ker(1 + w theta).
int L_theta(const WeylElement& w, const DiagramAut& theta);
/// l(w) + rk(1 - w theta).
int L_theta_prime(const WeylElement& w, const DiagramAut& theta);
/// rk(1 - theta^2); always even.
int rank_one_minus_theta_squared(const DiagramAut& theta);

}  // namespace tleaf
