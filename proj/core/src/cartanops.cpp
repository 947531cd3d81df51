#include "tleaf/cartanops.hpp"

#include "tleaf/errors.hpp"

namespace tleaf {

CartanOperator CartanOperator::operator*(const CartanOperator& o) const {
  return {matrix * o.matrix, "(" + provenance + ")(" + o.provenance + ")"};
}
CartanOperator CartanOperator::operator+(const CartanOperator& o) const {
  return {matrix + o.matrix, provenance + " + " + o.provenance};
}
CartanOperator CartanOperator::operator-(const CartanOperator& o) const {
  return {matrix - o.matrix, provenance + " - " + o.provenance};
}
CartanOperator CartanOperator::operator-() const { return {-matrix, "-(" + provenance + ")"}; }

CartanOperator CartanOperator::identity(std::size_t k) { return {ExactMatrix::identity(k), "1"}; }

CartanOperator theta_operator(const DiagramAut& theta) { return {ExactMatrix(theta.matrix()), "theta"}; }

CartanOperator w_theta(const WeylElement& w, const DiagramAut& theta) {
  if (w.action.rows() != static_cast<std::size_t>(theta.rank()))
    throw DomainError("w and theta act on Cartan subalgebras of different rank");
  return {ExactMatrix(w.action * theta.matrix()), w.cycle_string() + " theta"};
}

int dim_ker(const CartanOperator& a) { return exact_dim_ker(a.matrix); }
int rank(const CartanOperator& a) { return exact_rank(a.matrix); }

int L_theta(const WeylElement& w, const DiagramAut& theta) {
  const auto a = w_theta(w, theta);
  return w.length + dim_ker(CartanOperator::identity(a.size()) + a);
}

int L_theta_prime(const WeylElement& w, const DiagramAut& theta) {
  const auto a = w_theta(w, theta);
  return w.length + rank(CartanOperator::identity(a.size()) - a);
}

int rank_one_minus_theta_squared(const DiagramAut& theta) {
  const auto t = theta_operator(theta);
  const int r = rank(CartanOperator::identity(t.size()) - t * t);
  if (r % 2 != 0) throw Error("rk(1 - theta^2) came out odd: " + std::to_string(r));
  return r;
}

}  // namespace tleaf
