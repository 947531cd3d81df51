#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tleaf/exact.hpp"
#include "tleaf/numerics.hpp"

namespace tleaf {

enum class RootType { A, D4, Product };

/// A positive root as its expansion in simple roots (non-negative integers).
struct PositiveRoot {
  std::vector<int> coeffs;
  int height() const;
};

/// Simply-laced root system together with its positive roots and Cartan
/// matrix. Entry (i, j) of the Cartan matrix is <alpha_i^vee, alpha_j>.
class RootDatum {
 public:
  static RootDatum type_a(int n);
  static RootDatum d4();
  /// Orthogonal sum, used for G^n. Simple roots of factor f occupy
  /// indices [f*k, (f+1)*k).
  static RootDatum product(const std::vector<RootDatum>& factors);

  RootType type() const { return type_; }
  const std::string& label() const { return label_; }
  int rank() const { return static_cast<int>(cartan_.rows()); }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }
  int longest_element_length() const { return num_positive_roots(); }
  /// For type A_n, or a product of copies of one A_n: n. Zero otherwise.
  int type_a_n() const { return a_n_; }
  int factor_count() const { return factors_; }

  /// Bilinear form on the root lattice, (alpha_i, alpha_j) = cartan(i, j) (simply laced).
  long long pairing(const std::vector<long long>& a, const std::vector<long long>& b) const;
  /// Index of a positive root with the given coefficients, or -1.
  int find_positive(const std::vector<long long>& coeffs) const;

 private:
  RootType type_ = RootType::A;
  std::string label_;
  IntMatrix cartan_;
  std::vector<PositiveRoot> positive_;
  int a_n_ = 0;
  int factors_ = 1;
};

/// `type_label` is "A" (n >= 1) or "D4" (n ignored).
RootDatum build_root_datum(std::string_view type_label, int n);

/// Concrete realization of sl(N)^copies as block-diagonal complex matrices.
///
/// Basis ordering: y_1..y_k (Cartan part, orthonormal for 2 tr(XY)),
/// then E_alpha for the positive roots, then E_{-alpha} in the same order.
/// For a single block E_{alpha_ij} = e_ij and E_{-alpha_ij} = e_ji (i < j),
/// so <E_alpha, E_-alpha> = tr(e_ij e_ji) = 1.
class MatrixRealization {
 public:
  MatrixRealization(int n, int copies);

  int n() const { return n_; }
  int block_size() const { return n_ + 1; }
  int copies() const { return copies_; }
  int matrix_size() const { return (n_ + 1) * copies_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int cartan_dim() const { return n_ * copies_; }
  int num_positive() const { return static_cast<int>(roots_.size()); }

  const RootDatum& root_datum() const { return datum_; }
  const std::vector<CMatrix>& basis() const { return basis_; }
  const CMatrix& y(int i) const { return basis_[i]; }
  const CMatrix& e_pos(int a) const { return basis_[cartan_dim() + a]; }
  const CMatrix& e_neg(int a) const { return basis_[cartan_dim() + num_positive() + a]; }
  int y_index(int i) const { return i; }
  int pos_index(int a) const { return cartan_dim() + a; }
  int neg_index(int a) const { return cartan_dim() + num_positive() + a; }

  /// Matrix position (row, col) of E_alpha for positive root a (global indices).
  std::pair<int, int> root_position(int a) const { return roots_[a]; }
  /// Simple coroot e_ii - e_{i+1,i+1} of simple root i (global index).
  CMatrix simple_coroot(int i) const;

  /// Trace form <X, Y> = tr(XY).
  static Complex form(const CMatrix& x, const CMatrix& y) { return (x * y).trace(); }

  /// Coefficients of v over the basis. Throws DomainError when v is not in
  /// the algebra (not traceless per block, or nonzero outside the blocks).
  CVector coordinates(const CMatrix& v) const;
  CMatrix reconstruct(const CVector& c) const;

  /// Matrix (dim x dim) of X -> g X g^{-1} in basis coordinates.
  CMatrix adjoint(const CMatrix& g) const;
  /// Matrix of an arbitrary linear map on the algebra, given as a callable.
  template <typename F>
  CMatrix linear_map(F&& f) const {
    CMatrix out(dim(), dim());
    for (int b = 0; b < dim(); ++b) out.col(b) = coordinates(f(basis_[b]));
    return out;
  }
  /// Gram matrix of the trace form on the basis.
  CMatrix gram() const;

 private:
  int n_;
  int copies_;
  RootDatum datum_;
  std::vector<CMatrix> basis_;
  std::vector<std::pair<int, int>> roots_;
};

MatrixRealization build_sl_realization(int n);
MatrixRealization build_product_realization(int n, int copies);

}  // namespace tleaf
