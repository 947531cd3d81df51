#pragma once

#include <vector>

#include "tleaf/bivector.hpp"
#include "tleaf/classes.hpp"
#include "tleaf/sampling.hpp"

namespace tleaf {

/// g_1 g_2 ... g_n.
CMatrix mu_n(const std::vector<CMatrix>& tuple);

/// The twisted class of G^n (cyclic shift) lying over a class of G.
struct TupleClassDescriptor {
  int n = 0;
  ClassDescriptor base;
  int dim = 0;  // dim C + (n-1) dim G
};
TupleClassDescriptor tuple_class(const std::vector<CMatrix>& tuple, const MatrixRealization& real,
                                 const WeylGroup& group, const Tolerances& tol = {});
/// (g_1, ..., g_n) lies over C iff g_1 ... g_n is conjugate to the representative.
bool in_tuple_class(const std::vector<CMatrix>& tuple, const ClassDescriptor& c, const Tolerances& tol = {});

/// dim C + (n-1) dim G - sum l(w_i) - dim ker(1 - (-1)^n w_1 ... w_n).
int tuple_leaf_dim(int dim_C, const std::vector<WeylElement>& ws, const WeylGroup& group);

/// Index map from pair coordinates (g + g, one basis copy per summand) to
/// the coordinates of the two-factor product realization.
CMatrix pair_embedding(const MatrixRealization& single, const MatrixRealization& pair);

/// Pi_st = R^r - R^l at (g1, g2), right-trivialized over the product realization.
TrivializedBivector evaluate_Pist(const CMatrix& g1, const CMatrix& g2, const MatrixRealization& single,
                                  const MatrixRealization& pair, const Tolerances& tol = {});

/// Compares the pushforward of pi for the swap automorphism under
/// (g1, g2) -> (g1 w0^{-1}, g2^{-1} w0^{-1}) with Pi_st at the image point.
/// Returns the relative Frobenius residual.
double verify_double_iso(const CMatrix& g1, const CMatrix& g2, const MatrixRealization& single,
                         const MatrixRealization& pair, const WeylGroup& group);

struct DoubleCellDescriptor {
  WeylElement u;
  WeylElement v;
  int dim_C = 0;
  int cell_dim = 0;   // dim C + l(u) + l(v) + dim T
  int leaf_dim = 0;   // dim C + l(u) + l(v) + rk(1 - u v^{-1})
  int torus_dim = 0;  // rk(1 - u v^{-1})
};
DoubleCellDescriptor double_cell(const WeylElement& u, const WeylElement& v, const ClassDescriptor& c,
                                 const WeylGroup& group);

struct DoubleCellPoint {
  CMatrix h_u;        // h_u(k1)
  CMatrix h_prime_v;  // h'_v(k2)
};
/// Checks k1 in B u B, k2 in B_- v B_-, k1 k2^{-1} in C and computes the torus
/// projections. Throws DomainError when a membership fails.
DoubleCellPoint double_cell_membership(const CMatrix& k1, const CMatrix& k2, const DoubleCellDescriptor& cell,
                                       const ClassDescriptor& c, const WeylGroup& group, const Tolerances& tol = {});

/// Constructive sample of G^{u,v}_C for G = SL(2).
std::pair<CMatrix, CMatrix> sample_double_cell_sl2(const DoubleCellDescriptor& cell, const ClassDescriptor& c,
                                                   const WeylGroup& group, Rng& rng, const Tolerances& tol = {});

/// (g1, g2) with g_i in B w_i B_- and g1 g2 in C, for G = SL(2).
std::pair<CMatrix, CMatrix> sample_tuple_cell_sl2(const WeylElement& w1, const WeylElement& w2,
                                                  const ClassDescriptor& c, const WeylGroup& group, Rng& rng,
                                                  const Tolerances& tol = {});

struct TupleSphericalCertificate {
  bool spherical = false;
  int dim = 0;  // dim of the class in G^n
  int rhs = 0;  // n l(w0) + rk(1 - (w0, ..., w0) theta~)
};
TupleSphericalCertificate tuple_spherical_check(int n, const ClassDescriptor& c, const WeylGroup& group);

}  // namespace tleaf
