#pragma once

#include <random>
#include <vector>

#include "tleaf/numerics.hpp"
#include "tleaf/weylgroup.hpp"

namespace tleaf {

using Rng = std::mt19937_64;

/// Signed permutation matrix with column j equal to +-e_{perm[j]}; the
/// first column is negated when needed to make the determinant 1.
CMatrix permutation_representative(const std::vector<int>& perm);
/// Type A representative of w in N_G(T).
CMatrix representative(const WeylElement& w);

/// Uniform in the square [-1, 1] + i[-1, 1].
Complex random_unit_box(Rng& rng);
/// Random element of SL(N): unit-box entries rescaled to determinant 1.
CMatrix random_sl(int size, Rng& rng);
/// Diagonal element of SL(N) with moduli in [1/2, 2] before the determinant fix.
CMatrix random_torus(int size, Rng& rng);
/// Random element of N^w = N cap w N w^{-1}.
CMatrix random_n_w(const std::vector<int>& perm, Rng& rng);
/// Random element of N_-.
CMatrix random_lower_unipotent(int size, Rng& rng);
/// h g h^{-1} with h random in SL(N).
CMatrix random_conjugate(const CMatrix& g, Rng& rng);

/// g = n w_dot t m with n in N^w, t in T, m in N_-.
struct CellSample {
  CMatrix g;
  CMatrix n;
  CMatrix t;
  CMatrix m;
  CMatrix w_dot;
};
/// Constructive sample of B w B_- (never rejection).
CellSample sample_in_cell(const WeylElement& w, Rng& rng);

}  // namespace tleaf
