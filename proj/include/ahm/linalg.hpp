#pragma once

#include <limits>
#include <span>
#include <vector>

#include "ahm/matrix.hpp"

namespace ahm {

inline constexpr double kDefaultZeroTol = 1e-12;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Sum of absolute values of all entries.
double one_norm(const SquareMatrix& m);

/// Entrywise p-norm; p = kInfinity gives the max-abs entry. Throws for p < 1.
double p_norm(const SquareMatrix& m, double p);

struct OrthogonalityCheck {
  bool orthogonal;
  double residual;  // max |M M^t - I|
};

OrthogonalityCheck is_orthogonal(const SquareMatrix& m, double tol);

/// Entrywise sign. Throws ZeroEntryError when some |m_ij| <= zero_tol.
SignMatrix sign_matrix(const SquareMatrix& m, double zero_tol = kDefaultZeroTol);

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  SquareMatrix vectors;        // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi eigensolver. Only the symmetric part of `m` is used.
SymmetricEigen symmetric_eigen(const SquareMatrix& m, bool want_vectors = true);

struct PositivityCheck {
  bool positive;
  double min_eigenvalue;  // of (M + M^t)/2
  double asymmetry;       // max |M - M^t|
};

/// Tests the symmetric part for positive definiteness (min eigenvalue > tol).
PositivityCheck is_positive_definite(const SquareMatrix& m, double tol);

struct DeterminantBound {
  double det;         // |det H|; may overflow to inf for large n, see log_abs_det
  double log_abs_det;
  double bound;       // n^(n/2)
  bool saturated;     // |det H| == bound within relative 1e-9
};

DeterminantBound det_bound_check(const SquareMatrix& h);

/// Kronecker product, (A (x) B)[i*nB + k][j*nB + l] = A_ij * B_kl.
SquareMatrix tensor_product(const SquareMatrix& a, const SquareMatrix& b);

/// Applies the moves left to right. Throws std::out_of_range for bad indices.
SquareMatrix apply_equivalence(const SquareMatrix& m, std::span<const EquivalenceMove> moves);

/// K_N = sqrt(N) (2 J_N - 1_N), J_N the flat matrix with entries 1/N.
SquareMatrix construct_K(std::size_t n);

/// Walsh matrix H_2^{(x) k} of order 2^k, entries +-1.
SquareMatrix construct_walsh(unsigned k);

/// Orthogonal polar factor Y (Y^t Y)^{-1/2}. Throws if Y is numerically singular.
SquareMatrix polar_factor(const SquareMatrix& y);

}  // namespace ahm
