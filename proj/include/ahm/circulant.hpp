#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ahm/matrix.hpp"
#include "ahm/verify.hpp"

namespace ahm {

using Complex = std::complex<double>;

// Conventions. A circulant matrix is H_ij = gamma_{(j - i) mod n}, so gamma is
// its first row. F is the Fourier matrix F_ij = w^{ij}/sqrt(n), w = exp(2 pi i/n),
// and the spectral vector is alpha = F^* gamma, i.e. gamma = F alpha.
// U = H/sqrt(n) is orthogonal iff every |alpha_i| = 1.

/// First row gamma of H (real) together with its spectral vector alpha.
struct CirculantSpec {
  std::size_t n = 0;
  std::vector<double> gamma;
  std::vector<Complex> alpha;
};

/// (F v)_i = n^{-1/2} sum_j w^{ij} v_j. Direct O(n^2) evaluation.
std::vector<Complex> dft(std::span<const Complex> v);
/// F^* v, the inverse of dft.
std::vector<Complex> idft(std::span<const Complex> v);

SquareMatrix circulant_from_gamma(std::span<const double> gamma);

/// Diagonal of F^* M F. For a circulant with first row gamma this is
/// sqrt(n) * alpha_{-j}; see circulant.cpp.
std::vector<Complex> fourier_diagonal(const SquareMatrix& m);

/// Max-abs off-diagonal entry of F^* M F.
double fourier_off_diagonal(const SquareMatrix& m);

/// True iff F^* M F is diagonal within tol, which holds iff M is circulant.
bool is_fourier_diagonal(const SquareMatrix& m, double tol = 1e-10);

std::vector<Complex> alpha_from_gamma(std::span<const double> gamma);

struct GammaFromAlpha {
  std::vector<double> gamma;  // real part of F alpha
  double imag_residual;       // max |Im (F alpha)_i|
  bool is_real;               // conj(alpha_i) == alpha_{-i} within tolerance
  bool unimodular;            // |alpha_i| == 1 within tolerance
};

GammaFromAlpha gamma_from_alpha(std::span<const Complex> alpha, double tol = 1e-9);

/// max_i ||alpha_i| - 1|.
double modulus_residual(std::span<const Complex> alpha);
/// max_i |conj(alpha_i) - alpha_{-i}|.
double conjugate_symmetry_residual(std::span<const Complex> alpha);

/// alpha = sign * (1, -q, -q^2, ..., -q^{n-1}) with q = w^r. The matrix is
/// sign * sqrt(n) (2 J_n - C_n^{-r}), equivalent to K_n. `sign` is +1 or -1.
CirculantSpec construct_prop24(std::size_t n, std::size_t r, int sign = 1);

/// The circulant L_N for odd N >= 3: gamma_i = (-1)^i sec(i pi/N) / sqrt(N),
/// with alpha entries all +-1. Throws for even N.
CirculantSpec construct_L(std::size_t n);

/// ||U||_1 for U = circulant(gamma)/sqrt(n), without forming the matrix.
double circulant_one_norm(std::span<const double> gamma);

struct CirculantAhmDiagnostics {
  std::vector<int> epsilon;       // sgn gamma (0 where gamma vanishes)
  std::vector<double> rho;        // rho_i = sum_r eps_r gamma_{i+r}
  std::vector<Complex> nu;        // F^* rho: the spectrum of S^t U
  double alpha_modulus_residual;  // max ||alpha_i| - 1|
  double rho_symmetry_residual;   // max |rho_i - rho_{-i}|
  double nu_symmetry_residual;    // max |nu_i - nu_{-i}|
  double nu_imag_max;             // max |Im nu_i|
  double min_re_nu;
};

struct CirculantAhmResult {
  Verdict verdict;
  CirculantAhmDiagnostics diagnostics;
};

/// Circulant almost-Hadamard test on the first row gamma of H: alpha must be
/// unimodular, rho symmetric (so nu is real) and Re nu > 0. Uses the same scaled
/// tolerance and verdict ladder as check_ahm, so the two agree on
/// circulant_from_gamma(gamma).
CirculantAhmResult circulant_ahm_check(std::span<const double> gamma, double tol = kDefaultTol);

/// Returns r if alpha_i^2 = alpha_0^2 w^{r i} for all i, i.e. alpha^2 is a
/// progression of roots of unity. Diagnostic only.
std::optional<std::size_t> alpha_square_progression(std::span<const Complex> alpha,
                                                    double tol = 1e-9);

inline constexpr std::size_t kCirculantSearchBudget = 28;

/// All gamma in {+-1}^n whose circulant is Hadamard (H H^t = n I), sorted by the
/// bitmask of -1 positions. Exhaustive; rejects n > kCirculantSearchBudget.
/// Every candidate is tested both through periodic autocorrelations and through
/// the set condition |S cap (S + k)| = |S| - n/4; a disagreement throws.
std::vector<std::vector<int>> search_circulant_hadamard(std::size_t n);

}  // namespace ahm
