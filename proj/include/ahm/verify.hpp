#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ahm/matrix.hpp"

namespace ahm {

inline constexpr double kDefaultTol = 1e-9;

enum class Verdict { AlmostHadamard, Hadamard, NotOrthogonal, ZeroEntry, NotPositive, Borderline };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// True for AlmostHadamard and Hadamard.
bool is_pass(Verdict v);

struct AhmReport {
  std::size_t n = 0;
  double orthogonality_residual = 0.0;
  bool has_zero_entry = false;
  double sut_min_eigenvalue = 0.0;  // NaN when S is undefined (zero entries)
  double sut_asymmetry = 0.0;       // NaN when S is undefined
  double one_norm_of_U = 0.0;
  double cauchy_schwarz_gap = 0.0;  // n sqrt(n) - ||U||_1
  Verdict verdict = Verdict::NotOrthogonal;
  // Spectrum of the symmetric part of S U^t, ascending; filled only for n <= 32.
  std::vector<double> sut_eigenvalues;
};

/// The tolerance actually used by check_ahm: tol * n * max|U_ij|.
double scaled_tolerance(const SquareMatrix& u, double tol);

/// Decides whether H is almost Hadamard, i.e. U = H/sqrt(n) is orthogonal,
/// has no zero entries, and S U^t > 0 for S = sgn(U). Never throws on bad input
/// matrices; every failure is a verdict.
///
/// Ladder: NotOrthogonal -> ZeroEntry -> NotPositive | Borderline ->
/// AlmostHadamard -> Hadamard (when every |U_ij| = 1/sqrt(n)). Positivity means a
/// positive self-adjoint S U^t: asymmetry beyond the tolerance is NotPositive,
/// otherwise the symmetric part's smallest eigenvalue decides.
AhmReport check_ahm(const SquareMatrix& h, double tol = kDefaultTol);

struct CriticalPointCheck {
  bool is_critical;
  double asymmetry;  // max |S U^t - U S^t|
};

/// First-order criticality of U for the 1-norm on O(n): S U^t must be symmetric.
/// Throws ZeroEntryError if U has zero entries.
CriticalPointCheck critical_point_check(const SquareMatrix& u, double tol = kDefaultTol);

}  // namespace ahm
