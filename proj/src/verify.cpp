#include "ahm/verify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ahm/linalg.hpp"

namespace ahm {

namespace {

constexpr std::size_t kMaxReportedSpectrum = 32;

// S U^t with S = sgn(U) given as a matrix.
SquareMatrix sign_times_transpose(const SignMatrix& s, const SquareMatrix& u) {
  const std::size_t n = u.size();
  SquareMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += s(i, k) * u(j, k);
      r(i, j) = acc;
    }
  return r;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::AlmostHadamard: return "AlmostHadamard";
    case Verdict::Hadamard: return "Hadamard";
    case Verdict::NotOrthogonal: return "NotOrthogonal";
    case Verdict::ZeroEntry: return "ZeroEntry";
    case Verdict::NotPositive: return "NotPositive";
    case Verdict::Borderline: return "Borderline";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view s) {
  for (auto v : {Verdict::AlmostHadamard, Verdict::Hadamard, Verdict::NotOrthogonal,
                 Verdict::ZeroEntry, Verdict::NotPositive, Verdict::Borderline}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

bool is_pass(Verdict v) { return v == Verdict::AlmostHadamard || v == Verdict::Hadamard; }

double scaled_tolerance(const SquareMatrix& u, double tol) {
  const double scale = static_cast<double>(u.size()) * u.max_abs();
  return tol * (scale > 0.0 ? scale : 1.0);
}

AhmReport check_ahm(const SquareMatrix& h, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t n = h.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  const double nn = static_cast<double>(n);
  const SquareMatrix u = (1.0 / std::sqrt(nn)) * h;
  const double eff_tol = scaled_tolerance(u, tol);

  AhmReport rep;
  rep.n = n;
  rep.one_norm_of_U = one_norm(u);
  rep.cauchy_schwarz_gap = nn * std::sqrt(nn) - rep.one_norm_of_U;
  rep.orthogonality_residual = is_orthogonal(u, eff_tol).residual;
  rep.sut_min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  rep.sut_asymmetry = std::numeric_limits<double>::quiet_NaN();

  try {
    const SignMatrix s = sign_matrix(u, kDefaultZeroTol);
    const SquareMatrix sut = sign_times_transpose(s, u);
    const auto eig = symmetric_eigen(sut, false);
    rep.sut_min_eigenvalue = eig.values.front();
    rep.sut_asymmetry = max_abs_diff(sut, transpose(sut));
    if (n <= kMaxReportedSpectrum) rep.sut_eigenvalues = eig.values;
  } catch (const ZeroEntryError&) {
    rep.has_zero_entry = true;
  }

  if (rep.orthogonality_residual > eff_tol) {
    rep.verdict = Verdict::NotOrthogonal;
  } else if (rep.has_zero_entry) {
    rep.verdict = Verdict::ZeroEntry;
  } else if (rep.sut_asymmetry > eff_tol || rep.sut_min_eigenvalue < -eff_tol) {
    rep.verdict = Verdict::NotPositive;
  } else if (rep.sut_min_eigenvalue <= eff_tol) {
    rep.verdict = Verdict::Borderline;
  } else {
    rep.verdict = Verdict::AlmostHadamard;
    const double flat = 1.0 / std::sqrt(nn);
    bool flat_entries = true;
    for (double v : u.entries()) {
      if (std::abs(std::abs(v) - flat) > 1e-9) {
        flat_entries = false;
        break;
      }
    }
    if (flat_entries) rep.verdict = Verdict::Hadamard;
  }
  return rep;
}

CriticalPointCheck critical_point_check(const SquareMatrix& u, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const SignMatrix s = sign_matrix(u, kDefaultZeroTol);
  const SquareMatrix sut = sign_times_transpose(s, u);
  const double asym = max_abs_diff(sut, transpose(sut));
  return {asym <= tol, asym};
}

}  // namespace ahm
