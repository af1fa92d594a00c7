#include "ahm/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ahm/linalg.hpp"

namespace ahm {

namespace {

// w^k for k = 0..n-1, each computed directly from its angle.
std::vector<Complex> roots_of_unity(std::size_t n) {
  std::vector<Complex> w(n);
  for (std::size_t k = 0; k < n; ++k) {
    w[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  }
  return w;
}

std::vector<Complex> fourier_apply(std::span<const Complex> v, bool inverse) {
  const std::size_t n = v.size();
  if (n == 0) throw std::invalid_argument("DFT of an empty vector");
  const auto w = roots_of_unity(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = (i * j) % n;
      acc += (inverse ? std::conj(w[k]) : w[k]) * v[j];
    }
    out[i] = acc * norm;
  }
  return out;
}

std::vector<Complex> to_complex(std::span<const double> x) {
  return {x.begin(), x.end()};
}

// F^* M F as a dense complex matrix, row-major.
std::vector<Complex> fourier_conjugate(const SquareMatrix& m) {
  const std::size_t n = m.size();
  const auto w = roots_of_unity(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  // T = M F (unnormalized), then D = F^* T.
  std::vector<Complex> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t l = 0; l < n; ++l) acc += m(i, l) * w[(l * j) % n];
      t[i * n + j] = acc;
    }
  std::vector<Complex> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += std::conj(w[(k * i) % n]) * t[k * n + j];
      d[i * n + j] = acc * inv_n;
    }
  return d;
}

}  // namespace

std::vector<Complex> dft(std::span<const Complex> v) { return fourier_apply(v, false); }

std::vector<Complex> idft(std::span<const Complex> v) { return fourier_apply(v, true); }

SquareMatrix circulant_from_gamma(std::span<const double> gamma) {
  const std::size_t n = gamma.size();
  if (n == 0) throw std::invalid_argument("empty first row");
  SquareMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = gamma[(j + n - i) % n];
  return h;
}

// D_jj = sum_r w^{rj} gamma_r = sqrt(n) (F gamma)_j = sqrt(n) conj(alpha_j),
// which equals sqrt(n) alpha_{-j} whenever gamma is real.
std::vector<Complex> fourier_diagonal(const SquareMatrix& m) {
  const std::size_t n = m.size();
  const auto d = fourier_conjugate(m);
  std::vector<Complex> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = d[i * n + i];
  return diag;
}

double fourier_off_diagonal(const SquareMatrix& m) {
  const std::size_t n = m.size();
  const auto d = fourier_conjugate(m);
  double off = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off = std::max(off, std::abs(d[i * n + j]));
  return off;
}

bool is_fourier_diagonal(const SquareMatrix& m, double tol) {
  return fourier_off_diagonal(m) <= tol;
}

std::vector<Complex> alpha_from_gamma(std::span<const double> gamma) {
  const auto g = to_complex(gamma);
  return idft(g);
}

double modulus_residual(std::span<const Complex> alpha) {
  double r = 0.0;
  for (const auto& a : alpha) r = std::max(r, std::abs(std::abs(a) - 1.0));
  return r;
}

double conjugate_symmetry_residual(std::span<const Complex> alpha) {
  const std::size_t n = alpha.size();
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r = std::max(r, std::abs(std::conj(alpha[i]) - alpha[(n - i) % n]));
  }
  return r;
}

GammaFromAlpha gamma_from_alpha(std::span<const Complex> alpha, double tol) {
  const auto g = dft(alpha);
  GammaFromAlpha out;
  out.gamma.reserve(g.size());
  out.imag_residual = 0.0;
  for (const auto& z : g) {
    out.gamma.push_back(z.real());
    out.imag_residual = std::max(out.imag_residual, std::abs(z.imag()));
  }
  out.is_real = conjugate_symmetry_residual(alpha) <= tol;
  out.unimodular = modulus_residual(alpha) <= tol;
  return out;
}

CirculantSpec construct_prop24(std::size_t n, std::size_t r, int sign) {
  if (n < 1) throw std::invalid_argument("prop24 requires n >= 1");
  if (r >= n) throw std::invalid_argument("prop24 requires 0 <= r < n");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const auto w = roots_of_unity(n);
  CirculantSpec spec;
  spec.n = n;
  spec.alpha.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    spec.alpha[k] = static_cast<double>(sign) * (k == 0 ? Complex(1.0) : -w[(r * k) % n]);
  }
  // sqrt(n) gamma_i = sign * (2 - n [i == -r mod n])
  const double root = std::sqrt(static_cast<double>(n));
  const std::size_t spike = (n - r) % n;
  spec.gamma.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = 2.0 - (i == spike ? static_cast<double>(n) : 0.0);
    spec.gamma[i] = sign * v / root;
  }
  return spec;
}

CirculantSpec construct_L(std::size_t n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("L_N requires odd N >= 3, got " + std::to_string(n));
  }
  const std::size_t half = (n - 1) / 2;
  const double root = std::sqrt(static_cast<double>(n));
  CirculantSpec spec;
  spec.n = n;
  spec.alpha.resize(n);
  spec.gamma.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t e = i <= half ? half + i : half + i + 1;
    spec.alpha[i] = (e % 2 == 0) ? 1.0 : -1.0;
    const double sec = 1.0 / std::cos(static_cast<double>(i) * std::numbers::pi / static_cast<double>(n));
    spec.gamma[i] = (i % 2 == 0 ? sec : -sec) / root;
  }
  return spec;
}

double circulant_one_norm(std::span<const double> gamma) {
  double s = 0.0;
  for (double g : gamma) s += std::abs(g);
  return std::sqrt(static_cast<double>(gamma.size())) * s;
}

CirculantAhmResult circulant_ahm_check(std::span<const double> gamma, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t n = gamma.size();
  if (n == 0) throw std::invalid_argument("empty first row");
  const double root = std::sqrt(static_cast<double>(n));

  double max_abs_u = 0.0;
  for (double g : gamma) max_abs_u = std::max(max_abs_u, std::abs(g) / root);
  const double eff_tol = tol * static_cast<double>(n) * (max_abs_u > 0 ? max_abs_u : 1.0 / static_cast<double>(n));

  CirculantAhmDiagnostics d;
  const auto alpha = alpha_from_gamma(gamma);
  d.alpha_modulus_residual = modulus_residual(alpha);

  bool zero_entry = false;
  d.epsilon.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(gamma[i]) / root <= kDefaultZeroTol) {
      zero_entry = true;
      d.epsilon[i] = 0;
    } else {
      d.epsilon[i] = gamma[i] > 0 ? 1 : -1;
    }
  }

  d.rho.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r) d.rho[i] += d.epsilon[r] * gamma[(i + r) % n];

  d.nu = alpha_from_gamma(d.rho);
  d.rho_symmetry_residual = 0.0;
  d.nu_symmetry_residual = 0.0;
  d.nu_imag_max = 0.0;
  d.min_re_nu = kInfinity;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t mi = (n - i) % n;
    d.rho_symmetry_residual = std::max(d.rho_symmetry_residual, std::abs(d.rho[i] - d.rho[mi]));
    d.nu_symmetry_residual = std::max(d.nu_symmetry_residual, std::abs(d.nu[i] - d.nu[mi]));
    d.nu_imag_max = std::max(d.nu_imag_max, std::abs(d.nu[i].imag()));
    d.min_re_nu = std::min(d.min_re_nu, d.nu[i].real());
  }

  Verdict v;
  if (d.alpha_modulus_residual > eff_tol) {
    v = Verdict::NotOrthogonal;
  } else if (zero_entry) {
    v = Verdict::ZeroEntry;
  } else if (d.rho_symmetry_residual / root > eff_tol || d.min_re_nu < -eff_tol) {
    v = Verdict::NotPositive;
  } else if (d.min_re_nu <= eff_tol) {
    v = Verdict::Borderline;
  } else {
    v = Verdict::AlmostHadamard;
    const bool flat = std::all_of(gamma.begin(), gamma.end(), [&](double g) {
      return std::abs(std::abs(g) - 1.0) / root <= 1e-9;
    });
    if (flat) v = Verdict::Hadamard;
  }
  return {v, std::move(d)};
}

std::optional<std::size_t> alpha_square_progression(std::span<const Complex> alpha, double tol) {
  const std::size_t n = alpha.size();
  if (n == 0) return std::nullopt;
  const auto w = roots_of_unity(n);
  const Complex base = alpha[0] * alpha[0];
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = std::abs(alpha[i] * alpha[i] - base * w[(r * i) % n]) <= tol;
    }
    if (ok) return r;
  }
  return std::nullopt;
}

}  // namespace ahm
