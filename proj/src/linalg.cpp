#include "ahm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ahm {

double one_norm(const SquareMatrix& m) {
  double s = 0.0;
  for (double v : m.entries()) s += std::abs(v);
  return s;
}

double p_norm(const SquareMatrix& m, double p) {
  if (std::isnan(p) || p < 1.0) throw std::invalid_argument("p-norm requires p >= 1");
  if (std::isinf(p)) return m.max_abs();
  if (p == 1.0) return one_norm(m);
  // Scale by the max entry so large p does not overflow.
  const double scale = m.max_abs();
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double v : m.entries()) s += std::pow(std::abs(v) / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

OrthogonalityCheck is_orthogonal(const SquareMatrix& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t n = m.size();
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto ri = m.row(i);
    for (std::size_t j = i; j < n; ++j) {
      auto rj = m.row(j);
      double dot = std::inner_product(ri.begin(), ri.end(), rj.begin(), 0.0);
      if (i == j) dot -= 1.0;
      residual = std::max(residual, std::abs(dot));
    }
  }
  return {residual <= tol, residual};
}

SignMatrix sign_matrix(const SquareMatrix& m, double zero_tol) {
  if (zero_tol < 0.0) throw std::invalid_argument("zero_tol must be non-negative");
  const std::size_t n = m.size();
  std::vector<std::int8_t> s(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = m(i, j);
      if (std::abs(v) <= zero_tol) throw ZeroEntryError(i, j, v);
      s[i * n + j] = v > 0.0 ? 1 : -1;
    }
  }
  return SignMatrix(n, std::move(s));
}

SymmetricEigen symmetric_eigen(const SquareMatrix& m, bool want_vectors) {
  const std::size_t n = m.size();
  SquareMatrix a = symmetric_part(m);
  SquareMatrix v = want_vectors ? SquareMatrix::identity(n) : SquareMatrix{};

  double frob = 0.0;
  for (double x : a.entries()) frob += x * x;
  frob = std::sqrt(frob);
  const double threshold = 1e-12 * std::max(frob, std::numeric_limits<double>::min());

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() >= threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v(k, p);
            const double vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  SymmetricEigen out;
  out.values.reserve(n);
  for (std::size_t k : order) out.values.push_back(a(k, k));
  if (want_vectors) {
    out.vectors = SquareMatrix(n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t r = 0; r < n; ++r) out.vectors(r, col) = v(r, order[col]);
  }
  return out;
}

PositivityCheck is_positive_definite(const SquareMatrix& m, double tol) {
  const double asym = max_abs_diff(m, transpose(m));
  if (m.size() == 0) return {true, kInfinity, asym};
  const auto eig = symmetric_eigen(m, false);
  const double lo = eig.values.front();
  return {lo > tol, lo, asym};
}

DeterminantBound det_bound_check(const SquareMatrix& h) {
  const std::size_t n = h.size();
  SquareMatrix lu = h;
  double log_abs = 0.0;
  int sign = 1;
  bool singular = false;
  for (std::size_t k = 0; k < n && !singular; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
    if (lu(piv, k) == 0.0) {
      singular = true;
      break;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      sign = -sign;
    }
    const double pivot = lu(k, k);
    if (pivot < 0) sign = -sign;
    log_abs += std::log(std::abs(pivot));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = lu(i, k) / pivot;
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }

  DeterminantBound out;
  const double log_bound = 0.5 * static_cast<double>(n) * std::log(static_cast<double>(n));
  out.bound = std::exp(log_bound);
  if (singular) {
    out.det = 0.0;
    out.log_abs_det = -kInfinity;
    out.saturated = false;
    return out;
  }
  out.log_abs_det = log_abs;
  out.det = sign * std::exp(log_abs);
  // |det|/bound == 1 within 1e-9, compared in log space.
  out.saturated = std::abs(std::expm1(log_abs - log_bound)) <= 1e-9;
  return out;
}

SquareMatrix tensor_product(const SquareMatrix& a, const SquareMatrix& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  SquareMatrix c(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return c;
}

SquareMatrix apply_equivalence(const SquareMatrix& m, std::span<const EquivalenceMove> moves) {
  const std::size_t n = m.size();
  SquareMatrix r = m;
  for (const auto& mv : moves) {
    const bool needs_second = mv.kind == MoveKind::RowSwap || mv.kind == MoveKind::ColSwap;
    if (mv.first >= n || (needs_second && mv.second >= n)) {
      throw std::out_of_range("equivalence move index out of range for order " +
                              std::to_string(n));
    }
    switch (mv.kind) {
      case MoveKind::RowSwap:
        for (std::size_t j = 0; j < n; ++j) std::swap(r(mv.first, j), r(mv.second, j));
        break;
      case MoveKind::ColSwap:
        for (std::size_t i = 0; i < n; ++i) std::swap(r(i, mv.first), r(i, mv.second));
        break;
      case MoveKind::RowNegate:
        for (std::size_t j = 0; j < n; ++j) r(mv.first, j) = -r(mv.first, j);
        break;
      case MoveKind::ColNegate:
        for (std::size_t i = 0; i < n; ++i) r(i, mv.first) = -r(i, mv.first);
        break;
    }
  }
  return r;
}

SquareMatrix construct_K(std::size_t n) {
  if (n < 2) throw std::invalid_argument("K_N requires N >= 2");
  const double nn = static_cast<double>(n);
  const double root = std::sqrt(nn);
  SquareMatrix k(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i, j) = root * (2.0 / nn - (i == j ? 1.0 : 0.0));
  return k;
}

SquareMatrix construct_walsh(unsigned k) {
  if (k < 1) throw std::invalid_argument("Walsh matrix requires k >= 1");
  if (k > 12) throw std::invalid_argument("Walsh matrix order 2^k too large");
  const SquareMatrix h2{{1.0, 1.0}, {1.0, -1.0}};
  SquareMatrix h = h2;
  for (unsigned i = 1; i < k; ++i) h = tensor_product(h, h2);
  return h;
}

SquareMatrix polar_factor(const SquareMatrix& y) {
  const std::size_t n = y.size();
  const auto eig = symmetric_eigen(transpose(y) * y, true);
  const double top = eig.values.back();
  if (!(eig.values.front() > 1e-14 * std::max(top, 1.0))) {
    throw std::domain_error("polar factor of a numerically singular matrix");
  }
  // (Y^t Y)^{-1/2} = V diag(1/sqrt(lambda)) V^t
  SquareMatrix inv_sqrt(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += eig.vectors(i, k) * eig.vectors(j, k) / std::sqrt(eig.values[k]);
      inv_sqrt(i, j) = s;
    }
  }
  // Newton-Schulz steps Q <- Q (3 - Q^t Q) / 2 remove the rounding left by the eigen-solve.
  SquareMatrix q = y * inv_sqrt;
  for (int step = 0; step < 2; ++step) {
    SquareMatrix c = transpose(q) * q;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(i, j) = (i == j ? 1.5 : 0.0) - 0.5 * c(i, j);
    q = q * c;
  }
  return q;
}

}  // namespace ahm
