#include "ahm/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "ahm/linalg.hpp"

namespace ahm {

namespace {

constexpr double kStationaryTol = 1e-11;
constexpr double kMinStep = 1e-15;

void orthonormalize_columns(SquareMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += m(i, k) * m(i, j);
        for (std::size_t i = 0; i < n; ++i) m(i, j) -= dot * m(i, k);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += m(i, j) * m(i, j);
    norm = std::sqrt(norm);
    if (norm == 0.0) throw std::domain_error("rank-deficient Gaussian sample");
    for (std::size_t i = 0; i < n; ++i) m(i, j) /= norm;
  }
}

SquareMatrix guarded_signs(const SquareMatrix& u, double guard) {
  SquareMatrix s(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      const double v = u(i, j);
      s(i, j) = std::abs(v) < guard ? 0.0 : (v > 0 ? 1.0 : -1.0);
    }
  return s;
}

// Inside a fixed sign orthant the 1-norm is tr(S^t U), maximized over O(n) by
// polar(S), where S U^t = (S S^t)^{1/2} is exactly symmetric. Each step cannot
// decrease the norm; repeat until the sign pattern settles.
void polish(SquareMatrix& u, double& f, double guard) {
  constexpr int kMaxPolish = 20;
  for (int k = 0; k < kMaxPolish; ++k) {
    const SquareMatrix s = guarded_signs(u, guard);
    SquareMatrix v;
    try {
      v = polar_factor(s);
    } catch (const std::domain_error&) {
      return;
    }
    const double fv = one_norm(v);
    if (fv < f - 1e-12) return;
    const bool settled = guarded_signs(v, guard) == s;
    u = std::move(v);
    f = std::max(f, fv);
    if (settled) return;
  }
}

bool better(const AscentResult& a, const AscentResult& b) {
  if (a.one_norm != b.one_norm) return a.one_norm > b.one_norm;
  return a.seed < b.seed;
}

}  // namespace

void validate(const AscentConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("ascent order must be >= 1");
  if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(cfg.step_init > 0.0)) throw std::invalid_argument("step_init must be positive");
  if (!(cfg.step_shrink > 0.0 && cfg.step_shrink < 1.0)) throw std::invalid_argument("step_shrink must lie in (0, 1)");
  if (!(cfg.zero_guard > 0.0)) throw std::invalid_argument("zero_guard must be positive");
  if (!(cfg.stop_tol > 0.0)) throw std::invalid_argument("stop_tol must be positive");
  if (!(cfg.hop_scale > 0.0)) throw std::invalid_argument("hop_scale must be positive");
}

SquareMatrix random_orthogonal(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_orthogonal requires n >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SquareMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = normal(rng);
  orthonormalize_columns(g);
  return g;
}

AscentResult ascend(const SquareMatrix& u0, const AscentConfig& cfg) {
  validate(cfg);
  const std::size_t n = u0.size();
  if (!is_orthogonal(u0, 1e-10).orthogonal) {
    throw std::invalid_argument("ascent start must be orthogonal within 1e-10");
  }

  AscentResult res;
  res.seed = cfg.seed;
  SquareMatrix u = u0;
  double f = one_norm(u);
  const bool keep_trace = n <= kMaxTracedOrder;
  if (keep_trace) res.trace.push_back(f);

  while (res.iters < cfg.max_iters) {
    ++res.iters;
    const SquareMatrix s = guarded_signs(u, cfg.zero_guard);
    const SquareMatrix g = 0.5 * (s - u * transpose(s) * u);
    if (g.max_abs() < kStationaryTol) {
      res.converged = true;
      break;
    }

    double step = cfg.step_init;
    bool accepted = false;
    SquareMatrix candidate;
    double fc = f;
    while (step >= kMinStep) {
      candidate = polar_factor(u + step * g);
      fc = one_norm(candidate);
      if (fc > f) {
        accepted = true;
        break;
      }
      step *= cfg.step_shrink;
    }
    if (!accepted) {
      res.converged = true;
      break;
    }
    const double gain = fc - f;
    u = std::move(candidate);
    f = fc;
    if (keep_trace) res.trace.push_back(f);
    if (gain < cfg.stop_tol) {
      res.converged = true;
      break;
    }
  }

  polish(u, f, cfg.zero_guard);
  if (keep_trace && f > res.trace.back()) res.trace.push_back(f);
  res.one_norm = f;
  res.report = check_ahm(std::sqrt(static_cast<double>(n)) * u);
  res.U_final = std::move(u);
  return res;
}

AscentResult run_seeded(const AscentConfig& cfg) {
  validate(cfg);
  const std::size_t n = cfg.n;
  AscentResult best = ascend(random_orthogonal(n, cfg.seed), cfg);
  if (cfg.hops == 0) return best;

  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double scale = cfg.hop_scale / std::sqrt(static_cast<double>(n));
  std::size_t iters = best.iters;
  for (std::size_t h = 0; h < cfg.hops; ++h) {
    SquareMatrix p = best.U_final;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) += scale * normal(rng);
    AscentResult trial = ascend(polar_factor(p), cfg);
    iters += trial.iters;
    if (trial.one_norm > best.one_norm) {
      std::vector<double> trace = std::move(best.trace);
      for (double v : trial.trace)
        if (trace.empty() || v > trace.back()) trace.push_back(v);
      best = std::move(trial);
      best.trace = std::move(trace);
    }
  }
  best.iters = iters;
  return best;
}

AscentResult multistart(std::size_t n, std::size_t num_seeds, const AscentConfig& cfg_template,
                        unsigned threads) {
  if (num_seeds < 1) throw std::invalid_argument("multistart requires at least one seed");
  AscentConfig base = cfg_template;
  base.n = n;
  validate(base);

  std::vector<AscentResult> results(num_seeds);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < num_seeds; i = next++) {
      AscentConfig cfg = base;
      cfg.seed = base.seed + i;
      results[i] = run_seeded(cfg);
    }
  };

  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, num_seeds));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < num_seeds; ++i)
    if (better(results[i], results[best])) best = i;
  return std::move(results[best]);
}

}  // namespace ahm
