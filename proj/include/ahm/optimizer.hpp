#pragma once

#include <cstdint>
#include <vector>

#include "ahm/matrix.hpp"
#include "ahm/verify.hpp"

namespace ahm {

inline constexpr std::uint64_t kDefaultBaseSeed = 20120301;

struct AscentConfig {
  std::size_t n = 3;
  std::uint64_t seed = kDefaultBaseSeed;
  std::size_t max_iters = 100000;
  double step_init = 0.1;
  double step_shrink = 0.5;
  // Entries with |U_ij| below this contribute sign 0 to the ascent direction.
  double zero_guard = 1e-10;
  double stop_tol = 1e-10;
  // Basin hopping in run_seeded: after the first ascent, `hops` times perturb the
  // best point by hop_scale * Gaussian / sqrt(n), retract, re-ascend, keep if better.
  std::size_t hops = 40;
  double hop_scale = 0.5;
};

/// Throws std::invalid_argument unless every field is positive and step_shrink < 1
/// (hops may be 0).
void validate(const AscentConfig& cfg);

struct AscentResult {
  SquareMatrix U_final;
  double one_norm = 0.0;
  std::size_t iters = 0;
  bool converged = false;
  AhmReport report;
  std::uint64_t seed = 0;
  // Accepted-step 1-norms, starting with the initial value; kept for n <= 16.
  std::vector<double> trace;
};

inline constexpr std::size_t kMaxTracedOrder = 16;

/// Seeded Gaussian matrix orthonormalized by Gram-Schmidt (twice), giving a
/// Haar-distributed orthogonal matrix. Deterministic per seed.
SquareMatrix random_orthogonal(std::size_t n, std::uint64_t seed);

/// Riemannian ascent of the 1-norm on O(n) from an orthogonal U0:
///   G = (S - U S^t U)/2,  U <- polar(U + step G),
/// with S = sgn(U). The step starts at step_init and is multiplied by step_shrink
/// until the norm increases; it resets after each accepted step. Stops when an
/// accepted improvement is below stop_tol, the direction vanishes, no step helps,
/// or max_iters gradient evaluations are spent.
AscentResult ascend(const SquareMatrix& u0, const AscentConfig& cfg);

/// One seeded run: ascend from random_orthogonal(cfg.n, cfg.seed), then basin-hop
/// cfg.hops times. iters sums over all ascents; the trace keeps
/// the values of accepted ascents that improve on the running best.
AscentResult run_seeded(const AscentConfig& cfg);

/// Best of `num_seeds` runs run_seeded with seed base + i, i = 0..num_seeds-1,
/// where base = cfg_template.seed. Ties go to the lower seed. Runs are spread over
/// `threads` workers (0 = hardware concurrency); the result does not depend on it.
AscentResult multistart(std::size_t n, std::size_t num_seeds, const AscentConfig& cfg_template,
                        unsigned threads = 0);

}  // namespace ahm
