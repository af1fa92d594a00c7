#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ahm/circulant.hpp"

namespace ahm {

namespace {

std::uint32_t rotate_in(std::uint32_t s, std::size_t k, std::size_t n, std::uint32_t full) {
  // {i + k mod n : i in S}
  return ((s << k) | (s >> (n - k))) & full;
}

bool set_condition(std::uint32_t s, std::size_t n, std::uint32_t full) {
  if (n < 2) return true;
  if (n % 4 != 0) return false;
  const int size = std::popcount(s);
  const int target = size - static_cast<int>(n / 4);
  for (std::size_t k = 1; k <= n / 2; ++k) {
    if (std::popcount(s & rotate_in(s, k, n, full)) != target) return false;
  }
  return true;
}

}  // namespace

// Gray-code walk over gamma_1..gamma_{n-1} with gamma_0 = +1; flipping gamma_j
// changes each periodic autocorrelation c_k by -2 gamma_j (gamma_{j+k} + gamma_{j-k}).
// Only c_1..c_{n/2} are tracked since c_k = c_{n-k}.
std::vector<std::vector<int>> search_circulant_hadamard(std::size_t n) {
  if (n == 0) throw std::invalid_argument("search requires n >= 1");
  if (n > kCirculantSearchBudget) {
    throw std::invalid_argument("circulant search limited to n <= " +
                                std::to_string(kCirculantSearchBudget) + ", got " +
                                std::to_string(n));
  }
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1u);
  const std::size_t half = n / 2;

  std::vector<int> gamma(n, 1);
  std::vector<long> corr(half + 1, static_cast<long>(n));
  std::uint32_t mask = 0;  // bit i set iff gamma_i = -1
  std::vector<std::uint32_t> found;

  auto test_state = [&] {
    bool autocorr_zero = true;
    for (std::size_t k = 1; k <= half; ++k) {
      if (corr[k] != 0) {
        autocorr_zero = false;
        break;
      }
    }
    const bool set_ok = set_condition(mask, n, full);
    if (autocorr_zero != set_ok) {
      throw std::logic_error("autocorrelation and set-form tests disagree on mask " +
                             std::to_string(mask));
    }
    if (autocorr_zero) {
      found.push_back(mask);
      found.push_back(~mask & full);
    }
  };

  test_state();
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t g = 1; g < steps; ++g) {
    const std::size_t j = static_cast<std::size_t>(std::countr_zero(g)) + 1;
    const int old = gamma[j];
    for (std::size_t k = 1; k <= half; ++k) {
      corr[k] -= 2L * old * (gamma[(j + k) % n] + gamma[(j + n - k) % n]);
    }
    gamma[j] = -old;
    mask ^= (1u << j);
    test_state();
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<std::vector<int>> out;
  out.reserve(found.size());
  for (auto m : found) {
    std::vector<int> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = (m >> i) & 1u ? -1 : 1;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace ahm
