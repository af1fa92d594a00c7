#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ahm/matrix.hpp"
#include "ahm/optimizer.hpp"
#include "ahm/verify.hpp"

namespace ahm {

struct CatalogEntry {
  std::string name;          // "H2", "K3", "K3xH2", "I7", "P11", "S12", ...
  std::size_t n = 0;
  std::string norm_formula;  // e.g. "1+12*sqrt(2)"; see evaluate_surd_formula
  double norm_value = 0.0;   // ||H/sqrt(n)||_1
  std::string remarks;
  SquareMatrix matrix;       // H
};

/// Almost Hadamard matrices with large 1-norm for N = 2..8 and 10..13.
/// N = 9 has no closed-form entry; it is left to the optimizer.
std::vector<CatalogEntry> build_catalog();

/// A Hadamard matrix of order 12 (Paley construction over F_11).
SquareMatrix paley_hadamard_12();

/// Evaluates sums of terms "k", "k*sqrt(m)" and "sqrt(m)" with integers k, m,
/// e.g. "5+24*sqrt(3)". Throws std::invalid_argument on anything else.
double evaluate_surd_formula(std::string_view formula);

/// Names accepted by construct_named besides catalog entries: K<N>, L<N> (odd N),
/// I<q> (q a prime power <= 9), W<k> (Walsh of order 2^k).
SquareMatrix construct_named(std::string_view name);

/// Names that construct_named understands, for error messages.
std::vector<std::string> known_names();

struct Table1Row {
  std::size_t n = 0;
  std::string name;
  std::string formula;
  double norm = 0.0;
  double bound = 0.0;  // n sqrt(n)
  std::string verdict;
  std::string remarks;
};

struct Table1Options {
  std::size_t n9_seeds = 20;  // 0 skips the optimizer row
  std::uint64_t base_seed = kDefaultBaseSeed;
  std::size_t n9_max_iters = 20000;
};

/// Rows for N = 2..13; N = 9 comes from multistart and is labelled as a lower bound.
std::vector<Table1Row> table1(const Table1Options& opts = {});

/// CSV with header n,name,formula,norm,bound,verdict.
std::string table1_csv(const std::vector<Table1Row>& rows);

}  // namespace ahm
