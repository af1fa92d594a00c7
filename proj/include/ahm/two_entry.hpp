#pragma once

#include <stdexcept>
#include <string_view>
#include <utility>

#include "ahm/designs.hpp"
#include "ahm/matrix.hpp"

namespace ahm {

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateDenominatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Branch { Plus, Minus };

std::string_view to_string(Branch b);

/// Entry values making the (a,b,c) pattern matrix U(x, y) orthogonal.
/// t = -x/y solves a t^2 - 2 b t + c = 0.
struct TwoEntrySolution {
  PatternParams params;
  Branch branch = Branch::Minus;
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Orthogonal (a,b,c) pattern entries:
///   t = (b +- sqrt(b^2 - ac)) / a,  x = -t / (sqrt(b) (t + 1)),  y = 1 / (sqrt(b) (t + 1)).
/// a = 0 degenerates to the linear equation 2 b t = c. Throws InfeasibleError when
/// b^2 < ac, std::invalid_argument when b = 0, DegenerateDenominatorError when t = -1.
TwoEntrySolution solve_two_entry(const PatternParams& params, Branch branch = Branch::Minus);

struct TwoEntryAhmCondition {
  bool satisfied;
  double margin;  // (N(a-b) + 2b)|x| + (N(c-b) + 2b)|y|
};

/// Almost-Hadamard criterion for an orthogonal two-entry pattern matrix.
TwoEntryAhmCondition two_entry_ahm_condition(const PatternParams& params, double x, double y);

/// ||U||_1 = N ((a+b)|x| + (b+c)|y|) for the pattern matrix U(x, y).
double two_entry_norm(const PatternParams& params, double x, double y);

/// Closed-form entries for c >= a, b(b-1) = ac:
///   x = (a + (1-a-b) sqrt(b)) / (N a),  y = (b + (a+b) sqrt(b)) / (N b).
std::pair<double, double> balanced_pattern_entries(const PatternParams& params);

/// Substitutes x and y into a symbolic pattern.
SquareMatrix pattern_matrix(const SymbolicMatrix& symbolic, double x, double y);

struct BalancedPatternMatrix {
  SquareMatrix U;
  SquareMatrix H;  // sqrt(N) U
  TwoEntrySolution solution;
};

/// Almost Hadamard matrix from an (a,b,c) pattern with c >= a >= 1 and b(b-1) = ac.
/// Throws std::invalid_argument on the parameter preconditions and
/// PatternViolation when `realization` is not an (a,b,c) pattern.
BalancedPatternMatrix construct_prop37(const PatternParams& params, const SymbolicMatrix& realization);

/// Same, with the pattern taken from a symmetric design.
BalancedPatternMatrix construct_prop37(const BlockDesign& design);

/// I_N for N = q^2 + q + 1 from the projective plane over `field`: entries
/// (1 - q sqrt(q))/sqrt(N) on incidences, (q + (q+1) sqrt(q))/(q sqrt(N)) elsewhere.
SquareMatrix construct_I(const FiniteField& field);

/// (q^2 - q - 1) + 2 q (q+1) sqrt(q), the 1-norm of I_N / sqrt(N).
double incidence_norm(unsigned q);

}  // namespace ahm
