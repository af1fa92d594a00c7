#include "ahm/two_entry.hpp"

#include <cmath>
#include <string>

namespace ahm {

namespace {

std::string params_string(const PatternParams& p) {
  return "(" + std::to_string(p.a) + ", " + std::to_string(p.b) + ", " + std::to_string(p.c) + ")";
}

void require_balanced(const PatternParams& p) {
  if (p.a < 1) throw std::invalid_argument("balanced pattern requires a >= 1, got " + params_string(p));
  if (p.c < p.a) throw std::invalid_argument("balanced pattern requires c >= a, got " + params_string(p));
  if (p.b * (p.b - 1) != p.a * p.c) {
    throw std::invalid_argument("balanced pattern requires b(b-1) = ac, got " + params_string(p));
  }
}

}  // namespace

std::string_view to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

TwoEntrySolution solve_two_entry(const PatternParams& params, Branch branch) {
  const double a = params.a;
  const double b = params.b;
  const double c = params.c;
  if (params.b == 0) throw std::invalid_argument("two-entry solution requires b >= 1");
  const long long disc_exact = static_cast<long long>(params.b) * params.b -
                               static_cast<long long>(params.a) * params.c;
  if (disc_exact < 0) {
    throw InfeasibleError("no orthogonal matrix with pattern " + params_string(params) + ": b^2 < ac");
  }

  TwoEntrySolution s;
  s.params = params;
  s.branch = branch;
  if (params.a == 0) {
    s.t = c / (2.0 * b);
  } else {
    const double root = std::sqrt(static_cast<double>(disc_exact));
    s.t = (branch == Branch::Plus ? b + root : b - root) / a;
  }
  if (std::abs(s.t + 1.0) < 1e-12) {
    throw DegenerateDenominatorError("t = -1 for pattern " + params_string(params));
  }
  const double denom = std::sqrt(b) * (s.t + 1.0);
  s.x = -s.t / denom;
  s.y = 1.0 / denom;
  return s;
}

TwoEntryAhmCondition two_entry_ahm_condition(const PatternParams& params, double x, double y) {
  const double n = params.n();
  const double a = params.a;
  const double b = params.b;
  const double c = params.c;
  const double margin = (n * (a - b) + 2.0 * b) * std::abs(x) + (n * (c - b) + 2.0 * b) * std::abs(y);
  return {margin >= -1e-12, margin};
}

double two_entry_norm(const PatternParams& params, double x, double y) {
  const double a = params.a;
  const double b = params.b;
  const double c = params.c;
  return params.n() * ((a + b) * std::abs(x) + (b + c) * std::abs(y));
}

std::pair<double, double> balanced_pattern_entries(const PatternParams& params) {
  require_balanced(params);
  const double a = params.a;
  const double b = params.b;
  const double n = params.n();
  const double rb = std::sqrt(b);
  return {(a + (1.0 - a - b) * rb) / (n * a), (b + (a + b) * rb) / (n * b)};
}

SquareMatrix pattern_matrix(const SymbolicMatrix& symbolic, double x, double y) {
  const std::size_t n = symbolic.size();
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (symbolic[i].size() != n) throw std::invalid_argument("symbolic pattern is not square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = symbolic[i][j] == Symbol::X ? x : y;
  }
  return m;
}

BalancedPatternMatrix construct_prop37(const PatternParams& params, const SymbolicMatrix& realization) {
  require_balanced(params);
  if (!is_pattern(realization, params)) {
    throw PatternViolation("realization is not an " + params_string(params) + " pattern");
  }
  const auto [x, y] = balanced_pattern_entries(params);
  BalancedPatternMatrix out{pattern_matrix(realization, x, y), SquareMatrix{}, solve_two_entry(params, Branch::Minus)};
  out.H = std::sqrt(static_cast<double>(params.n())) * out.U;
  return out;
}

BalancedPatternMatrix construct_prop37(const BlockDesign& design) {
  const auto pattern = design_to_pattern(design);
  return construct_prop37(pattern.params, pattern.symbolic);
}

SquareMatrix construct_I(const FiniteField& field) {
  const auto design = projective_plane(field);
  const double q = field.order();
  const double n = design.v;
  const double rq = std::sqrt(q);
  const double rn = std::sqrt(n);
  const double x = (1.0 - q * rq) / rn;
  const double y = (q + (q + 1.0) * rq) / (q * rn);
  SquareMatrix h(design.v);
  for (unsigned i = 0; i < design.v; ++i)
    for (unsigned j = 0; j < design.v; ++j) h(i, j) = design.incidence[i][j] ? x : y;
  return h;
}

double incidence_norm(unsigned q) {
  const double qq = q;
  return (qq * qq - qq - 1.0) + 2.0 * qq * (qq + 1.0) * std::sqrt(qq);
}

}  // namespace ahm
