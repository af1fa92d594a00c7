#include "ahm/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "ahm/circulant.hpp"
#include "ahm/designs.hpp"
#include "ahm/linalg.hpp"
#include "ahm/two_entry.hpp"

namespace ahm {

namespace {

std::size_t parse_count(std::string_view digits, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw std::invalid_argument("unknown matrix name '" + std::string(whole) + "'");
  }
  return v;
}

// q = p^k, or throws.
std::pair<unsigned, unsigned> prime_power(std::size_t q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    unsigned k = 0;
    std::size_t r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) break;
    return {p, k};
  }
  throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

CatalogEntry make_entry(std::string name, std::string formula, std::string remarks, SquareMatrix h) {
  CatalogEntry e;
  e.name = std::move(name);
  e.n = h.size();
  e.norm_formula = std::move(formula);
  e.norm_value = evaluate_surd_formula(e.norm_formula);
  e.remarks = std::move(remarks);
  e.matrix = std::move(h);
  return e;
}

}  // namespace

SquareMatrix paley_hadamard_12() {
  constexpr std::size_t q = 11;
  std::vector<int> chi(q, -1);
  chi[0] = 0;
  for (std::size_t r = 1; r < q; ++r) chi[(r * r) % q] = 1;
  // H = I + [[0, 1^t], [-1, Q]] with Q_ij = chi(j - i).
  SquareMatrix h = SquareMatrix::identity(q + 1);
  for (std::size_t j = 1; j <= q; ++j) {
    h(0, j) += 1.0;
    h(j, 0) -= 1.0;
  }
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) h(i + 1, j + 1) += chi[(j + q - i) % q];
  return h;
}

std::vector<CatalogEntry> build_catalog() {
  const SquareMatrix h2 = construct_walsh(1);
  const SquareMatrix k3 = construct_K(3);
  const SquareMatrix k5 = construct_K(5);
  std::vector<CatalogEntry> c;
  c.push_back(make_entry("H2", "2*sqrt(2)", "Hadamard", h2));
  c.push_back(make_entry("K3", "5", "optimal", k3));
  c.push_back(make_entry("K4", "8", "Hadamard", construct_K(4)));
  c.push_back(make_entry("K5", "11", "", k5));
  c.push_back(make_entry("K3xH2", "10*sqrt(2)", "", tensor_product(k3, h2)));
  c.push_back(make_entry("I7", "1+12*sqrt(2)", "", construct_I(build_field(2, 1))));
  c.push_back(make_entry("H8", "16*sqrt(2)", "Hadamard", construct_walsh(3)));
  c.push_back(make_entry("K5xH2", "22*sqrt(2)", "", tensor_product(k5, h2)));
  c.push_back(make_entry("P11", "1+20*sqrt(3)", "", construct_prop37(paley_biplane()).H));
  c.push_back(make_entry("S12", "24*sqrt(3)", "Hadamard", paley_hadamard_12()));
  c.push_back(make_entry("I13", "5+24*sqrt(3)", "", construct_I(build_field(3, 1))));
  return c;
}

double evaluate_surd_formula(std::string_view formula) {
  std::string s;
  for (char ch : formula)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty formula");

  std::size_t pos = 0;
  auto fail = [&]() -> double { throw std::invalid_argument("cannot evaluate formula '" + std::string(formula) + "'"); };
  auto read_int = [&](long long& out) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    out = std::stoll(s.substr(start, pos - start));
    return true;
  };
  auto read_sqrt = [&](double& out) {
    if (s.compare(pos, 5, "sqrt(") != 0) return false;
    pos += 5;
    long long radicand = 0;
    if (!read_int(radicand) || pos >= s.size() || s[pos] != ')') fail();
    ++pos;
    out = std::sqrt(static_cast<double>(radicand));
    return true;
  };

  double total = 0.0;
  bool first = true;
  while (pos < s.size()) {
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (!first) {
      fail();
    }
    first = false;
    double term = 1.0;
    long long coeff = 0;
    double root = 0.0;
    if (read_int(coeff)) {
      term = static_cast<double>(coeff);
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (!read_sqrt(root)) fail();
        term *= root;
      }
    } else if (read_sqrt(root)) {
      term = root;
    } else {
      fail();
    }
    total += sign * term;
  }
  return total;
}

SquareMatrix construct_named(std::string_view name) {
  for (const auto& e : build_catalog())
    if (e.name == name) return e.matrix;

  if (const auto x = name.find('x'); x != std::string_view::npos) {
    return tensor_product(construct_named(name.substr(0, x)), construct_named(name.substr(x + 1)));
  }
  if (name.size() < 2) throw std::invalid_argument("unknown matrix name '" + std::string(name) + "'");
  const char family = name[0];
  const std::size_t arg = parse_count(name.substr(1), name);
  switch (family) {
    case 'K':
      return construct_K(arg);
    case 'L':
      return circulant_from_gamma(construct_L(arg).gamma);
    case 'I': {
      const auto [p, k] = prime_power(arg);
      return construct_I(build_field(p, k));
    }
    case 'W':
      return construct_walsh(static_cast<unsigned>(arg));
    case 'H': {
      unsigned k = 0;
      std::size_t m = arg;
      while (m > 1 && m % 2 == 0) {
        m /= 2;
        ++k;
      }
      if (m != 1 || k == 0) throw std::invalid_argument("H<N> requires N a power of two >= 2");
      return construct_walsh(k);
    }
    default:
      break;
  }
  throw std::invalid_argument("unknown matrix name '" + std::string(name) + "'");
}

std::vector<std::string> known_names() {
  std::vector<std::string> names;
  for (const auto& e : build_catalog()) names.push_back(e.name);
  for (const char* fam : {"K<N>", "L<N> (odd N)", "I<q> (prime power q <= 9)", "W<k>", "H<2^k>", "<A>x<B>"})
    names.emplace_back(fam);
  return names;
}

std::vector<Table1Row> table1(const Table1Options& opts) {
  std::vector<Table1Row> rows;
  for (const auto& e : build_catalog()) {
    Table1Row r;
    r.n = e.n;
    r.name = e.name;
    r.formula = e.norm_formula;
    const double nn = static_cast<double>(e.n);
    r.norm = one_norm((1.0 / std::sqrt(nn)) * e.matrix);
    r.bound = nn * std::sqrt(nn);
    r.verdict = std::string(to_string(check_ahm(e.matrix).verdict));
    r.remarks = e.remarks;
    rows.push_back(std::move(r));
  }
  if (opts.n9_seeds > 0) {
    AscentConfig cfg;
    cfg.seed = opts.base_seed;
    cfg.max_iters = opts.n9_max_iters;
    const auto best = multistart(9, opts.n9_seeds, cfg);
    Table1Row r;
    r.n = 9;
    r.name = "optimizer lower bound";
    r.formula = "--";
    r.norm = best.one_norm;
    r.bound = 27.0;
    r.verdict = std::string(to_string(best.report.verdict));
    std::ostringstream os;
    os << "multistart seeds " << opts.base_seed << ".." << opts.base_seed + opts.n9_seeds - 1 << ", best seed "
       << best.seed;
    r.remarks = os.str();
    const auto at = std::find_if(rows.begin(), rows.end(), [](const Table1Row& x) { return x.n > 9; });
    rows.insert(at, std::move(r));
  }
  return rows;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream os;
  os << "n,name,formula,norm,bound,verdict\n";
  os << std::fixed << std::setprecision(6);
  for (const auto& r : rows) {
    os << r.n << ',' << r.name << ',' << r.formula << ',' << r.norm << ',' << r.bound << ',' << r.verdict << '\n';
  }
  return os.str();
}

}  // namespace ahm
