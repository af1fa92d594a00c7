#include "ahm/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ahm {

void write_matrix(std::ostream& os, const SquareMatrix& m) {
  const auto old_flags = os.flags();
  const auto old_prec = os.precision();
  os << m.size() << '\n';
  os << std::setprecision(17);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) os << ' ';
      // Normalize -0 so identical matrices always print identically.
      const double v = m(i, j) == 0.0 ? 0.0 : m(i, j);
      os << v;
    }
    os << '\n';
  }
  os.flags(old_flags);
  os.precision(old_prec);
}

SquareMatrix read_matrix(std::istream& is) {
  std::string token;
  if (!(is >> token)) throw ParseError("AHM-MAT: missing order line");
  std::size_t pos = 0;
  long long n = 0;
  try {
    n = std::stoll(token, &pos);
  } catch (const std::exception&) {
    throw ParseError("AHM-MAT: order is not an integer: '" + token + "'");
  }
  if (pos != token.size() || n <= 0) throw ParseError("AHM-MAT: invalid order '" + token + "'");
  if (n > 4096) throw ParseError("AHM-MAT: order too large");

  const auto count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<double> entries;
  entries.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (!(is >> token)) {
      throw ParseError("AHM-MAT: expected " + std::to_string(count) + " entries, found " +
                       std::to_string(k));
    }
    double v = 0.0;
    try {
      v = std::stod(token, &pos);
    } catch (const std::exception&) {
      throw ParseError("AHM-MAT: bad number '" + token + "'");
    }
    if (pos != token.size() || !std::isfinite(v)) {
      throw ParseError("AHM-MAT: bad number '" + token + "'");
    }
    entries.push_back(v);
  }
  if (is >> token) throw ParseError("AHM-MAT: trailing data after matrix");
  return SquareMatrix(static_cast<std::size_t>(n), std::move(entries));
}

std::string format_matrix(const SquareMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

SquareMatrix parse_matrix(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

void save_matrix(const std::string& path, const SquareMatrix& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_matrix(out, m);
  if (!out) throw IoError("write to '" + path + "' failed");
}

SquareMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_matrix(in);
}

}  // namespace ahm
